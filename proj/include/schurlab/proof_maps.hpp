#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "schurlab/family.hpp"
#include "schurlab/lr_tableau.hpp"
#include "schurlab/partition.hpp"

namespace schurlab {

enum class MapTag { C1, C2, C3, C3_1, C3_2, C3_3 };

std::string_view to_string(MapTag tag);

struct MapCase {
  Family family = Family::Hook;
  MapTag tag = MapTag::C1;
  int k = 0;
  int l = 0;
  Partition alpha;
};

/// Hooks: lambda = (k, 1^(l-1)). Maps LR(alpha/lambda, (k-1, 1^(l-2))) into
/// LR(alpha/(k, 1^(l-2)), (k-1, 1^(l-1))).
std::optional<MapCase> hook_eligible(const Partition& alpha, int k, int l);
LRTableau hook_map(const LRTableau& t, const MapCase& c);

/// lambda = (k, k, 1). Maps LR(alpha/lambda, (k, k-1)) into
/// LR(alpha/(k, k), (k, k-1, 1)).
std::optional<MapCase> kk1_eligible(const Partition& alpha, int k);
/// Sub-case (C1, C2, C3_1, C3_2 or C3_3) that kk1_map applies to t.
MapTag kk1_subcase(const LRTableau& t, const MapCase& c);
LRTableau kk1_map(const LRTableau& t, const MapCase& c);

struct MapSpaces {
  Partition source_inner;
  Partition source_content;
  Partition target_inner;
  Partition target_content;
};

MapSpaces map_spaces(Family family, int k, int l);

struct MapRecord {
  Partition alpha;
  MapTag tag = MapTag::C1;
  std::map<MapTag, std::uint64_t> subcases;
  std::uint64_t source_count = 0;
  std::uint64_t target_count = 0;
  int max_fiber = 0;
};

struct MapReport {
  Family family = Family::Hook;
  int k = 0;
  int l = 0;
  std::vector<MapRecord> records;
  /// fiber size -> number of images with that many preimages
  std::map<int, std::uint64_t> fiber_histogram;
  int max_fiber = 0;
  /// Every image is an LR tableau of the target shape and content.
  bool membership_ok = true;
  /// Hooks: injective. (k,k,1): fibers of size <= 2 and sub-case 3.3 images
  /// never shared with 3.1/3.2 images.
  bool fiber_ok = true;
  /// source_count <= target_count (hooks) or <= 2 * target_count (k,k,1).
  bool count_ok = true;
  /// Ineligible alpha (other than the excluded partitions) have no sources.
  bool vanishing_ok = true;
  std::vector<std::string> violations;

  bool ok() const { return membership_ok && fiber_ok && count_ok && vanishing_ok; }
};

/// Runs the map over every eligible alpha. Throws BadParams for the
/// conjugate family or parameters below 3.
MapReport verify_map_properties(Family family, int k, int l);

/// Six LR coefficients c^beta_{.,.} at a special partition beta, in the
/// order the positivity argument uses for each family (corners a < b):
///   hook: (a,b) (b,b) (a,a) (lambda,(a,b)) (lambda,(b,up)) (lambda,(a,left))
///   kk1:  (a,b) (a,a) (b,b) (lambda,(a,b)) (lambda,(a,up)) (lambda,(a,left))
///   conj: (a,b) (b,b) (a,a) (lambda,(a,b)) (lambda,(b,up)) (lambda,(b,left))
/// An absent removal contributes 0. `beta_index` selects among
/// special_partitions(family, k, l).
std::array<std::uint64_t, 6> special_tuple(Family family, int k, int l, int beta_index = 0);

}  // namespace schurlab
