#pragma once

#include <string_view>
#include <vector>

#include "schurlab/partition.hpp"

namespace schurlab {

/// Shapes with a known positivity proof and a special partition where the
/// difference coefficient has a closed form.
///   Hook: (k, 1^(l-1));  Kk1: (k, k, 1);  Conj: (3, 2^(k-1)).
enum class Family { Hook, Kk1, Conj };

std::string_view to_string(Family family);
Family parse_family(std::string_view text);

/// Throws BadParams unless k (and l for hooks) are at least 3.
void check_family_params(Family family, int k, int l);

Partition family_shape(Family family, int k, int l);

/// Partitions whose coefficient in the first-order difference is given by
/// special_coefficient: (k^2, 2^(l-2)) for hooks, (2k,k,k) and (k^4) for
/// (k,k,1), (3^k,1^k) and (4^k) for (3,2^(k-1)).
std::vector<Partition> special_partitions(Family family, int k, int l);

}  // namespace schurlab
