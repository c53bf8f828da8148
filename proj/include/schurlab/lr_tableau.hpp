#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "schurlab/partition.hpp"

namespace schurlab {

/// A filling of a skew shape. `rows[r-1]` lists the entries of row r from
/// left to right (one per cell; empty for rows without cells).
struct LRTableau {
  SkewShape shape;
  std::vector<std::vector<int>> rows;

  /// Entry at (row, col), 1-based; 0 for cells outside the skew shape.
  int at(int row, int col) const;
  /// Multiplicities of each entry value (index 0 is value 1).
  std::vector<int> content_counts() const;

  friend bool operator==(const LRTableau&, const LRTableau&) = default;
  friend auto operator<=>(const LRTableau& a, const LRTableau& b) { return a.rows <=> b.rows; }
};

/// Every prefix holds at least as many i's as (i+1)'s.
bool is_lattice_word(std::span<const int> word);

/// Entries read right to left within each row, top row first.
std::vector<int> reverse_reading_word(const LRTableau& t);

/// Independent re-check of the LR conditions: rows weakly increase, columns
/// strictly increase, the reverse reading word is a lattice word, and (when
/// given) the content matches.
bool is_lr_tableau(const LRTableau& t, const std::optional<Partition>& content = std::nullopt);

enum class RejectReason {
  ColumnTooTall,       ///< some column exceeds l(content) cells
  FirstRowTooLong,     ///< first non-empty row exceeds content_1 cells
  TooFewRows,          ///< fewer non-empty rows than l(content)
  PrefixRowsTooLong,   ///< first k non-empty rows exceed content_1 + ... + content_k
};

std::string_view to_string(RejectReason reason);

/// Necessary conditions for existence of LR tableaux. A returned reason
/// proves emptiness; nullopt proves nothing.
std::optional<RejectReason> quick_reject(const SkewShape& shape, const Partition& content);

/// Visits every LR tableau of `shape` with `content`, in row-major
/// lexicographic order of entries. The visitor returns false to stop early.
void for_each_lr_tableau(const SkewShape& shape, const Partition& content,
                         const std::function<bool(const LRTableau&)>& visit);

std::vector<LRTableau> enumerate_lr(const SkewShape& shape, const Partition& content);

/// Number of LR tableaux of shape/content without materializing them.
std::uint64_t count_lr(const SkewShape& shape, const Partition& content);

/// c^lambda_{mu,nu}: 0 unless |mu|+|nu| = |lambda| and mu, nu are inside lambda.
std::uint64_t lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

}  // namespace schurlab
