#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace schurlab {

/// Integer partition stored as its positive parts in non-increasing order.
///
/// All row indices on the public interface are 1-based: `part(1)` is the
/// first (longest) row, and `part(i)` is 0 for any i past the length.
///
/// Partitions are totally ordered by the canonical reverse-lexicographic
/// order: a < b iff the zero-padded part sequence of a is lexicographically
/// *greater* than that of b. Sorting ascending therefore lists (3) before
/// (2,1) before (1,1,1).
class Partition {
 public:
  Partition() = default;

  /// Validates and normalizes: trailing zeros are dropped, negative parts and
  /// increases are rejected.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const noexcept { return parts_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  int size() const noexcept { return size_; }
  bool empty() const noexcept { return parts_.empty(); }

  int part(int row) const noexcept {
    return row >= 1 && row <= length() ? parts_[static_cast<std::size_t>(row - 1)] : 0;
  }

  /// Canonical text form "5,3,3,2"; the empty partition is "".
  std::string to_string() const;

  friend bool operator==(const Partition& a, const Partition& b) noexcept {
    return a.parts_ == b.parts_;
  }
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) noexcept;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

struct PartitionHash {
  std::size_t operator()(const Partition& p) const noexcept;
};

/// Rows j (1-based, ascending) with part(j) > part(j+1).
using CornerSet = std::vector<int>;

/// Cells of outer/inner. Rows are 1-based; row r occupies columns
/// inner.part(r)+1 .. outer.part(r).
class SkewShape {
 public:
  SkewShape() = default;
  SkewShape(Partition outer, Partition inner);

  const Partition& outer() const noexcept { return outer_; }
  const Partition& inner() const noexcept { return inner_; }

  int rows() const noexcept { return outer_.length(); }
  int row_start(int row) const noexcept { return inner_.part(row) + 1; }
  int row_end(int row) const noexcept { return outer_.part(row); }
  int row_cells(int row) const noexcept { return outer_.part(row) - inner_.part(row); }
  bool has_cell(int row, int col) const noexcept {
    return col > inner_.part(row) && col <= outer_.part(row);
  }

  int cell_count() const noexcept { return outer_.size() - inner_.size(); }
  int non_empty_rows() const noexcept;
  /// Indices (1-based) of the rows that hold at least one cell.
  std::vector<int> non_empty_row_indices() const;
  /// Number of cells in each column 1..outer.part(1).
  std::vector<int> column_heights() const;

  friend bool operator==(const SkewShape&, const SkewShape&) = default;

 private:
  Partition outer_;
  Partition inner_;
};

/// Parses "5,3^2,2"-style text. Whitespace is ignored; "" is the empty
/// partition; zero parts are allowed only as trailing zeros.
Partition parse_partition(std::string_view text);

Partition conjugate(const Partition& lambda);

/// True iff mu_i <= lambda_i for all i.
bool contains(const Partition& lambda, const Partition& mu);

CornerSet corners(const Partition& lambda);
bool is_corner(const Partition& lambda, int row);

Partition remove_corner(const Partition& lambda, int row);
Partition remove_two_corners(const Partition& lambda, int j, int k);
/// Removes the last cell of row j and the cell above it; absent unless
/// part(j-1) == part(j).
std::optional<Partition> remove_up(const Partition& lambda, int row);
/// Removes the last two cells of row j; absent unless part(j) - part(j+1) > 1.
std::optional<Partition> remove_left(const Partition& lambda, int row);

SkewShape skew(const Partition& lambda, const Partition& mu);

struct PartitionFilter {
  std::optional<int> max_length;
  std::optional<Partition> contained_in;
  std::optional<int> max_part;
};

/// Calls `visit` for every partition of d passing `filter`, in canonical
/// (reverse lexicographic) order.
void for_each_partition(int d, const PartitionFilter& filter,
                        const std::function<void(const Partition&)>& visit);
std::vector<Partition> enumerate_partitions(int d, const PartitionFilter& filter = {});

/// Interleaves the merged parts of lambda and mu: odd positions go to the
/// first result, even positions to the second.
std::pair<Partition, Partition> sort_pair(const Partition& lambda, const Partition& mu);

/// ((lambda_i + mu_i) / 2)_i when every sum is even.
std::optional<Partition> half_sum(const Partition& lambda, const Partition& mu);

/// Dominance order on partitions of the same size.
bool dominates(const Partition& lambda, const Partition& mu);

Partition rectangle(int width, int height);
/// (k, 1^(l-1)).
Partition hook(int k, int l);
/// Concatenates blocks (value, multiplicity), e.g. {{3,1},{2,k-1}}.
Partition from_blocks(std::initializer_list<std::pair<int, int>> blocks);

}  // namespace schurlab
