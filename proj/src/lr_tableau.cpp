#include "schurlab/lr_tableau.hpp"

#include <algorithm>

#include "schurlab/error.hpp"

namespace schurlab {

int LRTableau::at(int row, int col) const {
  if (!shape.has_cell(row, col)) return 0;
  return rows[static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(col - shape.row_start(row))];
}

std::vector<int> LRTableau::content_counts() const {
  std::vector<int> counts;
  for (const auto& row : rows)
    for (int v : row) {
      if (v > static_cast<int>(counts.size())) counts.resize(static_cast<std::size_t>(v), 0);
      ++counts[static_cast<std::size_t>(v - 1)];
    }
  return counts;
}

bool is_lattice_word(std::span<const int> word) {
  std::vector<int> counts;
  for (int v : word) {
    if (v < 1) return false;
    if (v > static_cast<int>(counts.size())) counts.resize(static_cast<std::size_t>(v), 0);
    ++counts[static_cast<std::size_t>(v - 1)];
    if (v > 1 && counts[static_cast<std::size_t>(v - 1)] > counts[static_cast<std::size_t>(v - 2)]) return false;
  }
  return true;
}

std::vector<int> reverse_reading_word(const LRTableau& t) {
  std::vector<int> word;
  for (const auto& row : t.rows) word.insert(word.end(), row.rbegin(), row.rend());
  return word;
}

bool is_lr_tableau(const LRTableau& t, const std::optional<Partition>& content) {
  const SkewShape& shape = t.shape;
  if (static_cast<int>(t.rows.size()) != shape.rows()) return false;
  for (int r = 1; r <= shape.rows(); ++r) {
    const auto& row = t.rows[static_cast<std::size_t>(r - 1)];
    if (static_cast<int>(row.size()) != shape.row_cells(r)) return false;
    for (int c = shape.row_start(r); c <= shape.row_end(r); ++c) {
      const int v = t.at(r, c);
      if (v < 1) return false;
      if (shape.has_cell(r, c - 1) && t.at(r, c - 1) > v) return false;
      if (shape.has_cell(r - 1, c) && t.at(r - 1, c) >= v) return false;
    }
  }
  const auto word = reverse_reading_word(t);
  if (!is_lattice_word(word)) return false;
  if (content) {
    const auto counts = t.content_counts();
    if (static_cast<int>(counts.size()) != content->length()) return false;
    for (int i = 1; i <= content->length(); ++i)
      if (counts[static_cast<std::size_t>(i - 1)] != content->part(i)) return false;
  }
  return true;
}

std::string_view to_string(RejectReason reason) {
  switch (reason) {
    case RejectReason::ColumnTooTall: return "column-too-tall";
    case RejectReason::FirstRowTooLong: return "first-row-too-long";
    case RejectReason::TooFewRows: return "too-few-rows";
    case RejectReason::PrefixRowsTooLong: return "prefix-rows-too-long";
  }
  return "unknown";
}

namespace {

void require_sizes(const SkewShape& shape, const Partition& content) {
  if (shape.cell_count() != content.size())
    throw SchurError(ErrorCode::SizeMismatch, "skew shape has " + std::to_string(shape.cell_count()) +
                                                  " cells but content has size " + std::to_string(content.size()));
}

}  // namespace

std::optional<RejectReason> quick_reject(const SkewShape& shape, const Partition& content) {
  require_sizes(shape, content);
  const int len = content.length();
  for (int h : shape.column_heights())
    if (h > len) return RejectReason::ColumnTooTall;
  const auto rows = shape.non_empty_row_indices();
  if (!rows.empty() && shape.row_cells(rows.front()) > content.part(1)) return RejectReason::FirstRowTooLong;
  if (static_cast<int>(rows.size()) < len) return RejectReason::TooFewRows;
  int cells = 0;
  int allowed = 0;
  for (int k = 1; k <= len && k <= static_cast<int>(rows.size()); ++k) {
    cells += shape.row_cells(rows[static_cast<std::size_t>(k - 1)]);
    allowed += content.part(k);
    if (cells > allowed) return RejectReason::PrefixRowsTooLong;
  }
  return std::nullopt;
}

namespace {

// Row-major backtracking. The lattice condition is checked per cell: within
// a row the reading order is right to left over weakly increasing entries, so
// all v's of the row are read before its (v-1)'s. Placing a v is legal iff
// before_row[v-1] >= before_row[v] + (v's already in this row) + 1.
class LrSearch {
 public:
  LrSearch(const SkewShape& shape, const Partition& content) : shape_(shape), content_(content) {
    const int len = content.length();
    before_row_.assign(static_cast<std::size_t>(len + 2), 0);
    in_row_.assign(static_cast<std::size_t>(len + 2), 0);
    rows_.resize(static_cast<std::size_t>(shape.rows()));
    int nonempty = 0;
    for (int r = 1; r <= shape.rows(); ++r) {
      rows_[static_cast<std::size_t>(r - 1)].assign(static_cast<std::size_t>(shape.row_cells(r)), 0);
      if (shape.row_cells(r) > 0) ++nonempty;
      row_rank_.push_back(nonempty);
    }
  }

  template <class Leaf>
  void run(Leaf&& leaf) {
    stop_ = false;
    next_row(1, leaf);
  }

  const std::vector<std::vector<int>>& rows() const { return rows_; }

 private:
  template <class Leaf>
  void next_row(int r, Leaf& leaf) {
    while (r <= shape_.rows() && shape_.row_cells(r) == 0) ++r;
    if (r > shape_.rows()) {
      if (!leaf(rows_)) stop_ = true;
      return;
    }
    place(r, shape_.row_start(r), leaf);
  }

  template <class Leaf>
  void place(int r, int c, Leaf& leaf) {
    if (stop_) return;
    auto& row = rows_[static_cast<std::size_t>(r - 1)];
    if (c > shape_.row_end(r)) {
      for (std::size_t v = 0; v < in_row_.size(); ++v) before_row_[v] += in_row_[v];
      std::vector<int> saved(in_row_.size(), 0);
      saved.swap(in_row_);
      next_row(r + 1, leaf);
      saved.swap(in_row_);
      for (std::size_t v = 0; v < in_row_.size(); ++v) before_row_[v] -= in_row_[v];
      return;
    }
    const int start = shape_.row_start(r);
    int lo = 1;
    if (c > start) lo = row[static_cast<std::size_t>(c - 1 - start)];
    if (shape_.has_cell(r - 1, c)) {
      const int above = rows_[static_cast<std::size_t>(r - 2)][static_cast<std::size_t>(c - shape_.row_start(r - 1))];
      lo = std::max(lo, above + 1);
    }
    const int hi = std::min(content_.length(), row_rank_[static_cast<std::size_t>(r - 1)]);
    for (int v = lo; v <= hi; ++v) {
      const auto vi = static_cast<std::size_t>(v);
      if (before_row_[vi] + in_row_[vi] >= content_.part(v)) continue;
      if (v > 1 && before_row_[vi - 1] < before_row_[vi] + in_row_[vi] + 1) continue;
      row[static_cast<std::size_t>(c - start)] = v;
      ++in_row_[vi];
      place(r, c + 1, leaf);
      --in_row_[vi];
      if (stop_) return;
    }
    row[static_cast<std::size_t>(c - start)] = 0;
  }

  const SkewShape& shape_;
  const Partition& content_;
  std::vector<std::vector<int>> rows_;
  std::vector<int> row_rank_;
  // Indexed by entry value (slot 0 unused).
  std::vector<int> before_row_;
  std::vector<int> in_row_;
  bool stop_ = false;
};

}  // namespace

void for_each_lr_tableau(const SkewShape& shape, const Partition& content,
                         const std::function<bool(const LRTableau&)>& visit) {
  if (quick_reject(shape, content)) return;
  LrSearch search(shape, content);
  search.run([&](const std::vector<std::vector<int>>& rows) { return visit(LRTableau{shape, rows}); });
}

std::vector<LRTableau> enumerate_lr(const SkewShape& shape, const Partition& content) {
  std::vector<LRTableau> out;
  for_each_lr_tableau(shape, content, [&](const LRTableau& t) {
    out.push_back(t);
    return true;
  });
  return out;
}

std::uint64_t count_lr(const SkewShape& shape, const Partition& content) {
  if (quick_reject(shape, content)) return 0;
  std::uint64_t count = 0;
  LrSearch search(shape, content);
  search.run([&](const std::vector<std::vector<int>>&) {
    ++count;
    return true;
  });
  return count;
}

std::uint64_t lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (mu.size() + nu.size() != lambda.size()) return 0;
  if (!contains(lambda, mu) || !contains(lambda, nu)) return 0;
  return count_lr(SkewShape(lambda, mu), nu);
}

}  // namespace schurlab
