#include "schurlab/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "schurlab/error.hpp"

namespace schurlab {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NotMonotone: return "NotMonotone";
    case ErrorCode::NotACorner: return "NotACorner";
    case ErrorCode::BadOrder: return "BadOrder";
    case ErrorCode::NotContained: return "NotContained";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::OracleBoundExceeded: return "OracleBoundExceeded";
    case ErrorCode::ModeMismatch: return "ModeMismatch";
    case ErrorCode::OrderOutOfRange: return "OrderOutOfRange";
    case ErrorCode::InexactDivision: return "InexactDivision";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::InternalInvariant: return "InternalInvariant";
  }
  return "UnknownError";
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw SchurError(ErrorCode::ParseError, "negative part");
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
      throw SchurError(ErrorCode::NotMonotone, "parts must be non-increasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) noexcept {
  const int n = std::max(a.length(), b.length());
  for (int i = 1; i <= n; ++i) {
    const int x = a.part(i);
    const int y = b.part(i);
    if (x != y) return x > y ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (int v : p.parts()) {
    h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
  if (!contains(outer_, inner_))
    throw SchurError(ErrorCode::NotContained,
                     "(" + inner_.to_string() + ") is not contained in (" + outer_.to_string() + ")");
}

int SkewShape::non_empty_rows() const noexcept {
  int count = 0;
  for (int r = 1; r <= rows(); ++r) count += row_cells(r) > 0;
  return count;
}

std::vector<int> SkewShape::non_empty_row_indices() const {
  std::vector<int> out;
  for (int r = 1; r <= rows(); ++r)
    if (row_cells(r) > 0) out.push_back(r);
  return out;
}

std::vector<int> SkewShape::column_heights() const {
  std::vector<int> heights(static_cast<std::size_t>(outer_.part(1)), 0);
  for (int r = 1; r <= rows(); ++r)
    for (int c = row_start(r); c <= row_end(r); ++c) ++heights[static_cast<std::size_t>(c - 1)];
  return heights;
}

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view s, std::string_view whole) {
  s = trim(s);
  int value = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (s.empty() || ec != std::errc() || ptr != end)
    throw SchurError(ErrorCode::ParseError, "malformed partition '" + std::string(whole) + "'");
  return value;
}

}  // namespace

Partition parse_partition(std::string_view text) {
  const std::string_view body = trim(text);
  std::vector<int> parts;
  if (body.empty()) return Partition{};
  std::size_t pos = 0;
  while (pos <= body.size()) {
    const std::size_t comma = body.find(',', pos);
    const std::string_view item =
        body.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    const std::size_t caret = item.find('^');
    if (caret == std::string_view::npos) {
      parts.push_back(parse_int(item, text));
    } else {
      const int value = parse_int(item.substr(0, caret), text);
      const int times = parse_int(item.substr(caret + 1), text);
      if (times < 0) throw SchurError(ErrorCode::ParseError, "negative exponent in '" + std::string(text) + "'");
      parts.insert(parts.end(), static_cast<std::size_t>(times), value);
    }
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  for (std::size_t i = 0; i + 1 < parts.size(); ++i)
    if (parts[i] == 0 && parts[i + 1] != 0)
      throw SchurError(ErrorCode::NotMonotone, "parts must be non-increasing");
  return Partition(std::move(parts));
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> out(static_cast<std::size_t>(lambda.part(1)), 0);
  for (int v : lambda.parts())
    for (int c = 0; c < v; ++c) ++out[static_cast<std::size_t>(c)];
  return Partition(std::move(out));
}

bool contains(const Partition& lambda, const Partition& mu) {
  if (mu.length() > lambda.length()) return false;
  for (int i = 1; i <= mu.length(); ++i)
    if (mu.part(i) > lambda.part(i)) return false;
  return true;
}

bool is_corner(const Partition& lambda, int row) {
  return row >= 1 && row <= lambda.length() && lambda.part(row) > lambda.part(row + 1);
}

CornerSet corners(const Partition& lambda) {
  CornerSet out;
  for (int j = 1; j <= lambda.length(); ++j)
    if (is_corner(lambda, j)) out.push_back(j);
  return out;
}

namespace {

void require_corner(const Partition& lambda, int row) {
  if (!is_corner(lambda, row))
    throw SchurError(ErrorCode::NotACorner,
                     "row " + std::to_string(row) + " is not a corner of (" + lambda.to_string() + ")");
}

Partition with_row_delta(const Partition& lambda, std::initializer_list<std::pair<int, int>> deltas) {
  std::vector<int> parts = lambda.parts();
  for (auto [row, delta] : deltas) parts[static_cast<std::size_t>(row - 1)] -= delta;
  return Partition(std::move(parts));
}

}  // namespace

Partition remove_corner(const Partition& lambda, int row) {
  require_corner(lambda, row);
  return with_row_delta(lambda, {{row, 1}});
}

Partition remove_two_corners(const Partition& lambda, int j, int k) {
  require_corner(lambda, j);
  require_corner(lambda, k);
  if (!(j < k)) throw SchurError(ErrorCode::BadOrder, "expected j < k");
  return with_row_delta(lambda, {{j, 1}, {k, 1}});
}

std::optional<Partition> remove_up(const Partition& lambda, int row) {
  require_corner(lambda, row);
  if (row < 2 || lambda.part(row - 1) != lambda.part(row)) return std::nullopt;
  return with_row_delta(lambda, {{row - 1, 1}, {row, 1}});
}

std::optional<Partition> remove_left(const Partition& lambda, int row) {
  require_corner(lambda, row);
  if (lambda.part(row) - lambda.part(row + 1) <= 1) return std::nullopt;
  return with_row_delta(lambda, {{row, 2}});
}

SkewShape skew(const Partition& lambda, const Partition& mu) { return SkewShape(lambda, mu); }

namespace {

void partitions_rec(int remaining, int max_part, int row, const PartitionFilter& filter,
                    std::vector<int>& prefix, const std::function<void(const Partition&)>& visit) {
  if (remaining == 0) {
    visit(Partition(prefix));
    return;
  }
  const int max_len = filter.max_length.value_or(remaining + row);
  if (row >= max_len) return;
  int cap = std::min(max_part, remaining);
  if (filter.contained_in) cap = std::min(cap, filter.contained_in->part(row + 1));
  if (cap <= 0) return;
  // The remaining rows (up to max_len) must be able to absorb `remaining`.
  for (int v = cap; v >= 1; --v) {
    const long long room = static_cast<long long>(v) * (max_len - row);
    if (room < remaining) break;
    prefix.push_back(v);
    partitions_rec(remaining - v, v, row + 1, filter, prefix, visit);
    prefix.pop_back();
  }
}

}  // namespace

void for_each_partition(int d, const PartitionFilter& filter,
                        const std::function<void(const Partition&)>& visit) {
  if (d < 0) return;
  std::vector<int> prefix;
  partitions_rec(d, filter.max_part.value_or(d), 0, filter, prefix, visit);
}

std::vector<Partition> enumerate_partitions(int d, const PartitionFilter& filter) {
  std::vector<Partition> out;
  for_each_partition(d, filter, [&](const Partition& p) { out.push_back(p); });
  return out;
}

std::pair<Partition, Partition> sort_pair(const Partition& lambda, const Partition& mu) {
  std::vector<int> merged = lambda.parts();
  merged.insert(merged.end(), mu.parts().begin(), mu.parts().end());
  std::sort(merged.begin(), merged.end(), std::greater<>());
  std::vector<int> first;
  std::vector<int> second;
  for (std::size_t i = 0; i < merged.size(); ++i) (i % 2 == 0 ? first : second).push_back(merged[i]);
  return {Partition(std::move(first)), Partition(std::move(second))};
}

std::optional<Partition> half_sum(const Partition& lambda, const Partition& mu) {
  const int n = std::max(lambda.length(), mu.length());
  std::vector<int> out;
  for (int i = 1; i <= n; ++i) {
    const int s = lambda.part(i) + mu.part(i);
    if (s % 2 != 0) return std::nullopt;
    out.push_back(s / 2);
  }
  return Partition(std::move(out));
}

bool dominates(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) return false;
  int a = 0;
  int b = 0;
  const int n = std::max(lambda.length(), mu.length());
  for (int i = 1; i <= n; ++i) {
    a += lambda.part(i);
    b += mu.part(i);
    if (a < b) return false;
  }
  return true;
}

Partition rectangle(int width, int height) {
  return Partition(std::vector<int>(static_cast<std::size_t>(std::max(height, 0)), width));
}

Partition hook(int k, int l) {
  std::vector<int> parts{k};
  parts.insert(parts.end(), static_cast<std::size_t>(std::max(l - 1, 0)), 1);
  return Partition(std::move(parts));
}

Partition from_blocks(std::initializer_list<std::pair<int, int>> blocks) {
  std::vector<int> parts;
  for (auto [value, times] : blocks) parts.insert(parts.end(), static_cast<std::size_t>(std::max(times, 0)), value);
  return Partition(std::move(parts));
}

}  // namespace schurlab
