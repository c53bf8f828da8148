#include "schurlab/schur_vector.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

#include "schurlab/error.hpp"
#include "schurlab/lr_tableau.hpp"

namespace schurlab {

std::string_view to_string(Mode mode) { return mode == Mode::Truncated ? "truncated" : "formal"; }

Mode parse_mode(std::string_view text) {
  if (text == "truncated") return Mode::Truncated;
  if (text == "formal") return Mode::Formal;
  throw SchurError(ErrorCode::ParseError, "unknown mode '" + std::string(text) + "'");
}

SchurVector::SchurVector(int nvars, Mode mode) : nvars_(nvars), mode_(mode) {
  if (nvars < 1) throw SchurError(ErrorCode::BadParams, "nvars must be positive");
}

SchurVector SchurVector::unit(const Partition& lambda, int nvars, Mode mode) {
  SchurVector v(nvars, mode);
  v.add_term(lambda, 1);
  return v;
}

Integer SchurVector::coefficient(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? Integer(0) : it->second;
}

void SchurVector::add_term(const Partition& lambda, const Integer& c) {
  if (c == 0) return;
  if (mode_ == Mode::Truncated && lambda.length() > nvars_) return;
  if (!terms_.empty() && terms_.begin()->first.size() != lambda.size())
    throw SchurError(ErrorCode::InvalidInput, "inhomogeneous Schur vector: degree " + std::to_string(degree()) +
                                                  " vs " + std::to_string(lambda.size()));
  auto [it, inserted] = terms_.try_emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

namespace {

void require_compatible(const SchurVector& a, const SchurVector& b) {
  if (a.nvars() != b.nvars() || a.mode() != b.mode())
    throw SchurError(ErrorCode::ModeMismatch, "operands differ in nvars or mode");
}

}  // namespace

SchurVector& SchurVector::operator+=(const SchurVector& other) {
  require_compatible(*this, other);
  for (const auto& [p, c] : other.terms_) add_term(p, c);
  return *this;
}

SchurVector& SchurVector::operator-=(const SchurVector& other) {
  require_compatible(*this, other);
  for (const auto& [p, c] : other.terms_) add_term(p, -c);
  return *this;
}

std::string SchurVector::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [p, c] : terms_) {
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << "-";
    const Integer mag = abs(c);
    if (mag != 1) out << mag.get_str() << "*";
    out << "s(" << p.to_string() << ")";
    first = false;
  }
  return out.str();
}

SchurVector add(const SchurVector& a, const SchurVector& b) {
  SchurVector out = a;
  out += b;
  return out;
}

SchurVector subtract(const SchurVector& a, const SchurVector& b) {
  SchurVector out = a;
  out -= b;
  return out;
}

SchurVector scale(const SchurVector& a, const Integer& c) {
  SchurVector out(a.nvars(), a.mode());
  for (const auto& [p, coeff] : a.terms()) out.add_term(p, coeff * c);
  return out;
}

SchurVector operator+(const SchurVector& a, const SchurVector& b) { return add(a, b); }
SchurVector operator-(const SchurVector& a, const SchurVector& b) { return subtract(a, b); }
SchurVector operator*(const Integer& c, const SchurVector& a) { return scale(a, c); }

SchurVector truncate(const SchurVector& v) {
  SchurVector out(v.nvars(), Mode::Truncated);
  for (const auto& [p, c] : v.terms()) out.add_term(p, c);
  return out;
}

std::size_t LrKeyHash::operator()(const LrKey& k) const noexcept {
  PartitionHash h;
  std::size_t seed = h(k.outer);
  seed ^= h(k.inner) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
  seed ^= h(k.content) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
  return seed;
}

std::uint64_t LrCache::coefficient(const Partition& outer, const Partition& inner, const Partition& content) {
  ++lookups_;
  LrKey key{outer, inner, content};
  if (auto hit = find(key)) return *hit;
  ++enumerations_;
  const std::uint64_t value = lr_coefficient(outer, inner, content);
  std::unique_lock lock(mutex_);
  table_.insert_or_assign(std::move(key), value);
  return value;
}

std::optional<std::uint64_t> LrCache::find(const LrKey& key) const {
  std::shared_lock lock(mutex_);
  auto it = table_.find(key);
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

bool LrCache::merge(const LrKey& key, std::uint64_t value) {
  std::unique_lock lock(mutex_);
  auto [it, inserted] = table_.try_emplace(key, value);
  return inserted || it->second == value;
}

std::vector<std::pair<LrKey, std::uint64_t>> LrCache::snapshot() const {
  std::shared_lock lock(mutex_);
  std::vector<std::pair<LrKey, std::uint64_t>> out(table_.begin(), table_.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::tie(a.first.outer, a.first.inner, a.first.content) <
           std::tie(b.first.outer, b.first.inner, b.first.content);
  });
  return out;
}

std::size_t LrCache::size() const {
  std::shared_lock lock(mutex_);
  return table_.size();
}

void LrCache::clear() {
  std::unique_lock lock(mutex_);
  table_.clear();
}

LrCache& lr_cache() {
  static LrCache cache;
  return cache;
}

namespace {

struct ProductKey {
  Partition a;
  Partition b;
  int max_length;
  friend bool operator==(const ProductKey&, const ProductKey&) = default;
};

struct ProductKeyHash {
  std::size_t operator()(const ProductKey& k) const noexcept {
    PartitionHash h;
    std::size_t seed = h(k.a);
    seed ^= h(k.b) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
    return seed ^ static_cast<std::size_t>(k.max_length) * 0x100000001b3ULL;
  }
};

using ProductTerms = std::vector<std::pair<Partition, std::uint64_t>>;

class ProductMemo {
 public:
  ProductTerms get(const Partition& mu, const Partition& nu, int max_length) {
    // Enumerate the skew shape with fewer cells: the larger factor is inner.
    const bool swap = mu.size() < nu.size() || (mu.size() == nu.size() && nu < mu);
    const Partition& inner = swap ? nu : mu;
    const Partition& content = swap ? mu : nu;
    const int cap = std::min(max_length, mu.length() + nu.length());
    ProductKey key{inner, content, cap};
    {
      std::shared_lock lock(mutex_);
      if (auto it = table_.find(key); it != table_.end()) return it->second;
    }
    ProductTerms terms;
    PartitionFilter filter;
    filter.max_length = cap;
    filter.max_part = mu.part(1) + nu.part(1);
    for_each_partition(mu.size() + nu.size(), filter, [&](const Partition& lambda) {
      if (!contains(lambda, inner) || !contains(lambda, content)) return;
      const std::uint64_t c = lr_cache().coefficient(lambda, inner, content);
      if (c) terms.emplace_back(lambda, c);
    });
    std::unique_lock lock(mutex_);
    table_.insert_or_assign(std::move(key), terms);
    return terms;
  }

  void clear() {
    std::unique_lock lock(mutex_);
    table_.clear();
  }

 private:
  std::shared_mutex mutex_;
  std::unordered_map<ProductKey, ProductTerms, ProductKeyHash> table_;
};

ProductMemo& product_memo() {
  static ProductMemo memo;
  return memo;
}

}  // namespace

void clear_product_memo() { product_memo().clear(); }

SchurVector multiply(const SchurVector& a, const SchurVector& b) {
  require_compatible(a, b);
  SchurVector out(a.nvars(), a.mode());
  const int cap = a.mode() == Mode::Truncated ? a.nvars() : 1 << 20;
  std::map<Partition, Integer> acc;
  for (const auto& [mu, x] : a.terms()) {
    for (const auto& [nu, y] : b.terms()) {
      const Integer xy = x * y;
      for (const auto& [lambda, c] : product_memo().get(mu, nu, cap)) {
        acc[lambda] += xy * Integer(static_cast<unsigned long>(c));
      }
    }
  }
  for (const auto& [lambda, c] : acc) out.add_term(lambda, c);
  return out;
}

SchurVector operator*(const SchurVector& a, const SchurVector& b) { return multiply(a, b); }

PositivityVerdict is_schur_positive(const SchurVector& v) {
  PositivityVerdict verdict;
  for (const auto& [p, c] : v.terms()) {
    if (c >= 0) continue;
    // terms() iterates in reverse-lexicographic order, so the last negative
    // seen is the lexicographically least.
    verdict.positive = false;
    verdict.witness = std::make_pair(p, c);
  }
  return verdict;
}

}  // namespace schurlab
