#include "schurlab/derived.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <tuple>

#include "schurlab/error.hpp"

namespace schurlab {

namespace {

Integer weight(const Partition& lambda, int j, int nvars) { return Integer(nvars + lambda.part(j) - j); }

Integer halve(const Integer& value) {
  if (!mpz_even_p(value.get_mpz_t()))
    throw SchurError(ErrorCode::InexactDivision, "odd value " + value.get_str() + " in halved coefficient");
  return value / 2;
}

void check_order(int order, int degree) {
  if (order < 0 || order > degree)
    throw SchurError(ErrorCode::OrderOutOfRange,
                     "order " + std::to_string(order) + " outside 0.." + std::to_string(degree));
}

}  // namespace

SchurVector derived_first(const Partition& lambda, int nvars, Mode mode) {
  SchurVector out(nvars, mode);
  for (int j : corners(lambda)) out.add_term(remove_corner(lambda, j), weight(lambda, j, nvars));
  return out;
}

SchurVector derived_second(const Partition& lambda, int nvars, Mode mode) {
  SchurVector out(nvars, mode);
  const CornerSet js = corners(lambda);
  for (std::size_t a = 0; a < js.size(); ++a)
    for (std::size_t b = a + 1; b < js.size(); ++b)
      out.add_term(remove_two_corners(lambda, js[a], js[b]),
                   weight(lambda, js[a], nvars) * weight(lambda, js[b], nvars));
  for (int j : js) {
    const Integer w = weight(lambda, j, nvars);
    if (auto up = remove_up(lambda, j)) out.add_term(*up, halve(w * (w + 1)));
    if (auto left = remove_left(lambda, j)) out.add_term(*left, halve(w * (w - 1)));
  }
  return out;
}

SchurVector derivation_operator(const SchurVector& v) {
  SchurVector out(v.nvars(), v.mode());
  for (const auto& [lambda, c] : v.terms()) {
    for (int j : corners(lambda)) out.add_term(remove_corner(lambda, j), c * weight(lambda, j, v.nvars()));
  }
  return out;
}

namespace {

// p^(i+1) = D p^(i) / (i+1); the division must be exact.
SchurVector next_order(const SchurVector& current, int next) {
  const SchurVector raw = derivation_operator(current);
  SchurVector out(current.nvars(), current.mode());
  const Integer divisor(next);
  for (const auto& [p, c] : raw.terms()) {
    if (!mpz_divisible_p(c.get_mpz_t(), divisor.get_mpz_t()))
      throw SchurError(ErrorCode::InexactDivision,
                       "coefficient " + c.get_str() + " of s(" + p.to_string() + ") not divisible by " + divisor.get_str());
    out.add_term(p, c / divisor);
  }
  return out;
}

std::vector<SchurVector> all_orders(const SchurVector& p) {
  std::vector<SchurVector> orders{p};
  const int degree = p.degree();
  for (int i = 1; i <= degree; ++i) orders.push_back(next_order(orders.back(), i));
  return orders;
}

}  // namespace

namespace {

SchurVector iterate(SchurVector current, int order) {
  for (int i = 1; i <= order; ++i) current = next_order(current, i);
  return current;
}

}  // namespace

SchurVector derived(const SchurVector& p, int order) {
  check_order(order, std::max(p.degree(), 0));
  return iterate(p, order);
}

SchurVector derived(const Partition& lambda, int order, int nvars, Mode mode) {
  check_order(order, lambda.size());
  return iterate(SchurVector::unit(lambda, nvars, mode), order);
}

SchurVector DerivedExpansion::order(int i) const {
  if (i < 0 || i >= static_cast<int>(orders.size())) return SchurVector(nvars, mode);
  return orders[static_cast<std::size_t>(i)];
}

namespace {

class ExpansionMemo {
 public:
  const DerivedExpansion& get(const Partition& lambda, int nvars, Mode mode) {
    const auto key = std::make_tuple(lambda, nvars, mode);
    {
      std::shared_lock lock(mutex_);
      if (auto it = table_.find(key); it != table_.end()) return *it->second;
    }
    auto fresh = std::make_unique<DerivedExpansion>();
    fresh->factors = {lambda};
    fresh->nvars = nvars;
    fresh->mode = mode;
    const SchurVector unit = SchurVector::unit(lambda, nvars, mode);
    if (unit.is_zero()) {
      fresh->orders.assign(static_cast<std::size_t>(lambda.size() + 1), SchurVector(nvars, mode));
    } else {
      fresh->orders = all_orders(unit);
    }
    std::unique_lock lock(mutex_);
    auto [it, inserted] = table_.try_emplace(key, std::move(fresh));
    return *it->second;
  }

  void clear() {
    std::unique_lock lock(mutex_);
    table_.clear();
  }

 private:
  std::shared_mutex mutex_;
  std::map<std::tuple<Partition, int, Mode>, std::unique_ptr<DerivedExpansion>> table_;
};

ExpansionMemo& expansion_memo() {
  static ExpansionMemo memo;
  return memo;
}

}  // namespace

const DerivedExpansion& derived_expansion(const Partition& lambda, int nvars, Mode mode) {
  return expansion_memo().get(lambda, nvars, mode);
}

void clear_derived_memo() { expansion_memo().clear(); }

SchurVector derived_product(const Partition& lambda, const Partition& mu, int order, int nvars, Mode mode) {
  check_order(order, lambda.size() + mu.size());
  const DerivedExpansion& a = derived_expansion(lambda, nvars, mode);
  const DerivedExpansion& b = derived_expansion(mu, nvars, mode);
  SchurVector out(nvars, mode);
  for (int i = std::max(0, order - mu.size()); i <= std::min(order, lambda.size()); ++i)
    out += multiply(a.order(i), b.order(order - i));
  return out;
}

DerivedExpansion derived_expansion(const Partition& lambda, const Partition& mu, int nvars, Mode mode) {
  DerivedExpansion out;
  out.factors = {lambda, mu};
  out.nvars = nvars;
  out.mode = mode;
  for (int i = 0; i <= lambda.size() + mu.size(); ++i) out.orders.push_back(derived_product(lambda, mu, i, nvars, mode));
  return out;
}

DerivedExpansion derived_expansion(const SchurVector& p) {
  DerivedExpansion out;
  out.polynomial = p;
  out.nvars = p.nvars();
  out.mode = p.mode();
  out.orders = all_orders(p);
  return out;
}

}  // namespace schurlab
