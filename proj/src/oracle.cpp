#include "schurlab/oracle.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <unordered_map>

#include "schurlab/error.hpp"

namespace schurlab::oracle {

namespace {

void check_bound(int value, int bound, const char* what) {
  if (value > bound)
    throw SchurError(ErrorCode::OracleBoundExceeded,
                     std::string(what) + " " + std::to_string(value) + " exceeds oracle bound " + std::to_string(bound));
}

// Removes a horizontal strip of `strip` cells from `shape` in every possible
// way, calling visit(smaller shape parts).
void for_each_strip_removal(const std::vector<int>& shape, int strip, std::vector<int>& work, std::size_t row,
                            const std::function<void(const std::vector<int>&)>& visit) {
  if (row == shape.size()) {
    if (strip == 0) visit(work);
    return;
  }
  const int below = row + 1 < shape.size() ? shape[row + 1] : 0;
  const int max_take = std::min(strip, shape[row] - below);
  for (int take = 0; take <= max_take; ++take) {
    work[row] = shape[row] - take;
    for_each_strip_removal(shape, strip - take, work, row + 1, visit);
  }
  work[row] = shape[row];
}

std::uint64_t kostka_rec(const std::vector<int>& shape, std::span<const int> weight,
                         std::map<std::pair<std::vector<int>, std::size_t>, std::uint64_t>& memo) {
  if (weight.empty()) {
    return std::all_of(shape.begin(), shape.end(), [](int v) { return v == 0; }) ? 1 : 0;
  }
  auto key = std::make_pair(shape, weight.size());
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  // Entries equal to the largest value form a horizontal strip at the rim.
  std::uint64_t total = 0;
  std::vector<int> work = shape;
  for_each_strip_removal(shape, weight.back(), work, 0, [&](const std::vector<int>& smaller) {
    total += kostka_rec(smaller, weight.first(weight.size() - 1), memo);
  });
  memo.emplace(std::move(key), total);
  return total;
}

void for_each_composition(int total, int parts, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> comp(static_cast<std::size_t>(parts), 0);
  std::function<void(int, int)> rec = [&](int idx, int left) {
    if (idx == parts - 1) {
      comp[static_cast<std::size_t>(idx)] = left;
      visit(comp);
      return;
    }
    for (int v = left; v >= 0; --v) {
      comp[static_cast<std::size_t>(idx)] = v;
      rec(idx + 1, left - v);
    }
  };
  if (parts == 0) {
    if (total == 0) visit(comp);
    return;
  }
  rec(0, total);
}

Partition sorted_partition(std::vector<int> comp) {
  std::sort(comp.begin(), comp.end(), std::greater<>());
  return Partition(std::move(comp));
}

class KostkaTable {
 public:
  std::uint64_t get(const Partition& shape, const Partition& weight) {
    {
      std::lock_guard lock(mutex_);
      if (auto it = table_.find({shape, weight}); it != table_.end()) return it->second;
    }
    const std::uint64_t value = kostka(shape, weight.parts());
    std::lock_guard lock(mutex_);
    table_.emplace(std::make_pair(shape, weight), value);
    return value;
  }

 private:
  std::mutex mutex_;
  std::map<std::pair<Partition, Partition>, std::uint64_t> table_;
};

KostkaTable& kostka_table() {
  static KostkaTable table;
  return table;
}

std::map<Partition, Integer> dominant_part(const MonomialPoly& poly) {
  std::map<Partition, Integer> out;
  for (const auto& [exp, c] : poly) {
    if (c == 0 || !std::is_sorted(exp.begin(), exp.end(), std::greater<>())) continue;
    out[Partition(exp)] += c;
  }
  return out;
}

}  // namespace

std::uint64_t kostka(const Partition& shape, std::span<const int> weight) {
  int total = 0;
  for (int w : weight) total += w;
  if (total != shape.size()) return 0;
  std::vector<int> nonzero;
  for (int w : weight)
    if (w > 0) nonzero.push_back(w);
  std::map<std::pair<std::vector<int>, std::size_t>, std::uint64_t> memo;
  return kostka_rec(shape.parts(), nonzero, memo);
}

MonomialPoly schur_monomials(const Partition& lambda, int nvars) {
  MonomialPoly out;
  if (lambda.length() > nvars) return out;
  for_each_composition(lambda.size(), nvars, [&](const std::vector<int>& comp) {
    const std::uint64_t k = kostka_table().get(lambda, sorted_partition(comp));
    if (k) out.emplace(comp, Integer(static_cast<unsigned long>(k)));
  });
  return out;
}

MonomialPoly multiply(const MonomialPoly& a, const MonomialPoly& b) {
  MonomialPoly out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      Exponent e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out[e] += ca * cb;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

SchurVector schur_from_dominant(const std::map<Partition, Integer>& dominant, int degree, int nvars) {
  SchurVector out(nvars, Mode::Truncated);
  PartitionFilter filter;
  filter.max_length = nvars;
  const auto basis = enumerate_partitions(degree, filter);
  // basis is lexicographically decreasing, a linear extension of dominance.
  std::vector<std::pair<Partition, Integer>> found;
  for (const auto& beta : basis) {
    auto it = dominant.find(beta);
    Integer c = it == dominant.end() ? Integer(0) : it->second;
    for (const auto& [alpha, r] : found) {
      const std::uint64_t k = kostka_table().get(alpha, beta);
      if (k) c -= r * Integer(static_cast<unsigned long>(k));
    }
    if (c != 0) {
      found.emplace_back(beta, c);
      out.add_term(beta, c);
    }
  }
  for (const auto& [p, c] : dominant) {
    if (p.length() > nvars || p.size() != degree)
      if (c != 0) throw SchurError(ErrorCode::InternalInvariant, "dominant term outside basis");
  }
  return out;
}

SchurVector schur_from_monomials(const MonomialPoly& poly, int degree, int nvars) {
  return schur_from_dominant(dominant_part(poly), degree, nvars);
}

SchurVector product(const Partition& mu, const Partition& nu, int nvars) {
  const int degree = mu.size() + nu.size();
  const MonomialPoly sm = schur_monomials(mu, nvars);
  std::map<Partition, Integer> dominant;
  PartitionFilter filter;
  filter.max_length = nvars;
  for_each_partition(degree, filter, [&](const Partition& beta) {
    Integer c = 0;
    for (const auto& [a, ca] : sm) {
      std::vector<int> rest(static_cast<std::size_t>(nvars));
      bool ok = true;
      for (int i = 0; i < nvars && ok; ++i) {
        rest[static_cast<std::size_t>(i)] = beta.part(i + 1) - a[static_cast<std::size_t>(i)];
        ok = rest[static_cast<std::size_t>(i)] >= 0;
      }
      if (!ok) continue;
      const std::uint64_t k = kostka_table().get(nu, sorted_partition(rest));
      if (k) c += ca * Integer(static_cast<unsigned long>(k));
    }
    if (c != 0) dominant.emplace(beta, c);
  });
  return schur_from_dominant(dominant, degree, nvars);
}

std::uint64_t lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu, int bound) {
  check_bound(lambda.size(), bound, "|lambda|");
  if (mu.size() + nu.size() != lambda.size()) return 0;
  const int nvars = std::max(lambda.size(), 1);
  const Integer c = product(mu, nu, nvars).coefficient(lambda);
  if (c < 0) throw SchurError(ErrorCode::InternalInvariant, "negative LR coefficient from oracle");
  return c.get_ui();
}

SchurVector derived(const Partition& lambda, int order, int nvars, int bound) {
  check_bound(lambda.size(), bound, "|lambda|");
  check_bound(nvars, bound, "nvars");
  if (order < 0 || order > lambda.size())
    throw SchurError(ErrorCode::OrderOutOfRange, "order " + std::to_string(order));
  const int degree = lambda.size() - order;
  const MonomialPoly sl = schur_monomials(lambda, nvars);
  std::map<Partition, Integer> dominant;
  PartitionFilter filter;
  filter.max_length = nvars;
  // [x^beta t^order] prod_j (x_j + t)^{a_j} = prod_j binom(a_j, beta_j)
  // summed over exponents a = beta + shift, |shift| = order.
  for_each_partition(degree, filter, [&](const Partition& beta) {
    Integer c = 0;
    for_each_composition(order, nvars, [&](const std::vector<int>& shift) {
      Exponent a(static_cast<std::size_t>(nvars));
      for (int i = 0; i < nvars; ++i) a[static_cast<std::size_t>(i)] = beta.part(i + 1) + shift[static_cast<std::size_t>(i)];
      auto it = sl.find(a);
      if (it == sl.end()) return;
      Integer term = it->second;
      for (int i = 0; i < nvars; ++i) {
        Integer b;
        mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(a[static_cast<std::size_t>(i)]),
                     static_cast<unsigned long>(beta.part(i + 1)));
        term *= b;
      }
      c += term;
    });
    if (c != 0) dominant.emplace(beta, c);
  });
  return schur_from_dominant(dominant, degree, nvars);
}

namespace {

MonomialPoly complete_homogeneous(int k, int nvars) {
  MonomialPoly out;
  if (k < 0) return out;
  for_each_composition(k, nvars, [&](const std::vector<int>& comp) { out.emplace(comp, 1); });
  return out;
}

MonomialPoly elementary(int k, int nvars) {
  MonomialPoly out;
  if (k < 0 || k > nvars) return out;
  std::vector<int> exp(static_cast<std::size_t>(nvars), 0);
  std::fill(exp.end() - k, exp.end(), 1);
  do {
    out.emplace(exp, 1);
  } while (std::next_permutation(exp.begin(), exp.end()));
  return out;
}

MonomialPoly add_scaled(MonomialPoly a, const MonomialPoly& b, int sign) {
  for (const auto& [e, c] : b) a[e] += sign * c;
  std::erase_if(a, [](const auto& kv) { return kv.second == 0; });
  return a;
}

// Laplace expansion along successive rows, memoized on the set of used columns.
MonomialPoly determinant(const std::vector<std::vector<MonomialPoly>>& m, int nvars) {
  const int size = static_cast<int>(m.size());
  std::unordered_map<unsigned, MonomialPoly> memo;
  std::function<MonomialPoly(unsigned)> rec = [&](unsigned used) -> MonomialPoly {
    const int row = __builtin_popcount(used);
    if (row == size) return MonomialPoly{{Exponent(static_cast<std::size_t>(nvars), 0), 1}};
    if (auto it = memo.find(used); it != memo.end()) return it->second;
    MonomialPoly total;
    int free_before = 0;
    for (int col = 0; col < size; ++col) {
      if (used & (1u << col)) continue;
      const auto& entry = m[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
      if (!entry.empty()) {
        const MonomialPoly minor = rec(used | (1u << col));
        if (!minor.empty()) total = add_scaled(std::move(total), multiply(entry, minor), free_before % 2 ? -1 : 1);
      }
      ++free_before;
    }
    memo.emplace(used, total);
    return total;
  };
  return rec(0);
}

template <class Generator>
SchurVector jacobi_trudi(const Partition& rows, int degree, int nvars, Generator gen) {
  const int size = rows.length();
  std::vector<std::vector<MonomialPoly>> m(static_cast<std::size_t>(size), std::vector<MonomialPoly>(static_cast<std::size_t>(size)));
  for (int i = 1; i <= size; ++i)
    for (int j = 1; j <= size; ++j)
      m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = gen(rows.part(i) + j - i, nvars);
  return schur_from_monomials(determinant(m, nvars), degree, nvars);
}

}  // namespace

SchurVector jacobi_trudi_h(const Partition& lambda, int nvars, int bound) {
  check_bound(lambda.size(), bound, "|lambda|");
  return jacobi_trudi(lambda, lambda.size(), nvars, complete_homogeneous);
}

SchurVector jacobi_trudi_e(const Partition& lambda, int nvars, int bound) {
  check_bound(lambda.size(), bound, "|lambda|");
  return jacobi_trudi(conjugate(lambda), lambda.size(), nvars, elementary);
}

Integer evaluate_schur(const Partition& lambda, std::span<const Integer> point) {
  const int size = lambda.length();
  if (size == 0) return 1;
  const int top = lambda.part(1) + size;
  // h[k] over the growing variable set: h_k(x_1..x_m) = h_k(x_1..x_{m-1}) + x_m h_{k-1}(x_1..x_m).
  std::vector<Integer> h(static_cast<std::size_t>(top + 1), 0);
  h[0] = 1;
  for (const Integer& x : point)
    for (int k = 1; k <= top; ++k) h[static_cast<std::size_t>(k)] += x * h[static_cast<std::size_t>(k - 1)];
  auto hk = [&](int k) -> Integer { return k < 0 ? Integer(0) : h[static_cast<std::size_t>(k)]; };
  std::vector<std::vector<Integer>> m(static_cast<std::size_t>(size), std::vector<Integer>(static_cast<std::size_t>(size)));
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j)
      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = hk(lambda.part(i + 1) + j - i);
  // Bareiss elimination.
  Integer sign = 1;
  Integer prev = 1;
  for (int k = 0; k < size - 1; ++k) {
    auto& mk = m[static_cast<std::size_t>(k)];
    if (mk[static_cast<std::size_t>(k)] == 0) {
      int swap_row = -1;
      for (int r = k + 1; r < size; ++r)
        if (m[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] != 0) {
          swap_row = r;
          break;
        }
      if (swap_row < 0) return 0;
      std::swap(m[static_cast<std::size_t>(k)], m[static_cast<std::size_t>(swap_row)]);
      sign = -sign;
    }
    for (int i = k + 1; i < size; ++i) {
      for (int j = k + 1; j < size; ++j) {
        Integer v = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * m[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] -
                    m[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] * m[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
      }
    }
    prev = m[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
  }
  return sign * m[static_cast<std::size_t>(size - 1)][static_cast<std::size_t>(size - 1)];
}

Integer evaluate(const SchurVector& v, std::span<const Integer> point) {
  Integer total = 0;
  for (const auto& [p, c] : v.terms()) total += c * evaluate_schur(p, point);
  return total;
}

}  // namespace schurlab::oracle
