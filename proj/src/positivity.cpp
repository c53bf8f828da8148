#include "schurlab/positivity.hpp"

#include <omp.h>

#include <algorithm>
#include <cctype>
#include <chrono>
#include <exception>

#include "schurlab/derived.hpp"
#include "schurlab/error.hpp"

namespace schurlab {

namespace {

DifferenceReport finish(std::vector<Partition> factors, int order, const SchurVector& prev, const SchurVector& mid,
                        const SchurVector& next) {
  DifferenceReport r;
  r.factors = std::move(factors);
  r.order = order;
  r.nvars = mid.nvars();
  r.mode = mid.mode();
  r.vector = multiply(mid, mid) - multiply(prev, next);
  const PositivityVerdict verdict = is_schur_positive(r.vector);
  r.positive = verdict.positive;
  r.witness = verdict.witness;
  return r;
}

void check_difference_order(int order) {
  if (order < 0) throw SchurError(ErrorCode::OrderOutOfRange, "negative order " + std::to_string(order));
}

}  // namespace

DifferenceReport conjecture1_expr(const Partition& lambda, int order, int nvars, Mode mode) {
  check_difference_order(order);
  const DerivedExpansion& e = derived_expansion(lambda, nvars, mode);
  return finish({lambda}, order, e.order(order - 1), e.order(order), e.order(order + 1));
}

DifferenceReport conjecture2_expr(const Partition& lambda, const Partition& mu, int order, int nvars, Mode mode) {
  check_difference_order(order);
  const int degree = lambda.size() + mu.size();
  auto at = [&](int i) {
    return i < 0 || i > degree ? SchurVector(nvars, mode) : derived_product(lambda, mu, i, nvars, mode);
  };
  return finish({lambda, mu}, order, at(order - 1), at(order), at(order + 1));
}

DifferenceReport polynomial_expr(const SchurVector& p, int order) {
  check_difference_order(order);
  const DerivedExpansion e = derived_expansion(p);
  return finish({}, order, e.order(order - 1), e.order(order), e.order(order + 1));
}

SchurVector StarDecomposition::total() const {
  SchurVector sum(nvars, mode);
  for (const auto* list : {&type1, &type2, &type3})
    for (const auto& term : *list) sum += scale(term.vector, term.coefficient);
  return sum;
}

StarDecomposition decompose_star(const Partition& lambda, int nvars, Mode mode) {
  StarDecomposition d;
  d.lambda = lambda;
  d.nvars = nvars;
  d.mode = mode;
  const SchurVector s_lambda = SchurVector::unit(lambda, nvars, mode);
  auto unit = [&](const Partition& p) { return SchurVector::unit(p, nvars, mode); };
  auto weight = [&](int j) { return Integer(nvars + lambda.part(j) - j); };
  auto half = [](const Integer& v) {
    if (!mpz_even_p(v.get_mpz_t())) throw SchurError(ErrorCode::InexactDivision, "odd halved coefficient");
    return Integer(v / 2);
  };
  const CornerSet js = corners(lambda);
  for (std::size_t a = 0; a < js.size(); ++a)
    for (std::size_t b = a + 1; b < js.size(); ++b) {
      const int j = js[a], k = js[b];
      StarTerm t;
      t.j = j;
      t.k = k;
      t.removal = remove_two_corners(lambda, j, k);
      t.coefficient = weight(j) * weight(k);
      t.vector = scale(multiply(unit(remove_corner(lambda, j)), unit(remove_corner(lambda, k))), 2) -
                 multiply(s_lambda, unit(*t.removal));
      d.type1.push_back(std::move(t));
    }
  for (int j : js) {
    const SchurVector square = [&] {
      const SchurVector one = unit(remove_corner(lambda, j));
      return multiply(one, one);
    }();
    const Integer w = weight(j);
    StarTerm up;
    up.j = j;
    up.removal = remove_up(lambda, j);
    up.coefficient = half(w * (w + 1));
    up.vector = up.removal ? square - multiply(s_lambda, unit(*up.removal)) : square;
    d.type2.push_back(std::move(up));
    StarTerm left;
    left.j = j;
    left.removal = remove_left(lambda, j);
    left.coefficient = half(w * (w - 1));
    left.vector = left.removal ? square - multiply(s_lambda, unit(*left.removal)) : square;
    d.type3.push_back(std::move(left));
  }
  return d;
}

bool verify_star_identity(const Partition& lambda, int nvars, Mode mode) {
  return decompose_star(lambda, nvars, mode).total() == conjecture1_expr(lambda, 1, nvars, mode).vector;
}

bool type23_check(const Partition& lambda, int j, int nvars) {
  if (!is_corner(lambda, j))
    throw SchurError(ErrorCode::NotACorner, "row " + std::to_string(j) + " is not a corner of (" + lambda.to_string() + ")");
  const Mode mode = Mode::Truncated;
  const SchurVector one = SchurVector::unit(remove_corner(lambda, j), nvars, mode);
  const SchurVector square = multiply(one, one);
  const SchurVector s_lambda = SchurVector::unit(lambda, nvars, mode);
  for (const auto& removal : {remove_up(lambda, j), remove_left(lambda, j)}) {
    SchurVector diff = square;
    if (removal) diff -= multiply(s_lambda, SchurVector::unit(*removal, nvars, mode));
    if (!is_schur_positive(diff).positive) return false;
  }
  return true;
}

Integer special_coefficient(Family family, int k, int l, int nvars) {
  check_family_params(family, k, l);
  if (nvars < 1) throw SchurError(ErrorCode::BadParams, "nvars must be positive");
  const Integer n(nvars), K(k), L(l);
  switch (family) {
    case Family::Hook: return (n + K - 1) * (K + L - 2) + (n + 1 - L) * (n + 1 - L);
    case Family::Kk1: return (n + K - 2) * K + (n - 2) * (n - 2);
    case Family::Conj: return (n + 2) * K + (n + 2 - K) * (n + 2 - K);
  }
  throw SchurError(ErrorCode::InternalInvariant, "unhandled family");
}

namespace {

std::string strip(const std::string& text) {
  std::string out;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

int parse_int(const std::string& text, const std::string& whole) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw SchurError(ErrorCode::ParseError, "bad n spec '" + whole + "'");
  return std::stoi(text);
}

}  // namespace

NSpec NSpec::parse(const std::string& raw) {
  NSpec spec;
  spec.text_ = strip(raw);
  if (spec.text_.empty()) throw SchurError(ErrorCode::ParseError, "empty n spec");
  auto term = [&](const std::string& t) {
    Term out;
    if (!t.empty() && (t[0] == 'l' || t[0] == 'L')) {
      out.relative = true;
      if (t.size() > 1) {
        if (t[1] != '+' && t[1] != '-') throw SchurError(ErrorCode::ParseError, "bad n spec '" + raw + "'");
        out.offset = parse_int(t.substr(2), raw) * (t[1] == '-' ? -1 : 1);
      }
    } else {
      out.offset = parse_int(t, raw);
    }
    return out;
  };
  std::size_t start = 0;
  while (start <= spec.text_.size()) {
    const std::size_t comma = spec.text_.find(',', start);
    const std::string item = spec.text_.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    const std::size_t dots = item.find("..");
    if (dots == std::string::npos) {
      const Term t = term(item);
      spec.ranges_.emplace_back(t, t);
    } else {
      spec.ranges_.emplace_back(term(item.substr(0, dots)), term(item.substr(dots + 2)));
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return spec;
}

std::vector<int> NSpec::resolve(int base_length) const {
  std::vector<int> out;
  auto value = [&](const Term& t) { return t.relative ? base_length + t.offset : t.offset; };
  for (const auto& [lo, hi] : ranges_)
    for (int n = std::max(1, value(lo)); n <= value(hi); ++n) out.push_back(n);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<SweepCell> conjecture1_cells(int max_size, const NSpec& nvars) {
  std::vector<SweepCell> cells;
  for (int d = 1; d <= max_size; ++d)
    for (const auto& lambda : enumerate_partitions(d))
      for (int n : nvars.resolve(lambda.length()))
        for (int i = 1; i <= d - 1; ++i) cells.push_back({{lambda}, i, n});
  return cells;
}

std::vector<SweepCell> conjecture2_cells(int max_size, const NSpec& nvars) {
  std::vector<SweepCell> cells;
  for (int total = 1; total <= max_size; ++total)
    for (int a = total; 2 * a >= total; --a)
      for (const auto& lambda : enumerate_partitions(a))
        for (const auto& mu : enumerate_partitions(total - a)) {
          if (a == total - a && lambda < mu) continue;
          for (int n : nvars.resolve(std::max(lambda.length(), mu.length())))
            for (int i = 1; i <= total - 1; ++i) cells.push_back({{lambda, mu}, i, n});
        }
  return cells;
}

DifferenceReport evaluate_cell(const SweepCell& cell, Mode mode) {
  if (cell.factors.size() == 1) return conjecture1_expr(cell.factors[0], cell.order, cell.nvars, mode);
  return conjecture2_expr(cell.factors[0], cell.factors[1], cell.order, cell.nvars, mode);
}

namespace {

std::optional<Counterexample> check_cell(const SweepCell& cell, Mode mode) {
  const DifferenceReport r = evaluate_cell(cell, mode);
  if (r.positive) return std::nullopt;
  return Counterexample{cell.factors, cell.order, cell.nvars, r.witness->first, r.witness->second};
}

}  // namespace

std::vector<std::optional<Counterexample>> evaluate_cells_serial(const std::vector<SweepCell>& cells, Mode mode) {
  std::vector<std::optional<Counterexample>> out;
  out.reserve(cells.size());
  for (const auto& cell : cells) out.push_back(check_cell(cell, mode));
  return out;
}

std::vector<std::optional<Counterexample>> evaluate_cells_parallel(const std::vector<SweepCell>& cells, Mode mode,
                                                                   int jobs) {
  if (jobs < 1) throw SchurError(ErrorCode::BadParams, "jobs must be positive");
  std::vector<std::optional<Counterexample>> out(cells.size());
  std::exception_ptr failure;
  const auto count = static_cast<std::int64_t>(cells.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs)
  for (std::int64_t idx = 0; idx < count; ++idx) {
    try {
      out[static_cast<std::size_t>(idx)] = check_cell(cells[static_cast<std::size_t>(idx)], mode);
    } catch (...) {
#pragma omp critical(sweep_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

SweepReport run_sweep(const SweepParams& params) {
  if (params.jobs < 1) throw SchurError(ErrorCode::BadParams, "jobs must be positive");
  if (params.conjecture != 1 && params.conjecture != 2)
    throw SchurError(ErrorCode::BadParams, "conjecture must be 1 or 2");
  const auto start = std::chrono::steady_clock::now();
  const std::uint64_t enumerations = lr_cache().enumerations();
  const std::uint64_t lookups = lr_cache().lookups();
  const auto cells = params.conjecture == 1 ? conjecture1_cells(params.max_size, params.nvars)
                                            : conjecture2_cells(params.max_size, params.nvars);
  const auto results = params.jobs == 1 ? evaluate_cells_serial(cells, params.mode)
                                        : evaluate_cells_parallel(cells, params.mode, params.jobs);
  SweepReport report;
  report.params = params;
  report.cells = cells.size();
  for (const auto& r : results)
    if (r) report.counterexamples.push_back(*r);
  report.stats.lr_enumerations = lr_cache().enumerations() - enumerations;
  report.stats.lr_lookups = lr_cache().lookups() - lookups;
  report.stats.lr_cache_size = lr_cache().size();
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

SweepReport sweep_conjecture1(int max_size, const NSpec& nvars, Mode mode, int jobs) {
  return run_sweep({1, max_size, nvars, mode, jobs});
}

SweepReport sweep_conjecture2(int max_size, const NSpec& nvars, Mode mode, int jobs) {
  return run_sweep({2, max_size, nvars, mode, jobs});
}

}  // namespace schurlab
