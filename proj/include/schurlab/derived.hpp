#pragma once

#include <optional>
#include <vector>

#include "schurlab/partition.hpp"
#include "schurlab/schur_vector.hpp"

namespace schurlab {

/// s_lambda^(1) = sum over corners j of (n + lambda_j - j) s_{lambda_(j)}.
SchurVector derived_first(const Partition& lambda, int nvars, Mode mode);

/// s_lambda^(2) from the explicit three-sum formula (two-corner, vertical
/// domino and horizontal domino removals).
SchurVector derived_second(const Partition& lambda, int nvars, Mode mode);

/// D = sum_j d/dx_j acting on the Schur basis; linear extension of
/// derived_first.
SchurVector derivation_operator(const SchurVector& v);

/// Coefficient of t^order in p(x_1+t, ..., x_n+t), i.e. D^order p / order!.
SchurVector derived(const SchurVector& p, int order);
SchurVector derived(const Partition& lambda, int order, int nvars, Mode mode);

/// All orders p^(0), ..., p^(deg p) of a polynomial.
struct DerivedExpansion {
  /// Factors of p when p is a product of Schur polynomials (one entry for a
  /// single s_lambda); empty when p was given as an arbitrary vector.
  std::vector<Partition> factors;
  std::optional<SchurVector> polynomial;
  int nvars = 1;
  Mode mode = Mode::Truncated;
  std::vector<SchurVector> orders;

  /// orders[i], or the zero vector for i outside 0..deg p.
  SchurVector order(int i) const;
};

/// Memoized (thread-safe) expansion of a single s_lambda.
const DerivedExpansion& derived_expansion(const Partition& lambda, int nvars, Mode mode);
/// Expansion of s_lambda * s_mu assembled with the Leibniz rule.
DerivedExpansion derived_expansion(const Partition& lambda, const Partition& mu, int nvars, Mode mode);
DerivedExpansion derived_expansion(const SchurVector& p);

/// (s_lambda s_mu)^(i) = sum_{a+b=i} s_lambda^(a) s_mu^(b).
SchurVector derived_product(const Partition& lambda, const Partition& mu, int order, int nvars, Mode mode);

void clear_derived_memo();

}  // namespace schurlab
