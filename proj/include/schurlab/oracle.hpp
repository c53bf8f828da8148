#pragma once

// Independent validation path: everything here works with explicit monomial
// expansions built from semistandard tableaux, never with LR tableaux or the
// derivation formulas. It is exponential and only meant for small inputs.

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "schurlab/partition.hpp"
#include "schurlab/schur_vector.hpp"

namespace schurlab::oracle {

inline constexpr int kDefaultBound = 8;

/// Exponent vector of a monomial in n variables.
using Exponent = std::vector<int>;
using MonomialPoly = std::map<Exponent, Integer>;

/// Number of semistandard tableaux of `shape` with content `weight`
/// (weight may be any composition).
std::uint64_t kostka(const Partition& shape, std::span<const int> weight);

/// s_lambda(x_1..x_n) as an explicit monomial polynomial.
MonomialPoly schur_monomials(const Partition& lambda, int nvars);

MonomialPoly multiply(const MonomialPoly& a, const MonomialPoly& b);

/// Recovers Schur coefficients of a symmetric polynomial of degree d in n
/// variables from its coefficients on partition-shaped exponents, peeling
/// off dominance-maximal leading terms with Kostka numbers.
SchurVector schur_from_dominant(const std::map<Partition, Integer>& dominant, int degree, int nvars);
SchurVector schur_from_monomials(const MonomialPoly& poly, int degree, int nvars);

/// s_mu * s_nu in n variables, built from monomial expansions.
SchurVector product(const Partition& mu, const Partition& nu, int nvars);

/// c^lambda_{mu,nu} via the monomial product in |lambda| variables.
std::uint64_t lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu,
                             int bound = kDefaultBound);

/// Coefficient of t^order in s_lambda(x_1+t, ..., x_n+t), by substitution
/// into the monomial expansion. Result is in truncated mode.
SchurVector derived(const Partition& lambda, int order, int nvars, int bound = kDefaultBound);

/// det(h_{lambda_i + j - i}) and det(e_{lambda'_i + j - i}) expanded in n
/// variables and converted back to the Schur basis.
SchurVector jacobi_trudi_h(const Partition& lambda, int nvars, int bound = kDefaultBound);
SchurVector jacobi_trudi_e(const Partition& lambda, int nvars, int bound = kDefaultBound);

/// s_lambda evaluated at an integer point (Jacobi-Trudi with numeric h_k
/// and a fraction-free determinant).
Integer evaluate_schur(const Partition& lambda, std::span<const Integer> point);
Integer evaluate(const SchurVector& v, std::span<const Integer> point);

}  // namespace schurlab::oracle
