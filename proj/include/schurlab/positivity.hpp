#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "schurlab/family.hpp"
#include "schurlab/partition.hpp"
#include "schurlab/schur_vector.hpp"

namespace schurlab {

/// (p^(i))^2 - p^(i-1) p^(i+1) for p = s_lambda, s_lambda s_mu, or an
/// arbitrary Schur vector.
struct DifferenceReport {
  /// {lambda} or {lambda, mu}; empty when p was an arbitrary vector.
  std::vector<Partition> factors;
  int order = 0;
  int nvars = 1;
  Mode mode = Mode::Truncated;
  SchurVector vector{1, Mode::Truncated};
  bool positive = true;
  std::optional<std::pair<Partition, Integer>> witness;
};

DifferenceReport conjecture1_expr(const Partition& lambda, int order, int nvars, Mode mode);
DifferenceReport conjecture2_expr(const Partition& lambda, const Partition& mu, int order, int nvars, Mode mode);
DifferenceReport polynomial_expr(const SchurVector& p, int order);

/// One summand of the first-order difference. For Type I, `k` is the
/// second corner; for Types II and III `k` is 0 and `removal` is empty when
/// the domino cannot be removed (that product is then zero and the vector is
/// the bare square).
struct StarTerm {
  int j = 0;
  int k = 0;
  std::optional<Partition> removal;
  Integer coefficient;
  SchurVector vector{1, Mode::Truncated};
};

struct StarDecomposition {
  Partition lambda;
  int nvars = 1;
  Mode mode = Mode::Truncated;
  std::vector<StarTerm> type1;
  std::vector<StarTerm> type2;
  std::vector<StarTerm> type3;

  /// Sum of coefficient * vector over all three lists.
  SchurVector total() const;
};

StarDecomposition decompose_star(const Partition& lambda, int nvars, Mode mode);
bool verify_star_identity(const Partition& lambda, int nvars, Mode mode);

/// Both s_{lambda(j)}^2 - s_lambda s_{lambda(j,up)} and the horizontal
/// version are Schur positive (truncated mode).
bool type23_check(const Partition& lambda, int j, int nvars);

/// Closed-form coefficient of the special partitions in the first-order
/// difference of the family shape.
Integer special_coefficient(Family family, int k, int l, int nvars);

/// Set of variable counts, each item absolute ("100") or relative to a base
/// length ("l", "l+2"); items may be ranges "a..b". Example: "l..l+3,100".
class NSpec {
 public:
  static NSpec parse(const std::string& text);
  /// Sorted distinct values >= 1 for the given base length.
  std::vector<int> resolve(int base_length) const;
  const std::string& text() const noexcept { return text_; }

 private:
  struct Term {
    bool relative = false;
    int offset = 0;
  };
  std::string text_;
  std::vector<std::pair<Term, Term>> ranges_;
};

struct SweepCell {
  std::vector<Partition> factors;
  int order = 1;
  int nvars = 1;
};

struct Counterexample {
  std::vector<Partition> factors;
  int order = 0;
  int nvars = 0;
  Partition witness;
  Integer coeff;
};

struct SweepParams {
  int conjecture = 1;
  int max_size = 0;
  NSpec nvars = NSpec::parse("l..l+3,100");
  Mode mode = Mode::Truncated;
  int jobs = 1;
};

struct SweepStats {
  std::uint64_t lr_enumerations = 0;
  std::uint64_t lr_lookups = 0;
  std::size_t lr_cache_size = 0;
};

struct SweepReport {
  SweepParams params;
  std::size_t cells = 0;
  std::vector<Counterexample> counterexamples;
  double elapsed_ms = 0;
  SweepStats stats;
};

/// Cells for every lambda with 1 <= |lambda| <= max_size, every n in the
/// spec (relative to l(lambda)) and every 1 <= i <= |lambda| - 1.
std::vector<SweepCell> conjecture1_cells(int max_size, const NSpec& nvars);
/// Cells for unordered pairs (lambda, mu) with |lambda| + |mu| <= max_size,
/// |lambda| >= |mu| (mu <= lambda canonically on ties), n relative to
/// max(l(lambda), l(mu)), and 1 <= i <= |lambda| + |mu| - 1.
std::vector<SweepCell> conjecture2_cells(int max_size, const NSpec& nvars);

DifferenceReport evaluate_cell(const SweepCell& cell, Mode mode);

/// Reference kernel: plain loop over the cells.
std::vector<std::optional<Counterexample>> evaluate_cells_serial(const std::vector<SweepCell>& cells, Mode mode);
/// OpenMP kernel; results are stored by cell index so the output does not
/// depend on scheduling.
std::vector<std::optional<Counterexample>> evaluate_cells_parallel(const std::vector<SweepCell>& cells, Mode mode,
                                                                   int jobs);

/// jobs == 1 runs the serial kernel. Throws BadParams for jobs < 1.
SweepReport run_sweep(const SweepParams& params);
SweepReport sweep_conjecture1(int max_size, const NSpec& nvars, Mode mode, int jobs);
SweepReport sweep_conjecture2(int max_size, const NSpec& nvars, Mode mode, int jobs);

}  // namespace schurlab
