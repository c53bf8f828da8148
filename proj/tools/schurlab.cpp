#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "schurlab/cache_file.hpp"
#include "schurlab/derived.hpp"
#include "schurlab/error.hpp"
#include "schurlab/json_io.hpp"
#include "schurlab/lr_tableau.hpp"
#include "schurlab/positivity.hpp"
#include "schurlab/proof_maps.hpp"

using namespace schurlab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

// "3 + 1,1,1" or "2*3,1 + 1^4": a non-negative combination of Schur
// polynomials, all of the same degree.
SchurVector parse_polynomial(const std::string& text, int nvars, Mode mode) {
  SchurVector p(nvars, mode);
  std::size_t start = 0;
  while (true) {
    const std::size_t plus = text.find('+', start);
    std::string item = text.substr(start, plus == std::string::npos ? std::string::npos : plus - start);
    Integer coeff = 1;
    if (const auto star = item.find('*'); star != std::string::npos) {
      std::string digits;
      for (char c : item.substr(0, star))
        if (!std::isspace(static_cast<unsigned char>(c))) digits.push_back(c);
      if (digits.empty() || coeff.set_str(digits, 10) != 0)
        throw SchurError(ErrorCode::ParseError, "bad coefficient in '" + item + "'");
      item = item.substr(star + 1);
    }
    p.add_term(parse_partition(item), coeff);
    if (plus == std::string::npos) break;
    start = plus + 1;
  }
  return p;
}

struct Options {
  std::string cache_path;
  bool no_cache = false;

  std::string outer, inner, content;
  std::string a, b;
  std::string lambda, mu, poly;
  std::optional<int> order;
  int nvars = 3;
  std::string mode = "truncated";
  int conjecture = 1;
  int max_size = 5;
  std::string nspec;
  int jobs = 1;
  bool no_timing = false;
  int check_order = 1;
  std::string family = "hook";
  int k = 3;
  int l = 3;
  int beta_index = 0;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schur positivity laboratory: LR coefficients, derived Schur polynomials and positivity sweeps"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--cache", o.cache_path, "LR cache file (default: $SCHURLAB_CACHE)");
  app.add_flag("--no-cache", o.no_cache, "Neither load nor save an LR cache");

  auto* lrcoef = app.add_subcommand("lrcoef", "Print c^outer_{inner,content}");
  lrcoef->add_option("--outer", o.outer)->required();
  lrcoef->add_option("--inner", o.inner)->required();
  lrcoef->add_option("--content", o.content)->required();

  auto* tableaux = app.add_subcommand("tableaux", "List the LR tableaux of outer/inner with the given content");
  tableaux->add_option("--outer", o.outer)->required();
  tableaux->add_option("--inner", o.inner)->required();
  tableaux->add_option("--content", o.content)->required();

  auto* mult = app.add_subcommand("mult", "Schur product s_a * s_b");
  mult->add_option("--a", o.a)->required();
  mult->add_option("--b", o.b)->required();

  auto* derived_cmd = app.add_subcommand("derived", "Derived Schur polynomial(s) of s_lambda or s_lambda * s_mu");
  derived_cmd->add_option("--lambda", o.lambda)->required();
  derived_cmd->add_option("--mu", o.mu, "Second factor");
  derived_cmd->add_option("--order", o.order, "Single order i; all orders when omitted");

  auto* decompose = app.add_subcommand("decompose", "Type I/II/III decomposition of the first-order difference");
  decompose->add_option("--lambda", o.lambda)->required();

  auto* check = app.add_subcommand("check", "Positivity sweep (exit 1 on a counterexample)");
  check->add_option("--conjecture", o.conjecture, "1: s_lambda, 2: s_lambda * s_mu")->check(CLI::IsMember({1, 2}));
  check->add_option("--max-size", o.max_size, "Largest |lambda| (or |lambda|+|mu|)")->check(CLI::NonNegativeNumber);
  check->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::Range(1, 4096));
  check->add_flag("--no-timing", o.no_timing, "Omit elapsed time and cache counters");
  check->add_option("--poly", o.poly, "Check one polynomial instead, e.g. '3 + 1,1,1'");
  check->add_option("--order", o.check_order, "Order i for --poly")->check(CLI::NonNegativeNumber);

  auto* proofmap = app.add_subcommand("proofmap", "Run a tableau map over all eligible alpha");
  proofmap->add_option("--family", o.family)->check(CLI::IsMember({"hook", "kk1"}));
  proofmap->add_option("--k", o.k)->required();
  proofmap->add_option("--l", o.l);

  auto* special = app.add_subcommand("special", "Special LR tuple and difference coefficient");
  special->add_option("--family", o.family)->check(CLI::IsMember({"hook", "kk1", "conj"}));
  special->add_option("--k", o.k)->required();
  special->add_option("--l", o.l);
  special->add_option("--beta-index", o.beta_index)->check(CLI::NonNegativeNumber);

  for (auto* sub : {mult, derived_cmd, decompose, check, special}) {
    sub->add_option("--nvars", o.nspec, sub == check ? "Variable counts, e.g. 1..6 or l+1; default l..l+3,100" : "Number of variables");
    sub->add_option("--mode", o.mode)->check(CLI::IsMember({"truncated", "formal"}));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (o.cache_path.empty())
    if (const char* env = std::getenv("SCHURLAB_CACHE")) o.cache_path = env;
  const bool use_cache = !o.no_cache && !o.cache_path.empty();

  int status = kExitOk;
  try {
    if (use_cache) load_cache(o.cache_path, lr_cache());
    const Mode mode = parse_mode(o.mode);
    auto single_n = [&](int fallback) {
      if (o.nspec.empty()) return fallback;
      const NSpec spec = NSpec::parse(o.nspec);
      const auto values = spec.resolve(0);
      if (values.size() != 1 || spec.text().find('l') != std::string::npos)
        throw SchurError(ErrorCode::BadParams, "--nvars must be a single number here");
      return values.front();
    };

    if (*lrcoef) {
      const Partition outer = parse_partition(o.outer), inner = parse_partition(o.inner), content = parse_partition(o.content);
      if (outer.size() != inner.size() + content.size())
        throw SchurError(ErrorCode::SizeMismatch, "|outer| must equal |inner| + |content|");
      std::cout << lr_coefficient(outer, inner, content) << '\n';
    } else if (*tableaux) {
      const SkewShape shape(parse_partition(o.outer), parse_partition(o.inner));
      Json list = Json::array();
      for (const auto& t : enumerate_lr(shape, parse_partition(o.content))) list.push_back(to_json(t));
      emit(Json{{"count", list.size()}, {"tableaux", list}});
    } else if (*mult) {
      const int n = single_n(3);
      emit(to_json(multiply(SchurVector::unit(parse_partition(o.a), n, mode), SchurVector::unit(parse_partition(o.b), n, mode))));
    } else if (*derived_cmd) {
      const Partition lambda = parse_partition(o.lambda);
      const int n = single_n(std::max(lambda.length(), 1));
      if (o.mu.empty() && o.order) {
        emit(to_json(derived(lambda, *o.order, n, mode)));
      } else if (o.order) {
        emit(to_json(derived_product(lambda, parse_partition(o.mu), *o.order, n, mode)));
      } else if (o.mu.empty()) {
        emit(to_json(derived_expansion(lambda, n, mode)));
      } else {
        emit(to_json(derived_expansion(lambda, parse_partition(o.mu), n, mode)));
      }
    } else if (*decompose) {
      const Partition lambda = parse_partition(o.lambda);
      const int n = single_n(std::max(lambda.length(), 1));
      const StarDecomposition d = decompose_star(lambda, n, mode);
      Json out = to_json(d);
      out["total"] = to_json(d.total());
      out["identity_holds"] = d.total() == conjecture1_expr(lambda, 1, n, mode).vector;
      emit(out);
    } else if (*check) {
      if (!o.poly.empty()) {
        const DifferenceReport r = polynomial_expr(parse_polynomial(o.poly, single_n(3), mode), o.check_order);
        emit(to_json(r));
        if (!r.positive) status = kExitCounterexample;
      } else {
        SweepParams params;
        params.conjecture = o.conjecture;
        params.max_size = o.max_size;
        params.nvars = NSpec::parse(o.nspec.empty() ? "l..l+3,100" : o.nspec);
        params.mode = mode;
        params.jobs = o.jobs;
        const SweepReport r = run_sweep(params);
        emit(to_json(r, !o.no_timing));
        if (!r.counterexamples.empty()) status = kExitCounterexample;
      }
    } else if (*proofmap) {
      const MapReport r = verify_map_properties(parse_family(o.family), o.k, o.l);
      emit(to_json(r));
      if (!r.ok()) status = kExitCounterexample;
    } else if (*special) {
      const Family family = parse_family(o.family);
      const auto tuple = special_tuple(family, o.k, o.l, o.beta_index);
      const Partition beta = special_partitions(family, o.k, o.l).at(static_cast<std::size_t>(o.beta_index));
      const Partition lambda = family_shape(family, o.k, o.l);
      const int n = single_n(lambda.length());
      emit(Json{{"family", o.family},
                {"lambda", to_json(lambda)},
                {"beta", to_json(beta)},
                {"tuple", tuple},
                {"n", n},
                {"formula", special_coefficient(family, o.k, o.l, n).get_str()},
                {"difference_coefficient", conjecture1_expr(lambda, 1, n, mode).vector.coefficient(beta).get_str()}});
    }
    if (use_cache) save_cache(o.cache_path, lr_cache(), app.get_subcommands().front()->get_name());
  } catch (const SchurError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitUsage;
  }
  return status;
}
