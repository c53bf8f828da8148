#include <gtest/gtest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>

#include "schurlab/json_io.hpp"
#include "schurlab/positivity.hpp"

using namespace schurlab;

namespace {

struct CliRun {
  int exit_code;
  std::string out;
};

CliRun run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + SCHURLAB_CLI + std::string(" ") + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  CliRun r{-1, ""};
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("schurlab_cli_" + name + "_" + std::to_string(::getpid()))).string();
}

}  // namespace

TEST(Cli, LrCoefficient) {
  EXPECT_EQ(run("lrcoef --outer 3,2,1 --inner 2,1 --content 2,1").out, "2\n");
  EXPECT_EQ(run("lrcoef --outer 2,1 --inner 2,1 --content ''").out, "1\n");
  EXPECT_EQ(run("lrcoef --outer 2,x --inner 2,1 --content ''").exit_code, 2);
  EXPECT_EQ(run("lrcoef --outer 3 --inner 2,1 --content 1").exit_code, 2);
  EXPECT_EQ(run("lrcoef --outer 3,1 --inner 2,2 --content ''").out, "0\n");
  EXPECT_EQ(run("lrcoef --outer 3").exit_code, 2);
  EXPECT_EQ(run("").exit_code, 2);
}

TEST(Cli, Tableaux) {
  const CliRun r = run("tableaux --outer 3,2,1 --inner 2,1 --content 2,1");
  EXPECT_EQ(r.exit_code, 0);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["count"], 2);
  EXPECT_EQ(j["tableaux"][0]["rows"].dump(), "[[1],[1],[2]]");
}

TEST(Cli, MultAndDerived) {
  CliRun r = run("mult --a 2 --b 1,1 --nvars 3");
  EXPECT_EQ(schur_vector_from_json(Json::parse(r.out)),
            SchurVector::unit(Partition({3, 1}), 3, Mode::Truncated) + SchurVector::unit(Partition({2, 1, 1}), 3, Mode::Truncated));
  r = run("derived --lambda 3,3,2 --order 1 --nvars 4");
  EXPECT_EQ(r.exit_code, 0);
  SchurVector expected(4, Mode::Truncated);
  expected.add_term(Partition({3, 2, 2}), 5);
  expected.add_term(Partition({3, 3, 1}), 3);
  EXPECT_EQ(schur_vector_from_json(Json::parse(r.out)), expected);
  r = run("derived --lambda 3,3,2 --order 0 --nvars 4");
  EXPECT_EQ(schur_vector_from_json(Json::parse(r.out)), SchurVector::unit(Partition({3, 3, 2}), 4, Mode::Truncated));
  EXPECT_EQ(run("derived --lambda 3,3,2 --order 9 --nvars 4").exit_code, 2);
  r = run("derived --lambda 2,1 --nvars 3");
  EXPECT_EQ(Json::parse(r.out)["orders"].size(), 4u);
  r = run("derived --lambda 3 --mu 1,1,1 --nvars 3 --mode formal");
  EXPECT_EQ(Json::parse(r.out)["orders"].size(), 7u);
  EXPECT_EQ(run("derived --lambda 2 --nvars l+1").exit_code, 2);
}

TEST(Cli, CheckExitCodes) {
  EXPECT_EQ(run("check --conjecture 1 --max-size 5 --nvars 1..6").exit_code, 0);
  EXPECT_EQ(run("check --jobs 0").exit_code, 2);
  EXPECT_EQ(run("check --conjecture 3").exit_code, 2);
  EXPECT_EQ(run("check --nvars 'l..'").exit_code, 2);
  const CliRun r = run("check --poly '3 + 1,1,1' --order 1 --nvars 3 --mode formal");
  EXPECT_EQ(r.exit_code, 1);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["witness_partition"].dump(), "[1,1,1,1]");
  EXPECT_EQ(j["coeff"], "-10");
  EXPECT_EQ(run("check --poly '3 + 1,1,1' --order 1 --nvars 3").exit_code, 0);
  EXPECT_EQ(run("check --poly '3 + 1,1' --nvars 3").exit_code, 2);
}

TEST(Cli, ProofMapAndDecompose) {
  CliRun r = run("proofmap --family kk1 --k 3");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(Json::parse(r.out)["max_fiber"], 2);
  EXPECT_EQ(run("proofmap --family conj --k 3").exit_code, 2);
  r = run("decompose --lambda 4,4 --nvars 2");
  EXPECT_TRUE(Json::parse(r.out)["typeI"].empty());
  r = run("decompose --lambda 3,3,2 --nvars 4");
  const Json j = Json::parse(r.out);
  SchurVector sum(4, Mode::Truncated);
  for (const char* key : {"typeI", "typeII", "typeIII"})
    for (const auto& term : j[key]) sum += scale(schur_vector_from_json(term["vector"]), Integer(term["coefficient"].get<std::string>()));
  EXPECT_EQ(sum, conjecture1_expr(Partition({3, 3, 2}), 1, 4, Mode::Truncated).vector);
}

TEST(Cli, Special) {
  const Json j = Json::parse(run("special --family kk1 --k 3 --nvars 3").out);
  EXPECT_EQ(j["tuple"].dump(), "[0,1,1,1,0,0]");
  EXPECT_EQ(j["formula"], "13");
  EXPECT_EQ(j["difference_coefficient"], "13");
  EXPECT_EQ(run("special --family hook --k 2 --l 3").exit_code, 2);
}

TEST(Cli, CacheRoundTrip) {
  const std::string path = temp_path("cache");
  std::filesystem::remove(path);
  const std::string args = "check --conjecture 2 --max-size 5 --nvars l..l+1";
  const CliRun cold = run("--cache " + path + " " + args);
  ASSERT_EQ(cold.exit_code, 0);
  ASSERT_TRUE(std::filesystem::exists(path));
  const CliRun warm = run(args, "SCHURLAB_CACHE=" + path);
  ASSERT_EQ(warm.exit_code, 0);
  Json a = Json::parse(cold.out), b = Json::parse(warm.out);
  const auto cold_enum = a["stats"]["lr_enumerations"].get<std::uint64_t>();
  const auto warm_enum = b["stats"]["lr_enumerations"].get<std::uint64_t>();
  EXPECT_GT(cold_enum, 0u);
  EXPECT_LT(warm_enum, cold_enum);
  for (Json* j : {&a, &b}) {
    j->erase("elapsed_ms");
    j->erase("stats");
  }
  EXPECT_EQ(a.dump(), b.dump());
  const CliRun disabled = run("--no-cache " + args, "SCHURLAB_CACHE=" + path);
  EXPECT_EQ(Json::parse(disabled.out)["stats"]["lr_enumerations"].get<std::uint64_t>(), cold_enum);
  std::filesystem::remove(path);
}

TEST(Cli, OutputIndependentOfJobs) {
  for (const std::string args : {"check --conjecture 1 --max-size 7 --nvars l..l+2 --no-timing",
                                 "check --conjecture 2 --max-size 5 --nvars 1..3 --mode formal --no-timing"}) {
    const CliRun one = run(args + " --jobs 1");
    const CliRun eight = run(args + " --jobs 8");
    EXPECT_EQ(one.exit_code, eight.exit_code);
    EXPECT_FALSE(one.out.empty());
    EXPECT_EQ(one.out, eight.out);
  }
}
