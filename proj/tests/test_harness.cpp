#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "gvlab/harness.hpp"

using namespace gvlab;

namespace {

SweepConfig only(std::vector<int> criteria) {
  SweepConfig c;
  c.criteria = std::move(criteria);
  return c;
}

std::string tmp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("gvlab_test_" + name)).string();
}

}  // namespace

TEST(Config, EmptyDocumentGivesDefaults) {
  const auto c = config_from_json(nlohmann::json::object());
  EXPECT_EQ(c.criteria.size(), 12u);
  EXPECT_EQ(c.real_ns, (std::vector<int>{4, 8, 16, 32, 64, 128, 256}));
  EXPECT_EQ(c.rate_ns.front(), 8);
  EXPECT_EQ(c.rate_ns.back(), 512);
  EXPECT_EQ(c.faber_ns.back(), 128);
  EXPECT_EQ(c.bounded_factor, 1.05);
  const std::string p = tmp_path("empty.json");
  write_text(p, "  \n");
  EXPECT_EQ(load_config(p).x_points, 21);
  std::filesystem::remove(p);
}

TEST(Config, OverridesAndRejections) {
  const auto c = config_from_json(nlohmann::json::parse(
      R"({"criteria":[1,9],"real_pairs":[["sin","cos"]],"radii":[1.5],"modulus_points":257,"seed":7})"));
  EXPECT_EQ(c.criteria, (std::vector<int>{1, 9}));
  EXPECT_EQ(c.real_pairs.at(0), (Pair{"sin", "cos"}));
  EXPECT_EQ(c.modulus_grid.points, 257);
  EXPECT_EQ(c.seed, 7u);
  EXPECT_THROW(config_from_json(nlohmann::json::parse(R"({"colour":1})")), invalid_input);
  EXPECT_THROW(config_from_json(nlohmann::json::parse(R"({"rate_ns":[8,16,32]})")), invalid_input);
  EXPECT_THROW(config_from_json(nlohmann::json::parse(R"({"real_ns":[8,8,16]})")), invalid_input);
  EXPECT_THROW(config_from_json(nlohmann::json::parse(R"({"radii":[0.5]})")), invalid_input);
  EXPECT_THROW(config_from_json(nlohmann::json::parse(R"({"criteria":[13]})")), invalid_input);
  EXPECT_THROW(config_from_json(nlohmann::json::parse(R"({"x_points":"many"})")), invalid_input);
  EXPECT_THROW(config_from_json(nlohmann::json::parse("[1,2]")), invalid_input);
  EXPECT_THROW(load_config(tmp_path("does_not_exist.json")), std::runtime_error);
}

TEST(Adjudicate, OneSided) {
  EXPECT_EQ(adjudicate(1.0, 1.0), Status::pass);
  EXPECT_EQ(adjudicate(0.0, 0.0), Status::pass);
  EXPECT_EQ(adjudicate(1.05, 1.0, 0.1), Status::inconclusive);
  EXPECT_EQ(adjudicate(1.2, 1.0, 0.1), Status::fail);
  for (double m : {0.0, 0.5, 0.999}) EXPECT_NE(adjudicate(m, 1.0, 0.0), Status::fail);
}

TEST(Report, CsvLayout) {
  const std::vector<ReportRow> rows = {{"3-c2-gv-bound[exp,sin]", 16, 0.1, 0.25, 0.5, Status::pass},
                                       {"x", 4, 0.0, 0.0, 0.0, Status::info}};
  const std::string csv = rows_to_csv(rows);
  EXPECT_EQ(csv,
            "criterion,n,x_or_r,measured,bound,ratio,status\n"
            "\"3-c2-gv-bound[exp,sin]\",16,0.10000000000000001,0.25,0.5,0.5,pass\n"
            "x,4,0,0,0,n/a,info\n");
  EXPECT_EQ(format_double(1.0 / 3.0), "0.33333333333333331");
  EXPECT_EQ(format_double(kInf), "inf");
}

TEST(Report, SuiteJsonFields) {
  SuiteResult r;
  r.verdicts.push_back({"1-gv-identity", Status::pass, 0.0, 1e-13, 0.0, "note"});
  r.rows.push_back({"1-gv-identity", 3, 0.5, 0.0, 1e-13, Status::pass});
  const auto j = suite_to_json(r);
  EXPECT_EQ(j["verdicts"][0]["status"], "pass");
  EXPECT_EQ(j["counts"]["pass"], 1);
  EXPECT_EQ(j["rows"][0]["ratio"], 0.0);
  const auto s = suite_summary(r);
  EXPECT_EQ(s["verdicts"]["1-gv-identity"], "pass");
  EXPECT_EQ(s["counts"]["fail"], 0);
}

TEST(Report, EquivalenceJsonSchema) {
  auto rep = complex_report(ComplexFamily::bernstein, {"e1", "e1"}, {8, 16, 32, 64}, {1.5});
  rep.equivalence = equivalence_sweep(ComplexFamily::bernstein, *catalog_lookup("e1").as_series,
                                      *catalog_lookup("e1").as_series, 1.5, {8, 16, 32, 64}, 0);
  const auto j = complex_report_json(rep);
  for (const char* key : {"ns", "norms", "fitted_exponent", "K_hat", "floor_norm", "rows"}) EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_NEAR(j["fitted_exponent"].get<double>(), -1.0, 1e-9);
  const std::string csv = complex_report_csv(rep);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "n,r,norm,bound,ratio,residual,n2_residual");
}

TEST(Suite, IdentityCriterionPassesWithZeroSlack) {
  const auto res = run_suite(only({1}), false);
  ASSERT_EQ(res.verdicts.size(), 1u);
  EXPECT_EQ(res.verdicts[0].criterion, "1-gv-identity");
  EXPECT_EQ(res.verdicts[0].status, Status::pass);
  EXPECT_EQ(res.verdicts[0].slack, 0.0);
  EXPECT_LE(res.verdicts[0].measured, 1e-13);
  EXPECT_NE(res.verdicts[0].note.find("exact (error 0)"), std::string::npos);
}

TEST(Suite, ConstantFunctionPassesTrivially) {
  auto cfg = only({6});
  cfg.complex_functions = {"poly:[0.5]", "poly:[-2]"};
  cfg.complex_ns = {4, 16};
  const auto res = run_suite(cfg, false);
  EXPECT_EQ(res.verdicts.at(0).status, Status::pass);
  EXPECT_EQ(res.verdicts.at(0).measured, 0.0);
  for (const auto& r : res.rows) EXPECT_LE(r.measured, 1e-14);
}

TEST(Suite, ModuleErrorsBecomeFailedVerdicts) {
  auto cfg = only({3, 1});
  cfg.real_pairs = {{"exp", "no_such_function"}};
  const auto res = run_suite(cfg, false);
  ASSERT_EQ(res.verdicts.size(), 2u);
  EXPECT_EQ(res.verdicts[0].criterion, "3-c2-gv-bound");
  EXPECT_EQ(res.verdicts[0].status, Status::fail);
  EXPECT_NE(res.verdicts[0].note.find("error"), std::string::npos);
  EXPECT_EQ(res.verdicts[1].status, Status::pass);
  EXPECT_TRUE(res.any_failed());
}

TEST(Suite, ReportsAreDeterministic) {
  auto cfg = only({2, 9, 10});
  cfg.disk_samples = 20;
  const auto a = run_suite(cfg, false), b = run_suite(cfg, false);
  EXPECT_EQ(rows_to_csv(a.rows), rows_to_csv(b.rows));
  EXPECT_EQ(suite_to_json(a).dump(), suite_to_json(b).dump());
}

TEST(Suite, FaberSweepRowsCarryBoundedSurrogate) {
  const auto s = faber_sweep("hypocycloid:2", {"e1", "e2"}, {4, 8, 16, 32}, 1.2, 1.05);
  const auto rows = faber_sweep_rows(s, "t", 1.2);
  ASSERT_EQ(rows.size(), 8u);
  for (const auto& r : rows) {
    if (r.n <= 18) EXPECT_EQ(r.status, Status::info);
    else EXPECT_EQ(r.status, Status::pass);
  }
}

TEST(Helpers, PowersOfTwoAndGrid) {
  EXPECT_EQ(powers_of_two(4, 40), (std::vector<int>{4, 8, 16, 32}));
  const auto g = unit_grid(5);
  EXPECT_EQ(g, (std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0}));
}
