#include "baumkuchen/cli.hpp"
#include "baumkuchen/error.hpp"
#include "baumkuchen/io.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace baumkuchen;

namespace {

struct CliRun {
    int code = -1;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args)
{
    args.insert(args.begin(), "baumkuchen");
    std::ostringstream out;
    std::ostringstream err;
    CliRun r;
    r.code = run_cli(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::string temp_path(const std::string& name)
{
    return (std::filesystem::temp_directory_path() / ("baumkuchen_test_" + name)).string();
}

void write(const std::string& path, const std::string& text)
{
    std::ofstream(path, std::ios::binary) << text;
}

std::string read(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

const std::vector<std::string> reference = {"--outer", "2", "--inner", "1", "--point", "0.4,0.3", "--cuts", "4",
                                            "--phase", "0.2"};

std::vector<std::string> with(std::vector<std::string> head, const std::vector<std::string>& tail)
{
    head.insert(head.end(), tail.begin(), tail.end());
    return head;
}

} // namespace

TEST(ConfigJson, ParsesAllFields)
{
    const ConfigFields f = parse_config_json(
        R"({"center":[1,2],"outer_radius":3,"inner_radius":1.5,"point":[1.5,2],"cuts":6,"phase":0.25})");
    EXPECT_EQ(f.center->x, 1.0);
    EXPECT_EQ(f.center->y, 2.0);
    EXPECT_EQ(*f.outer_radius, 3.0);
    EXPECT_EQ(*f.inner_radius, 1.5);
    EXPECT_EQ(f.point->x, 1.5);
    EXPECT_EQ(*f.cuts, 6);
    EXPECT_EQ(*f.phase, 0.25);
}

TEST(ConfigJson, RejectsUnknownKeysAndBadTypes)
{
    EXPECT_THROW((void)parse_config_json(R"({"outer_radius":1,"colour":"red"})"), Error);
    EXPECT_THROW((void)parse_config_json(R"({"outer_radius":"1"})"), Error);
    EXPECT_THROW((void)parse_config_json(R"({"point":[1]})"), Error);
    EXPECT_THROW((void)parse_config_json(R"({"cuts":4.5})"), Error);
    EXPECT_THROW((void)parse_config_json(R"([1,2])"), Error);
    EXPECT_THROW((void)parse_config_json("{"), Error);
}

TEST(ReportJson, StableKeyOrder)
{
    VerificationReport r;
    r.identity = "baumkuchen";
    r.residuals = {{"a", 0.5}};
    r.tolerance = 1e-10;
    r.passed = false;
    r.config = {{0, 0}, 2.0, 1.0, {0.25, 0.5}, 4, Angle{0.0}};
    EXPECT_EQ(to_json(r).dump(),
              R"({"identity":"baumkuchen","passed":false,"tolerance":1e-10,"residuals":[{"label":"a","value":0.5}],)"
              R"("config":{"center":[0.0,0.0],"outer_radius":2.0,"inner_radius":1.0,"point":[0.25,0.5],"cuts":4,"phase":0.0}})");
}

TEST(Cli, VerifyPasses)
{
    const CliRun r = run(with({"verify", "--theorem", "baumkuchen", "--format", "json"}, reference));
    EXPECT_EQ(r.code, exit_ok) << r.err;
    const Json doc = Json::parse(r.out);
    EXPECT_TRUE(doc["passed"].get<bool>());
    for (const auto& res : doc["residuals"]) {
        EXPECT_LT(std::abs(res["value"].get<double>()), 1e-10);
    }
    EXPECT_EQ(doc.begin().key(), "identity");
}

TEST(Cli, VerifyFailsWithImpossibleTolerance)
{
    const CliRun r = run(with({"verify", "--theorem", "baumkuchen", "--tol", "1e-20", "--format", "json"}, reference));
    EXPECT_EQ(r.code, exit_failed);
    EXPECT_FALSE(Json::parse(r.out)["passed"].get<bool>());
}

TEST(Cli, InvalidCuts)
{
    const CliRun r = run({"verify", "--theorem", "baumkuchen", "--outer", "2", "--inner", "1", "--cuts", "3"});
    EXPECT_EQ(r.code, exit_invalid_input);
    EXPECT_NE(r.err.find("cuts must be even and ≥ 4"), std::string::npos) << r.err;
}

TEST(Cli, InvalidInputPaths)
{
    EXPECT_EQ(run({"verify", "--theorem", "nope", "--outer", "1", "--cuts", "4"}).code, exit_invalid_input);
    EXPECT_EQ(run({"slices", "--config", "/nonexistent/cfg.json"}).code, exit_invalid_input);
    EXPECT_EQ(run({"slices", "--outer", "1", "--cuts", "4"}).code, exit_invalid_input); // no inner radius
    EXPECT_EQ(run({"slices", "--outer", "1", "--inner", "1", "--point", "0.1;0", "--cuts", "4"}).code,
              exit_invalid_input);
    EXPECT_EQ(run({}).code, exit_invalid_input);
    EXPECT_EQ(run({"--help"}).code, exit_ok);
}

TEST(Cli, NumericFailureExitCode)
{
    const CliRun r = run(with({"oracle", "--samples", "10000", "--quad-tol", "1e-300"}, reference));
    EXPECT_EQ(r.code, exit_numeric) << r.err;
}

TEST(Cli, PizzaShares)
{
    const CliRun r = run({"pizza", "--radius", "1", "--point", "0.35,0.2", "--cuts", "4", "--format", "json"});
    ASSERT_EQ(r.code, exit_ok) << r.err;
    const Json doc = Json::parse(r.out);
    EXPECT_EQ(doc["people"].get<int>(), 2);
    for (const auto& person : doc["shares"]) {
        EXPECT_NEAR(person["total"].get<double>(), pi / 2, 1e-10);
    }
    EXPECT_EQ(doc["shares"][0]["slices"], Json::parse("[1,3,5,7]"));
    EXPECT_EQ(run({"pizza", "--radius", "1", "--cuts", "6"}).code, exit_invalid_input);
}

TEST(Cli, VerifyEveryIdentity)
{
    EXPECT_EQ(run({"verify", "--theorem", "pizza", "--radius", "1", "--point", "0.35,0.2", "--cuts", "8"}).code,
              exit_ok);
    EXPECT_EQ(run({"verify", "--theorem", "lemma2", "--outer", "2", "--inner", "1", "--point", "1,0", "--cuts", "6"})
                  .code,
              exit_ok);
    EXPECT_EQ(run({"verify", "--theorem", "lemma3", "--outer", "2", "--inner", "1", "--point", "0,1", "--cuts", "6"})
                  .code,
              exit_ok);
    EXPECT_EQ(run(with({"verify", "--theorem", "decompose"}, reference)).code, exit_ok);
    EXPECT_EQ(run(with({"verify", "--theorem", "lemma2"}, reference)).code, exit_invalid_input);
}

TEST(Cli, SlicesJsonAndLabels)
{
    const CliRun r = run(with({"slices", "--format", "json"}, reference));
    ASSERT_EQ(r.code, exit_ok) << r.err;
    const Json doc = Json::parse(r.out);
    EXPECT_NEAR(doc["totals"]["outer_slices"].get<double>(), 4 * pi, 1e-12);
    EXPECT_EQ(doc["pieces"].size(), 8u);
    EXPECT_EQ(doc["labels"], Json::parse("[1,2,3,4,5,6,7,8]"));

    const CliRun cw = run(with({"slices", "--format", "json", "--clockwise"}, reference));
    EXPECT_EQ(Json::parse(cw.out)["labels"], Json::parse("[1,8,7,6,5,4,3,2]"));
    EXPECT_EQ(run(with({"slices"}, reference)).code, exit_ok);
}

TEST(Cli, ConfigFileWithFlagOverride)
{
    const std::string path = temp_path("cfg.json");
    write(path, R"({"center":[0,0],"outer_radius":2,"inner_radius":1,"point":[0.4,0.3],"cuts":4,"phase":0.2})");
    const CliRun from_file = run({"slices", "--config", path, "--format", "json"});
    ASSERT_EQ(from_file.code, exit_ok) << from_file.err;
    EXPECT_EQ(from_file.err, "");
    EXPECT_EQ(from_file.out, run(with({"slices", "--format", "json"}, reference)).out);

    const CliRun overridden = run({"slices", "--config", path, "--cuts", "6", "--format", "json"});
    ASSERT_EQ(overridden.code, exit_ok);
    EXPECT_NE(overridden.err.find("warning: --cuts"), std::string::npos);
    EXPECT_EQ(Json::parse(overridden.out)["config"]["cuts"].get<int>(), 6);

    write(path, R"({"outer_radius":2,"bogus":1})");
    EXPECT_EQ(run({"slices", "--config", path}).code, exit_invalid_input);
    std::filesystem::remove(path);
}

TEST(Cli, DegreesSwitch)
{
    const CliRun deg = run({"slices", "--outer", "2", "--inner", "1", "--cuts", "4", "--phase", "90", "--degrees",
                         "--format", "json"});
    ASSERT_EQ(deg.code, exit_ok);
    EXPECT_NEAR(Json::parse(deg.out)["config"]["phase"].get<double>(), pi / 2, 1e-15);
}

TEST(Cli, OracleDeterministicAcrossThreads)
{
    const auto args = with({"oracle", "--samples", "200000", "--seed", "7", "--format", "json"}, reference);
    const CliRun one = run(with(args, {"--threads", "1"}));
    ASSERT_EQ(one.code, exit_ok) << one.err;
    EXPECT_EQ(one.out, run(with(args, {"--threads", "2"})).out);
    EXPECT_EQ(one.out, run(with(args, {"--threads", "8"})).out);
    const Json doc = Json::parse(one.out);
    EXPECT_EQ(doc["seed"].get<int>(), 7);
    EXPECT_LT(doc["max_quad_error"].get<double>(), 1e-9);
    EXPECT_LT(doc["max_abs_z"].get<double>(), 6.0);
}

TEST(Cli, OracleSeedFromEnvironment)
{
    const auto args = with({"oracle", "--samples", "20000", "--format", "json"}, reference);
    ::setenv(seed_env_var, "42", 1);
    const CliRun env = run(args);
    ::unsetenv(seed_env_var);
    ASSERT_EQ(env.code, exit_ok) << env.err;
    EXPECT_EQ(Json::parse(env.out)["seed"].get<int>(), 42);
    EXPECT_EQ(env.out, run(with(args, {"--seed", "42"})).out);
    EXPECT_EQ(Json::parse(run(args).out)["seed"].get<int>(), 1);
}

TEST(Cli, RenderToFile)
{
    const std::string path = temp_path("fig.svg");
    const CliRun r = run(with({"render", "--out", path}, reference));
    ASSERT_EQ(r.code, exit_ok) << r.err;
    EXPECT_EQ(r.out, "");
    const std::string svg = read(path);
    EXPECT_EQ(svg, run(with({"render"}, reference)).out);
    EXPECT_EQ(svg.rfind("<?xml", 0), 0u);
    std::filesystem::remove(path);
}
