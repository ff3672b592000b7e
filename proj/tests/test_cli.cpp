#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <supercong/cli.hpp>
#include <supercong/report.hpp>

using namespace supercong;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_dir() {
  auto dir = std::filesystem::temp_directory_path() / ("supercong_cli_test_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  return dir;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::vector<VerificationRecord> sample_records() {
  SuiteConfig config;
  config.pmin = 5;
  config.pmax = 11;
  config.cases = {CaseKind::Eq0, CaseKind::Conj1, CaseKind::ComIden0, CaseKind::ExactDivP, CaseKind::GesselP544};
  config.rs = {1, 2};
  return run_suite(config);
}

}  // namespace

TEST(Report, JsonRoundTripIsByteIdentical) {
  auto entries = to_entries(sample_records());
  const std::string text = write_json(entries);
  auto back = read_json(text);
  EXPECT_EQ(back, entries);
  EXPECT_EQ(write_json(back), text);
  EXPECT_EQ(text.find('.'), std::string::npos) << "no floats in reports";
}

TEST(Report, JsonFieldOrderAndTypes) {
  auto entries = to_entries({verify_congruence_case({CaseKind::Eq0}, 5)});
  const std::string text = write_json(entries);
  const std::string expected =
      "[\n  {\n    \"case\": \"EQ0\",\n    \"p\": 5,\n    \"param\": 0,\n    \"required\": \"v>=3\",\n"
      "    \"achieved\": \"3\",\n    \"lhs\": \"435/512\",\n    \"rhs\": \"5\",\n    \"pass\": true,\n"
      "    \"conjectural\": false\n  }\n]\n";
  EXPECT_EQ(text, expected);
}

TEST(Report, CsvRoundTrip) {
  auto entries = to_entries(sample_records());
  ReportEntry odd;
  odd.case_name = "EQ0";
  odd.achieved = "error: a, \"quoted\" message";
  entries.push_back(odd);
  const std::string text = write_csv(entries);
  EXPECT_EQ(text.substr(0, text.find('\n')), kCsvHeader);
  auto back = read_csv(text);
  EXPECT_EQ(back, entries);
  EXPECT_EQ(write_csv(back), text);
}

TEST(Report, MalformedInputs) {
  EXPECT_THROW(read_json("{"), Error);
  EXPECT_THROW(read_json("{}"), Error);
  EXPECT_THROW(read_json("[{\"case\": \"EQ0\"}]"), Error);
  EXPECT_THROW(read_csv("wrong,header\n"), Error);
}

TEST(Cli, VerifyTwoRecords) {
  CliResult r = run({"verify", "--cases", "eq0", "--pmin", "5", "--pmax", "7", "--out", "-"});
  EXPECT_EQ(r.code, 0) << r.err;
  auto entries = read_json(r.out);
  ASSERT_EQ(entries.size(), 2u);
  for (const auto& e : entries) EXPECT_TRUE(e.pass);
  EXPECT_NE(r.err.find("congruence: 2 records, 2 pass, 0 fail"), std::string::npos);
}

TEST(Cli, EmptyRangeWarns) {
  CliResult r = run({"verify", "--cases", "all", "--pmax", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.err.find("warning"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({"verify", "--pmin", "7", "--pmax", "5"}).code, 2);
  EXPECT_EQ(run({"verify", "--cases", "bogus"}).code, 2);
  EXPECT_EQ(run({"verify", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"verify", "--r", "0"}).code, 2);
  EXPECT_EQ(run({"verify", "--pmin", "five"}).code, 2);
  EXPECT_EQ(run({"verify", "--unknown"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"coeffs"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, IoError) {
  CliResult r = run({"verify", "--cases", "eq0", "--pmax", "7", "--out", "/nonexistent-dir/x/report.json"});
  EXPECT_EQ(r.code, 3);
}

TEST(Cli, WritesJsonAndCsvFiles) {
  auto dir = temp_dir();
  auto json_path = dir / "report.json";
  auto csv_path = dir / "report.csv";
  EXPECT_EQ(run({"verify", "--cases", "exact,THM3", "--pmax", "13", "--out", json_path.string()}).code, 0);
  EXPECT_EQ(run({"verify", "--cases", "exact,THM3", "--pmax", "13", "--out", csv_path.string(), "--format", "csv"})
                .code,
            0);
  auto from_json = read_json(slurp(json_path));
  auto from_csv = read_csv(slurp(csv_path));
  EXPECT_EQ(from_json, from_csv);
  EXPECT_EQ(from_json.size(), 300u + 5 * 4 + 4);  // 6 identities x 50 draws, 5 exact cases and THM3 at 4 primes
  std::filesystem::remove_all(dir);
}

TEST(Cli, CaseClassesSelect) {
  CliResult r = run({"verify", "--cases", "series", "--pmax", "7", "--out", "-"});
  EXPECT_EQ(r.code, 0);
  for (const auto& e : read_json(r.out)) {
    EXPECT_EQ(case_info(*case_from_name(e.case_name)).cls, CaseClass::Series);
  }
}

TEST(Cli, HeckeNoteForSecondPowers) {
  CliResult r = run({"verify", "--cases", "conj1", "--pmax", "7", "--r", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("Hecke"), std::string::npos);
}

TEST(Cli, Coeffs) {
  CliResult r = run({"coeffs", "--n", "9"});
  EXPECT_EQ(r.code, 0);
  for (const char* line : {"3 -4\n", "5 -2\n", "7 24\n", "9 -11\n", "2 0\n"}) {
    EXPECT_NE(r.out.find(line), std::string::npos) << line;
  }
  EXPECT_EQ(run({"coeffs", "--n", "1"}).out, "1 1\n");
  EXPECT_EQ(run({"coeffs", "--n", "0"}).code, 2);
  EXPECT_EQ(run({"coeffs", "--n", "-4"}).code, 2);
  EXPECT_EQ(run({"coeffs", "--n", "13", "--primes-only"}).out, "2 0\n3 -4\n5 -2\n7 24\n11 -44\n13 22\n");
}

TEST(Cli, CoeffsBudget) {
  ::setenv("SUPERCONG_BUDGET", "20", 1);
  EXPECT_EQ(run({"coeffs", "--n", "21"}).code, 2);
  EXPECT_EQ(run({"coeffs", "--n", "20"}).code, 0);
  ::unsetenv("SUPERCONG_BUDGET");
}

TEST(Cli, ExitCodeIsFunctionOfRecords) {
  VerificationRecord ok;
  ok.pass = true;
  VerificationRecord conjectural_fail;
  conjectural_fail.conjectural = true;
  VerificationRecord fail;
  EXPECT_EQ(cli::exit_code_for({}), 0);
  EXPECT_EQ(cli::exit_code_for({ok, conjectural_fail}), 0);
  EXPECT_EQ(cli::exit_code_for({ok, fail}), 1);
}
