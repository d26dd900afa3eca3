#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "wellspec/cli.hpp"
#include "wellspec/report.hpp"

using namespace wellspec;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string first_line(const std::string& text) { return text.substr(0, text.find('\n') + 1); }

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);  // header
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    rows.push_back(cells);
  }
  return rows;
}

fs::path scratch_dir() {
  const auto dir = fs::temp_directory_path() / "wellspec_test_cli";
  fs::create_directories(dir);
  return dir;
}

const fs::path golden = WELLSPEC_GOLDEN_DIR;

}  // namespace

TEST_CASE("golden CSV headers") {
  CHECK(first_line(run_cli({"dispersion-curve", "--rho", "2/5"}).out) ==
        slurp(golden / "dispersion_header.txt"));
  CHECK(first_line(run_cli({"sweep-ground", "--f-list", "0.1", "--rho-steps", "3"}).out) ==
        slurp(golden / "sweep_header.txt"));
  CHECK(first_line(run_cli({"sweep-ground", "--f-list", "0.1", "--rho-steps", "3", "--with-asymptote"}).out) ==
        slurp(golden / "sweep_asymptote_header.txt"));
  CHECK(first_line(run_cli({"spectrum", "--rho", "1/2", "--f", "0.3"}).out) ==
        slurp(golden / "spectrum_header.txt"));
}

TEST_CASE("exit codes") {
  SUBCASE("help") {
    const auto r = run_cli({"--help"});
    CHECK(r.code == cli::kExitOk);
    CHECK(r.out.find("sweep-ground") != std::string::npos);
    CHECK(run_cli({"spectrum", "--help"}).code == cli::kExitOk);
  }
  SUBCASE("usage errors") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {},
             {"spectrum", "--rho", "1/2"},
             {"spectrum", "--rho", "3/2", "--f", "1"},
             {"spectrum", "--rho-real", "1.0", "--f", "1"},
             {"spectrum", "--rho", "1/3", "--rho-real", "0.3", "--f", "1"},
             {"spectrum", "--rho", "1/3", "--f", "0"},
             {"spectrum", "--rho", "1/3", "--f", "1", "--kmax", "-2"},
             {"spectrum", "--rho", "1/3", "--f", "1", "--format", "xml"},
             {"spectrum", "--rho", "1/3", "--f", "1", "--bogus"},
             {"sweep-ground", "--signs", "sideways"},
             {"sweep-ground", "--rho-steps", "1"},
             {"sweep-ground", "--f-list", "0.1,abc"},
             {"check", "--rho", "1/2", "--f", "0.2", "--count", "0"},
             {"no-such-command"}}) {
      CAPTURE(args.size());
      const auto r = run_cli(args);
      CHECK(r.code == cli::kExitUsage);
      CHECK_FALSE(r.err.empty());
    }
  }
  SUBCASE("unreduced fractions are reduced") {
    CHECK(run_cli({"spectrum", "--rho", "2/4", "--f", "1"}).out ==
          run_cli({"spectrum", "--rho", "1/2", "--f", "1"}).out);
  }
  SUBCASE("solver failure carries the bracket") {
    const auto r = run_cli({"spectrum", "--rho", "1/2", "--f", "1e-300"});
    CHECK(r.code == cli::kExitSolver);
    CHECK(r.err.find("bracket") != std::string::npos);
  }
  SUBCASE("check failure is distinct") {
    const auto r = run_cli({"check", "--rho", "1/2", "--f", "-0.2", "--perturb", "1e-3"});
    CHECK(r.code == cli::kExitCheck);
    CHECK(r.out.find("jump_defect_max") != std::string::npos);
    CHECK(r.out.find("FAIL") != std::string::npos);
  }
}

TEST_CASE("spectrum examples") {
  SUBCASE("rho = 2/5, f = 0.001 up to kL/pi = 9") {
    const auto r = run_cli({"spectrum", "--rho", "2/5", "--f", "0.001", "--kmax", "9"});
    REQUIRE(r.code == 0);
    bool nodal5 = false, near_2_5 = false, near_5_3 = false;
    for (const auto& row : csv_rows(r.out)) {
      if (row[0] == "Nodal") {
        CHECK(row[1] == "5");
        nodal5 = nodal5 || std::stod(row[4]) == 5.0;
      }
      if (row[0] == "OrdinaryPositive") {
        const double x = std::stod(row[4]);
        near_2_5 = near_2_5 || std::abs(x - 2.5) < 5e-3;
        near_5_3 = near_5_3 || std::abs(x - 5.0 / 3.0) < 5e-3;
        CHECK(x <= 9.0);
      }
    }
    CHECK(nodal5);
    CHECK(near_2_5);
    CHECK(near_5_3);
  }
  SUBCASE("rho = 1/2, f = 0.1 leads with the bound state") {
    const auto r = run_cli({"spectrum", "--rho", "1/2", "--f", "0.1"});
    REQUIRE(r.code == 0);
    const auto rows = csv_rows(r.out);
    REQUIRE(!rows.empty());
    CHECK(rows.front()[0] == "OrdinaryNegative");
    CHECK(std::stod(rows.front()[6]) == doctest::Approx(-1.0).epsilon(1e-3));
  }
  SUBCASE("rho = 0.415 declared generic has no nodal rows") {
    const auto r = run_cli({"spectrum", "--rho-real", "0.415", "--f", "0.001", "--kmax", "9"});
    REQUIRE(r.code == 0);
    const auto rows = csv_rows(r.out);
    CHECK(rows.size() > 5);
    for (const auto& row : rows) CHECK(row[0] != "Nodal");
  }
  SUBCASE("count and JSON") {
    const auto r = run_cli({"spectrum", "--rho", "1/3", "--f", "-0.4", "--count", "4", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto report = report_from_json(r.out);
    CHECK(report.entries.size() == 4);
    CHECK(report.config.position == "1/3");
    CHECK_FALSE(report.elapsed_seconds.has_value());
    const auto timed = run_cli({"spectrum", "--rho", "1/3", "--f", "-0.4", "--format", "json", "--timing"});
    CHECK(report_from_json(timed.out).elapsed_seconds.has_value());
  }
}

TEST_CASE("dispersion curve examples") {
  auto value_at = [](const std::string& csv, double x) -> std::vector<std::string> {
    for (const auto& row : csv_rows(csv)) {
      if (std::abs(std::stod(row[0]) - x) < 1e-12) return row;
    }
    FAIL("no sample at " << x);
    return {};
  };
  const auto fifths = run_cli({"dispersion-curve", "--rho", "2/5", "--kmax", "9"});
  REQUIRE(fifths.code == 0);
  const auto at5 = value_at(fifths.out, 5.0);
  CHECK(at5[2] == "0");
  CHECK(std::isfinite(std::stod(at5[1])));

  const auto generic = run_cli({"dispersion-curve", "--rho-real", "0.415", "--kmax", "9"});
  REQUIRE(generic.code == 0);
  CHECK(value_at(generic.out, 5.0)[2] == "1");
  CHECK(value_at(generic.out, 5.0)[1].empty());

  const auto half = run_cli({"dispersion-curve", "--rho", "1/2", "--kmax", "1", "--samples-per-pi", "100"});
  const auto rows = csv_rows(half.out);
  REQUIRE(rows.size() == 101);
  CHECK(rows.front()[1] == "0");
  double prev = -1.0;
  for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
    CHECK(rows[i][2] == "0");
    const double v = std::stod(rows[i][1]);
    CHECK(v > prev);
    prev = v;
  }
  CHECK(rows.back()[2] == "1");
}

TEST_CASE("sweep anchors and ordering") {
  const auto r = run_cli({"sweep-ground", "--f-list", "0.5,0.1", "--signs", "both"});
  REQUIRE(r.code == 0);
  const auto rows = csv_rows(r.out);
  REQUIRE(rows.size() == 4 * 199);
  CHECK(rows.front()[0] == "0.1");
  CHECK(rows.front()[1] == "attract");
  CHECK(rows[199][1] == "repel");
  CHECK(rows[2 * 199][0] == "0.5");
  for (const auto& row : rows) {
    const double rho = std::stod(row[2]);
    const double e = std::stod(row[3]);
    if (rho == 0.5 && row[0] == "0.5" && row[1] == "attract") CHECK(e == 0.0);
    if (rho == 0.5 && row[0] == "0.1" && row[1] == "attract") CHECK(e == doctest::Approx(-1.0).epsilon(1e-3));
    if (std::abs(rho - 0.005) < 1e-12 && row[0] == "0.1") {
      CHECK(e == doctest::Approx(kPi * kPi * 0.01).epsilon(0.02));
    }
  }
}

TEST_CASE("sweep grid") {
  const auto rho = cli::sweep_positions(199);
  REQUIRE(rho.size() == 199);
  CHECK(rho[99] == 0.5);
  CHECK(rho.front() == doctest::Approx(0.005));
  CHECK(rho.back() == doctest::Approx(0.995));
  for (std::size_t i = 0; i < rho.size(); ++i) CHECK(rho[i] + rho[198 - i] == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("check examples") {
  CHECK(run_cli({"check", "--rho", "1/2", "--f", "-0.2", "--count", "8"}).code == cli::kExitOk);
  const auto r = run_cli({"check", "--rho", "2/5", "--f", "0.01", "--count", "8"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.find("FAIL") == std::string::npos);

  const auto path = scratch_dir() / "check.json";
  const auto with_json =
      run_cli({"check", "--rho-real", "0.3183", "--f", "1", "--json", path.string()});
  CHECK(with_json.code == cli::kExitOk);
  const auto report = report_from_json(slurp(path));
  CHECK(report.command == "check");
  CHECK(report.all_passed());
  CHECK(report.checks.size() >= 4 + 8);
}

TEST_CASE("determinism: identical flags give identical files") {
  const auto dir = scratch_dir();
  for (const auto& base : std::vector<std::vector<std::string>>{
           {"sweep-ground", "--f-list", "0.1,0.4,0.5", "--with-asymptote"},
           {"spectrum", "--rho-real", "0.415", "--f", "-0.3", "--kmax", "30", "--format", "json"},
           {"dispersion-curve", "--rho", "2/5"}}) {
    std::vector<std::string> contents;
    for (int i = 0; i < 2; ++i) {
      auto args = base;
      const auto path = dir / ("det_" + std::to_string(i) + ".out");
      args.insert(args.end(), {"--out", path.string()});
      REQUIRE(run_cli(args).code == 0);
      contents.push_back(slurp(path));
    }
    CHECK(contents[0] == contents[1]);
    CHECK(!contents[0].empty());
  }
}

TEST_CASE("plot script references the CSVs") {
  const auto r = run_cli({"plot-script", "--dispersion", "a.csv", "--sweep", "b.csv"});
  CHECK(r.code == 0);
  CHECK(r.out.find("'a.csv'") != std::string::npos);
  CHECK(r.out.find("'b.csv'") != std::string::npos);
}

TEST_CASE("format_number is shortest round-trip") {
  CHECK(cli::format_number(0.1) == "0.1");
  CHECK(cli::format_number(5.0) == "5");
  for (double x : {kPi, 1e-300, -2.5e17, 0.30000000000000004}) {
    CHECK(std::stod(cli::format_number(x)) == x);
  }
}
