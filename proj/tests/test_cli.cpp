#include <catch_amalgamated.hpp>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "starrad/starrad.hpp"

using json = nlohmann::json;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

// Runs the CLI with `args`; stderr is discarded unless `keep_stderr`.
Run run(const std::string& args, bool keep_stderr = false, const std::string& env = "") {
  const std::string cmd =
      env + (env.empty() ? "" : " ") + STARRAD_BIN + std::string(" ") + args +
      (keep_stderr ? " 2>&1" : " 2>/dev/null");
  Run r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int raw = ::pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Compares against tests/golden/<name>; STARRAD_UPDATE_GOLDEN=1 rewrites it.
void check_golden(const std::string& name, const std::string& got) {
  const std::string path = std::string(GOLDEN_DIR) + "/" + name;
  if (const char* up = std::getenv("STARRAD_UPDATE_GOLDEN"); up && std::string(up) == "1") {
    std::ofstream(path, std::ios::binary) << got;
  }
  const std::string want = read_file(path);
  INFO("golden file " << name);
  REQUIRE_FALSE(want.empty());
  CHECK(got == want);
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream ss(text);
  for (std::string line; std::getline(ss, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("table golden outputs") {
  struct Case {
    const char* args;
    const char* golden;
  };
  const Case cases[] = {
      {"table --format csv", "table_all.csv"},
      {"table --format json --compare-paper", "table_compare.json"},
      {"table --class g3 --format md --compare-paper", "table_g3.md"},
      {"table --class g2 --target starlike --alpha 0 --alpha 0.5 --format csv --compare-paper",
       "table_g2_alpha.csv"},
  };
  for (const Case& c : cases) {
    const Run r = run(c.args);
    INFO(c.args);
    CHECK(r.status == 0);
    check_golden(c.golden, r.out);
  }
}

TEST_CASE("table rows carry the expected radii") {
  const Run lem = run("table --class g1 --target lemniscate --format csv");
  REQUIRE(lem.status == 0);
  const auto rows = lines_of(lem.out);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] == "class,region,alpha,radius,sharp,method");
  CHECK(rows[1].rfind("g1,lemniscate,,0.0687", 0) == 0);

  const Run sine = run("table --class g3 --target sine");
  REQUIRE(sine.status == 0);
  const json doc = json::parse(sine.out);
  REQUIRE(doc["rows"].size() == 1);
  CHECK(std::abs(doc["rows"][0]["radius"].get<double>() - 0.2018) < 5e-5);
  CHECK(doc["rows"][0]["sharp"] == true);
  CHECK_FALSE(doc["rows"][0].contains("paper_value"));
}

TEST_CASE("published comparison annotates the misprinted pair") {
  const Run r = run("table --class g2 --target reverse-lemniscate --compare-paper");
  CHECK(r.status == 0);
  const json row = json::parse(r.out)["rows"][0];
  CHECK(row["paper_value"] == 0.0567);
  CHECK(std::abs(row["abs_diff"].get<double>() - 3.3e-4) < 2e-5);
  CHECK(row["annotation"].get<std::string>().rfind("paper-typo", 0) == 0);
}

TEST_CASE("published comparison passes for every tabulated radius") {
  const Run r = run("table --compare-paper --format json");
  CHECK(r.status == 0);
  int annotated = 0;
  const json doc = json::parse(r.out);
  for (const auto& row : doc["rows"]) {
    REQUIRE(row.contains("abs_diff"));
    if (row.contains("annotation")) {
      ++annotated;
    } else {
      CHECK(row["abs_diff"].get<double>() < 5e-4);
    }
  }
  CHECK(annotated == 2);
  const Run alpha = run("table --class g2 --target starlike --alpha 0.5 --compare-paper");
  CHECK(alpha.status == 0);
  CHECK(json::parse(alpha.out)["rows"][0].contains("annotation"));
}

TEST_CASE("usage errors exit with status 2") {
  CHECK(run("").status == 2);
  CHECK(run("bogus").status == 2);
  CHECK(run("table --class g4").status == 2);
  CHECK(run("table --target moon").status == 2);
  CHECK(run("table --format xml").status == 2);
  CHECK(run("table --alpha 1.5").status == 2);
  CHECK(run("table --alpha nope").status == 2);
  CHECK(run("verify --suite everything").status == 2);
  CHECK(run("verify --samples 10").status == 2);
  CHECK(run("dump --what region").status == 2);
  CHECK(run("dump --what trajectory --class g1").status == 2);
  CHECK(run("dump --what trajectory --class g1 --r 1.2").status == 2);
  CHECK(run("dump --what region --target sine --points 4").status == 2);
  CHECK(run("dump --what nothing --target sine").status == 2);
  CHECK(run("envelope --class g2").status == 2);
  CHECK(run("envelope --class all --target sine").status == 2);
  CHECK(run("envelope --class g2 --target sine --eps-grid 1").status == 2);
}

TEST_CASE("help exits cleanly") {
  const Run r = run("--help");
  CHECK(r.status == 0);
  CHECK(r.out.find("table") != std::string::npos);
  CHECK(run("table --help").status == 0);
}

TEST_CASE("region dump") {
  const Run r = run("dump --what region --target nephroid --points 512");
  REQUIRE(r.status == 0);
  const auto rows = lines_of(r.out);
  REQUIRE(rows.size() == 513);
  CHECK(rows[0] == "t,re,im");
  const starrad::Region nephroid = starrad::Region::of(starrad::RegionKind::Nephroid);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    double t = 0, re = 0, im = 0;
    REQUIRE(std::sscanf(rows[i].c_str(), "%lf,%lf,%lf", &t, &re, &im) == 3);
    CHECK(std::abs(starrad::boundary_residual(nephroid, {re, im})) < 1e-9);
  }
  check_golden("dump_nephroid_64.csv", run("dump --what region --target nephroid --points 64").out);
  check_golden("dump_parabolic_32.csv",
               run("dump --what region --target parabolic --points 32").out);
}

TEST_CASE("trajectory dump at the sharp radius touches the lemniscate") {
  const double R = starrad::radius_for_region(starrad::ClassId::G1,
                                              starrad::Region::of(starrad::RegionKind::Lemniscate))
                       .value;
  char args[128];
  std::snprintf(args, sizeof args, "dump --what trajectory --class g1 --r %.15f --points 512", R);
  const Run r = run(args);
  REQUIRE(r.status == 0);
  const auto rows = lines_of(r.out);
  REQUIRE(rows.size() == 513);
  const starrad::Region lem = starrad::Region::of(starrad::RegionKind::Lemniscate);
  double closest = 1.0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    double t = 0, re = 0, im = 0;
    REQUIRE(std::sscanf(rows[i].c_str(), "%lf,%lf,%lf", &t, &re, &im) == 3);
    CHECK(starrad::boundary_residual(lem, {re, im}) <= 1e-9);
    closest = std::min(closest, std::abs(starrad::boundary_residual(lem, {re, im})));
  }
  CHECK(closest < 1e-9);
  check_golden("dump_trajectory_g1.csv",
               run("dump --what trajectory --class g1 --r 0.0687 --points 64").out);
}

TEST_CASE("G2 trajectory at r = 0.25 leaves every region") {
  const Run r = run("dump --what trajectory --class g2 --r 0.25 --points 512");
  REQUIRE(r.status == 0);
  std::vector<starrad::Complex> pts;
  for (const auto& row : lines_of(r.out)) {
    double t = 0, re = 0, im = 0;
    if (std::sscanf(row.c_str(), "%lf,%lf,%lf", &t, &re, &im) == 3) pts.emplace_back(re, im);
  }
  REQUIRE(pts.size() == 512);
  std::vector<starrad::Region> regions{starrad::Region::starlike(0.0)};
  for (auto kind : starrad::kNamedRegions) regions.push_back(starrad::Region::of(kind));
  for (const auto& region : regions) {
    bool exits = false;
    for (auto w : pts) exits = exits || !starrad::contains(region, w);
    INFO(starrad::to_string(region.kind));
    CHECK(exits);
  }
}

TEST_CASE("verify reports failures with exit status 1") {
  const Run r = run("verify --suite sharpness");
  CHECK(r.status == 1);
  const json doc = json::parse(r.out);
  CHECK(doc["suites"]["sharpness"]["checked"] == 28);
  CHECK(doc["pass"] == false);
  // Only the reverse lemniscate pairs miss the axis touch.
  REQUIRE(doc["failures"].size() == 3);
  for (const auto& f : doc["failures"]) {
    CHECK(f["region"] == "reverse-lemniscate");
    CHECK(f["residual"].get<double>() > 1e-2);
  }
  const Run with_err = run("verify --suite sharpness", true);
  CHECK(with_err.out.find("FAIL sharpness g1 reverse-lemniscate") != std::string::npos);
  check_golden("verify_sharpness.json", r.out);
}

TEST_CASE("verify suites that pass exit 0") {
  const Run shah = run("verify --suite shah");
  CHECK(shah.status == 0);
  const json s = json::parse(shah.out)["suites"]["shah"];
  for (const auto& row : s["results"]) CHECK(row["max_excess"].get<double>() <= 1e-10);
  check_golden("verify_shah.json", shah.out);

  const Run cont = run("verify --suite containment --samples 1000");
  CHECK(cont.status == 0);
  const json c = json::parse(cont.out)["suites"]["containment"];
  CHECK(c["checked"] == 33);
  for (const auto& row : c["results"]) {
    CHECK(row["inside_at_0.99R"] == true);
    CHECK_FALSE(row["witness_at_1.05R"].is_null());
  }

  const Run xval = run("verify --suite oracle-xval --xval-points 300");
  CHECK(xval.status == 0);
  CHECK(json::parse(xval.out)["suites"]["oracle-xval"]["results"].size() == 9);
}

TEST_CASE("envelope output") {
  const Run r = run("envelope --class g1 --target parabolic --eps-grid 16 --r-tol 1e-9");
  REQUIRE(r.status == 0);
  const json doc = json::parse(r.out);
  CHECK(std::abs(doc["r_upper"].get<double>() - (std::sqrt(37.0) - 6.0)) < 1e-6);
  CHECK(doc["witness"]["eps_angles"].size() == 3);
  check_golden("envelope_g1_parabolic.json", r.out);

  const Run g2 = run("envelope --class g2 --target rational --eps-grid 32");
  REQUIRE(g2.status == 0);
  const json e = json::parse(g2.out);
  CHECK(std::abs(e["r_upper"].get<double>() - 0.0345) < 2e-3);
  CHECK(e["conjectured_radius"] == 0.0345);
  CHECK(e["proven_radius"].get<double>() <= e["r_upper"].get<double>());
}

TEST_CASE("output is independent of STARRAD_THREADS") {
  const std::string args = "envelope --class g2 --target lune --eps-grid 24";
  const Run one = run(args, false, "STARRAD_THREADS=1");
  const Run many = run(args, false, "STARRAD_THREADS=7");
  CHECK(one.status == 0);
  CHECK(one.out == many.out);
}

TEST_CASE("output can go to a file") {
  const std::string path = "starrad_cli_test_out.csv";
  const Run r = run("table --class g1 --target sine --format csv --out " + path);
  CHECK(r.status == 0);
  CHECK(r.out.empty());
  CHECK(read_file(path) == run("table --class g1 --target sine --format csv").out);
  std::remove(path.c_str());
}
