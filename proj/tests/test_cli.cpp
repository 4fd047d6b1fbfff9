#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "edalab/cli.hpp"
#include "edalab/csv.hpp"

namespace fs = std::filesystem;

namespace {

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

CliResult cli(const std::vector<std::string>& args) {
  std::vector<const char*> argv;
  argv.push_back("eda_lab");
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  CliResult r;
  r.code = edalab::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path tmp_file(const std::string& name) {
  return fs::temp_directory_path() / ("edalab_test_" + name);
}

void write_file(const fs::path& p, const std::string& content) {
  std::ofstream out(p, std::ios::binary);
  out << content;
}

int count_data_rows(const std::string& csv) {
  std::istringstream in(csv);
  std::string line;
  int rows = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      header_seen = true;
      continue;
    }
    ++rows;
  }
  return rows;
}

}  // namespace

TEST_CASE("run: determinism and exit code 0 on hit") {
  const std::vector<std::string> args{
      "run", "--algo", "umda", "--n", "100", "--lambda", "200",
      "--mu", "100", "--fitness", "onemax", "--seed", "7"};
  const CliResult a = cli(args);
  const CliResult b = cli(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("hit=true") != std::string::npos);
}

TEST_CASE("run: mu > lambda exits 1 citing the constraint") {
  const CliResult r = cli({"run", "--algo", "umda", "--n", "100", "--lambda",
                           "200", "--mu", "300", "--fitness", "onemax",
                           "--seed", "7"});
  CHECK(r.code == 1);
  CHECK(r.err.find("mu <= lambda") != std::string::npos);
}

TEST_CASE("run: exhausted budget exits 2") {
  const CliResult r = cli({"run", "--algo", "umda", "--n", "40", "--lambda",
                           "8", "--mu", "4", "--fitness", "needle", "--seed",
                           "3", "--max-evals", "8"});
  CHECK(r.code == 2);
  CHECK(r.out.find("hit=false") != std::string::npos);
}

TEST_CASE("run: pilot-confirmed cga seed hits within the default budget") {
  const CliResult r = cli({"run", "--algo", "cga", "--K", "50", "--n", "64",
                           "--fitness", "leadingones", "--seed", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("hit=true") != std::string::npos);
}

TEST_CASE("sweep: deterministic bytes, thread independence, row counts") {
  const fs::path cfg = tmp_file("sweep.ini");
  write_file(cfg,
             "[sweep]\n"
             "algo = umda\n"
             "fitness = onemax\n"
             "n = 24\n"
             "lambda = 8,16\n"
             "mu = lambda/2\n"
             "replicates = 4\n"
             "master_seed = 11\n");
  const fs::path out1 = tmp_file("sweep1.csv");
  const fs::path out2 = tmp_file("sweep2.csv");
  CHECK(cli({"sweep", "--config", cfg.string(), "--out", out1.string(),
             "--threads", "1"}).code == 0);
  CHECK(cli({"sweep", "--config", cfg.string(), "--out", out2.string(),
             "--threads", "2"}).code == 0);
  const std::string bytes1 = slurp(out1);
  CHECK(bytes1 == slurp(out2));
  CHECK(count_data_rows(bytes1) == 2);

  // header is exactly the documented schema
  std::istringstream in(bytes1);
  std::string line;
  while (std::getline(in, line) && (line.empty() || line[0] == '#')) {
  }
  CHECK(line == edalab::kSweepHeader);
}

TEST_CASE("sweep: single grid point with R = 2 emits one data row") {
  const fs::path cfg = tmp_file("sweep_one.ini");
  write_file(cfg,
             "[sweep]\nalgo = cga\nfitness = onemax\nn = 16\nK = 10\n"
             "replicates = 2\nmaster_seed = 5\n");
  const fs::path out = tmp_file("sweep_one.csv");
  CHECK(cli({"sweep", "--config", cfg.string(), "--out", out.string()}).code ==
        0);
  CHECK(count_data_rows(slurp(out)) == 1);
}

TEST_CASE("sweep: the paper-shaped lambda grid yields 169 rows") {
  const fs::path cfg = tmp_file("sweep_paper.ini");
  // paper grid shape at toy n and budget so the structural check is cheap
  write_file(cfg,
             "[sweep]\nalgo = umda\nfitness = onemax\nn = 8\n"
             "lambda = 14:350:2\nmu = lambda/2\nreplicates = 1\n"
             "master_seed = 1\nbudget = 350\n");
  const fs::path out = tmp_file("sweep_paper.csv");
  CHECK(cli({"sweep", "--config", cfg.string(), "--out", out.string()}).code ==
        0);
  CHECK(count_data_rows(slurp(out)) == 169);
}

TEST_CASE("sweep: unknown config keys fail closed") {
  const fs::path cfg = tmp_file("sweep_bad.ini");
  write_file(cfg,
             "[sweep]\nalgo = umda\nfitness = onemax\nn = 16\nlambda = 8\n"
             "mu = 4\nreplicates = 1\nmaster_seed = 1\ntypo_key = 3\n");
  const fs::path out = tmp_file("sweep_bad.csv");
  const CliResult r =
      cli({"sweep", "--config", cfg.string(), "--out", out.string()});
  CHECK(r.code == 1);
  CHECK(r.err.find("typo_key") != std::string::npos);
}

TEST_CASE("sweep: metadata echoes the resolved configuration") {
  const fs::path cfg = tmp_file("sweep_meta.ini");
  write_file(cfg,
             "[sweep]\nalgo = cga\nfitness = onemax\nn = 16\nK = 10\n"
             "replicates = 2\nmaster_seed = 99\n");
  const fs::path out = tmp_file("sweep_meta.csv");
  REQUIRE(cli({"sweep", "--config", cfg.string(), "--out", out.string()})
              .code == 0);
  const std::string bytes = slurp(out);
  CHECK(bytes.find("# eda-lab") != std::string::npos);
  CHECK(bytes.find("master_seed=99") != std::string::npos);
  CHECK(bytes.find("margin=1/n") != std::string::npos);
  CHECK(bytes.find("budget=default") != std::string::npos);
}

TEST_CASE("plot: polyline structure, labels, determinism, missing columns") {
  const fs::path csv = tmp_file("plot_in.csv");
  write_file(csv, "# comment\nlambda,mean_evals\n10,100\n20,50\n");
  const fs::path svg1 = tmp_file("plot1.svg");
  const fs::path svg2 = tmp_file("plot2.svg");
  CHECK(cli({"plot", "--in", csv.string(), "--x", "lambda", "--y",
             "mean_evals", "--out", svg1.string()}).code == 0);
  CHECK(cli({"plot", "--in", csv.string(), "--x", "lambda", "--y",
             "mean_evals", "--out", svg2.string()}).code == 0);
  const std::string svg = slurp(svg1);
  CHECK(svg == slurp(svg2));

  std::size_t polylines = 0, pos = 0;
  while ((pos = svg.find("<polyline", pos)) != std::string::npos) {
    ++polylines;
    pos += 9;
  }
  CHECK(polylines == 1);
  // exactly two points on it
  const auto points_at = svg.find("points=\"");
  REQUIRE(points_at != std::string::npos);
  const auto points_end = svg.find('"', points_at + 8);
  const std::string points = svg.substr(points_at + 8, points_end - points_at - 8);
  CHECK(std::count(points.begin(), points.end(), ',') == 2);
  // axes labeled with the column names
  CHECK(svg.find(">lambda</text>") != std::string::npos);
  CHECK(svg.find(">mean_evals</text>") != std::string::npos);

  const CliResult missing = cli({"plot", "--in", csv.string(), "--x", "nope",
                                 "--y", "mean_evals", "--out", svg1.string()});
  CHECK(missing.code == 1);
  CHECK(missing.err.find("nope") != std::string::npos);
}

TEST_CASE("plot: rows with absent statistics are skipped") {
  const fs::path csv = tmp_file("plot_gaps.csv");
  write_file(csv, "x,y\n1,10\n2,\n3,30\n");
  const fs::path svg = tmp_file("plot_gaps.svg");
  CHECK(cli({"plot", "--in", csv.string(), "--x", "x", "--y", "y", "--out",
             svg.string()}).code == 0);
  const std::string bytes = slurp(svg);
  const auto points_at = bytes.find("points=\"");
  const auto points_end = bytes.find('"', points_at + 8);
  const std::string points =
      bytes.substr(points_at + 8, points_end - points_at - 8);
  CHECK(std::count(points.begin(), points.end(), ',') == 2);
}

TEST_CASE("drift-check: deterministic report, PASS printed") {
  const std::vector<std::string> args{"drift-check", "--chain", "biased_walk",
                                      "--runs", "20000", "--seed", "9"};
  const CliResult a = cli(args);
  const CliResult b = cli(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("result=PASS") != std::string::npos);
  CHECK(a.out.find("bound=20") != std::string::npos);
}

TEST_CASE("drift-check: trace mode and malformed input") {
  const fs::path tr = tmp_file("trace.txt");
  write_file(tr, "10\n9\n8\n7\n6\n5\n4\n3\n2\n1\n");
  const CliResult ok = cli({"drift-check", "--trace", tr.string(), "--bins", "3"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("bin_lo,bin_hi,count,mean_drift,stderr") !=
        std::string::npos);

  const fs::path bad = tmp_file("trace_bad.txt");
  write_file(bad, "10\nnot-a-number\n8\n");
  const CliResult fail = cli({"drift-check", "--trace", bad.string()});
  CHECK(fail.code == 1);
  CHECK(fail.err.find("line 2") != std::string::npos);
}

TEST_CASE("scaling: smoke run with deterministic summary") {
  const std::vector<std::string> args{
      "scaling", "--algo", "cga",  "--fitness", "onemax", "--n",
      "16,24,32,48", "--k-coeff", "1", "--replicates", "4", "--seed", "3",
      "--threads", "2"};
  const CliResult a = cli(args);
  const CliResult b = cli(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("slope=") != std::string::npos);
}

TEST_CASE("unknown algorithm exits 1") {
  const CliResult r = cli({"run", "--algo", "sa", "--n", "10", "--lambda", "4",
                           "--mu", "2", "--seed", "1"});
  CHECK(r.code == 1);
  CHECK(r.err.find("unknown algorithm") != std::string::npos);
}

TEST_CASE("end-to-end: the installed binary honors the exit-code contract") {
  const std::string bin = EDALAB_BIN;
  const auto shell = [&](const std::string& args) {
    const std::string cmd = bin + " " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
  };
  CHECK(shell("run --algo umda --n 30 --lambda 10 --mu 5 --fitness onemax "
              "--seed 2") == 0);
  CHECK(shell("run --algo umda --n 30 --lambda 10 --mu 20 --fitness onemax "
              "--seed 2") == 1);
  CHECK(shell("run --algo umda --n 30 --lambda 10 --mu 5 --fitness needle "
              "--seed 2 --max-evals 10") == 2);
  CHECK(shell("plot --in /nonexistent.csv --x a --y b --out /tmp/x.svg") == 1);
}
