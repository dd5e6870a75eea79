#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "oidom/cli.hpp"

using oidom::cli::kExitOk;
using oidom::cli::kExitUsage;
using oidom::cli::kExitViolation;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = oidom::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

// Temporary file removed on scope exit.
class TempFile {
 public:
  TempFile(const std::string& name, const std::string& text = "") : path_("oidom_cli_" + name) {
    if (!text.empty()) std::ofstream(path_) << text;
  }
  ~TempFile() { std::remove(path_.c_str()); }
  const std::string& path() const { return path_; }
  std::string read() const {
    std::ifstream in(path_);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
  }

 private:
  std::string path_;
};

}  // namespace

TEST_CASE("compute prints the value and certificate") {
  TempFile c6("c6.g6", "EhEG\n");
  const Result r = run({"compute", "--param", "2oid", "--input", c6.path()});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "gamma_2^oi = 3\ncertificate = {0,2,4}\n");

  const Result j = run({"compute", "--param", "toid", "--input", c6.path(), "--json"});
  CHECK(j.code == kExitOk);
  const nlohmann::json parsed = nlohmann::json::parse(j.out);
  CHECK(parsed["value"] == 4);
}

TEST_CASE("compute reads edge lists and reports undefined values") {
  TempFile el("p3k1.txt", "4 2\n0 1\n1 2\n");
  const Result r = run({"compute", "--param", "doid", "--input", el.path(), "--format", "edgelist"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("undefined (isolated vertex)") != std::string::npos);
  const Result a = run({"compute", "--param", "alpha", "--input", el.path()});
  CHECK(a.code == kExitOk);
  CHECK(a.out.find("= 3") != std::string::npos);
}

TEST_CASE("validate-set") {
  TempFile c6("c6v.g6", "EhEG\n");
  CHECK(run({"validate-set", "--param", "2oid", "--set", "0,2,4", "--input", c6.path()}).code == kExitOk);
  const Result bad = run({"validate-set", "--param", "toid", "--set", "0,2,4", "--input", c6.path()});
  CHECK(bad.code == kExitViolation);
  CHECK(bad.out.rfind("invalid: ", 0) == 0);
}

TEST_CASE("generate, recognize and fixtures") {
  TempFile g("theta.g6");
  CHECK(run({"generate", "--family", "theta", "--q", "4", "--out", g.path()}).code == kExitOk);
  const Result rec = run({"recognize", "--family", "theta", "--input", g.path()});
  CHECK(rec.code == kExitOk);
  CHECK(rec.out == "theta: member\n");
  const Result no = run({"recognize", "--family", "grid", "--input", g.path()});
  CHECK(no.out == "grid: not a member\n");

  TempFile spec("spec.json", R"({"family": "grid", "k": 2})");
  const Result grid = run({"generate", "--spec", spec.path()});
  CHECK(grid.code == kExitOk);
  TempFile grid_file("grid.g6", grid.out);
  CHECK(run({"recognize", "--family", "grid", "--input", grid_file.path()}).out == "grid: member\n");

  const Result list = run({"fixtures", "--list"});
  CHECK(list.out.find("H1 n=12") != std::string::npos);
  TempFile h2("h2.txt");
  CHECK(run({"fixtures", "--emit", "H2", "--out", h2.path(), "--out-format", "edgelist"}).code == kExitOk);
  CHECK(h2.read().rfind("10 15\n", 0) == 0);
}

TEST_CASE("reduce with verification") {
  TempFile k3("k3.g6", "Bw\n");
  const Result r = run({"reduce", "--kind", "2oid", "--input", k3.path(), "--verify"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("3n - alpha = 8") != std::string::npos);
  CHECK(r.out.find("identity holds") != std::string::npos);
  TempFile gadget("gadget.g6");
  CHECK(run({"reduce", "--kind", "doid", "--input", k3.path(), "--out", gadget.path()}).code == kExitOk);
  CHECK(gadget.read().size() > 2);
}

TEST_CASE("sweep exit codes") {
  TempFile report("report.json");
  const Result ok = run({"sweep", "--n-min", "4", "--n-max", "5", "--theorems", "L1_SUM_BOUNDS,E8_IDENTITY",
                         "--report", report.path()});
  CHECK(ok.code == kExitOk);
  const nlohmann::json j = nlohmann::json::parse(report.read());
  CHECK(j["meta"]["graphs"] == 64 + 1024);
  CHECK(j["theorems"].size() == 2);

  const Result bad = run({"sweep", "--n-min", "4", "--n-max", "4", "--theorems", "DOID_SUM_2N_MINUS_1"});
  CHECK(bad.code == kExitViolation);
  CHECK(nlohmann::json::parse(bad.out)["theorems"][0]["violations_total"] == 6);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"compute", "--param", "beta", "--input", "x"}).code == kExitUsage);
  CHECK(run({"compute", "--param", "toid", "--input", "/nonexistent.g6"}).code == kExitUsage);
  CHECK(run({"sweep", "--n-max", "9"}).code == kExitUsage);
  CHECK(run({"sweep", "--theorems", "NOPE"}).code == kExitUsage);
  CHECK(run({"generate", "--family", "psi", "--n", "8"}).code == kExitUsage);
  TempFile bad("bad.g6", "D?\n");
  const Result r = run({"compute", "--param", "toid", "--input", bad.path()});
  CHECK(r.code == kExitUsage);
  CHECK(r.err.find("error") != std::string::npos);
}
