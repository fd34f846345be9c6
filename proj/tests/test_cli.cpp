#include <filesystem>
#include <sstream>

#include "doctest.h"
#include "hopfalg/cli.hpp"
#include "hopfalg/io.hpp"
#include "json.hpp"

using namespace hopfalg;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& f) { return (fs::path(HOPFALG_DATA_DIR) / f).string(); }

}  // namespace

TEST_CASE("verify hopf on the point passes") {
  auto r = run({"verify", "hopf", data("pt.halg")});
  CHECK(r.code == 0);
  CHECK(r.out.find("status: pass (0 failures)") != std::string::npos);
}

TEST_CASE("weak equivalence report in JSON") {
  auto r = run({"weakequiv", data("incl.hmor"), "--format", "json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema"] == kReportSchema);
  CHECK(j["verdict"] == "weak_equivalence");
  CHECK(j["Phi_rank"] == 1);
  CHECK(j["status"] == "pass");

  auto c = nlohmann::json::parse(run({"weakequiv", data("collapse.hmor"), "--format", "json"}).out);
  CHECK(c["verdict"] == "not_weak_equivalence");
  CHECK(c["Phi_rank"] == 1);
  CHECK(c["Phi_domain_rank"] == 2);
  CHECK(c["coherent"] == true);
}

TEST_CASE("exit codes") {
  // Verification failure: the collapse bundle is principal on the left only.
  CHECK(run({"verify", "bundle", data("triv_collapse.bnd"), "--side", "b"}).code == 1);
  CHECK(run({"verify", "bundle", data("triv_collapse.bnd"), "--side", "l"}).code == 0);
  // Input errors.
  CHECK(run({"verify", "hopf", data("missing.halg")}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"verify", "hopf", data("pt.halg"), "--field", "fp:4"}).code == 2);
  CHECK(run({"zigzag", data("collapse.hmor"), data("collapse.hmor")}).code == 2);
  CHECK(run({"compose", data("triv_incl.bnd"), data("triv_incl.bnd")}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("parse errors report the position") {
  auto dir = fs::temp_directory_path() / "hopfalg_cli_test";
  fs::create_directories(dir);
  const std::string path = (dir / "bad.alg").string();
  write_file(path, "algebra k\ndim 1\nunit x\n");
  write_file((dir / "bad.halg").string(), "hopf h\nbase bad.alg\n");
  auto r = run({"verify", "hopf", (dir / "bad.halg").string(), "--format", "json"});
  CHECK(r.code == 2);
  CHECK(r.err.find("bad.alg:3:6:") != std::string::npos);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["status"] == "error");
  fs::remove_all(dir);
}

TEST_CASE("field from the environment and the prime field path") {
  auto r = run({"verify", "identities", data("sqrt2.bnd"), "--field", "fp:7", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["field"] == "fp:7");
  setenv("HOPFALG_FIELD", "fp:5", 1);
  CHECK(nlohmann::json::parse(run({"dualize", data("s3.gpd"), "--format", "json"}).out)["field"] == "fp:5");
  unsetenv("HOPFALG_FIELD");
}

TEST_CASE("commands on the shipped fixtures") {
  CHECK(run({"compose", data("triv_incl_co.bnd"), data("triv_incl.bnd")}).out.find("dim: 1") != std::string::npos);
  CHECK(run({"zigzag", data("incl.hmor"), data("incl.hmor")}).code == 0);
  CHECK(run({"morita", data("triv_incl.bnd"), "--probe", data("pr2_regular.cmd")}).code == 0);
  CHECK(run({"reconstruct", data("sqrt2.bnd")}).code == 0);
  CHECK(run({"verify", "identities", data("u_pr2.bnd")}).code == 0);
  CHECK(run({"verify", "hopf", "corpus:S3"}).code == 0);
}

TEST_CASE("JSON is byte-identical across runs and text lists failures only unless verbose") {
  auto a = run({"verify", "bundle", data("sqrt2.bnd"), "--format", "json"});
  auto b = run({"verify", "bundle", data("sqrt2.bnd"), "--format", "json"});
  CHECK(a.out == b.out);
  CHECK(a.out.find("seconds") == std::string::npos);
  auto quiet = run({"verify", "hopf", data("c2.halg")});
  auto loud = run({"verify", "hopf", data("c2.halg"), "--verbose"});
  CHECK(quiet.out.find("  pass ") == std::string::npos);
  CHECK(loud.out.find("  pass ") != std::string::npos);
}

TEST_CASE("shipped fixtures match a fresh export") {
  auto dir = fs::temp_directory_path() / "hopfalg_export_test";
  fs::remove_all(dir);
  auto r = run({"corpus", "export", dir.string()});
  REQUIRE(r.code == 0);
  int files = 0;
  for (const auto& e : fs::directory_iterator(dir)) {
    ++files;
    const auto shipped = fs::path(HOPFALG_DATA_DIR) / e.path().filename();
    REQUIRE_MESSAGE(fs::exists(shipped), shipped.string());
    CHECK_MESSAGE(read_file(e.path().string()) == read_file(shipped.string()), shipped.string());
  }
  CHECK(files > 30);
  fs::remove_all(dir);
}
