#include <doctest.h>

#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "cli_harness.hpp"

using harness::golden;
using harness::run_cli;

namespace fs = std::filesystem;

namespace {

fs::path scratch() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "arith_test_cli";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

}  // namespace

TEST_CASE("golden outputs") {
  auto table = run_cli({"table", "psi(u)", "--n", "12"});
  CHECK(table.code == 0);
  CHECK(table.out == golden("table_psi_u_12.txt"));
  CHECK(table.err.empty());

  auto additive = run_cli({"check", "additive", "nu", "--n", "1000"});
  CHECK(additive.code == 0);
  CHECK(additive.out == golden("check_additive_nu_1000.txt"));

  auto mult = run_cli({"check", "multiplicative", "nu", "--n", "1000"});
  CHECK(mult.code == 1);
  CHECK(mult.out == golden("check_multiplicative_nu_1000.txt"));

  auto verify = run_cli({"verify", "identities", "--n", "1000", "--tol", "1e-9"});
  CHECK(verify.code == 0);
  CHECK(verify.out == golden("verify_identities_1000.txt"));
}

TEST_CASE("eval") {
  auto r = run_cli({"eval", "psi(u)", "4", "--n", "10"});
  CHECK(r.code == 0);
  CHECK(r.out == "3/2\n");
  CHECK(run_cli({"eval", "mu * u", "1"}).out == "1\n");
  CHECK(run_cli({"eval", "Lambda", "8", "--backend", "complex"}).out ==
        "0.69314718055994529\n");
  auto out_of_range = run_cli({"eval", "phi", "20", "--n", "10"});
  CHECK(out_of_range.code == 2);
  CHECK(out_of_range.out.empty());
  CHECK(out_of_range.err.find("raise --n") != std::string::npos);
}

TEST_CASE("table formats") {
  auto csv = run_cli({"table", "phi", "--n", "4", "--format", "csv"});
  CHECK(csv.out == "n,value\n1,1\n2,1\n3,2\n4,2\n");
  auto json = run_cli({"table", "mu", "--n", "3", "--format", "json"});
  const auto doc = nlohmann::json::parse(json.out);
  CHECK(doc["bound"] == 3);
  CHECK(doc["backend"] == "rational");
  CHECK(doc["values"] == nlohmann::json::array({"1", "-1", "-1"}));
  auto cpx = run_cli({"table", "1/2 . u", "--n", "2", "--backend", "complex", "--format", "json"});
  CHECK(nlohmann::json::parse(cpx.out)["values"][0] == nlohmann::json::array({0.5, 0.0}));
}

TEST_CASE("check kinds and exit statuses") {
  CHECK(run_cli({"check", "multiplicative", "phi", "--n", "500"}).code == 0);
  auto cm = run_cli({"check", "completely-multiplicative", "phi", "--n", "500"});
  CHECK(cm.code == 1);
  CHECK(cm.out == "completely-multiplicative: false\nwitness: p=2, k=2\n");
  auto ca = run_cli({"check", "completely-additive", "Omega", "--n", "500"});
  CHECK(ca.out == "completely-additive: true\n");
  auto mob = run_cli({"check", "additive-mobius", "u", "--n", "500"});
  CHECK(mob.code == 1);
  CHECK(mob.out == "additive-mobius: false\nwitness: n=1\n");
  auto phi = run_cli({"check", "additive", "phi", "--n", "500"});
  CHECK(phi.out == "additive: false\nwitness: (2, 3)\n");
}

TEST_CASE("check additive and additive-mobius agree") {
  for (const char* e : {"nu", "Omega", "phi", "u", "psi(phi)", "psi(sigma(1))", "nu + Omega",
                        "2 . nu", "nu * nu", "log(phi)", "mu"}) {
    INFO(e);
    CHECK(run_cli({"check", "additive", e, "--n", "600"}).code ==
          run_cli({"check", "additive-mobius", e, "--n", "600"}).code);
  }
}

TEST_CASE("usage and domain errors exit 2") {
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"frobnicate"}).code == 2);
  CHECK(run_cli({"check", "sideways", "u"}).code == 2);
  CHECK(run_cli({"table", "u", "--n", "0"}).code == 2);
  CHECK(run_cli({"table", "u", "--n", "10000001"}).code == 2);
  CHECK(run_cli({"table", "u", "--backend", "quaternion"}).code == 2);
  CHECK(run_cli({"table", "u", "--format", "xml"}).code == 2);
  CHECK(run_cli({"verify", "everything"}).code == 2);

  auto parse = run_cli({"table", "psi(u", "--n", "5"});
  CHECK(parse.code == 2);
  CHECK(parse.out.empty());
  CHECK(parse.err.find("offset 5") != std::string::npos);

  auto domain = run_cli({"table", "log(2 . u)", "--n", "5"});
  CHECK(domain.code == 2);
  CHECK(domain.err.find("domain error") != std::string::npos);

  auto backend = run_cli({"table", "Lambda", "--n", "5"});
  CHECK(backend.code == 2);
  CHECK(backend.err.find("needs --backend complex") != std::string::npos);

  CHECK(run_cli({"transform", "log", "2 . u", "--n", "5", "--normalize-unit"}).code == 0);
  CHECK(run_cli({"--help"}).code == 0);
}

TEST_CASE("transform writes CSV and JSON that import reads back") {
  auto stdout_csv = run_cli({"transform", "psi", "u", "--n", "12"});
  CHECK(stdout_csv.code == 0);
  CHECK(stdout_csv.out.rfind("n,value\n1,0\n2,1\n3,1\n4,3/2\n", 0) == 0);

  const std::string csv = (scratch() / "psi_u.csv").string();
  const std::string json = (scratch() / "psi_u.json").string();
  CHECK(run_cli({"transform", "psi", "u", "--n", "12", "--out", csv}).code == 0);
  CHECK(run_cli({"transform", "psi", "u", "--n", "12", "--out", json}).code == 0);
  CHECK(harness::read_file(csv) == stdout_csv.out);
  CHECK(run_cli({"import", csv}).out == "bound: 12\nbackend: rational\n");
  CHECK(run_cli({"import", json}).out == "bound: 12\nbackend: rational\n");

  // psiinv of the imported file recovers u.
  auto back = run_cli({"table", "psiinv(file(\"" + csv + "\"))", "--n", "12"});
  CHECK(back.code == 0);
  CHECK(back.out == run_cli({"table", "u", "--n", "12"}).out);

  const std::string lam = (scratch() / "lam.csv").string();
  CHECK(run_cli({"transform", "exp", "Lambda", "--n", "30", "--backend", "complex", "--out", lam})
            .code == 0);
  CHECK(run_cli({"import", lam}).out == "bound: 30\nbackend: complex\n");
  CHECK(run_cli({"table", "file(\"" + lam + "\")", "--n", "30"}).code == 2);
  CHECK(run_cli({"table", "file(\"" + lam + "\")", "--n", "31", "--backend", "complex"}).code == 2);
}

TEST_CASE("import rejects malformed files") {
  const fs::path bad = scratch() / "bad.csv";
  std::ofstream(bad) << "n,value\n1,1\n3,2\n";
  auto r = run_cli({"import", bad.string()});
  CHECK(r.code == 2);
  CHECK(r.err.find("line 3") != std::string::npos);
  CHECK(run_cli({"import", (scratch() / "missing.csv").string()}).code == 2);
  const fs::path header = scratch() / "header.csv";
  std::ofstream(header) << "idx,val\n1,1\n";
  CHECK(run_cli({"import", header.string()}).code == 2);
  const fs::path json = scratch() / "bad.json";
  std::ofstream(json) << R"({"bound": 2, "backend": "rational", "values": ["1"]})";
  CHECK(run_cli({"import", json.string()}).code == 2);
}

TEST_CASE("bell") {
  auto r = run_cli({"bell", "phi", "--prime", "3", "--n", "100"});
  CHECK(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["prime"] == 3);
  CHECK(doc["coeffs"] == nlohmann::json::array({"1", "2", "6", "18", "54"}));
  CHECK(run_cli({"bell", "phi", "--prime", "4", "--n", "100"}).code == 2);
  CHECK(run_cli({"bell", "phi", "--prime", "101", "--n", "100"}).code == 2);
}

TEST_CASE("verify reports failures with exit 1") {
  // A tolerance far below double resolution makes the float identity fail.
  auto r = run_cli({"verify", "identities", "--n", "1000", "--tol", "1e-30"});
  CHECK(r.code == 1);
  CHECK(r.out.find("FAIL Lambda complex N=1000 first_failure=") != std::string::npos);
  CHECK(run_cli({"verify", "identities", "--n", "1000", "--tol", "0"}).code == 2);
}
