#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string data(const std::string& name) { return std::string(DATA_DIR) + "/" + name; }

nlohmann::json run_json(const std::string& args) {
  Run r = run(args + " --format json");
  REQUIRE(r.code == 0);
  return nlohmann::json::parse(r.out);
}

}  // namespace

TEST_CASE("group-info") {
  auto j = run_json("group-info --group " + data("d8.json"));
  CHECK(j["order"] == 8);
  CHECK(j["classes"].size() == 5);
  CHECK(j["kernel"] == nlohmann::json::array({"1"}));
  CHECK(run_json("group-info --group " + data("trivial3.json"))["order"] == 1);
  Run t = run("group-info --group " + data("d8.json"));
  CHECK(t.out.find("order 8") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run("group-info --group " + data("shear.json")).code == 3);
  CHECK(run("group-info --group " + data("missing.json")).code == 2);
  CHECK(run("cohomology-basis --group " + data("d8.json") + " --degree 2").code == 2);
  CHECK(run("bogus").code == 2);
  CHECK(run("bracket --group " + data("d8.json") + " --cocycle " + data("d8_alpha.json")).code == 2);
  // Non-invariant input is averaged, not refused; mu1 refuses it.
  CHECK(run("square --group " + data("d8.json") + " --cocycle " + data("d8_beta.json") + " --strategy full").code == 0);
  CHECK(run("mu1 --group " + data("d8.json") + " --cocycle " + data("d8_alpha.json") + " --left x1 --right x2").code ==
        4);
}

TEST_CASE("cohomology-basis") {
  auto j = run_json("cohomology-basis --group " + data("d8.json") + " --degree 0 --poly-degree 0");
  CHECK(j["dimension"] == 1);
  auto k = run_json("cohomology-basis --group " + data("d8.json") + " --degree 5 --poly-degree 1");
  CHECK(k["dimension"] == 0);
  auto h = run_json("cohomology-basis --group " + data("d8.json") + " --degree 2 --poly-degree 0");
  auto p = run_json("hecke-params --group " + data("d8.json"));
  CHECK(h["dimension"] == p["total"]);
}

TEST_CASE("bracket") {
  auto j = run_json("bracket --group " + data("d8.json") + " --cocycle " + data("d8_alpha.json") + " --cocycle " +
                    data("d8_beta.json"));
  CHECK(j["is_zero"] == true);
  auto k = run_json("bracket --group " + data("z2_trivial.json") + " --cocycle " + data("z2_alpha.json") +
                    " --cocycle " + data("z2_beta.json"));
  CHECK(k["is_zero"] == false);
  REQUIRE(k["bracket"]["terms"].size() == 1);
  CHECK(k["bracket"]["terms"][0]["poly"] == "2*x1*x2^3*x3^3");
  auto c = run_json("bracket --group " + data("z4_diag.json") + " --cocycle " + data("z4_constant.json") +
                    " --cocycle " + data("z4_constant.json"));
  CHECK(c["is_zero"] == true);
}

TEST_CASE("verbosity 2 logs the prebracket pairs") {
  std::string cmd = std::string(CLI_PATH) + " bracket --group " + data("d8.json") + " --cocycle " +
                    data("d8_alpha.json") + " --cocycle " + data("d8_beta.json") +
                    " --standard-basis h --verbosity 2 2>&1 >/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string err;
  std::array<char, 4096> buf{};
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) err.append(buf.data(), n);
  pclose(p);
  // ((-3-i)/16)(w1^2 + w2^2) v3 in standard coordinates.
  CHECK(err.find("pair (1, 1)\n  [g*h] ((-1/8*z - 3/8)*x1^2*x3 + (-1/8*z - 3/8)*x2^2*x3) dx1^dx2^dx3") !=
        std::string::npos);
}

TEST_CASE("square and poisson-scan") {
  auto s = run_json("square --group " + data("z2_trivial.json") + " --cocycle " + data("z2_sum.json"));
  CHECK(s["poisson"] == false);
  auto t = run_json("square --group " + data("z2_trivial.json") + " --cocycle " + data("z2_simple.json"));
  CHECK(t["poisson"] == true);
  auto scan = run_json("poisson-scan --group " + data("d8.json") + " --poly-degree 1 --samples 2");
  for (const auto& row : scan["rows"])
    if (row["support"] == "off K") CHECK(row["square_zero"] == true);
  auto zero = run_json("poisson-scan --group " + data("z4_diag.json") + " --poly-degree 0 --samples 2");
  for (const auto& row : zero["rows"]) CHECK(row["square_zero"] == true);
  auto k = run_json("poisson-scan --group " + data("z2_trivial.json") + " --poly-degree 4 --samples 3");
  bool some_nonzero = false;
  for (const auto& row : k["rows"])
    if (row["square_zero"] == false) some_nonzero = true;
  CHECK(some_nonzero);
}

TEST_CASE("hecke-params, mu1 and verify") {
  CHECK(run_json("hecke-params --group " + data("trivial3.json"))["total"] == 3);
  auto m = run_json("mu1 --group " + data("z4_diag.json") + " --cocycle " + data("z4_constant.json") +
                    " --left x1@g --right x2@g^2");
  REQUIRE(m["value"].size() == 1);
  CHECK(m["value"][0]["element"] == "g^3");
  CHECK(m["constant"] == true);
  Run v = run("verify --group " + data("d8.json") + " --poly-degree 1 --samples 6");
  CHECK(v.code == 0);
}

TEST_CASE("output is deterministic") {
  std::string args = "poisson-scan --group " + data("d8.json") + " --poly-degree 1 --seed 7 --samples 3 --format json";
  CHECK(run(args).out == run(args).out);
  std::string b = "bracket --group " + data("z2_trivial.json") + " --cocycle " + data("z2_alpha.json") +
                  " --cocycle " + data("z2_beta.json") + " --format json --jobs 2";
  CHECK(run(b).out == run(b).out);
}
