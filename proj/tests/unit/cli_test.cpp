#include <doctest.h>

#include <sstream>

#include <nlohmann/json.hpp>

#include "typeec/cli/commands.hpp"
#include "typeec/cli/verify.hpp"

using namespace typeec::cli;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(const std::string& sub, Options o) {
  std::ostringstream out, err;
  const int code = run(sub, o, out, err);
  return {code, out.str(), err.str()};
}

Options with(std::string lambda, bool as_json = true) {
  Options o;
  o.lambda = std::move(lambda);
  o.json = as_json;
  return o;
}

}  // namespace

TEST_CASE("curve") {
  const auto r = call("curve", with("0"));
  REQUIRE(r.code == kOk);
  const auto j = json::parse(r.out);
  CHECK(j.at("j_invariant") == "0");
  CHECK(j.at("automorphism") == "tau2");
  CHECK(j.at("two_torsion").size() == 4);
  CHECK(call("curve", with("1+sqrt3")).out.find("\"j_invariant\": \"1728\"") != std::string::npos);
  const auto text = call("curve", with("0", false));
  CHECK(text.out.find("j = 0") != std::string::npos);
}

TEST_CASE("input errors exit with code 2") {
  CHECK(call("curve", with("1")).code == kInputError);
  CHECK(call("curve", with("-2")).code == kInputError);
  const auto bad = call("curve", with("1+foo"));
  CHECK(bad.code == kInputError);
  CHECK(bad.err.find("foo") != std::string::npos);
  CHECK(call("curve", with("1/0")).code == kInputError);
  Options o = with("0");
  o.i = 7;
  CHECK(call("loci", o).code == kInputError);
  o.i = 0;
  o.point = "1:2:3";
  CHECK(call("pair", o).code == kInputError);
  o.point = "";
  CHECK(call("pair", o).code == kInputError);
  CHECK(call("nonsense", o).code == kInputError);
}

TEST_CASE("torsion and loci") {
  Options o = with("5/3");
  o.n = 3;
  CHECK(json::parse(call("torsion", o).out).at("points").size() == 9);
  o.n = 4;
  CHECK(call("torsion", o).code == kInputError);
  Options l = with("0");
  l.i = 2;
  const auto j = json::parse(call("loci", l).out);
  CHECK(j.at("lower").size() == 27);
  CHECK(j.at("upper").size() == 3);
  CHECK(j.at("fixed").size() == 3);
  l.i = 0;
  CHECK(json::parse(call("loci", l).out).at("fixed") == "E");
}

TEST_CASE("pair and potential") {
  Options o = with("0");
  o.point = "eta^8:eta^4:1";
  o.i = 2;
  const auto j = json::parse(call("pair", o).out);
  CHECK(j.at("regular") == true);
  CHECK(j.at("type") == "E");
  CHECK(j.at("relations").size() == 3);
  CHECK(j.at("hilbert") == json::array({1, 3, 6, 10, 15}));
  o.i = 1;
  CHECK(json::parse(call("pair", o).out).at("regular") == false);

  Options h = with("1+sqrt3");
  h.point = "1:1:1+sqrt3";
  h.i = 1;
  const auto p = json::parse(call("potential", h).out);
  CHECK(p.at("tau_preserves_w_p") == true);
  CHECK(p.at("witness").is_array());
  CHECK(p.at("superpotential") == false);
  h.i = 0;
  CHECK(json::parse(call("potential", h).out).at("superpotential") == true);
  // Points with coordinates in an adjoined level.
  h.point = "1:1:-1/2-1/2*sqrt3-1/2*rho1";
  h.i = 2;
  CHECK(json::parse(call("pair", h).out).at("regular") == true);
}

TEST_CASE("classify") {
  const auto j = json::parse(call("classify", with("0")).out);
  CHECK(j.at("class_counts") == json{{"B", 1}, {"E", 2}});
  const auto text = call("classify", with("5/3", false));
  CHECK(text.code == kOk);
  CHECK(text.out.find("counts: B=3") != std::string::npos);
}

TEST_CASE("verify-tables passes with errata and is deterministic") {
  const Report r = verify_tables();
  CHECK(r.count(Status::fail) == 0);
  CHECK(r.count(Status::erratum) > 0);
  CHECK(r.exit_code(false) == kOk);
  CHECK(r.exit_code(true) == kFailure);
  bool b_monomial = false, b_condition = false;
  for (const auto& c : r.checks()) {
    if (c.name.rfind("Type B printed c", 0) == 0 || c.name.rfind("Type B printed lambda", 0) == 0)
      b_monomial = b_monomial || c.status == Status::erratum;
    if (c.name.rfind("Type B printed condition", 0) == 0) b_condition = b_condition || c.status == Status::erratum;
  }
  CHECK(b_monomial);
  CHECK(b_condition);
  CHECK(verify_tables().json() == r.json());
}
