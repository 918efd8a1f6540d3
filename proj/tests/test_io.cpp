#include "doctest.h"

#include "weightlab/classify.hpp"
#include "weightlab/io.hpp"
#include "weightlab/verify.hpp"

using namespace weightlab;

namespace {

const std::string kData = WEIGHTLAB_TEST_DATA;

Rational Q(int num, int den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace

TEST_CASE("descriptor files") {
  const auto d = io::load_descriptor(kData + "/mixed.json");
  CHECK(d.ring.vars == std::vector<std::string>{"t", "u"});
  REQUIRE(d.factors.size() == 2);  // the trivial factor is dropped
  const auto p = io::load_descriptor(kData + "/mixed_permuted.json");
  CHECK(classify::is_isomorphic(d, p));
  CHECK_FALSE(classify::is_isomorphic(d, io::load_descriptor(kData + "/moved.json")));
  CHECK_THROWS_AS(io::load_descriptor(kData + "/malformed.json"), io::IoError);
  CHECK_THROWS_AS(io::load_descriptor(kData + "/missing.json"), io::IoError);
}

TEST_CASE("descriptor round trip") {
  const auto d = io::load_descriptor(kData + "/mixed.json");
  const auto again = io::descriptor_from_json(io::descriptor_to_json(d));
  CHECK(again.ring == d.ring);
  CHECK(classify::canonical_form(again) == classify::canonical_form(d));
}

TEST_CASE("descriptor validation errors") {
  auto j = io::Json::parse(R"({"ring": {"vars": 1}, "g": "A1",
      "factors": [{"point": ["0"], "module": {"kind": "dense", "mu": "0", "tau0": "0"}}]})");
  CHECK_THROWS_AS(io::descriptor_from_json(j), InvalidArgument);  // not simple
  j["factors"][0]["module"] = {{"kind", "cubic"}};
  CHECK_THROWS_AS(io::descriptor_from_json(j), io::IoError);
  j["factors"][0]["module"] = {{"kind", "finite"}, {"lambda", {1}}};
  j["factors"][0]["point"] = {0.5};
  CHECK_THROWS_AS(io::descriptor_from_json(j), io::IoError);
  CHECK(io::rational_from_json("-3/6") == Q(-1, 2));
  CHECK(io::rational_from_json(4) == 4);
}

TEST_CASE("algebra files") {
  const auto z = io::load_algebra(kData + "/square_zero.json");
  CHECK(z.unit == RationalVector{Q(1), Q(0), Q(0)});
  CHECK(ucext::central_space(z).quotient_dim() == 1);
  const auto t = io::load_algebra(kData + "/truncated3.json");
  CHECK(ucext::central_space(t).quotient_dim() == 0);
  const auto again = io::algebra_from_json(io::algebra_to_json(t));
  CHECK(again.mult == t.mult);
}

TEST_CASE("PsiMap JSON") {
  const auto j = io::psi_map_to_json(classify::canonical_form(io::load_descriptor(kData + "/mixed.json")));
  REQUIRE(j["support"].size() == 2);
  CHECK(j["support"][0]["point"] == io::Json({"-1", "-1"}));
  CHECK(j["support"][1]["label"]["casimir"] == "-1/2");
}

TEST_CASE("verify_all is deterministic and respects the rank cap") {
  verify::VerifyConfig config;
  config.max_rank = 1;
  config.samples = 20;
  const auto a = verify::verify_all(config);
  config.threads = 1;
  const auto b = verify::verify_all(config);
  CHECK(a.to_jsonl(false) == b.to_jsonl(false));
  CHECK(a.all_pass());
  REQUIRE(a.checks.size() == 10);
  for (std::size_t i = 0; i < a.checks.size(); ++i) CHECK(a.checks[i].name == verify::check_names()[i]);
}

TEST_CASE("verify_all configuration and fault injection") {
  verify::VerifyConfig config;
  config.max_rank = 0;
  CHECK_THROWS_AS(verify::verify_all(config), InvalidArgument);
  config.max_rank = 2;
  config.inject = "nonsense";
  CHECK_THROWS_AS(verify::verify_all(config), InvalidArgument);
  config.inject = "cartan";
  config.only = {"01_gamma_ideal"};
  const auto r = verify::verify_all(config);
  REQUIRE(r.checks.size() == 1);
  CHECK(r.checks[0].status == verify::Status::Fail);
  REQUIRE(r.checks[0].counterexample);
  CHECK(r.checks[0].counterexample->find("A2") != std::string::npos);
}

TEST_CASE("battery covers every factor count and both verdicts") {
  const auto battery = verify::descriptor_battery(5, 60);
  std::size_t two_dense = 0, sizes[4] = {0, 0, 0, 0};
  for (const auto& d : battery) {
    ++sizes[d.factors.size()];
    two_dense += d.dense_count() >= 2;
  }
  for (auto s : sizes) CHECK(s > 0);
  CHECK(two_dense > 0);
}
