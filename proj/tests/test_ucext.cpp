#include "doctest.h"

#include "weightlab/oracles.hpp"
#include "weightlab/ucext.hpp"

using namespace weightlab;
using namespace weightlab::ucext;
using evaluation::Factor;
using evaluation::Point;

namespace {

Rational Q(int num, int den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::vector<FiniteAlgebra> battery() {
  std::vector<FiniteAlgebra> out;
  for (int m = 1; m <= 6; ++m) out.push_back(truncated_polynomial(m));
  for (int m = 1; m <= 4; ++m) out.push_back(split_product(m));
  out.push_back(square_zero_plane());
  out.push_back(monogenic({Q(-1), Q(0)}));
  out.push_back(monogenic({Q(0), Q(-1), Q(0)}));  // x³ = x
  return out;
}

bool is_zero(const RationalVector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

RationalVector add(RationalVector a, const RationalVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

const auto kA1 = std::make_shared<const rootsys::RootSystem>(rootsys::build_root_system("A1"));

evaluation::EvaluationDescriptor line(std::vector<weightmod::WeightModuleDescriptor> modules) {
  std::vector<Factor> fs;
  for (std::size_t i = 0; i < modules.size(); ++i) fs.push_back({Point{{Q(static_cast<int>(i) + 1)}}, modules[i]});
  return evaluation::make_descriptor(evaluation::make_ring({"t"}, {}), kA1, std::move(fs));
}

}  // namespace

TEST_CASE("algebra factories are valid") {
  for (const auto& a : battery()) CHECK_NOTHROW(a.validate());
  auto t3 = truncated_polynomial(3);
  CHECK(t3.multiply(t3.basis(1), t3.basis(2)) == RationalVector(3, Q(0)));
  CHECK(t3.multiply(t3.basis(1), t3.basis(1)) == t3.basis(2));
  auto x2 = monogenic({Q(-1), Q(0)});
  CHECK(x2.multiply(x2.basis(1), x2.basis(1)) == x2.basis(0));
}

TEST_CASE("invalid tables are rejected") {
  auto a = truncated_polynomial(3);
  a.mult[1][2] = a.basis(0);  // t·t² = 1 but t²·t = 0
  CHECK_THROWS_AS(a.validate(), InvalidArgument);
  CHECK_THROWS_AS(central_space(a), InvalidArgument);
  auto b = split_product(2);
  b.unit = b.basis(0);
  CHECK_THROWS_AS(b.validate(), InvalidArgument);
  auto c = split_product(2);
  c.mult.pop_back();
  CHECK_THROWS_AS(c.validate(), InvalidArgument);
}

TEST_CASE("central space dimensions") {
  CHECK(central_space(truncated_polynomial(3)).quotient_dim() == 0);
  CHECK(central_space(truncated_polynomial(1)).quotient_dim() == 0);
  CHECK(central_space(monogenic({Q(-1), Q(0)})).quotient_dim() == 0);
  CHECK(central_space(square_zero_plane()).quotient_dim() == 1);
}

TEST_CASE("central space matches the Kähler differential oracle") {
  for (const auto& a : battery()) {
    INFO(a.dim());
    CHECK(central_space(a).quotient_dim() == oracles::kahler_quotient_dim(a));
  }
}

TEST_CASE("projection kills Q and the pairing is antisymmetric and cyclic") {
  for (const auto& a : battery()) {
    const auto z = central_space(a);
    for (const auto& q : z.q_relations()) CHECK(is_zero(z.project(q)));
    const std::size_t d = a.dim();
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t s = 0; s < d; ++s) {
        CHECK(is_zero(add(z.pair(a.basis(r), a.basis(s)), z.pair(a.basis(s), a.basis(r)))));
        for (std::size_t t = 0; t < d; ++t) {
          auto sum = z.pair(a.mult[r][s], a.basis(t));
          sum = add(sum, z.pair(a.mult[s][t], a.basis(r)));
          sum = add(sum, z.pair(a.mult[t][r], a.basis(s)));
          CHECK(is_zero(sum));
        }
      }
    }
  }
}

TEST_CASE("Killing form of sl2") {
  const auto& k = sl2_killing_form();
  CHECK(k[0][2] == 4);
  CHECK(k[2][0] == 4);
  CHECK(k[1][1] == 8);
  CHECK(k[0][0] == 0);
  CHECK(k[2][2] == 0);
  CHECK(k[1][0] == 0);
  CHECK(k[1][2] == 0);
}

TEST_CASE("extended bracket examples") {
  const ExtendedAlgebra ext(square_zero_plane());
  const auto& a = ext.algebra();
  const auto x = a.basis(1), y = a.basis(2);
  const auto pair_xy = ext.center().pair(x, y);
  REQUIRE(pair_xy.size() == 1);
  CHECK(pair_xy[0] != 0);

  auto hh = ext.bracket(ext.current(Sl2::h, x), ext.current(Sl2::h, y));
  CHECK(is_zero(hh.current[0]));
  CHECK(is_zero(hh.current[1]));
  CHECK(is_zero(hh.current[2]));
  CHECK(hh.central == RationalVector{8 * pair_xy[0]});

  auto ef = ext.bracket(ext.current(Sl2::e, x), ext.current(Sl2::f, y));
  CHECK(ef.current[1] == a.multiply(x, y));
  CHECK(ef.central == RationalVector{4 * pair_xy[0]});

  auto e1f = ext.bracket(ext.current(Sl2::e, a.basis(0)), ext.current(Sl2::f, x));
  CHECK(e1f.current[1] == x);

  auto z = ext.central({Q(3)});
  CHECK(ext.bracket(z, ext.current(Sl2::e, x)).is_zero());
  CHECK(ext.bracket(ext.current(Sl2::f, y), z).is_zero());
}

TEST_CASE("Jacobi identity on the extension") {
  for (const auto& a : battery()) {
    const auto r = verify_jacobi(a, 100, 7);
    CHECK(r.pass);
    CHECK(r.checked == 100);
  }
  auto bad = truncated_polynomial(3);
  bad.mult[1][1] = bad.basis(0);  // t·t = 1 while t² stays nilpotent
  const auto r = verify_jacobi(bad, 400, 7);
  CHECK_FALSE(r.pass);
  REQUIRE(r.witness);
  CHECK(!r.witness->empty());
}

TEST_CASE("trace identity examples") {
  const weightmod::DenseSL2 w{0, Rational(-1, 4)};
  auto two = line({weightmod::finite_dim(kA1, {2}), weightmod::finite_dim(kA1, {2})});
  const auto t = parse_polynomial("t", two.ring.vars);
  const auto t2 = parse_polynomial("t^2", two.ring.vars);
  const auto one = parse_polynomial("1", two.ring.vars);
  auto rep = trace_identity_check(two, t, t2, 0, 0);
  CHECK(rep.pass());
  CHECK(rep.weight_space_dim == 3);

  auto single = line({weightmod::finite_dim(kA1, {3})});
  for (int nu : {-3, -1, 1, 3}) {
    auto s = trace_identity_check(single, one, one, nu, 0);
    CHECK(s.pass());
    CHECK(s.weight_space_dim == 1);
  }

  auto mixed = line({w, weightmod::finite_dim(kA1, {2}), weightmod::finite_dim(kA1, {1})});
  auto m = trace_identity_check(mixed, t, t2, 1, 20);
  CHECK(m.pass());
  CHECK(m.weight_space_dim == 6);

  auto ww = line({w, w});
  CHECK_THROWS_AS(trace_identity_check(ww, t, t2, 0, 10), InvalidArgument);
  CHECK(trace_identity_check(ww, t, t2, 1, 10).weight_space_dim == 0);
}
