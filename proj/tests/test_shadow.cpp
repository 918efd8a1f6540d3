#include "doctest.h"

#include "weightlab/shadow.hpp"

using namespace weightlab;
using namespace weightlab::rootsys;
using namespace weightlab::shadow;

namespace {

Root R(std::initializer_list<int> c) { return Root(Coords(c)); }

RootSet set_of(const RootSystem& rs, std::initializer_list<Root> roots) { return rs.make_set(std::vector<Root>(roots)); }

}  // namespace

TEST_CASE("A1 with T the whole system") {
  const RootSystem rs = build_root_system('A', 1);
  const auto p = make_partition(rs, rs.full_set());
  CHECK(p.T_s() == rs.full_set());
  CHECK(p.T_a().none());
  CHECK(p.N().none());
  CHECK_FALSE(verify_sum_not_root(p));
}

TEST_CASE("A1 with T empty") {
  const RootSystem rs = build_root_system('A', 1);
  const auto p = make_partition(rs, rs.empty_set());
  CHECK(p.N_s() == rs.full_set());
  CHECK(p.T_s().none());
  CHECK(p.N_a().none());
}

TEST_CASE("A2 partition with a negative T") {
  const RootSystem rs = build_root_system('A', 2);
  const auto T = set_of(rs, {R({-1, 0}), R({-1, -1})});
  const auto p = make_partition(rs, T);
  CHECK(p.T_a() == T);
  CHECK(p.T_s().none());
  CHECK(p.N_a() == set_of(rs, {R({1, 0}), R({1, 1})}));
  CHECK(p.N_s() == set_of(rs, {R({0, 1}), R({0, -1})}));
  CHECK(p.N_a() == rs.negate(p.T_a()));

  const auto base = find_positive_base(p);
  REQUIRE(base);
  const auto report = check_bbl_properties(p, *base);
  CHECK(report.all());
  CHECK(passes_filters(p, enumerate_bases(rs)));
  CHECK_FALSE(verify_sum_not_root(p));
}

TEST_CASE("A2 single positive root is rejected by the filter") {
  const RootSystem rs = build_root_system('A', 2);
  const auto p = make_partition(rs, set_of(rs, {R({1, 0})}));
  CHECK_FALSE(is_root_subsystem(rs, p.N_s()));
  CHECK_FALSE(passes_filters(p, enumerate_bases(rs)));
}

TEST_CASE("non-convex T raises with a witness") {
  const RootSystem rs = build_root_system('A', 2);
  const auto T = set_of(rs, {R({1, 0}), R({0, 1})});
  try {
    make_partition(rs, T);
    FAIL("expected NonConvexError");
  } catch (const NonConvexError& e) {
    CHECK(e.witness() == R({1, 1}));
  }
  CHECK_THROWS_AS(make_partition(rs, RootSet(3)), InvalidArgument);
}

TEST_CASE("convexity table agrees with the exact cone test") {
  for (const char* name : {"A1", "A2", "B2", "G2"}) {
    const RootSystem rs = build_root_system(name);
    const ConvexityTable table(rs);
    const std::uint32_t subsets = std::uint32_t{1} << rs.size();
    std::size_t disagreements = 0;
    for (std::uint32_t mask = 0; mask < subsets; ++mask) {
      const bool exact = is_convex(rs, RootSet(rs.size(), mask));
      if (exact != table.is_convex(mask)) ++disagreements;
    }
    INFO(name);
    CHECK(disagreements == 0);
  }
}

TEST_CASE("exhaustive check of the sum lemma on small systems") {
  for (const char* name : {"A1", "A2", "B2", "G2", "A3"}) {
    const RootSystem rs = build_root_system(name);
    const auto s = enumerate_and_verify(rs, 1);
    INFO(name << ": " << s.summary_line());
    CHECK(s.pass());
    CHECK(s.subsets == (std::size_t{1} << rs.size()));
    CHECK(s.filtered > 0);
    CHECK(s.verified == s.filtered);
    CHECK(s.filtered <= s.total);
  }
}

TEST_CASE("convex subsets of A1 are counted exactly") {
  // ∅, {α}, {−α}, Φ.
  const auto s = enumerate_and_verify(build_root_system('A', 1), 1);
  CHECK(s.total == 4);
  CHECK(s.summary_line() == "total=4, filtered=" + std::to_string(s.filtered) + ", counterexamples=0");
}

TEST_CASE("enumeration does not depend on the thread count") {
  const RootSystem rs = build_root_system("B2");
  const auto one = enumerate_and_verify(rs, 1);
  const auto four = enumerate_and_verify(rs, 4);
  CHECK(one.total == four.total);
  CHECK(one.filtered == four.filtered);
  CHECK(one.verified == four.verified);
}

TEST_CASE("enumeration guard") {
  CHECK_THROWS_AS(enumerate_and_verify(build_root_system("A4"), 1), ResourceLimit);
}

TEST_CASE("sampled hulls are convex and satisfy the lemma") {
  const RootSystem rs = build_root_system("A4");
  const auto s = sample_and_verify(rs, 40, 11);
  CHECK(s.subsets == 40);
  CHECK(s.total == 40);
  CHECK(s.pass());
}

TEST_CASE("filtered partitions agree with a direct sum check") {
  const RootSystem rs = build_root_system("G2");
  const auto bases = enumerate_bases(rs);
  const ConvexityTable table(rs);
  for (std::uint32_t mask = 0; mask < (1u << rs.size()); ++mask) {
    if (!table.is_convex(mask)) continue;
    const auto p = partition_of_convex(rs, RootSet(rs.size(), mask));
    if (!passes_filters(p, bases)) continue;
    for (const auto& a : rs.members(p.N_s())) {
      for (const auto& b : rs.members(p.T_s())) {
        CHECK_FALSE(rs.index_of((a + b).coords()).has_value());
      }
    }
  }
}
