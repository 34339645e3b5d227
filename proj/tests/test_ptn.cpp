#include <gtest/gtest.h>

#include "oracles.hpp"
#include "ratcat/ptn.hpp"

using namespace ratcat;

namespace {

std::vector<Frame> coprime_up_to(int n) {
  std::vector<Frame> out;
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      if (std::gcd(a, b) == 1) out.push_back({a, b});
  return out;
}

}  // namespace

TEST(Partition, Basics) {
  const Partition p{4, 4, 1, 1, 1, 0};
  EXPECT_EQ(p.length(), 5);
  EXPECT_EQ(p.size(), 11);
  EXPECT_EQ(p.part(6), 0);
  EXPECT_EQ(p.multiplicity(1), 3);
  EXPECT_THROW(Partition({1, 2}), DomainError);
  EXPECT_THROW(Partition({2, -1}), DomainError);
  EXPECT_EQ(conjugate(Partition{3, 1}), (Partition{2, 1, 1}));
}

TEST(ZLambda, Examples) {
  EXPECT_EQ(z_lambda(Partition{4, 4, 1, 1, 1}), 192);
  EXPECT_EQ(z_lambda(Partition{3, 2, 1}), 6);
  EXPECT_EQ(z_lambda(Partition{}), 1);
}

TEST(PartitionsOf, CountsAndOrder) {
  const long long p[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int n = 0; n <= 10; ++n) EXPECT_EQ(static_cast<long long>(partitions_of(n).size()), p[n]);
  const auto four = partitions_of(4);
  EXPECT_TRUE(std::is_sorted(four.rbegin(), four.rend()));
  EXPECT_EQ(four.front(), Partition{4});
}

TEST(EnumerateBox, MatchesTupleOracle) {
  EXPECT_EQ(enumerate_box(2, 3).size(), 10u);
  for (int s = 0; s <= 5; ++s)
    for (int r = 0; r <= 5; ++r) {
      std::set<Partition> got;
      for (const auto& mu : enumerate_box(s, r)) got.insert(mu);
      std::set<Partition> expected;
      for (auto& v : oracle::box(s, r)) expected.insert(Partition(v));
      EXPECT_EQ(got, expected);
      EXPECT_EQ(static_cast<long long>(enumerate_box(s, r).size()), oracle::choose(s + r, s));
    }
}

TEST(EnumerateTriangle, ThreeFive) {
  std::set<Partition> got;
  for (const auto& mu : enumerate_triangle(Frame{3, 5})) got.insert(mu);
  const std::set<Partition> expected{{3, 1}, {2, 1}, {3}, {2}, {1, 1}, {1}, {}};
  EXPECT_EQ(got, expected);
}

TEST(Frontier, Examples) {
  EXPECT_EQ(frontier(Partition{6, 3, 2}, Frame{5, 8}).str(), "NNEENENEEENEE");
  EXPECT_EQ(frontier(Partition{3, 3}, Frame{2, 3}).str(), "EEENN");
  EXPECT_THROW(frontier(Partition{4}, Frame{2, 3}), DomainError);
  for (int s = 0; s <= 4; ++s)
    for (int r = 0; r <= 4; ++r)
      for (const auto& mu : enumerate_box(s, r))
        EXPECT_EQ(partition_of_frontier(frontier(mu, Frame{s, r}), Frame{s, r}), mu);
}

TEST(ArmLeg, Examples) {
  EXPECT_EQ(arm_leg(Partition{6, 3, 2}, 1, 1), (ArmLeg{5, 2}));
  EXPECT_EQ(arm_leg(Partition{3, 1}, 1, 2), (ArmLeg{1, 0}));
  EXPECT_THROW(arm_leg(Partition{3, 1}, 2, 2), DomainError);
}

TEST(HStatistics, Examples) {
  EXPECT_EQ(h_plus(Partition{6, 3, 2}, Frame{5, 8}), 9);
  EXPECT_EQ(h_minus(Partition{6, 3, 2}, Frame{5, 8}), 9);
  EXPECT_EQ(h_plus(Partition{3, 1}, Frame{3, 5}), 4);
  EXPECT_EQ(h_via_levels(Partition{6, 3, 2}, Frame{5, 8}, Sign::plus), 9);
}

TEST(HStatistics, MatchCellOracle) {
  for (int s = 0; s <= 5; ++s)
    for (int r = 0; r <= 5; ++r)
      for (auto& v : oracle::box(s, r)) {
        const Partition mu(v);
        EXPECT_EQ(h_plus(mu, Frame{s, r}), oracle::h_stat(v, s, r, true));
        EXPECT_EQ(h_minus(mu, Frame{s, r}), oracle::h_stat(v, s, r, false));
      }
}

// |μ|, frontier, h+ rows of the coprime (3,5) triangle table.
TEST(Tables, ThreeFiveTriangle) {
  struct Row {
    Partition mu;
    const char* frontier;
    int size, h, total;
  };
  const Row rows[] = {{{3, 1}, "NENEENEE", 4, 4, 8}, {{2, 1}, "NENENEEE", 3, 3, 6}, {{3}, "NNEEENEE", 3, 2, 5},
                      {{2}, "NNEENEEE", 2, 2, 4},    {{1, 1}, "NENNEEEE", 2, 1, 3}, {{1}, "NNENEEEE", 1, 1, 2},
                      {{}, "NNNEEEEE", 0, 0, 0}};
  const Frame f{3, 5};
  for (const auto& r : rows) {
    EXPECT_EQ(frontier(r.mu, f).str(), r.frontier);
    EXPECT_EQ(r.mu.size(), r.size);
    EXPECT_EQ(h_plus(r.mu, f), r.h);
    EXPECT_EQ(r.mu.size() + h_plus(r.mu, f), r.total);
    EXPECT_EQ(min_level(r.mu, f), 0);
    EXPECT_TRUE(in_triangle(r.mu, f));
  }
}

// Every partition of the 2x3 box with frontier, |μ|, ml, h+ and the exponent.
TEST(Tables, TwoThreeBox) {
  struct Row {
    Partition mu;
    const char* frontier;
    int size, ml, h, total;
  };
  const Row rows[] = {{{}, "NNEEE", 0, 0, 0, 0},       {{1}, "NENEE", 1, 0, 1, 2},
                      {{2}, "NEENE", 2, -1, 2, 3},     {{3}, "NEEEN", 3, -3, 2, 2},
                      {{1, 1}, "ENNEE", 2, -2, 1, 1},  {{2, 1}, "ENENE", 3, -2, 3, 4},
                      {{3, 1}, "ENEEN", 4, -3, 4, 5},  {{2, 2}, "EENNE", 4, -4, 3, 3},
                      {{3, 2}, "EENEN", 5, -4, 5, 6},  {{3, 3}, "EEENN", 6, -6, 4, 4}};
  const Frame f{2, 3};
  for (const auto& r : rows) {
    EXPECT_EQ(frontier(r.mu, f).str(), r.frontier) << r.mu.to_string();
    EXPECT_EQ(r.mu.size(), r.size);
    EXPECT_EQ(min_level(r.mu, f), r.ml) << r.mu.to_string();
    EXPECT_EQ(h_plus(r.mu, f), r.h) << r.mu.to_string();
    EXPECT_EQ(r.mu.size() + min_level(r.mu, f) + h_plus(r.mu, f), r.total);
  }
}

TEST(MinLevel, ZeroExactlyOnTriangle) {
  for (Frame f : coprime_up_to(6))
    for (const auto& mu : enumerate_box(f.a, f.b)) EXPECT_EQ(min_level(mu, f) == 0, in_triangle(mu, f));
}

TEST(HViaLevels, BothSignsOnBoxes) {
  for (int s = 0; s <= 8; ++s)
    for (int r = 0; r <= 8; ++r)
      for (const auto& mu : enumerate_box(s, r)) {
        ASSERT_EQ(h_via_levels(mu, Frame{s, r}, Sign::plus), h_plus(mu, Frame{s, r}));
        ASSERT_EQ(h_via_levels(mu, Frame{s, r}, Sign::minus), h_minus(mu, Frame{s, r}));
      }
}

TEST(CyclicShift, EmptyPartitionInTwoThree) {
  EXPECT_EQ(cshift_partition(Partition{}, Frame{2, 3}), Partition{3});
}

TEST(CyclicShift, DeltaFormulasBothCases) {
  int starts_n = 0, starts_e = 0;
  for (int s = 1; s <= 8; ++s)
    for (int r = 1; r <= 8; ++r)
      for (const auto& mu : enumerate_box(s, r)) {
        const Frame f{s, r};
        const int delta = h_plus(cshift_partition(mu, f), f) - h_plus(mu, f);
        const auto d = cshift_delta_formulas(mu, f);
        ASSERT_EQ(d.by_steps, delta) << mu.to_string() << " in " << s << "x" << r;
        ASSERT_EQ(d.by_levels, delta) << mu.to_string() << " in " << s << "x" << r;
        (frontier(mu, f)[0] == Step::N ? starts_n : starts_e)++;
      }
  EXPECT_GT(starts_n, 0);
  EXPECT_GT(starts_e, 0);
}

TEST(Orbits, SizesAndCover) {
  EXPECT_EQ(orbit_decompose(Frame{2, 3}).size(), 2u);
  const auto o = orbit_decompose(Frame{3, 5});
  EXPECT_EQ(o.size(), 7u);
  for (const auto& orbit : o) EXPECT_EQ(orbit.members.size(), 8u);
  EXPECT_THROW(orbit_decompose(Frame{2, 4}), DomainError);
}

TEST(Lem3, ExampleAndExhaustive) {
  EXPECT_TRUE(lem3_check(Partition{2, 1}, Frame{3, 5}));
  for (Frame f : coprime_up_to(8))
    for (const auto& mu0 : enumerate_triangle(f)) ASSERT_TRUE(lem3_check(mu0, f)) << mu0.to_string();
}

// Box sum factors as [a+b]_q times the triangle sum.
TEST(Lem3, CoarseFactorization) {
  for (Frame f : coprime_up_to(8)) {
    std::map<int, long long> box, tri;
    for (const auto& mu : enumerate_box(f.a, f.b)) ++box[mu.size() + min_level(mu, f) + h_plus(mu, f)];
    for (const auto& mu : enumerate_triangle(f)) ++tri[mu.size() + h_plus(mu, f)];
    std::map<int, long long> prod;
    for (auto [e, c] : tri)
      for (int k = 0; k < f.a + f.b; ++k) prod[e + k] += c;
    EXPECT_EQ(box, prod) << f.a << "," << f.b;
  }
}
