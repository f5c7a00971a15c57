#include "liecensus/errors.hpp"
#include "liecensus/weyl.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace liecensus;

namespace {

Weight fundamental(int rank, int index) {
  std::vector<int> w(rank, 0);
  w[index] = 1;
  return Weight(w);
}

} // namespace

TEST_CASE("spot dimensions") {
  CHECK(weyl_dim(LieType(Family::A, 2), Weight({0, 0})) == 1);
  CHECK(weyl_dim(LieType(Family::A, 2), Weight({2, 5})) == 81);
  CHECK(weyl_dim(LieType(Family::B, 3), Weight({1, 0, 0})) == 7);
  CHECK(weyl_dim(LieType(Family::E8, 8), fundamental(8, 7)) == 248);
  // B2 separates the vector and spin modules; C2 mirrors them.
  CHECK(weyl_dim(LieType(Family::B, 2), Weight({1, 0})) == 5);
  CHECK(weyl_dim(LieType(Family::B, 2), Weight({0, 1})) == 4);
  CHECK(weyl_dim(LieType(Family::C, 2), Weight({1, 0})) == 4);
  CHECK(weyl_dim(LieType(Family::C, 2), Weight({0, 1})) == 5);
}

TEST_CASE("fundamental-weight golden values") {
  for (int n = 1; n <= 10; ++n)
    CHECK(weyl_dim(LieType(Family::A, n), fundamental(n, 0)) == n + 1);
  for (int n = 2; n <= 10; ++n)
    CHECK(weyl_dim(LieType(Family::B, n), fundamental(n, 0)) == 2 * n + 1);
  for (int n = 2; n <= 10; ++n)
    CHECK(weyl_dim(LieType(Family::C, n), fundamental(n, 0)) == 2 * n);
  for (int n = 3; n <= 10; ++n)
    CHECK(weyl_dim(LieType(Family::D, n), fundamental(n, 0)) == 2 * n);
  CHECK(weyl_dim(LieType(Family::E6, 6), fundamental(6, 0)) == 27);
  CHECK(weyl_dim(LieType(Family::E7, 7), fundamental(7, 6)) == 56);
  CHECK(weyl_dim(LieType(Family::E8, 8), fundamental(8, 7)) == 248);
  CHECK(weyl_dim(LieType(Family::F4, 4), fundamental(4, 3)) == 26);
  CHECK(weyl_dim(LieType(Family::G2, 2), fundamental(2, 0)) == 7);
}

TEST_CASE("A3 = D3 under the Bourbaki relabeling") {
  // Natural module of D3 is the 6-dimensional wedge-square of A3.
  CHECK(weyl_dim(LieType(Family::D, 3), Weight({1, 0, 0})) ==
        weyl_dim(LieType(Family::A, 3), Weight({0, 1, 0})));
  // Half-spins of D3 are the natural module of A3 and its dual.
  CHECK(weyl_dim(LieType(Family::D, 3), Weight({0, 1, 0})) == 4);
  CHECK(weyl_dim(LieType(Family::D, 3), Weight({0, 0, 1})) == 4);
}

TEST_CASE("bn1 bound examples") {
  CHECK(bn1_bound(LieType(Family::A, 2), Weight({2, 5})) == 216);
  CHECK(bn1_bound(LieType(Family::G2, 2), Weight({1, 0})) == 64);
  for (int k : {0, 1, 5, 40})
    CHECK(bn1_bound(LieType(Family::A, 1), Weight({k})) ==
          weyl_dim(LieType(Family::A, 1), Weight({k})));
}

TEST_CASE("dual weight table") {
  CHECK(dual_weight(LieType(Family::A, 2), Weight({2, 5})) == Weight({5, 2}));
  CHECK(dual_weight(LieType(Family::B, 3), Weight({0, 1, 1})) == Weight({0, 1, 1}));
  CHECK(dual_weight(LieType(Family::D, 5), Weight({0, 0, 0, 1, 0})) ==
        Weight({0, 0, 0, 0, 1}));
  CHECK(dual_weight(LieType(Family::D, 4), Weight({0, 1, 2, 3})) == Weight({0, 1, 2, 3}));
  CHECK(dual_weight(LieType(Family::E6, 6), Weight({1, 0, 0, 0, 0, 0})) ==
        Weight({0, 0, 0, 0, 0, 1}));
  CHECK_FALSE(is_self_dual(LieType(Family::A, 2), Weight({2, 5})));
  CHECK(is_self_dual(LieType(Family::A, 2), Weight({1, 1})));
  CHECK(is_self_dual(LieType(Family::C, 3), Weight({2, 0, 5})));
}

TEST_CASE("dual table agrees with the longest-element oracle") {
  std::mt19937 rng(20240501);
  std::uniform_int_distribution<int> entry(0, 4);
  std::vector<LieType> types;
  for (int n = 1; n <= 6; ++n) types.emplace_back(Family::A, n);
  for (int n = 2; n <= 6; ++n) types.emplace_back(Family::B, n);
  for (int n = 2; n <= 6; ++n) types.emplace_back(Family::C, n);
  for (int n = 3; n <= 8; ++n) types.emplace_back(Family::D, n);
  types.emplace_back(Family::E6, 6);
  types.emplace_back(Family::F4, 4);
  types.emplace_back(Family::G2, 2);
  for (const auto& t : types) {
    CAPTURE(t.name());
    for (int i = 0; i < t.rank; ++i) {
      const Weight w = fundamental(t.rank, i);
      CHECK(dual_weight(t, w) == oracles::dual_by_longest_element(t, w));
    }
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<int> v(t.rank);
      for (auto& a : v) a = entry(rng);
      const Weight w{v};
      CHECK(dual_weight(t, w) == oracles::dual_by_longest_element(t, w));
    }
  }
}

TEST_CASE("duality is an involution and preserves dimension") {
  std::mt19937 rng(77);
  std::uniform_int_distribution<int> entry(0, 6);
  for (const auto& t : {LieType(Family::A, 5), LieType(Family::D, 5), LieType(Family::E6, 6)}) {
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<int> v(t.rank);
      for (auto& a : v) a = entry(rng);
      const Weight w{v};
      const Weight d = dual_weight(t, w);
      CHECK(dual_weight(t, d) == w);
      CHECK(weyl_dim(t, d) == weyl_dim(t, w));
    }
  }
}

TEST_CASE("dimension one only at the zero weight") {
  for (const auto& t : {LieType(Family::A, 3), LieType(Family::G2, 2)}) {
    CHECK(weyl_dim(t, Weight(std::vector<int>(t.rank, 0))) == 1);
    for (int i = 0; i < t.rank; ++i) CHECK(weyl_dim(t, fundamental(t.rank, i)) > 1);
  }
}

TEST_CASE("error paths") {
  CHECK_THROWS_AS(weyl_dim(LieType(Family::A, 2), Weight({1})), domain_error);
  CHECK_THROWS_AS(weyl_dim(LieType(Family::A, 2), Weight({1, -1})), domain_error);
  CHECK_THROWS_AS(dual_weight(LieType(Family::A, 2), Weight({1, 2, 3})), domain_error);
  CHECK_THROWS_AS(bn1_bound(LieType(Family::B, 1), Weight({1})), domain_error);
}

TEST_CASE("Lemma-style property sample: integrality, monotonicity, bn1 cap") {
  std::mt19937 rng(424242);
  std::uniform_int_distribution<int> entry(0, 10);
  std::vector<LieType> types;
  for (Family f : all_families) {
    const int lo = min_rank(f);
    const int hi = is_exceptional(f) ? exceptional_rank(f) : 8;
    for (int n = lo; n <= hi; ++n) types.emplace_back(f, n);
  }
  std::uniform_int_distribution<std::size_t> pick(0, types.size() - 1);
  for (int trial = 0; trial < 500; ++trial) {
    const LieType& t = types[pick(rng)];
    std::vector<int> v(t.rank);
    for (auto& a : v) a = entry(rng);
    const Weight w{v};
    const Int d = weyl_dim(t, w); // would throw internal_error on a non-integer product
    CHECK(d >= 1);
    CHECK(d <= bn1_bound(t, w));
    auto bumped = v;
    bumped[static_cast<std::size_t>(trial) % v.size()] += 1;
    CHECK(weyl_dim(t, Weight(bumped)) > d);
  }
}
