#include "liecensus/candidates.hpp"
#include "liecensus/errors.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>
#include <tuple>

using namespace liecensus;

namespace {

bool contains(const std::vector<TypeTwist>& ts, Family f, int rank, int e) {
  return std::find(ts.begin(), ts.end(), TypeTwist{f, rank, e}) != ts.end();
}

bool has_flag(const std::vector<std::string>& fl, const char* name) {
  return std::find(fl.begin(), fl.end(), std::string(name)) != fl.end();
}

// Independent filter over the full p-restricted box; mirrors the screened
// conditions directly from their definitions.
CandidateWeights box_candidate_oracle(const LieType& type, long long r, long long p,
                                      bool exclude_self_dual, long long cap,
                                      bool inclusive) {
  CandidateWeights out;
  const auto box = oracles::box_scan(type, 4 * cap); // box wide enough to cover the cap
  for (const auto& e : box) {
    if (!e.weight.is_p_restricted(p)) continue;
    if (inclusive ? e.dim > cap : e.dim >= cap) continue;
    if (e.dim == r) {
      out.flagged.push_back({e.weight, e.dim, {flags::kac_case_excluded}});
      continue;
    }
    if (e.dim <= r || e.dim <= p) continue;
    if (exclude_self_dual && is_self_dual(type, e.weight)) {
      out.flagged.push_back({e.weight, e.dim, {flags::self_dual_filtered_out}});
      continue;
    }
    out.main.push_back({e.weight, e.dim, {flags::over_approximation}});
  }
  return out;
}

} // namespace

TEST_CASE("allowed_types at r = 3") {
  const auto ts = allowed_types(3, true);
  REQUIRE(ts.size() == 2);
  CHECK(ts[0] == TypeTwist{Family::A, 2, 1});
  CHECK(ts[1] == TypeTwist{Family::A, 2, 2});
  CHECK_THROWS_AS(allowed_types(2, true), domain_error);
  CHECK_THROWS_AS(allowed_types(4, true), domain_error);
}

TEST_CASE("allowed_types at r = 7") {
  const auto excl = allowed_types(7, true);
  REQUIRE(excl.size() == 6);
  for (int n = 2; n <= 4; ++n) {
    CHECK(contains(excl, Family::A, n, 1));
    CHECK(contains(excl, Family::A, n, 2));
  }
  for (const auto& t : excl) CHECK(t.family == Family::A);

  const auto full = allowed_types(7, false);
  CHECK(contains(full, Family::A, 1, 1));
  for (int n = 2; n <= 4; ++n) {
    CHECK(contains(full, Family::B, n, 1));
    CHECK(contains(full, Family::C, n, 1));
  }
  CHECK(contains(full, Family::D, 3, 1));
  CHECK(contains(full, Family::D, 4, 1));
  CHECK(contains(full, Family::D, 3, 2));
  CHECK(contains(full, Family::D, 4, 2));
  CHECK(contains(full, Family::D, 4, 3));
  CHECK(contains(full, Family::G2, 2, 1));
  CHECK(contains(full, Family::F4, 4, 1));
  // Rank cap: no rank-5 type since 25 >= 21; no E6.
  for (const auto& t : full) {
    CHECK(static_cast<long long>(t.rank) * t.rank < 21);
    CHECK(t.family != Family::E6);
  }
  // Suzuki/Ree twists never appear.
  for (const auto& t : full)
    if (t.family == Family::B || t.family == Family::C || t.family == Family::F4 ||
        t.family == Family::G2)
      CHECK(t.twist_e == 1);
}

TEST_CASE("allowed_types picks up D5 and 2E6 once the rank cap allows") {
  const auto ts = allowed_types(13, true);
  CHECK(contains(ts, Family::D, 5, 1));
  CHECK(contains(ts, Family::D, 5, 2));
  CHECK(contains(ts, Family::E6, 6, 1));
  CHECK(contains(ts, Family::E6, 6, 2));
  // D4 stays out of the non-self-dual list (even rank), D6 too.
  CHECK_FALSE(contains(ts, Family::D, 4, 1));
  CHECK_FALSE(contains(ts, Family::D, 6, 1));
}

TEST_CASE("field exponents") {
  CHECK(field_exponents(6, 2) == std::vector<long long>{3, 6});
  CHECK(field_exponents(1, 3) == std::vector<long long>{1});
  CHECK(field_exponents(4, 1) == std::vector<long long>{4});
  CHECK(field_exponents(6, 3) == std::vector<long long>{2, 6});
  CHECK(field_exponents(5, 2) == std::vector<long long>{5});
  CHECK_THROWS_AS(field_exponents(0, 1), domain_error);
  CHECK_THROWS_AS(field_exponents(4, 4), domain_error);
  for (long long k : {1, 2, 3, 4, 6, 12})
    for (int e : {1, 2, 3}) {
      const auto t = field_exponents(k, e);
      CHECK(std::find(t.begin(), t.end(), k) != t.end());
      for (long long v : t) CHECK((v == k || v * e == k));
    }
}

TEST_CASE("candidate_weights equals the brute-force oracle for A2, r=3") {
  const LieType a2(Family::A, 2);
  for (long long p : {5, 7, 11}) {
    CAPTURE(p);
    const auto got = candidate_weights(a2, 3, p, true);
    CHECK(got.cap_bound == 27);
    CHECK(got.cap_inclusive);
    const auto expect = box_candidate_oracle(a2, 3, p, true, 27, true);
    REQUIRE(got.main.size() == expect.main.size());
    for (std::size_t i = 0; i < got.main.size(); ++i) {
      CHECK(got.main[i].weight == expect.main[i].weight);
      CHECK(got.main[i].dim == expect.main[i].dim);
      CHECK(got.main[i].wflags == expect.main[i].wflags);
    }
    REQUIRE(got.flagged.size() == expect.flagged.size());
    for (std::size_t i = 0; i < got.flagged.size(); ++i) {
      CHECK(got.flagged[i].weight == expect.flagged[i].weight);
      CHECK(got.flagged[i].wflags == expect.flagged[i].wflags);
    }
  }
}

TEST_CASE("candidate_weights spot checks at (A2, r=3, p=7)") {
  const auto cw = candidate_weights(LieType(Family::A, 2), 3, 7, true);
  auto in_main = [&](const Weight& w) {
    return std::any_of(cw.main.begin(), cw.main.end(),
                       [&](const WeightCandidate& c) { return c.weight == w; });
  };
  CHECK(in_main(Weight({2, 1})));      // dim 15 > 7
  CHECK_FALSE(in_main(Weight({2, 0}))); // dim 6 < 7 fails p < dim W
  CHECK_FALSE(in_main(Weight({1, 1}))); // self-dual
  int kac = 0, sd = 0;
  for (const auto& c : cw.flagged) {
    if (has_flag(c.wflags, flags::kac_case_excluded)) {
      ++kac;
      CHECK((c.weight == Weight({1, 0}) || c.weight == Weight({0, 1})));
    }
    if (has_flag(c.wflags, flags::self_dual_filtered_out)) ++sd;
  }
  CHECK(kac == 2);
  CHECK(sd == 2); // (1,1) and (2,2)
  for (const auto& c : cw.main) CHECK(has_flag(c.wflags, flags::over_approximation));
}

TEST_CASE("self-dual weights stay in the main list when allowed") {
  const auto cw = candidate_weights(LieType(Family::A, 2), 3, 7, false);
  auto in_main = [&](const Weight& w) {
    return std::any_of(cw.main.begin(), cw.main.end(),
                       [&](const WeightCandidate& c) { return c.weight == w; });
  };
  CHECK(in_main(Weight({1, 1})));
  CHECK(in_main(Weight({2, 2})));
}

TEST_CASE("enumerate_candidates r=3 k=1 structure") {
  const auto result = enumerate_candidates(3, 1);
  CHECK(result.summary.prime_limit == 140);
  CHECK(result.summary.per_p.size() == 34);
  CHECK(result.summary.per_p.front().p == 2);
  CHECK(result.summary.per_p.back().p == 139);
  CHECK(result.summary.total_main == 100);
  CHECK(result.summary.per_p_within_bb1);
  CHECK(result.summary.total_within_th8);
  CHECK(result.summary.total_within_t11);
  REQUIRE(result.summary.bb1_floor.has_value());
  CHECK(*result.summary.bb1_floor == 2025);

  for (const auto& rec : result.records) {
    CHECK(rec.descriptor.lie_type == LieType(Family::A, 2));
    CHECK(rec.descriptor.field_exponent_t == 1);
    CHECK((rec.descriptor.twist_e == 1 || rec.descriptor.twist_e == 2));
    CHECK(validate_record(rec, 3, 1).empty());
  }
  for (const auto& rec : result.flagged_records) CHECK(validate_record(rec, 3, 1).empty());

  // Twisted groups at t = k carry the unverified-realization flag.
  bool saw_t_eq_k = false;
  for (const auto& rec : result.records)
    if (rec.descriptor.twist_e == 2) {
      CHECK(has_flag(rec.record_flags, flags::t_eq_k_unverified));
      saw_t_eq_k = true;
    }
  CHECK(saw_t_eq_k);
}

TEST_CASE("enumerate_candidates r=3 k=2 carries both field exponents for 2A2") {
  CandidateOptions opts;
  opts.p_limit_override = 12;
  const auto result = enumerate_candidates(3, 2, opts);
  std::set<long long> twisted_ts, untwisted_ts;
  for (const auto& rec : result.records) {
    if (rec.descriptor.twist_e == 2) twisted_ts.insert(rec.descriptor.field_exponent_t);
    else untwisted_ts.insert(rec.descriptor.field_exponent_t);
  }
  CHECK(twisted_ts == std::set<long long>{1, 2});
  CHECK(untwisted_ts == std::set<long long>{2});
  for (const auto& rec : result.records) CHECK(validate_record(rec, 3, 2).empty());
}

TEST_CASE("enumerate_candidates refuses an unsieveable range") {
  CHECK_THROWS_AS(enumerate_candidates(7, 1), resource_limit_error);
  // With an explicit p limit the same degree runs fine.
  CandidateOptions opts;
  opts.p_limit_override = 20;
  const auto result = enumerate_candidates(7, 1, opts);
  CHECK(result.summary.prime_limit == 20);
  for (const auto& rec : result.records) CHECK(validate_record(rec, 7, 1).empty());
}

TEST_CASE("the 2G2 degree-7 stub appears only in the permissive side list") {
  CandidateOptions opts;
  opts.p_limit_override = 10;
  opts.exclude_self_dual = false;
  const auto result = enumerate_candidates(7, 1, opts);
  int stubs = 0;
  for (const auto& rec : result.flagged_records)
    if (has_flag(rec.record_flags, flags::ree_g2_stub)) {
      ++stubs;
      CHECK(rec.descriptor.lie_type == LieType(Family::G2, 2));
      CHECK(rec.descriptor.twist_e == 2);
      CHECK(rec.descriptor.characteristic_p == 3);
      CHECK(rec.dim == 7);
      CHECK(validate_record(rec, 7, 1).empty());
    }
  CHECK(stubs == 1);
  for (const auto& rec : result.records) CHECK_FALSE(has_flag(rec.record_flags, flags::ree_g2_stub));

  // The strict run never emits it.
  opts.exclude_self_dual = true;
  const auto strict = enumerate_candidates(7, 1, opts);
  for (const auto& rec : strict.flagged_records)
    CHECK_FALSE(has_flag(rec.record_flags, flags::ree_g2_stub));
}

TEST_CASE("streaming and collecting agree, and reruns are identical") {
  CandidateOptions opts;
  opts.p_limit_override = 30;
  const auto first = enumerate_candidates(5, 1, opts);
  const auto second = enumerate_candidates(5, 1, opts);
  REQUIRE(first.records.size() == second.records.size());
  for (std::size_t i = 0; i < first.records.size(); ++i) {
    CHECK(first.records[i].descriptor == second.records[i].descriptor);
    CHECK(first.records[i].weight == second.records[i].weight);
    CHECK(first.records[i].dim == second.records[i].dim);
    CHECK(first.records[i].record_flags == second.records[i].record_flags);
  }

  std::vector<CandidateRecord> streamed;
  enumerate_candidates_stream(
      5, 1, opts, [&](const CandidateRecord& r) { streamed.push_back(r); },
      [](const CandidateRecord&) {});
  REQUIRE(streamed.size() == first.records.size());
  for (std::size_t i = 0; i < streamed.size(); ++i)
    CHECK(streamed[i].weight == first.records[i].weight);
}

TEST_CASE("records come out in deterministic (p, type, twist, t, weight) order") {
  CandidateOptions opts;
  opts.p_limit_override = 25;
  const auto result = enumerate_candidates(5, 1, opts);
  for (std::size_t i = 1; i < result.records.size(); ++i) {
    const auto& a = result.records[i - 1];
    const auto& b = result.records[i];
    const auto ka = std::make_tuple(a.descriptor.characteristic_p, a.descriptor.lie_type,
                                    a.descriptor.twist_e, a.descriptor.field_exponent_t,
                                    a.weight);
    const auto kb = std::make_tuple(b.descriptor.characteristic_p, b.descriptor.lie_type,
                                    b.descriptor.twist_e, b.descriptor.field_exponent_t,
                                    b.weight);
    CHECK(ka < kb);
  }
}

TEST_CASE("descriptor names") {
  CHECK(FiniteGroupDescriptor{LieType(Family::A, 2), 2, 1, 7}.name() == "2A2(7^1)");
  CHECK(FiniteGroupDescriptor{LieType(Family::D, 4), 3, 2, 5}.name() == "3D4(5^2)");
  CHECK(FiniteGroupDescriptor{LieType(Family::A, 1), 1, 1, 2}.name() == "A1(2^1)");
}

TEST_CASE("validate_record flags a broken record") {
  CandidateRecord rec{FiniteGroupDescriptor{LieType(Family::A, 2), 1, 1, 7}, Weight({2, 1}),
                      Int(15), {flags::over_approximation}, {}};
  CHECK(validate_record(rec, 3, 1).empty());
  rec.dim = 16; // wrong dimension
  const auto violations = validate_record(rec, 3, 1);
  CHECK(std::find(violations.begin(), violations.end(), "dim_mismatch") != violations.end());
  rec.dim = 15;
  rec.descriptor.field_exponent_t = 3;
  const auto v2 = validate_record(rec, 3, 1);
  CHECK(std::find(v2.begin(), v2.end(), "field_exponent_outside_k_et") != v2.end());
}
