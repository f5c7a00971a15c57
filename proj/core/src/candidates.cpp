#include "liecensus/candidates.hpp"

#include "liecensus/errors.hpp"
#include "liecensus/weyl.hpp"

#include "parallel.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

namespace liecensus {

namespace {

bool twist_allowed(Family f, int rank, int e) {
  if (e == 1) return true;
  if (e == 2) return (f == Family::A && rank >= 2) || f == Family::D || f == Family::E6;
  if (e == 3) return f == Family::D && rank == 4;
  return false;
}

// Families whose irreducible representations can fail to preserve a
// symmetric form: A_n (n > 1), D_n with n odd (n >= 5), E6 -- with their
// order-2 twists.
bool can_be_non_self_dual(Family f, int rank, int e) {
  if (e == 3) return false;
  switch (f) {
    case Family::A: return rank >= 2;
    case Family::D: return rank >= 5 && rank % 2 == 1;
    case Family::E6: return true;
    default: return false;
  }
}

bool has_flag(const std::vector<std::string>& fl, const char* name) {
  return std::find(fl.begin(), fl.end(), name) != fl.end();
}

// Shared per-process memo of enumerated weight tables: the enumeration
// cap depends on (type, r) only, so every characteristic p reuses it.
const std::vector<CensusEntry>& enumerated_weights_memo(const LieType& type, long long cap,
                                                        const CacheConfig* cache) {
  static std::mutex mu;
  static std::map<std::pair<LieType, long long>, std::unique_ptr<std::vector<CensusEntry>>> memo;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(type, cap);
  auto it = memo.find(key);
  if (it == memo.end())
    it = memo
             .emplace(key, std::make_unique<std::vector<CensusEntry>>(
                               enumerate_weights(type, cap, cache)))
             .first;
  return *it->second;
}

constexpr const char* rule_rank = "rank_sq_lt_3r";
constexpr const char* rule_no_suzuki_ree = "no_suzuki_ree";
constexpr const char* rule_field = "k_eq_t_or_et";
constexpr const char* rule_restricted = "p_restricted";
constexpr const char* rule_dim_gt_r = "dim_gt_r";
constexpr const char* rule_dim_gt_p = "dim_gt_p";
constexpr const char* rule_cap = "dim_le_weyl_cap";
constexpr const char* rule_not_sd = "not_self_dual";

std::vector<std::string> main_rules(bool exclude_self_dual) {
  std::vector<std::string> rules = {rule_rank,     rule_no_suzuki_ree, rule_field,
                                    rule_restricted, rule_dim_gt_r,    rule_dim_gt_p,
                                    rule_cap};
  if (exclude_self_dual) rules.push_back(rule_not_sd);
  return rules;
}

} // namespace

std::string FiniteGroupDescriptor::name() const {
  std::string out;
  if (twist_e > 1) out += std::to_string(twist_e);
  out += lie_type.name();
  out += "(" + std::to_string(characteristic_p) + "^" + std::to_string(field_exponent_t) + ")";
  return out;
}

std::vector<TypeTwist> allowed_types(long long r, bool exclude_self_dual) {
  if (r <= 2 || !is_prime(r)) throw domain_error("prime degree must be an odd prime");
  std::vector<TypeTwist> out;
  for (Family f : all_families) {
    const int lo = min_rank(f);
    const int hi = is_exceptional(f) ? exceptional_rank(f) : (1 << 16);
    for (int n = lo; n <= hi; ++n) {
      if (static_cast<long long>(n) * n >= 3 * r) break;
      for (int e : {1, 2, 3}) {
        if (!twist_allowed(f, n, e)) continue;
        if (exclude_self_dual && !can_be_non_self_dual(f, n, e)) continue;
        out.push_back(TypeTwist{f, n, e});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<long long> field_exponents(long long k, int e) {
  if (k < 1) throw domain_error("field exponent k must be >= 1");
  if (e < 1 || e > 3) throw domain_error("twist order must be 1, 2 or 3");
  std::vector<long long> out{k};
  if (e > 1 && k % e == 0 && k / e != k) out.push_back(k / e);
  std::sort(out.begin(), out.end());
  return out;
}

CandidateWeights candidate_weights(const LieType& type, long long r, long long p,
                                   bool exclude_self_dual, const CandidateOptions& opts) {
  require_valid(type);
  if (r <= 2 || !is_prime(r)) throw domain_error("prime degree must be an odd prime");
  if (p < 2 || !is_prime(p)) throw domain_error(std::to_string(p) + " is not prime");

  const BoundExpr cap = weyl_cap(type, r, opts.bit_budget);
  const bool inclusive = has_flag(cap.flags, "inclusive_bound");

  CandidateWeights cw;
  cw.cap_inclusive = inclusive;
  cw.cap_bound = -1; // symbolic-only cap
  if (cap.floor_value) {
    // Enumeration bound: dim <= floor(B) for an inclusive cap; for a
    // strict cap an integer B drops to B-1 and an irrational one keeps
    // its floor.
    cw.cap_bound = *cap.floor_value;
    if (!inclusive && cap.exact) cw.cap_bound -= 1;
  }

  cw.cap_effective = opts.dim_ceiling;
  if (cw.cap_bound >= 0 && cw.cap_bound < opts.dim_ceiling)
    cw.cap_effective = static_cast<long long>(cw.cap_bound);

  const auto& entries = enumerated_weights_memo(type, cw.cap_effective, opts.cache);
  for (const auto& e : entries) {
    if (!e.weight.is_p_restricted(p)) continue;
    if (e.dim == r) {
      cw.flagged.push_back(WeightCandidate{e.weight, e.dim, {flags::kac_case_excluded}});
      continue;
    }
    if (e.dim <= r || e.dim <= p) continue;
    if (exclude_self_dual && is_self_dual(type, e.weight)) {
      cw.flagged.push_back(WeightCandidate{e.weight, e.dim, {flags::self_dual_filtered_out}});
      continue;
    }
    cw.main.push_back(WeightCandidate{e.weight, e.dim, {flags::over_approximation}});
  }

  // Truncation check: the largest dimension inside the p-restricted box
  // is at the all-(p-1) corner; if it exceeds the effective cap while the
  // true cap lies beyond, weights were cut off.
  const bool ceiling_binds = cw.cap_bound < 0 || cw.cap_bound > cw.cap_effective;
  if (ceiling_binds) {
    const int top = static_cast<int>(std::min<long long>(p - 1, 1 << 30));
    Weight corner(std::vector<int>(type.rank, top));
    cw.truncated = weyl_dim(type, corner) > cw.cap_effective;
  }
  return cw;
}

namespace {

struct PerPrimeBlock {
  std::vector<CandidateRecord> main;
  std::vector<CandidateRecord> flagged;
  std::vector<PerPrimeCount> counts;
  std::set<std::string> notes;
};

void process_prime(long long p, long long r, long long k,
                   const std::vector<TypeTwist>& types, const CandidateOptions& opts,
                   PerPrimeBlock& block) {
  PerPrimeCount count;
  count.p = p;
  std::vector<CandidateRecord> main_records;
  std::vector<CandidateRecord> flagged_records;

  for (const auto& tt : types) {
    const LieType type(tt.family, tt.rank);
    const CandidateWeights cw =
        candidate_weights(type, r, p, opts.exclude_self_dual, opts);
    if (cw.truncated)
      block.notes.insert("weights of " + type.name() + " truncated at dimension ceiling " +
                         std::to_string(cw.cap_effective));
    for (long long t : field_exponents(k, tt.twist_e)) {
      FiniteGroupDescriptor desc{type, tt.twist_e, t, p};
      const bool t_unverified = tt.twist_e > 1 && t == k;
      for (const auto& wc : cw.main) {
        CandidateRecord rec{desc, wc.weight, wc.dim, wc.wflags,
                            main_rules(opts.exclude_self_dual)};
        if (t_unverified) rec.record_flags.push_back(flags::t_eq_k_unverified);
        std::sort(rec.record_flags.begin(), rec.record_flags.end());
        main_records.push_back(std::move(rec));
      }
      for (const auto& wc : cw.flagged) {
        CandidateRecord rec{desc, wc.weight, wc.dim, wc.wflags,
                            {rule_rank, rule_no_suzuki_ree, rule_field, rule_restricted}};
        if (t_unverified) rec.record_flags.push_back(flags::t_eq_k_unverified);
        std::sort(rec.record_flags.begin(), rec.record_flags.end());
        flagged_records.push_back(std::move(rec));
      }
    }
  }

  // The degree-7 orthogonal representation of 2G2(3^t) exists but is
  // self-dual and not realizable over every field; it is recorded as a
  // side-list stub when self-dual types are admitted.
  if (r == 7 && !opts.exclude_self_dual && p == 3) {
    for (long long t : field_exponents(k, 2)) {
      if (t % 2 == 0) continue; // 2G2 fields are odd powers of 3
      CandidateRecord rec{FiniteGroupDescriptor{LieType(Family::G2, 2), 2, t, 3},
                          Weight({1, 0}), Int(7),
                          {flags::ree_g2_stub},
                          {rule_field, rule_restricted}};
      flagged_records.push_back(std::move(rec));
    }
  }

  auto order = [](const CandidateRecord& a, const CandidateRecord& b) {
    if (a.descriptor != b.descriptor) return a.descriptor < b.descriptor;
    if (a.weight != b.weight) return a.weight < b.weight;
    return a.record_flags < b.record_flags;
  };
  auto equal = [](const CandidateRecord& a, const CandidateRecord& b) {
    return a.descriptor == b.descriptor && a.weight == b.weight &&
           a.record_flags == b.record_flags;
  };
  std::sort(main_records.begin(), main_records.end(), order);
  main_records.erase(std::unique(main_records.begin(), main_records.end(), equal),
                     main_records.end());
  std::sort(flagged_records.begin(), flagged_records.end(), order);
  flagged_records.erase(std::unique(flagged_records.begin(), flagged_records.end(), equal),
                        flagged_records.end());

  count.main_count = static_cast<long long>(main_records.size());
  for (const auto& recd : flagged_records) {
    if (has_flag(recd.record_flags, flags::kac_case_excluded)) ++count.kac_count;
    if (has_flag(recd.record_flags, flags::self_dual_filtered_out)) ++count.self_dual_count;
  }
  block.counts.push_back(count);
  for (auto& recd : main_records) block.main.push_back(std::move(recd));
  for (auto& recd : flagged_records) block.flagged.push_back(std::move(recd));
}

} // namespace

CandidatesSummary enumerate_candidates_stream(
    long long r, long long k, const CandidateOptions& opts,
    const std::function<void(const CandidateRecord&)>& on_main,
    const std::function<void(const CandidateRecord&)>& on_flagged) {
  if (r <= 2 || !is_prime(r)) throw domain_error("prime degree must be an odd prime");
  if (k < 1) throw domain_error("field exponent k must be >= 1");

  CandidatesSummary summary;
  summary.r = r;
  summary.k = k;
  summary.exclude_self_dual = opts.exclude_self_dual;

  long long p_limit = opts.p_limit_override;
  if (p_limit <= 0) {
    const BoundExpr pb = p_bound(r, opts.bit_budget);
    if (!pb.floor_value)
      throw resource_limit_error("the characteristic bound " + pb.symbolic() +
                                 " is symbolic-only at this bit budget; pass an explicit p limit");
    if (*pb.floor_value > opts.sieve_limit)
      throw resource_limit_error("the characteristic bound " + pb.symbolic() +
                                 " exceeds the sieve limit; pass an explicit p limit or use "
                                 "symbolic bounds");
    p_limit = static_cast<long long>(*pb.floor_value);
  }
  summary.prime_limit = p_limit;

  const auto primes = primes_below(p_limit, opts.sieve_limit);
  const auto types = allowed_types(r, opts.exclude_self_dual);

  const CandidateCountCaps caps = candidate_count_caps(r, opts.bit_budget);
  summary.bb1_floor = caps.bb1.floor_value;
  summary.th8_floor = caps.th8.floor_value;
  summary.t11_floor = caps.t11.floor_value;

  // Warm the shared weight tables once so parallel blocks only filter.
  for (const auto& tt : types) {
    const LieType type(tt.family, tt.rank);
    candidate_weights(type, r, 2, opts.exclude_self_dual, opts);
  }

  constexpr std::size_t block_size = 64;
  const std::size_t block_count = (primes.size() + block_size - 1) / block_size;
  std::vector<PerPrimeBlock> blocks(block_count);
  detail::parallel_index_for(block_count, [&](std::size_t bi) {
    const std::size_t lo = bi * block_size;
    const std::size_t hi = std::min(primes.size(), lo + block_size);
    for (std::size_t i = lo; i < hi; ++i)
      process_prime(primes[i], r, k, types, opts, blocks[bi]);
  });

  std::set<std::string> notes;
  for (auto& block : blocks) {
    for (const auto& count : block.counts) {
      summary.per_p.push_back(count);
      summary.total_main += count.main_count;
      if (summary.bb1_floor && count.main_count > *summary.bb1_floor)
        summary.per_p_within_bb1 = false;
    }
    summary.total_flagged += static_cast<long long>(block.flagged.size());
    for (const auto& recd : block.main) on_main(recd);
    for (const auto& recd : block.flagged) on_flagged(recd);
    notes.insert(block.notes.begin(), block.notes.end());
  }
  if (summary.th8_floor) summary.total_within_th8 = summary.total_main <= *summary.th8_floor;
  if (summary.t11_floor && opts.exclude_self_dual)
    summary.total_within_t11 = summary.total_main <= *summary.t11_floor;
  summary.notes.assign(notes.begin(), notes.end());
  return summary;
}

CandidatesResult enumerate_candidates(long long r, long long k, const CandidateOptions& opts) {
  CandidatesResult result;
  result.summary = enumerate_candidates_stream(
      r, k, opts, [&](const CandidateRecord& rec) { result.records.push_back(rec); },
      [&](const CandidateRecord& rec) { result.flagged_records.push_back(rec); });
  return result;
}

std::vector<std::string> validate_record(const CandidateRecord& rec, long long r, long long k) {
  std::vector<std::string> violations;
  const auto& d = rec.descriptor;
  if (!d.lie_type.is_valid()) violations.push_back("invalid_type");
  const bool ree_stub = has_flag(rec.record_flags, flags::ree_g2_stub);
  const bool kac = has_flag(rec.record_flags, flags::kac_case_excluded);
  if (!ree_stub && !twist_allowed(d.lie_type.family, d.lie_type.rank, d.twist_e))
    violations.push_back("invalid_twist");
  if (!is_prime(d.characteristic_p)) violations.push_back("p_not_prime");
  const auto exps = field_exponents(k, d.twist_e);
  if (std::find(exps.begin(), exps.end(), d.field_exponent_t) == exps.end())
    violations.push_back("field_exponent_outside_k_et");
  if (rec.weight.rank() != d.lie_type.rank) {
    violations.push_back("weight_shape");
    return violations;
  }
  for (int a : rec.weight.coeffs)
    if (a < 0) violations.push_back("weight_not_dominant");
  if (!rec.weight.is_p_restricted(d.characteristic_p)) violations.push_back("not_p_restricted");
  if (rec.dim != weyl_dim(d.lie_type, rec.weight)) violations.push_back("dim_mismatch");
  if (kac || ree_stub) {
    // Side-list entries of this kind sit exactly at dimension r.
    if (rec.dim != r) violations.push_back("flagged_dim_not_r");
  } else {
    if (rec.dim <= r) violations.push_back("dim_le_r");
    if (rec.dim <= d.characteristic_p) violations.push_back("dim_le_p");
  }
  return violations;
}

} // namespace liecensus
