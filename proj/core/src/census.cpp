#include "liecensus/census.hpp"

#include "liecensus/errors.hpp"
#include "liecensus/primes.hpp"

#include "parallel.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <thread>

namespace liecensus {

namespace {

using ordered_json = nlohmann::ordered_json;

std::filesystem::path cache_file(const CacheConfig& cache, const LieType& type, long long D) {
  return cache.dir / (type.name() + "-cap" + std::to_string(D) + "-v" +
                      std::to_string(census_cache_schema) + ".jsonl");
}

std::optional<std::vector<CensusEntry>> load_cache(const CacheConfig& cache, const LieType& type,
                                                   long long D) {
  std::ifstream in(cache_file(cache, type, D));
  if (!in) return std::nullopt;
  std::string line;
  if (!std::getline(in, line)) return std::nullopt;
  const auto header = ordered_json::parse(line, nullptr, false);
  if (header.is_discarded() || !header.is_object()) return std::nullopt;
  if (!header.contains("schema_version") || !header.contains("type") || !header.contains("cap"))
    return std::nullopt;
  if (header["schema_version"] != census_cache_schema || header["type"] != type.name() ||
      header["cap"] != D)
    return std::nullopt;

  std::vector<CensusEntry> entries;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto rec = ordered_json::parse(line, nullptr, false);
    if (rec.is_discarded() || !rec.is_object() || !rec.contains("w") || !rec.contains("dim"))
      return std::nullopt;
    CensusEntry e;
    e.lie_type = type;
    if (!rec["w"].is_array() || rec["w"].size() != static_cast<std::size_t>(type.rank))
      return std::nullopt;
    for (const auto& v : rec["w"]) {
      if (!v.is_number_integer()) return std::nullopt;
      e.weight.coeffs.push_back(v.get<int>());
    }
    if (!rec["dim"].is_string()) return std::nullopt;
    try {
      e.dim = parse_decimal(rec["dim"].get<std::string>());
    } catch (const domain_error&) {
      return std::nullopt;
    }
    entries.push_back(std::move(e));
  }
  return entries;
}

void store_cache(const CacheConfig& cache, const LieType& type, long long D,
                 const std::vector<CensusEntry>& entries) {
  std::error_code ec;
  std::filesystem::create_directories(cache.dir, ec);
  if (ec) return; // cache is best-effort
  const auto path = cache_file(cache, type, D);
  const auto tmp = path.string() + ".tmp-" +
                   std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id()));
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) return;
    ordered_json header;
    header["schema_version"] = census_cache_schema;
    header["type"] = type.name();
    header["cap"] = D;
    out << header.dump() << '\n';
    for (const auto& e : entries) {
      ordered_json rec;
      rec["w"] = e.weight.coeffs;
      rec["dim"] = to_decimal(e.dim);
      out << rec.dump() << '\n';
    }
    if (!out) return;
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

// Depth-first enumeration over weight coordinates; a child is cut off as
// soon as its dimension exceeds the cap, which is sound because weyl_dim
// is strictly monotone under componentwise increase.
struct WeightEnumerator {
  const RootSystemData& rs;
  Int cap;
  std::vector<CensusEntry> out;
  std::vector<int> w;

  WeightEnumerator(const RootSystemData& rs_, Int cap_)
      : rs(rs_), cap(std::move(cap_)), w(rs_.rank(), 0) {}

  void recurse(int pos, const Int& dim_here) {
    if (pos == rs.rank()) {
      out.push_back(CensusEntry{rs.lie_type, Weight(w), dim_here});
      return;
    }
    recurse(pos + 1, dim_here); // w[pos] stays 0
    for (int a = 1;; ++a) {
      w[pos] = a;
      const Int d = weyl_dim(rs, Weight(w));
      if (d > cap) break;
      recurse(pos + 1, d);
    }
    w[pos] = 0;
  }

  std::vector<CensusEntry> run() {
    const Int one = weyl_dim(rs, Weight(w));
    if (one <= cap) recurse(0, one);
    return std::move(out);
  }
};

} // namespace

int rank_cap(Family family, long long D) {
  if (D < 1) throw domain_error("dimension cap must be >= 1");
  auto clamp_rank = [](long long n) {
    return static_cast<int>(std::min<long long>(n, 1 << 20));
  };
  switch (family) {
    case Family::A: return D - 1 >= 1 ? clamp_rank(D - 1) : 0;
    case Family::B: return (D - 1) / 2 >= 2 ? clamp_rank((D - 1) / 2) : 0;
    case Family::C: return D / 2 >= 2 ? clamp_rank(D / 2) : 0;
    case Family::D: return D / 2 >= 3 ? clamp_rank(D / 2) : 0;
    case Family::E6: return D >= 27 ? 6 : 0;
    case Family::E7: return D >= 56 ? 7 : 0;
    case Family::E8: return D >= 248 ? 8 : 0;
    case Family::F4: return D >= 26 ? 4 : 0;
    case Family::G2: return D >= 7 ? 2 : 0;
  }
  throw internal_error("unreachable family");
}

std::vector<CensusEntry> enumerate_weights(const LieType& type, long long D,
                                           const CacheConfig* cache) {
  require_valid(type);
  if (D < 1) throw domain_error("dimension cap must be >= 1");
  if (cache) {
    if (auto cached = load_cache(*cache, type, D)) return std::move(*cached);
  }
  WeightEnumerator en(root_system(type), Int(D));
  auto entries = en.run();
  // The DFS emits in lexicographic order already; keep the sort as a
  // cheap guarantee against future reorderings.
  std::sort(entries.begin(), entries.end());
  if (cache) store_cache(*cache, type, D, entries);
  return entries;
}

std::vector<CensusEntry> prime_degree_census(long long r, bool canonical_only,
                                             const CacheConfig* cache) {
  if (r < 2 || !is_prime(r)) throw domain_error(std::to_string(r) + " is not prime");

  std::vector<LieType> types;
  for (Family f : all_families) {
    const int cap = rank_cap(f, r);
    if (cap == 0) continue;
    if (is_exceptional(f)) {
      types.emplace_back(f, exceptional_rank(f));
      continue;
    }
    const int lo = canonical_only ? min_canonical_rank(f) : min_rank(f);
    for (int n = lo; n <= cap; ++n) types.emplace_back(f, n);
  }

  std::vector<std::vector<CensusEntry>> slots(types.size());
  detail::parallel_index_for(types.size(), [&](std::size_t i) {
    for (auto& e : enumerate_weights(types[i], r, cache))
      if (e.dim == r) slots[i].push_back(std::move(e));
  });

  std::vector<CensusEntry> found;
  for (auto& slot : slots)
    for (auto& e : slot) found.push_back(std::move(e));
  std::sort(found.begin(), found.end());
  return found;
}

KacReport verify_kac(long long r, const CacheConfig* cache) {
  if (r < 2 || !is_prime(r)) throw domain_error(std::to_string(r) + " is not prime");
  KacReport report;
  report.prime = r;

  auto add = [&](const LieType& t, Weight w) {
    report.expected.push_back(CensusEntry{t, w, weyl_dim(t, w)});
  };

  if (r > 2) {
    const int n = static_cast<int>(r - 1);
    std::vector<int> w(n, 0);
    w[0] = 1;
    add(LieType(Family::A, n), Weight(w));
    if (n > 1) {
      w[0] = 0;
      w[n - 1] = 1;
      add(LieType(Family::A, n), Weight(w));
    }
    const int half = static_cast<int>((r - 1) / 2);
    if (half >= 2) {
      std::vector<int> v(half, 0);
      v[0] = 1;
      add(LieType(Family::B, half), Weight(v));
    } else {
      // B_1 = A_1: the orthogonal case collapses onto the A_1 clause.
      report.notes.push_back("B_1 entry canonicalized to A_1 (B_1 = A_1)");
    }
  }
  if (r == 7) add(LieType(Family::G2, 2), Weight({1, 0}));
  add(LieType(Family::A, 1), Weight({static_cast<int>(r - 1)}));

  std::sort(report.expected.begin(), report.expected.end());
  report.expected.erase(std::unique(report.expected.begin(), report.expected.end()),
                        report.expected.end());

  for (const auto& e : report.expected)
    if (e.dim != r)
      throw internal_error("classification entry " + e.lie_type.name() + " " + e.weight.str() +
                           " has dimension " + to_decimal(e.dim));

  report.found = prime_degree_census(r, /*canonical_only=*/true, cache);
  report.match = report.expected == report.found;
  return report;
}

} // namespace liecensus
