#include "liecensus/root_system.hpp"

#include "liecensus/errors.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>

namespace liecensus {

namespace {

// Bonds of the Dynkin diagram as undirected index pairs (0-based).
std::vector<std::pair<int, int>> diagram_edges(const LieType& t) {
  const int n = t.rank;
  std::vector<std::pair<int, int>> edges;
  auto chain = [&](int upto) {
    for (int i = 0; i + 1 < upto; ++i) edges.emplace_back(i, i + 1);
  };
  switch (t.family) {
    case Family::A:
    case Family::B:
    case Family::C:
    case Family::F4:
    case Family::G2:
      chain(n);
      break;
    case Family::D:
      chain(n - 1);               // 1 - 2 - ... - (n-1)
      edges.emplace_back(n - 3, n - 1); // fork at node n-2
      break;
    case Family::E6:
    case Family::E7:
    case Family::E8: {
      // Bourbaki: chain 1-3-4-5-6(-7-8), node 2 attached to node 4.
      std::vector<int> spine = {0, 2, 3, 4, 5};
      if (t.family != Family::E6) spine.push_back(6);
      if (t.family == Family::E8) spine.push_back(7);
      for (std::size_t i = 0; i + 1 < spine.size(); ++i)
        edges.emplace_back(spine[i], spine[i + 1]);
      edges.emplace_back(1, 3);
      break;
    }
  }
  return edges;
}

// scaled length factors t_i * t_scale and the scale itself.
std::pair<std::vector<int>, int> length_factors(const LieType& t) {
  const int n = t.rank;
  switch (t.family) {
    case Family::B: {
      std::vector<int> s(n, 2);
      s[n - 1] = 1; // alpha_n short
      return {s, 2};
    }
    case Family::C: {
      std::vector<int> s(n, 1);
      s[n - 1] = 2; // alpha_n long
      return {s, 2};
    }
    case Family::F4: return {{2, 2, 1, 1}, 2};
    case Family::G2: return {{1, 3}, 3}; // alpha_1 short
    default: return {std::vector<int>(n, 1), 1};
  }
}

// cartan[i][j] = <alpha_i, alpha_j^vee> = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j).
// For a diagram bond, (alpha_i, alpha_j) = -max(t_i, t_j), which gives the
// usual -1 / -2 / -3 entries once divided by the squared lengths.
std::vector<std::vector<int>> cartan_matrix(const LieType& t) {
  const int n = t.rank;
  std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  const auto [scaled, scale] = length_factors(t);
  for (auto [i, j] : diagram_edges(t)) {
    const int m = std::max(scaled[i], scaled[j]);
    if (m % scaled[j] != 0 || m % scaled[i] != 0)
      throw internal_error("bond length factors are inconsistent");
    c[i][j] = -m / scaled[j];
    c[j][i] = -m / scaled[i];
  }
  return c;
}

int height(const std::vector<int>& b) { return std::accumulate(b.begin(), b.end(), 0); }

} // namespace

RootSystemData build_root_system(const LieType& type) {
  require_valid(type);
  const int n = type.rank;

  RootSystemData rs;
  rs.lie_type = type;
  rs.cartan = cartan_matrix(type);
  std::tie(rs.scaled_t, rs.t_scale) = length_factors(type);

  // Reflection closure: the orbit of the simple roots under the simple
  // reflections is the whole root system.
  std::set<std::vector<int>> roots;
  std::vector<std::vector<int>> frontier;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    roots.insert(e);
    frontier.push_back(std::move(e));
  }
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& b : frontier) {
      for (int j = 0; j < n; ++j) {
        // s_j(alpha) = alpha - <alpha, alpha_j^vee> alpha_j
        int pairing = 0;
        for (int i = 0; i < n; ++i) pairing += b[i] * rs.cartan[i][j];
        std::vector<int> image = b;
        image[j] -= pairing;
        if (roots.insert(image).second) next.push_back(std::move(image));
      }
    }
    frontier = std::move(next);
  }

  for (const auto& b : roots) {
    const bool nonneg = std::all_of(b.begin(), b.end(), [](int x) { return x >= 0; });
    if (nonneg) rs.positive_roots.push_back(b);
  }
  std::sort(rs.positive_roots.begin(), rs.positive_roots.end(),
            [](const std::vector<int>& x, const std::vector<int>& y) {
              const int hx = height(x), hy = height(y);
              if (hx != hy) return hx < hy;
              return x < y;
            });

  const long long expected = positive_root_count(type);
  if (static_cast<long long>(rs.positive_roots.size()) != expected)
    throw internal_error("root closure produced " + std::to_string(rs.positive_roots.size()) +
                         " positive roots for " + type.name() + ", expected " +
                         std::to_string(expected));
  return rs;
}

const RootSystemData& root_system(const LieType& type) {
  require_valid(type);
  static std::mutex mu;
  static std::map<LieType, std::unique_ptr<RootSystemData>> memo;
  std::lock_guard<std::mutex> lock(mu);
  auto it = memo.find(type);
  if (it == memo.end())
    it = memo.emplace(type, std::make_unique<RootSystemData>(build_root_system(type))).first;
  return *it->second;
}

long long positive_root_count(const LieType& type) {
  require_valid(type);
  const long long n = type.rank;
  switch (type.family) {
    case Family::A: return n * (n + 1) / 2;
    case Family::B:
    case Family::C: return n * n;
    case Family::D: return n * n - n;
    case Family::E6: return 36;
    case Family::E7: return 63;
    case Family::E8: return 120;
    case Family::F4: return 24;
    case Family::G2: return 6;
  }
  throw internal_error("unreachable family");
}

} // namespace liecensus
