#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "indturan/algorithms.hpp"
#include "indturan/errors.hpp"

namespace indturan {

std::string to_string(RegularizationStatus s) {
  switch (s) {
    case RegularizationStatus::success:
      return "success";
    case RegularizationStatus::hypothesis_failure:
      return "hypothesis_failure";
    case RegularizationStatus::sampling_failure:
      return "sampling_failure";
    case RegularizationStatus::postcondition_failure:
      return "postcondition_failure";
  }
  return "unknown";
}

namespace {

std::vector<Vertex> sorted_union(std::vector<Vertex> a, const std::vector<Vertex>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

std::uint64_t edges_within(const Graph& g, const std::vector<Vertex>& vs) {
  Bitset mask(static_cast<std::size_t>(g.order()));
  for (Vertex v : vs) mask.set(static_cast<std::size_t>(v));
  std::uint64_t twice = 0;
  for (Vertex v : vs) twice += popcount_and(mask.words(), g.row(v));
  return twice / 2;
}

}  // namespace

RegularizationResult almost_regularize(const Graph& g, double alpha, double c, int trials, std::uint64_t seed) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw ParameterError("almost_regularize: alpha must lie in (0, 1)");
  if (!(c > 0.0)) throw ParameterError("almost_regularize: C must be positive");
  if (trials < 1) throw ParameterError("almost_regularize: trials must be at least 1");

  RegularizationResult out;
  out.k_prime = std::pow(2.0, 4.0 / alpha);
  out.k_bound = 4.0 * out.k_prime;
  const double kp = out.k_prime;

  const double n0 = g.order();
  const double required = c * std::pow(n0, 1.0 + alpha);
  if (g.order() == 0 || static_cast<double>(g.edge_count()) < required) {
    std::ostringstream msg;
    msg << "e(G) = " << g.edge_count() << " < C n^(1+alpha) = " << required;
    out.status = RegularizationStatus::hypothesis_failure;
    out.diagnostic = msg.str();
    return out;
  }

  auto rng = make_rng(seed, 0x7265);
  std::vector<Vertex> current(static_cast<std::size_t>(g.order()));
  std::iota(current.begin(), current.end(), 0);
  Graph gi = g;

  int i = 0;
  std::vector<Vertex> high;  // U_k, local ids of gi
  for (;; ++i) {
    const int ni = gi.order();
    const double scale = std::ldexp(1.0, i);
    RegularizationStage st;
    st.index = i;
    st.vertices = ni;
    st.high_degree_threshold = scale * kp * c * std::pow(ni, alpha);
    st.stop_threshold = 0.5 * scale * c * std::pow(ni, 1.0 + alpha);
    high.clear();
    for (Vertex v = 0; v < ni; ++v) {
      if (gi.degree(v) >= st.high_degree_threshold) {
        high.push_back(v);
        st.high_degree_sum += gi.degree(v);
      }
    }
    if (st.high_degree_sum < st.stop_threshold) {
      out.log.push_back(st);
      break;
    }

    const auto size = static_cast<std::size_t>(std::max(1.0, std::ceil(ni / (2.0 * kp))));
    std::vector<Vertex> by_degree(static_cast<std::size_t>(ni));
    std::iota(by_degree.begin(), by_degree.end(), 0);
    std::stable_sort(by_degree.begin(), by_degree.end(),
                     [&](Vertex a, Vertex b) { return gi.degree(a) > gi.degree(b); });
    std::vector<Vertex> a_set(by_degree.begin(), by_degree.begin() + static_cast<std::ptrdiff_t>(size));
    std::sort(a_set.begin(), a_set.end());

    st.chosen_size = static_cast<int>(size);
    st.edge_floor = 2.0 * scale * c * std::pow(ni / kp, 1.0 + alpha);

    std::vector<Vertex> all(static_cast<std::size_t>(ni));
    std::iota(all.begin(), all.end(), 0);
    std::vector<Vertex> best;
    std::uint64_t best_edges = 0;
    for (int trial = 0; trial < trials; ++trial) {
      std::vector<Vertex> b_set;
      std::sample(all.begin(), all.end(), std::back_inserter(b_set), size, rng);
      auto merged = sorted_union(a_set, b_set);
      const auto e = edges_within(gi, merged);
      st.trials_used = trial + 1;
      if (best.empty() || e > best_edges) {
        best = std::move(merged);
        best_edges = e;
      }
      if (static_cast<double>(best_edges) >= st.edge_floor) break;
    }
    st.kept_edges = best_edges;
    out.log.push_back(st);
    if (static_cast<double>(best_edges) < st.edge_floor) {
      std::ostringstream msg;
      msg << "stage " << i << ": best e(G[A u B]) = " << best_edges << " < floor " << st.edge_floor << " after "
          << trials << " trials";
      out.status = RegularizationStatus::sampling_failure;
      out.iterations = i;
      out.diagnostic = msg.str();
      return out;
    }
    std::vector<Vertex> next(best.size());
    for (std::size_t j = 0; j < best.size(); ++j) next[j] = current[static_cast<std::size_t>(best[j])];
    current = std::move(next);
    gi = g.induced(current);
  }
  out.iterations = i;

  // Cleanup: drop U_k, then peel low-degree vertices.
  const int nk = gi.order();
  const double low = std::ldexp(1.0, i - 2) * c * std::pow(nk, alpha);
  const double top = std::ldexp(1.0, i) * kp * c * std::pow(nk, alpha);
  std::vector<char> alive(static_cast<std::size_t>(nk), 1);
  for (Vertex v : high) alive[static_cast<std::size_t>(v)] = 0;
  std::vector<int> deg(static_cast<std::size_t>(nk), 0);
  for (Vertex v = 0; v < nk; ++v) {
    if (!alive[static_cast<std::size_t>(v)]) continue;
    for (Vertex w : gi.neighbor_list(v))
      if (alive[static_cast<std::size_t>(w)]) ++deg[static_cast<std::size_t>(v)];
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (Vertex v = 0; v < nk; ++v) {
      if (!alive[static_cast<std::size_t>(v)] || deg[static_cast<std::size_t>(v)] > low) continue;
      alive[static_cast<std::size_t>(v)] = 0;
      for (Vertex w : gi.neighbor_list(v))
        if (alive[static_cast<std::size_t>(w)]) --deg[static_cast<std::size_t>(w)];
      changed = true;
    }
  }
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < nk; ++v) {
    if (!alive[static_cast<std::size_t>(v)]) continue;
    keep.push_back(current[static_cast<std::size_t>(v)]);
  }
  std::vector<Vertex> order = keep;
  std::sort(order.begin(), order.end());
  out.vertices = VertexSet(order);
  out.subgraph = g.induced(order);

  if (out.subgraph.order() == 0) {
    out.status = RegularizationStatus::postcondition_failure;
    out.diagnostic = "cleanup removed every vertex (all degrees <= " + std::to_string(low) + ")";
    return out;
  }
  const auto profile = degree_profile(out.subgraph);
  out.achieved_ratio = profile.min_degree > 0 ? static_cast<double>(profile.max_degree) / profile.min_degree
                                              : std::numeric_limits<double>::infinity();
  const double m = out.subgraph.order();
  const double edge_target = c / 4.0 * std::pow(m, 1.0 + alpha);

  std::ostringstream msg;
  if (profile.min_degree < low) {
    msg << "min degree " << profile.min_degree << " < 2^(k-2) C n_k^alpha = " << low;
  } else if (profile.max_degree > top) {
    msg << "max degree " << profile.max_degree << " > 2^k K' C n_k^alpha = " << top;
  } else if (static_cast<double>(out.subgraph.edge_count()) < edge_target) {
    msg << "e(H) = " << out.subgraph.edge_count() << " < (C/4) m^(1+alpha) = " << edge_target;
  } else if (!is_k_almost_regular(out.subgraph, out.k_bound)) {
    msg << "Delta/delta = " << out.achieved_ratio << " > 4K' = " << out.k_bound;
  }
  if (!msg.str().empty()) {
    out.status = RegularizationStatus::postcondition_failure;
    out.diagnostic = msg.str();
    return out;
  }
  out.status = RegularizationStatus::success;
  return out;
}

}  // namespace indturan
