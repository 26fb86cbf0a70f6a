#include "indturan/counters.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_map>

#include "indturan/errors.hpp"

namespace indturan {

namespace {

void check_vertex(const Graph& g, Vertex v) {
  if (!g.valid_vertex(v)) throw InputError("vertex id " + std::to_string(v) + " out of range");
}

// True when every entry of A^k fits in 63 bits: entries are at most Delta^k.
bool fits_in_u64(const Graph& g, int k) {
  const auto& deg = g.degrees();
  const double delta = deg.empty() ? 0.0 : static_cast<double>(*std::max_element(deg.begin(), deg.end()));
  return static_cast<double>(k) * std::log2(std::max(delta, 1.0)) + std::log2(std::max(g.order(), 1)) < 62.0;
}

// One multiplication by A on the right: out[i][j] = sum_{k in N(j)} in[i][k].
template <class T>
std::vector<T> times_adjacency(const Graph& g, const std::vector<T>& in) {
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<T> out(n * n, T(0));
  std::vector<std::vector<Vertex>> nb(n);
  for (std::size_t j = 0; j < n; ++j) nb[j] = g.neighbor_list(static_cast<Vertex>(j));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      T acc(0);
      for (Vertex k : nb[j]) acc += in[i * n + static_cast<std::size_t>(k)];
      out[i * n + j] = acc;
    }
  }
  return out;
}

template <class T>
std::vector<T> identity(std::size_t n) {
  std::vector<T> m(n * n, T(0));
  for (std::size_t i = 0; i < n; ++i) m[i * n + i] = T(1);
  return m;
}

template <class T>
std::vector<T> power(const Graph& g, int length) {
  auto m = identity<T>(static_cast<std::size_t>(g.order()));
  for (int r = 0; r < length; ++r) m = times_adjacency(g, m);
  return m;
}

template <class T>
BigInt closed_walks(const Graph& g, int k) {
  const int a = (k + 1) / 2;
  const int b = k / 2;
  auto pb = power<T>(g, b);
  auto pa = a == b ? pb : times_adjacency(g, pb);
  BigInt total = 0;
  for (std::size_t i = 0; i < pa.size(); ++i) total += BigInt(pa[i]) * BigInt(pb[i]);
  return total;
}

template <class T>
std::vector<std::vector<T>> vector_walks(const Graph& g, Vertex target, int max_length) {
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<std::vector<T>> out;
  std::vector<T> cur(n, T(0));
  cur[static_cast<std::size_t>(target)] = T(1);
  out.push_back(cur);
  for (int r = 0; r < max_length; ++r) {
    std::vector<T> next(n, T(0));
    for (std::size_t x = 0; x < n; ++x) {
      T acc(0);
      g.neighbors(static_cast<Vertex>(x)).for_each([&](Vertex y) { acc += cur[static_cast<std::size_t>(y)]; });
      next[x] = acc;
    }
    cur = std::move(next);
    out.push_back(cur);
  }
  return out;
}

}  // namespace

BigInt WalkMatrix::trace() const {
  BigInt t = 0;
  for (Vertex i = 0; i < n_; ++i) t += at(i, i);
  return t;
}

WalkMatrix walk_matrix(const Graph& g, int length) {
  if (length < 0) throw ParameterError("walk_matrix: length must be non-negative");
  WalkMatrix out(g.order(), length);
  const auto n = g.order();
  if (fits_in_u64(g, length)) {
    auto m = power<std::uint64_t>(g, length);
    for (Vertex i = 0; i < n; ++i)
      for (Vertex j = 0; j < n; ++j) out.at(i, j) = m[static_cast<std::size_t>(i * n + j)];
  } else {
    auto m = power<BigInt>(g, length);
    for (Vertex i = 0; i < n; ++i)
      for (Vertex j = 0; j < n; ++j) out.at(i, j) = m[static_cast<std::size_t>(i * n + j)];
  }
  return out;
}

BigInt hom_closed_walks(const Graph& g, int k) {
  if (k < 1) throw ParameterError("hom_closed_walks: k must be at least 1");
  if (fits_in_u64(g, (k + 1) / 2)) return closed_walks<std::uint64_t>(g, k);
  return closed_walks<BigInt>(g, k);
}

std::vector<std::vector<BigInt>> walks_to(const Graph& g, Vertex target, int max_length) {
  check_vertex(g, target);
  if (max_length < 0) throw ParameterError("walks_to: length must be non-negative");
  if (fits_in_u64(g, max_length)) {
    auto w = vector_walks<std::uint64_t>(g, target, max_length);
    std::vector<std::vector<BigInt>> out;
    for (auto& row : w) out.emplace_back(row.begin(), row.end());
    return out;
  }
  return vector_walks<BigInt>(g, target, max_length);
}

BigInt walk_count(const Graph& g, Vertex u, Vertex v, int length) {
  check_vertex(g, u);
  check_vertex(g, v);
  if (length < 0) throw ParameterError("walk_count: length must be non-negative");
  return walks_to(g, v, length)[static_cast<std::size_t>(length)][static_cast<std::size_t>(u)];
}

WalkClass classify_walk(const Graph& g, const std::vector<Vertex>& walk) {
  const std::size_t m = walk.size();
  std::vector<Vertex> sorted = walk;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return WalkClass::degenerate;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 2; j < m; ++j) {
      if (i == 0 && j == m - 1) continue;
      if (g.adjacent(walk[i], walk[j])) return WalkClass::chorded;
    }
  }
  return WalkClass::induced_cycle;
}

namespace {

void check_half_length(int half_length) {
  if (half_length < 2) throw ParameterError("classify_closed_walks: l must be at least 2");
}

class ClosedWalkEnumerator {
 public:
  ClosedWalkEnumerator(const Graph& g, int length) : g_(g), length_(length) {}

  void run(std::uint64_t& degenerate, std::uint64_t& induced, std::uint64_t& chorded) {
    for (Vertex s = 0; s < g_.order(); ++s) {
      // reach[r][x] > 0 iff some r-walk joins x and s.
      auto counts = walks_to(g_, s, length_);
      reach_.assign(counts.size(), std::vector<char>(static_cast<std::size_t>(g_.order())));
      for (std::size_t r = 0; r < counts.size(); ++r)
        for (std::size_t x = 0; x < counts[r].size(); ++x) reach_[r][x] = counts[r][x] > 0;
      if (!reach_[static_cast<std::size_t>(length_)][static_cast<std::size_t>(s)]) continue;
      walk_.assign(1, s);
      extend(degenerate, induced, chorded);
    }
  }

 private:
  void extend(std::uint64_t& degenerate, std::uint64_t& induced, std::uint64_t& chorded) {
    const std::size_t done = walk_.size() - 1;
    const std::size_t remaining = static_cast<std::size_t>(length_) - done;
    if (remaining == 0) {
      walk_.pop_back();  // drop the repeated start
      switch (classify_walk(g_, walk_)) {
        case WalkClass::degenerate:
          ++degenerate;
          break;
        case WalkClass::induced_cycle:
          ++induced;
          break;
        case WalkClass::chorded:
          ++chorded;
          break;
      }
      walk_.push_back(walk_.front());
      return;
    }
    g_.neighbors(walk_.back()).for_each([&](Vertex y) {
      if (!reach_[remaining - 1][static_cast<std::size_t>(y)]) return;
      walk_.push_back(y);
      extend(degenerate, induced, chorded);
      walk_.pop_back();
    });
  }

  const Graph& g_;
  int length_;
  std::vector<std::vector<char>> reach_;
  std::vector<Vertex> walk_;
};

}  // namespace

WalkClassification classify_closed_walks(const Graph& g, int half_length, const ExactMode& mode) {
  check_half_length(half_length);
  WalkClassification out;
  out.length = 2 * half_length;
  out.total = hom_closed_walks(g, out.length);
  if (out.total > mode.budget) {
    out.complete = false;
    return out;
  }
  std::uint64_t deg = 0, ind = 0, chord = 0;
  ClosedWalkEnumerator(g, out.length).run(deg, ind, chord);
  out.degenerate = deg;
  out.induced_cycle = ind;
  out.chorded = chord;
  return out;
}

namespace {

class ClosedWalkSampler {
 public:
  ClosedWalkSampler(const Graph& g, int half_length) : g_(g), length_(2 * half_length) {
    auto half = walk_matrix(g, half_length);
    for (Vertex i = 0; i < g.order(); ++i) {
      BigInt d = 0;
      for (Vertex j = 0; j < g.order(); ++j) d += half.at(i, j) * half.at(i, j);
      diagonal_.push_back(d);
      total_ += d;
    }
  }

  const BigInt& total() const { return total_; }

  std::vector<Vertex> draw(std::mt19937_64& rng) {
    BigInt r = uniform_below(total_, rng);
    Vertex start = 0;
    while (r >= diagonal_[static_cast<std::size_t>(start)]) {
      r -= diagonal_[static_cast<std::size_t>(start)];
      ++start;
    }
    auto it = cache_.find(start);
    if (it == cache_.end()) it = cache_.emplace(start, walks_to(g_, start, length_)).first;
    const auto& w = it->second;
    std::vector<Vertex> walk{start};
    for (int step = 0; step + 1 < length_; ++step) {
      const auto remaining = static_cast<std::size_t>(length_ - step);
      const Vertex x = walk.back();
      BigInt pick = uniform_below(w[remaining][static_cast<std::size_t>(x)], rng);
      Vertex chosen = -1;
      g_.neighbors(x).for_each([&](Vertex y) {
        if (chosen >= 0) return;
        const BigInt& weight = w[remaining - 1][static_cast<std::size_t>(y)];
        if (pick < weight) {
          chosen = y;
        } else {
          pick -= weight;
        }
      });
      walk.push_back(chosen);
    }
    return walk;
  }

 private:
  const Graph& g_;
  int length_;
  std::vector<BigInt> diagonal_;
  BigInt total_ = 0;
  std::unordered_map<Vertex, std::vector<std::vector<BigInt>>> cache_;
};

}  // namespace

std::vector<Vertex> sample_closed_walk(const Graph& g, int half_length, std::mt19937_64& rng) {
  check_half_length(half_length);
  ClosedWalkSampler sampler(g, half_length);
  if (sampler.total() == 0) throw InputError("sample_closed_walk: graph has no closed walks");
  return sampler.draw(rng);
}

WalkClassification classify_closed_walks(const Graph& g, int half_length, const SampleMode& mode) {
  check_half_length(half_length);
  if (mode.samples < 1) throw ParameterError("classify_closed_walks: need at least one sample");
  WalkClassification out;
  out.length = 2 * half_length;
  ClosedWalkSampler sampler(g, half_length);
  out.total = sampler.total();
  WalkSample info{mode.samples, mode.seed, 0.0, 0.0, 0.0};
  out.sample = info;
  if (out.total == 0) return out;
  auto rng = make_rng(mode.seed, 1);
  std::uint64_t deg = 0, ind = 0, chord = 0;
  for (std::uint64_t i = 0; i < mode.samples; ++i) {
    switch (classify_walk(g, sampler.draw(rng))) {
      case WalkClass::degenerate:
        ++deg;
        break;
      case WalkClass::induced_cycle:
        ++ind;
        break;
      case WalkClass::chorded:
        ++chord;
        break;
    }
  }
  out.degenerate = deg;
  out.induced_cycle = ind;
  out.chorded = chord;
  const auto m = static_cast<double>(mode.samples);
  out.sample->degenerate = static_cast<double>(deg) / m;
  out.sample->induced_cycle = static_cast<double>(ind) / m;
  out.sample->chorded = static_cast<double>(chord) / m;
  return out;
}

CountResult count_labeled_induced(const Graph& g, const Graph& h, Budget budget) {
  if (h.order() < 1) throw InputError("count_labeled_induced: pattern must be non-empty");
  std::uint64_t count = 0;
  const EmbeddingVisitor tally = [&](const std::vector<Vertex>&) {
    ++count;
    return true;
  };
  const auto stats = for_each_induced_embedding(g, h, tally, budget);
  return CountResult{BigInt(count), stats.complete, stats.nodes};
}

BigInt count_induced_c4(const Graph& g) {
  const int n = g.order();
  std::uint64_t doubled = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (g.adjacent(u, v)) continue;
      Bitset mid = g.neighbors(u);
      mid &= g.row(v);
      const std::uint64_t c = mid.count();
      if (c < 2) continue;
      std::uint64_t inside = 0;
      mid.for_each([&](Vertex x) { inside += popcount_and(g.row(x), mid.words()); });
      doubled += c * (c - 1) / 2 - inside / 2;
    }
  }
  return BigInt(doubled / 2);
}

double default_thin_threshold(const Graph& g) { return std::pow(degree_profile(g).average(), 2.0 / 3.0); }

C4Stats thin_thick_stats(const Graph& g, double tau) {
  if (!(tau >= 0.0)) throw ParameterError("thin_thick_stats: threshold must be non-negative");
  std::uint64_t thin = 0, thick = 0;
  for_each_induced_c4(g, [&](Vertex a, Vertex b, Vertex c, Vertex d) {
    const auto d1 = static_cast<double>(popcount_and(g.row(a), g.row(c)));
    const auto d2 = static_cast<double>(popcount_and(g.row(b), g.row(d)));
    if (d1 <= tau && d2 <= tau) {
      ++thin;
    } else {
      ++thick;
    }
  });
  return C4Stats{BigInt(thin + thick), BigInt(thin), BigInt(thick), tau};
}

std::uint64_t TwoPathTally::vertex_total() const {
  std::uint64_t t = 0;
  for (auto c : per_vertex) t += c;
  return t;
}

std::uint64_t TwoPathTally::pair_total() const {
  std::uint64_t t = 0;
  for (const auto& [key, c] : per_pair) t += c;
  return t;
}

TwoPathTally two_path_tally(const Graph& g) {
  TwoPathTally out;
  const int n = g.order();
  out.per_vertex.resize(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    const auto d = static_cast<std::uint64_t>(g.degree(v));
    std::uint64_t inside = 0;
    g.neighbors(v).for_each([&](Vertex x) { inside += popcount_and(g.row(x), g.row(v)); });
    out.per_vertex[static_cast<std::size_t>(v)] = d * (d - (d > 0 ? 1 : 0)) / 2 - inside / 2;
  }
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (g.adjacent(u, v)) continue;
      const auto c = popcount_and(g.row(u), g.row(v));
      if (c > 0) out.per_pair[{u, v}] = c;
    }
  }
  return out;
}

}  // namespace indturan
