// Acceptance run: one line per criterion, nonzero exit if any fails.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "indturan/algorithms.hpp"
#include "indturan/counters.hpp"
#include "indturan/detectors.hpp"
#include "indturan/generators.hpp"
#include "indturan/io.hpp"
#include "indturan/isomorphism.hpp"
#include "support/oracles.hpp"

using namespace indturan;
namespace fs = std::filesystem;

namespace {

// Wall-clock limits per criterion, seconds.
constexpr std::array<double, 12> kLimit = {1, 30, 60, 60, 10, 120, 30, 30, 120, 120, 10, 30};

constexpr std::uint64_t kCorpusSeed = 0x1d7a2a;
constexpr int kHomGraphs = 200;
constexpr int kHomMaxN = 10;
constexpr int kHomMaxK = 8;
constexpr int kC4Graphs = 100;
constexpr int kC4MaxN = 40;
constexpr int kSelectionInstances = 1000;
constexpr int kTreeGraphs = 500;
constexpr int kTreeMaxN = 30;
constexpr int kTreeMaxT = 7;

struct Verdict {
  bool pass = true;
  std::string detail;
};

struct Tally {
  bool ok = true;
  std::size_t checks = 0;
  std::string first_failure;

  void expect(bool cond, const std::string& what) {
    ++checks;
    if (!cond && ok) first_failure = what;
    ok = ok && cond;
  }
  Verdict verdict(const std::string& summary) const {
    return {ok, ok ? summary : "first failure: " + first_failure};
  }
};

std::vector<Graph> hom_corpus() {
  std::mt19937_64 rng(kCorpusSeed);
  std::vector<Graph> out;
  for (int i = 0; i < kHomGraphs; ++i) {
    const int n = 1 + static_cast<int>(rng() % kHomMaxN);
    const double p = 0.15 + 0.1 * static_cast<double>(rng() % 5);
    out.push_back(oracle::random_graph(n, p, rng));
  }
  return out;
}

std::vector<Graph> c4_corpus() {
  std::mt19937_64 rng(kCorpusSeed + 1);
  std::vector<Graph> out;
  for (int i = 0; i < kC4Graphs; ++i) {
    const int n = 4 + static_cast<int>(rng() % (kC4MaxN - 3));
    const double p = 0.1 + 0.1 * static_cast<double>(rng() % 6);
    out.push_back(oracle::random_graph(n, p, rng));
  }
  return out;
}

std::vector<Graph> named_corpus() {
  std::vector<Graph> out = {cycle_graph(4), cycle_graph(5), cycle_graph(6), cycle_graph(7), complete_graph(4),
                            complete_graph(6), complete_bipartite(2, 3), complete_bipartite(3, 3),
                            complete_bipartite(3, 12), star_graph(5), path_graph(6), prism(3), prism(4), prism(8),
                            theta(3, 4).graph, theta(4, 3).graph, polarity_graph(2), polarity_graph(3),
                            polarity_graph(5), clique_blowup(cycle_graph(7), 2).graph,
                            clique_blowup(polarity_graph(3), 2).graph, lift(rooted_path_example(), {{3}, 3}).graph};
  return out;
}

std::vector<Graph> full_corpus() {
  auto out = named_corpus();
  for (auto& g : hom_corpus()) out.push_back(std::move(g));
  for (auto& g : c4_corpus()) out.push_back(std::move(g));
  return out;
}

// Closed k-walks by explicit enumeration over adjacency lists.
std::uint64_t enumerate_closed_walks(const Graph& g, int k) {
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) adj[v] = g.neighbor_list(v);
  std::uint64_t count = 0;
  std::function<void(Vertex, Vertex, int)> walk = [&](Vertex start, Vertex at, int steps) {
    if (steps == k) {
      count += at == start;
      return;
    }
    for (Vertex w : adj[at]) walk(start, w, steps + 1);
  };
  for (Vertex v = 0; v < g.order(); ++v) walk(v, v, 0);
  return count;
}

Rational power(const Rational& x, int e) {
  Rational r = 1;
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

// ---------------------------------------------------------------------------

Verdict ac1_generator_formulas() {
  Tally t;
  for (int l = 2; l <= 8; ++l)
    for (int k = 2; k <= 6; ++k) {
      const auto th = theta(l, k);
      const std::string tag = "theta(" + std::to_string(l) + "," + std::to_string(k) + ")";
      t.expect(th.graph.order() == 2 + (l - 1) * k, tag + " order");
      t.expect(th.graph.edge_count() == static_cast<std::size_t>(l * k), tag + " size");
    }
  for (int l = 3; l <= 12; ++l) {
    const Graph p = prism(l);
    const std::string tag = "prism(" + std::to_string(l) + ")";
    t.expect(p.order() == 2 * l, tag + " order");
    t.expect(p.edge_count() == static_cast<std::size_t>(3 * l), tag + " size");
    t.expect(is_bipartite(p) == (l % 2 == 0), tag + " bipartite iff even");
  }
  return t.verdict(std::to_string(t.checks) + " exact checks");
}

Verdict ac2_blowup_soundness() {
  Tally t;
  struct Case {
    std::string name;
    Graph base;
    Graph h;
  };
  const std::vector<Case> cases = {{"C7/C6", cycle_graph(7), cycle_graph(6)},
                                   {"polarity(3)/C4", polarity_graph(3), cycle_graph(4)}};
  std::ostringstream rows;
  for (const auto& c : cases) {
    t.expect(!find_induced(c.base, c.h).found(), c.name + " base is H-free");
    const int h = c.h.order();
    for (int b = 2; b <= 3; ++b) {
      const auto report = witness_check(clique_blowup(c.base, b).graph, {c.h}, 2 * h * b);
      t.expect(report.passed, c.name + " t=" + std::to_string(b));
      rows << " " << c.name << ",t=" << b << ",s=" << 2 * h * b;
    }
  }
  return t.verdict("witness passed for" + rows.str());
}

Verdict ac3_hom_oracle() {
  Tally t;
  const auto corpus = hom_corpus();
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const Graph& g = corpus[i];
    for (int k = 1; k <= kHomMaxK; ++k)
      t.expect(hom_closed_walks(g, k) == enumerate_closed_walks(g, k), "graph " + std::to_string(i) + " k=" + std::to_string(k));
    for (int l = 1; 2 * l <= kHomMaxK; ++l) {
      const auto w = walk_matrix(g, l);
      BigInt squares = 0;
      for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = 0; v < g.order(); ++v) squares += w.at(u, v) * w.at(u, v);
      t.expect(squares == hom_closed_walks(g, 2 * l), "square identity graph " + std::to_string(i) + " l=" + std::to_string(l));
    }
  }
  return t.verdict(std::to_string(corpus.size()) + " graphs, k<=" + std::to_string(kHomMaxK) + ", " +
                   std::to_string(t.checks) + " exact equalities");
}

Verdict ac4_c4_oracle() {
  Tally t;
  const auto corpus = c4_corpus();
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto want = oracle::induced_c4(oracle::Dense(corpus[i]));
    total += want;
    t.expect(count_induced_c4(corpus[i]) == want, "graph " + std::to_string(i));
  }
  return t.verdict(std::to_string(corpus.size()) + " graphs, " + std::to_string(total) + " induced C4 in total");
}

Verdict ac5_two_path_identity(const std::vector<Graph>& corpus) {
  Tally t;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto tally = two_path_tally(corpus[i]);
    const auto brute = oracle::two_paths(oracle::Dense(corpus[i]));
    t.expect(tally.vertex_total() == tally.pair_total(), "graph " + std::to_string(i) + " cross sum");
    t.expect(tally.vertex_total() == brute.total, "graph " + std::to_string(i) + " brute total");
  }
  return t.verdict(std::to_string(corpus.size()) + " corpus graphs");
}

Verdict ac6_kst_audits() {
  Tally t;
  const std::vector<Rational> cs = {Rational(1, 20), Rational(1, 10), Rational(1, 5), Rational(1, 2)};
  std::size_t cor_applied = 0;
  for (int q : {3, 5, 7, 11}) {
    const Graph g = polarity_graph(q);
    const std::string tag = "q=" + std::to_string(q);
    t.expect(!find_biclique(g, 2).has_value(), tag + " K22-free");
    const BigInt e = g.edge_count();
    const BigInt n = g.order();
    t.expect(2 * e == BigInt(q) * (q + 1) * (q + 1), tag + " edge count");
    // e <= n^{3/2}/2 + n/2 with s = t = 2, squared: (2e - n)^2 <= n^3.
    const BigInt lhs = 2 * e - n;
    t.expect(lhs < 0 || lhs * lhs <= n * n * n, tag + " biclique edge bound");
    for (const auto& c : cs) {
      if (Rational(n) * c * c < 1) continue;  // n >= (s-1)/c^s fails
      ++cor_applied;
      t.expect(Rational(e) <= c * Rational(n) * Rational(n), tag + " e <= c n^2");
    }
  }
  return t.verdict("4 polarity graphs, edge bound applied at " + std::to_string(cor_applied) + " (q, c) points");
}

Verdict ac7_sidorenko(const std::vector<Graph>& corpus) {
  Tally t;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const Graph& g = corpus[i];
    if (g.order() == 0) continue;
    const Rational d = degree_profile(g).average_degree;
    for (int l = 2; l <= 3; ++l)
      t.expect(Rational(hom_closed_walks(g, 2 * l)) >= power(d, 2 * l), "graph " + std::to_string(i) + " l=" + std::to_string(l));
  }
  return t.verdict(std::to_string(corpus.size()) + " graphs, l in {2,3}");
}

Verdict ac8_selection() {
  Tally t;
  const std::vector<std::pair<int, int>> grid = {{1, 2}, {2, 2}, {2, 3}, {3, 2}};
  for (auto [tt, q] : grid) {
    const auto n = selection_threshold(tt, q).convert_to<std::size_t>();
    auto rng = make_rng(kCorpusSeed, static_cast<std::uint64_t>(tt * 10 + q));
    for (int rep = 0; rep < kSelectionInstances; ++rep) {
      // Value ranges from very narrow (forced repeats) to wide (mostly distinct).
      const Value range = tt + 1 + static_cast<Value>(rng() % (4 * n));
      std::vector<std::vector<Value>> vs;
      vs.reserve(n);
      while (vs.size() < n) {
        std::vector<Value> v;
        while (v.size() < static_cast<std::size_t>(tt)) {
          const Value x = static_cast<Value>(rng() % static_cast<std::uint64_t>(range));
          if (std::find(v.begin(), v.end(), x) == v.end()) v.push_back(x);
        }
        vs.push_back(std::move(v));
      }
      const auto r = select_regular(vs, q);
      const std::string tag = "(t,q)=(" + std::to_string(tt) + "," + std::to_string(q) + ") instance " + std::to_string(rep);
      t.expect(r.success && r.chosen.size() == static_cast<std::size_t>(q), tag + " success");
      t.expect(oracle::regular_selection(vs, r.chosen), tag + " bullets");
    }
  }
  return t.verdict(std::to_string(kSelectionInstances) + " instances x 4 (t,q) at N(t,q)");
}

Verdict ac9_tree_embedding() {
  Tally t;
  auto rng = make_rng(kCorpusSeed, 9);
  std::size_t successes = 0;
  std::size_t equalities = 0;
  for (int i = 0; i < kTreeGraphs; ++i) {
    const int n = 2 + static_cast<int>(rng() % (kTreeMaxN - 1));
    const double p = 0.1 + 0.05 * static_cast<double>(rng() % 8);
    const Graph g = oracle::random_graph(n, p, rng);
    const int tree_order = 1 + static_cast<int>(rng() % kTreeMaxT);
    const Graph tree = random_tree(tree_order, rng());
    double threshold = std::numeric_limits<double>::infinity();
    switch (i % 3) {
      case 1:
        threshold = g.edge_count() ? supersaturation_threshold(g, 2) : 0.0;
        break;
      case 2:
        threshold = static_cast<double>(1 + rng() % 4);
        break;
      default:
        break;
    }
    const std::string tag = "graph " + std::to_string(i);
    const auto greedy = greedy_tree_embed(g, tree, threshold, rng());
    if (greedy.embedding) {
      ++successes;
      t.expect(verify_embedding(g, tree, *greedy.embedding), tag + " greedy output induced");
    }
    const auto en = enumerate_tree_embeddings(g, tree, threshold, std::nullopt);
    const auto want = oracle::labeled_induced(oracle::Dense(g), oracle::Dense(tree));
    t.expect(en.complete, tag + " enumeration complete");
    t.expect(en.count <= want, tag + " count <= labelled induced");
    if (threshold > static_cast<double>(max_codegree(g)) && tree_order <= 3) {
      ++equalities;
      t.expect(en.count == want, tag + " exhaustive small tree");
    }
  }
  return t.verdict(std::to_string(kTreeGraphs) + " graphs, " + std::to_string(successes) + " greedy successes verified, " +
                   std::to_string(equalities) + " equality cases");
}

Verdict ac10_self_detection() {
  Tally t;
  PipelineConfig cfg;
  std::size_t cross = 0;
  auto cross_check = [&](const Graph& host, const Graph& pattern, const std::string& tag) {
    if (host.order() > 20) return;
    ++cross;
    t.expect(find_induced(host, pattern).found(), tag + " brute force agrees");
  };
  for (int l = 2; l <= 4; ++l)
    for (int k = 2; k <= 4; ++k) {
      const auto th = theta(l, k);
      const auto r = find_induced_theta(th.graph, l, k, cfg);
      const std::string tag = "theta(" + std::to_string(l) + "," + std::to_string(k) + ")";
      t.expect(r.found() && verify_embedding(th.graph, th.graph, *r.witness), tag);
      cross_check(th.graph, th.graph, tag);
    }
  for (int l = 2; l <= 4; ++l) {
    const Graph g = prism(2 * l);
    const auto r = find_induced_prism(g, l, cfg);
    const std::string tag = "prism(" + std::to_string(2 * l) + ")";
    t.expect(r.found() && verify_embedding(g, g, *r.witness), tag);
    cross_check(g, g, tag);
  }
  const auto rt = rooted_path_example();
  for (int p = 1; p <= 3; ++p)
    for (const auto& entry : lift_family(rt, p)) {
      std::string tag = "lift p=" + std::to_string(p) + " S={";
      for (Vertex v : entry.spec.glued) tag += rt.name(v);
      tag += "}";
      cfg.p = p;
      const auto r = find_induced_lift(entry.lift.graph, rt, p, cfg);
      const bool ok = r.status == SearchStatus::found && r.lift && r.embedding &&
                      verify_embedding(entry.lift.graph, r.lift->graph, *r.embedding);
      t.expect(ok, tag);
      if (ok) cross_check(entry.lift.graph, r.lift->graph, tag);
    }
  return t.verdict("9 thetas, 3 prisms, 21 lifts; " + std::to_string(cross) + " cross-checked by brute force");
}

Verdict ac11_conditional(const std::vector<Graph>& corpus) {
  Tally t;
  std::size_t evaluated = 0;
  std::size_t fired = 0;
  std::size_t violations = 0;
  std::size_t unguarded_excess = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const Graph& g = corpus[i];
    if (g.order() == 0 || g.edge_count() == 0) continue;
    const auto prof = degree_profile(g);
    const double k = prof.min_degree > 0 ? std::max(1.0, double(prof.max_degree) / prof.min_degree) : 2.0;
    for (int s : {2, 3}) {
      const int tree_order = 4;
      ++evaluated;
      const auto hyp = tree_supersaturation_hypothesis(g, k, s, tree_order);
      const double bound = supersaturation_threshold(g, s);
      std::size_t worst = 0;
      for (Vertex v = 0; v < g.order(); ++v) worst = std::max(worst, bad_neighbor_set(g, v, bound).size());
      unguarded_excess += static_cast<double>(worst) > bound;
      if (!hyp.holds()) continue;
      ++fired;
      const std::string tag = "graph " + std::to_string(i) + " s=" + std::to_string(s);
      bool held = static_cast<double>(worst) <= bound;
      t.expect(held, tag + " |X(v)| <= d^beta");
      const auto greedy = greedy_tree_embed(g, path_graph(tree_order), bound, kCorpusSeed);
      for (auto size : greedy.candidate_sizes) {
        if (size == 0) continue;
        const bool big = static_cast<double>(size) >= hyp.average_degree / (2 * k);
        t.expect(big, tag + " |V_k| >= d/2K");
        held = held && big;
      }
      violations += !held;
    }
  }
  std::ostringstream out;
  out << evaluated << " (graph, s) pairs, hypothesis fired " << fired << ", firing violations " << violations << ", bound exceeded without hypothesis "
      << unguarded_excess;
  return t.verdict(out.str());
}

struct Run {
  int code = 0;
  std::string out;
};

Run shell(const std::string& cmd) {
  Run r;
  FILE* pipe = popen((cmd + " 2>&1").c_str(), "r");
  if (!pipe) return {-1, ""};
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  r.code = pclose(pipe);
  return r;
}

Verdict ac12_determinism() {
  Tally t;
  const fs::path dir = fs::temp_directory_path() / "indturan_acceptance";
  fs::create_directories(dir);
  auto file = [&](const std::string& name) { return (dir / name).string(); };
  write_text_file(dir / "c4.g6", to_graph6(cycle_graph(4)) + "\n");
  write_text_file(dir / "c6.g6", to_graph6(cycle_graph(6)) + "\n");
  write_text_file(dir / "c7.txt", to_edge_list(cycle_graph(7)));
  write_text_file(dir / "p6.g6", to_graph6(prism(6)) + "\n");
  write_text_file(dir / "pol5.g6", to_graph6(polarity_graph(5)) + "\n");
  write_text_file(dir / "k3m.g6", to_graph6(complete_bipartite(3, 12)) + "\n");
  write_text_file(dir / "fig.g6", to_graph6(lift(rooted_path_example(), {{3}, 3}).graph) + "\n");
  write_text_file(dir / "dense.g6", to_graph6(erdos_renyi(60, 0.5, 3)) + "\n");
  write_text_file(dir / "vectors.txt", "1 2\n1 3\n4 2\n5 6\n5 7\n8 9\n");

  const std::vector<std::string> commands = {
      "gen theta --l 3 --t 4",
      "gen prism --l 10",
      "gen lift --p 3 --glued 3",
      "gen blowup --t 2 --input " + file("c7.txt"),
      "gen polarity --q 5 --graph-format edges",
      "gen cycle --n 9",
      "gen random --n 40 --prob 0.3 --seed 17",
      "check kss --s 2 --input " + file("pol5.g6"),
      "check induced --pattern " + file("c6.g6") + " --input " + file("p6.g6"),
      "check witness --s 2 --family " + file("c4.g6") + " --input " + file("c6.g6"),
      "count hom --k 6 --input " + file("pol5.g6"),
      "count walks --l 3 --input " + file("c6.g6"),
      "count c4 --input " + file("p6.g6"),
      "count thin-thick --input " + file("p6.g6") + " --format json",
      "count two-paths --input " + file("pol5.g6"),
      "count induced --pattern " + file("c4.g6") + " --input " + file("p6.g6"),
      "count classify --l 3 --input " + file("p6.g6"),
      "count classify --l 3 --samples 500 --seed 5 --input " + file("pol5.g6"),
      "embed tree --tree-order 5 --seed 8 --input " + file("pol5.g6"),
      "embed tree --tree-order 4 --enumerate --analysis-threshold --input " + file("p6.g6"),
      "embed lift --p 3 --input " + file("fig.g6"),
      "embed theta --l 3 --t 2 --input " + file("p6.g6"),
      "embed prism --l 3 --input " + file("p6.g6"),
      "pipeline regularize --alpha 0.5 --c 0.5 --trials 8 --seed 4 --input " + file("dense.g6"),
      "pipeline rich-set --tau 1 --c1 3 --c2 5 --seed 2 --input " + file("k3m.g6"),
      "pipeline select --vectors " + file("vectors.txt") + " --q 2",
      "sweep polarity --q-list 7,2,3,5",
      "sweep blowup --t-list 3,1,2 --family " + file("c6.g6") + " --input " + file("c7.txt"),
      "count hom --k 0 --input " + file("c4.g6"),
  };
  const std::string exe = INDTURAN_CLI_PATH;
  for (const auto& c : commands) {
    const auto a = shell(exe + " " + c);
    const auto b = shell(exe + " " + c);
    t.expect(a.code == b.code && a.out == b.out, c);
    t.expect(!a.out.empty(), c + " produced output");
  }
  fs::remove_all(dir);
  return t.verdict(std::to_string(commands.size()) + " commands run twice, byte-identical");
}

}  // namespace

int main() {
  const auto corpus = full_corpus();
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"generator formulas", ac1_generator_formulas},
      {"blowup soundness", ac2_blowup_soundness},
      {"homomorphism oracle", ac3_hom_oracle},
      {"induced C4 oracle", ac4_c4_oracle},
      {"two-path identity", [&] { return ac5_two_path_identity(corpus); }},
      {"biclique-free audits", ac6_kst_audits},
      {"even-cycle hom floor", [&] { return ac7_sidorenko(corpus); }},
      {"selection", ac8_selection},
      {"tree embedding", ac9_tree_embedding},
      {"self-detection", ac10_self_detection},
      {"conditional hypotheses", [&] { return ac11_conditional(corpus); }},
      {"determinism", ac12_determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > kLimit[i]) {
      v.pass = false;
      v.detail += " (over the " + format_double(kLimit[i]) + " s limit)";
    }
    failures += !v.pass;
    std::cout << "AC" << std::setw(2) << std::left << i + 1 << " " << (v.pass ? "PASS" : "FAIL") << "  "
              << std::setw(24) << criteria[i].first << std::fixed << std::setprecision(2) << std::setw(8) << std::right
              << secs << " s  " << v.detail << std::endl;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size() << " criteria passed"
            << std::endl;
  return failures == 0 ? 0 : 1;
}
