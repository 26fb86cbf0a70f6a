#include <algorithm>
#include <map>
#include <set>

#include "indturan/algorithms.hpp"
#include "indturan/errors.hpp"

namespace indturan {

BigInt selection_threshold(int t, int q) {
  if (t < 0 || q < 1) throw ParameterError("selection_threshold: need t >= 0 and q >= 1");
  BigInt f = 1;
  for (int i = 2; i <= t; ++i) f *= i;
  BigInt out = f * f;
  for (int i = 0; i <= t; ++i) out *= q;
  return out;
}

namespace {

using Indices = std::vector<std::size_t>;

class Selector {
 public:
  Selector(const std::vector<std::vector<Value>>& vs, std::size_t q, bool guaranteed)
      : vs_(vs), q_(q), guaranteed_(guaranteed) {}

  std::optional<Indices> run(std::size_t t) {
    Indices all(vs_.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    std::vector<std::size_t> positions(t);
    for (std::size_t j = 0; j < t; ++j) positions[j] = j;
    return rec(all, positions);
  }

 private:
  static constexpr std::uint64_t kNodeCap = 200'000;

  std::optional<Indices> rec(const Indices& in, const std::vector<std::size_t>& positions) {
    if (in.size() < q_ || ++nodes_ > kNodeCap) return std::nullopt;
    if (positions.empty()) return Indices(in.begin(), in.begin() + static_cast<std::ptrdiff_t>(q_));

    const BigInt cutoff = selection_threshold(static_cast<int>(positions.size()) - 1, static_cast<int>(q_));
    // (count, position slot, value) for every value popular enough to branch on.
    struct Popular {
      std::size_t count;
      std::size_t slot;
      Value value;
    };
    std::vector<Popular> popular;
    for (std::size_t slot = 0; slot < positions.size(); ++slot) {
      std::map<Value, std::size_t> counts;
      for (auto i : in) ++counts[vs_[i][positions[slot]]];
      for (const auto& [value, count] : counts) {
        const bool enough = guaranteed_ ? BigInt(count) >= cutoff : count >= q_;
        if (enough) popular.push_back({count, slot, value});
      }
    }
    std::stable_sort(popular.begin(), popular.end(),
                     [](const Popular& a, const Popular& b) { return a.count > b.count; });
    if (guaranteed_ && !popular.empty()) popular.resize(1);

    for (const auto& choice : popular) {
      Indices filtered;
      for (auto i : in)
        if (vs_[i][positions[choice.slot]] == choice.value) filtered.push_back(i);
      auto rest = positions;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(choice.slot));
      if (auto r = rec(filtered, rest)) return r;
      if (guaranteed_) return std::nullopt;
    }
    if (guaranteed_ && !popular.empty()) return std::nullopt;
    return fix_and_delete(in, positions);
  }

  std::optional<Indices> fix_and_delete(const Indices& in, const std::vector<std::size_t>& positions) {
    Indices kept;
    std::vector<char> alive(in.size(), 1);
    for (std::size_t a = 0; a < in.size() && kept.size() < q_; ++a) {
      if (!alive[a]) continue;
      const auto& x = vs_[in[a]];
      kept.push_back(in[a]);
      std::set<Value> used;
      for (auto p : positions) used.insert(x[p]);
      for (std::size_t b = a + 1; b < in.size(); ++b) {
        if (!alive[b]) continue;
        for (auto p : positions) {
          if (used.count(vs_[in[b]][p])) {
            alive[b] = 0;
            break;
          }
        }
      }
    }
    if (kept.size() < q_) return std::nullopt;
    return kept;
  }

  const std::vector<std::vector<Value>>& vs_;
  std::size_t q_;
  bool guaranteed_;
  std::uint64_t nodes_ = 0;
};

std::size_t validate_vectors(const std::vector<std::vector<Value>>& vectors) {
  if (vectors.empty()) return 0;
  const std::size_t t = vectors.front().size();
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != t) throw InputError("select_regular: vector " + std::to_string(i) + " has a different length");
    std::vector<Value> sorted = vectors[i];
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw InputError("select_regular: vector " + std::to_string(i) + " repeats an entry");
    }
  }
  return t;
}

}  // namespace

bool selection_is_regular(const std::vector<std::vector<Value>>& vectors, const std::vector<std::size_t>& chosen) {
  if (chosen.empty()) return false;
  std::set<std::size_t> distinct(chosen.begin(), chosen.end());
  if (distinct.size() != chosen.size()) return false;
  for (auto i : chosen)
    if (i >= vectors.size()) return false;
  const std::size_t t = vectors[chosen.front()].size();
  std::map<Value, std::size_t> owner;  // value -> position it appears in
  for (std::size_t j = 0; j < t; ++j) {
    std::set<Value> ys;
    for (auto i : chosen) ys.insert(vectors[i][j]);
    if (ys.size() != 1 && ys.size() != chosen.size()) return false;
    for (Value y : ys) {
      auto [it, fresh] = owner.emplace(y, j);
      if (!fresh && it->second != j) return false;
    }
  }
  return true;
}

SelectionResult select_regular(const std::vector<std::vector<Value>>& vectors, int q) {
  if (q < 1) throw ParameterError("select_regular: q must be at least 1");
  const std::size_t t = validate_vectors(vectors);
  SelectionResult out;
  out.below_guarantee = BigInt(vectors.size()) < selection_threshold(static_cast<int>(t), q);
  if (vectors.empty()) return out;

  Selector guaranteed(vectors, static_cast<std::size_t>(q), true);
  auto chosen = out.below_guarantee ? std::nullopt : guaranteed.run(t);
  if (!chosen) {
    Selector relaxed(vectors, static_cast<std::size_t>(q), false);
    chosen = relaxed.run(t);
  }
  if (!chosen) return out;

  std::sort(chosen->begin(), chosen->end());
  out.chosen = *chosen;
  for (std::size_t j = 0; j < t; ++j) {
    std::set<Value> ys;
    for (auto i : out.chosen) ys.insert(vectors[i][j]);
    out.value_sets.emplace_back(ys.begin(), ys.end());
    if (ys.size() == 1) {
      out.verdicts.push_back(PositionVerdict::all_same);
    } else if (ys.size() == out.chosen.size()) {
      out.verdicts.push_back(PositionVerdict::pairwise_distinct);
    } else {
      out.verdicts.push_back(PositionVerdict::mixed);
    }
  }
  out.success = selection_is_regular(vectors, out.chosen);
  return out;
}

}  // namespace indturan
