#pragma once

// Simultaneous decompositions along several simple roots Theta = {alpha_1..alpha_k}.
// Each alpha_i carries a set S_i and a stabilizer element w0^(i); the
// projections commute when the conjugates u_i = w_{alpha_i} w0^(i) w_{alpha_i} do.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "psdecomp/decomp.hpp"
#include "psdecomp/errors.hpp"
#include "psdecomp/parallel.hpp"
#include "psdecomp/rootsys.hpp"
#include "psdecomp/weyl.hpp"

namespace psdecomp {

inline WeylElement u_element(int alpha, const WeylElement& w0) {
  const RootDatum& d = w0.datum();
  d.check_node(alpha);
  if (w0.is_identity()) throw ValidationError("w0 must be a nontrivial Weyl element");
  const WeylElement s = WeylElement::simple_reflection(d, alpha);
  return compose(s, compose(w0, s));
}

inline bool commuting_check(const std::vector<std::pair<int, WeylElement>>& configs) {
  if (configs.size() < 2) throw ValidationError("commuting check needs at least two (alpha, w0) entries");
  std::set<int> seen;
  for (const auto& [alpha, w0] : configs)
    if (!seen.insert(alpha).second) throw ValidationError("duplicate alpha_" + std::to_string(alpha));
  std::vector<WeylElement> us;
  for (const auto& [alpha, w0] : configs) us.push_back(u_element(alpha, w0));
  for (std::size_t i = 0; i < us.size(); ++i)
    for (std::size_t j = i + 1; j < us.size(); ++j)
      if (!commutes(us[i], us[j])) return false;
  return true;
}

struct SummandLabel {
  std::vector<int> X;                // positions (1-based) carrying tr
  std::vector<std::string> factors;  // one tr/St factor per position
  std::string text;
  bool operator==(const SummandLabel&) const = default;
};

/// The 2^k summands Ind St_X (x) chi0, X ranging over subsets of {1..k} in
/// binary order; position i carries tr when i is in X, St otherwise.  For k = 1
/// the labels coincide with the rank-one certificate summands.
inline std::vector<SummandLabel> summand_labels(int k) {
  if (k < 0) throw ValidationError("negative number of roots");
  if (k > 20) throw ValidationError("too many roots for summand enumeration");
  std::vector<SummandLabel> out;
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    SummandLabel l;
    std::string body;
    for (int i = 0; i < k; ++i) {
      const bool tr = mask >> i & 1u;
      if (tr) l.X.push_back(i + 1);
      l.factors.push_back(std::string(tr ? "tr" : "St") + (k == 1 ? "_M" : "_" + std::to_string(i + 1)));
      body += l.factors.back() + " (x) ";
    }
    l.text = k == 0 ? "<chi0>" : "<" + body + "chi0>";
    out.push_back(std::move(l));
  }
  return out;
}

inline std::vector<SummandLabel> summand_labels(const std::vector<int>& theta) {
  return summand_labels(static_cast<int>(theta.size()));
}

/// lambda0 - sum_i rho_M(alpha_i).
inline Weight multi_chi0(const RootDatum& d, const Weight& lambda0, const std::vector<int>& theta) {
  Weight out = lambda0;
  for (int a : theta) out -= rho_M(d, a);
  return out;
}

enum class MultiMode { graph_conditions, direct_commutation };

inline const char* to_string(MultiMode m) {
  return m == MultiMode::graph_conditions ? "graph-conditions" : "direct-commutation";
}

inline MultiMode parse_multi_mode(const std::string& s) {
  if (s == "graph" || s == "graph-conditions") return MultiMode::graph_conditions;
  if (s == "direct" || s == "direct-commutation") return MultiMode::direct_commutation;
  throw ValidationError("unknown mode '" + s + "' (expected graph-conditions or direct-commutation)");
}

struct MultiEntry {
  int alpha = 0;
  std::vector<int> S;
  Word w0;
  Word u;
  bool operator==(const MultiEntry&) const = default;
};

struct MultiConfig {
  std::vector<int> theta;
  std::vector<MultiEntry> entries;
  std::optional<Weight> lambda0;
  bool commuting = false;
  bool certified = false;   // every (lambda0, alpha_i, w0^(i)) certifies
  bool heuristic = false;   // produced by the graph conditions only
  bool operator==(const MultiConfig&) const = default;

  /// Union of the S_i, the crossed nodes of the marked diagram.
  std::vector<int> crossed() const {
    std::set<int> u;
    for (const auto& e : entries) u.insert(e.S.begin(), e.S.end());
    return {u.begin(), u.end()};
  }
};

inline std::map<int, NodeMark> marks_for(const MultiConfig& c) {
  std::map<int, NodeMark> m;
  for (int s : c.crossed()) m[s] = NodeMark::in_S;
  for (int a : c.theta) m[a] = NodeMark::alpha;
  return m;
}

/// Nodes at graph distance <= r from `node`.
inline std::vector<int> ball(const RootDatum& d, int node, int r) {
  std::vector<int> out;
  for (int b = 1; b <= d.rank(); ++b)
    if (d.distance(node, b) >= 0 && d.distance(node, b) <= r) out.push_back(b);
  return out;
}

namespace detail {

inline std::vector<int> set_intersection(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline std::vector<int> set_union(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline std::vector<int> set_difference(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline bool connected(const RootDatum& d, const std::vector<int>& nodes) {
  if (nodes.empty()) return true;
  std::set<int> seen{nodes.front()};
  std::vector<int> stack{nodes.front()};
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : d.neighbours(v))
      if (std::binary_search(nodes.begin(), nodes.end(), w) && seen.insert(w).second) stack.push_back(w);
  }
  return seen.size() == nodes.size();
}

inline bool separated(const RootDatum& d, const std::vector<int>& a, const std::vector<int>& b) {
  for (int x : a)
    for (int y : b)
      if (x == y || d.adjacent(x, y)) return false;
  return true;
}

/// Connected node sets containing alpha and at least one neighbour of it.
inline std::vector<std::vector<int>> pieces_through(const RootDatum& d, int alpha) {
  std::vector<std::vector<int>> out;
  const int n = d.rank();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (!(mask >> (alpha - 1) & 1u)) continue;
    std::vector<int> nodes;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1u) nodes.push_back(i + 1);
    if (nodes.size() >= 2 && connected(d, nodes)) out.push_back(nodes);
  }
  return out;
}

/// Graph conditions (2) and (3) for a pair of vertices.
inline bool ball_conditions(const RootDatum& d, int a, int b) {
  const auto a1 = ball(d, a, 1), b1 = ball(d, b, 1);
  if (!set_intersection(a1, b1).empty()) return false;
  const auto meet2 = set_intersection(ball(d, a, 2), ball(d, b, 2));
  if (meet2.empty()) return true;
  auto removed = meet2;
  removed.push_back(a);
  removed.push_back(b);
  std::sort(removed.begin(), removed.end());
  return !set_difference(set_union(a1, b1), removed).empty();
}

}  // namespace detail

/// Common lambda0 for entries (alpha_i, S_i): <lambda0, alpha_i^vee> = 1,
/// w_{alpha_i} lambda0 vanishing on S_i and strictly negative, with margin t,
/// on nodes outside every {alpha_j} u S_j.  Returns nullopt when the
/// constraints on a shared node disagree.
inline std::optional<Weight> common_lambda0(const RootDatum& d, const std::vector<std::pair<int, std::vector<int>>>& parts,
                                            const Rat& t = Rat(1)) {
  if (t <= 0) throw ValidationError("t must be positive");
  const int n = d.rank();
  std::vector<std::optional<Rat>> fixed(static_cast<std::size_t>(n));
  auto pin = [&](int node, const Rat& v) {
    auto& slot = fixed[static_cast<std::size_t>(node - 1)];
    if (slot && *slot != v) return false;
    slot = v;
    return true;
  };
  for (const auto& [alpha, S] : parts) {
    if (!pin(alpha, Rat(1))) return std::nullopt;
    for (int b : S)
      if (!pin(b, Rat(d.cartan_entry(b, alpha)))) return std::nullopt;  // <lambda0 - alpha, b^vee> = 0
  }
  Weight lambda0 = Weight::zero(n);
  for (int g = 1; g <= n; ++g) {
    const auto& slot = fixed[static_cast<std::size_t>(g - 1)];
    if (slot) {
      lambda0.at(g) = *slot;
      continue;
    }
    Rat bound = Rat(d.cartan_entry(g, parts.front().first));
    for (const auto& [alpha, S] : parts) bound = std::min(bound, Rat(d.cartan_entry(g, alpha)));
    lambda0.at(g) = bound - t;
  }
  for (const auto& [alpha, S] : parts) {
    const Weight lp = lambda0 - simple_root_as_weight(d, alpha);
    if (lp.at(alpha) != -1) return std::nullopt;
    for (int b : S)
      if (lp.at(b) != 0) return std::nullopt;
  }
  return lambda0;
}

/// Builds and certifies a configuration from (alpha_i, S_i) with w0^(i) the
/// longest element of W_{S_i} unless given.
inline MultiConfig make_multi_config(const RootDatum& d, const std::vector<std::pair<int, std::vector<int>>>& parts,
                                     const std::vector<std::optional<Word>>& w0_override = {},
                                     const Rat& t = Rat(1)) {
  MultiConfig c;
  std::vector<std::pair<int, WeylElement>> pairs;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto& [alpha, S0] = parts[i];
    const auto S = normalized_subset(d, S0);
    const WeylElement w0 = i < w0_override.size() && w0_override[i]
                               ? WeylElement::from_word(d, *w0_override[i])
                               : reduced(longest_element(d, S));
    c.theta.push_back(alpha);
    c.entries.push_back({alpha, S, w0.word(), reduced_word(u_element(alpha, w0))});
    pairs.emplace_back(alpha, w0);
  }
  c.commuting = pairs.size() >= 2 ? commuting_check(pairs) : true;
  c.lambda0 = common_lambda0(d, parts, t);
  if (c.lambda0) {
    c.certified = true;
    for (const auto& [alpha, w0] : pairs) {
      try {
        if (!check_assumptions(*c.lambda0, alpha, w0).decomposition_holds) c.certified = false;
      } catch (const ValidationError&) {
        c.certified = false;
      } catch (const PreconditionError&) {
        c.certified = false;
      }
    }
  }
  return c;
}

/// Pairs Theta = {a, b}.  Graph mode keeps vertex pairs passing the ball
/// conditions (2) and (3).  Direct mode keeps pairs admitting connected,
/// disjoint, non-adjacent pieces {a} u S_a and {b} u S_b whose configuration
/// commutes and certifies; only componentwise-maximal (S_a, S_b) are listed.
inline std::vector<MultiConfig> enumerate_pairs(const RootDatum& d, MultiMode mode, unsigned threads = 1,
                                                const Rat& t = Rat(1)) {
  const int n = d.rank();
  if (mode == MultiMode::graph_conditions && n < 5)
    throw ValidationError("graph-conditions mode needs rank >= 5 (got " + d.name() + ")");
  if (n > 16) throw ValidationError("rank too large for pair enumeration");
  std::vector<std::pair<int, int>> vertex_pairs;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) vertex_pairs.emplace_back(a, b);

  std::vector<std::vector<std::vector<int>>> pieces(static_cast<std::size_t>(n + 1));
  for (int a = 1; a <= n; ++a) pieces[static_cast<std::size_t>(a)] = detail::pieces_through(d, a);

  auto direct = [&](int a, int b) {
    std::vector<std::pair<std::vector<int>, std::vector<int>>> candidates;
    for (const auto& pa : pieces[static_cast<std::size_t>(a)]) {
      if (std::binary_search(pa.begin(), pa.end(), b)) continue;
      for (const auto& pb : pieces[static_cast<std::size_t>(b)]) {
        if (!detail::separated(d, pa, pb)) continue;
        candidates.emplace_back(detail::set_difference(pa, {a}), detail::set_difference(pb, {b}));
      }
    }
    auto subset = [](const std::vector<int>& x, const std::vector<int>& y) {
      return std::includes(y.begin(), y.end(), x.begin(), x.end());
    };
    std::vector<MultiConfig> out;
    for (const auto& cand : candidates) {
      const bool dominated = std::any_of(candidates.begin(), candidates.end(), [&](const auto& o) {
        return o != cand && subset(cand.first, o.first) && subset(cand.second, o.second);
      });
      if (dominated) continue;
      auto c = make_multi_config(d, {{a, cand.first}, {b, cand.second}}, {}, t);
      if (c.commuting && c.certified) out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end(), [](const MultiConfig& x, const MultiConfig& y) {
      return std::make_pair(x.entries[0].S, x.entries[1].S) < std::make_pair(y.entries[0].S, y.entries[1].S);
    });
    return out;
  };

  const auto per_pair = parallel_map(vertex_pairs.size(), threads, [&](std::size_t i) {
    const auto [a, b] = vertex_pairs[i];
    if (mode == MultiMode::direct_commutation) return direct(a, b);
    std::vector<MultiConfig> out;
    if (!detail::ball_conditions(d, a, b)) return out;
    auto found = direct(a, b);
    if (found.empty()) {
      MultiConfig c;
      c.theta = {a, b};
      c.heuristic = true;
      out.push_back(std::move(c));
    } else {
      for (auto& c : found) {
        c.heuristic = true;
        out.push_back(std::move(c));
      }
    }
    return out;
  });
  std::vector<MultiConfig> out;
  for (const auto& v : per_pair) out.insert(out.end(), v.begin(), v.end());
  return out;
}

/// Distinct vertex pairs of a configuration list, in order.
inline std::vector<std::pair<int, int>> vertex_pairs_of(const std::vector<MultiConfig>& configs) {
  std::vector<std::pair<int, int>> out;
  for (const auto& c : configs) {
    if (c.theta.size() != 2) continue;
    const std::pair<int, int> p{c.theta[0], c.theta[1]};
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  }
  return out;
}

}  // namespace psdecomp
