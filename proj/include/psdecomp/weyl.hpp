#pragma once

// Weyl group elements as words in simple reflections, identified by their
// integral action on fundamental-weight coordinates.
//
// Word convention: the word [i1, i2, ..., ik] denotes s_{i1} s_{i2} ... s_{ik},
// so s_{ik} is applied first.  Rendered as "w" followed by the digits, e.g.
// "w134" = s1 s3 s4; the identity renders as "e".  Ranks >= 10 separate node
// labels with dots ("w1.10.3").

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include <boost/container_hash/hash.hpp>

#include "psdecomp/errors.hpp"
#include "psdecomp/matrix.hpp"
#include "psdecomp/rational.hpp"
#include "psdecomp/rootsys.hpp"

namespace psdecomp {

using Word = std::vector<int>;

class WeylElement {
 public:
  /// The element refers to `datum` by address; the datum must outlive it.
  static WeylElement identity(const RootDatum& datum) {
    WeylElement w;
    w.datum_ = &datum;
    w.weight_ = IntMatrix::identity(datum.rank());
    w.root_ = IntMatrix::identity(datum.rank());
    return w;
  }

  static WeylElement simple_reflection(const RootDatum& datum, int node) {
    datum.check_node(node);
    WeylElement w = identity(datum);
    w.word_ = {node};
    w.weight_ = weight_reflection(datum, node);
    w.root_ = root_reflection(datum, node);
    return w;
  }

  static WeylElement from_word(const RootDatum& datum, const Word& word) {
    WeylElement w = identity(datum);
    for (int node : word) datum.check_node(node);
    w.word_ = word;
    for (int node : word) {
      w.weight_ = w.weight_ * weight_reflection(datum, node);
      w.root_ = w.root_ * root_reflection(datum, node);
    }
    return w;
  }

  const RootDatum& datum() const { return *datum_; }
  const Word& word() const noexcept { return word_; }
  /// Action on fundamental-weight coordinates (column vectors).
  const IntMatrix& weight_action() const noexcept { return weight_; }
  /// Action on simple-root coordinates.
  const IntMatrix& root_action() const noexcept { return root_; }
  /// Action on simple-coroot coordinates: the transpose of w^{-1} on weights,
  /// so that pairings are preserved.
  IntMatrix coroot_action() const {
    IntMatrix inv = IntMatrix::identity(datum_->rank());
    for (auto it = word_.rbegin(); it != word_.rend(); ++it) inv = inv * weight_reflection(*datum_, *it);
    return inv.transposed();
  }

  bool is_identity() const { return weight_ == IntMatrix::identity(datum_->rank()); }

  Weight apply(const Weight& lambda) const {
    datum_->check_weight(lambda);
    const int n = datum_->rank();
    Weight out = Weight::zero(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const Int a = weight_(i, j);
        if (a != 0) out.coords[static_cast<std::size_t>(i)] += lambda.coords[static_cast<std::size_t>(j)] * a;
      }
    return out;
  }

  RootVec apply(const RootVec& v) const {
    if (v.size() != datum_->rank()) throw ValidationError("root dimension mismatch");
    if (v.is_coroot) return RootVec{coroot_action() * v.coords, true};
    return RootVec{root_ * v.coords, false};
  }

  bool operator==(const WeylElement& o) const {
    return *datum_ == *o.datum_ && weight_ == o.weight_;
  }

  void check_same_datum(const WeylElement& o) const {
    if (!(*datum_ == *o.datum_))
      throw ValidationError("Weyl elements of different data: " + datum_->name() + " vs " + o.datum_->name());
  }

  static IntMatrix weight_reflection(const RootDatum& datum, int node) {
    // lambda_k -> lambda_k - lambda_i * C[k][i]
    const int n = datum.rank();
    IntMatrix m = IntMatrix::identity(n);
    for (int k = 0; k < n; ++k) m(k, node - 1) -= datum.cartan()(k, node - 1);
    return m;
  }

  static IntMatrix root_reflection(const RootDatum& datum, int node) {
    // b_i -> b_i - sum_j C[i][j] b_j
    const int n = datum.rank();
    IntMatrix m = IntMatrix::identity(n);
    for (int j = 0; j < n; ++j) m(node - 1, j) -= datum.cartan()(node - 1, j);
    return m;
  }

 private:
  friend WeylElement compose(const WeylElement& a, const WeylElement& b);

  const RootDatum* datum_ = nullptr;
  Word word_;
  IntMatrix weight_;
  IntMatrix root_;
};

inline std::string word_to_string(const Word& word) {
  if (word.empty()) return "e";
  const bool dotted = std::any_of(word.begin(), word.end(), [](int i) { return i >= 10; });
  std::string s = "w";
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (dotted && k) s += ".";
    s += std::to_string(word[k]);
  }
  return s;
}

inline std::string to_string(const WeylElement& w) { return word_to_string(w.word()); }

/// Accepts "134", "w134", "1.10.3", "e", "" (identity) and "1" style input.
inline Word parse_word(const std::string& text) {
  std::string s = text;
  if (!s.empty() && (s[0] == 'w' || s[0] == 'W' || s[0] == 's')) s.erase(s.begin());
  if (s.empty() || s == "e") return {};
  Word out;
  if (s.find('.') != std::string::npos) {
    std::size_t start = 0;
    while (start <= s.size()) {
      const auto dot = s.find('.', start);
      const std::string tok = s.substr(start, dot == std::string::npos ? std::string::npos : dot - start);
      if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw ValidationError("invalid Weyl word '" + text + "'");
      out.push_back(std::stoi(tok));
      if (dot == std::string::npos) break;
      start = dot + 1;
    }
    return out;
  }
  for (char c : s) {
    if (c < '1' || c > '9') throw ValidationError("invalid Weyl word '" + text + "'");
    out.push_back(c - '0');
  }
  return out;
}

inline WeylElement parse_weyl_element(const RootDatum& datum, const std::string& text) {
  return WeylElement::from_word(datum, parse_word(text));
}

/// a o b: b acts first.
inline WeylElement compose(const WeylElement& a, const WeylElement& b) {
  a.check_same_datum(b);
  WeylElement out = a;
  out.word_.insert(out.word_.end(), b.word_.begin(), b.word_.end());
  out.weight_ = a.weight_ * b.weight_;
  out.root_ = a.root_ * b.root_;
  return out;
}

inline WeylElement inverse(const WeylElement& w) {
  Word rev(w.word().rbegin(), w.word().rend());
  return WeylElement::from_word(w.datum(), rev);
}

inline bool equals(const WeylElement& a, const WeylElement& b) {
  a.check_same_datum(b);
  return a == b;
}

inline bool commutes(const WeylElement& a, const WeylElement& b) {
  a.check_same_datum(b);
  return a.weight_action() * b.weight_action() == b.weight_action() * a.weight_action();
}

inline WeylElement simple_reflection(const RootDatum& datum, int node) {
  return WeylElement::simple_reflection(datum, node);
}

inline Weight apply(const WeylElement& w, const Weight& lambda) { return w.apply(lambda); }

/// w(alpha_i) < 0, i.e. l(w s_i) < l(w).
inline bool is_right_descent(const WeylElement& w, int node) {
  const IntVec col = w.root_action().column(node - 1);
  return std::any_of(col.begin(), col.end(), [](Int x) { return x < 0; });
}

/// {gamma > 0 : w(gamma) < 0}, in positive-root order.
inline std::vector<RootVec> inversion_set(const WeylElement& w) {
  std::vector<RootVec> out;
  for (const auto& g : w.datum().positive_roots())
    if (w.apply(g).is_negative()) out.push_back(g);
  return out;
}

inline int length(const WeylElement& w) {
  int l = 0;
  for (const auto& g : w.datum().positive_roots())
    if (w.apply(g).is_negative()) ++l;
  return l;
}

/// s_i w < w, i.e. w^{-1}(alpha_i) < 0, read off as <w rho, alpha_i^vee> < 0.
inline bool is_left_descent(const WeylElement& w, int node) {
  const IntMatrix& m = w.weight_action();
  Int row_sum = 0;
  for (int j = 0; j < m.cols(); ++j) row_sum += m(node - 1, j);
  return row_sum < 0;
}

/// Lexicographically smallest reduced word: repeatedly strip the smallest
/// left descent.  Gives "w232" for s2 s3 s2 = s3 s2 s3 and "w13" for s1 s3.
inline Word reduced_word(const WeylElement& w) {
  const RootDatum& d = w.datum();
  IntMatrix m = w.weight_action();
  Word out;
  for (;;) {
    int node = 0;
    for (int i = 1; i <= d.rank() && node == 0; ++i) {
      Int row_sum = 0;
      for (int j = 0; j < m.cols(); ++j) row_sum += m(i - 1, j);
      if (row_sum < 0) node = i;
    }
    if (node == 0) break;
    out.push_back(node);
    m = WeylElement::weight_reflection(d, node) * m;
  }
  if (!(m == IntMatrix::identity(d.rank()))) throw ConsistencyError("descent stripping did not reach the identity");
  return out;
}

/// Same element, carried by its reduced word.
inline WeylElement reduced(const WeylElement& w) { return WeylElement::from_word(w.datum(), reduced_word(w)); }

/// Nodes occurring in any (equivalently every) reduced word of w.
inline std::vector<int> support(const WeylElement& w) {
  Word r = reduced_word(w);
  std::sort(r.begin(), r.end());
  r.erase(std::unique(r.begin(), r.end()), r.end());
  return r;
}

/// Longest element of the standard parabolic W_S (S given as 1-based nodes).
inline WeylElement longest_element(const RootDatum& datum, const std::vector<int>& S) {
  for (int s : S) datum.check_node(s);
  WeylElement w = WeylElement::identity(datum);
  bool grew = true;
  while (grew) {
    grew = false;
    for (int s : S)
      if (!is_right_descent(w, s)) {
        w = compose(w, WeylElement::simple_reflection(datum, s));
        grew = true;
        break;
      }
  }
  return w;
}

inline WeylElement longest_element(const RootDatum& datum) {
  std::vector<int> all(static_cast<std::size_t>(datum.rank()));
  for (int i = 0; i < datum.rank(); ++i) all[static_cast<std::size_t>(i)] = i + 1;
  return longest_element(datum, all);
}

// ---------------------------------------------------------------------------
// Group orders

namespace detail {

inline std::uint64_t factorial(int m) {
  std::uint64_t f = 1;
  for (int i = 2; i <= m; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

/// Order of the Weyl group of a connected subdiagram on `nodes`.
inline std::uint64_t component_order(const RootDatum& d, const std::vector<int>& nodes) {
  const int m = static_cast<int>(nodes.size());
  int max_bond = 1;
  std::vector<int> degree;
  for (int a : nodes) {
    int deg = 0;
    for (int b : nodes)
      if (a != b && d.adjacent(a, b)) {
        ++deg;
        max_bond = std::max(max_bond, d.bond(a, b));
      }
    degree.push_back(deg);
  }
  if (m == 1) return 2;
  if (max_bond == 3) return 12;
  if (max_bond == 2) {
    if (m == 4 && d.family() == Family::F) return 1152;
    return (std::uint64_t{1} << m) * factorial(m);
  }
  const int branch = static_cast<int>(std::count_if(degree.begin(), degree.end(), [](int x) { return x >= 3; }));
  if (branch == 0) return factorial(m + 1);
  // arms from the branch node
  int centre = 0;
  for (std::size_t k = 0; k < nodes.size(); ++k)
    if (degree[k] >= 3) centre = nodes[k];
  std::vector<int> arms;
  for (int start : nodes) {
    if (start == centre || !d.adjacent(start, centre)) continue;
    int len = 1, prev = centre, cur = start;
    for (;;) {
      int next = 0;
      for (int b : nodes)
        if (b != prev && b != cur && d.adjacent(cur, b)) next = b;
      if (next == 0) break;
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return (std::uint64_t{1} << (m - 1)) * factorial(m);
  if (m == 6) return 51840;
  if (m == 7) return 2903040;
  if (m == 8) return 696729600;
  throw ConsistencyError("unclassified Dynkin component");
}

}  // namespace detail

/// Connected components of the subdiagram induced on S, each sorted.
inline std::vector<std::vector<int>> components(const RootDatum& d, std::vector<int> S) {
  std::sort(S.begin(), S.end());
  S.erase(std::unique(S.begin(), S.end()), S.end());
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(static_cast<std::size_t>(d.rank() + 1), false);
  for (int s : S) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    std::vector<int> comp{s};
    seen[static_cast<std::size_t>(s)] = true;
    for (std::size_t h = 0; h < comp.size(); ++h)
      for (int t : S)
        if (!seen[static_cast<std::size_t>(t)] && d.adjacent(comp[h], t)) {
          seen[static_cast<std::size_t>(t)] = true;
          comp.push_back(t);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(comp);
  }
  return out;
}

/// |W_S| by the classification of the components of S.
inline std::uint64_t parabolic_order(const RootDatum& d, const std::vector<int>& S) {
  for (int s : S) d.check_node(s);
  std::uint64_t order = 1;
  for (const auto& comp : components(d, S)) order *= detail::component_order(d, comp);
  return order;
}

inline std::uint64_t weyl_group_order(const RootDatum& d) {
  std::vector<int> all(static_cast<std::size_t>(d.rank()));
  for (int i = 0; i < d.rank(); ++i) all[static_cast<std::size_t>(i)] = i + 1;
  return parabolic_order(d, all);
}

/// Enumeration cap, overridable through PSDECOMP_WEYL_CAP.
inline std::uint64_t default_enumeration_cap() {
  if (const char* env = std::getenv("PSDECOMP_WEYL_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 1000000;
}

/// Visits every element of W_S once, layer by layer in length.  Elements are
/// told apart by the image of rho, which has trivial stabilizer.
inline void for_each_parabolic(const RootDatum& d, const std::vector<int>& S,
                               const std::function<void(const WeylElement&)>& visit,
                               std::uint64_t cap = default_enumeration_cap()) {
  const std::uint64_t order = parabolic_order(d, S);
  if (order > cap)
    throw CapExceeded("refusing to enumerate a Weyl group of order " + std::to_string(order) + " (cap " +
                          std::to_string(cap) + ")",
                      order);
  struct Item {
    WeylElement w;
    IntVec rho_image;
  };
  const IntVec rho_vec(static_cast<std::size_t>(d.rank()), 1);
  std::vector<Item> layer{{WeylElement::identity(d), rho_vec}};
  std::uint64_t visited = 0;
  while (!layer.empty()) {
    std::vector<Item> next;
    std::unordered_set<IntVec, boost::hash<IntVec>> seen;
    for (const auto& item : layer) {
      visit(item.w);
      ++visited;
      for (int s : S) {
        const Int c = item.rho_image[static_cast<std::size_t>(s - 1)];
        if (c <= 0) continue;  // s * w would be shorter
        IntVec img = item.rho_image;
        for (int k = 0; k < d.rank(); ++k) img[static_cast<std::size_t>(k)] -= c * d.cartan()(k, s - 1);
        if (!seen.insert(img).second) continue;
        next.push_back({compose(WeylElement::simple_reflection(d, s), item.w), std::move(img)});
      }
    }
    layer = std::move(next);
  }
  if (visited != order)
    throw ConsistencyError("enumerated " + std::to_string(visited) + " elements, expected " + std::to_string(order));
}

inline void for_each_weyl(const RootDatum& d, const std::function<void(const WeylElement&)>& visit,
                          std::uint64_t cap = default_enumeration_cap()) {
  std::vector<int> all(static_cast<std::size_t>(d.rank()));
  for (int i = 0; i < d.rank(); ++i) all[static_cast<std::size_t>(i)] = i + 1;
  for_each_parabolic(d, all, visit, cap);
}

inline std::vector<WeylElement> enumerate_weyl(const RootDatum& d, std::uint64_t cap = default_enumeration_cap()) {
  std::vector<WeylElement> out;
  for_each_weyl(d, [&](const WeylElement& w) { out.push_back(w); }, cap);
  return out;
}

inline std::vector<WeylElement> enumerate_parabolic(const RootDatum& d, const std::vector<int>& S,
                                                    std::uint64_t cap = default_enumeration_cap()) {
  std::vector<WeylElement> out;
  for_each_parabolic(d, S, [&](const WeylElement& w) { out.push_back(w); }, cap);
  return out;
}

// ---------------------------------------------------------------------------
// Dominance and stabilizers

struct DominantResult {
  Weight dominant;
  WeylElement w;  // w.apply(lambda) == dominant
};

/// Reflects at the first negative coordinate until none remains.
inline DominantResult to_dominant_chamber(const RootDatum& d, const Weight& lambda) {
  d.check_weight(lambda);
  Weight cur = lambda;
  Word applied;  // s_{applied.back()} ... s_{applied.front()}
  for (;;) {
    int node = 0;
    for (int i = 1; i <= d.rank(); ++i)
      if (cur.at(i) < 0) {
        node = i;
        break;
      }
    if (node == 0) break;
    const Rat c = cur.at(node);
    for (int k = 1; k <= d.rank(); ++k) cur.at(k) -= c * d.cartan_entry(k, node);
    applied.push_back(node);
  }
  return {cur, WeylElement::from_word(d, Word(applied.rbegin(), applied.rend()))};
}

struct StabilizerDescription {
  std::vector<WeylElement> generators;
  WeylElement conjugator;  // generators are conjugator^{-1} s_j conjugator
  std::optional<std::uint64_t> order;
  std::vector<int> generating_simple_set;

  bool trivial() const { return generating_simple_set.empty(); }
};

inline StabilizerDescription stabilizer(const RootDatum& d, const Weight& lambda,
                                        std::uint64_t cap = default_enumeration_cap()) {
  d.check_weight(lambda);
  StabilizerDescription out{{}, WeylElement::identity(d), std::nullopt, {}};
  if (is_antidominant(lambda)) {
    out.generating_simple_set = zero_nodes(lambda);
  } else {
    auto dom = to_dominant_chamber(d, lambda);
    out.conjugator = dom.w;
    out.generating_simple_set = zero_nodes(dom.dominant);
  }
  const WeylElement inv = inverse(out.conjugator);
  for (int j : out.generating_simple_set)
    out.generators.push_back(compose(compose(inv, WeylElement::simple_reflection(d, j)), out.conjugator));
  const std::uint64_t order = parabolic_order(d, out.generating_simple_set);
  if (order <= cap) out.order = order;
  return out;
}

/// Whether w fixes lambda.
inline bool stabilizes(const WeylElement& w, const Weight& lambda) { return w.apply(lambda) == lambda; }

/// All elements of Stab_W(lambda), listed through the conjugated standard parabolic.
inline std::vector<WeylElement> enumerate_stabilizer(const RootDatum& d, const Weight& lambda,
                                                     std::uint64_t cap = default_enumeration_cap()) {
  const auto st = stabilizer(d, lambda, cap);
  const WeylElement inv = inverse(st.conjugator);
  std::vector<WeylElement> out;
  for_each_parabolic(
      d, st.generating_simple_set,
      [&](const WeylElement& w) {
        out.push_back(st.conjugator.is_identity() ? w : reduced(compose(compose(inv, w), st.conjugator)));
      },
      cap);
  return out;
}

}  // namespace psdecomp
