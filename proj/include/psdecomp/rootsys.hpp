#pragma once

// Root data of the reduced irreducible types A-G in Bourbaki numbering.
//
// Conventions used throughout the library:
//   * nodes are numbered 1..n as in Bourbaki; every public function taking a
//     node index expects this 1-based label;
//   * cartan()(i, j) (0-based storage) is <alpha_{j+1}, alpha_{i+1}^vee>, so the
//     simple root alpha_j written in fundamental weights is column j;
//   * weights are stored in the fundamental-weight basis, roots in the
//     simple-root basis and coroots in the simple-coroot basis.  Pairing a
//     weight with a coroot is then the plain dot product.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "psdecomp/errors.hpp"
#include "psdecomp/matrix.hpp"
#include "psdecomp/rational.hpp"

namespace psdecomp {

enum class Family { A, B, C, D, E, F, G };

inline char family_letter(Family f) {
  return "ABCDEFG"[static_cast<int>(f)];
}

inline Family parse_family(char c) {
  switch (c) {
    case 'A': case 'a': return Family::A;
    case 'B': case 'b': return Family::B;
    case 'C': case 'c': return Family::C;
    case 'D': case 'd': return Family::D;
    case 'E': case 'e': return Family::E;
    case 'F': case 'f': return Family::F;
    case 'G': case 'g': return Family::G;
    default: throw ValidationError(std::string("invalid type: unknown family '") + c + "'");
  }
}

inline bool is_valid_type(Family f, int rank) {
  switch (f) {
    case Family::A: return rank >= 1;
    case Family::B: return rank >= 2;
    case Family::C: return rank >= 2;
    case Family::D: return rank >= 4;
    case Family::E: return rank >= 6 && rank <= 8;
    case Family::F: return rank == 4;
    case Family::G: return rank == 2;
  }
  return false;
}

/// A point of a*_R with rational coordinates in the fundamental-weight basis.
struct Weight {
  std::vector<Rat> coords;

  Weight() = default;
  explicit Weight(std::vector<Rat> c) : coords(std::move(c)) {}
  Weight(std::initializer_list<Rat> c) : coords(c) {}
  static Weight zero(int n) { return Weight(std::vector<Rat>(static_cast<std::size_t>(n), Rat(0))); }
  static Weight from_ints(const IntVec& v) {
    Weight w;
    w.coords.reserve(v.size());
    for (Int x : v) w.coords.emplace_back(x);
    return w;
  }

  int size() const noexcept { return static_cast<int>(coords.size()); }
  /// 1-based coordinate access, matching node labels.
  const Rat& at(int node) const { return coords.at(static_cast<std::size_t>(node - 1)); }
  Rat& at(int node) { return coords.at(static_cast<std::size_t>(node - 1)); }

  bool is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](const Rat& r) { return r == 0; });
  }

  Weight& operator+=(const Weight& o) {
    check_same_size(o);
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
    return *this;
  }
  Weight& operator-=(const Weight& o) {
    check_same_size(o);
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] -= o.coords[i];
    return *this;
  }
  Weight& operator*=(const Rat& s) {
    for (auto& c : coords) c *= s;
    return *this;
  }
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(const Rat& s, Weight a) { return a *= s; }
  friend Weight operator*(Weight a, const Rat& s) { return a *= s; }
  friend Weight operator-(Weight a) { return a *= Rat(-1); }
  bool operator==(const Weight&) const = default;

 private:
  void check_same_size(const Weight& o) const {
    if (o.coords.size() != coords.size())
      throw ValidationError("weight dimension mismatch: " + std::to_string(coords.size()) + " vs " +
                            std::to_string(o.coords.size()));
  }
};

inline std::string to_string(const Weight& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.coords.size(); ++i) {
    if (i) s += ",";
    s += to_string(w.coords[i]);
  }
  return s + ")";
}

inline std::ostream& operator<<(std::ostream& os, const Weight& w) { return os << to_string(w); }

/// Comma-separated rationals, optionally wrapped in parentheses: "1,-1,0" or "(1/2,0)".
inline Weight parse_weight(std::string text) {
  if (!text.empty() && text.front() == '(') text.erase(text.begin());
  if (!text.empty() && text.back() == ')') text.pop_back();
  if (text.empty()) throw ValidationError("empty weight");
  Weight w;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) w.coords.push_back(parse_rat(item));
  if (text.back() == ',') throw ValidationError("trailing comma in weight '" + text + "'");
  return w;
}

/// Integral vector in simple-root (or, when tagged, simple-coroot) coordinates.
struct RootVec {
  IntVec coords;
  bool is_coroot = false;

  int size() const noexcept { return static_cast<int>(coords.size()); }
  Int height() const { return std::accumulate(coords.begin(), coords.end(), Int{0}); }
  bool is_positive() const {
    return std::all_of(coords.begin(), coords.end(), [](Int c) { return c >= 0; }) &&
           std::any_of(coords.begin(), coords.end(), [](Int c) { return c > 0; });
  }
  bool is_negative() const {
    return std::all_of(coords.begin(), coords.end(), [](Int c) { return c <= 0; }) &&
           std::any_of(coords.begin(), coords.end(), [](Int c) { return c < 0; });
  }
  RootVec operator-() const {
    RootVec r = *this;
    for (auto& c : r.coords) c = -c;
    return r;
  }
  bool operator==(const RootVec&) const = default;
};

/// Height first, then reverse-lexicographic so that alpha_1 precedes alpha_2.
inline bool root_order_less(const RootVec& a, const RootVec& b) {
  const Int ha = a.height(), hb = b.height();
  if (ha != hb) return ha < hb;
  return std::lexicographical_compare(b.coords.begin(), b.coords.end(), a.coords.begin(), a.coords.end());
}

inline std::string to_string(const RootVec& r) {
  std::string s = r.is_coroot ? "v[" : "[";
  for (std::size_t i = 0; i < r.coords.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(r.coords[i]);
  }
  return s + "]";
}

/// <lambda, beta^vee>.  The second argument must be tagged as a coroot.
inline Rat pair(const Weight& lambda, const RootVec& coroot) {
  if (!coroot.is_coroot) throw ValidationError("pair() expects a coroot; convert the root with RootDatum::coroot()");
  if (lambda.size() != coroot.size())
    throw ValidationError("dimension mismatch in pairing: weight has " + std::to_string(lambda.size()) +
                          " coordinates, coroot has " + std::to_string(coroot.size()));
  Rat acc(0);
  for (std::size_t i = 0; i < coroot.coords.size(); ++i)
    if (coroot.coords[i] != 0) acc += lambda.coords[i] * coroot.coords[i];
  return acc;
}

/// Immutable root datum.  Safe to share read-only between threads.
class RootDatum {
 public:
  Family family() const noexcept { return family_; }
  int rank() const noexcept { return rank_; }
  std::string name() const { return std::string(1, family_letter(family_)) + std::to_string(rank_); }

  /// 0-based storage; entry (i, j) is <alpha_{j+1}, alpha_{i+1}^vee>.
  const IntMatrix& cartan() const noexcept { return cartan_; }
  /// 1-based convenience accessor: <alpha_j, alpha_i^vee>.
  Int cartan_entry(int i, int j) const {
    check_node(i);
    check_node(j);
    return cartan_(i - 1, j - 1);
  }
  /// d_i = (alpha_i, alpha_i) / 2, normalized so that short roots have d = 1.
  const IntVec& symmetrizer() const noexcept { return sym_; }

  const std::vector<RootVec>& positive_roots() const noexcept { return roots_; }
  const std::vector<RootVec>& positive_coroots() const noexcept { return coroots_; }
  std::size_t num_positive_roots() const noexcept { return roots_.size(); }

  void check_node(int node) const {
    if (node < 1 || node > rank_)
      throw ValidationError("node index " + std::to_string(node) + " out of range 1.." + std::to_string(rank_) +
                            " for " + name());
  }

  void check_weight(const Weight& w) const {
    if (w.size() != rank_)
      throw ValidationError("weight " + to_string(w) + " has " + std::to_string(w.size()) + " coordinates, " +
                            name() + " needs " + std::to_string(rank_));
  }

  RootVec simple_root(int node) const {
    check_node(node);
    RootVec r{IntVec(static_cast<std::size_t>(rank_), 0), false};
    r.coords[static_cast<std::size_t>(node - 1)] = 1;
    return r;
  }
  RootVec simple_coroot(int node) const {
    RootVec r = simple_root(node);
    r.is_coroot = true;
    return r;
  }

  /// (beta, beta) / 2 in the normalization of symmetrizer().
  Int half_norm(const RootVec& root) const {
    Int acc = 0;
    for (int i = 0; i < rank_; ++i)
      for (int j = 0; j < rank_; ++j)
        acc += root.coords[static_cast<std::size_t>(i)] * root.coords[static_cast<std::size_t>(j)] * sym_[static_cast<std::size_t>(i)] *
               cartan_(i, j);
    return acc / 2;
  }

  /// beta^vee = 2 beta / (beta, beta) in simple-coroot coordinates.
  RootVec coroot(const RootVec& root) const {
    if (root.is_coroot) throw ValidationError("coroot() expects a root");
    if (root.size() != rank_) throw ValidationError("root dimension mismatch");
    const Int d = half_norm(root);
    if (d == 0) throw ValidationError("zero vector has no coroot");
    RootVec c{IntVec(static_cast<std::size_t>(rank_)), true};
    for (int j = 0; j < rank_; ++j) {
      const Int num = root.coords[static_cast<std::size_t>(j)] * sym_[static_cast<std::size_t>(j)];
      if (num % d != 0) throw ValidationError(to_string(root) + " is not a root of " + name());
      c.coords[static_cast<std::size_t>(j)] = num / d;
    }
    return c;
  }

  /// A root (simple-root coordinates) as a weight: C * b.
  Weight root_as_weight(const RootVec& root) const {
    if (root.is_coroot) throw ValidationError("root_as_weight() expects a root");
    return Weight::from_ints(cartan_ * root.coords);
  }

  /// <beta, gamma^vee> for a root beta and a coroot gamma^vee; always an integer.
  Int root_pairing(const RootVec& root, const RootVec& coroot_vec) const {
    const IntVec w = cartan_ * root.coords;
    Int acc = 0;
    for (int i = 0; i < rank_; ++i) acc += w[static_cast<std::size_t>(i)] * coroot_vec.coords[static_cast<std::size_t>(i)];
    return acc;
  }

  bool is_root(const RootVec& r) const {
    if (r.is_coroot || r.size() != rank_) return false;
    if (r.is_positive()) return root_index_.count(r.coords) > 0;
    if (r.is_negative()) return root_index_.count((-r).coords) > 0;
    return false;
  }

  /// Index into positive_roots(), or -1.
  int positive_root_index(const RootVec& r) const {
    auto it = root_index_.find(r.coords);
    return it == root_index_.end() ? -1 : it->second;
  }

  /// Product of the two Cartan entries of a pair of nodes: the bond multiplicity.
  int bond(int i, int j) const {
    check_node(i);
    check_node(j);
    if (i == j) return 0;
    return static_cast<int>(cartan_(i - 1, j - 1) * cartan_(j - 1, i - 1));
  }
  bool adjacent(int i, int j) const { return bond(i, j) != 0; }

  std::vector<int> neighbours(int node) const {
    check_node(node);
    std::vector<int> out;
    for (int j = 1; j <= rank_; ++j)
      if (j != node && cartan_(node - 1, j - 1) != 0) out.push_back(j);
    return out;
  }

  /// Dynkin edges (i < j), lexicographic.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= rank_; ++i)
      for (int j = i + 1; j <= rank_; ++j)
        if (cartan_(i - 1, j - 1) != 0) out.emplace_back(i, j);
    return out;
  }

  /// Graph distance in the Dynkin diagram.
  int distance(int a, int b) const {
    check_node(a);
    check_node(b);
    std::vector<int> dist(static_cast<std::size_t>(rank_ + 1), -1);
    std::vector<int> queue{a};
    dist[static_cast<std::size_t>(a)] = 0;
    for (std::size_t h = 0; h < queue.size(); ++h) {
      const int u = queue[h];
      for (int v : neighbours(u))
        if (dist[static_cast<std::size_t>(v)] < 0) {
          dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
          queue.push_back(v);
        }
    }
    return dist[static_cast<std::size_t>(b)];
  }

  /// The unique positive root that is maximal in the dominance order.
  const RootVec& highest_root() const { return roots_.back(); }

  bool operator==(const RootDatum& o) const { return family_ == o.family_ && rank_ == o.rank_; }

 private:
  friend RootDatum build_root_datum(Family family, int rank);

  Family family_ = Family::A;
  int rank_ = 0;
  IntMatrix cartan_;
  IntVec sym_;
  std::vector<RootVec> roots_;
  std::vector<RootVec> coroots_;
  std::map<IntVec, int> root_index_;
};

namespace detail {

inline IntMatrix cartan_matrix(Family family, int n) {
  IntMatrix c = IntMatrix::identity(n);
  for (int i = 0; i < n; ++i) c(i, i) = 2;
  auto link = [&](int a, int b) {  // simple bond between 1-based nodes
    c(a - 1, b - 1) = -1;
    c(b - 1, a - 1) = -1;
  };
  switch (family) {
    case Family::A:
      for (int i = 1; i < n; ++i) link(i, i + 1);
      break;
    case Family::B:  // alpha_n short
      for (int i = 1; i < n; ++i) link(i, i + 1);
      c(n - 1, n - 2) = -2;
      break;
    case Family::C:  // alpha_n long
      for (int i = 1; i < n; ++i) link(i, i + 1);
      c(n - 2, n - 1) = -2;
      break;
    case Family::D:
      for (int i = 1; i < n - 1; ++i) link(i, i + 1);
      link(n - 2, n);
      break;
    case Family::E:
      link(1, 3);
      link(2, 4);
      for (int i = 3; i < n; ++i) link(i, i + 1);
      break;
    case Family::F:  // alpha_1, alpha_2 long
      link(1, 2);
      link(2, 3);
      link(3, 4);
      c(2, 1) = -2;
      break;
    case Family::G:  // alpha_1 short, alpha_2 long
      c(0, 1) = -3;
      c(1, 0) = -1;
      break;
  }
  return c;
}

inline IntVec symmetrizer(const IntMatrix& c) {
  const int n = c.rows();
  std::vector<Rat> d(static_cast<std::size_t>(n), Rat(0));
  d[0] = 1;
  std::vector<int> queue{0};
  for (std::size_t h = 0; h < queue.size(); ++h) {
    const int i = queue[h];
    for (int j = 0; j < n; ++j)
      if (j != i && c(i, j) != 0 && d[static_cast<std::size_t>(j)] == 0) {
        // d_i C_ij = d_j C_ji
        d[static_cast<std::size_t>(j)] = d[static_cast<std::size_t>(i)] * Rat(c(i, j), c(j, i));
        queue.push_back(j);
      }
  }
  Int lcm = 1;
  for (const auto& x : d) lcm = std::lcm(lcm, x.denominator());
  IntVec out(static_cast<std::size_t>(n));
  Int g = 0;
  for (int i = 0; i < n; ++i) {
    const Rat scaled = d[static_cast<std::size_t>(i)] * lcm;
    out[static_cast<std::size_t>(i)] = scaled.numerator();
    g = std::gcd(g, scaled.numerator());
  }
  for (auto& x : out) x /= g;
  return out;
}

}  // namespace detail

/// Builds the root datum of a simple type; positive roots come from closing
/// the simple roots under simple reflections while staying positive.
inline RootDatum build_root_datum(Family family, int rank) {
  if (!is_valid_type(family, rank))
    throw ValidationError("invalid type " + std::string(1, family_letter(family)) + std::to_string(rank));
  RootDatum d;
  d.family_ = family;
  d.rank_ = rank;
  d.cartan_ = detail::cartan_matrix(family, rank);
  d.sym_ = detail::symmetrizer(d.cartan_);

  std::set<IntVec> seen;
  std::vector<IntVec> queue;
  for (int i = 0; i < rank; ++i) {
    IntVec e(static_cast<std::size_t>(rank), 0);
    e[static_cast<std::size_t>(i)] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  for (std::size_t h = 0; h < queue.size(); ++h) {
    const IntVec beta = queue[h];
    for (int i = 0; i < rank; ++i) {
      Int p = 0;
      for (int j = 0; j < rank; ++j) p += d.cartan_(i, j) * beta[static_cast<std::size_t>(j)];
      if (p == 0) continue;
      IntVec image = beta;
      image[static_cast<std::size_t>(i)] -= p;
      if (std::any_of(image.begin(), image.end(), [](Int x) { return x < 0; })) continue;
      if (seen.insert(image).second) queue.push_back(image);
    }
  }
  for (const auto& v : seen) d.roots_.push_back(RootVec{v, false});
  std::sort(d.roots_.begin(), d.roots_.end(), root_order_less);
  for (std::size_t k = 0; k < d.roots_.size(); ++k) {
    d.root_index_[d.roots_[k].coords] = static_cast<int>(k);
    d.coroots_.push_back(d.coroot(d.roots_[k]));
  }
  return d;
}

/// Parses "D4", "e6", "G2".
inline RootDatum build_root_datum(const std::string& label) {
  if (label.size() < 2) throw ValidationError("invalid type '" + label + "'");
  const Family f = parse_family(label[0]);
  int rank = 0;
  for (std::size_t i = 1; i < label.size(); ++i) {
    if (label[i] < '0' || label[i] > '9') throw ValidationError("invalid type '" + label + "'");
    rank = rank * 10 + (label[i] - '0');
    if (rank > 1000) throw ValidationError("invalid type '" + label + "': rank too large");
  }
  return build_root_datum(f, rank);
}

/// Standard count of positive roots, used to validate the orbit closure.
inline std::size_t expected_positive_root_count(Family f, int n) {
  const auto un = static_cast<std::size_t>(n);
  switch (f) {
    case Family::A: return un * (un + 1) / 2;
    case Family::B:
    case Family::C: return un * un;
    case Family::D: return un * (un - 1);
    case Family::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
    case Family::F: return 24;
    case Family::G: return 6;
  }
  return 0;
}

/// alpha_i in fundamental-weight coordinates: column i of the Cartan matrix.
inline Weight simple_root_as_weight(const RootDatum& datum, int node) {
  datum.check_node(node);
  return Weight::from_ints(datum.cartan().column(node - 1));
}

inline Weight fundamental_weight(const RootDatum& datum, int node) {
  datum.check_node(node);
  Weight w = Weight::zero(datum.rank());
  w.at(node) = 1;
  return w;
}

/// rho of the semisimple-rank-one Levi M_{alpha}: alpha / 2.
inline Weight rho_M(const RootDatum& datum, int alpha) {
  return Rat(1, 2) * simple_root_as_weight(datum, alpha);
}

/// Sum of the fundamental weights.
inline Weight rho(const RootDatum& datum) {
  Weight w = Weight::zero(datum.rank());
  for (auto& c : w.coords) c = 1;
  return w;
}

inline bool is_dominant(const Weight& w) {
  return std::all_of(w.coords.begin(), w.coords.end(), [](const Rat& r) { return r >= 0; });
}
inline bool is_antidominant(const Weight& w) {
  return std::all_of(w.coords.begin(), w.coords.end(), [](const Rat& r) { return r <= 0; });
}

/// {i : <lambda, alpha_i^vee> = 0}, ascending.
inline std::vector<int> zero_nodes(const Weight& w) {
  std::vector<int> out;
  for (int i = 1; i <= w.size(); ++i)
    if (w.at(i) == 0) out.push_back(i);
  return out;
}

// ---------------------------------------------------------------------------
// Dynkin diagrams

enum class NodeMark { plain, alpha, in_S };

namespace detail {

struct DynkinLayout {
  std::vector<int> chain;  // nodes drawn left to right on the main line
  int hanging = 0;         // node drawn below the chain (0: none)
  int hanging_parent = 0;
};

inline DynkinLayout dynkin_layout(const RootDatum& d) {
  DynkinLayout l;
  const int n = d.rank();
  switch (d.family()) {
    case Family::D:
      for (int i = 1; i <= n - 1; ++i) l.chain.push_back(i);
      l.hanging = n;
      l.hanging_parent = n - 2;
      break;
    case Family::E:
      l.chain.push_back(1);
      for (int i = 3; i <= n; ++i) l.chain.push_back(i);
      l.hanging = 2;
      l.hanging_parent = 4;
      break;
    default:
      for (int i = 1; i <= n; ++i) l.chain.push_back(i);
  }
  return l;
}

inline const char* mark_glyph(NodeMark m) {
  switch (m) {
    case NodeMark::alpha: return "●";
    case NodeMark::in_S: return "×"; 
    case NodeMark::plain: break;
  }
  return "○";
}

inline const char* bond_glyph(int multiplicity) {
  switch (multiplicity) {
    case 2: return "══";
    case 3: return "≡≡";
    default: return "──";
  }
}

inline std::vector<NodeMark> expand_marks(const RootDatum& datum, const std::map<int, NodeMark>& marks) {
  std::vector<NodeMark> out(static_cast<std::size_t>(datum.rank()), NodeMark::plain);
  for (const auto& [node, mark] : marks) {
    if (node < 1 || node > datum.rank())
      throw ValidationError("mark for nonexistent node " + std::to_string(node) + " of " + datum.name());
    out[static_cast<std::size_t>(node - 1)] = mark;
  }
  return out;
}

}  // namespace detail

/// Marks for a (alpha, S) configuration: alpha filled, S crossed, rest open.
inline std::map<int, NodeMark> marks_for(int alpha, const std::vector<int>& S) {
  std::map<int, NodeMark> m;
  for (int s : S) m[s] = NodeMark::in_S;
  if (alpha > 0) m[alpha] = NodeMark::alpha;
  return m;
}

/// Multi-line ASCII (UTF-8 box drawing) diagram with node labels underneath.
/// Types D and E hang their branch node below the main chain.
inline std::string render_dynkin(const RootDatum& datum, const std::map<int, NodeMark>& marks = {}) {
  const auto m = detail::expand_marks(datum, marks);
  const auto layout = detail::dynkin_layout(datum);
  std::string line1, line2;
  int parent_pos = -1;
  for (std::size_t k = 0; k < layout.chain.size(); ++k) {
    const int node = layout.chain[k];
    if (node == layout.hanging_parent) parent_pos = static_cast<int>(k);
    line1 += detail::mark_glyph(m[static_cast<std::size_t>(node - 1)]);
    if (k + 1 < layout.chain.size()) line1 += detail::bond_glyph(datum.bond(node, layout.chain[k + 1]));
    std::string label = std::to_string(node);
    if (k + 1 < layout.chain.size()) label.resize(3, ' ');
    line2 += label;
  }
  std::string out = line1 + "\n" + line2 + "\n";
  if (layout.hanging != 0) {
    const std::string pad(static_cast<std::size_t>(3 * parent_pos), ' ');
    out += pad + "│\n";
    out += pad + detail::mark_glyph(m[static_cast<std::size_t>(layout.hanging - 1)]) + " " +
           std::to_string(layout.hanging) + "\n";
  }
  return out;
}

/// One-line glyph string in node order, e.g. "●×○" for A3 with alpha=1, S={2}.
inline std::string inline_marks(const RootDatum& datum, const std::map<int, NodeMark>& marks) {
  const auto m = detail::expand_marks(datum, marks);
  std::string s;
  for (NodeMark x : m) s += detail::mark_glyph(x);
  return s;
}

/// Graphviz form of the marked diagram.
inline std::string dynkin_dot(const RootDatum& datum, const std::map<int, NodeMark>& marks = {}) {
  const auto m = detail::expand_marks(datum, marks);
  std::ostringstream os;
  os << "graph " << datum.name() << " {\n  node [shape=circle];\n";
  for (int i = 1; i <= datum.rank(); ++i) {
    os << "  n" << i << " [label=\"" << i << "\"";
    switch (m[static_cast<std::size_t>(i - 1)]) {
      case NodeMark::alpha: os << ", style=filled, fillcolor=black, fontcolor=white"; break;
      case NodeMark::in_S: os << ", shape=doublecircle"; break;
      case NodeMark::plain: break;
    }
    os << "];\n";
  }
  for (const auto& [a, b] : datum.edges()) {
    os << "  n" << a << " -- n" << b;
    const int mult = datum.bond(a, b);
    if (mult > 1) os << " [label=\"" << mult << "\", penwidth=" << mult << "]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace psdecomp
