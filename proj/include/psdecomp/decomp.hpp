#pragma once

// Certification of the rank-one decomposition
//
//     Ind_B^G lambda0 = Ind_P^G (St_M (x) chi0)  (+)  Ind_P^G (tr_M (x) chi0),   M = M_{alpha},
//
// for a triple (lambda0, alpha, w0).  Assumptions are decided exactly where a
// combinatorial criterion is available, through known sufficient conditions
// where one is licensed, and reported `unknown` otherwise.

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "psdecomp/errors.hpp"
#include "psdecomp/intertwine.hpp"
#include "psdecomp/parallel.hpp"
#include "psdecomp/rational.hpp"
#include "psdecomp/rootsys.hpp"
#include "psdecomp/weyl.hpp"

namespace psdecomp {

enum class Verdict { holds, fails, holds_by_sufficient_condition, unknown };
enum class FieldType { p_adic, archimedean_real, archimedean_complex };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::fails: return "fails";
    case Verdict::holds_by_sufficient_condition: return "holds_by_sufficient_condition";
    case Verdict::unknown: break;
  }
  return "unknown";
}

inline Verdict parse_verdict(const std::string& s) {
  if (s == "holds") return Verdict::holds;
  if (s == "fails") return Verdict::fails;
  if (s == "holds_by_sufficient_condition") return Verdict::holds_by_sufficient_condition;
  if (s == "unknown") return Verdict::unknown;
  throw ValidationError("unknown verdict '" + s + "'");
}

inline bool ok(Verdict v) { return v == Verdict::holds || v == Verdict::holds_by_sufficient_condition; }

inline const char* to_string(FieldType f) {
  switch (f) {
    case FieldType::p_adic: return "p-adic";
    case FieldType::archimedean_real: return "archimedean-real";
    case FieldType::archimedean_complex: break;
  }
  return "archimedean-complex";
}

inline FieldType parse_field(const std::string& s) {
  if (s == "p-adic" || s == "padic") return FieldType::p_adic;
  if (s == "archimedean-real" || s == "real") return FieldType::archimedean_real;
  if (s == "archimedean-complex" || s == "complex") return FieldType::archimedean_complex;
  throw ValidationError("unknown field type '" + s + "' (expected p-adic, archimedean-real or archimedean-complex)");
}

/// lambda -> <coeffs, lambda> + constant.
struct AffineForm {
  Weight coeffs;
  Rat constant;

  Rat operator()(const Weight& lambda) const {
    Rat acc = constant;
    for (std::size_t i = 0; i < coeffs.coords.size(); ++i) acc += coeffs.coords[i] * lambda.coords.at(i);
    return acc;
  }
  bool operator==(const AffineForm&) const = default;
};

/// Zero sets of two affine forms agree iff one is a nonzero multiple of the other.
inline bool same_hyperplane(const AffineForm& a, const AffineForm& b) {
  std::optional<Rat> ratio;
  auto match = [&](const Rat& x, const Rat& y) {
    if (x == 0 || y == 0) return x == 0 && y == 0;
    const Rat r = y / x;
    if (!ratio) ratio = r;
    return *ratio == r;
  };
  for (std::size_t i = 0; i < a.coeffs.coords.size(); ++i)
    if (!match(a.coeffs.coords[i], b.coeffs.coords[i])) return false;
  return match(a.constant, b.constant) && ratio.has_value();
}

struct Hyperplanes {
  AffineForm l1;  // <lambda, alpha^vee> - 1
  AffineForm l2;  // <w0 w_alpha lambda, alpha^vee> + 1
  bool distinct = false;
};

/// chi0 restricted to T: lambda0 - alpha/2.
inline Weight chi0(const RootDatum& d, const Weight& lambda0, int alpha) {
  d.check_weight(lambda0);
  return lambda0 - rho_M(d, alpha);
}

namespace detail {

inline WeylElement w0_walpha(const WeylElement& w0, int alpha) {
  return compose(w0, WeylElement::simple_reflection(w0.datum(), alpha));
}

/// Linear part of lambda -> <w lambda, alpha^vee>: row alpha of the action.
inline Weight pullback_of_alpha_coordinate(const WeylElement& w, int alpha) {
  return Weight::from_ints(w.weight_action().row(alpha - 1));
}

}  // namespace detail

inline Hyperplanes hyperplanes(const Weight& lambda0, int alpha, const WeylElement& w0) {
  const RootDatum& d = w0.datum();
  d.check_weight(lambda0);
  d.check_node(alpha);
  Hyperplanes h;
  h.l1.coeffs = fundamental_weight(d, alpha);  // e_alpha: picks <lambda, alpha^vee>
  h.l1.constant = -1;
  h.l2.coeffs = detail::pullback_of_alpha_coordinate(detail::w0_walpha(w0, alpha), alpha);
  h.l2.constant = 1;
  if (h.l1(lambda0) != 0)
    throw StructuralError("lambda0 = " + to_string(lambda0) + " is not on H_1: <lambda0, alpha_" + std::to_string(alpha) +
                          "^vee> = " + to_string(lambda0.at(alpha)));
  if (h.l2(lambda0) != 0)
    throw StructuralError("lambda0 = " + to_string(lambda0) + " is not on H_-1 for w0 = " + to_string(w0) +
                          ": <w0 w_alpha lambda0, alpha^vee> = " + to_string(h.l2(lambda0) - 1));
  h.distinct = !same_hyperplane(h.l1, h.l2);
  // H_1 = H_-1 exactly when w0 commutes with w_alpha; a disagreement is a bug.
  const bool commuting = commutes(w0, WeylElement::simple_reflection(d, alpha));
  if (h.distinct == commuting)
    throw ConsistencyError("hyperplane comparison and commutation test disagree for w0 = " + to_string(w0));
  return h;
}

/// kappa_1 = <v, alpha^vee> / <w0 w_alpha v, alpha^vee>: the ratio l1/l2 along lambda0 + t v.
inline Rat kappa(const Weight& lambda0, int alpha, const WeylElement& w0, const Weight& v) {
  const RootDatum& d = w0.datum();
  d.check_weight(lambda0);
  d.check_weight(v);
  d.check_node(alpha);
  if (v.is_zero()) throw ValidationError("line direction must be nonzero");
  const Rat num = v.at(alpha);
  const Rat den = detail::w0_walpha(w0, alpha).apply(v).at(alpha);
  if (num == 0) throw PreconditionError("direction " + to_string(v) + " is parallel to H_1 (<v, alpha^vee> = 0)");
  if (den == 0) throw PreconditionError("line inside H_-1 direction: <w0 w_alpha v, alpha^vee> = 0 for v = " + to_string(v));
  const Rat k = num / den;
  if (k == -1) throw PreconditionError("supplementary angle: kappa_1 = -1 for v = " + to_string(v));
  return k;
}

/// Independent evaluation of kappa_1: applies the Weyl elements to points of
/// the line and takes the ratio l1 / l2 at each sample parameter.
inline Rat kappa_oracle(const Weight& lambda0, int alpha, const WeylElement& w0, const Weight& v,
                        const std::vector<Rat>& t_samples = {Rat(1), Rat(-1), Rat(1, 3), Rat(2), Rat(-5, 7)}) {
  const RootDatum& d = w0.datum();
  d.check_weight(lambda0);
  d.check_weight(v);
  if (v.is_zero()) throw ValidationError("line direction must be nonzero");
  const WeylElement s_alpha = WeylElement::simple_reflection(d, alpha);
  const RootVec alpha_vee = d.simple_coroot(alpha);
  std::optional<Rat> ratio;
  for (const Rat& t : t_samples) {
    if (t == 0) continue;
    const Weight lambda = lambda0 + t * v;
    const Rat l1 = pair(lambda, alpha_vee) - 1;
    const Rat l2 = pair(w0.apply(s_alpha.apply(lambda)), alpha_vee) + 1;
    if (l1 == 0) throw PreconditionError("line meets H_1 away from lambda0 or lies in it");
    if (l2 == 0) throw PreconditionError("line inside H_-1 direction at t = " + to_string(t));
    const Rat r = l1 / l2;
    if (ratio && *ratio != r)
      throw ConsistencyError("l1/l2 not constant along the line: " + to_string(*ratio) + " vs " + to_string(r));
    ratio = r;
  }
  if (!ratio) throw ValidationError("kappa_oracle needs a nonzero sample parameter");
  if (*ratio == -1) throw PreconditionError("supplementary angle: kappa_1 = -1");
  return *ratio;
}

/// Candidate directions in scan order: omega_1..omega_n, then integer vectors
/// with entries in [-2, 2] by increasing L1 norm, lexicographic within a norm.
inline std::vector<Weight> direction_battery(int n) {
  std::vector<Weight> out;
  for (int i = 0; i < n; ++i) {
    Weight w = Weight::zero(n);
    w.coords[static_cast<std::size_t>(i)] = 1;
    out.push_back(w);
  }
  std::vector<IntVec> vecs;
  IntVec cur(static_cast<std::size_t>(n), -2);
  for (;;) {
    vecs.push_back(cur);
    int k = n - 1;
    while (k >= 0 && cur[static_cast<std::size_t>(k)] == 2) cur[static_cast<std::size_t>(k--)] = -2;
    if (k < 0) break;
    ++cur[static_cast<std::size_t>(k)];
    if (vecs.size() > 200000) break;  // rank > 7: the prefix is more than enough
  }
  auto l1 = [](const IntVec& v) {
    Int s = 0;
    for (Int x : v) s += x < 0 ? -x : x;
    return s;
  };
  std::stable_sort(vecs.begin(), vecs.end(), [&](const IntVec& a, const IntVec& b) { return l1(a) < l1(b); });
  for (const auto& v : vecs)
    if (l1(v) > 0) out.push_back(Weight::from_ints(v));
  return out;
}

inline AffineLine choose_line(const Weight& lambda0, int alpha, const WeylElement& w0) {
  const auto h = hyperplanes(lambda0, alpha, w0);
  if (!h.distinct) throw PreconditionError("H_1 = H_-1 (w0 commutes with w_alpha): no admissible line exists");
  for (const auto& v : direction_battery(w0.datum().rank())) {
    try {
      kappa(lambda0, alpha, w0, v);
      return AffineLine(lambda0, v);
    } catch (const PreconditionError&) {
    }
  }
  throw PreconditionError("no admissible line found in the direction battery");
}

// ---------------------------------------------------------------------------
// Certificates

struct CheckOptions {
  std::optional<Weight> direction;
  FieldType field = FieldType::p_adic;
  std::optional<std::vector<int>> levi;  // L for the Levi-relative variant of A6
};

struct Certificate {
  std::string datum;
  Weight lambda0;
  int alpha = 0;
  Word w0;
  std::optional<AffineLine> line;
  std::map<std::string, Verdict> verdicts;
  std::map<std::string, std::string> reasons;
  std::optional<Rat> kappa1;
  std::vector<Rat> eigenvalues;  // tr-summand, St-summand
  Weight chi0;
  std::vector<int> S;
  std::vector<int> levi;
  std::vector<std::string> summands;
  FieldType field = FieldType::p_adic;
  bool decomposition_holds = false;
  bool socle_length_two = false;
  std::vector<std::string> notes;

  bool operator==(const Certificate&) const = default;

  bool any(Verdict v) const {
    return std::any_of(verdicts.begin(), verdicts.end(), [&](const auto& kv) { return kv.second == v; });
  }
};

inline const std::vector<std::string>& assumption_ids() {
  static const std::vector<std::string> ids{"A1", "A2", "A3", "A4", "A5", "A6", "A7", "A7'"};
  return ids;
}

inline std::vector<std::string> summand_labels_rank_one() { return {"<St_M (x) chi0>", "<tr_M (x) chi0>"}; }

inline Certificate check_assumptions(const Weight& lambda0, int alpha, const WeylElement& w0,
                                     const CheckOptions& opts = {}) {
  const RootDatum& d = w0.datum();
  d.check_weight(lambda0);
  d.check_node(alpha);
  if (lambda0.at(alpha) != 1)
    throw StructuralError("lambda0 = " + to_string(lambda0) + " is not on H_1: <lambda0, alpha_" + std::to_string(alpha) +
                          "^vee> = " + to_string(lambda0.at(alpha)));
  if (w0.is_identity()) throw StructuralError("w0 must be a nontrivial Weyl element");
  const WeylElement s_alpha = WeylElement::simple_reflection(d, alpha);
  const Weight lp = s_alpha.apply(lambda0);  // lambda' = w_alpha lambda0 = lambda0 - alpha
  if (!stabilizes(w0, lp))
    throw StructuralError("w0 = " + to_string(w0) + " does not fix w_alpha lambda0 = " + to_string(lp));

  Certificate c;
  c.datum = d.name();
  c.lambda0 = lambda0;
  c.alpha = alpha;
  c.w0 = w0.word();
  c.field = opts.field;
  c.chi0 = chi0(d, lambda0, alpha);
  c.S = zero_nodes(lp);
  c.summands = summand_labels_rank_one();

  c.verdicts["A1"] = Verdict::holds;
  c.reasons["A1"] = "alpha_" + std::to_string(alpha) + " is a simple root of " + d.name();

  if (stabilizes(s_alpha, lp)) throw ConsistencyError("w_alpha fixes lambda' although <lambda', alpha^vee> = -1");
  c.verdicts["A2"] = Verdict::holds;
  c.reasons["A2"] = "lambda0 on H_1; Stab(lambda') contains w0 != 1; w_alpha not in Stab(lambda')";

  // A3: N(w0, lambda') = Id whenever w0 lies in the parabolic W_J of a set J
  // of simple roots on which lambda' vanishes (Ind from the trivial character
  // of M_J is irreducible and spherical).
  const auto supp = support(w0);
  const bool w0_in_zero_parabolic =
      std::all_of(supp.begin(), supp.end(), [&](int j) { return std::binary_search(c.S.begin(), c.S.end(), j); });
  if (w0_in_zero_parabolic) {
    c.verdicts["A3"] = Verdict::holds_by_sufficient_condition;
    c.reasons["A3"] = "supp(w0) is contained in {beta : <lambda', beta^vee> = 0}";
  } else {
    c.verdicts["A3"] = Verdict::unknown;
    c.reasons["A3"] = "w0 is not in the standard parabolic on which lambda' vanishes";
  }

  const auto h = hyperplanes(lambda0, alpha, w0);
  c.verdicts["A4"] = h.distinct ? Verdict::holds : Verdict::fails;
  c.reasons["A4"] = h.distinct ? "w0 does not commute with w_alpha (H_1 != H_-1)" : "w0 commutes with w_alpha (H_1 = H_-1)";

  try {
    AffineLine line;
    if (opts.direction) {
      line = AffineLine(lambda0, *opts.direction);
    } else {
      line = choose_line(lambda0, alpha, w0);
    }
    const Rat k = kappa(lambda0, alpha, w0, line.direction);
    c.line = line;
    c.kappa1 = k;
    c.verdicts["A5"] = Verdict::holds;
    c.reasons["A5"] = "line direction " + to_string(line.direction) + ", kappa_1 = " + to_string(k);
  } catch (const PreconditionError& e) {
    c.verdicts["A5"] = Verdict::fails;
    c.reasons["A5"] = e.what();
  }

  if (is_antidominant(lp)) {
    c.verdicts["A6"] = Verdict::holds_by_sufficient_condition;
    c.reasons["A6"] = "lambda' is antidominant; Ind tr_M (x) chi0 embeds in Ind lambda'";
  } else {
    c.verdicts["A6"] = Verdict::unknown;
    c.reasons["A6"] = "lambda' is not antidominant";
  }

  std::vector<int> levi;
  if (opts.levi) {
    levi = *opts.levi;
    for (int j : levi) d.check_node(j);
    std::sort(levi.begin(), levi.end());
    levi.erase(std::unique(levi.begin(), levi.end()), levi.end());
    const bool contains =
        std::binary_search(levi.begin(), levi.end(), alpha) &&
        std::all_of(supp.begin(), supp.end(), [&](int j) { return std::binary_search(levi.begin(), levi.end(), j); });
    if (!contains) throw ValidationError("Levi L must contain alpha and the support of w0");
  } else {
    levi = supp;
    levi.push_back(alpha);
    std::sort(levi.begin(), levi.end());
    levi.erase(std::unique(levi.begin(), levi.end()), levi.end());
  }
  c.levi = levi;
  const bool levi_antidominant = std::all_of(levi.begin(), levi.end(), [&](int j) { return lp.at(j) <= 0; });
  c.verdicts["A7'"] = levi_antidominant ? Verdict::holds_by_sufficient_condition : Verdict::unknown;
  c.reasons["A7'"] = levi_antidominant ? "lambda' is antidominant on the Levi L"
                                       : "lambda' is not antidominant on the Levi L";

  bool chi0_antidominant = true;
  for (std::size_t k = 0; k < d.num_positive_roots(); ++k) {
    const auto& beta = d.positive_roots()[k];
    if (beta == d.simple_root(alpha)) continue;
    if (pair(c.chi0, d.positive_coroots()[k]) > 0) {
      chi0_antidominant = false;
      break;
    }
  }
  if (!chi0_antidominant) {
    c.verdicts["A7"] = Verdict::unknown;
    c.reasons["A7"] = "<chi0, beta^vee> > 0 for some positive root beta != alpha";
  } else if (opts.field == FieldType::archimedean_real) {
    c.verdicts["A7"] = Verdict::unknown;
    c.reasons["A7"] = "Steinberg representation of SL2(R) has length 2";
  } else {
    c.verdicts["A7"] = Verdict::holds_by_sufficient_condition;
    c.reasons["A7"] = "<chi0, beta^vee> <= 0 for all beta != alpha and St_M is irreducible: standard module";
  }

  const bool core = ok(c.verdicts["A1"]) && ok(c.verdicts["A2"]) && ok(c.verdicts["A3"]) && ok(c.verdicts["A4"]) &&
                    ok(c.verdicts["A5"]);
  c.decomposition_holds = core && (ok(c.verdicts["A6"]) || ok(c.verdicts["A7'"]));
  c.socle_length_two = c.decomposition_holds && ok(c.verdicts["A6"]) && ok(c.verdicts["A7"]);
  if (c.kappa1) {
    c.eigenvalues = {Rat(1), -*c.kappa1};
    c.notes.push_back("eigenvalue 1 on <tr_M (x) chi0>, -kappa_1 = " + to_string(-*c.kappa1) + " on <St_M (x) chi0>");
    c.notes.push_back("with the reciprocal ratio l2/l1 the St eigenvalue reads " + to_string(Rat(-1) / *c.kappa1));
  }
  return c;
}

inline Certificate check_assumptions(const Weight& lambda0, int alpha, const std::string& w0_word,
                                     const RootDatum& d, const CheckOptions& opts = {}) {
  return check_assumptions(lambda0, alpha, parse_weyl_element(d, w0_word), opts);
}

// ---------------------------------------------------------------------------
// System IV

struct SystemIVSolution {
  int alpha = 0;
  std::vector<int> S;
  std::map<int, Rat> t;
  Weight lambda_prime;
  Weight lambda0;
  bool operator==(const SystemIVSolution&) const = default;
};

inline std::vector<int> normalized_subset(const RootDatum& d, std::vector<int> S) {
  for (int s : S) d.check_node(s);
  std::sort(S.begin(), S.end());
  if (std::adjacent_find(S.begin(), S.end()) != S.end()) throw ValidationError("repeated node in S");
  return S;
}

/// Complement of S and alpha in Delta.
inline std::vector<int> free_nodes(const RootDatum& d, int alpha, const std::vector<int>& S) {
  std::vector<int> out;
  for (int b = 1; b <= d.rank(); ++b)
    if (b != alpha && !std::binary_search(S.begin(), S.end(), b)) out.push_back(b);
  return out;
}

/// lambda' = -omega_alpha - sum_{beta not in S u {alpha}} t_beta omega_beta; lambda0 = w_alpha lambda'.
inline SystemIVSolution system_iv_solve(const RootDatum& d, int alpha, std::vector<int> S,
                                        const std::map<int, Rat>& t = {}, const Rat& t_default = Rat(1)) {
  d.check_node(alpha);
  S = normalized_subset(d, std::move(S));
  if (std::binary_search(S.begin(), S.end(), alpha)) throw ValidationError("S must not contain alpha");
  if (std::none_of(S.begin(), S.end(), [&](int b) { return d.adjacent(alpha, b); }))
    throw ValidationError("S contains no neighbour of alpha_" + std::to_string(alpha));
  const auto free = free_nodes(d, alpha, S);
  for (const auto& [node, value] : t) {
    if (!std::binary_search(free.begin(), free.end(), node))
      throw ValidationError("t given for node " + std::to_string(node) + ", which is alpha or in S");
    if (value <= 0) throw ValidationError("t_" + std::to_string(node) + " must be positive");
  }
  if (t_default <= 0) throw ValidationError("default t must be positive");
  SystemIVSolution sol;
  sol.alpha = alpha;
  sol.S = S;
  sol.lambda_prime = Weight::zero(d.rank());
  sol.lambda_prime.at(alpha) = -1;
  for (int b : free) {
    auto it = t.find(b);
    const Rat tb = it == t.end() ? t_default : it->second;
    sol.t[b] = tb;
    sol.lambda_prime.at(b) = -tb;
  }
  sol.lambda0 = WeylElement::simple_reflection(d, alpha).apply(sol.lambda_prime);
  return sol;
}

/// System IV predicate for a given (alpha, S, lambda').
inline bool system_iv_holds(const RootDatum& d, int alpha, const std::vector<int>& S, const Weight& lp) {
  if (std::none_of(S.begin(), S.end(), [&](int b) { return d.adjacent(alpha, b); })) return false;
  if (lp.at(alpha) != -1) return false;
  for (int b = 1; b <= d.rank(); ++b) {
    if (b == alpha) continue;
    const bool in_S = std::find(S.begin(), S.end(), b) != S.end();
    if (in_S ? lp.at(b) != 0 : lp.at(b) >= 0) return false;
  }
  return true;
}

/// III.5: <lambda', beta^vee> <= -1/2 <alpha, beta^vee> for beta in Phi+ \ {alpha}.
inline bool system_iii5_holds(const RootDatum& d, int alpha, const Weight& lp) {
  const Weight a = simple_root_as_weight(d, alpha);
  for (std::size_t k = 0; k < d.num_positive_roots(); ++k) {
    if (d.positive_roots()[k] == d.simple_root(alpha)) continue;
    const auto& bv = d.positive_coroots()[k];
    if (pair(lp, bv) > Rat(-1, 2) * pair(a, bv)) return false;
  }
  return true;
}

/// System I for (w, lambda).
inline bool system_i_holds(const WeylElement& w, int alpha, const Weight& lambda) {
  const RootDatum& d = w.datum();
  const WeylElement sa = WeylElement::simple_reflection(d, alpha);
  if (commutes(w, sa)) return false;
  if (compose(w, sa).apply(lambda) != sa.apply(lambda)) return false;
  if (lambda.at(alpha) != 1) return false;
  const Weight x = chi0(d, lambda, alpha);
  for (std::size_t k = 0; k < d.num_positive_roots(); ++k) {
    if (d.positive_roots()[k] == d.simple_root(alpha)) continue;
    if (pair(x, d.positive_coroots()[k]) > 0) return false;
  }
  return is_antidominant(sa.apply(lambda));
}

/// System II for (w, lambda').
inline bool system_ii_holds(const WeylElement& w, int alpha, const Weight& lp) {
  const RootDatum& d = w.datum();
  if (commutes(w, WeylElement::simple_reflection(d, alpha))) return false;
  if (!stabilizes(w, lp)) return false;
  if (lp.at(alpha) != -1) return false;
  if (!system_iii5_holds(d, alpha, lp)) return false;
  return is_antidominant(lp);
}

/// Witnesses in Stab(lambda') that do not commute with w_alpha, shortest first.
inline std::vector<WeylElement> stabilizer_noncommuting_witnesses(const RootDatum& d, const Weight& lp, int alpha,
                                                                  std::uint64_t cap = default_enumeration_cap()) {
  const WeylElement sa = WeylElement::simple_reflection(d, alpha);
  std::vector<WeylElement> out;
  for (const auto& w : enumerate_stabilizer(d, lp, cap))
    if (!w.is_identity() && !commutes(w, sa)) out.push_back(reduced(w));
  std::sort(out.begin(), out.end(), [](const WeylElement& a, const WeylElement& b) {
    if (a.word().size() != b.word().size()) return a.word().size() < b.word().size();
    return a.word() < b.word();
  });
  return out;
}

/// Default witness: the reflection in the smallest neighbour of alpha in S.
inline WeylElement default_witness(const RootDatum& d, int alpha, const std::vector<int>& S) {
  for (int b : S)
    if (d.adjacent(alpha, b)) return WeylElement::simple_reflection(d, b);
  throw ValidationError("S contains no neighbour of alpha_" + std::to_string(alpha));
}

inline Certificate certify_system_iv(const RootDatum& d, const SystemIVSolution& sol, const CheckOptions& opts = {}) {
  return check_assumptions(sol.lambda0, sol.alpha, default_witness(d, sol.alpha, sol.S), opts);
}

/// lambda0 = -w_alpha omega_alpha with S = Delta \ {alpha}.
inline Certificate key_example(const RootDatum& d, int alpha, const CheckOptions& opts = {}) {
  d.check_node(alpha);
  if (d.rank() < 2) throw ValidationError("key example needs rank >= 2");
  std::vector<int> S;
  for (int b = 1; b <= d.rank(); ++b)
    if (b != alpha) S.push_back(b);
  const Weight lambda0 = -WeylElement::simple_reflection(d, alpha).apply(fundamental_weight(d, alpha));
  return check_assumptions(lambda0, alpha, default_witness(d, alpha, S), opts);
}

/// All (alpha, S) with S a subset of Delta \ {alpha} containing a neighbour
/// of alpha; S ordered by size, then lexicographically.
inline std::vector<std::pair<int, std::vector<int>>> admissible_configurations(const RootDatum& d) {
  std::vector<std::pair<int, std::vector<int>>> out;
  const int n = d.rank();
  if (n > 24) throw ValidationError("rank too large for subset enumeration");
  for (int alpha = 1; alpha <= n; ++alpha) {
    std::vector<std::vector<int>> subsets;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      if (mask >> (alpha - 1) & 1u) continue;
      std::vector<int> S;
      for (int i = 0; i < n; ++i)
        if (mask >> i & 1u) S.push_back(i + 1);
      if (std::any_of(S.begin(), S.end(), [&](int b) { return d.adjacent(alpha, b); })) subsets.push_back(S);
    }
    std::sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) {
      if (a.size() != b.size()) return a.size() < b.size();
      return a < b;
    });
    for (auto& S : subsets) out.emplace_back(alpha, std::move(S));
  }
  return out;
}

inline std::vector<Certificate> search(const RootDatum& d, const Rat& t_default = Rat(1), const CheckOptions& opts = {},
                                       unsigned threads = 1) {
  const auto configs = admissible_configurations(d);
  return parallel_map(configs.size(), threads, [&](std::size_t i) {
    const auto sol = system_iv_solve(d, configs[i].first, configs[i].second, {}, t_default);
    return certify_system_iv(d, sol, opts);
  });
}

// ---------------------------------------------------------------------------
// System I-IV equivalence suite

struct SystemSuiteReport {
  std::string datum;
  int sampled = 0;
  int guarded = 0;
  int certified = 0;
  int iii5_checked = 0;
  int i_ii_checked = 0;
  int ii_iv_checked = 0;
  std::vector<std::string> violations;
  bool passed() const { return violations.empty(); }
};

namespace detail {

struct SuiteSample {
  bool guarded = false;
  bool certified = false;
  int i_ii = 0;
  int ii_iv = 0;
  std::vector<std::string> violations;
};

inline SuiteSample run_suite_sample(const RootDatum& d, int alpha, const std::vector<int>& S,
                                    const std::map<int, Rat>& t, std::mt19937_64& rng) {
  SuiteSample out;
  const std::string tag = d.name() + " alpha=" + std::to_string(alpha) + " S=" + [&] {
    std::string s = "{";
    for (std::size_t k = 0; k < S.size(); ++k) s += (k ? "," : "") + std::to_string(S[k]);
    return s + "}";
  }();
  SystemIVSolution sol;
  try {
    sol = system_iv_solve(d, alpha, S, t);
  } catch (const ValidationError&) {
    out.guarded = true;
    return out;
  }
  // (a) IV point certifies with a stabilizer witness
  const WeylElement w0 = default_witness(d, alpha, sol.S);
  const auto st = stabilizer(d, sol.lambda_prime);
  if (st.generating_simple_set != sol.S) out.violations.push_back(tag + ": stabilizer generators differ from S");
  const Certificate c = check_assumptions(sol.lambda0, alpha, w0);
  if (!c.decomposition_holds) out.violations.push_back(tag + ": System IV point does not certify");
  out.certified = c.decomposition_holds;
  // (b) III.5 is implied by IV
  if (!system_iii5_holds(d, alpha, sol.lambda_prime)) out.violations.push_back(tag + ": III.5 fails at a IV point");
  if (!system_ii_holds(w0, alpha, sol.lambda_prime)) out.violations.push_back(tag + ": IV point fails System II");
  // (c) perturbed points: System I at lambda agrees with System II at w_alpha lambda,
  // and "System II for some witness" agrees with System IV for S = zero set.
  const WeylElement sa = WeylElement::simple_reflection(d, alpha);
  std::uniform_int_distribution<int> coord(-2, 2), den(1, 3), which(0, 3);
  for (int trial = 0; trial < 6; ++trial) {
    Weight lp = sol.lambda_prime;
    for (int b = 1; b <= d.rank(); ++b) {
      if (b == alpha) continue;
      switch (which(rng)) {
        case 0: lp.at(b) = 0; break;
        case 1: lp.at(b) = Rat(coord(rng), den(rng)); break;
        default: break;
      }
    }
    if (trial == 5) lp.at(alpha) = Rat(coord(rng), den(rng));
    const Weight lambda = sa.apply(lp);
    for (const WeylElement& w : {w0, WeylElement::simple_reflection(d, alpha == 1 ? 2 : 1)}) {
      const bool i = system_i_holds(w, alpha, lambda);
      const bool ii = system_ii_holds(w, alpha, lp);
      if (i != ii) out.violations.push_back(tag + ": System I and II disagree at lambda' = " + to_string(lp));
      ++out.i_ii;
    }
    std::vector<int> zeros;
    for (int b : zero_nodes(lp))
      if (b != alpha) zeros.push_back(b);
    bool some_ii = false;
    if (is_antidominant(lp) && lp.at(alpha) == -1)
      for (const auto& w : stabilizer_noncommuting_witnesses(d, lp, alpha))
        if ((some_ii = system_ii_holds(w, alpha, lp))) break;
    const bool iv = system_iv_holds(d, alpha, zeros, lp);
    if (some_ii != iv) out.violations.push_back(tag + ": System II and IV disagree at lambda' = " + to_string(lp));
    ++out.ii_iv;
  }
  return out;
}

}  // namespace detail

inline SystemSuiteReport system_equivalence_suite(const RootDatum& d, int samples, std::uint64_t seed,
                                                  unsigned threads = 1) {
  SystemSuiteReport report;
  report.datum = d.name();
  const int n = d.rank();
  const auto results = parallel_map(static_cast<std::size_t>(samples), threads, [&](std::size_t i) {
    auto rng = sample_rng(seed, i);
    std::uniform_int_distribution<int> node(1, n), coin(0, 1), num(1, 5), den(1, 4);
    const int alpha = node(rng);
    std::vector<int> S;
    for (int b = 1; b <= n; ++b)
      if (b != alpha && coin(rng)) S.push_back(b);
    std::map<int, Rat> t;
    for (int b = 1; b <= n; ++b)
      if (b != alpha && !std::binary_search(S.begin(), S.end(), b)) t[b] = Rat(num(rng), den(rng));
    return detail::run_suite_sample(d, alpha, S, t, rng);
  });
  for (const auto& r : results) {
    ++report.sampled;
    if (r.guarded) {
      ++report.guarded;
      continue;
    }
    report.certified += r.certified;
    ++report.iii5_checked;
    report.i_ii_checked += r.i_ii;
    report.ii_iv_checked += r.ii_iv;
    report.violations.insert(report.violations.end(), r.violations.begin(), r.violations.end());
  }
  return report;
}

}  // namespace psdecomp
