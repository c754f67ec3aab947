#pragma once

// Scalar bookkeeping for intertwining operators.  The operators themselves are
// never built; what is tracked is the Gindikin-Karpelevich product
//
//     prod_{gamma > 0, w gamma < 0}  zeta(<lambda, gamma^vee>) / zeta(<lambda, gamma^vee> + 1)
//
// through the orders of its factors along an affine line, with zeta(s) having
// a simple pole at s = 0 and no zeros.  Each factor therefore has order -1
// where its exponent is 0 and order +1 where the exponent is -1.

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "psdecomp/errors.hpp"
#include "psdecomp/rational.hpp"
#include "psdecomp/rootsys.hpp"
#include "psdecomp/weyl.hpp"

namespace psdecomp {

/// lambda(t) = base + t * direction.
struct AffineLine {
  Weight base;
  Weight direction;

  AffineLine() = default;
  AffineLine(Weight b, Weight d) : base(std::move(b)), direction(std::move(d)) {
    if (base.size() != direction.size()) throw ValidationError("line base and direction differ in dimension");
    if (direction.is_zero()) throw ValidationError("line direction must be nonzero");
  }

  Weight at(const Rat& t) const { return base + t * direction; }
  bool operator==(const AffineLine&) const = default;
};

struct ExponentEntry {
  RootVec root;
  Rat value;  // <lambda0, gamma^vee>
  Rat slope;  // <v, gamma^vee>
  bool operator==(const ExponentEntry&) const = default;
};

struct ExponentProfile {
  std::vector<ExponentEntry> entries;
  bool operator==(const ExponentProfile&) const = default;
};

/// Order at s of zeta(s) / zeta(s + 1).
inline int zeta_ratio_order(const Rat& s) {
  if (s == 0) return -1;
  if (s == -1) return 1;
  return 0;
}

inline ExponentProfile gk_exponents(const WeylElement& w, const AffineLine& line) {
  const RootDatum& d = w.datum();
  d.check_weight(line.base);
  ExponentProfile p;
  for (const auto& g : inversion_set(w)) {
    const RootVec gv = d.coroot(g);
    p.entries.push_back({g, pair(line.base, gv), pair(line.direction, gv)});
  }
  return p;
}

/// Order at t = 0 of one factor along the line; throws when the factor is
/// identically singular (the line lies inside the critical hyperplane).
inline int factor_order(const ExponentEntry& e) {
  if (e.slope == 0) {
    if (e.value == 0 || e.value == -1)
      throw PreconditionError("degenerate factor at root " + to_string(e.root) + ": <lambda, gamma^vee> is constantly " +
                              to_string(e.value) + " along the line");
    return 0;
  }
  return zeta_ratio_order(e.value);
}

/// Order of vanishing at t = 0 of the spherical eigenvalue of M(w, lambda0 + t v).
inline int c_function_order_along(const WeylElement& w, const AffineLine& line) {
  int order = 0;
  for (const auto& e : gk_exponents(w, line).entries) order += factor_order(e);
  return order;
}

/// Same for the reciprocal product, which is how the normalized operator
/// rescales the unnormalized one on spherical vectors.
inline int normalized_order_along(const WeylElement& w, const AffineLine& line) {
  return -c_function_order_along(w, line);
}

/// Line through w lambda0 with direction w v.
inline AffineLine transform_line(const WeylElement& w, const AffineLine& line) {
  return AffineLine(w.apply(line.base), w.apply(line.direction));
}

enum class CriticalClass { regular, reducible_regular, simple_pole };

inline const char* to_string(CriticalClass c) {
  switch (c) {
    case CriticalClass::reducible_regular: return "reducible_regular";
    case CriticalClass::simple_pole: return "simple_pole";
    case CriticalClass::regular: break;
  }
  return "regular";
}

/// Rank-one classification of each inversion root of w at lambda0: exponent
/// -1 is the holomorphic reducible point (kernel St), +1 the simple pole.
inline std::vector<std::pair<RootVec, CriticalClass>> normalized_critical_roots(const WeylElement& w,
                                                                                const Weight& lambda0) {
  const RootDatum& d = w.datum();
  d.check_weight(lambda0);
  std::vector<std::pair<RootVec, CriticalClass>> out;
  for (const auto& g : inversion_set(w)) {
    const Rat v = pair(lambda0, d.coroot(g));
    CriticalClass c = CriticalClass::regular;
    if (v == -1) c = CriticalClass::reducible_regular;
    else if (v == 1) c = CriticalClass::simple_pole;
    out.emplace_back(g, c);
  }
  return out;
}

/// Fixed rational weights used by the cocycle check: rho, +-omega_i and a
/// few non-integral points.
inline std::vector<Weight> cocycle_battery(const RootDatum& d) {
  const int n = d.rank();
  std::vector<Weight> out{rho(d), Weight::zero(n)};
  for (int i = 1; i <= n; ++i) {
    out.push_back(fundamental_weight(d, i));
    out.push_back(-fundamental_weight(d, i));
  }
  Weight a = Weight::zero(n), b = Weight::zero(n), c = Weight::zero(n);
  for (int i = 0; i < n; ++i) {
    a.coords[static_cast<std::size_t>(i)] = Rat(i % 2 == 0 ? i + 1 : -(i + 1), i + 2);
    b.coords[static_cast<std::size_t>(i)] = Rat(-1 - (i % 3), 1);
    c.coords[static_cast<std::size_t>(i)] = Rat(2 * i - 3, 3);
  }
  out.push_back(a);
  out.push_back(b);
  out.push_back(c);
  return out;
}

namespace detail {

inline std::vector<Rat> exponent_values(const WeylElement& w, const Weight& lambda) {
  std::vector<Rat> v;
  const RootDatum& d = w.datum();
  for (const auto& g : inversion_set(w)) v.push_back(pair(lambda, d.coroot(g)));
  return v;
}

}  // namespace detail

/// Cocycle identity at the level of GK exponent multisets: for l(ww') =
/// l(w) + l(w'), exponents of (ww', lambda) are those of (w, w' lambda)
/// together with those of (w', lambda).
inline bool cocycle_multiset_check(const WeylElement& w, const WeylElement& wp,
                                   const std::vector<Weight>& battery) {
  w.check_same_datum(wp);
  const WeylElement wwp = compose(w, wp);
  if (length(wwp) != length(w) + length(wp))
    throw PreconditionError("lengths do not add: l(" + to_string(w) + " " + to_string(wp) + ") != l(" + to_string(w) +
                            ") + l(" + to_string(wp) + ")");
  for (const auto& lambda : battery) {
    auto lhs = detail::exponent_values(wwp, lambda);
    auto rhs = detail::exponent_values(w, wp.apply(lambda));
    const auto tail = detail::exponent_values(wp, lambda);
    rhs.insert(rhs.end(), tail.begin(), tail.end());
    std::sort(lhs.begin(), lhs.end());
    std::sort(rhs.begin(), rhs.end());
    if (lhs != rhs) return false;
  }
  return true;
}

inline bool cocycle_multiset_check(const WeylElement& w, const WeylElement& wp) {
  return cocycle_multiset_check(w, wp, cocycle_battery(w.datum()));
}

}  // namespace psdecomp
