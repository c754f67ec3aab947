#pragma once

// Text tables of key examples and System IV configurations.

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "psdecomp/decomp.hpp"
#include "psdecomp/rootsys.hpp"
#include "psdecomp/weyl.hpp"

namespace psdecomp {

/// lambda0(t) for a System IV configuration with every free t_beta = t:
/// lambda0 = (alpha - omega_alpha) - t * sum_{beta free} omega_beta.
struct SymbolicWeight {
  std::vector<Int> constant;
  std::vector<Int> t_coeff;
};

inline SymbolicWeight symbolic_lambda0(const RootDatum& d, int alpha, const std::vector<int>& S) {
  SymbolicWeight w;
  const Weight a = simple_root_as_weight(d, alpha);
  for (int b = 1; b <= d.rank(); ++b) {
    w.constant.push_back(static_cast<Int>(a.at(b).numerator()) - (b == alpha ? 1 : 0));
    const bool free = b != alpha && std::find(S.begin(), S.end(), b) == S.end();
    w.t_coeff.push_back(free ? -1 : 0);
  }
  return w;
}

inline std::string to_string(const SymbolicWeight& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.constant.size(); ++i) {
    if (i) s += ",";
    const Int c = w.constant[i], k = w.t_coeff[i];
    std::string term;
    if (k != 0) {
      term = k == 1 ? "t" : k == -1 ? "-t" : std::to_string(k) + "t";
      if (c > 0) term += "+" + std::to_string(c);
      if (c < 0) term += std::to_string(c);
    } else {
      term = std::to_string(c);
    }
    s += term;
  }
  return s + ")";
}

inline std::string node_set(const std::vector<int>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

namespace detail {

inline std::string pad(std::string s, std::size_t width) {
  // pad by display columns: the box-drawing glyphs are multi-byte
  std::size_t cols = 0;
  for (unsigned char c : s)
    if ((c & 0xC0) != 0x80) ++cols;
  if (cols < width) s.append(width - cols, ' ');
  return s;
}

inline std::string render_rows(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size(), 0);
  auto cols = [](const std::string& s) {
    std::size_t n = 0;
    for (unsigned char c : s)
      if ((c & 0xC0) != 0x80) ++n;
    return n;
  };
  for (std::size_t k = 0; k < header.size(); ++k) width[k] = cols(header[k]);
  for (const auto& r : rows)
    for (std::size_t k = 0; k < r.size(); ++k) width[k] = std::max(width[k], cols(r[k]));
  std::string out;
  auto line = [&](const std::vector<std::string>& r) {
    std::string l;
    for (std::size_t k = 0; k < r.size(); ++k) l += k + 1 == r.size() ? r[k] : pad(r[k], width[k] + 2);
    out += l + "\n";
  };
  line(header);
  for (const auto& r : rows) line(r);
  return out;
}

inline std::string witness_list(const RootDatum& d, const Weight& lp, int alpha, std::size_t limit = 8) {
  try {
    const auto ws = stabilizer_noncommuting_witnesses(d, lp, alpha);
    std::string s;
    for (std::size_t i = 0; i < ws.size() && i < limit; ++i) s += (i ? ", " : "") + to_string(ws[i]);
    if (ws.size() > limit) s += ", ... (" + std::to_string(ws.size()) + " total)";
    return s;
  } catch (const CapExceeded& e) {
    return "(stabilizer of order " + std::to_string(e.order()) + " not enumerated)";
  }
}

}  // namespace detail

/// Rank-two key examples lambda0 = -w_alpha omega_alpha.  The B2=C2 row is
/// computed in the C2 datum.
inline std::string rank_two_table() {
  struct Row {
    std::string label;
    std::string type;
  };
  const std::vector<Row> types{{"A2", "A2"}, {"B2=C2", "C2"}, {"G2", "G2"}};
  std::vector<std::vector<std::string>> rows;
  for (const auto& t : types) {
    const RootDatum d = build_root_datum(t.type);
    for (int alpha = 1; alpha <= 2; ++alpha) {
      const auto c = key_example(d, alpha);
      std::vector<int> S{3 - alpha};
      rows.push_back({t.label, std::to_string(alpha), inline_marks(d, marks_for(alpha, S)), to_string(c.lambda0),
                      c.decomposition_holds ? "yes" : "no"});
    }
  }
  return "lambda0 = -w_alpha omega_alpha in rank two\n" +
         detail::render_rows({"type", "alpha", "marks", "lambda0", "certified"}, rows);
}

/// One row per admissible (alpha, S): marks, witnesses in Stab(lambda') not
/// commuting with w_alpha (at t = 1), and lambda0(t).
inline std::string search_table(const RootDatum& d, const std::optional<std::vector<int>>& alphas = std::nullopt,
                                const Rat& t_default = Rat(1), unsigned threads = 1) {
  const auto configs = admissible_configurations(d);
  const auto certs = search(d, t_default, {}, threads);
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < configs.size(); ++i) {
    const auto& [alpha, S] = configs[i];
    if (alphas && std::find(alphas->begin(), alphas->end(), alpha) == alphas->end()) continue;
    const auto sol = system_iv_solve(d, alpha, S, {}, t_default);
    rows.push_back({std::to_string(alpha), inline_marks(d, marks_for(alpha, S)), node_set(S),
                    detail::witness_list(d, sol.lambda_prime, alpha), to_string(symbolic_lambda0(d, alpha, S)),
                    certs[i].decomposition_holds ? "yes" : "no"});
  }
  return "System IV configurations for " + d.name() + " (t > 0; witnesses at t = " + to_string(t_default) + ")\n" +
         detail::render_rows({"alpha", "marks", "S", "w", "lambda0", "certified"}, rows);
}

/// The rank-two table followed by the SL4 table (alpha_1 and alpha_2; alpha_3 mirrors alpha_1).
inline std::string reference_tables() {
  const RootDatum a3 = build_root_datum("A3");
  return rank_two_table() + "\n" + search_table(a3, std::vector<int>{1, 2});
}

}  // namespace psdecomp
