#pragma once

// Property suites for four facts about W acting on Phi:
//   A.1  w commutes with w_alpha  =>  w(alpha) = +-alpha and w(alpha^vee) = +-alpha^vee
//   A.2  w commutes with w_alpha  =>  <w w_alpha lambda, alpha^vee> = +-<lambda, alpha^vee>
//   A.3  {<w_alpha w w_alpha lambda, alpha^vee> = 1} = {<lambda, alpha^vee> = 1}  =>  w commutes with w_alpha
//   A.4  lambda' antidominant, <lambda', alpha^vee> = -1  =>  <lambda', beta^vee> <= -1/2 <alpha, beta^vee>, beta > 0, beta != alpha

#include <algorithm>
#include <array>
#include <random>
#include <string>
#include <vector>

#include "psdecomp/decomp.hpp"
#include "psdecomp/parallel.hpp"
#include "psdecomp/rootsys.hpp"
#include "psdecomp/weyl.hpp"

namespace psdecomp {

/// Deliberate corruption of one check, used to prove the harness can fail.
enum class LemmaFault { none, a1, a2, a3, a4 };

struct LemmaOptions {
  int samples = 1000;
  std::uint64_t seed = kDefaultSeed;
  unsigned threads = 1;
  std::uint64_t exhaustive_limit = 10000;
  LemmaFault fault = LemmaFault::none;
};

struct LemmaResult {
  std::string name;
  long cases = 0;
  long counterexamples = 0;
  std::vector<std::string> examples;  // first few counterexamples
  bool passed() const { return counterexamples == 0 && cases > 0; }
};

struct LemmaReport {
  std::string datum;
  bool exhaustive = false;
  std::uint64_t seed = 0;
  std::vector<LemmaResult> lemmas;
  bool passed() const {
    return std::all_of(lemmas.begin(), lemmas.end(), [](const LemmaResult& r) { return r.passed(); });
  }
};

namespace detail {

struct LemmaTally {
  std::array<long, 4> cases{};
  std::array<long, 4> bad{};
  std::array<std::vector<std::string>, 4> examples;

  void record(int k, bool good, const std::string& what) {
    ++cases[static_cast<std::size_t>(k)];
    if (good) return;
    ++bad[static_cast<std::size_t>(k)];
    if (examples[static_cast<std::size_t>(k)].size() < 3) examples[static_cast<std::size_t>(k)].push_back(what);
  }
  void merge(const LemmaTally& o) {
    for (std::size_t k = 0; k < 4; ++k) {
      cases[k] += o.cases[k];
      bad[k] += o.bad[k];
      for (const auto& e : o.examples[k])
        if (examples[k].size() < 3) examples[k].push_back(e);
    }
  }
};

inline Weight random_weight(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
  Weight w = Weight::zero(n);
  for (auto& c : w.coords) c = Rat(num(rng), den(rng));
  return w;
}

/// A.1-A.3 for one (w, alpha), with `probes` random weights for A.2.
inline void check_w_alpha(const WeylElement& w, int alpha, int probes, std::mt19937_64& rng, LemmaFault fault,
                          LemmaTally& t) {
  const RootDatum& d = w.datum();
  const int n = d.rank();
  const WeylElement sa = WeylElement::simple_reflection(d, alpha);
  const bool comm = commutes(w, sa);
  const std::string tag = d.name() + " w=" + to_string(w) + " alpha=" + std::to_string(alpha);
  if (comm) {
    const RootVec a = d.simple_root(alpha), av = d.simple_coroot(alpha);
    RootVec wa = w.apply(a), wav = w.apply(av);
    if (fault == LemmaFault::a1) wa.coords[0] += 1;
    t.record(0, (wa == a || wa == -a) && (wav == av || wav == -av), tag + ": w(alpha) = " + to_string(wa));

    const WeylElement wsa = compose(w, sa);
    const RootVec av_check = d.simple_coroot(alpha);
    for (int p = 0; p < probes; ++p) {
      const Weight lambda = random_weight(n, rng);
      Rat lhs = pair(wsa.apply(lambda), av_check);
      if (fault == LemmaFault::a2) lhs += 1;
      const Rat rhs = lambda.at(alpha);
      t.record(1, lhs == rhs || lhs == -rhs, tag + ": lambda = " + to_string(lambda));
    }
  }
  // A.3: both hyperplanes have constant term -1 after moving 1 across, so
  // they coincide exactly when the linear parts are equal.
  const WeylElement conj = compose(sa, compose(w, sa));
  AffineForm lhs{detail::pullback_of_alpha_coordinate(conj, alpha), Rat(-1)};
  AffineForm rhs{fundamental_weight(d, alpha), Rat(-1)};
  const bool equal = same_hyperplane(lhs, rhs);
  const bool claim = fault == LemmaFault::a3 ? !comm : comm;
  t.record(2, !equal || claim, tag + ": hyperplanes equal but w does not commute with w_alpha");
}

/// A.4 on one sampled antidominant lambda' with <lambda', alpha^vee> = -1.
inline void check_a4(const RootDatum& d, std::mt19937_64& rng, LemmaFault fault, LemmaTally& t) {
  const int n = d.rank();
  std::uniform_int_distribution<int> node(1, n), kind(0, 2), num(1, 7), den(1, 3);
  const int alpha = node(rng);
  Weight lp = Weight::zero(n);
  for (int b = 1; b <= n; ++b) {
    if (b == alpha) {
      lp.at(b) = -1;
      continue;
    }
    lp.at(b) = kind(rng) == 0 ? Rat(0) : -Rat(num(rng), den(rng));
  }
  const Weight a = simple_root_as_weight(d, alpha);
  bool good = true;
  for (std::size_t k = 0; k < d.num_positive_roots() && good; ++k) {
    if (d.positive_roots()[k] == d.simple_root(alpha)) continue;
    const auto& bv = d.positive_coroots()[k];
    Rat bound = Rat(-1, 2) * pair(a, bv);
    if (fault == LemmaFault::a4) bound -= 1;
    if (pair(lp, bv) > bound) good = false;
  }
  t.record(3, good, d.name() + " alpha=" + std::to_string(alpha) + " lambda' = " + to_string(lp));
}

inline Word random_word(const RootDatum& d, std::mt19937_64& rng) {
  const int max_len = 2 * static_cast<int>(d.num_positive_roots());
  std::uniform_int_distribution<int> len(0, max_len), node(1, d.rank());
  Word w(static_cast<std::size_t>(len(rng)));
  for (auto& x : w) x = node(rng);
  return w;
}

}  // namespace detail

inline const char* lemma_name(int k) {
  static const char* names[] = {"A.1", "A.2", "A.3", "A.4"};
  return names[k];
}

/// Exhaustive over W (when |W| <= exhaustive_limit) for A.1-A.3, otherwise
/// random words; A.4 always on `samples` random antidominant weights.
/// Results depend only on the seed, never on the thread count.
inline LemmaReport lemma_suite(const RootDatum& d, const LemmaOptions& opt = {}) {
  LemmaReport report;
  report.datum = d.name();
  report.seed = opt.seed;
  const int n = d.rank();
  const std::uint64_t order = weyl_group_order(d);
  report.exhaustive = order <= opt.exhaustive_limit;
  constexpr int kProbes = 4;

  std::vector<detail::LemmaTally> tallies;
  if (report.exhaustive) {
    const auto all = enumerate_weyl(d, opt.exhaustive_limit);
    tallies = parallel_map(all.size(), opt.threads, [&](std::size_t i) {
      detail::LemmaTally t;
      auto rng = sample_rng(opt.seed, i);
      for (int a = 1; a <= n; ++a) detail::check_w_alpha(all[i], a, kProbes, rng, opt.fault, t);
      return t;
    });
  } else {
    tallies = parallel_map(static_cast<std::size_t>(opt.samples), opt.threads, [&](std::size_t i) {
      detail::LemmaTally t;
      auto rng = sample_rng(opt.seed, i);
      const WeylElement w = WeylElement::from_word(d, detail::random_word(d, rng));
      for (int a = 1; a <= n; ++a) detail::check_w_alpha(w, a, kProbes, rng, opt.fault, t);
      // random words rarely commute with a given w_alpha; add one drawn from
      // the subgroup generated by w_alpha and the nodes not adjacent to alpha
      std::uniform_int_distribution<int> node(1, n);
      const int alpha = node(rng);
      std::vector<int> gens{alpha};
      for (int b = 1; b <= n; ++b)
        if (b != alpha && !d.adjacent(alpha, b)) gens.push_back(b);
      std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
      Word word(detail::random_word(d, rng).size());
      for (auto& x : word) x = gens[pick(rng)];
      detail::check_w_alpha(WeylElement::from_word(d, word), alpha, kProbes, rng, opt.fault, t);
      return t;
    });
  }
  const auto a4 = parallel_map(static_cast<std::size_t>(opt.samples), opt.threads, [&](std::size_t i) {
    detail::LemmaTally t;
    auto rng = sample_rng(opt.seed ^ 0xa4a4a4a4ULL, i);
    detail::check_a4(d, rng, opt.fault, t);
    return t;
  });
  detail::LemmaTally total;
  for (const auto& t : tallies) total.merge(t);
  for (const auto& t : a4) total.merge(t);
  for (int k = 0; k < 4; ++k) {
    const auto ku = static_cast<std::size_t>(k);
    report.lemmas.push_back({lemma_name(k), total.cases[ku], total.bad[ku], total.examples[ku]});
  }
  return report;
}

}  // namespace psdecomp
