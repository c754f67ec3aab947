#include <gtest/gtest.h>

#include <chrono>
#include <random>
#include <set>

#include "psdecomp/decomp.hpp"

using namespace psdecomp;

namespace {

Weight W(std::initializer_list<Rat> c) { return Weight(c); }

WeylElement elt(const RootDatum& d, const std::string& w) { return parse_weyl_element(d, w); }

std::set<std::vector<Int>> matrix_set(const std::vector<WeylElement>& ws) {
  std::set<std::vector<Int>> out;
  for (const auto& w : ws) out.insert(w.weight_action().data());
  return out;
}

std::set<std::vector<Int>> matrix_set(const RootDatum& d, const std::vector<std::string>& words) {
  std::vector<WeylElement> ws;
  for (const auto& w : words) ws.push_back(elt(d, w));
  return matrix_set(ws);
}

std::vector<RootDatum> small_types() {
  std::vector<RootDatum> out;
  for (const char* t : {"A2", "A3", "B2", "D4", "G2"}) out.push_back(build_root_datum(t));
  return out;
}

struct Triple {
  Weight lambda0;
  int alpha;
  WeylElement w0;
};

// Valid (lambda0, alpha, w0): a System IV point with random positive t and a
// random non-commuting stabilizer witness.
Triple random_triple(const RootDatum& d, std::mt19937_64& rng) {
  const int n = d.rank();
  std::uniform_int_distribution<int> node(1, n), coin(0, 1), num(1, 5), den(1, 3);
  for (;;) {
    const int alpha = node(rng);
    std::vector<int> S;
    for (int b = 1; b <= n; ++b)
      if (b != alpha && coin(rng)) S.push_back(b);
    if (std::none_of(S.begin(), S.end(), [&](int b) { return d.adjacent(alpha, b); })) continue;
    std::map<int, Rat> t;
    for (int b : free_nodes(d, alpha, S)) t[b] = Rat(num(rng), den(rng));
    const auto sol = system_iv_solve(d, alpha, S, t);
    const auto ws = stabilizer_noncommuting_witnesses(d, sol.lambda_prime, alpha);
    std::uniform_int_distribution<std::size_t> pick(0, ws.size() - 1);
    return {sol.lambda0, alpha, ws[pick(rng)]};
  }
}

Weight random_direction(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
  for (;;) {
    Weight v = Weight::zero(n);
    for (auto& c : v.coords) c = Rat(num(rng), den(rng));
    if (!v.is_zero()) return v;
  }
}

}  // namespace

TEST(Chi0, Examples) {
  const auto d4 = build_root_datum("D4");
  EXPECT_EQ(chi0(d4, W({-1, 1, -1, -1}), 2), W({Rat(-1, 2), 0, Rat(-1, 2), Rat(-1, 2)}));
  const auto a2 = build_root_datum("A2");
  EXPECT_EQ(chi0(a2, W({1, -1}), 1), W({0, Rat(-1, 2)}));
}

TEST(Chi0, VanishesOnAlphaOnH1AndIsATranslate) {
  std::mt19937_64 rng(7);
  for (const auto& d : small_types())
    for (int alpha = 1; alpha <= d.rank(); ++alpha) {
      const Weight shift = chi0(d, Weight::zero(d.rank()), alpha);
      for (int k = 0; k < 20; ++k) {
        Weight l = random_direction(d.rank(), rng);
        l.at(alpha) = 1;
        EXPECT_EQ(chi0(d, l, alpha).at(alpha), Rat(0));
        EXPECT_EQ(chi0(d, l, alpha) - l, shift);
      }
    }
}

TEST(Hyperplanes, D4TripleDistinct) {
  const auto d4 = build_root_datum("D4");
  const Weight l0 = W({-1, 1, -1, -1});
  const auto h = hyperplanes(l0, 2, elt(d4, "w134"));
  EXPECT_EQ(h.l1(l0), Rat(0));
  EXPECT_EQ(h.l2(l0), Rat(0));
  EXPECT_TRUE(h.distinct);
  EXPECT_EQ(WeylElement::simple_reflection(d4, 2).apply(l0), W({0, -1, 0, 0}));
}

TEST(Hyperplanes, CommutingWitnessGivesEqualHyperplanes) {
  // A3, alpha_1, lambda' = (-1,0,0): w3 fixes lambda' and commutes with w1
  const auto a3 = build_root_datum("A3");
  const auto h = hyperplanes(W({1, -1, 0}), 1, elt(a3, "w3"));
  EXPECT_FALSE(h.distinct);
}

TEST(Hyperplanes, DistinctIffNotCommutingExhaustiveA3) {
  const auto a3 = build_root_datum("A3");
  for (const auto& [alpha, S] : admissible_configurations(a3)) {
    const auto sol = system_iv_solve(a3, alpha, S);
    for (const auto& w : enumerate_stabilizer(a3, sol.lambda_prime)) {
      if (w.is_identity()) continue;
      const auto h = hyperplanes(sol.lambda0, alpha, w);
      EXPECT_EQ(h.distinct, !commutes(w, WeylElement::simple_reflection(a3, alpha)));
    }
  }
}

TEST(Hyperplanes, OffH1IsStructuralError) {
  const auto a2 = build_root_datum("A2");
  try {
    hyperplanes(W({0, 1}), 1, elt(a2, "w2"));
    FAIL();
  } catch (const StructuralError& e) {
    EXPECT_NE(std::string(e.what()).find("not on H_1"), std::string::npos);
  }
}

TEST(Kappa, D4Example) {
  const auto d4 = build_root_datum("D4");
  const Weight l0 = W({-1, 1, -1, -1});
  const auto w0 = elt(d4, "w134");
  const Weight v = fundamental_weight(d4, 2);
  EXPECT_EQ(kappa(l0, 2, w0, v), Rat(1, 2));
  EXPECT_EQ(kappa_oracle(l0, 2, w0, v, {Rat(1), Rat(-1), Rat(1, 3)}), Rat(1, 2));
  EXPECT_EQ(kappa(l0, 2, w0, Rat(7) * v), Rat(1, 2));
}

TEST(Kappa, Guards) {
  const auto d4 = build_root_datum("D4");
  const Weight l0 = W({-1, 1, -1, -1});
  EXPECT_THROW(kappa(l0, 2, elt(d4, "w134"), W({1, 0, 0, 0})), PreconditionError);
  EXPECT_THROW(kappa(l0, 2, elt(d4, "w134"), Weight::zero(4)), ValidationError);
}

TEST(Kappa, CommutingWitnessHasConstantRatioMinusOne) {
  // for w0 commuting with w_alpha, l2 = -l1 identically, so the ratio is the
  // excluded value -1 at every sample
  const auto a3 = build_root_datum("A3");
  try {
    kappa_oracle(W({1, -1, 0}), 1, elt(a3, "w3"), W({1, 0, 0}));
    FAIL();
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("supplementary"), std::string::npos);
  }
}

TEST(Kappa, MatchesOracleOnRandomTriples) {
  const auto types = small_types();
  int valid = 0, draws = 0;
  std::mt19937_64 rng(kDefaultSeed);
  while (valid < 500) {
    ASSERT_LT(++draws, 5000);
    const auto& d = types[static_cast<std::size_t>(draws) % types.size()];
    const auto tr = random_triple(d, rng);
    const Weight v = random_direction(d.rank(), rng);
    std::optional<Rat> k, o;
    try {
      k = kappa(tr.lambda0, tr.alpha, tr.w0, v);
    } catch (const PreconditionError&) {
    }
    try {
      o = kappa_oracle(tr.lambda0, tr.alpha, tr.w0, v);
    } catch (const PreconditionError&) {
    }
    ASSERT_EQ(k.has_value(), o.has_value()) << d.name() << " " << tr.lambda0 << " v=" << v;
    if (!k) continue;
    ASSERT_EQ(*k, *o) << d.name() << " " << tr.lambda0 << " v=" << v;
    EXPECT_EQ(kappa(tr.lambda0, tr.alpha, tr.w0, Rat(-3, 5) * v), *k);
    ++valid;
  }
}

TEST(ChooseLine, D4PicksOmega2) {
  const auto d4 = build_root_datum("D4");
  const auto line = choose_line(W({-1, 1, -1, -1}), 2, elt(d4, "w134"));
  EXPECT_EQ(line.direction, fundamental_weight(d4, 2));
}

TEST(ChooseLine, A2AndCommutingGuard) {
  const auto a2 = build_root_datum("A2");
  const auto line = choose_line(W({1, -1}), 1, elt(a2, "w2"));
  const Rat k = kappa(W({1, -1}), 1, elt(a2, "w2"), line.direction);
  EXPECT_NE(k, Rat(0));
  EXPECT_NE(k, Rat(-1));
  const auto a3 = build_root_datum("A3");
  EXPECT_THROW(choose_line(W({1, -1, 0}), 1, elt(a3, "w3")), PreconditionError);
}

TEST(CheckAssumptions, D4Certifies) {
  const auto d4 = build_root_datum("D4");
  const auto c = check_assumptions(W({-1, 1, -1, -1}), 2, elt(d4, "w134"));
  for (const auto& id : assumption_ids()) EXPECT_TRUE(ok(c.verdicts.at(id))) << id;
  EXPECT_TRUE(c.decomposition_holds);
  EXPECT_TRUE(c.socle_length_two);
  EXPECT_EQ(c.kappa1, Rat(1, 2));
  EXPECT_EQ(c.eigenvalues, (std::vector<Rat>{1, Rat(-1, 2)}));
  EXPECT_EQ(c.chi0, W({Rat(-1, 2), 0, Rat(-1, 2), Rat(-1, 2)}));
  EXPECT_EQ(c.S, (std::vector<int>{1, 3, 4}));
  EXPECT_EQ(c.summands, (std::vector<std::string>{"<St_M (x) chi0>", "<tr_M (x) chi0>"}));
  // the reciprocal convention is reported, not treated as a failure
  EXPECT_TRUE(std::any_of(c.notes.begin(), c.notes.end(),
                          [](const std::string& n) { return n.find("reads -2") != std::string::npos; }));
}

TEST(CheckAssumptions, G2Alpha2) {
  const auto g2 = build_root_datum("G2");
  EXPECT_TRUE(check_assumptions(W({-3, 1}), 2, elt(g2, "w1")).decomposition_holds);
}

TEST(CheckAssumptions, E6Example) {
  const auto e6 = build_root_datum("E6");
  const Weight lp = W({-1, 0, 0, -1, 0, -1});
  EXPECT_EQ(WeylElement::simple_reflection(e6, 4).apply(lp), W({-1, -1, -1, 1, -1, -1}));
  EXPECT_TRUE(check_assumptions(W({-1, -1, -1, 1, -1, -1}), 4, elt(e6, "w2")).decomposition_holds);
}

TEST(CheckAssumptions, RealFieldLeavesA7Unknown) {
  const auto d4 = build_root_datum("D4");
  CheckOptions o;
  o.field = FieldType::archimedean_real;
  const auto c = check_assumptions(W({-1, 1, -1, -1}), 2, elt(d4, "w134"), o);
  EXPECT_EQ(c.verdicts.at("A7"), Verdict::unknown);
  EXPECT_TRUE(c.decomposition_holds);
  EXPECT_FALSE(c.socle_length_two);
}

TEST(CheckAssumptions, CommutingWitnessFailsA4) {
  const auto a3 = build_root_datum("A3");
  const auto c = check_assumptions(W({1, -1, 0}), 1, elt(a3, "w3"));
  EXPECT_EQ(c.verdicts.at("A4"), Verdict::fails);
  EXPECT_FALSE(c.decomposition_holds);
}

TEST(CheckAssumptions, StructuralErrors) {
  const auto a2 = build_root_datum("A2");
  EXPECT_THROW(check_assumptions(W({2, -1}), 1, elt(a2, "w2")), StructuralError);
  EXPECT_THROW(check_assumptions(W({1, -1}), 1, WeylElement::identity(a2)), StructuralError);
  EXPECT_THROW(check_assumptions(W({1, 0}), 1, elt(a2, "w2")), StructuralError);
}

TEST(CheckAssumptions, ContragredientPairing) {
  const auto a3 = build_root_datum("A3");
  for (const auto& c : search(a3)) {
    const auto sa = WeylElement::simple_reflection(a3, c.alpha);
    EXPECT_EQ(pair(-sa.apply(c.lambda0), a3.simple_coroot(c.alpha)), Rat(1));
  }
}

TEST(SystemIV, A3Rows) {
  const auto a3 = build_root_datum("A3");
  EXPECT_EQ(system_iv_solve(a3, 1, {2}, {{3, Rat(5, 2)}}).lambda0, W({1, -1, Rat(-5, 2)}));
  EXPECT_EQ(system_iv_solve(a3, 2, {1, 3}).lambda0, W({-1, 1, -1}));
}

TEST(SystemIV, E6Example) {
  const auto e6 = build_root_datum("E6");
  const auto sol = system_iv_solve(e6, 4, {2, 3, 5});
  EXPECT_EQ(sol.lambda_prime, W({-1, 0, 0, -1, 0, -1}));
  EXPECT_EQ(sol.lambda0, W({-1, -1, -1, 1, -1, -1}));
}

TEST(SystemIV, FullSReducesToKeyExample) {
  for (const char* t : {"A4", "B3", "D5", "F4"}) {
    const auto d = build_root_datum(t);
    for (int alpha = 1; alpha <= d.rank(); ++alpha) {
      std::vector<int> S;
      for (int b = 1; b <= d.rank(); ++b)
        if (b != alpha) S.push_back(b);
      EXPECT_EQ(system_iv_solve(d, alpha, S).lambda0, key_example(d, alpha).lambda0);
    }
  }
}

TEST(SystemIV, Guards) {
  const auto a3 = build_root_datum("A3");
  EXPECT_THROW(system_iv_solve(a3, 1, {3}), ValidationError);
  EXPECT_THROW(system_iv_solve(a3, 1, {2}, {{3, Rat(0)}}), ValidationError);
  EXPECT_THROW(system_iv_solve(a3, 1, {1, 2}), ValidationError);
}

// Words read left to right as products of simple reflections: "w23" = s2 s3,
// acting on a weight by s3 first.  Sets are compared as matrices.
TEST(Witnesses, A3Sets) {
  const auto a3 = build_root_datum("A3");
  auto wit = [&](int alpha, std::vector<int> S) {
    return matrix_set(stabilizer_noncommuting_witnesses(a3, system_iv_solve(a3, alpha, S).lambda_prime, alpha));
  };
  EXPECT_EQ(wit(1, {2}), matrix_set(a3, {"w2"}));
  EXPECT_EQ(wit(1, {2, 3}), matrix_set(a3, {"w2", "w23", "w32", "w232"}));
  EXPECT_EQ(wit(2, {1}), matrix_set(a3, {"w1"}));
  EXPECT_EQ(wit(2, {3}), matrix_set(a3, {"w3"}));
  EXPECT_EQ(wit(2, {1, 3}), matrix_set(a3, {"w1", "w3", "w13"}));
  EXPECT_TRUE(stabilizer_noncommuting_witnesses(a3, W({-1, -2, -3}), 1).empty());
}

TEST(Search, Counts) {
  EXPECT_EQ(search(build_root_datum("A2")).size(), 2u);
  EXPECT_EQ(search(build_root_datum("G2")).size(), 2u);
  // alpha_1: {2},{2,3}; alpha_2: {1},{3},{1,3}; alpha_3: {2},{1,2}
  const auto a3 = search(build_root_datum("A3"));
  EXPECT_EQ(a3.size(), 7u);
  for (const auto& c : a3) EXPECT_TRUE(c.decomposition_holds) << to_string(c.lambda0);
}

TEST(Search, ThreadCountDoesNotChangeResults) {
  const auto d = build_root_datum("D5");
  EXPECT_EQ(search(d, Rat(1), {}, 1), search(d, Rat(1), {}, 4));
}

TEST(KeyExample, RankTwoValues) {
  EXPECT_EQ(key_example(build_root_datum("A2"), 1).lambda0, W({1, -1}));
  EXPECT_EQ(key_example(build_root_datum("C2"), 2).lambda0, W({-2, 1}));
  EXPECT_EQ(key_example(build_root_datum("G2"), 1).lambda0, W({1, -1}));
  EXPECT_EQ(key_example(build_root_datum("G2"), 2).lambda0, W({-3, 1}));
  EXPECT_THROW(key_example(build_root_datum("A1"), 1), ValidationError);
}

TEST(KeyExample, SweepRankTwoToSix) {
  const auto start = std::chrono::steady_clock::now();
  int count = 0;
  for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G})
    for (int n = 2; n <= 6; ++n) {
      if (!is_valid_type(f, n)) continue;
      const auto d = build_root_datum(f, n);
      for (int alpha = 1; alpha <= n; ++alpha) {
        EXPECT_TRUE(key_example(d, alpha).decomposition_holds) << d.name() << " alpha=" << alpha;
        ++count;
      }
    }
  EXPECT_GT(count, 60);
  EXPECT_LT(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(), 10.0);
}

TEST(SystemSuite, PassesOnSmallTypes) {
  for (const char* t : {"A3", "B3", "D4", "G2"}) {
    const auto r = system_equivalence_suite(build_root_datum(t), 200, kDefaultSeed);
    EXPECT_TRUE(r.passed()) << t << ": " << (r.violations.empty() ? "" : r.violations.front());
    EXPECT_EQ(r.sampled, 200);
    EXPECT_GT(r.certified, 0) << t;
    EXPECT_EQ(r.certified + r.guarded, r.sampled);
  }
}

TEST(SystemSuite, DeterministicAcrossThreads) {
  const auto d = build_root_datum("B3");
  const auto a = system_equivalence_suite(d, 60, 11, 1);
  const auto b = system_equivalence_suite(d, 60, 11, 3);
  EXPECT_EQ(a.certified, b.certified);
  EXPECT_EQ(a.guarded, b.guarded);
  EXPECT_EQ(a.violations, b.violations);
}

TEST(Parsing, VerdictAndField) {
  for (Verdict v : {Verdict::holds, Verdict::fails, Verdict::holds_by_sufficient_condition, Verdict::unknown})
    EXPECT_EQ(parse_verdict(to_string(v)), v);
  EXPECT_EQ(parse_field("real"), FieldType::archimedean_real);
  EXPECT_EQ(parse_field("p-adic"), FieldType::p_adic);
  EXPECT_THROW(parse_field("quaternionic"), ValidationError);
}
