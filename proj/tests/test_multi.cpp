#include <gtest/gtest.h>

#include <random>
#include <set>

#include "psdecomp/multi.hpp"

using namespace psdecomp;

namespace {

WeylElement elt(const RootDatum& d, const std::string& w) { return parse_weyl_element(d, w); }

bool has_pair(const std::vector<std::pair<int, int>>& v, int a, int b) {
  return std::find(v.begin(), v.end(), std::make_pair(a, b)) != v.end();
}

}  // namespace

TEST(UElement, Examples) {
  const auto a5 = build_root_datum("A5");
  EXPECT_TRUE(equals(u_element(1, elt(a5, "w2")), elt(a5, "w121")));
  // w3 commutes with w1, so conjugation leaves it alone
  EXPECT_TRUE(equals(u_element(1, elt(a5, "w3")), elt(a5, "w3")));
  const auto d4 = build_root_datum("D4");
  const auto u = u_element(2, elt(d4, "w134"));
  EXPECT_TRUE(compose(u, u).is_identity());
  EXPECT_FALSE(u.is_identity());
  EXPECT_THROW(u_element(1, WeylElement::identity(a5)), ValidationError);
}

TEST(UElement, InvolutionsStayInvolutions) {
  const auto d = build_root_datum("D5");
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> node(1, 5), len(1, 12);
  int involutions = 0;
  for (int i = 0; i < 400; ++i) {
    Word w(static_cast<std::size_t>(len(rng)));
    for (auto& x : w) x = node(rng);
    const auto w0 = WeylElement::from_word(d, w);
    if (w0.is_identity() || !compose(w0, w0).is_identity()) continue;
    ++involutions;
    const auto u = u_element(node(rng), w0);
    EXPECT_TRUE(compose(u, u).is_identity()) << to_string(w0);
  }
  EXPECT_GT(involutions, 10);
}

TEST(CommutingCheck, Examples) {
  const auto a5 = build_root_datum("A5");
  EXPECT_TRUE(commuting_check({{1, elt(a5, "w2")}, {5, elt(a5, "w4")}}));
  // w1 w2 w1 = w2 w1 w2, so overlapping supports alone do not break commutation
  EXPECT_TRUE(commuting_check({{1, elt(a5, "w2")}, {2, elt(a5, "w1")}}));
  // transpositions (1 3) and (3 5) in S6
  EXPECT_FALSE(commuting_check({{1, elt(a5, "w2")}, {3, elt(a5, "w4")}}));
  EXPECT_THROW(commuting_check({{1, elt(a5, "w2")}, {1, elt(a5, "w3")}}), ValidationError);
  EXPECT_THROW(commuting_check({{1, elt(a5, "w2")}}), ValidationError);
}

TEST(CommutingCheck, SeparatedPathPiecesCommute) {
  // pieces {a} u S_a and {b} u S_b on A_n with a gap of at least one node
  for (int n = 5; n <= 8; ++n) {
    const auto d = build_root_datum(Family::A, n);
    for (int lo = 1; lo <= n; ++lo)
      for (int hi = lo + 1; hi <= n; ++hi)
        for (int lo2 = hi + 2; lo2 <= n; ++lo2)
          for (int hi2 = lo2 + 1; hi2 <= n; ++hi2) {
            // alpha at the left end of each interval, S the rest of it
            Word w1, w2;
            for (int k = lo + 1; k <= hi; ++k) w1.push_back(k);
            for (int k = lo2 + 1; k <= hi2; ++k) w2.push_back(k);
            EXPECT_TRUE(commuting_check(
                {{lo, WeylElement::from_word(d, w1)}, {lo2, WeylElement::from_word(d, w2)}}))
                << n << " " << lo << "-" << hi << " " << lo2 << "-" << hi2;
          }
  }
}

TEST(SummandLabels, Counts) {
  EXPECT_EQ(summand_labels(0).size(), 1u);
  EXPECT_EQ(summand_labels(0)[0].text, "<chi0>");
  const auto one = summand_labels(std::vector<int>{3});
  std::vector<std::string> texts;
  for (const auto& l : one) texts.push_back(l.text);
  EXPECT_EQ(texts, summand_labels_rank_one());
  const auto two = summand_labels(2);
  ASSERT_EQ(two.size(), 4u);
  std::set<std::vector<std::string>> factors;
  for (const auto& l : two) factors.insert(l.factors);
  EXPECT_EQ(factors, (std::set<std::vector<std::string>>{
                         {"St_1", "St_2"}, {"tr_1", "St_2"}, {"St_1", "tr_2"}, {"tr_1", "tr_2"}}));
  for (int k = 0; k <= 6; ++k) {
    const auto ls = summand_labels(k);
    EXPECT_EQ(ls.size(), std::size_t{1} << k);
    std::set<std::string> distinct;
    for (const auto& l : ls) distinct.insert(l.text);
    EXPECT_EQ(distinct.size(), ls.size());
  }
}

TEST(MultiChi0, SubtractsEachRho) {
  const auto a5 = build_root_datum("A5");
  const Weight l0{1, -1, -1, -1, 1};
  EXPECT_EQ(multi_chi0(a5, l0, {1, 5}), chi0(a5, chi0(a5, l0, 1), 5));
}

TEST(CommonLambda0, A5Pair) {
  const auto a5 = build_root_datum("A5");
  const auto l0 = common_lambda0(a5, {{1, {2}}, {5, {4}}});
  ASSERT_TRUE(l0);
  EXPECT_EQ(*l0, (Weight{1, -1, -1, -1, 1}));
  // alpha_2 pinned to 1 by one entry and to C[2][1] = -1 by the other
  EXPECT_FALSE(common_lambda0(a5, {{1, {2}}, {2, {3}}}));
}

TEST(EnumeratePairs, A5Graph) {
  const auto configs = enumerate_pairs(build_root_datum("A5"), MultiMode::graph_conditions);
  EXPECT_EQ(vertex_pairs_of(configs), (std::vector<std::pair<int, int>>{{1, 4}, {1, 5}, {2, 5}}));
  for (const auto& c : configs) {
    EXPECT_TRUE(c.heuristic);
    EXPECT_TRUE(c.commuting);
    EXPECT_TRUE(c.certified);
  }
}

TEST(EnumeratePairs, A5DirectContainsTheThreePairs) {
  const auto a5 = build_root_datum("A5");
  const auto configs = enumerate_pairs(a5, MultiMode::direct_commutation);
  const auto pairs = vertex_pairs_of(configs);
  EXPECT_TRUE(has_pair(pairs, 1, 4));
  EXPECT_TRUE(has_pair(pairs, 1, 5));
  EXPECT_TRUE(has_pair(pairs, 2, 5));
  for (const auto& c : configs) {
    EXPECT_FALSE(c.heuristic);
    ASSERT_TRUE(c.lambda0);
    std::vector<std::pair<int, WeylElement>> us;
    for (const auto& e : c.entries) {
      const auto w0 = WeylElement::from_word(a5, e.w0);
      EXPECT_TRUE(check_assumptions(*c.lambda0, e.alpha, w0).decomposition_holds);
      us.emplace_back(e.alpha, w0);
    }
    EXPECT_TRUE(commuting_check(us));
  }
}

TEST(EnumeratePairs, A5DirectPairTwoFourIsGenuine) {
  // {2,4} with S = ({1},{5}) passes every direct check: u = w121 and w454
  // commute and lambda0 certifies for both roots through the Levi variant
  const auto a5 = build_root_datum("A5");
  const auto c = make_multi_config(a5, {{2, {1}}, {4, {5}}});
  EXPECT_TRUE(c.commuting);
  ASSERT_TRUE(c.lambda0);
  EXPECT_EQ(*c.lambda0, (Weight{-1, 1, -2, 1, -1}));
  EXPECT_TRUE(c.certified);
  EXPECT_EQ(c.entries[0].u, (Word{1, 2, 1}));
  EXPECT_EQ(c.entries[1].u, (Word{4, 5, 4}));
}

TEST(EnumeratePairs, E6ContainsListedPairs) {
  const auto e6 = build_root_datum("E6");
  for (MultiMode m : {MultiMode::graph_conditions, MultiMode::direct_commutation}) {
    const auto pairs = vertex_pairs_of(enumerate_pairs(e6, m));
    EXPECT_TRUE(has_pair(pairs, 1, 5)) << to_string(m);
    EXPECT_TRUE(has_pair(pairs, 1, 6)) << to_string(m);
    EXPECT_TRUE(has_pair(pairs, 3, 6)) << to_string(m);
  }
}

TEST(EnumeratePairs, Guards) {
  EXPECT_THROW(enumerate_pairs(build_root_datum("A4"), MultiMode::graph_conditions), ValidationError);
  EXPECT_NO_THROW(enumerate_pairs(build_root_datum("A4"), MultiMode::direct_commutation));
  EXPECT_THROW(parse_multi_mode("sideways"), ValidationError);
  EXPECT_EQ(parse_multi_mode("graph"), MultiMode::graph_conditions);
}

TEST(EnumeratePairs, DeterministicAcrossThreads) {
  const auto d = build_root_datum("D6");
  EXPECT_EQ(enumerate_pairs(d, MultiMode::direct_commutation, 1),
            enumerate_pairs(d, MultiMode::direct_commutation, 4));
}

TEST(Ball, Radius) {
  const auto a5 = build_root_datum("A5");
  EXPECT_EQ(ball(a5, 3, 1), (std::vector<int>{2, 3, 4}));
  EXPECT_EQ(ball(a5, 1, 2), (std::vector<int>{1, 2, 3}));
}
