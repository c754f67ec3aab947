#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "psdecomp/psdecomp.hpp"

using namespace psdecomp;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Json, RootDatumRoundTrip) {
  for (const char* t : {"A1", "B3", "C4", "D5", "E8", "F4", "G2"}) {
    const auto d = build_root_datum(t);
    EXPECT_EQ(root_datum_from_json(Json::parse(to_json(d).dump())), d) << t;
  }
}

TEST(Json, RootDatumRejectsTamperedTables) {
  auto j = to_json(build_root_datum("B2"));
  j["cartan"][0][1] = -2;
  EXPECT_THROW(root_datum_from_json(j), ValidationError);
}

TEST(Json, CertificateRoundTrip) {
  const auto d4 = build_root_datum("D4");
  const auto e6 = build_root_datum("E6");
  CheckOptions real;
  real.field = FieldType::archimedean_real;
  const std::vector<Certificate> certs{
      check_assumptions(Weight{-1, 1, -1, -1}, 2, parse_weyl_element(d4, "w134")),
      check_assumptions(Weight{-1, 1, -1, -1}, 2, parse_weyl_element(d4, "w134"), real),
      check_assumptions(Weight{-1, -1, -1, 1, -1, -1}, 4, parse_weyl_element(e6, "w2")),
      check_assumptions(Weight{1, -1, 0}, 1, parse_weyl_element(build_root_datum("A3"), "w3")),
  };
  for (const auto& c : certs) {
    const auto j = to_json(c);
    EXPECT_EQ(j.at("schema"), kSchemaVersion);
    EXPECT_EQ(certificate_from_json(Json::parse(j.dump(2))), c);
  }
}

TEST(Json, CertificateMatchesGolden) {
  const auto d4 = build_root_datum("D4");
  const auto c = check_assumptions(Weight{-1, 1, -1, -1}, 2, parse_weyl_element(d4, "w134"));
  const auto golden = Json::parse(read_file(std::string(PSDECOMP_GOLDEN_DIR) + "/d4_certificate.json"));
  EXPECT_EQ(to_json(c), golden);
  EXPECT_EQ(golden.at("kappa1"), "1/2");
  EXPECT_EQ(golden.at("chi0"), Json::parse(R"(["-1/2","0","-1/2","-1/2"])"));
}

TEST(Json, ExponentProfileRoundTrip) {
  const auto b3 = build_root_datum("B3");
  const auto w = longest_element(b3);
  const AffineLine line(Weight{Rat(1, 2), -1, 0}, Weight{1, 2, 3});
  const auto p = gk_exponents(w, line);
  const auto j = to_json(p, w, line.base);
  EXPECT_EQ(j.size(), p.entries.size());
  EXPECT_EQ(exponent_profile_from_json(Json::parse(j.dump())), p);
}

TEST(Json, MultiConfigRoundTrip) {
  const auto e6 = build_root_datum("E6");
  for (const auto& c : enumerate_pairs(e6, MultiMode::graph_conditions))
    EXPECT_EQ(multi_config_from_json(Json::parse(to_json(c).dump())), c);
}

TEST(Json, ReportsRoundTrip) {
  const auto a3 = build_root_datum("A3");
  const auto lemmas = lemma_suite(a3);
  const auto lr = lemma_report_from_json(Json::parse(to_json(lemmas).dump()));
  EXPECT_EQ(lr.datum, lemmas.datum);
  EXPECT_EQ(lr.exhaustive, lemmas.exhaustive);
  ASSERT_EQ(lr.lemmas.size(), lemmas.lemmas.size());
  for (std::size_t k = 0; k < lr.lemmas.size(); ++k) {
    EXPECT_EQ(lr.lemmas[k].cases, lemmas.lemmas[k].cases);
    EXPECT_EQ(lr.lemmas[k].counterexamples, lemmas.lemmas[k].counterexamples);
  }
  const auto suite = system_equivalence_suite(a3, 40, 5);
  const auto sr = system_suite_report_from_json(Json::parse(to_json(suite).dump()));
  EXPECT_EQ(sr.sampled, suite.sampled);
  EXPECT_EQ(sr.certified, suite.certified);
  EXPECT_EQ(sr.violations, suite.violations);
}

TEST(Json, RationalsAreStrings) {
  const auto a2 = build_root_datum("A2");
  const auto j = to_json(check_assumptions(Weight{1, -1}, 1, parse_weyl_element(a2, "w2")));
  EXPECT_TRUE(j.at("lambda0")[0].is_string());
  EXPECT_TRUE(j.at("kappa1").is_string());
  EXPECT_EQ(j.at("chi0")[1], "-1/2");
}
