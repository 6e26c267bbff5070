#include <gtest/gtest.h>

#include "hodgerees/document.hpp"
#include "hodgerees/report.hpp"
#include "support.hpp"

using namespace hodgerees;
using namespace hodgerees::testing;

namespace {

std::string data(const std::string& name) { return std::string(HODGEREES_TEST_DATA) + "/" + name; }

TEST(Document, TateZero) {
  const MhsDocument d = parse_mhs_file(data("tate0.json"));
  ASSERT_TRUE(d.exact);
  EXPECT_EQ(*d.exact, tate<Q>(0));
  EXPECT_EQ(alpha(*d.exact), 0);
}

TEST(Document, ExtensionExample) {
  const MhsDocument d = parse_mhs_file(data("h_ci.json"));
  ASSERT_TRUE(d.exact);
  EXPECT_EQ(*d.exact, h_c(Q::i()));
  EXPECT_EQ(alpha(*d.exact), 1);
}

TEST(Document, FloatBackend) {
  const MhsDocument d = parse_mhs_file(data("h_ci_float.json"));
  ASSERT_TRUE(d.approx);
  EXPECT_EQ(d.field, Field::complex_f64);
  EXPECT_EQ(d.tolerance, 1e-10);
  EXPECT_EQ(alpha(*d.approx), 1);
}

TEST(Document, ComplexWeightBasis) {
  try {
    parse_mhs_file(data("complex_weight.json"));
    FAIL() << "accepted a complex weight basis";
  } catch (const InvalidStructure& e) {
    EXPECT_NE(std::string(e.what()).find("weight filtration not real"), std::string::npos);
  }
}

TEST(Document, Errors) {
  EXPECT_THROW(parse_mhs_file(data("short_row.json")), DimensionMismatch);
  EXPECT_THROW(parse_mhs_file(data("malformed.json")), ParseError);
  EXPECT_THROW(parse_mhs_file(data("missing.json")), ParseError);
  EXPECT_THROW(parse_mhs_document(R"({"field": "reals", "dim": 1})"), ParseError);
  try {
    parse_mhs_document(R"({"field": "gaussian_rational", "dim": 1,
      "weight_filtration": [{"weight": 0, "basis": [["1/0"]]}], "hodge_filtration": []})");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("weight_filtration[0].basis[0][0]"), std::string::npos) << e.what();
  }
  // F^1 = span(1, i) on a weight-2 piece is not pure
  EXPECT_THROW(parse_mhs_document(R"({"field": "gaussian_rational", "dim": 2,
      "weight_filtration": [{"weight": 2, "basis": [["1","0"],["0","1"]]}],
      "hodge_filtration": [{"level": 1, "basis": [["1","i"]]}]})"),
               InvalidStructure);
}

TEST(Document, RoundTripProperty) {
  Rng rng(47);
  for (int k = 0; k < 60; ++k) {
    const H h = random_mhs(rng);
    const MhsDocument d = parse_mhs_document(to_json(h));
    ASSERT_TRUE(d.exact);
    EXPECT_EQ(*d.exact, h);
    const HodgeNumbers a = hodge_numbers(h), b = hodge_numbers(*d.exact);
    EXPECT_EQ(a.h, b.h);
    EXPECT_EQ(a.t, b.t);
    EXPECT_EQ(a.f, b.f);
    EXPECT_EQ(alpha(*d.exact), alpha(h));
  }
}

TEST(Document, FloatRoundTrip) {
  const MixedHodgeStructure<Complex> h = h_c<Complex>(Complex(0.25, -1.5));
  const MhsDocument d = parse_mhs_document(to_json(h, 1e-9));
  ASSERT_TRUE(d.approx);
  EXPECT_EQ(hodge_numbers(*d.approx).t, hodge_numbers(h).t);
  EXPECT_EQ(alpha(*d.approx), 1);
}

TEST(Report, PureAndExtension) {
  const std::string pure = mhs_report(*parse_mhs_file(data("pure.json")).exact);
  EXPECT_NE(pure.find("R-split: true, alpha: 0"), std::string::npos) << pure;
  EXPECT_NE(pure.find("c2 == alpha: true"), std::string::npos);
  const std::string ext = mhs_report(h_c(Q::i()));
  EXPECT_NE(ext.find("R-split: false, alpha: 1"), std::string::npos) << ext;
  EXPECT_EQ(ext, mhs_report(h_c(Q::i())));
}

TEST(Report, PureStructureHasEqualTables) {
  const H h = *parse_mhs_file(data("pure.json")).exact;
  const HodgeNumbers n = hodge_numbers(h);
  EXPECT_EQ(n.h, n.t);
  const std::string r = mhs_report(h);
  const std::string h_head = "h^{p,q}:", t_head = "t^{p,q}:";
  const auto h_at = r.find(h_head), t_at = r.find(t_head), f_at = r.find("f^{p,q}:");
  ASSERT_TRUE(h_at != std::string::npos && t_at != std::string::npos && f_at != std::string::npos);
  EXPECT_EQ(r.substr(h_at + h_head.size(), t_at - h_at - h_head.size()),
            r.substr(t_at + t_head.size(), f_at - t_at - t_head.size()));
}

}  // namespace
