#include <gtest/gtest.h>

#include <filesystem>

#include "snl/constructions/builders.hpp"
#include "snl/io/json_io.hpp"
#include "snl/io/render.hpp"

using namespace snl;

namespace {

void expect_same(const StateSet& a, const StateSet& b) {
  EXPECT_EQ(a.dims, b.dims);
  EXPECT_EQ(a.construction, b.construction);
  EXPECT_EQ(a.params, b.params);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    ASSERT_EQ(a.psis[i].terms().size(), b.psis[i].terms().size());
    for (std::size_t t = 0; t < a.psis[i].terms().size(); ++t) {
      EXPECT_EQ(a.psis[i].terms()[t].index, b.psis[i].terms()[t].index);
      EXPECT_EQ(a.psis[i].terms()[t].amplitude, b.psis[i].terms()[t].amplitude);
    }
    EXPECT_EQ(a.psis[i].dense(), b.psis[i].dense());
  }
  ASSERT_EQ(a.alphas.size(), b.alphas.size());
  for (std::size_t j = 0; j < a.alphas.size(); ++j) EXPECT_EQ(a.alphas[j].tag, b.alphas[j].tag);
}

}  // namespace

TEST(Json, ScalarRoundTrip) {
  for (const ExactScalar& v : {ExactScalar(), ExactScalar::one(), ExactScalar(Rational(3, 7), 6, 12, 5),
                               ExactScalar(Rational(-1, 2), 2)}) {
    EXPECT_EQ(scalar_from_json(to_json(v)), v);
  }
  Json bad = to_json(ExactScalar::one());
  bad["q"] = "0";
  EXPECT_THROW(scalar_from_json(bad), ValidationError);
}

TEST(Json, StateSetRoundTripIsExact) {
  auto dir = std::filesystem::temp_directory_path() / "snl_test_io";
  std::filesystem::create_directories(dir);
  for (const StateSet& s : {build_theorem1(3), build_theorem2(2, 3, 4), build_example1(),
                            build_theorem4(2, 3, 3, 4)}) {
    auto path = dir / "set.json";
    save_stateset(s, path);
    StateSet back = load_stateset(path);
    expect_same(s, back);
    EXPECT_EQ(to_json(back), to_json(s));
  }
  std::filesystem::remove_all(dir);
}

TEST(Json, RejectsUnknownVersionAndSchema) {
  Json j = to_json(build_theorem1(2));
  j["version"] = kSchemaVersion + 1;
  EXPECT_THROW(stateset_from_json(j), ValidationError);
  j["version"] = kSchemaVersion;
  j["schema"] = kReportSchema;
  EXPECT_THROW(stateset_from_json(j), ValidationError);
}

TEST(Json, RejectsTamperedPsi) {
  Json j = to_json(build_theorem1(2));
  Json& amp = j["psis"][1][0][1];
  amp["phase_power"] = amp["phase_power"].get<int>() + 1;
  EXPECT_THROW(stateset_from_json(j), ValidationError);
}

TEST(Json, RejectsMalformedKets) {
  Dims dims({2, 2});
  EXPECT_THROW(ket_from_json(Json::parse(R"([["00", {"p":"1","q":"2","r":1,"phase_order":1,"phase_power":0}]])"), dims),
               ValidationError);
  EXPECT_THROW(ket_from_json(Json::parse(R"([["03", {"p":"1","q":"1","r":1,"phase_order":1,"phase_power":0}]])"), dims),
               ValidationError);
  EXPECT_THROW(ket_from_json(Json::parse(R"({"00": 1})"), dims), ValidationError);
}

TEST(Json, IdentityDocument) {
  StateSet s;
  s.dims = Dims({2, 2, 2});
  s.psis = {Ket::basis(s.dims, BasisLabel{{0, 0, 0}}), Ket::basis(s.dims, BasisLabel{{1, 1, 1}})};
  Json j = to_json(s);
  StateSet back = stateset_from_json(j);
  EXPECT_EQ(back.mixing, Mixing::Identity);
  expect_same(s, back);
  j["alphas"] = to_json(build_theorem1(2))["alphas"];
  EXPECT_THROW(stateset_from_json(j), ValidationError);
}

TEST(Json, ReportsSerializeNonFinite) {
  StrongestReport r = verify_strongest(build_theorem1(2));
  Json j = to_json(r);
  EXPECT_EQ(j["schema"], kReportSchema);
  EXPECT_EQ(j["overall"], "Trivial");
  TrivialityVerdict v;
  v.identity_overlap = std::nan("");
  v.spectral_gap = std::numeric_limits<double>::infinity();
  Json k = to_json(v);
  EXPECT_TRUE(k["identity_overlap"].is_null());
  EXPECT_TRUE(k["spectral_gap"].is_null());
}

TEST(Render, GridMatchesPublishedCell) {
  StateSet s = build_theorem1(3);
  std::string g = grid_csv(s, MeasuredSet::complement_of(0, s.dims));
  // alpha_4 occupies cells (0, 02) and (1, 10)
  EXPECT_NE(g.find("kept,00,01,02,10,11,12,20,21,22\n"), std::string::npos);
  EXPECT_NE(g.find("\n0,0,2,4,3,"), std::string::npos);
  EXPECT_NE(g.find("\n1,1,5,8,4,"), std::string::npos);
  std::string text = render_grid(s, MeasuredSet::complement_of(0, s.dims));
  EXPECT_FALSE(text.empty());
}
