#include <gtest/gtest.h>

#include <cmath>

#include "dyndeg/instances.hpp"
#include "dyndeg/serialize.hpp"

namespace {

using namespace dyndeg;

std::string schema_path(std::string_view text) {
  try {
    parse_instance(text);
  } catch (const SchemaError& e) {
    return e.path();
  }
  return "<no error>";
}

TEST(Serialize, CmEllipticCanonicalForm) {
  const std::string s = serialize_instance(catalog_entry("cm_elliptic(1,1)")->instance);
  const std::string expected =
      R"j({"format_version":1,"label":"cm_elliptic(1,1)","assert":true,"factors":[)j"
      R"j({"albert_type":"IV","e0":1,"d":1,"n":1,"g_A":1,"blocks":[[[[1.0,1.0]]]]}]})j";
  EXPECT_EQ(s, expected);
}

TEST(Serialize, CatalogRoundTrip) {
  for (const auto& e : catalog()) {
    const std::string s = serialize_instance(e.instance);
    EXPECT_EQ(serialize_instance(parse_instance(s)), s) << e.key;
  }
}

TEST(Serialize, RandomRoundTripIsBitExact) {
  for (auto t : {AlbertType::I, AlbertType::II, AlbertType::III, AlbertType::IV}) {
    GeneratorConfig cfg;
    cfg.albert_type = t;
    cfg.distribution = EntryDistribution::Normal;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      cfg.seed = seed;
      const EndInstance inst = random_instance(cfg);
      const EndInstance back = parse_instance(serialize_instance(inst));
      ASSERT_EQ(back.factors.size(), 1u);
      const auto& a = inst.factors[0].blocks;
      const auto& b = back.factors[0].blocks;
      ASSERT_EQ(a.size(), b.size());
      for (std::size_t k = 0; k < a.size(); ++k) EXPECT_TRUE(a[k] == b[k]);
    }
  }
}

TEST(Serialize, ExtremeDoublesSurvive) {
  AlbertFactor f = cm_elliptic_factor(0, 0);
  std::get<ComplexMatrix>(f.blocks[0])(0, 0) = Complex(0.1 + 0.2, -5e-324);
  EndInstance inst{"x", {f}, false};
  const auto back = parse_instance(serialize_instance(inst));
  EXPECT_EQ(std::get<ComplexMatrix>(back.factors[0].blocks[0])(0, 0), Complex(0.1 + 0.2, -5e-324));
}

TEST(Serialize, OptionalFields) {
  AlbertFactor f = cm_elliptic_factor(1, 1);
  f.translation_flag = true;
  EndInstance inst{"t", {f}, false};
  const std::string s = serialize_instance(inst);
  EXPECT_NE(s.find("\"translation_flag\":true"), std::string::npos);
  EXPECT_TRUE(parse_instance(s).factors[0].translation_flag);
  const auto rm = parse_instance(serialize_instance(catalog_entry("rm_surface(2,1,2)")->instance));
  ASSERT_TRUE(rm.factors[0].rational_form.has_value());
  EXPECT_EQ((*rm.factors[0].rational_form)(0, 1), 2);
}

TEST(Parse, AssertDefaultsToFalse) {
  const auto inst = parse_instance(
      R"({"format_version":1,"label":"x","factors":[{"albert_type":"I","e0":1,"d":1,"n":1,"g_A":1,"blocks":[[[2]]]}]})");
  EXPECT_FALSE(inst.assert_theorem);
  EXPECT_EQ(std::get<RealMatrix>(inst.factors[0].blocks[0])(0, 0), 2.0);
}

TEST(Parse, SchemaErrorPaths) {
  EXPECT_EQ(schema_path(R"({"format_version":1,"label":"x","factors":[{"e0":1,"d":1,"n":1,"g_A":1,"blocks":[]}]})"),
            "/factors/0/albert_type");
  EXPECT_EQ(schema_path(R"({"format_version":1,"label":"x","factors":[{"albert_type":"V","e0":1,"d":1,"n":1,"g_A":1,"blocks":[]}]})"),
            "/factors/0/albert_type");
  EXPECT_EQ(schema_path(R"({"format_version":1,"factors":[]})"), "/label");
  EXPECT_EQ(schema_path(R"({"format_version":1,"label":"x","factors":[]})"), "/factors");
  EXPECT_EQ(schema_path(R"({"format_version":1,"label":"x","factors":[{"albert_type":"IV","e0":0,"d":1,"n":1,"g_A":1,"blocks":[]}]})"),
            "/factors/0/e0");
  EXPECT_EQ(schema_path(R"({"format_version":1,"label":"x","factors":[{"albert_type":"IV","e0":1,"d":1,"n":1,"g_A":1,"blocks":[[[1.0]]]}]})"),
            "/factors/0/blocks/0/0/0");
  EXPECT_EQ(schema_path(R"({"format_version":1,"label":"x","factors":[{"albert_type":"III","e0":1,"d":2,"n":1,"g_A":1,"blocks":[[[[1,2,3]]]]}]})"),
            "/factors/0/blocks/0/0/0");
  EXPECT_EQ(schema_path(R"({"format_version":1,"label":"x","factors":[{"albert_type":"I","e0":1,"d":1,"n":2,"g_A":1,"blocks":[[[1,2],[3]]]}]})"),
            "/factors/0/blocks/0/1");
  EXPECT_EQ(schema_path(R"({"format_version":1,"label":"x","factors":[{"albert_type":"I","e0":1,"d":1,"n":1,"g_A":1,"blocks":[[["a"]]]}]})"),
            "/factors/0/blocks/0/0/0");
  EXPECT_EQ(schema_path(R"({"label":"x","factors":[]})"), "/format_version");
  EXPECT_EQ(schema_path(R"({"format_version":1,"label":"x","factors":[{"albert_type":"I","e0":1,"d":1,"n":1,"g_A":1,"blocks":[[[1]]],"rational_form":[[1.5]]}]})"),
            "/factors/0/rational_form/0/0");
}

TEST(Parse, MalformedJson) {
  try {
    parse_instance("{\"format_version\": 1, ");
    FAIL();
  } catch (const SchemaError& e) {
    EXPECT_EQ(e.code(), ErrorCode::SchemaError);
    EXPECT_NE(std::string(e.what()).find("malformed"), std::string::npos);
  }
  EXPECT_THROW(parse_instance("[]"), SchemaError);
}

TEST(Parse, UnknownVersion) {
  try {
    parse_instance(R"({"format_version":2,"label":"x","factors":[]})");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::VersionError);
  }
}

TEST(Parse, BatchDocuments) {
  std::vector<EndInstance> all;
  for (const auto& e : catalog()) all.push_back(e.instance);
  const auto back = parse_document(serialize_batch(all));
  ASSERT_EQ(back.size(), all.size());
  for (std::size_t k = 0; k < all.size(); ++k) EXPECT_EQ(serialize_instance(back[k]), serialize_instance(all[k]));
  EXPECT_EQ(parse_document(serialize_instance(all[0])).size(), 1u);
  try {
    parse_document(R"({"format_version":1,"instances":[{"label":"x"}]})");
    FAIL();
  } catch (const SchemaError& e) {
    EXPECT_EQ(e.path(), "/instances/0/factors");
  }
}

}  // namespace
