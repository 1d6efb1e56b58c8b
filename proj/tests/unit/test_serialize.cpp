#include <gtest/gtest.h>

#include <random>

#include "hopfkit/error.hpp"
#include "hopfkit/serialize.hpp"

using namespace hopfkit;

namespace {

std::string schema_error(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SchemaViolation);
    return e.what();
  }
  ADD_FAILURE() << "no error";
  return {};
}

}  // namespace

TEST(Serialize, PresentationRoundTripIsByteExact) {
  for (const auto& [name, ring] : {std::pair{"C2", Ring::make(5)}, {"S3", Ring::make(7, 2)}, {"dual:Q8", Ring::make(3)},
                                   {"C3", Ring::make(2, 1, 2)}, {"double:C2", Ring::make(5)}}) {
    const HopfPresentation h = builtin_presentation(name, ring);
    const std::string text = dump_json(presentation_to_json(h));
    const HopfPresentation back = presentation_from_json(parse_json(text));
    EXPECT_EQ(back, h) << name;
    EXPECT_EQ(dump_json(presentation_to_json(back)), text) << name;
  }
}

TEST(Serialize, Layout) {
  const HopfPresentation h = builtin_presentation("C2", Ring::make(5));
  const Json j = presentation_to_json(h);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"ring", "dim", "m", "unit", "delta", "counit", "S"}));
  EXPECT_EQ(j["ring"].dump(), R"({"p":5,"n":1,"m":1,"modulus":[0,1]})");
  // g·g = 1 and Δ(g) = g ⊗ g.
  EXPECT_EQ(j["m"][1][1].dump(), "[[1],[0]]");
  EXPECT_EQ(j["delta"][1][1][1].dump(), "[1]");
  EXPECT_EQ(j["S"][1].dump(), "[[0],[1]]");
}

TEST(Serialize, SchemaViolations) {
  const HopfPresentation h = builtin_presentation("C2", Ring::make(5));
  Json j = presentation_to_json(h);
  Json missing = j;
  missing.erase("S");
  EXPECT_NE(schema_error([&] { presentation_from_json(missing); }).find("at .S"), std::string::npos);

  Json bad = j;
  bad["m"][0][1][1][0] = 7;
  const std::string msg = schema_error([&] { presentation_from_json(bad); });
  EXPECT_NE(msg.find(".m[0][1][1]"), std::string::npos) << msg;
  EXPECT_NE(msg.find("outside"), std::string::npos) << msg;

  Json wrong_dim = j;
  wrong_dim["dim"] = 3;
  schema_error([&] { presentation_from_json(wrong_dim); });
  schema_error([] { parse_json("{not json"); });

  Json reducible = j;
  reducible["ring"] = Json::parse(R"({"p":2,"n":1,"m":2,"modulus":[1,0,1]})");
  EXPECT_THROW(presentation_from_json(reducible), Error);
}

TEST(Serialize, OtherObjects) {
  const Ring f5 = Ring::make(5);
  const HopfPresentation c2 = builtin_presentation("C2", f5);
  const BialgebraComplex cx(c2);
  std::mt19937_64 rng(3);
  TotalCochain x = cx.zero(2);
  for (auto& comp : x.components)
    for (auto& v : comp.coeffs()) v = f5.from_int(static_cast<std::int64_t>(rng() % 5));
  EXPECT_EQ(cochain_from_json(cx, parse_json(dump_json(cochain_to_json(x)))), x);

  const HopfMorphism id{c2, c2, MultiMap::identity(f5, 2)};
  const HopfMorphism back = morphism_from_json(parse_json(dump_json(morphism_to_json(id))));
  EXPECT_EQ(back.map, id.map);
  EXPECT_EQ(back.source, c2);

  MultiMap r(f5, 2, 2, 0, 2);
  r.coeffs()[0] = f5.from_int(3);
  r.coeffs()[3] = f5.from_int(2);
  const Json rj = rmatrix_to_json(r, 2);
  EXPECT_EQ(rj.dump(), "[[[3],[0]],[[0],[2]]]");
  EXPECT_EQ(rmatrix_from_json(f5, 2, rj), r);

  const LiftStrategy strategy = LiftStrategy::perturbed(4);
  const LiftState s = lift(c2, 3, strategy);
  const std::string text = dump_json(lift_state_to_json(s, strategy));
  const LiftState s2 = lift_state_from_json(parse_json(text));
  EXPECT_EQ(s2.current, s.current);
  EXPECT_EQ(s2.base, s.base);
  EXPECT_EQ(s2.precision, 3u);
  EXPECT_EQ(dump_json(lift_state_to_json(s2, strategy)), text);
  EXPECT_EQ(text.find("seconds"), std::string::npos);
}
