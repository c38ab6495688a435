#include <gtest/gtest.h>

#include "pbw/fixtures.hpp"
#include "pbw/io.hpp"

using namespace pbw;

namespace {

ErrorCode load_error(const json& j) {
  try {
    algebra_from_json(j);
  } catch (const PbwError& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error for " << j.dump();
  return ErrorCode::JacobiViolation;
}

json one_bracket(const json& coeff) {
  return {{"name", "t"},
          {"basis", {{{"name", "x"}, {"degree", 0}}, {{"name", "y"}, {"degree", 0}}}},
          {"brackets", {{{"left", "x"}, {"right", "y"}, {"result", {{{"basis", "y"}, {"coeff", coeff}}}}}}}};
}

}  // namespace

TEST(Io, AlgebraRoundTrip) {
  std::vector<LieAlg> algs = fixtures::standard_set();
  for (auto g : {fixtures::super_heisenberg(), fixtures::semidirect_h3(), fixtures::bad_xyz(), fixtures::bad_super()})
    algs.push_back(g);
  for (const auto& g : algs) {
    json j = algebra_to_json(g);
    EXPECT_EQ(algebra_from_json(j), g) << g.name();
    EXPECT_EQ(algebra_from_json(json::parse(j.dump())), g) << g.name();
  }
}

TEST(Io, TripleRoundTrip) {
  for (const auto& t : {fixtures::h3_center(), fixtures::aff1_pair(), fixtures::sl2_cartan(), fixtures::semidirect_pair()}) {
    TripleSpec back = triple_from_json(triple_to_json(t));
    EXPECT_EQ(back.ambient, t.ambient);
    EXPECT_EQ(back.sub, t.sub);
    EXPECT_EQ(back.complement, t.complement);
  }
}

TEST(Io, Coefficients) {
  EXPECT_EQ(algebra_from_json(one_bracket("1/2")).bracket(0, 1), Vec(1, Rational(1, 2)));
  EXPECT_EQ(algebra_from_json(one_bracket(-3)).bracket(1, 0), Vec(1, 3));
  EXPECT_EQ(algebra_from_json(one_bracket("4/6")).bracket(0, 1), Vec(1, Rational(2, 3)));
  EXPECT_EQ(load_error(one_bracket("1/0")), ErrorCode::ConfigError);
  EXPECT_EQ(load_error(one_bracket("abc")), ErrorCode::ConfigError);
  EXPECT_EQ(load_error(one_bracket(0.5)), ErrorCode::ConfigError);
}

TEST(Io, MalformedSpecs) {
  json j = one_bracket(1);
  j.erase("name");
  EXPECT_EQ(load_error(j), ErrorCode::ConfigError);

  j = one_bracket(1);
  j["brackets"][0]["result"][0]["basis"] = "w";
  EXPECT_EQ(load_error(j), ErrorCode::ConfigError);

  j = one_bracket(1);
  j["basis"][1]["name"] = "x";
  EXPECT_EQ(load_error(j), ErrorCode::ConfigError);

  // (y,x) listed with the wrong sign
  j = one_bracket(1);
  j["brackets"].push_back({{"left", "y"}, {"right", "x"}, {"result", {{{"basis", "y"}, {"coeff", 1}}}}});
  EXPECT_EQ(load_error(j), ErrorCode::ConfigError);

  j = one_bracket(1);
  j["basis"] = json::array();
  EXPECT_EQ(load_error(j), ErrorCode::ConfigError);
}

TEST(Io, UnlistedBracketsAreZero) {
  json j = one_bracket(1);
  j["basis"].push_back({{"name", "z"}, {"degree", 0}});
  LieAlg g = algebra_from_json(j);
  EXPECT_TRUE(g.bracket(0, 2).is_zero());
  EXPECT_TRUE(g.bracket(2, 1).is_zero());
}

TEST(Io, MissingFile) {
  try {
    load_algebra("/nonexistent/algebra.json");
    FAIL();
  } catch (const PbwError& e) {
    EXPECT_EQ(e.code(), ErrorCode::ConfigError);
  }
}

TEST(Io, SymJson) {
  auto g = fixtures::a2();
  json j = sym_to_json(g.space(), SymElem(Word{0, 1}, 1) + SymElem(Word{}, Rational(-1, 2)));
  EXPECT_EQ(j, (json{{"1", "-1/2"}, {"x*y", "1"}}));
}
