#include "pbw/fixtures.hpp"

#include <string>

namespace pbw::fixtures {

namespace {

BracketEntry br(std::string a, std::string b, std::vector<std::pair<std::string, Rational>> r) {
  return {std::move(a), std::move(b), std::move(r)};
}

}  // namespace

LieAlg abelian(int d) {
  std::vector<BasisVector> b;
  for (int i = 0; i < d; ++i) b.push_back({"a" + std::to_string(i + 1), 0});
  return make_algebra("abelian" + std::to_string(d), b, {});
}

LieAlg a2() { return make_algebra("A2", {{"x", 0}, {"y", 0}}, {br("x", "y", {{"y", 1}})}); }

LieAlg heisenberg() {
  return make_algebra("H3", {{"x", 0}, {"y", 0}, {"z", 0}}, {br("x", "y", {{"z", 1}})});
}

LieAlg sl2() {
  return make_algebra("sl2", {{"e", 0}, {"h", 0}, {"f", 0}},
                      {br("h", "e", {{"e", 2}}), br("h", "f", {{"f", -2}}), br("e", "f", {{"h", 1}})});
}

LieAlg aff1() { return make_algebra("aff1", {{"h", 0}, {"x", 0}}, {br("h", "x", {{"x", 1}})}); }

LieAlg gl11() {
  return make_algebra("gl11", {{"E11", 0}, {"E22", 0}, {"E12", 1}, {"E21", -1}},
                      {br("E11", "E12", {{"E12", 1}}), br("E11", "E21", {{"E21", -1}}),
                       br("E22", "E12", {{"E12", -1}}), br("E22", "E21", {{"E21", 1}}),
                       br("E12", "E21", {{"E11", 1}, {"E22", 1}})});
}

LieAlg super_heisenberg() {
  return make_algebra("super_heisenberg", {{"h", 2}, {"t", 1}}, {br("t", "t", {{"h", 1}})});
}

LieAlg semidirect_h3() {
  return make_algebra("d_ltimes_H3", {{"d", 0}, {"x", 0}, {"y", 0}, {"z", 0}},
                      {br("x", "y", {{"z", 1}}), br("d", "x", {{"x", 1}}), br("d", "y", {{"y", -1}})});
}

LieAlg bad_xyz() {
  return make_algebra("bad_xyz", {{"x", 0}, {"y", 0}, {"z", 0}},
                      {br("x", "y", {{"z", 1}}), br("x", "z", {{"y", 1}}), br("y", "z", {{"y", 1}})});
}

LieAlg bad_super() {
  return make_algebra("bad_super", {{"x", 0}, {"t", 1}, {"w", 2}}, {br("t", "t", {{"w", 1}}), br("x", "t", {{"t", 1}})});
}

std::vector<LieAlg> standard_set() { return {abelian(2), a2(), heisenberg(), sl2(), aff1(), gl11()}; }

}  // namespace pbw::fixtures
