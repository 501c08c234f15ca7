#include "support.hpp"

#include "hhc/errors.hpp"
#include "hhc/render.hpp"
#include "hhc/serialize.hpp"

#include <doctest.h>

#include <json.hpp>

using namespace hhc;
using namespace hhc::testing;

namespace {

std::shared_ptr<const Algebra> xn(const Field& F, int n) {
  return std::make_shared<const Algebra>(truncated_polynomial_algebra(F, n));
}

bool chain_map(const Map& F) {
  // d_Q F - F d_P
  Map dQ = Map::differential(F.target_ptr());
  Map lhs = compose(Ops{&dQ}, F);
  Map dP = Map::differential(F.complex_ptr());
  Map rhs = compose(Ops{&F}, dP);
  return (lhs - rhs).is_zero();
}

}  // namespace

TEST_CASE("presets are exact resolutions") {
  for (int n : {2, 3, 4})
    for (const Field& F : {Field::rationals(), Field::prime(2), Field::prime(3)}) {
      Preset p = xn_resolution(F, n, 6);
      CHECK_NOTHROW(validate_complex(*p.P));
      CHECK_NOTHROW(validate_complex(*bar_resolution(xn(F, n), 4)));
    }
}

TEST_CASE("xn differential closed form") {
  Preset p = xn_resolution(Field::rationals(), 3, 4);
  const Complex& P = *p.P;
  CHECK(render(P, P.d(P.find("e1"))) == "−e0·x + x·e0");
  CHECK(render(P, P.d(P.find("e2"))) == "e1·x^2 + x·e1·x + x^2·e1");
}

TEST_CASE("bar words and generators") {
  ComplexPtr bar = bar_resolution(xn(Field::rationals(), 3), 4);
  CHECK(bar->num_generators() == 1 + 3 + 9 + 27 + 81);
  for (int g = 0; g < bar->num_generators(); ++g) CHECK(bar_generator(*bar, bar_word(*bar, g)) == g);
  CHECK(bar_generator(*bar, {0, 0, 0, 0, 0}) == -1);
  CHECK(bar->gen(bar_generator(*bar, {1, 2})).degree == -1);
}

TEST_CASE("bar of a truncated polynomial ring stops at the truncation") {
  auto A = std::make_shared<const Algebra>(truncated_polynomial_algebra(Field::rationals(), std::nullopt, 3));
  CHECK_NOTHROW(bar_resolution(A, 3));
  try {
    bar_resolution(A, 5);
    FAIL("expected WindowTooDeep");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::WindowTooDeep);
  }
}

TEST_CASE("broken complexes are rejected") {
  Preset p = xn_resolution(Field::rationals(), 2, 4);
  auto j = nlohmann::json::parse(dump_complex(*p.P));
  j["differential"]["e2"][0][0] = "2";
  try {
    custom_resolution(j.dump(), 4);
    FAIL("expected NotExact");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotExact);
  }
  auto k = nlohmann::json::parse(dump_complex(*p.P));
  k.erase("augmentation");
  CHECK_THROWS_AS(custom_resolution(k.dump(), 4), Error);
}

TEST_CASE("custom resolution from a file") {
  std::string path = std::string(HHC_DATA_DIR) + "/x2_resolution.json";
  ComplexPtr P = custom_resolution(read_file(path), 6, HHC_DATA_DIR);
  CHECK(P->lo() == -5);
  CHECK(hh_basis(P, 1).dim() == 1);
  CHECK(hh_basis(P, 2).dim() == 1);
}

TEST_CASE("comparison maps are augmented chain maps") {
  for (int n : {2, 3}) {
    Field F = Field::rationals();
    Preset p = xn_resolution(F, n, 6);
    ComplexPtr bar = bar_resolution(p.P->algebra_ptr(), 4);
    for (auto [src, dst] : {std::pair{bar, p.P}, std::pair{p.P, bar}}) {
      Map C = comparison_map(src, dst);
      CHECK(C.degree() == 0);
      CHECK(chain_map(C));
      Map muQ = Map::augmentation(dst);
      Map muP = Map::augmentation(src);
      CHECK(compose(Ops{&muQ}, C) == muP);
    }
  }
}

TEST_CASE("transport preserves cocycles and classes") {
  Field F = Field::prime(3);
  Preset p = xn_resolution(F, 3, 6);
  ComplexPtr bar = bar_resolution(p.P->algebra_ptr(), 4);
  Map C = comparison_map(bar, p.P);
  Map back = comparison_map(p.P, bar);
  for (int k = 0; k <= 2; ++k) {
    HHBasis B = hh_basis(p.P, k);
    CHECK(hh_basis(bar, k).dim() == B.dim());
    for (auto& f : B.reps) {
      Map t = transport(f, C);
      CHECK(hom_differential(t).is_zero());
      CHECK(same_class(transport(t, back), f));
    }
  }
}
