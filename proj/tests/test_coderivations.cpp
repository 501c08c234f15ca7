#include "identities.hpp"

#include "hhc/errors.hpp"
#include "hhc/render.hpp"
#include "hhc/solver.hpp"

#include <doctest.h>

using namespace hhc;
using namespace hhc::testing;

namespace {

// alpha_1(e_i) = c_i e_i for the lift of e1 -> x
std::vector<long long> diagonal_of(const Preset& p, const Tuple& a, int upto) {
  std::vector<long long> c;
  const Complex& P = *p.P;
  for (int i = 0; i <= upto; ++i) {
    int g = P.find("e" + std::to_string(i));
    const Tensor& v = a[1].at(g);
    if (v.is_zero()) {
      c.push_back(0);
      continue;
    }
    REQUIRE(v.terms().size() == 1);
    REQUIRE(v.terms()[0].key == Key{0, g, 0});
    c.push_back(std::stoll(v.terms()[0].c.str()));
  }
  return c;
}

}  // namespace

TEST_CASE("explicit families are coderivations") {
  for (int n : {2, 3})
    for (const Field& F : {Field::rationals(), Field::prime(3), Field::prime(5)}) {
      Preset p = xn_resolution(F, n, 8);
      CHECK(check_coderivation(p.S, euler_family(p.S, n), 4).ok);
      CHECK(check_coderivation(p.S, beta_family(p.S), 4).ok);
    }
  Preset p = xn_resolution(Field::prime(3), 3, 8);
  CHECK(check_coderivation(p.S, char3_family(p.S), 4).ok);
}

TEST_CASE("the char 3 family fails over Q") {
  Preset p = xn_resolution(Field::rationals(), 3, 6);
  CHECK_FALSE(check_coderivation(p.S, char3_family(p.S), 3).ok);
}

TEST_CASE("perturbed families fail") {
  Preset p = xn_resolution(Field::rationals(), 2, 6);
  Tuple a = euler_family(p.S, 2);
  a[1].set(p.P->find("e2"), Tensor(1));
  Report r = check_coderivation(p.S, a, 3);
  CHECK_FALSE(r.ok);
}

TEST_CASE("lift of e1 -> x has the Euler diagonal") {
  Preset x2 = xn_resolution(Field::rationals(), 2, 8);
  Tuple a = lift_cocycle(x2.S, cochain(x2.P, 1, "e1", "x"), 4);
  CHECK(diagonal_of(x2, a, 7) == std::vector<long long>{0, -1, -2, -3, -4, -5, -6, -7});
  for (int k = 2; k <= 4; ++k) CHECK(a[k].is_zero());

  Preset x3 = xn_resolution(Field::rationals(), 3, 8);
  Tuple b = lift_cocycle(x3.S, cochain(x3.P, 1, "e1", "x"), 4);
  CHECK(diagonal_of(x3, b, 7) == std::vector<long long>{0, -1, -3, -4, -6, -7, -9, -10});
}

TEST_CASE("lifts solve the coderivation equation") {
  for (int n : {2, 3, 4})
    for (const Field& F : {Field::rationals(), Field::prime(2), Field::prime(3)}) {
      Preset p = xn_resolution(F, n, 7);
      for (int k = 0; k <= 3; ++k)
        for (auto& f : hh_basis(p.P, k).reps) {
          Tuple a = lift_cocycle(p.S, f, 4);
          CHECK(check_coderivation(p.S, a, 4).ok);
          CHECK(a[0] == f);
          CHECK(homotopy_lifting_check(p.S, f, a[1].scaled(sign(F, a.degree()))).ok);
        }
    }
}

TEST_CASE("lifting a non-cocycle throws") {
  Preset p = xn_resolution(Field::rationals(), 2, 6);
  try {
    lift_cocycle(p.S, cochain(p.P, 1, "e1", "1"), 3);
    FAIL("expected NotACocycle");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotACocycle);
  }
}

TEST_CASE("lifts on the bar preset and on a constructed structure") {
  auto A = std::make_shared<const Algebra>(truncated_polynomial_algebra(Field::rationals(), 2));
  ComplexPtr bar = bar_resolution(A, 5);
  AinftyStructure S = bar_structure(bar);
  for (auto& f : hh_basis(bar, 1).reps) CHECK(check_coderivation(S, lift_cocycle(S, f, 3), 3).ok);

  Preset p = xn_resolution(Field::rationals(), 3, 7);
  AinftyStructure C = construct_delta(p.P, 4);
  // the depth-3 lift already needs delta_4
  for (auto& f : hh_basis(p.P, 2).reps) CHECK(check_coderivation(C, lift_cocycle(C, f, 3), 3).ok);
}

TEST_CASE("inner coderivations") {
  Preset p = xn_resolution(Field::rationals(), 3, 6);
  Random R(21);
  for (int t = 0; t < 10; ++t) {
    Tuple beta = R.tuple(p.P, R.uniform(-1, 1), 2);
    Tuple a = delta_bracket(p.S, beta, 4);
    InnerResult r = is_inner(p.S, a);
    CHECK(r.yes);
    CHECK(tuples_agree(delta_bracket(p.S, r.beta, 4), a));
  }
  InnerResult outer = is_inner(p.S, lift_cocycle(p.S, cochain(p.P, 1, "e1", "x"), 4));
  CHECK_FALSE(outer.yes);
  CHECK(outer.witness.find("alpha_0") != std::string::npos);
}

TEST_CASE("families differ from lifts by inner coderivations") {
  for (int n : {2, 3}) {
    Preset p = xn_resolution(Field::rationals(), n, 8);
    for (const Tuple& fam : {euler_family(p.S, n), beta_family(p.S)})
      CHECK(is_inner(p.S, lift_cocycle(p.S, fam[0], 4) - fam).yes);
  }
  Preset f3 = xn_resolution(Field::prime(3), 3, 8);
  Tuple c = char3_family(f3.S);
  CHECK(is_inner(f3.S, lift_cocycle(f3.S, c[0], 4) - c).yes);
}

TEST_CASE("circ and bracket on small tuples") {
  Preset p = xn_resolution(Field::rationals(), 2, 6);
  Tuple d = Tuple::from_structure(p.S);
  // [delta, delta] vanishes through the certified range
  CHECK(tuple_is_zero(bracket(d, d, 4)));
  Tuple a = euler_family(p.S, 2);
  CHECK(tuples_equal(bracket(d, a, 4), delta_bracket(p.S, a, 4)));
}

TEST_CASE("psi and phi") {
  Preset p = xn_resolution(Field::rationals(), 3, 6);
  for (int t = 1; t <= 4; ++t)
    for (int r = -2; r <= 2; ++r) CHECK(psi_relation(p.S, t, r));
  std::vector<Map> phi = phi_family(p.S, 3);
  CHECK(phi.size() == 4);
  CHECK(phi[1].degree() == -1);
  Map named = named_phi(p.S);
  CHECK(named.degree() == -1);
}
