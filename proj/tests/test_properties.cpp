#include "identities.hpp"

#include <doctest.h>

using namespace hhc;
using namespace hhc::testing;

namespace {

struct Setup {
  Field F;
  int n;
};

const Setup setups[] = {{Field::rationals(), 2}, {Field::prime(5), 3}, {Field::prime(7), 2}, {Field::prime(2), 2}};

}  // namespace

TEST_CASE("graded pre-Lie, antisymmetry and Jacobi") {
  for (auto& s : setups) {
    Preset p = xn_resolution(s.F, s.n, 3);
    Random R(101 + s.n);
    for (int t = 0; t < 8; ++t) {
      Tuple f = R.tuple(p.P, R.uniform(-1, 1), 2), g = R.tuple(p.P, R.uniform(-1, 1), 2),
            h = R.tuple(p.P, R.uniform(-1, 1), 2);
      CHECK(pre_lie(f, g, h, 2));
      CHECK(antisymmetry(f, g, 2));
      CHECK(jacobi(f, g, h, 2));
    }
  }
}

TEST_CASE("[delta, -] is a derivation of the m_l operations") {
  for (auto& s : setups) {
    Preset p = xn_resolution(s.F, s.n, 3);
    Random R(202 + s.n);
    for (int t = 0; t < 6; ++t) {
      Tuple f = R.tuple(p.P, R.uniform(-1, 1), 2), g = R.tuple(p.P, R.uniform(-1, 1), 2),
            h = R.tuple(p.P, R.uniform(-1, 1), 2);
      CHECK(delta_leibniz2(p.S, f, g, 2));
      CHECK(delta_leibniz3(p.S, f, g, h, 2));
    }
  }
}

TEST_CASE("commutator and Poisson expansions on arbitrary tuples") {
  for (auto& s : setups) {
    Preset p = xn_resolution(s.F, s.n, 3);
    Random R(303 + s.n);
    for (int t = 0; t < 6; ++t) {
      Tuple f = R.tuple(p.P, R.uniform(-1, 1), 2), g = R.tuple(p.P, R.uniform(-1, 1), 2),
            h = R.tuple(p.P, R.uniform(-1, 1), 2);
      CHECK(commutator_via_circ(p.S, f, g, 2));
      CHECK(poisson_expansion(p.S, f, g, h, 2));
    }
  }
}

TEST_CASE("on coderivations the defects are inner") {
  for (auto& s : setups) {
    Preset p = xn_resolution(s.F, s.n, 4);
    Random R(404 + s.n);
    CoderivationSampler C(p.S, R);
    for (int t = 0; t < 6; ++t) {
      Tuple f = C.sample(R.uniform(0, 2)), g = C.sample(R.uniform(0, 2)), h = C.sample(R.uniform(0, 2));
      CHECK(check_coderivation(p.S, f, 3).ok);
      CHECK(graded_commutative_up_to_inner(p.S, f, g, 2));
      CHECK(poisson_residual(p.S, f, g, h, 2));
    }
  }
}

TEST_CASE("the commutator sign is not the plus variant") {
  // guards against the sign of the swapped cup product drifting
  Preset p = xn_resolution(Field::rationals(), 2, 4);
  Random R(7);
  CoderivationSampler C(p.S, R);
  int plus = 0;
  for (int t = 0; t < 6; ++t) {
    Tuple f = C.sample(R.uniform(1, 2)), g = C.sample(R.uniform(1, 2));
    Tuple sum = cup(p.S, f, g, 2) + cup(p.S, g, f, 2).scaled(sign(p.P->field(), (g.degree() + 1) * (f.degree() + 1)));
    plus += tuples_equal(sum, delta_bracket(p.S, circ(f, g, 3), 2).scaled(sign(p.P->field(), f.degree())));
  }
  CHECK(plus < 6);
}

TEST_CASE("psi relation") {
  for (auto& s : setups) {
    Preset p = xn_resolution(s.F, s.n, 6);
    for (int t = 1; t <= 4; ++t)
      for (int r = -3; r <= 3; ++r) CHECK(psi_relation(p.S, t, r));
  }
}

TEST_CASE("brackets of coderivations are coderivations") {
  Preset p = xn_resolution(Field::rationals(), 3, 5);
  Random R(55);
  CoderivationSampler C(p.S, R);
  for (int t = 0; t < 5; ++t) {
    Tuple f = C.sample(R.uniform(0, 2)), g = C.sample(R.uniform(0, 2));
    CHECK(check_coderivation(p.S, bracket(f, g, 3), 2).ok);
  }
}
