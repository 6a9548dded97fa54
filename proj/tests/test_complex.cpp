#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gorhom/complex.hpp"

using namespace gorhom;

namespace {

AlgebraPtr f2x() { return make_truncated_poly(CoefficientDomain::fp(2), 2); }
AlgebraPtr zc2() { return make_group_ring_cyclic(CoefficientDomain::integers(), 2); }

// doubly periodic complex over Z[C2]: ... -N-> R -(t-1)-> R -N-> R -(t-1)-> ...
// with t-1 in odd degrees and the norm N = 1+t in even ones
ChainComplex zc2_periodic() {
  auto a = zc2();
  Module r = regular_module(a, Side::Left);
  ExactMatrix tminus1 = a->left_mult(ExactMatrix::from_ints(a->dom, {{-1}, {1}}));
  ExactMatrix norm = a->left_mult(ExactMatrix::from_ints(a->dom, {{1}, {1}}));
  ChainComplex t(a, Side::Left, -1, 2, Tail::periodic(2), Tail::periodic(2));
  for (long i = -1; i <= 2; ++i) t.set_term(i, r);
  t.set_dif(0, norm);
  t.set_dif(1, tminus1);
  t.set_dif(2, norm);
  t.validate();
  return t;
}

// ... -x-> R -x-> R over F2[x]/(x^2), one-periodic above
ChainComplex f2x_periodic() {
  auto a = f2x();
  Module r = regular_module(a, Side::Left);
  ChainComplex p(a, Side::Left, 0, 1, Tail::zero(), Tail::periodic(1));
  p.set_term(0, r);
  p.set_term(1, r);
  p.set_dif(1, a->lmul[1]);
  p.validate();
  return p;
}

// random R-linear map via the hom space, deterministic in the given rng
ExactMatrix random_morphism(const Module& src, const Module& tgt, std::mt19937& rng) {
  HomSpace h = hom_space(src, tgt);
  std::uniform_int_distribution<int> coef(0, 2);
  ExactMatrix coords(src.dom(), h.pres.gens, 1);
  for (long i = 0; i < h.pres.gens; ++i) coords.set(i, 0, Scalar(coef(rng)));
  return h.matrix_of(coords);
}

// random bounded complex of free modules on [0, 2]
ChainComplex random_complex(AlgebraPtr a, std::mt19937& rng) {
  std::uniform_int_distribution<long> rk(1, 2);
  Module m0 = free_module(a, Side::Left, rk(rng));
  Module m1 = free_module(a, Side::Left, rk(rng));
  Module m2 = free_module(a, Side::Left, rk(rng));
  ChainComplex c(a, Side::Left, 0, 2);
  c.set_term(0, m0);
  c.set_term(1, m1);
  c.set_term(2, m2);
  ExactMatrix d1 = random_morphism(m1, m0, rng);
  KernelData k = kernel_of_morphism(m1, d1, m0);
  ExactMatrix into_ker = random_morphism(m2, k.ker, rng);
  c.set_dif(1, d1);
  c.set_dif(2, k.incl * into_ker);
  c.validate();
  return c;
}

}  // namespace

TEST_CASE("doubly periodic Z[C2] complex folds and is acyclic") {
  ChainComplex t = zc2_periodic();
  CHECK(t.term(7).gens == 2);
  CHECK(t.dif(17) == t.dif(1));
  CHECK(t.dif(-4) == t.dif(0));
  CHECK(t.dif(-5) == t.dif(1));
  CHECK_FALSE(t.bounded_below());
  CHECK_FALSE(t.bounded_above());
  AcyclicityReport rep = acyclic_on(t, -4, 5);
  CHECK(rep.ok);

  // truncating at zero yields the standard resolution of the trivial module
  ChainComplex p = truncate_below(t, 0);
  CHECK(p.lower().is_zero());
  CHECK(homology_group(p, 0).str() == "Z");
  CHECK(homology_group(p, 1).is_zero());
  CHECK(homology_group(p, 2).is_zero());
  CHECK(homology_group(p, 5).is_zero());

  ChainComplex below = truncate_above(t, -1);
  CHECK(homology_group(below, -1).str() == "Z");
  CHECK(homology_group(below, -2).is_zero());
}

TEST_CASE("one-periodic F2[x]/(x^2) complex") {
  ChainComplex p = f2x_periodic();
  CHECK(p.dif(9) == p.dif(1));
  CHECK(homology_group(p, 0).str() == "k");
  for (long i = 1; i <= 6; ++i) CHECK(homology_group(p, i).is_zero());
}

TEST_CASE("validation catches broken complexes") {
  auto a = zc2();
  Module r = regular_module(a, Side::Left);
  ExactMatrix norm = a->left_mult(ExactMatrix::from_ints(a->dom, {{1}, {1}}));
  SUBCASE("dif squared nonzero") {
    ChainComplex c(a, Side::Left, 0, 2);
    for (long i = 0; i <= 2; ++i) c.set_term(i, r);
    c.set_dif(1, norm);
    c.set_dif(2, norm);  // N * N = 2N != 0
    CHECK_THROWS_AS(c.validate(), InputError);
  }
  SUBCASE("periodic seam mismatch") {
    ChainComplex c(a, Side::Left, 0, 2, Tail::zero(), Tail::periodic(2));
    c.set_term(0, r);
    c.set_term(1, r);
    c.set_term(2, free_module(a, Side::Left, 2));
    c.set_dif(1, norm);
    c.set_dif(2, ExactMatrix(a->dom, 2, 4));
    CHECK_THROWS_AS(c.validate(), InputError);
  }
  SUBCASE("non R-linear differential") {
    auto b = f2x();
    ChainComplex c(b, Side::Left, 0, 1);
    c.set_term(0, regular_module(b, Side::Left));
    c.set_term(1, regular_module(b, Side::Left));
    ExactMatrix notlin(b->dom, 2, 2);
    notlin.set(0, 1, Scalar(1));  // kills 1, keeps x: not a module map
    c.set_dif(1, notlin);
    CHECK_THROWS_AS(c.validate(), InputError);
  }
}

TEST_CASE("shift moves homology and flips signs") {
  ChainComplex p = truncate_below(zc2_periodic(), 0);
  ChainComplex s = shift(p, 3);
  CHECK(homology_group(s, 3).str() == "Z");
  CHECK(homology_group(s, 4).is_zero());
  CHECK(s.dif(4) == p.dif(1).negated());
  ChainComplex s2 = shift(p, 2);
  CHECK(s2.dif(3) == p.dif(1));
}

TEST_CASE("chain map validation") {
  ChainComplex p = f2x_periodic();
  ChainMap id = identity_chain_map(p);
  CHECK(id.at(5) == ExactMatrix::identity(p.dom(), 2));

  // a map that drops the identity in one degree cannot commute
  std::map<long, ExactMatrix> bad;
  bad.emplace(0, ExactMatrix::identity(p.dom(), 2));
  bad.emplace(1, ExactMatrix(p.dom(), 2, 2));
  CHECK_THROWS_AS(make_chain_map(p, p, std::move(bad), 0, 1, Tail::zero(), Tail::periodic(1)),
                  InputError);
}

TEST_CASE("cone of the identity is acyclic") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 4; ++trial) {
    ChainComplex c = random_complex(trial % 2 == 0 ? f2x() : zc2(), rng);
    ConeData cd = cone(identity_chain_map(c));
    AcyclicityReport rep = acyclic_on(cd.cone, -1, 4);
    CHECK(rep.ok);
  }
}

TEST_CASE("cone of a null-homotopic map splits in homology") {
  std::mt19937 rng(19);
  auto a = f2x();
  for (int trial = 0; trial < 4; ++trial) {
    ChainComplex c = random_complex(a, rng);
    ChainComplex b = random_complex(a, rng);
    // f = d s + s d is always a chain map, and always null-homotopic
    std::map<long, ExactMatrix> smat;
    for (long i = 0; i <= 2; ++i) smat.emplace(i, random_morphism(c.term(i), b.term(i + 1), rng));
    auto s = [&](long i) -> ExactMatrix {
      auto it = smat.find(i);
      if (it != smat.end()) return it->second;
      return ExactMatrix(a->dom, b.term(i + 1).gens, c.term(i).gens);
    };
    std::map<long, ExactMatrix> fmat;
    for (long i = 0; i <= 2; ++i) fmat.emplace(i, b.dif(i + 1) * s(i) + s(i - 1) * c.dif(i));
    ChainMap f = make_chain_map(c, b, std::move(fmat), 0, 2);
    ConeData cd = cone(f);
    for (long i = -1; i <= 4; ++i) {
      long want = homology_group(c, i - 1).dim + homology_group(b, i).dim;
      CHECK(homology_group(cd.cone, i).dim == want);
    }
  }
}

TEST_CASE("Euler characteristic matches homology over a field") {
  std::mt19937 rng(23);
  auto a = f2x();
  for (int trial = 0; trial < 5; ++trial) {
    ChainComplex c = random_complex(a, rng);
    long chi_terms = 0, chi_h = 0;
    for (long i = 0; i <= 2; ++i) {
      long sign = i % 2 == 0 ? 1 : -1;
      chi_terms += sign * c.term(i).gens;
      chi_h += sign * homology_group(c, i).dim;
    }
    CHECK(chi_terms == chi_h);
  }
}

TEST_CASE("cokernels at a degree") {
  ChainComplex t = zc2_periodic();
  CokernelModule c0 = cokernel_at(t, 0);  // coker(t-1) = trivial Z
  CHECK(c0.m.descriptor().str() == "Z");
  CHECK(iso_search(c0.m, simple_module(t.ring(), Side::Left)).has_value());

  CokernelModule c1 = cokernel_at(t, 1);  // coker(N) = Z with t acting by -1
  CHECK(c1.m.descriptor().str() == "Z");
  CHECK(iso_search(c1.m, character_module(t.ring(), Side::Left, Scalar(-1))).has_value());

  ChainComplex p = f2x_periodic();
  CokernelModule ck = cokernel_at(p, 0);
  CHECK(modules_equal(ck.m, simple_module(p.ring(), Side::Left)));
}

TEST_CASE("kernel complexes and split surjections") {
  auto a = f2x();
  Module r2 = free_module(a, Side::Left, 2);
  Module r1 = free_module(a, Side::Left, 1);
  ExactMatrix dx = a->lmul[1];

  ChainComplex big(a, Side::Left, 0, 1);
  big.set_term(0, r2);
  big.set_term(1, r2);
  big.set_dif(1, block_diag(dx, dx));
  big.validate();
  ChainComplex small(a, Side::Left, 0, 1);
  small.set_term(0, r1);
  small.set_term(1, r1);
  small.set_dif(1, dx);
  small.validate();

  // project onto the first free summand
  ExactMatrix pr = hstack(ExactMatrix::identity(a->dom, 2), ExactMatrix(a->dom, 2, 2));
  std::map<long, ExactMatrix> mats{{0, pr}, {1, pr}};
  ChainMap tau = make_chain_map(big, small, std::move(mats), 0, 1);
  CHECK(degreewise_split_surjective(tau));

  ComplexKernel k = kernel_complex(tau);
  CHECK(k.ker.term(0).gens == 2);
  CHECK(k.ker.term(1).gens == 2);
  CHECK(homology_group(k.ker, 0).dim == 1);  // kernel complex is R -x-> R

  // multiplication by x on one summand is not surjective
  std::map<long, ExactMatrix> mats2{{0, dx}, {1, dx}};
  ChainMap notsurj = make_chain_map(small, small, std::move(mats2), 0, 1);
  CHECK_FALSE(degreewise_split_surjective(notsurj));
}

TEST_CASE("one-term complexes and bounds") {
  auto a = f2x();
  ChainComplex c = one_term_complex(simple_module(a, Side::Left), 3);
  CHECK(homology_group(c, 3).dim == 1);
  CHECK(homology_group(c, 2).is_zero());
  CHECK(c.sup_deg() == 3);
  CHECK(c.inf_deg() == 3);
  CHECK(zero_complex(a, Side::Left).is_zero_complex());
  CHECK(!zero_complex(a, Side::Left).sup_deg().has_value());

  ChainComplex t = zc2_periodic();
  CHECK_THROWS_AS(t.sup_deg(), InputError);
}
