#include "doctest.h"
#include "wmb/catalog.hpp"
#include "wmb/multiplier.hpp"

using namespace wmb;
using lin::Mat;

TEST_CASE("M(A) of unital catalog algebras is A itself") {
  for (const char* name : {"PAIR2", "C2", "IDEM2"}) {
    Instance w = catalog(name);
    MultiplierSpace ms = multiplier_algebra(w.A);
    CAPTURE(name);
    CHECK(ms.dim() == w.A.dim());
    // embedding is surjective: the unit multiplier comes from an element
    auto one = ms.as_element(mult1_identity());
    REQUIRE(one.has_value());
    // for PAIR2 the unit is the sum of the identity arrows
    if (std::string(name) == "PAIR2") CHECK(*one == el1(0) + el1(3));
  }
}

TEST_CASE("is_in_A recognizes embedded elements") {
  Instance w = catalog("PAIR2");
  El1 a = el1(1) + el1(2);
  a *= Rat(3, 7);
  auto back = is_in_A(w.A, mult1_from_element(w.A, a));
  REQUIRE(back.has_value());
  CHECK(*back == a);
}

TEST_CASE("multiplier product is associative and anti-composes matrices") {
  Instance w = catalog("SUMC2PAIR2");
  MultiplierSpace ms = multiplier_algebra(w.A);
  REQUIRE(ms.dim() >= 3);
  Mult1 m0 = ms.basis_mult(0), m1 = ms.basis_mult(1), m2 = ms.basis_mult(2);
  auto mats = [&](const Mult1& m) { return mult1_matrices(w.A, m); };
  MultMatrices p01 = mats(mult1_mul(m0, m1));
  CHECK(p01.lft == mats(m0).lft * mats(m1).lft);
  CHECK(p01.rgt == mats(m1).rgt * mats(m0).rgt);
  MultMatrices l = mats(mult1_mul(mult1_mul(m0, m1), m2));
  MultMatrices r = mats(mult1_mul(m0, mult1_mul(m1, m2)));
  CHECK(l.lft == r.lft);
  CHECK(l.rgt == r.rgt);
}

TEST_CASE("M(A)^op is M(A^op)") {
  // swap (lam, rho) and compare the canonical spaces
  for (const char* name : {"PAIR2", "C2", "SUMC2PAIR2"}) {
    Instance w = catalog(name);
    Algebra op = w.A.opposite();
    MultiplierSpace ms = multiplier_algebra(w.A);
    MultiplierSpace mso = multiplier_algebra(op);
    CAPTURE(name);
    REQUIRE(ms.dim() == mso.dim());
    for (int i = 0; i < ms.dim(); ++i) {
      MultMatrices swapped{ms.basis(i).rgt, ms.basis(i).lft};
      CHECK(mso.coordinates(swapped).has_value());
    }
    // anti-multiplicativity of the swap on a pair of basis multipliers
    if (ms.dim() >= 2) {
      Mult1 m0 = ms.basis_mult(0), m1 = ms.basis_mult(1);
      MultMatrices prod = mult1_matrices(w.A, mult1_mul(m0, m1));
      // in M(A^op): swapped(m0 m1) = swapped(m1) swapped(m0)
      MultMatrices s0{mult1_matrices(w.A, m0).rgt, mult1_matrices(w.A, m0).lft};
      MultMatrices s1{mult1_matrices(w.A, m1).rgt, mult1_matrices(w.A, m1).lft};
      Mult1 os0 = mult1_from_matrices(op, s0), os1 = mult1_from_matrices(op, s1);
      MultMatrices cand = mult1_matrices(op, mult1_mul(os1, os0));
      CHECK(cand.lft == prod.rgt);
      CHECK(cand.rgt == prod.lft);
    }
  }
}

TEST_CASE("extend_hom: identity embedding extends to the identity") {
  Instance w = catalog("PAIR2");
  std::vector<Mult1> gamma;
  for (int a = 0; a < 4; ++a) gamma.push_back(mult1_from_element(w.A, el1(a)));
  HomExtension ext = extend_hom(w.A, w.A, gamma, mult1_identity());
  const MultiplierSpace& ma = ext.source();
  for (int i = 0; i < ma.dim(); ++i) {
    CHECK(ext.image(i).lft == ma.basis(i).lft);
    CHECK(ext.image(i).rgt == ma.basis(i).rgt);
  }
}

TEST_CASE("extend_hom: Delta extends with DeltaBar(1) = E") {
  Instance w = catalog("PAIR2");
  TensorAlgebra t2 = tensor_algebra(w.A, w.A);
  auto as_mult_on_t2 = [&](const Mult2& m) {
    Mult2 mm = m;
    TensorAlgebra t = t2;
    return Mult1{[mm, t](const El1& x) { return from_el2(t, mm.lft(to_el2(t, x))); },
                 [mm, t](const El1& x) { return from_el2(t, mm.rgt(to_el2(t, x))); }};
  };
  std::vector<Mult1> gamma;
  for (int a = 0; a < 4; ++a) gamma.push_back(as_mult_on_t2(w.delta_mult(el1(a))));
  Mult1 e = as_mult_on_t2(w.E);
  HomExtension ext = extend_hom(w.A, t2.alg, gamma, e);
  const MultiplierSpace& ma = ext.source();
  // DeltaBar(1) = E
  MultMatrices unit_img = ext.apply(MultMatrices{Mat::identity(4), Mat::identity(4)});
  MultMatrices em = mult1_matrices(t2.alg, e);
  CHECK(unit_img.lft == em.lft);
  CHECK(unit_img.rgt == em.rgt);
  // restriction to A is Delta, and the extension is multiplicative
  for (int a = 0; a < 4; ++a) {
    MultMatrices img = ext.apply(ma.embed(el1(a)));
    MultMatrices want = mult1_matrices(t2.alg, gamma[size_t(a)]);
    CHECK(img.lft == want.lft);
    CHECK(img.rgt == want.rgt);
  }
  for (int i = 0; i < ma.dim(); ++i)
    for (int j = 0; j < ma.dim(); ++j) {
      Mult1 mi = ma.basis_mult(i), mj = ma.basis_mult(j);
      MultMatrices prod_img = ext.apply(mult1_matrices(w.A, mult1_mul(mi, mj)));
      Mult1 imi = mult1_from_matrices(t2.alg, ext.image(i));
      Mult1 imj = mult1_from_matrices(t2.alg, ext.image(j));
      MultMatrices img_prod = mult1_matrices(t2.alg, mult1_mul(imi, imj));
      CHECK(prod_img.lft == img_prod.lft);
      CHECK(prod_img.rgt == img_prod.rgt);
    }
}

TEST_CASE("extend_hom rejects a failing spanning condition") {
  Instance w = catalog("PAIR2");
  std::vector<Mult1> gamma;
  // gamma = 0 certainly fails <gamma(A)B> = eB for e = 1
  for (int a = 0; a < 4; ++a)
    gamma.push_back(Mult1{[](const El1&) { return El1{}; }, [](const El1&) { return El1{}; }});
  CHECK_THROWS_AS(extend_hom(w.A, w.A, gamma, mult1_identity()), SpanningConditionFailed);
}

TEST_CASE("direct sum: component projections recover multipliers") {
  // phi : M(A) -> prod_j M(A_j) and back, on the canonical basis of M(A)
  Instance c2 = catalog("C2");
  Instance p2 = catalog("PAIR2");
  Instance sum = catalog("SUMC2PAIR2");
  MultiplierSpace ms = multiplier_algebra(sum.A);
  CHECK(ms.dim() == 6);  // both summands unital
  for (int i = 0; i < ms.dim(); ++i) {
    Mult1 m = ms.basis_mult(i);
    // project to the components, then reassemble and compare
    auto proj = [&](Key off, int dim, const Algebra& comp) {
      return Mult1{[m, off, dim](const El1& x) {
                     El1 shifted;
                     for (const auto& [k, v] : x.c) shifted.add({k[0] + off}, v);
                     El1 img = m.lft(shifted);
                     El1 out;
                     for (const auto& [k, v] : img.c)
                       if (k[0] >= off && k[0] < off + dim) out.add({k[0] - off}, v);
                     return out;
                   },
                   [m, off, dim](const El1& x) {
                     El1 shifted;
                     for (const auto& [k, v] : x.c) shifted.add({k[0] + off}, v);
                     El1 img = m.rgt(shifted);
                     El1 out;
                     for (const auto& [k, v] : img.c)
                       if (k[0] >= off && k[0] < off + dim) out.add({k[0] - off}, v);
                     return out;
                   }};
    };
    Mult1 m0 = proj(0, 2, c2.A);
    Mult1 m1 = proj(2, 4, p2.A);
    // reassembled action agrees with m on every basis vector
    for (int b = 0; b < 6; ++b) {
      El1 whole = m.lft(el1(b));
      El1 part;
      if (b < 2)
        for (const auto& [k, v] : m0.lft(el1(b)).c) part.add({k[0]}, v);
      else
        for (const auto& [k, v] : m1.lft(el1(b - 2)).c) part.add({k[0] + 2}, v);
      CHECK(whole == part);
    }
  }
}
