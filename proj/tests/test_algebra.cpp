#include "doctest.h"
#include "wmb/catalog.hpp"
#include "wmb/multiplier.hpp"

using namespace wmb;

TEST_CASE("pair groupoid span products") {
  Instance w = catalog("PAIR2");
  const Algebra& A = w.A;
  int a12 = 1, a21 = 2, a11 = 0;  // catalog order a11 a12 a21 a22
  CHECK(A.label(a12) == "a12");
  CHECK(A.mul(el1(a12), el1(a21)) == el1(a11));
  CHECK(A.mul(el1(a12), el1(a12)).is_zero());
}

TEST_CASE("C2 group algebra") {
  Instance w = catalog("C2");
  CHECK(w.A.mul(el1(1), el1(1)) == el1(0));  // g.g = e
}

TEST_CASE("check_algebra on catalog instances") {
  for (const char* name : {"PAIR2", "IDEM2", "C2", "CYC3MON", "FPAIR2", "SUMC2PAIR2"}) {
    Instance w = catalog(name);
    AlgebraReport rep = check_algebra(w.A);
    CAPTURE(name);
    CHECK(rep.associative);
    CHECK(rep.idempotent);
    CHECK(rep.nondegenerate);
    CHECK(!rep.sampled);
  }
}

TEST_CASE("a 1-dim square-zero algebra is not idempotent") {
  Algebra A = Algebra::dense({"x"}, [](Key, Key) { return El1{}; });
  AlgebraReport rep = check_algebra(A);
  CHECK(!rep.idempotent);
  CHECK(!rep.nondegenerate);
}

TEST_CASE("span{e11, e12} of 2x2 matrix units is degenerate") {
  // e11 e11 = e11, e11 e12 = e12, e12 e11 = 0, e12 e12 = 0
  Algebra A = Algebra::dense({"e11", "e12"}, [](Key i, Key j) {
    if (i == 0 && j == 0) return el1(0);
    if (i == 0 && j == 1) return el1(1);
    return El1{};
  });
  AlgebraReport rep = check_algebra(A);
  CHECK(rep.associative);
  CHECK(!rep.nondegenerate);
  CHECK(rep.witness.find("e12") != std::string::npos);
}

TEST_CASE("tensor square of PAIR2 has dim 16 and factorwise product") {
  Instance w = catalog("PAIR2");
  TensorAlgebra t = tensor_algebra(w.A, w.A);
  CHECK(t.alg.dim() == 16);
  // (a12 (x) a12)(a21 (x) a21) = a11 (x) a11
  El1 p = t.alg.mul(el1(t.encode(1, 1)), el1(t.encode(2, 2)));
  CHECK(p == el1(t.encode(0, 0)));
}

TEST_CASE("tw is involutive") {
  El2 x = el2(1, 2) + el2(3, 4);
  x *= Rat(2, 3);
  CHECK(tw(tw(x)) == x);
  CHECK(tw(el2(1, 2)) == el2(2, 1));
}

TEST_CASE("multiplier product and element actions") {
  Instance w = catalog("PAIR2");
  const Algebra& A = w.A;
  Mult1 m = mult1_from_element(A, el1(1));  // a12
  Mult1 mm = mult1_mul(m, m);
  // a12 . a12 = 0 so m*m acts as zero
  for (int i = 0; i < 4; ++i) {
    CHECK(mm.lft(el1(i)).is_zero());
    CHECK(mm.rgt(el1(i)).is_zero());
  }
  // a (lam, rho) = rho(a) and (lam, rho) a = lam(a) against the embedding
  El1 a = el1(0) + el1(3);
  Mult1 e = mult1_from_element(A, a);
  CHECK(e.lft(el1(1)) == A.mul(a, el1(1)));
  CHECK(e.rgt(el1(1)) == A.mul(el1(1), a));
}

TEST_CASE("delta13 on a span instance acts as ab (x) c (x) ad") {
  Instance w = catalog("PAIR2");
  // Delta(a) = a (x) a; Delta_13(a)(b(x)c(x)d) = ab (x) c (x) ad
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) {
          El3 lhs = w.delta13_l(el1(a), el3(b, c, d));
          El3 rhs;
          El1 ab = w.A.basis_product(a, b), ad = w.A.basis_product(a, d);
          for (const auto& [k1, v1] : ab.c)
            for (const auto& [k2, v2] : ad.c) rhs.add({k1[0], c, k2[0]}, v1 * v2);
          CHECK(lhs == rhs);
        }
}

TEST_CASE("opposite algebra reverses products") {
  Instance w = catalog("PAIR2");
  Algebra op = w.A.opposite();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(op.basis_product(i, j) == w.A.basis_product(j, i));
}
