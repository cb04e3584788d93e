#include "doctest.h"
#include "wmb/catalog.hpp"
#include "wmb/laws.hpp"

using namespace wmb;

namespace {

LawReport run_all(const std::string& name) {
  Instance w = catalog(name);
  Workbench wb(w, Sampler(0, 200));
  return verify_axioms(wb);
}

}  // namespace

TEST_CASE("axiom suite passes exhaustively on the dense catalog") {
  for (const char* name : {"PAIR2", "IDEM2", "C2", "CYC3MON", "FPAIR2", "SUMC2PAIR2"}) {
    CAPTURE(name);
    LawReport rep = run_all(name);
    for (const auto& r : rep.results) {
      CAPTURE(r.id);
      CAPTURE(r.witness);
      CHECK(!r.failed());
      CHECK(!r.sampled);
    }
  }
}

TEST_CASE("t-map values on PAIR2 match the composition table") {
  Instance w = catalog("PAIR2");
  int a11 = 0, a12 = 1, a21 = 2;
  CHECK(w.t(1, a12, a21) == el2(a12, a11));  // T1(a (x) b) = a (x) ab
  CHECK(w.t(2, a12, a12).is_zero());         // T2(a (x) b) = ab (x) b, a12 a12 = 0
}

TEST_CASE("t-maps gate on regularity") {
  Instance w = catalog("PAIR2");
  w.regular = false;
  CHECK_THROWS_AS(w.t(3, 0, 0), NotRegular);
}

TEST_CASE("corrupted counit fails AX-iii with a witness") {
  Instance w = catalog("PAIR2");
  w.counit = [](Key) { return Rat(0); };
  Workbench wb(w, Sampler(0, 100));
  LawReport rep = verify(wb, {"ALG-assoc", "ALG-idem", "ALG-nondeg", "E-mult", "AX-iii"});
  const LawResult* r = rep.find("AX-iii");
  REQUIRE(r);
  CHECK(r->failed());
  CHECK(!r->witness.empty());
}

TEST_CASE("counit uniqueness on dense instances") {
  for (const char* name : {"PAIR2", "FPAIR2", "C2", "IDEM2"}) {
    Instance w = catalog(name);
    Workbench wb(w, Sampler(0, 100));
    CounitSolve cs = solve_counit(wb);
    CAPTURE(name);
    CHECK(cs.solution_dim == 0);
    CHECK(cs.matches_declared);
  }
}

TEST_CASE("vi equivalents agree on catalog instances and detect a broken counit") {
  for (const char* name : {"PAIR2", "FPAIR2", "C2", "IDEM2", "CYC3MON", "SUMC2PAIR2"}) {
    Instance w = catalog(name);
    Workbench wb(w, Sampler(0, 100));
    ViEquivalents eq = vi_equivalents(wb);
    CAPTURE(name);
    CHECK(eq.agree);
    for (const auto& [nm, val] : eq.statements) {
      CAPTURE(nm);
      CHECK(val);
    }
  }
  // eps'(e) = 1, eps'(g) = 0 on C2: statement (4) must fail
  Instance w = catalog("C2");
  w.counit = [](Key k) { return Rat(k == 0 ? 1 : 0); };
  Workbench wb(w, Sampler(0, 100));
  ViEquivalents eq = vi_equivalents(wb);
  bool vi4 = false;
  for (const auto& [nm, val] : eq.statements)
    if (nm == "vi-4") vi4 = val;
  CHECK(!vi4);
}

TEST_CASE("classification of the catalog") {
  auto classify_of = [](const char* name) {
    Instance w = catalog(name);
    Workbench wb(w, Sampler(0, 100));
    return classify(wb);
  };
  Classification p2 = classify_of("PAIR2");
  CHECK(p2.regular);
  CHECK(p2.left_full);
  CHECK(p2.right_full);
  CHECK(!p2.mult_bialgebra);
  CHECK(p2.full_criteria_agree);
  CHECK(p2.mba_criteria_agree);

  Classification i2 = classify_of("IDEM2");
  CHECK(i2.mult_bialgebra);
  CHECK(i2.left_full);
  CHECK(i2.right_full);

  Classification c2 = classify_of("C2");
  CHECK(c2.mult_bialgebra);
  CHECK(c2.mba_criteria_agree);

  Classification f2 = classify_of("FPAIR2");
  CHECK(!f2.mult_bialgebra);
  CHECK(f2.left_full);
  CHECK(f2.right_full);

  Classification sum = classify_of("SUMC2PAIR2");
  CHECK(!sum.mult_bialgebra);
  CHECK(sum.left_full);
  CHECK(sum.right_full);
}

TEST_CASE("corrupting E produces an AX-iv failure") {
  Instance w = catalog("C2");
  // E' = p (x) p with p = (e+g)/2, an idempotent different from 1 (x) 1
  El1 p = el1(0) + el1(1);
  p *= Rat(1, 2);
  El2 pp = tens(p, p);
  w.E = mult2_from_element(w.A, pp);
  Workbench wb(w, Sampler(0, 100));
  LawReport rep = verify_axioms(wb);
  const LawResult* r = rep.find("AX-iv");
  REQUIRE(r);
  CHECK(r->failed());
  CHECK(!r->witness.empty());
}

TEST_CASE("cross-constructor consistency: PAIR2 as a unital weak bialgebra") {
  Instance span = catalog("PAIR2");
  std::vector<El2> delta;
  std::vector<Rat> eps;
  for (int a = 0; a < 4; ++a) {
    delta.push_back(el2(a, a));
    eps.push_back(1);
  }
  Algebra A = span.A;
  Instance unital = from_unital_weak_bialgebra(
      "PAIR2-unital", {"a11", "a12", "a21", "a22"},
      [A](Key i, Key j) { return A.basis_product(i, j); }, delta, eps, el1(0) + el1(3));
  Workbench wb1(span, Sampler(0, 100)), wb2(unital, Sampler(0, 100));
  LawReport r1 = verify_axioms(wb1), r2 = verify_axioms(wb2);
  REQUIRE(r1.results.size() == r2.results.size());
  for (size_t i = 0; i < r1.results.size(); ++i) {
    CAPTURE(r1.results[i].id);
    CHECK(r1.results[i].status == r2.results[i].status);
  }
  // E = Delta(1) agrees with the span instance's E on basis pairs
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      CHECK(span.E.lft(el2(i, j)) == unital.E.lft(el2(i, j)));
      CHECK(span.E.rgt(el2(i, j)) == unital.E.rgt(el2(i, j)));
    }
}

TEST_CASE("a two-object groupoid algebra fed as unital weak bialgebra has E != 1(x)1") {
  // Z/2 u Z/2: unit = e0 + e1, Delta group-like
  Instance sum = direct_sum("Z2uZ2", {catalog("C2"), catalog("C2")});
  std::vector<El2> delta;
  std::vector<Rat> eps;
  for (int a = 0; a < 4; ++a) {
    delta.push_back(el2(a, a));
    eps.push_back(1);
  }
  Algebra A = sum.A;
  std::vector<std::string> labels;
  for (int i = 0; i < 4; ++i) labels.push_back(sum.A.label(i));
  Instance unital = from_unital_weak_bialgebra(
      "Z2uZ2-unital", labels, [A](Key i, Key j) { return A.basis_product(i, j); }, delta, eps,
      el1(0) + el1(2));
  Workbench wb(unital, Sampler(0, 100));
  LawReport rep = verify_axioms(wb);
  CHECK(rep.all_passed());
  Classification cl = classify(wb);
  CHECK(!cl.mult_bialgebra);  // E = Delta(1) != 1 (x) 1
}

TEST_CASE("direct sum passes iff components pass") {
  LawReport rep = run_all("SUMC2PAIR2");
  CHECK(rep.all_passed());
}
