#include "doctest.h"
#include "wmb/catalog.hpp"
#include "wmb/presentation.hpp"

using namespace wmb;

TEST_CASE("PAIR2 source parses to 2 objects, 4 arrows, groupoid") {
  CategoryPresentation p = parse_presentation(catalog_cat_source("PAIR2"));
  CHECK(p.objects.size() == 2);
  CHECK(p.arrows.size() == 4);
  CHECK(p.groupoid());
}

TEST_CASE("IDEM2 parses and is not a groupoid") {
  CategoryPresentation p = parse_presentation(catalog_cat_source("IDEM2"));
  CHECK(p.objects.size() == 1);
  CHECK(p.arrows.size() == 2);
  CHECK(!p.groupoid());
}

TEST_CASE("composition of non-composable arrows is rejected") {
  std::string bad =
      "category bad\n"
      "objects 1 2\n"
      "arrow f : 1 -> 2\n"
      "arrow i1 : 1 -> 1\n"
      "arrow i2 : 2 -> 2\n"
      "identity 1 = i1\n"
      "identity 2 = i2\n"
      "compose f * f = f\n";  // tgt(f) != src(f)
  CHECK_THROWS_AS(parse_presentation(bad), ValidationError);
}

TEST_CASE("missing composite is rejected") {
  std::string bad =
      "category bad\n"
      "objects 1\n"
      "arrow e : 1 -> 1\n"
      "arrow x : 1 -> 1\n"
      "identity 1 = e\n";  // x * x undeclared
  CHECK_THROWS_AS(parse_presentation(bad), ValidationError);
}

TEST_CASE("non-associative table is rejected with the offending triple") {
  // three non-identity endo-arrows with a broken table
  std::string bad =
      "category bad\n"
      "objects 1\n"
      "arrow e : 1 -> 1\n"
      "arrow x : 1 -> 1\n"
      "arrow y : 1 -> 1\n"
      "identity 1 = e\n"
      "compose x * x = y\n"
      "compose x * y = e\n"
      "compose y * x = x\n"
      "compose y * y = y\n";
  // (x x) x = y x = x but x (x x) = x y = e
  try {
    parse_presentation(bad);
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("non-associative") != std::string::npos);
    CHECK(std::string(e.what()).find("x") != std::string::npos);
  }
}

TEST_CASE("syntax errors carry line and column") {
  try {
    parse_presentation("category c\nobjects 1\narrow f 1 -> 1\n");
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.line == 3);
    CHECK(e.col > 0);
  }
  CHECK_THROWS_AS(parse_presentation("frobnicate\n"), SyntaxError);
  CHECK_THROWS_AS(parse_presentation("category c\nobjects 1 1\n"), SyntaxError);
}

TEST_CASE("bad inverses are rejected") {
  std::string bad =
      "category bad\n"
      "objects 1\n"
      "arrow e : 1 -> 1\n"
      "arrow x : 1 -> 1\n"
      "identity 1 = e\n"
      "compose x * x = x\n"
      "inverse x = x\n";  // x x = x != e
  CHECK_THROWS_AS(parse_presentation(bad), ValidationError);
}

TEST_CASE("parse . render round-trips on the catalog presentations") {
  for (const char* name : {"PAIR2", "IDEM2", "C2", "CYC3MON"}) {
    CategoryPresentation p = parse_presentation(catalog_cat_source(name));
    CategoryPresentation q = parse_presentation(render_presentation(p));
    CAPTURE(name);
    CHECK(p.objects == q.objects);
    REQUIRE(p.arrows.size() == q.arrows.size());
    for (size_t i = 0; i < p.arrows.size(); ++i) {
      CHECK(p.arrows[i].id == q.arrows[i].id);
      CHECK(p.arrows[i].src == q.arrows[i].src);
      CHECK(p.arrows[i].tgt == q.arrows[i].tgt);
    }
    CHECK(p.compose == q.compose);
    CHECK(p.identity_of == q.identity_of);
    CHECK(p.inverse_of == q.inverse_of);
  }
}

TEST_CASE("comments and blank lines are ignored") {
  std::string src =
      "# a comment\n"
      "category c  # trailing comment\n"
      "\n"
      "objects 1\n"
      "arrow e : 1 -> 1\n"
      "identity 1 = e\n";
  CategoryPresentation p = parse_presentation(src);
  CHECK(p.name == "c");
  CHECK(p.arrows.size() == 1);
}
