#pragma once

#include "wmb/instance.hpp"
#include "wmb/presentation.hpp"

namespace wmb {

struct FiberNotFinite : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Span construction: the category algebra with Delta(a) = a (x) a,
// eps(a) = 1, and E the equal-target / equal-source projection.
Instance span_wmb(const CategoryPresentation& cat);

// Functional construction: finite-support functionals on the arrow set with
// the pointwise product; Delta(f)(g (x) h) = sum g(p)h(q)f(pq) d_p (x) d_q.
Instance functional_wmb(const CategoryPresentation& cat);

// A unital weak bialgebra presented by tables; E is Delta applied to the unit.
Instance from_unital_weak_bialgebra(std::string name, std::vector<std::string> labels,
                                    std::function<El1(Key, Key)> prod,
                                    std::vector<El2> delta, std::vector<Rat> eps, El1 unit);

// Finite direct sum of dense instances (componentwise structure).
Instance direct_sum(std::string name, const std::vector<Instance>& parts);

// Locally finite groupoid-style data with explicit finiteness witnesses for
// the fibers {c : c a = b} and {c : a c = b}.
struct LazyGroupoidSpec {
  std::function<Key(std::int64_t)> enumerate;
  std::function<std::string(Key)> label;
  std::function<bool(Key, Key)> composable;  // ab defined iff src(a) = tgt(b)
  std::function<Key(Key, Key)> compose;
  std::function<Key(Key)> inverse;  // may be null (non-groupoid)
  std::function<bool(Key)> is_identity;
  std::function<Key(Key)> id_at_tgt, id_at_src;
  std::function<std::vector<Key>(Key, Key)> left_fiber;   // {c : ca = b}
  std::function<std::vector<Key>(Key, Key)> right_fiber;  // {c : ac = b}
};

Instance lazy_span(const LazyGroupoidSpec& g, std::string name);
Instance lazy_functional(const LazyGroupoidSpec& g, std::string name);

// Named catalog used across the test suites.
//   PAIR2      span of the pair groupoid on {1,2}
//   IDEM2      span of the monoid {e,x | x^2 = x}
//   C2         group algebra of Z/2
//   CYC3MON    span of the cyclic monoid {e,x,x^2 | x^3 = x}
//   FPAIR2     functionals on the pair groupoid on {1,2}
//   ZFUN       finite-support functionals on the group Z (lazy)
//   SUMC2PAIR2 direct sum C2 (+) PAIR2
//   SUMINF_C2  span of a countable disjoint union of Z/2 groups (lazy)
Instance catalog(const std::string& name);
std::vector<std::string> catalog_names();

// Embedded .cat sources for the presentation-backed catalog entries.
const std::string& catalog_cat_source(const std::string& name);

}  // namespace wmb
