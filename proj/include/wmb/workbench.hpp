#pragma once

#include <optional>

#include "wmb/instance.hpp"
#include "wmb/matrix.hpp"
#include "wmb/multiplier.hpp"
#include "wmb/sampler.hpp"

namespace wmb {

// Evaluation context around one instance: flattening between elements and
// coordinate vectors, spanning-set decompositions, and cached derived data.
// All caches are built on first use; dense-only members throw
// UnsupportedBackend on the lazy backend.
class Workbench {
 public:
  Workbench(const Instance& w, Sampler sampler);

  const Instance& w() const { return *w_; }
  const Sampler& sampler() const { return smp_; }
  bool dense() const { return w_->is_dense(); }
  int n() const;

  // --- flattening (dense) -----------------------------------------------

  lin::Vec vec1(const El1& x) const;
  lin::Vec vec2(const El2& x) const;
  lin::Vec vec3(const El3& x) const;
  El1 unvec1(const lin::Vec& v) const;
  El2 unvec2(const lin::Vec& v) const;
  El3 unvec3(const lin::Vec& v) const;

  // n^2 x n^2 matrix of a linear endomap of A(x)A given on basis pairs.
  lin::Mat lin2_matrix(const std::function<El2(Key, Key)>& f) const;

  // --- decompositions (dense) ---------------------------------------------

  // Some xi in A(x)A with mu(xi) = e_k; exists since A is idempotent.
  const El2& product_decomposition(Key k);
  El2 product_decomposition_lin(const El1& x);

  // --- extended comultiplication ------------------------------------------

  // DeltaBar(m).x and x.DeltaBar(m) for a multiplier m on A, computed by
  // decomposing E.x (resp. x.E) over the spanning family Delta(a)(u (x) v)
  // (resp. (u (x) v)Delta(a)); on lazy instances via the group-like hooks.
  El2 delta_bar_l(const Mult1& m, const El2& x);
  El2 delta_bar_r(const El2& x, const Mult1& m);

  // --- multiplier space (dense) ---------------------------------------------

  const MultiplierSpace& MA();

  // 2n^2-coordinate vector of a multiplier on A (lft matrix then rgt matrix).
  lin::Vec mult1_coords(const Mult1& m) const;

  // --- base maps -------------------------------------------------------------

  Mult1 pi(BaseMap kind, Key a) const { return w_->pi(kind, a); }

  // --- formatting ------------------------------------------------------------

  std::string str(const El1& x) const { return w_->A.str(x); }
  std::string str(const El2& x) const { return w_->A.str(x); }
  std::string str(const El3& x) const { return w_->A.str(x); }

 private:
  const Instance* w_;
  Sampler smp_;
  std::optional<std::vector<El2>> prod_decomp_;
  struct DeltaSpan {
    lin::Mat phi;                      // n^3 -> n^2 spanning matrix
    std::vector<std::optional<El3>> xi;  // per basis pair, lazily solved
  };
  std::optional<DeltaSpan> span_l_, span_r_;
  std::optional<MultiplierSpace> ma_;

  void require_dense(const char* what) const;
  DeltaSpan& span(bool left);
  const El3& delta_span_xi(Key i, Key j, bool left);
};

// (eps (x) eps) of an element of A(x)A.
Rat eps_both(const Instance& w, const El2& x);

// A product decomposition xi with mu(xi) = x, on either backend (generic
// solve on dense, the local-units hook on lazy).
El2 decompose_products(Workbench& wb, const El1& x);

}  // namespace wmb
