#pragma once

#include <optional>

#include "wmb/algebra.hpp"

namespace wmb {

struct NotRegular : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The four one-sided evaluations of the comultiplication, on basis keys:
//   t1(a,b) = Delta(a)(1(x)b)   t2(a,b) = (a(x)1)Delta(b)
//   t3(a,b) = (1(x)b)Delta(a)   t4(a,b) = Delta(b)(a(x)1)
// t3/t4 are present exactly on regular instances.
struct TMaps {
  std::function<El2(Key, Key)> t1, t2, t3, t4;
};

enum class BaseMap { PiL, PiR, BarPiL, BarPiR };

// A weak multiplier bialgebra candidate: algebra, T-maps, counit and the
// idempotent multiplier E, plus backend-dependent declarations. Whether the
// axioms actually hold is decided by the law suite, never assumed.
class Instance {
 public:
  std::string name;
  Algebra A;
  TMaps tm;
  std::function<Rat(Key)> counit;
  Mult2 E;
  bool regular = false;

  // Lazy instances declare what dense instances compute.
  std::optional<bool> decl_left_full, decl_right_full, decl_mult_bialgebra;

  // Optional declared antipode (verified, not reconstructed, on lazy).
  std::function<Mult1(Key)> declared_antipode;

  // Witnesses x with E(e_p (x) e_q) = Delta(x)(e_p (x) e_q) and
  // (e_p (x) e_q)E = (e_p (x) e_q)Delta(x), for instances whose E acts
  // diagonally on basis pairs (span/functional constructions). Used to
  // apply extended maps on lazy backends.
  std::function<std::optional<Key>(Key, Key)> group_like_l, group_like_r;

  // xi in A(x)A with mu(xi) = e_k; on the dense backend the generic solve
  // is available instead, lazy instances supply this (local units).
  std::function<El2(Key)> local_decompose;

  bool is_dense() const { return A.is_dense(); }

  // --- comultiplication evaluation -------------------------------------

  El2 t(int i, Key a, Key b) const;
  El2 t_lin(int i, const El1& a, const El1& b) const;

  // Delta(a).w and w.Delta(a) for w in A(x)A; uses only t1/t2.
  El2 delta_l(const El1& a, const El2& w) const;
  El2 delta_r(const El2& w, const El1& a) const;
  Mult2 delta_mult(const El1& a) const;

  // Delta^op(a).w = tw(Delta(a).tw(w)) and its right counterpart.
  El2 delta_op_l(const El1& a, const El2& w) const;
  El2 delta_op_r(const El2& w, const El1& a) const;

  // Delta_13(a) acting on b (x) c (x) d with 1 allowed in the middle leg.
  El3 delta13_l(const El1& a, const El3& w) const;
  El3 delta13_r(const El3& w, const El1& a) const;

  // --- counit ------------------------------------------------------------

  Rat eps(const El1& x) const;
  El1 eps1(const El2& x) const;  // (eps (x) id)
  El1 eps2(const El2& x) const;  // (id (x) eps)

  // --- base-algebra maps ---------------------------------------------------

  // The paper's two defining formulas packaged as one multiplier; PiL/PiR
  // require the regular flag.
  Mult1 pi(BaseMap kind, Key a) const;
  Mult1 pi_lin(BaseMap kind, const El1& a) const;

  // --- multiplication shortcut ---------------------------------------------

  El1 mul(const El1& x, const El1& y) const { return A.mul(x, y); }
};

}  // namespace wmb
