#include "wmb/instance.hpp"

namespace wmb {

El2 Instance::t(int i, Key a, Key b) const {
  switch (i) {
    case 1:
      return tm.t1(a, b);
    case 2:
      return tm.t2(a, b);
    case 3:
      if (!regular || !tm.t3) throw NotRegular("T3 requires a regular instance");
      return tm.t3(a, b);
    case 4:
      if (!regular || !tm.t4) throw NotRegular("T4 requires a regular instance");
      return tm.t4(a, b);
    default:
      throw std::invalid_argument("t: index must be 1..4");
  }
}

El2 Instance::t_lin(int i, const El1& a, const El1& b) const {
  El2 r;
  for (const auto& [ka, va] : a.c)
    for (const auto& [kb, vb] : b.c) {
      El2 term = t(i, ka[0], kb[0]);
      term *= va * vb;
      r += term;
    }
  return r;
}

El2 Instance::delta_l(const El1& a, const El2& w) const {
  // Delta(a)(x (x) y) = T1(a, y).(x (x) 1)
  El2 r;
  for (const auto& [kw, vw] : w.c) {
    El2 term = A.leg_mul2(t_lin(1, a, el1(kw[1])), 0, el1(kw[0]), false);
    term *= vw;
    r += term;
  }
  return r;
}

El2 Instance::delta_r(const El2& w, const El1& a) const {
  // (x (x) y)Delta(a) = (1 (x) y).T2(x, a)
  El2 r;
  for (const auto& [kw, vw] : w.c) {
    El2 term = A.leg_mul2(t_lin(2, el1(kw[0]), a), 1, el1(kw[1]), true);
    term *= vw;
    r += term;
  }
  return r;
}

Mult2 Instance::delta_mult(const El1& a) const {
  const Instance* self = this;
  El1 ac = a;
  return {[self, ac](const El2& w) { return self->delta_l(ac, w); },
          [self, ac](const El2& w) { return self->delta_r(w, ac); }};
}

El2 Instance::delta_op_l(const El1& a, const El2& w) const { return tw(delta_l(a, tw(w))); }

El2 Instance::delta_op_r(const El2& w, const El1& a) const { return tw(delta_r(tw(w), a)); }

El3 Instance::delta13_l(const El1& a, const El3& w) const {
  // Delta_13(a)(b (x) c (x) d) = (id (x) tw)(Delta(a)(b (x) d) (x) c)
  El3 r;
  for (const auto& [k, v] : w.c) {
    El2 two = delta_l(a, el2(k[0], k[2]));
    for (const auto& [kt, vt] : two.c) r.add({kt[0], k[1], kt[1]}, v * vt);
  }
  return r;
}

El3 Instance::delta13_r(const El3& w, const El1& a) const {
  El3 r;
  for (const auto& [k, v] : w.c) {
    El2 two = delta_r(el2(k[0], k[2]), a);
    for (const auto& [kt, vt] : two.c) r.add({kt[0], k[1], kt[1]}, v * vt);
  }
  return r;
}

Rat Instance::eps(const El1& x) const {
  Rat r = 0;
  for (const auto& [k, v] : x.c) r += v * counit(k[0]);
  return r;
}

El1 Instance::eps1(const El2& x) const {
  El1 r;
  for (const auto& [k, v] : x.c) r.add({k[1]}, v * counit(k[0]));
  return r;
}

El1 Instance::eps2(const El2& x) const {
  El1 r;
  for (const auto& [k, v] : x.c) r.add({k[0]}, v * counit(k[1]));
  return r;
}

Mult1 Instance::pi(BaseMap kind, Key a) const { return pi_lin(kind, el1(a)); }

Mult1 Instance::pi_lin(BaseMap kind, const El1& a) const {
  const Instance* w = this;
  El1 ac = a;
  switch (kind) {
    case BaseMap::BarPiL:
      // lft: b -> (eps (x) id)T2(a (x) b),  rgt: b -> (eps (x) id)((a (x) b)E)
      return {[w, ac](const El1& b) { return w->eps1(w->t_lin(2, ac, b)); },
              [w, ac](const El1& b) { return w->eps1(w->E.rgt(tens(ac, b))); }};
    case BaseMap::BarPiR:
      // lft: b -> (id (x) eps)(E(b (x) a)),  rgt: b -> (id (x) eps)T1(b (x) a)
      return {[w, ac](const El1& b) { return w->eps2(w->E.lft(tens(b, ac))); },
              [w, ac](const El1& b) { return w->eps2(w->t_lin(1, b, ac)); }};
    case BaseMap::PiL:
      if (!regular) throw NotRegular("PiL requires a regular instance");
      // lft: b -> (eps (x) id)(E(a (x) b)),  rgt: b -> (eps (x) id)T4(a (x) b)
      return {[w, ac](const El1& b) { return w->eps1(w->E.lft(tens(ac, b))); },
              [w, ac](const El1& b) { return w->eps1(w->t_lin(4, ac, b)); }};
    case BaseMap::PiR:
      if (!regular) throw NotRegular("PiR requires a regular instance");
      // lft: b -> (id (x) eps)T3(b (x) a),  rgt: b -> (id (x) eps)((b (x) a)E)
      return {[w, ac](const El1& b) { return w->eps2(w->t_lin(3, b, ac)); },
              [w, ac](const El1& b) { return w->eps2(w->E.rgt(tens(b, ac))); }};
  }
  throw std::logic_error("pi_lin: unreachable");
}

}  // namespace wmb
