#include "wmb/workbench.hpp"

namespace wmb {

using lin::Mat;
using lin::Vec;

Workbench::Workbench(const Instance& w, Sampler sampler) : w_(&w), smp_(sampler) {}

int Workbench::n() const {
  require_dense("dimension");
  return w_->A.dim();
}

void Workbench::require_dense(const char* what) const {
  if (!w_->is_dense())
    throw UnsupportedBackend(std::string(what) + ": DenseFinite backend required");
}

Vec Workbench::vec1(const El1& x) const {
  Vec v(static_cast<size_t>(n()));
  for (const auto& [k, c] : x.c) v[size_t(k[0])] = c;
  return v;
}

Vec Workbench::vec2(const El2& x) const {
  int d = n();
  Vec v(size_t(d) * d);
  for (const auto& [k, c] : x.c) v[size_t(k[0]) * d + size_t(k[1])] = c;
  return v;
}

Vec Workbench::vec3(const El3& x) const {
  int d = n();
  Vec v(size_t(d) * d * d);
  for (const auto& [k, c] : x.c)
    v[(size_t(k[0]) * d + size_t(k[1])) * d + size_t(k[2])] = c;
  return v;
}

El1 Workbench::unvec1(const Vec& v) const {
  El1 x;
  for (size_t i = 0; i < v.size(); ++i) x.add({Key(i)}, v[i]);
  return x;
}

El2 Workbench::unvec2(const Vec& v) const {
  int d = n();
  El2 x;
  for (size_t i = 0; i < v.size(); ++i) x.add({Key(i) / d, Key(i) % d}, v[i]);
  return x;
}

El3 Workbench::unvec3(const Vec& v) const {
  int d = n();
  El3 x;
  for (size_t i = 0; i < v.size(); ++i)
    x.add({Key(i) / (d * d), (Key(i) / d) % d, Key(i) % d}, v[i]);
  return x;
}

Mat Workbench::lin2_matrix(const std::function<El2(Key, Key)>& f) const {
  int d = n();
  Mat m(d * d, d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      El2 img = f(i, j);
      for (const auto& [k, v] : img.c) m.at(int(k[0]) * d + int(k[1]), i * d + j) = v;
    }
  return m;
}

const El2& Workbench::product_decomposition(Key k) {
  require_dense("product_decomposition");
  if (!prod_decomp_) {
    int d = n();
    Mat mu(d, d * d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        const El1& p = w_->A.basis_product(i, j);
        for (const auto& [kk, v] : p.c) mu.at(int(kk[0]), i * d + j) = v;
      }
    std::vector<El2> out;
    for (int t = 0; t < d; ++t) {
      auto s = lin::solve(mu, lin::unit_vec(d, t));
      if (!s.x)
        throw DegenerateAlgebra("product_decomposition: algebra is not idempotent at basis " +
                                w_->A.label(t));
      out.push_back(unvec2(*s.x));
    }
    prod_decomp_ = std::move(out);
  }
  return (*prod_decomp_)[size_t(k)];
}

El2 Workbench::product_decomposition_lin(const El1& x) {
  El2 r;
  for (const auto& [k, v] : x.c) {
    El2 t = product_decomposition(k[0]);
    t *= v;
    r += t;
  }
  return r;
}

Workbench::DeltaSpan& Workbench::span(bool left) {
  auto& slot = left ? span_l_ : span_r_;
  if (!slot) {
    int d = n();
    DeltaSpan ds;
    ds.phi = Mat(d * d, d * d * d);
    for (int x = 0; x < d; ++x)
      for (int u = 0; u < d; ++u)
        for (int v = 0; v < d; ++v) {
          El2 img = left ? w_->delta_l(el1(x), el2(u, v)) : w_->delta_r(el2(u, v), el1(x));
          int col = (x * d + u) * d + v;
          for (const auto& [k, c] : img.c) ds.phi.at(int(k[0]) * d + int(k[1]), col) = c;
        }
    ds.xi.resize(size_t(d) * d);
    slot = std::move(ds);
  }
  return *slot;
}

const El3& Workbench::delta_span_xi(Key i, Key j, bool left) {
  require_dense("delta_span");
  DeltaSpan& ds = span(left);
  int d = n();
  auto& cell = ds.xi[size_t(i) * d + size_t(j)];
  if (!cell) {
    El2 target = left ? w_->E.lft(el2(i, j)) : w_->E.rgt(el2(i, j));
    auto s = lin::solve(ds.phi, vec2(target));
    if (!s.x)
      throw std::logic_error(
          "delta_span: E-image not in the Delta-spanning family (axiom (iv) must fail)");
    El3 xi;
    for (size_t t = 0; t < s.x->size(); ++t)
      if ((*s.x)[t] != 0)
        xi.add({Key(t) / (d * d), (Key(t) / d) % d, Key(t) % d}, (*s.x)[t]);
    cell = std::move(xi);
  }
  return *cell;
}

El2 Workbench::delta_bar_l(const Mult1& m, const El2& x) {
  El2 r;
  if (dense()) {
    for (const auto& [k, c] : x.c) {
      const El3& xi = delta_span_xi(k[0], k[1], true);
      for (const auto& [t, v] : xi.c) {
        El2 term = w_->delta_l(m.lft(el1(t[0])), el2(t[1], t[2]));
        term *= c * v;
        r += term;
      }
    }
    return r;
  }
  if (!w_->group_like_l)
    throw UnsupportedBackend("delta_bar_l: lazy instance without group-like witnesses");
  for (const auto& [k, c] : x.c) {
    auto x0 = w_->group_like_l(k[0], k[1]);
    if (!x0) continue;  // E kills this term
    El2 term = w_->delta_l(m.lft(el1(*x0)), el2(k[0], k[1]));
    term *= c;
    r += term;
  }
  return r;
}

El2 Workbench::delta_bar_r(const El2& x, const Mult1& m) {
  El2 r;
  if (dense()) {
    for (const auto& [k, c] : x.c) {
      const El3& xi = delta_span_xi(k[0], k[1], false);
      for (const auto& [t, v] : xi.c) {
        El2 term = w_->delta_r(el2(t[1], t[2]), m.rgt(el1(t[0])));
        term *= c * v;
        r += term;
      }
    }
    return r;
  }
  if (!w_->group_like_r)
    throw UnsupportedBackend("delta_bar_r: lazy instance without group-like witnesses");
  for (const auto& [k, c] : x.c) {
    auto x0 = w_->group_like_r(k[0], k[1]);
    if (!x0) continue;
    El2 term = w_->delta_r(el2(k[0], k[1]), m.rgt(el1(*x0)));
    term *= c;
    r += term;
  }
  return r;
}

const MultiplierSpace& Workbench::MA() {
  require_dense("multiplier space");
  if (!ma_) ma_ = multiplier_algebra(w_->A);
  return *ma_;
}

Vec Workbench::mult1_coords(const Mult1& m) const {
  require_dense("mult1_coords");
  return mult_vec(mult1_matrices(w_->A, m));
}

El2 decompose_products(Workbench& wb, const El1& x) {
  if (wb.dense()) return wb.product_decomposition_lin(x);
  const Instance& inst = wb.w();
  if (!inst.local_decompose)
    throw UnsupportedBackend("decompose_products: lazy instance without local units hook");
  El2 dec;
  for (const auto& [k, v] : x.c) {
    El2 t = inst.local_decompose(k[0]);
    t *= v;
    dec += t;
  }
  return dec;
}

Rat eps_both(const Instance& w, const El2& x) {
  Rat r = 0;
  for (const auto& [k, v] : x.c) r += v * w.counit(k[0]) * w.counit(k[1]);
  return r;
}

}  // namespace wmb
