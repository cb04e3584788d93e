#include "wmb/algebra.hpp"

#include <sstream>

namespace wmb {

Algebra Algebra::dense(std::vector<std::string> labels, ProductFn prod) {
  Algebra a;
  a.backend_ = Backend::DenseFinite;
  a.dim_ = int(labels.size());
  a.prod_ = std::move(prod);
  auto labs = std::make_shared<std::vector<std::string>>(std::move(labels));
  a.label_ = [labs](Key k) { return (*labs)[size_t(k)]; };
  a.table_ = std::make_shared<std::vector<El1>>();
  a.table_->reserve(size_t(a.dim_) * a.dim_);
  for (int i = 0; i < a.dim_; ++i)
    for (int j = 0; j < a.dim_; ++j) a.table_->push_back(a.prod_(i, j));
  return a;
}

Algebra Algebra::lazy(ProductFn prod, EnumFn enumerate, LabelFn label) {
  Algebra a;
  a.backend_ = Backend::LazyLocallyFinite;
  a.prod_ = std::move(prod);
  a.enum_ = std::move(enumerate);
  a.label_ = std::move(label);
  a.lazy_cache_ = std::make_shared<std::map<std::pair<Key, Key>, El1>>();
  return a;
}

int Algebra::dim() const {
  if (!is_dense()) throw UnsupportedBackend("dim(): lazy algebra has no finite dimension");
  return dim_;
}

Key Algebra::key_at(std::int64_t i) const { return is_dense() ? Key(i) : enum_(i); }

const El1& Algebra::basis_product(Key a, Key b) const {
  if (table_) return (*table_)[size_t(a) * dim_ + b];
  // lazy: memoize on demand; map references stay valid under insertion
  auto& cache = *lazy_cache_;
  auto it = cache.find({a, b});
  if (it == cache.end()) it = cache.emplace(std::make_pair(a, b), prod_(a, b)).first;
  return it->second;
}

El1 Algebra::mul(const El1& x, const El1& y) const {
  El1 r;
  for (const auto& [kx, vx] : x.c)
    for (const auto& [ky, vy] : y.c) {
      const El1& p = basis_product(kx[0], ky[0]);
      Rat s = vx * vy;
      for (const auto& [kp, vp] : p.c) r.add(kp, s * vp);
    }
  return r;
}

El2 Algebra::mul2(const El2& x, const El2& y) const {
  El2 r;
  for (const auto& [kx, vx] : x.c)
    for (const auto& [ky, vy] : y.c) {
      const El1 p0 = basis_product(kx[0], ky[0]);
      if (p0.is_zero()) continue;
      const El1 p1 = basis_product(kx[1], ky[1]);
      if (p1.is_zero()) continue;
      Rat s = vx * vy;
      for (const auto& [a, va] : p0.c)
        for (const auto& [b, vb] : p1.c) r.add({a[0], b[0]}, s * va * vb);
    }
  return r;
}

El3 Algebra::mul3(const El3& x, const El3& y) const {
  El3 r;
  for (const auto& [kx, vx] : x.c)
    for (const auto& [ky, vy] : y.c) {
      const El1 p0 = basis_product(kx[0], ky[0]);
      if (p0.is_zero()) continue;
      const El1 p1 = basis_product(kx[1], ky[1]);
      if (p1.is_zero()) continue;
      const El1 p2 = basis_product(kx[2], ky[2]);
      if (p2.is_zero()) continue;
      Rat s = vx * vy;
      for (const auto& [a, va] : p0.c)
        for (const auto& [b, vb] : p1.c)
          for (const auto& [c, vc] : p2.c) r.add({a[0], b[0], c[0]}, s * va * vb * vc);
    }
  return r;
}

El2 Algebra::leg_mul2(const El2& x, int leg, const El1& a, bool from_left) const {
  El2 r;
  for (const auto& [kx, vx] : x.c)
    for (const auto& [ka, va] : a.c) {
      const El1& p = from_left ? basis_product(ka[0], kx[leg]) : basis_product(kx[leg], ka[0]);
      Rat s = vx * va;
      for (const auto& [kp, vp] : p.c) {
        auto key = kx;
        key[leg] = kp[0];
        r.add(key, s * vp);
      }
    }
  return r;
}

El3 Algebra::leg_mul3(const El3& x, int leg, const El1& a, bool from_left) const {
  El3 r;
  for (const auto& [kx, vx] : x.c)
    for (const auto& [ka, va] : a.c) {
      const El1& p = from_left ? basis_product(ka[0], kx[leg]) : basis_product(kx[leg], ka[0]);
      Rat s = vx * va;
      for (const auto& [kp, vp] : p.c) {
        auto key = kx;
        key[leg] = kp[0];
        r.add(key, s * vp);
      }
    }
  return r;
}

std::string Algebra::label(Key k) const { return label_(k); }

namespace {
void append_term(std::ostringstream& os, bool& first, const Rat& v, const std::string& basis) {
  if (!first) os << " + ";
  first = false;
  if (v == 1)
    os << basis;
  else
    os << rat_str(v) << "*" << basis;
}
}  // namespace

std::string Algebra::str(const El1& x) const {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : x.c) append_term(os, first, v, label(k[0]));
  return os.str();
}

std::string Algebra::str(const El2& x) const {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : x.c) append_term(os, first, v, label(k[0]) + "(x)" + label(k[1]));
  return os.str();
}

std::string Algebra::str(const El3& x) const {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : x.c)
    append_term(os, first, v, label(k[0]) + "(x)" + label(k[1]) + "(x)" + label(k[2]));
  return os.str();
}

Algebra Algebra::opposite() const {
  Algebra a = *this;
  ProductFn p = prod_;
  a.prod_ = [p](Key i, Key j) { return p(j, i); };
  if (lazy_cache_) a.lazy_cache_ = std::make_shared<std::map<std::pair<Key, Key>, El1>>();
  if (table_) {
    a.table_ = std::make_shared<std::vector<El1>>();
    a.table_->reserve(table_->size());
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j) a.table_->push_back((*table_)[size_t(j) * dim_ + i]);
  }
  return a;
}

Mult1 mult1_identity() {
  return {[](const El1& x) { return x; }, [](const El1& x) { return x; }};
}

Mult1 mult1_from_element(const Algebra& A, const El1& a) {
  Algebra alg = A;
  return {[alg, a](const El1& x) { return alg.mul(a, x); },
          [alg, a](const El1& x) { return alg.mul(x, a); }};
}

Mult1 mult1_scale(const Rat& s) {
  return {[s](const El1& x) {
            El1 r = x;
            return r *= s;
          },
          [s](const El1& x) {
            El1 r = x;
            return r *= s;
          }};
}

Mult1 mult1_mul(const Mult1& m1, const Mult1& m2) {
  return {[m1, m2](const El1& x) { return m1.lft(m2.lft(x)); },
          [m1, m2](const El1& x) { return m2.rgt(m1.rgt(x)); }};
}

Mult1 mult1_add(const Mult1& m1, const Mult1& m2) {
  return {[m1, m2](const El1& x) { return m1.lft(x) + m2.lft(x); },
          [m1, m2](const El1& x) { return m1.rgt(x) + m2.rgt(x); }};
}

Mult2 mult2_identity() {
  return {[](const El2& x) { return x; }, [](const El2& x) { return x; }};
}

Mult2 mult2_from_element(const Algebra& A, const El2& e) {
  Algebra alg = A;
  return {[alg, e](const El2& x) { return alg.mul2(e, x); },
          [alg, e](const El2& x) { return alg.mul2(x, e); }};
}

Mult2 mult2_mul(const Mult2& m1, const Mult2& m2) {
  return {[m1, m2](const El2& x) { return m1.lft(m2.lft(x)); },
          [m1, m2](const El2& x) { return m2.rgt(m1.rgt(x)); }};
}

Mult2 mult2_from_pair(const Mult1& m, const Mult1& n) {
  auto act = [](const Mult1& m, const Mult1& n, const El2& x, bool left) {
    El2 r;
    for (const auto& [k, v] : x.c) {
      El1 a = left ? m.lft(el1(k[0])) : m.rgt(el1(k[0]));
      El1 b = left ? n.lft(el1(k[1])) : n.rgt(el1(k[1]));
      El2 t = tens(a, b);
      t *= v;
      r += t;
    }
    return r;
  };
  return {[m, n, act](const El2& x) { return act(m, n, x, true); },
          [m, n, act](const El2& x) { return act(m, n, x, false); }};
}

Mult3 mult3_mul(const Mult3& m1, const Mult3& m2) {
  return {[m1, m2](const El3& x) { return m1.lft(m2.lft(x)); },
          [m1, m2](const El3& x) { return m2.rgt(m1.rgt(x)); }};
}

namespace {
// Apply a Mult2 to two designated legs of an El3, the third leg untouched.
El3 apply_on_legs(const Mult2& m, const El3& x, int keep, bool left) {
  El3 r;
  for (const auto& [k, v] : x.c) {
    El2 two = keep == 2 ? el2(k[0], k[1]) : el2(k[1], k[2]);
    El2 img = left ? m.lft(two) : m.rgt(two);
    for (const auto& [ki, vi] : img.c) {
      std::array<Key, 3> key = keep == 2 ? std::array<Key, 3>{ki[0], ki[1], k[2]}
                                         : std::array<Key, 3>{k[0], ki[0], ki[1]};
      r.add(key, v * vi);
    }
  }
  return r;
}
}  // namespace

Mult3 mult3_from12(const Mult2& m) {
  return {[m](const El3& x) { return apply_on_legs(m, x, 2, true); },
          [m](const El3& x) { return apply_on_legs(m, x, 2, false); }};
}

Mult3 mult3_from23(const Mult2& m) {
  return {[m](const El3& x) { return apply_on_legs(m, x, 0, true); },
          [m](const El3& x) { return apply_on_legs(m, x, 0, false); }};
}

TensorAlgebra tensor_algebra(const Algebra& A, const Algebra& B) {
  if (!A.is_dense() || !B.is_dense())
    throw UnsupportedBackend("tensor_algebra: dense factors required");
  TensorAlgebra t;
  t.stride = B.dim();
  std::vector<std::string> labels;
  labels.reserve(size_t(A.dim()) * B.dim());
  for (int i = 0; i < A.dim(); ++i)
    for (int j = 0; j < B.dim(); ++j) labels.push_back(A.label(i) + "(x)" + B.label(j));
  Key stride = t.stride;
  auto prod = [A, B, stride](Key x, Key y) {
    El1 r;
    const El1 p = A.basis_product(x / stride, y / stride);
    if (p.is_zero()) return r;
    const El1 q = B.basis_product(x % stride, y % stride);
    for (const auto& [kp, vp] : p.c)
      for (const auto& [kq, vq] : q.c) r.add({kp[0] * stride + kq[0]}, vp * vq);
    return r;
  };
  t.alg = Algebra::dense(std::move(labels), prod);
  return t;
}

El2 to_el2(const TensorAlgebra& t, const El1& x) {
  El2 r;
  for (const auto& [k, v] : x.c) {
    auto [i, j] = t.decode(k[0]);
    r.add({i, j}, v);
  }
  return r;
}

El1 from_el2(const TensorAlgebra& t, const El2& x) {
  El1 r;
  for (const auto& [k, v] : x.c) r.add({t.encode(k[0], k[1])}, v);
  return r;
}

}  // namespace wmb
