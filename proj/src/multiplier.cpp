#include "wmb/multiplier.hpp"

#include <set>

#include "wmb/sampler.hpp"

namespace wmb {

using lin::Mat;
using lin::Vec;

namespace {

Vec vec_of_el1(const Algebra& A, const El1& x) {
  Vec v(A.dim());
  for (const auto& [k, c] : x.c) v[size_t(k[0])] = c;
  return v;
}

El1 el1_of_vec(const Vec& v) {
  El1 x;
  for (size_t i = 0; i < v.size(); ++i) x.add({Key(i)}, v[i]);
  return x;
}

}  // namespace

MultMatrices mult1_matrices(const Algebra& A, const Mult1& m) {
  int n = A.dim();
  MultMatrices mm{Mat(n, n), Mat(n, n)};
  for (int j = 0; j < n; ++j) {
    El1 l = m.lft(el1(j)), r = m.rgt(el1(j));
    for (const auto& [k, v] : l.c) mm.lft.at(int(k[0]), j) = v;
    for (const auto& [k, v] : r.c) mm.rgt.at(int(k[0]), j) = v;
  }
  return mm;
}

MultMatrices mult2_matrices(const Algebra& A, const Mult2& m) {
  int n = A.dim();
  int nn = n * n;
  MultMatrices mm{Mat(nn, nn), Mat(nn, nn)};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int col = i * n + j;
      El2 l = m.lft(el2(i, j)), r = m.rgt(el2(i, j));
      for (const auto& [k, v] : l.c) mm.lft.at(int(k[0]) * n + int(k[1]), col) = v;
      for (const auto& [k, v] : r.c) mm.rgt.at(int(k[0]) * n + int(k[1]), col) = v;
    }
  return mm;
}

Mult1 mult1_from_matrices(const Algebra& A, const MultMatrices& mm) {
  const Algebra* pa = &A;
  Mat L = mm.lft, R = mm.rgt;
  return {[pa, L](const El1& x) { return el1_of_vec(L.apply(vec_of_el1(*pa, x))); },
          [pa, R](const El1& x) { return el1_of_vec(R.apply(vec_of_el1(*pa, x))); }};
}

Vec mult_vec(const MultMatrices& mm) {
  int n = mm.lft.rows();
  Vec v;
  v.reserve(size_t(2) * n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) v.push_back(mm.lft.at(i, j));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) v.push_back(mm.rgt.at(i, j));
  return v;
}

Mult1 MultiplierSpace::basis_mult(int i) const { return mult1_from_matrices(*A_, basis_[i]); }

std::optional<Vec> MultiplierSpace::coordinates(const MultMatrices& mm) const {
  auto s = lin::solve(basis_matrix_, mult_vec(mm));
  return s.x;
}

std::optional<Vec> MultiplierSpace::coordinates(const Mult1& m) const {
  return coordinates(mult1_matrices(*A_, m));
}

MultMatrices MultiplierSpace::embed(const El1& a) const {
  return mult1_matrices(*A_, mult1_from_element(*A_, a));
}

std::optional<El1> MultiplierSpace::as_element(const MultMatrices& mm) const {
  auto s = lin::solve(embed_matrix_, mult_vec(mm));
  if (!s.x) return std::nullopt;
  return el1_of_vec(*s.x);
}

std::optional<El1> MultiplierSpace::as_element(const Mult1& m) const {
  return as_element(mult1_matrices(*A_, m));
}

Vec MultiplierSpace::unit_coordinates() const {
  int n = A_->dim();
  MultMatrices one{Mat::identity(n), Mat::identity(n)};
  auto c = coordinates(one);
  if (!c) throw std::logic_error("MultiplierSpace: unit multiplier not in the computed space");
  return *c;
}

MultiplierSpace multiplier_algebra(const Algebra& A) {
  if (!A.is_dense()) throw UnsupportedBackend("multiplier_algebra: DenseFinite backend required");
  AlgebraReport rep = check_algebra(A);
  if (!rep.nondegenerate) throw DegenerateAlgebra("multiplier_algebra: " + rep.witness);
  int n = A.dim();
  // Unknowns: L (n x n) then R (n x n), entry (r, c) at index r*n + c.
  // Constraint per (i, j, out): sum_k L[k][j] P[i][k][out] - R[k][i] P[k][j][out] = 0.
  Mat sys(n * n * n, 2 * n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const El1& pik = A.basis_product(i, k);
        for (const auto& [out, v] : pik.c)
          sys.at((i * n + j) * n + int(out[0]), k * n + j) += v;
        const El1& pkj = A.basis_product(k, j);
        for (const auto& [out, v] : pkj.c)
          sys.at((i * n + j) * n + int(out[0]), n * n + k * n + i) -= v;
      }
  lin::Subspace ker = lin::kernel(sys);
  MultiplierSpace ms;
  ms.A_ = &A;
  std::vector<Vec> cols;
  for (const Vec& w : ker.basis) {
    MultMatrices mm{Mat(n, n), Mat(n, n)};
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        mm.lft.at(r, c) = w[size_t(r) * n + c];
        mm.rgt.at(r, c) = w[size_t(n) * n + r * n + c];
      }
    ms.basis_.push_back(mm);
    cols.push_back(mult_vec(ms.basis_.back()));
  }
  ms.basis_matrix_ = Mat::from_cols(cols, 2 * n * n);
  std::vector<Vec> ecols;
  for (int j = 0; j < n; ++j) ecols.push_back(mult_vec(ms.embed(el1(j))));
  ms.embed_matrix_ = Mat::from_cols(ecols, 2 * n * n);
  if (lin::rank(ms.embed_matrix_) != n)
    throw DegenerateAlgebra("multiplier_algebra: embedding A -> M(A) not injective");
  return ms;
}

std::optional<El1> is_in_A(const Algebra& A, const Mult1& m) {
  if (!A.is_dense()) throw UnsupportedBackend("is_in_A: DenseFinite backend required");
  int n = A.dim();
  std::vector<Vec> ecols;
  for (int j = 0; j < n; ++j)
    ecols.push_back(mult_vec(mult1_matrices(A, mult1_from_element(A, el1(j)))));
  Mat embed = Mat::from_cols(ecols, 2 * n * n);
  auto s = lin::solve(embed, mult_vec(mult1_matrices(A, m)));
  if (!s.x) return std::nullopt;
  return el1_of_vec(*s.x);
}

AlgebraReport check_algebra(const Algebra& A, Sampler* sampler) {
  AlgebraReport rep;
  if (A.is_dense()) {
    int n = A.dim();
    for (int i = 0; i < n && rep.associative; ++i)
      for (int j = 0; j < n && rep.associative; ++j)
        for (int k = 0; k < n; ++k) {
          El1 lhs = A.mul(A.basis_product(i, j), el1(k));
          El1 rhs = A.mul(el1(i), A.basis_product(j, k));
          if (!(lhs == rhs)) {
            rep.associative = false;
            rep.witness = "associativity fails at (" + A.label(i) + ", " + A.label(j) + ", " +
                          A.label(k) + ")";
            break;
          }
        }
    // idempotency: the multiplication map A(x)A -> A is surjective
    Mat mu(n, n * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const El1& p = A.basis_product(i, j);
        for (const auto& [k, v] : p.c) mu.at(int(k[0]), i * n + j) = v;
      }
    if (lin::rank(mu) != n) {
      rep.idempotent = false;
      if (rep.witness.empty()) rep.witness = "multiplication image has rank < dim";
    }
    // non-degeneracy: both annihilators vanish
    Mat left_ann(n * n, n), right_ann(n * n, n);
    for (int i = 0; i < n; ++i)
      for (int b = 0; b < n; ++b) {
        const El1& p = A.basis_product(i, b);  // e_i * e_b
        for (const auto& [k, v] : p.c) left_ann.at(i * n + int(k[0]), b) = v;
        const El1& q = A.basis_product(b, i);  // e_b * e_i
        for (const auto& [k, v] : q.c) right_ann.at(i * n + int(k[0]), b) = v;
      }
    lin::Subspace kl = lin::kernel(left_ann);
    lin::Subspace kr = lin::kernel(right_ann);
    if (kl.dim() > 0 || kr.dim() > 0) {
      rep.nondegenerate = false;
      const Vec& w = kl.dim() > 0 ? kl.basis[0] : kr.basis[0];
      if (rep.witness.empty()) rep.witness = "annihilator witness " + A.str(el1_of_vec(w));
    }
    return rep;
  }
  // lazy backend: sampled verdicts only
  rep.sampled = true;
  Sampler fallback;
  Sampler& smp = sampler ? *sampler : fallback;
  for (const auto& t : smp.tuples<3>(A)) {
    El1 lhs = A.mul(A.basis_product(t[0], t[1]), el1(t[2]));
    El1 rhs = A.mul(el1(t[0]), A.basis_product(t[1], t[2]));
    if (!(lhs == rhs)) {
      rep.associative = false;
      rep.witness = "associativity fails at (" + A.label(t[0]) + ", " + A.label(t[1]) + ", " +
                    A.label(t[2]) + ")";
      break;
    }
  }
  // idempotency / non-degeneracy on a finite slice: index the union of the
  // supports of all pairwise products and run the dense criteria there
  std::vector<Key> keys = smp.slice(A, std::min(smp.window(), 24));
  std::set<Key> support(keys.begin(), keys.end());
  std::vector<El1> products;
  for (Key a : keys)
    for (Key b : keys) {
      const El1& p = A.basis_product(a, b);
      products.push_back(p);
      for (const auto& [k, v] : p.c) support.insert(k[0]);
    }
  std::vector<Key> index(support.begin(), support.end());
  auto coord = [&index](Key k) {
    return int(std::lower_bound(index.begin(), index.end(), k) - index.begin());
  };
  std::vector<Vec> pvecs;
  for (const El1& p : products) {
    Vec v(index.size());
    for (const auto& [k, c] : p.c) v[size_t(coord(k[0]))] = c;
    pvecs.push_back(std::move(v));
  }
  lin::Subspace prod_span = lin::Subspace::span(int(index.size()), pvecs);
  for (Key k : keys) {
    Vec v(index.size());
    v[size_t(coord(k))] = 1;
    if (!prod_span.contains(v)) {
      rep.idempotent = false;
      rep.witness = "sampled basis element " + A.label(k) + " not spanned by sampled products";
      break;
    }
  }
  for (Key b : keys) {
    bool lkill = true, rkill = true;
    for (Key a : keys) {
      if (!A.basis_product(a, b).is_zero()) lkill = false;
      if (!A.basis_product(b, a).is_zero()) rkill = false;
      if (!lkill && !rkill) break;
    }
    if (lkill || rkill) {
      rep.nondegenerate = false;
      rep.witness = "sampled annihilator witness " + A.label(b);
      break;
    }
  }
  return rep;
}

MultMatrices HomExtension::apply(const MultMatrices& m) const {
  auto coords = MA_->coordinates(m);
  if (!coords) throw std::invalid_argument("HomExtension::apply: not a multiplier on A");
  int nb = B_->dim();
  MultMatrices out{Mat(nb, nb), Mat(nb, nb)};
  for (size_t i = 0; i < coords->size(); ++i) {
    const Rat& c = (*coords)[i];
    if (c == 0) continue;
    for (int r = 0; r < nb; ++r)
      for (int cc = 0; cc < nb; ++cc) {
        out.lft.at(r, cc) += c * images_[i].lft.at(r, cc);
        out.rgt.at(r, cc) += c * images_[i].rgt.at(r, cc);
      }
  }
  return out;
}

HomExtension extend_hom(const Algebra& A, const Algebra& B, const std::vector<Mult1>& gamma,
                        const Mult1& e) {
  if (!A.is_dense() || !B.is_dense())
    throw UnsupportedBackend("extend_hom: DenseFinite backend required");
  int na = A.dim(), nb = B.dim();
  MultMatrices em = mult1_matrices(B, e);
  if (!(em.lft * em.lft == em.lft) || !(em.rgt * em.rgt == em.rgt))
    throw lin::NotIdempotent("extend_hom: e is not idempotent");

  std::vector<MultMatrices> gm;
  gm.reserve(size_t(na));
  for (int a = 0; a < na; ++a) gm.push_back(mult1_matrices(B, gamma[size_t(a)]));

  // spanning sets gamma(e_a) e_b and e_b gamma(e_a), as columns over (a, b)
  Mat spanL(nb, na * nb), spanR(nb, na * nb);
  for (int a = 0; a < na; ++a)
    for (int b = 0; b < nb; ++b)
      for (int r = 0; r < nb; ++r) {
        spanL.at(r, a * nb + b) = gm[size_t(a)].lft.at(r, b);
        spanR.at(r, a * nb + b) = gm[size_t(a)].rgt.at(r, b);
      }
  if (!(lin::image(spanL) == lin::image(em.lft)))
    throw SpanningConditionFailed("extend_hom: <gamma(A)B> != eB");
  if (!(lin::image(spanR) == lin::image(em.rgt)))
    throw SpanningConditionFailed("extend_hom: <B gamma(A)> != Be");

  HomExtension ext;
  ext.MA_ = std::make_shared<MultiplierSpace>(multiplier_algebra(A));
  ext.B_ = &B;

  // Decompose e.e_b (resp. e_b.e) over the spanning columns once.
  std::vector<Vec> lcoords(static_cast<size_t>(nb)), rcoords(static_cast<size_t>(nb));
  for (int b = 0; b < nb; ++b) {
    auto sl = lin::solve(spanL, em.lft.col(b));
    auto sr = lin::solve(spanR, em.rgt.col(b));
    if (!sl.x || !sr.x) throw SpanningConditionFailed("extend_hom: decomposition failed");
    lcoords[size_t(b)] = *sl.x;
    rcoords[size_t(b)] = *sr.x;
  }

  // Kernel-inclusion certificate: a relation sum c_ab gamma(e_a) e_b = 0 must
  // stay a relation after e_a is replaced by omega e_a (and mirrored).
  lin::Subspace kerL = lin::kernel(spanL), kerR = lin::kernel(spanR);

  for (int i = 0; i < ext.MA_->dim(); ++i) {
    Mult1 om = ext.MA_->basis_mult(i);
    // column (a, b) of the omega-twisted spanning maps
    Mat twL(nb, na * nb), twR(nb, na * nb);
    for (int a = 0; a < na; ++a) {
      El1 oa = om.lft(el1(a));  // omega . e_a
      El1 ao = om.rgt(el1(a));  // e_a . omega
      Mat gl(nb, nb), gr(nb, nb);
      for (const auto& [k, v] : oa.c)
        for (int r = 0; r < nb; ++r)
          for (int c = 0; c < nb; ++c) gl.at(r, c) += v * gm[size_t(k[0])].lft.at(r, c);
      for (const auto& [k, v] : ao.c)
        for (int r = 0; r < nb; ++r)
          for (int c = 0; c < nb; ++c) gr.at(r, c) += v * gm[size_t(k[0])].rgt.at(r, c);
      for (int b = 0; b < nb; ++b)
        for (int r = 0; r < nb; ++r) {
          twL.at(r, a * nb + b) = gl.at(r, b);
          twR.at(r, a * nb + b) = gr.at(r, b);
        }
    }
    for (const Vec& k : kerL.basis)
      if (!lin::vec_is_zero(twL.apply(k)))
        throw SpanningConditionFailed("extend_hom: left extension ill-defined");
    for (const Vec& k : kerR.basis)
      if (!lin::vec_is_zero(twR.apply(k)))
        throw SpanningConditionFailed("extend_hom: right extension ill-defined");
    MultMatrices img{Mat(nb, nb), Mat(nb, nb)};
    for (int b = 0; b < nb; ++b) {
      Vec lc = twL.apply(lcoords[size_t(b)]);
      Vec rc = twR.apply(rcoords[size_t(b)]);
      for (int r = 0; r < nb; ++r) {
        img.lft.at(r, b) = lc[size_t(r)];
        img.rgt.at(r, b) = rc[size_t(r)];
      }
    }
    ext.images_.push_back(img);
  }
  return ext;
}

}  // namespace wmb
