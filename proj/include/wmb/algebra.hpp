#pragma once

#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "wmb/element.hpp"

namespace wmb {

struct UnsupportedBackend : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DegenerateAlgebra : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Non-unital associative algebra over Q, given by a basis product rule.
//
// Dense backend: basis keys are 0..dim-1 and the product table is cached,
// so exhaustive law evaluation can loop over all tuples. Lazy backend:
// basis keys form a countable set reachable through enumerate(); products
// must have finite support and laws are checked on sampled tuples.
class Algebra {
 public:
  enum class Backend { DenseFinite, LazyLocallyFinite };

  using ProductFn = std::function<El1(Key, Key)>;
  using LabelFn = std::function<std::string(Key)>;
  using EnumFn = std::function<Key(std::int64_t)>;

  static Algebra dense(std::vector<std::string> labels, ProductFn prod);
  static Algebra lazy(ProductFn prod, EnumFn enumerate, LabelFn label);

  Backend backend() const { return backend_; }
  bool is_dense() const { return backend_ == Backend::DenseFinite; }
  int dim() const;

  // i-th basis key: the identity on the dense backend, the enumeration on
  // the lazy one.
  Key key_at(std::int64_t i) const;

  const El1& basis_product(Key a, Key b) const;

  El1 mul(const El1& x, const El1& y) const;
  El2 mul2(const El2& x, const El2& y) const;  // factorwise on A(x)A
  El3 mul3(const El3& x, const El3& y) const;

  // Multiply one leg of a tensor by an element of A (from the left/right).
  El2 leg_mul2(const El2& x, int leg, const El1& a, bool from_left) const;
  El3 leg_mul3(const El3& x, int leg, const El1& a, bool from_left) const;

  std::string label(Key k) const;
  std::string str(const El1& x) const;
  std::string str(const El2& x) const;
  std::string str(const El3& x) const;

  Algebra opposite() const;

 private:
  Backend backend_ = Backend::DenseFinite;
  int dim_ = 0;
  ProductFn prod_;
  LabelFn label_;
  EnumFn enum_;
  // dense product cache, index i*dim+j
  std::shared_ptr<std::vector<El1>> table_;
  // lazy product memo
  std::shared_ptr<std::map<std::pair<Key, Key>, El1>> lazy_cache_;
};

// Multiplier (lft, rgt) on A: lft(x) = m.x, rgt(x) = x.m, subject to the
// compatibility x.(m.y) = (x.m).y.
struct Mult1 {
  std::function<El1(const El1&)> lft;
  std::function<El1(const El1&)> rgt;
};

// Multiplier on A(x)A.
struct Mult2 {
  std::function<El2(const El2&)> lft;
  std::function<El2(const El2&)> rgt;
};

// Multiplier on A(x)A(x)A.
struct Mult3 {
  std::function<El3(const El3&)> lft;
  std::function<El3(const El3&)> rgt;
};

Mult1 mult1_identity();
Mult1 mult1_from_element(const Algebra& A, const El1& a);
Mult1 mult1_scale(const Rat& s);
// Product m1 m2 in M(A): (lft1 lft2, rgt2 rgt1).
Mult1 mult1_mul(const Mult1& m1, const Mult1& m2);
Mult1 mult1_add(const Mult1& m1, const Mult1& m2);

Mult2 mult2_identity();
Mult2 mult2_from_element(const Algebra& A, const El2& e);
Mult2 mult2_mul(const Mult2& m1, const Mult2& m2);
// m (x) n acting legwise on A(x)A.
Mult2 mult2_from_pair(const Mult1& m, const Mult1& n);

Mult3 mult3_mul(const Mult3& m1, const Mult3& m2);
// E (x) 1 and 1 (x) E on A(x)A(x)A (E acting on legs 1,2 resp. 2,3).
Mult3 mult3_from12(const Mult2& m);
Mult3 mult3_from23(const Mult2& m);

// Tensor product algebra A (x) B with the factorwise multiplication; basis
// keys are encoded as i * stride + j for dense factors.
struct TensorAlgebra {
  Algebra alg;
  Key stride = 0;
  Key encode(Key i, Key j) const { return i * stride + j; }
  std::pair<Key, Key> decode(Key k) const { return {k / stride, k % stride}; }
};
TensorAlgebra tensor_algebra(const Algebra& A, const Algebra& B);

El2 to_el2(const TensorAlgebra& t, const El1& x);
El1 from_el2(const TensorAlgebra& t, const El2& x);

}  // namespace wmb
