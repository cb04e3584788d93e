#pragma once

#include <optional>

#include "wmb/algebra.hpp"
#include "wmb/matrix.hpp"

namespace wmb {

struct SpanningConditionFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Matrix form of a multiplier on a dense algebra: column j of lft is m.e_j,
// column j of rgt is e_j.m.
struct MultMatrices {
  lin::Mat lft, rgt;
};

MultMatrices mult1_matrices(const Algebra& A, const Mult1& m);
MultMatrices mult2_matrices(const Algebra& A, const Mult2& m);  // on A(x)A, dim n^2
Mult1 mult1_from_matrices(const Algebra& A, const MultMatrices& mm);

// Flattened coordinates of a multiplier (lft entries then rgt entries),
// the working representation of M(A) as a vector space.
lin::Vec mult_vec(const MultMatrices& mm);

// The multiplier algebra of a dense non-degenerate algebra: all pairs of
// matrices (L, R) with e_i L(e_j) = R(e_i) e_j, in a canonical basis.
class MultiplierSpace {
 public:
  const Algebra& A() const { return *A_; }
  int dim() const { return int(basis_.size()); }
  const MultMatrices& basis(int i) const { return basis_[i]; }
  Mult1 basis_mult(int i) const;

  // Coordinates of a multiplier in the canonical basis; empty if the pair
  // does not satisfy the multiplier constraint (never for genuine input).
  std::optional<lin::Vec> coordinates(const MultMatrices& mm) const;
  std::optional<lin::Vec> coordinates(const Mult1& m) const;

  // a |-> (b -> ab, b -> ba); injective by non-degeneracy.
  MultMatrices embed(const El1& a) const;
  const lin::Mat& embed_matrix() const { return embed_matrix_; }

  // Element of A representing m, if m lies in the ideal A of M(A).
  std::optional<El1> as_element(const Mult1& m) const;
  std::optional<El1> as_element(const MultMatrices& mm) const;

  // Coordinates of the unit multiplier (identity maps).
  lin::Vec unit_coordinates() const;

  friend MultiplierSpace multiplier_algebra(const Algebra& A);

 private:
  const Algebra* A_ = nullptr;
  std::vector<MultMatrices> basis_;
  lin::Mat basis_matrix_;  // 2n^2 x dim, columns mult_vec(basis_[i])
  lin::Mat embed_matrix_;  // 2n^2 x n
};

MultiplierSpace multiplier_algebra(const Algebra& A);

// Membership of a multiplier in the ideal A (dense backend only).
std::optional<El1> is_in_A(const Algebra& A, const Mult1& m);

struct AlgebraReport {
  bool associative = true;
  bool idempotent = true;
  bool nondegenerate = true;
  bool sampled = false;  // lazy backend: verified on sample only
  std::string witness;   // first failure found, human-readable
  bool all() const { return associative && idempotent && nondegenerate; }
};

class Sampler;
AlgebraReport check_algebra(const Algebra& A, Sampler* sampler = nullptr);

// Extension of a non-degenerate homomorphism gamma : A -> M(B) along the
// idempotent e in M(B) with <gamma(A)B> = eB and <B gamma(A)> = Be, to a
// multiplicative map M(A) -> M(B) with 1 |-> e.
class HomExtension {
 public:
  const MultiplierSpace& source() const { return *MA_; }
  // Image of the i-th canonical basis multiplier of M(A).
  const MultMatrices& image(int i) const { return images_[i]; }
  MultMatrices apply(const MultMatrices& m) const;

  friend HomExtension extend_hom(const Algebra& A, const Algebra& B,
                                 const std::vector<Mult1>& gamma, const Mult1& e);

 private:
  std::shared_ptr<MultiplierSpace> MA_;
  const Algebra* B_ = nullptr;
  std::vector<MultMatrices> images_;
};

HomExtension extend_hom(const Algebra& A, const Algebra& B, const std::vector<Mult1>& gamma,
                        const Mult1& e);

}  // namespace wmb
