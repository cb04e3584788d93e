#pragma once

#include "wmb/laws.hpp"

namespace wmb {

struct NotFull : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IllDefined : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DegenerateForm : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct WellDefinednessFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The image of one of the four projection maps inside M(A), with a chosen
// canonical basis, preimages, and coordinate machinery (dense backend).
struct BaseSpace {
  BaseMap kind;
  int dim = 0;
  std::vector<Key> pre;          // basis preimages: r_i = pi(kind, e_{pre[i]})
  std::vector<Mult1> basis;
  lin::Mat pi_matrix;            // 2n^2 x n, columns vec(pi(e_a))
  lin::Mat basis_matrix;         // 2n^2 x dim
  lin::Subspace pi_kernel;       // Ker(pi : A -> M(A))

  // coordinates of pi(x) in the basis, linear in x
  lin::Vec pi_coords(const lin::Vec& x_coords) const;
  lin::Mat picoord;  // dim x n matrix of the above

  std::optional<lin::Vec> coords(Workbench& wb, const Mult1& m) const;
};

BaseSpace base_space(Workbench& wb, BaseMap kind);

// dim-coordinates of subspace comparison piR(A) = barPiR(A) (resp. left)
struct BaseBasisResult {
  lin::Subspace image;       // inside the 2n^2 multiplier coordinates
  bool bar_agrees = false;   // image of the bar variant coincides
};
BaseBasisResult base_basis(Workbench& wb, bool right_side);

struct BaseCounit {
  std::vector<Rat> values;  // eps_R on the basis of the base space
  bool well_defined = true;
  std::string certificate;  // failure witness if not
};
BaseCounit base_counit(Workbench& wb, const BaseSpace& base);

// F in M(A(x)A), from its two defining rules; the rules' well-definedness
// certificates are kernel inclusions over product decompositions.
struct FMultiplier {
  Mult2 m;
  bool well_defined = true;
  std::string certificate;
};
FMultiplier f_multiplier(Workbench& wb);

struct BaseCoalgebra {
  BaseSpace space;
  BaseCounit counit;
  // structure constants over the canonical basis
  std::vector<std::vector<lin::Vec>> mult;   // [i][j] -> coords of r_i r_j
  std::vector<lin::Vec> delta;               // [i] -> flattened dim*dim coords
  std::optional<lin::Vec> unit;              // coords of a global unit, if any
  lin::Mat nakayama;                         // dim x dim
  lin::Mat nakayama_from_sigma;              // cross-check (R side only)
  bool group_like_basis = false;             // every r_i has delta(r_i) = r_i (x) r_i
};

// The full base structure of one side; requires the corresponding fullness
// on the dense backend.  side R uses piR, side L uses barPiL.
BaseCoalgebra base_coalgebra(Workbench& wb, bool right_side);

// Nakayama automorphism of the side's base, solved from the Gram matrix of
// (s, r) |-> eps_R(s r); throws DegenerateForm on a singular Gram matrix.
lin::Mat nakayama(Workbench& wb, const BaseSpace& base, const BaseCounit& eps);

struct SigmaMaps {
  // matrices between the L and R base spaces (L = barPiL(A), R = piR(A))
  lin::Mat sigma;      // L -> R : barPiL(a) |-> piR(a)
  lin::Mat sigma_bar;  // L -> R : piL(a) |-> barPiR(a)
  lin::Mat tau;        // R -> L : piR(a) |-> barPiL(a)
  lin::Mat tau_bar;    // R -> L : barPiR(a) |-> piL(a)
};
SigmaMaps sigma_maps(Workbench& wb, const BaseSpace& rbase, const BaseSpace& lbase);

// B1..B13 and the PI-mult sanity law, quantified per backend.
LawReport verify_base_laws(Workbench& wb);

// The C-block: coalgebra structure, Nakayama, sigma/tau certificates and the
// E<->F relations; dense, regular, both fullnesses for the sigma items.
LawReport verify_base_structure(Workbench& wb);

}  // namespace wmb
