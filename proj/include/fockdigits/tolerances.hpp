#ifndef FOCKDIGITS_TOLERANCES_HPP
#define FOCKDIGITS_TOLERANCES_HPP

#include <cstdint>

namespace fockdigits {

// One shared tolerance record. All modules read from here so that a bound
// tightened (or overridden by the CLI) applies uniformly.
struct Tolerances {
  // Residue route: distance of the reconstructed eigenvalue to the nearest
  // integer, and magnitude of the imaginary part of the unpaired root sum.
  double integer_distance = 1e-6;
  double imag_residual = 1e-9;

  // Roots of unity must sit on the unit circle.
  double root_modulus = 1e-12;

  // Conjugate symmetry of residue coefficients, C_{k-j} = conj(C_j).
  double conjugate_symmetry = 1e-10;

  // Per-amplitude agreement between the series and closed-form actions.
  double amplitude_match = 1e-8;

  // Operator algebra checks.
  double linearity = 1e-12;
  double materialization = 1e-10;
  double adjoint_pairing = 1e-10;

  // Circle quadrature of the slot projector.
  double quadrature = 1e-12;

  // Intermediate states of the quantum digit route must be single basis
  // states with unit amplitude.
  double state_purity = 1e-12;

  // Norm of nominally normalized states.
  double norm = 1e-12;

  // Matrix export: entries below this magnitude are dropped.
  double export_drop = 1e-14;
};

inline constexpr Tolerances kTol{};

// Dense materialization refuses dimensions above this unless the caller
// raises the cap explicitly.
inline constexpr std::uint64_t kDefaultMatrixCap = 4096;

// The explicit root-of-unity digit route is offered only while the root
// order b^(l+1) stays within this bound.
inline constexpr std::uint64_t kResidueOrderCap = 4096;

}  // namespace fockdigits

#endif  // FOCKDIGITS_TOLERANCES_HPP
