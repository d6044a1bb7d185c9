#pragma once

// Poincare disc model of the hyperbolic plane, metric 2|dw| / (1 - |w|^2).

#include "hyperkernel/specfun.hpp"

namespace hyperkernel::geom {

inline constexpr double kBoundaryGuard = 1e-12;

/// A point of the open unit disc, kept away from the boundary by 1e-12.
class DiscPoint {
 public:
  DiscPoint() = default;
  explicit DiscPoint(cplx w);

  cplx value() const { return w_; }
  /// 1 - |w|^2.
  double conformal_gap() const;

 private:
  cplx w_{0.0, 0.0};
};

/// SU(1, 1) element [[A, conj B], [B, conj A]] with |A|^2 - |B|^2 = 1.
class GroupElement {
 public:
  GroupElement() = default;
  GroupElement(cplx A, cplx B);

  static GroupElement identity() { return {}; }

  cplx A() const { return A_; }
  cplx B() const { return B_; }
  GroupElement inverse() const;

  friend GroupElement operator*(const GroupElement& g1, const GroupElement& g2);

 private:
  cplx A_{1.0, 0.0};
  cplx B_{0.0, 0.0};
};

/// Orientation of the two-point phase ((1 - conj(w) w') / (1 - w conj(w')))^k.
enum class PhaseOrientation {
  conj_first,  // ((1 - conj(w) w') / (1 - w conj(w')))^k
  conj_second  // ((1 - w conj(w')) / (1 - conj(w) w'))^k
};

/// Orientation for which the phase-dressed radial kernels are annihilated by
/// the magnetic operator in their first argument.
inline constexpr PhaseOrientation kResolvedOrientation = PhaseOrientation::conj_first;

/// Geodesic distance, sinh^2(d/2) = |w - w2|^2 / ((1 - |w|^2)(1 - |w2|^2)).
double distance(const DiscPoint& w, const DiscPoint& w2);

/// g_w with g_w . 0 = w.
GroupElement mobius_g(const DiscPoint& w);

/// Fractional-linear action z -> (A z + conj B) / (B z + conj A).
DiscPoint mobius_apply(const GroupElement& g, const DiscPoint& z);

/// Unimodular phase factor, principal branch for non-integer k.
cplx phase_factor(double k, const DiscPoint& w, const DiscPoint& w2,
                  PhaseOrientation orientation = kResolvedOrientation);

/// Automorphic factor J_k(g, w) = (conj(C w + D) / (C w + D))^k with
/// (C, D) = (B, conj A) the bottom row of g.
cplx automorphic_factor(double k, const GroupElement& g, const DiscPoint& w);

/// | |J_k(g1 g2, z)| / (|J_k(g1, g2 z)| |J_k(g2, z)|) - 1 |.
double cocycle_modulus_check(double k, const GroupElement& g1, const GroupElement& g2,
                             const DiscPoint& z);

/// Point at geodesic polar coordinates (r, theta) around center.
DiscPoint polar_point(const DiscPoint& center, double r, double theta);

}  // namespace hyperkernel::geom
