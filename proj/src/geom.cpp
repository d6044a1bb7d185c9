#include "hyperkernel/geom.hpp"

#include <cmath>

#include "hyperkernel/errors.hpp"

namespace hyperkernel::geom {

DiscPoint::DiscPoint(cplx w) : w_(w) {
  if (!(std::abs(w) < 1.0 - kBoundaryGuard)) {
    throw DomainError("DiscPoint: |w| must be < 1 - 1e-12");
  }
}

double DiscPoint::conformal_gap() const { return 1.0 - std::norm(w_); }

GroupElement::GroupElement(cplx A, cplx B) : A_(A), B_(B) {
  const double det = std::norm(A) - std::norm(B);
  if (std::abs(det - 1.0) > 1e-12 * std::max(1.0, std::norm(A))) {
    throw DomainError("GroupElement: |A|^2 - |B|^2 must equal 1");
  }
}

GroupElement GroupElement::inverse() const {
  GroupElement g;
  g.A_ = std::conj(A_);
  g.B_ = -B_;
  return g;
}

GroupElement operator*(const GroupElement& g1, const GroupElement& g2) {
  // [[A1, conj B1], [B1, conj A1]] [[A2, conj B2], [B2, conj A2]]
  GroupElement g;
  g.A_ = g1.A_ * g2.A_ + std::conj(g1.B_) * g2.B_;
  g.B_ = g1.B_ * g2.A_ + std::conj(g1.A_) * g2.B_;
  return g;
}

double distance(const DiscPoint& w, const DiscPoint& w2) {
  const double gap = w.conformal_gap() * w2.conformal_gap();
  const double sinh_half = std::abs(w.value() - w2.value()) / std::sqrt(gap);
  return 2.0 * std::asinh(sinh_half);
}

GroupElement mobius_g(const DiscPoint& w) {
  const double scale = 1.0 / std::sqrt(w.conformal_gap());
  return GroupElement(cplx(scale, 0.0), std::conj(w.value()) * scale);
}

DiscPoint mobius_apply(const GroupElement& g, const DiscPoint& z) {
  const cplx zv = z.value();
  const cplx image = (g.A() * zv + std::conj(g.B())) / (g.B() * zv + std::conj(g.A()));
  return DiscPoint(image);
}

cplx phase_factor(double k, const DiscPoint& w, const DiscPoint& w2,
                  PhaseOrientation orientation) {
  if (k == 0.0) return {1.0, 0.0};
  const cplx u = 1.0 - std::conj(w.value()) * w2.value();
  // u / conj(u) has modulus one; the principal Log is i * 2 arg(u) since
  // Re u > 0 keeps arg(u) inside (-pi/2, pi/2).
  double angle = 2.0 * std::arg(u);
  if (orientation == PhaseOrientation::conj_second) angle = -angle;
  return std::polar(1.0, k * angle);
}

cplx automorphic_factor(double k, const GroupElement& g, const DiscPoint& w) {
  const cplx q = g.B() * w.value() + std::conj(g.A());
  return principal_pow(std::conj(q) / q, cplx(k, 0.0));
}

double cocycle_modulus_check(double k, const GroupElement& g1, const GroupElement& g2,
                             const DiscPoint& z) {
  const cplx lhs = automorphic_factor(k, g1 * g2, z);
  const cplx rhs = automorphic_factor(k, g1, mobius_apply(g2, z)) * automorphic_factor(k, g2, z);
  return std::abs(std::abs(lhs) / std::abs(rhs) - 1.0);
}

DiscPoint polar_point(const DiscPoint& center, double r, double theta) {
  const DiscPoint local(std::polar(std::tanh(0.5 * r), theta));
  if (center.value() == cplx(0.0, 0.0)) return local;
  return mobius_apply(mobius_g(center), local);
}

}  // namespace hyperkernel::geom
