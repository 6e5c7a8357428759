#include "blaschke/transforms.hpp"

#include <cmath>
#include <string>

namespace blaschke {

namespace {
constexpr Complex kI{0.0, 1.0};

std::string fmt(Complex z) {
  return "(" + std::to_string(z.real()) + ", " + std::to_string(z.imag()) + ")";
}
}  // namespace

Complex cayley(Complex v) {
  if (std::abs(1.0 - v) <= 1e-300) throw PoleAtOne();
  return kI * (1.0 + v) / (1.0 - v);
}

Complex inverse_cayley(Complex w) {
  if (std::abs(w + kI) <= 1e-300) throw PoleAtMinusI();
  return (w - kI) / (w + kI);
}

DiscPoint::DiscPoint(Complex v) : v_(v) {
  if (!(std::abs(v) < 1.0 - 1e-12))
    throw InvalidDiscPoint("point " + fmt(v) + " is not inside the unit disc");
}

Complex DiscPoint::lifted() const { return cayley(v_); }

HalfPlanePoint::HalfPlanePoint(Complex w) : w_(w) {
  if (!(w.imag() > 1e-12 * (1.0 + std::abs(w))))
    throw InvalidHalfPlanePoint("point " + fmt(w) + " is not in the open upper half-plane");
}

Complex HalfPlanePoint::dropped() const { return inverse_cayley(w_); }

CriticalPointSet CriticalPointSet::from_disc(std::span<const Complex> points) {
  CriticalPointSet out;
  out.disc_.reserve(points.size());
  out.halfplane_.reserve(points.size());
  for (Complex v : points) {
    DiscPoint p(v);
    out.disc_.push_back(p.value());
    out.halfplane_.push_back(p.lifted());
  }
  return out;
}

CriticalPointSet CriticalPointSet::from_halfplane(std::span<const Complex> points) {
  CriticalPointSet out;
  out.disc_.reserve(points.size());
  out.halfplane_.reserve(points.size());
  for (Complex w : points) {
    HalfPlanePoint p(w);
    out.halfplane_.push_back(p.value());
    out.disc_.push_back(p.dropped());
  }
  return out;
}

std::vector<Complex> lift_critical_points(std::span<const Complex> disc_points) {
  std::vector<Complex> out;
  out.reserve(disc_points.size());
  for (Complex v : disc_points) out.push_back(DiscPoint(v).lifted());
  return out;
}

}  // namespace blaschke
