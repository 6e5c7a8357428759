#pragma once

#include <complex>
#include <span>
#include <vector>

#include "blaschke/errors.hpp"

namespace blaschke {

using Complex = std::complex<double>;

// Cayley transform from the open unit disc onto the upper half-plane,
// T(v) = i (1 + v) / (1 - v), and its inverse (w - i) / (w + i).
Complex cayley(Complex v);
Complex inverse_cayley(Complex w);

// A point of the open unit disc.  Construction validates |v| < 1 with a small
// guard band so downstream divisions stay well conditioned.
class DiscPoint {
 public:
  explicit DiscPoint(Complex v);
  Complex value() const { return v_; }
  // Image in the upper half-plane.
  Complex lifted() const;

 private:
  Complex v_;
};

// A point of the open upper half-plane (imaginary part strictly positive).
class HalfPlanePoint {
 public:
  explicit HalfPlanePoint(Complex w);
  Complex value() const { return w_; }
  // Preimage in the unit disc.
  Complex dropped() const;

 private:
  Complex w_;
};

// A multiset of prescribed critical points.  Stored in both charts: disc
// coordinates and their Cayley lifts, in matching order.
class CriticalPointSet {
 public:
  static CriticalPointSet from_disc(std::span<const Complex> points);
  static CriticalPointSet from_halfplane(std::span<const Complex> points);

  std::size_t count() const { return disc_.size(); }
  const std::vector<Complex>& disc() const { return disc_; }
  const std::vector<Complex>& halfplane() const { return halfplane_; }

 private:
  std::vector<Complex> disc_;
  std::vector<Complex> halfplane_;
};

// Lift a list of disc points to the upper half-plane, validating each.
std::vector<Complex> lift_critical_points(std::span<const Complex> disc_points);

}  // namespace blaschke
