#pragma once

#include <stdexcept>
#include <string>

namespace blaschke {

// Base class for every failure the library raises on purpose.  `code()`
// returns a stable identifier suitable for machine-readable reports.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

#define BLASCHKE_ERROR_TYPE(Name, default_message)                       \
  class Name : public Error {                                            \
   public:                                                               \
    explicit Name(const std::string& message = default_message)          \
        : Error(#Name, message) {}                                       \
  }

// Conformal map layer.
BLASCHKE_ERROR_TYPE(PoleAtOne, "cayley transform is singular at z = 1");
BLASCHKE_ERROR_TYPE(PoleAtMinusI, "inverse cayley transform is singular at w = -i");
BLASCHKE_ERROR_TYPE(InvalidDiscPoint, "point is not strictly inside the unit disc");
BLASCHKE_ERROR_TYPE(InvalidHalfPlanePoint, "point is not strictly inside the upper half-plane");

// Polynomial layer.
BLASCHKE_ERROR_TYPE(NotConjugateClosed, "root list is not closed under conjugation");
BLASCHKE_ERROR_TYPE(DegenerateLeadingCoefficient, "polynomial degree collapsed under trimming");
BLASCHKE_ERROR_TYPE(NoSignChange, "bracket endpoints do not straddle a root");
BLASCHKE_ERROR_TYPE(NodesTooClose, "interpolation nodes are too close together");

// Equilibrium layer.
BLASCHKE_ERROR_TYPE(CoincidentCharges, "two free charges coincide");
BLASCHKE_ERROR_TYPE(NoConvergence, "iteration did not reach the requested residual");
BLASCHKE_ERROR_TYPE(AnchorOutOfInterval, "anchor does not lie strictly inside its pole interval");

// Differential-equation layer.
BLASCHKE_ERROR_TYPE(PoleMismatch, "pole set does not match the polynomial roots");

// Product layer.
BLASCHKE_ERROR_TYPE(ZeroOutsideDisc, "extracted zero lies outside the open unit disc");
BLASCHKE_ERROR_TYPE(WrongCriticalCount, "unexpected number of critical points inside the disc");

// Moment layer.
BLASCHKE_ERROR_TYPE(HankelNotPositiveDefinite, "Hankel matrix is not positive definite");
BLASCHKE_ERROR_TYPE(SubHankelNotPositiveDefinite, "leading Hankel section is not positive definite");
BLASCHKE_ERROR_TYPE(NonPositiveWeight, "canonical representation has a non-positive weight");
BLASCHKE_ERROR_TYPE(AnchorOnLowerRoot, "anchor coincides with a root of the lower principal polynomial");

#undef BLASCHKE_ERROR_TYPE

}  // namespace blaschke
