#ifndef SPINLAB_ERRORS_HPP
#define SPINLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace spinlab {

/// Eigensolver did not converge (or produced an invalid decomposition).
class NumericalFailure : public std::runtime_error {
 public:
  NumericalFailure(const std::string& what, int solver_info, int dimension)
      : std::runtime_error(what + " (solver info=" + std::to_string(solver_info) +
                           ", dim=" + std::to_string(dimension) + ")"),
        solver_info_(solver_info),
        dimension_(dimension) {}

  int solver_info() const { return solver_info_; }
  int dimension() const { return dimension_; }

 private:
  int solver_info_;
  int dimension_;
};

/// Requested energy sits on (or too close to) a pole of the resolvent G_-.
class PoleProximityError : public std::domain_error {
 public:
  PoleProximityError(double energy, double pole, double distance)
      : std::domain_error("energy " + std::to_string(energy) +
                          " is within " + std::to_string(distance) +
                          " of resolvent pole " + std::to_string(pole)),
        energy_(energy),
        pole_(pole),
        distance_(distance) {}

  double energy() const { return energy_; }
  double pole() const { return pole_; }
  double distance() const { return distance_; }

 private:
  double energy_, pole_, distance_;
};

/// Zeroth-order levels too close for the second-order expansion to be trusted.
class PerturbationBreakdown : public std::domain_error {
 public:
  PerturbationBreakdown(double sigma, double sigma_other, double gap)
      : std::domain_error("second-order perturbation breakdown: levels sigma=" +
                          std::to_string(sigma) + " and sigma'=" +
                          std::to_string(sigma_other) + " separated by " +
                          std::to_string(gap)),
        sigma_(sigma),
        sigma_other_(sigma_other),
        gap_(gap) {}

  double sigma() const { return sigma_; }
  double sigma_other() const { return sigma_other_; }
  double gap() const { return gap_; }

 private:
  double sigma_, sigma_other_, gap_;
};

/// Stationary point with |d2E/dtheta2| below the classification tolerance.
/// These occur exactly on phase boundaries, where min/max is undecidable.
class DegenerateExtremum : public std::runtime_error {
 public:
  explicit DegenerateExtremum(double theta)
      : std::runtime_error("degenerate extremum at theta=" + std::to_string(theta) +
                           ": curvature below classification tolerance"),
        theta_(theta) {}

  double theta() const { return theta_; }

 private:
  double theta_;
};

/// The broken-symmetry stationarity equation has no root in the bracket.
class NoBrokenPhase : public std::domain_error {
 public:
  NoBrokenPhase() : std::domain_error("no broken-symmetry solution in (pi/2, 3pi/2)") {}
};

/// Matrix dimension exceeds the CLI guard.
class DimensionGuard : public std::invalid_argument {
 public:
  DimensionGuard(double spin, double max_spin)
      : std::invalid_argument("spin " + std::to_string(spin) +
                              " exceeds the dimension guard; maximum supported spin is " +
                              std::to_string(max_spin)) {}
};

}  // namespace spinlab

#endif  // SPINLAB_ERRORS_HPP
