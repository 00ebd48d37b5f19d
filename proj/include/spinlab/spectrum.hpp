#ifndef SPINLAB_SPECTRUM_HPP
#define SPINLAB_SPECTRUM_HPP

#include <Eigen/Dense>
#include <optional>
#include <utility>
#include <vector>

#include "spinlab/errors.hpp"
#include "spinlab/model.hpp"

namespace spinlab {

template <typename Scalar = double>
struct SpectrumResult {
  using MatrixType = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  using VectorType = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  VectorType eigenvalues;  // ascending
  std::optional<MatrixType> eigenvectors;
};

/// Dense symmetric eigendecomposition, eigenvalues ascending.
/// Rejects matrices that are not symmetric to 1e-12 relative to their magnitude.
template <typename Scalar = double>
SpectrumResult<Scalar> eigensolve_sym(
    const Eigen::Ref<const typename SpectrumResult<Scalar>::MatrixType>& matrix,
    bool with_vectors = false) {
  if (matrix.rows() != matrix.cols())
    throw std::invalid_argument("eigensolve_sym: matrix must be square");
  const Scalar magnitude = matrix.cwiseAbs().maxCoeff();
  const Scalar asym = (matrix - matrix.transpose()).cwiseAbs().maxCoeff();
  if (asym > Scalar(1e-12) * std::max(Scalar(1), magnitude))
    throw std::invalid_argument("eigensolve_sym: matrix is not symmetric");

  Eigen::SelfAdjointEigenSolver<typename SpectrumResult<Scalar>::MatrixType> solver;
  solver.compute(matrix, with_vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw NumericalFailure("symmetric eigensolver did not converge",
                           static_cast<int>(solver.info()),
                           static_cast<int>(matrix.rows()));

  SpectrumResult<Scalar> result;
  result.eigenvalues = solver.eigenvalues();
  if (with_vectors) result.eigenvectors = solver.eigenvectors();
  return result;
}

/// Exact spectrum of the full Hamiltonian, dimension 2(2S+1).
template <typename Scalar = double>
SpectrumResult<Scalar> exact_spectrum(const ModelParams<Scalar>& params,
                                      bool with_vectors = false) {
  return eigensolve_sym<Scalar>(build_full(params), with_vectors);
}

/// Residual of the block-elimination fixed-point equation at energy E.
///
/// Builds H_eff^+(E) = omega/2 + H_lmg^+ - (delta^2/4) (-omega/2 + H_lmg^- - E)^{-1}
/// and returns min |eig(H_eff^+(E) - E)|.  Zero (up to roundoff) exactly when E is
/// an eigenvalue of the full Hamiltonian away from the poles of the resolvent.
/// Energies within pole_tol of a pole are refused.
template <typename Scalar = double>
Scalar fg_residual(const ModelParams<Scalar>& params, Scalar energy,
                   Scalar pole_tol = Scalar(1e-9)) {
  using MatrixType = typename SpectrumResult<Scalar>::MatrixType;
  params.validate();
  const int d = params.dim();

  MatrixType lower = build_lmg(params, Branch::minus);
  lower.diagonal().array() -= params.omega / 2;

  const auto poles = eigensolve_sym<Scalar>(lower).eigenvalues;
  int nearest = 0;
  (poles.array() - energy).abs().minCoeff(&nearest);
  const Scalar distance = std::abs(poles[nearest] - energy);
  if (distance <= pole_tol)
    throw PoleProximityError(static_cast<double>(energy),
                             static_cast<double>(poles[nearest]),
                             static_cast<double>(distance));

  // Resolvent applied column by column through an LU solve; the explicit
  // inverse is worse conditioned this close to the spectrum of `lower`.
  MatrixType shifted = lower;
  shifted.diagonal().array() -= energy;
  MatrixType green = Eigen::PartialPivLU<MatrixType>(shifted).solve(
      MatrixType::Identity(d, d));

  MatrixType eff = build_lmg(params, Branch::plus);
  eff.diagonal().array() += params.omega / 2 - energy;
  eff -= (params.delta * params.delta / 4) * green;
  eff = ((eff + eff.transpose()) / 2).eval();  // the solve leaves roundoff asymmetry

  return eigensolve_sym<Scalar>(eff).eigenvalues.cwiseAbs().minCoeff();
}

/// Lowest eigenvalue per spin for a list of chain sizes, couplings held fixed.
template <typename Scalar = double>
std::vector<std::pair<HalfInteger, Scalar>> ground_energy_per_spin_scan(
    const ModelParams<Scalar>& params_template, const std::vector<HalfInteger>& spins) {
  for (std::size_t i = 1; i < spins.size(); ++i) {
    if (!(spins[i - 1] < spins[i]))
      throw std::invalid_argument("spin list must be ascending");
  }
  std::vector<std::pair<HalfInteger, Scalar>> rows;
  rows.reserve(spins.size());
  for (HalfInteger s : spins) {
    ModelParams<Scalar> p = params_template;
    p.spin = s;
    const Scalar e_min = exact_spectrum(p).eigenvalues[0];
    rows.emplace_back(s, e_min / p.spin_value());
  }
  return rows;
}

}  // namespace spinlab

#endif  // SPINLAB_SPECTRUM_HPP
