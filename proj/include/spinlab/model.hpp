#ifndef SPINLAB_MODEL_HPP
#define SPINLAB_MODEL_HPP

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

#include "spinlab/half_integer.hpp"

namespace spinlab {

/// tau_z eigenvalue selecting one of the two chain blocks.
enum class Branch : int { plus = +1, minus = -1 };

constexpr int branch_sign(Branch b) { return static_cast<int>(b); }

/// The six couplings of the model plus the total chain spin S = N/2.
///
/// omega, delta      -- single-spin z and x splittings
/// omega_t, delta_t  -- chain z field and x field
/// j_chain           -- intra-chain coupling J (enters as J S_z^2 / 2S)
/// j_couple          -- single spin--chain coupling (enters as branch * J~/2 on S_z)
template <typename Scalar = double>
struct ModelParams {
  Scalar omega{};
  Scalar delta{};
  Scalar omega_t{};
  Scalar delta_t{};
  Scalar j_chain{};
  Scalar j_couple{};
  HalfInteger spin = HalfInteger::from_twice(1);

  Scalar spin_value() const { return static_cast<Scalar>(spin.value()); }
  /// Dimension of the chain space, 2S+1.
  int dim() const { return spin.twice() + 1; }

  void validate() const {
    if (spin.twice() < 1) throw std::invalid_argument("spin must be at least 1/2");
    for (Scalar c : {omega, delta, omega_t, delta_t, j_chain, j_couple}) {
      if (!std::isfinite(static_cast<double>(c)))
        throw std::invalid_argument("couplings must be finite");
    }
  }
};

/// S_x and S_z in the |S, m> basis, m = -S..S ascending.
template <typename Scalar = double>
struct DickeOperators {
  using MatrixType = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  int dim = 0;
  MatrixType sx;  // symmetric tridiagonal, zero diagonal
  MatrixType sz;  // diagonal, entries m
};

/// Ladder matrix element <m'|S_x|m> for m' = m +- 1.
template <typename Scalar>
Scalar sx_element(HalfInteger spin, HalfInteger m_to, HalfInteger m_from) {
  const Scalar s = static_cast<Scalar>(spin.value());
  const Scalar a = static_cast<Scalar>(m_to.value());
  const Scalar b = static_cast<Scalar>(m_from.value());
  if (std::abs(m_to.twice() - m_from.twice()) != 2) return Scalar(0);
  return Scalar(0.5) * std::sqrt(s * (s + 1) - a * b);
}

template <typename Scalar = double>
DickeOperators<Scalar> dicke_operators(HalfInteger spin) {
  if (spin.twice() < 1) throw std::invalid_argument("spin must be at least 1/2");
  const int dim = spin.twice() + 1;
  const Scalar s = static_cast<Scalar>(spin.value());

  DickeOperators<Scalar> ops;
  ops.dim = dim;
  ops.sz = DickeOperators<Scalar>::MatrixType::Zero(dim, dim);
  ops.sx = DickeOperators<Scalar>::MatrixType::Zero(dim, dim);
  for (int i = 0; i < dim; ++i) {
    const Scalar m = -s + Scalar(i);
    ops.sz(i, i) = m;
    if (i + 1 < dim) {
      // <m+1|S_x|m> = 1/2 sqrt(S(S+1) - m(m+1))
      const Scalar v = Scalar(0.5) * std::sqrt(s * (s + 1) - m * (m + 1));
      ops.sx(i + 1, i) = v;
      ops.sx(i, i + 1) = v;
    }
  }
  return ops;
}

/// Chain-block Hamiltonian (omega~ + branch J~/2) S_z + delta~ S_x + J S_z^2 / 2S.
template <typename Scalar = double>
typename DickeOperators<Scalar>::MatrixType build_lmg(const ModelParams<Scalar>& params,
                                                      Branch branch) {
  params.validate();
  const auto ops = dicke_operators<Scalar>(params.spin);
  const Scalar zcoef = params.omega_t + Scalar(branch_sign(branch)) * params.j_couple / 2;
  typename DickeOperators<Scalar>::MatrixType h =
      params.delta_t * ops.sx;
  // S_z and S_z^2 are diagonal; fill them directly to keep the result exactly symmetric.
  const Scalar s = params.spin_value();
  for (int i = 0; i < ops.dim; ++i) {
    const Scalar m = ops.sz(i, i);
    h(i, i) += zcoef * m + params.j_chain / (2 * s) * m * m;
  }
  return h;
}

/// Full Hamiltonian, a 2x2 block matrix over the single-spin space:
/// [[omega/2 + H_lmg^+, delta/2], [delta/2, -omega/2 + H_lmg^-]].
template <typename Scalar = double>
typename DickeOperators<Scalar>::MatrixType build_full(const ModelParams<Scalar>& params) {
  using MatrixType = typename DickeOperators<Scalar>::MatrixType;
  params.validate();
  const int d = params.dim();
  MatrixType h = MatrixType::Zero(2 * d, 2 * d);
  h.topLeftCorner(d, d) = build_lmg(params, Branch::plus);
  h.topLeftCorner(d, d).diagonal().array() += params.omega / 2;
  h.bottomRightCorner(d, d) = build_lmg(params, Branch::minus);
  h.bottomRightCorner(d, d).diagonal().array() -= params.omega / 2;
  h.topRightCorner(d, d).diagonal().setConstant(params.delta / 2);
  h.bottomLeftCorner(d, d).diagonal().setConstant(params.delta / 2);
  return h;
}

}  // namespace spinlab

#endif  // SPINLAB_MODEL_HPP
