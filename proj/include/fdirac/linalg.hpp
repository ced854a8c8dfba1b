#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>

namespace fdirac {

/// 2x2 complex matrix over the real scalar type Real.
template <class Real>
using CMat2T = Eigen::Matrix<std::complex<Real>, 2, 2>;

using CMat2 = CMat2T<double>;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

/// Max-norm (largest entry modulus) of a dense matrix.
template <class Derived>
auto max_norm(const Eigen::MatrixBase<Derived>& m) {
    return m.cwiseAbs().maxCoeff();
}

namespace detail {

template <class Real>
CMat2T<Real> pade6_exp(const CMat2T<Real>& m) {
    static constexpr Real c[] = {1.0, 0.5, 5.0 / 44.0, 1.0 / 66.0, 1.0 / 792.0,
                                 1.0 / 15840.0, 1.0 / 665280.0};
    const Real norm = m.cwiseAbs().rowwise().sum().maxCoeff();
    int squarings = 0;
    if (norm > Real(0.5)) {
        squarings = std::max(0, static_cast<int>(std::ceil(std::log2(norm / Real(0.5)))));
    }
    const CMat2T<Real> a = m / std::pow(Real(2), squarings);
    const CMat2T<Real> id = CMat2T<Real>::Identity();
    CMat2T<Real> power = id;
    CMat2T<Real> num = CMat2T<Real>::Zero();
    CMat2T<Real> den = CMat2T<Real>::Zero();
    for (int k = 0; k <= 6; ++k) {
        num += c[k] * power;
        den += ((k % 2 == 0) ? c[k] : -c[k]) * power;
        power = power * a;
    }
    CMat2T<Real> r = den.inverse() * num;
    for (int k = 0; k < squarings; ++k) r = r * r;
    return r;
}

}  // namespace detail

/// Matrix exponential. Traceless input uses cosh(mu) I + sinh(mu)/mu M with
/// mu^2 = -det M; other input falls back to scaling and squaring with a
/// degree-6 Pade approximant.
template <class Real>
CMat2T<Real> mat_exp(const CMat2T<Real>& m) {
    using C = std::complex<Real>;
    const C tr = m.trace();
    const Real scale = std::max(Real(1), m.cwiseAbs().maxCoeff());
    if (std::abs(tr) > Real(1e-14) * scale) return detail::pade6_exp<Real>(m);
    const C mu = std::sqrt(-m.determinant());
    C ch;
    C shc;
    if (std::abs(mu) < Real(1e-6)) {
        const C mu2 = mu * mu;
        ch = C(1) + mu2 / C(2) + mu2 * mu2 / C(24);
        shc = C(1) + mu2 / C(6) + mu2 * mu2 / C(120);
    } else {
        ch = std::cosh(mu);
        shc = std::sinh(mu) / mu;
    }
    return ch * CMat2T<Real>::Identity() + shc * m;
}

/// Solves A x = b by partial-pivot elimination; throws SingularMatrix when a
/// pivot falls below 1e-12 times the max-norm of A.
RealVector solve_linear(const RealMatrix& a, const RealVector& b);

/// Number of full-pivot elimination pivots exceeding tol times max-norm of A.
int numerical_rank(const RealMatrix& a, double tol);

/// Orthonormal basis of the null space of A, columns of the result.
RealMatrix null_space(const RealMatrix& a, double tol = 1e-10);

}  // namespace fdirac
