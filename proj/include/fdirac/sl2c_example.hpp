#pragma once

#include "fdirac/dirac.hpp"
#include "fdirac/sl2c.hpp"

#include <array>
#include <complex>

namespace fdirac::sl2c {

/// Explicit coordinates of a phase point: g+ = (alpha beta; -conj beta
/// conj alpha), g- = (a z; 0 1/a), eta_plus = (xi_1, xi_2, xi_3), eta_minus =
/// (xi^1, xi^2, xi^3).
struct Sl2Coordinates {
    std::complex<double> alpha;
    std::complex<double> beta;
    double a = 1.0;
    std::complex<double> z;
    Eigen::Vector3d eta_plus = Eigen::Vector3d::Zero();
    Eigen::Vector3d eta_minus = Eigen::Vector3d::Zero();

    double b() const { return z.real(); }
    double c() const { return z.imag(); }
};

Sl2Coordinates coordinates(const PhasePoint& p);
PhasePoint to_point(const GroupDescriptor& d, const Sl2Coordinates& s);

/// Ad_{g-^-1} Pi+ Ad_{g-} T_a in closed form.
std::array<AlgebraVector, 3> explicit_projected_generators(const GroupDescriptor& d, double a,
                                                           double b, double c);

/// Explicit fundamental brackets {xi_a, g_ij} and {xi_a, xi_b}.
struct ExplicitBrackets {
    std::array<CMat2, 3> xi_T;
    Eigen::Matrix3d xi_xi;
};

/// Full table on N(g-, eta-).
ExplicitBrackets explicit_fundamental_brackets(const GroupDescriptor& d, const Sl2Coordinates& s);
/// Reduced table on N(g-, 0).
ExplicitBrackets explicit_character_brackets(const GroupDescriptor& d, const Sl2Coordinates& s);

/// (phi^1, phi^2, phi^3) as polynomials in alpha, beta, a, z, eta_plus.
Eigen::Vector3d phi_explicit(const Sl2Coordinates& s);

/// H = -1/16 kappa(Pi+ Ad_g psi(eta+), Pi+ Ad_g psi(eta+)).
double example_hamiltonian(const GroupDescriptor& d, const PhasePoint& p);

/// Hamilton equations of the example Hamiltonian on N(g-, 0). Throws
/// NotCharacter when eta- is nonzero.
TangentVector example_hamilton_eqs(const GroupDescriptor& d, const PhasePoint& p);

/// Plus coordinates of g+^-1 d/dt g+ from the first example equation.
Eigen::Vector3d example_plus_velocity(const GroupDescriptor& d, const PhasePoint& p);

/// Coefficients m, n of the metric tensor.
std::array<std::complex<double>, 2> metric_coefficients(const Sl2Coordinates& s);

/// K = 1/(2|beta|^2) [[1,0,m],[0,1,n],[m,n,1]] on T_1, T_2, T_3. Throws
/// SingularConfiguration when |beta| < 1e-10.
Eigen::Matrix3d metric_K(const Sl2Coordinates& s);

/// Constraint vector A = sum c_a T_a (complex coefficients).
std::array<std::complex<double>, 3> vector_A_coefficients(const Sl2Coordinates& s);
AlgebraVector vector_A(const GroupDescriptor& d, const Sl2Coordinates& s);

/// Omega(v) = kappa(A, v) for v in su2 (plus coordinates).
std::complex<double> constraint_Omega(const GroupDescriptor& d, const Sl2Coordinates& s,
                                      const Eigen::Vector3d& v);

/// L = -1/8 kappa(v, K v + lambda A).
std::complex<double> lagrangian_eval(const GroupDescriptor& d, const Sl2Coordinates& s,
                                     const Eigen::Vector3d& v, double lambda);

/// Residuals of the Legendre round trip eta+ -> v -> eta+' at g- = e.
struct LegendreRoundTrip {
    /// |V eta+' - v| for the recovered momentum.
    double velocity_residual = 0.0;
    /// |L(v, 0) + H(eta+') - <eta+', v>|.
    double legendre_residual = 0.0;
    /// |H(eta+') - H(eta+)|.
    double energy_residual = 0.0;
    /// Numerical rank of the velocity map.
    int rank = 0;
};

LegendreRoundTrip legendre_round_trip(const GroupDescriptor& d, const PhasePoint& p);

}  // namespace fdirac::sl2c
