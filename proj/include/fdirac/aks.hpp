#pragma once

#include "fdirac/dirac.hpp"

#include <functional>
#include <utility>
#include <vector>

namespace fdirac {

/// Function h on g* with its Legendre map L_h: <xi, L_h(eta)> = dh_eta(xi).
struct CollectiveHamiltonian {
    std::function<double(const DualVector&)> h;
    std::function<AlgebraVector(const DualVector&)> legendre;
    bool ad_invariant = false;
};

/// h(xi) = 1/2 <xi, flat(xi)>, L_h = flat_map.
CollectiveHamiltonian quadratic_hamiltonian(const GroupDescriptor& d);
/// h(xi) = 1/2 <xi, K^-1 xi> for the invariant form (X, Y)_K = -1/2 Re tr(XY).
CollectiveHamiltonian killing_hamiltonian(const GroupDescriptor& d);
/// h(xi) = (1/2 <xi, flat(xi)>)^2.
CollectiveHamiltonian quartic_hamiltonian(const GroupDescriptor& d);
/// h(xi) = xi_index (not Ad-invariant).
CollectiveHamiltonian linear_hamiltonian(const GroupDescriptor& d, int index);

/// h o Phi^L as a field on G x g*.
ScalarField lift(const GroupDescriptor& d, const CollectiveHamiltonian& h);

/// Dirac Hamiltonian field of h o Phi^L on N for Ad-invariant h.
TangentVector collective_vf(const GroupDescriptor& d, const CollectiveHamiltonian& h,
                            const PhasePoint& p);

using VectorField = std::function<TangentVector(const PhasePoint&)>;

/// Sampled solution curve.
struct Trajectory {
    std::vector<double> times;
    std::vector<PhasePoint> points;
    /// G- factor h-(t) of k(t) (factorization solutions only).
    std::vector<GroupElement> h_minus;
};

/// Fourth-order Munthe-Kaas Runge-Kutta on g' = g v, eta' = w; g is
/// rescaled to unit determinant after each step. Records every step.
Trajectory integrate_rk4(const GroupDescriptor& d, const VectorField& vf, const PhasePoint& p0,
                         double t_end, int steps);

/// Endpoint of integrate_rk4 without storing the trajectory.
PhasePoint integrate_rk4_endpoint(const GroupDescriptor& d, const VectorField& vf,
                                  const PhasePoint& p0, double t_end, int steps);

/// Solution by factorization of k(t) = g+(0) exp(t L_h(xi0)), xi0 =
/// coAd(g-, eta0), sampled at samples + 1 uniform times. Throws
/// NotCharacter when eta- of p0 is not a character.
Trajectory solve_by_factorization(const GroupDescriptor& d, const CollectiveHamiltonian& h,
                                  const PhasePoint& p0, double t_end, int samples);

/// xi = coAd(h-^-1 g-, eta) recovered from a factorization sample.
DualVector reconstruct_xi(const GroupDescriptor& d, const PhasePoint& p,
                          const GroupElement& h_minus);

/// {f o Phi^L, g o Phi^L}^N at p.
double involutivity_check(const GroupDescriptor& d, const CollectiveHamiltonian& f,
                          const CollectiveHamiltonian& g, const PhasePoint& p);

/// J(g, xi) = (plus block of coAd(g, xi), minus block of xi).
std::pair<DualVector, DualVector> aks_momentum_J(const GroupDescriptor& d, const PhasePoint& p);

/// L(g, xi) = (plus and minus blocks of coAd(g-, xi)). Throws NotOnLevelSet
/// when J(p) differs from (eta_plus, eta_minus) by more than tol.
std::pair<DualVector, DualVector> orbit_map_L(const GroupDescriptor& d, const PhasePoint& p,
                                              const DualVector& eta_plus,
                                              const DualVector& eta_minus, double tol = 1e-8);

/// 1/2 <s+, s+ flat> + 1/2 <s-, s- flat> + <s+, s- flat>.
double reduced_hamiltonian(const GroupDescriptor& d, const DualVector& s_plus,
                           const DualVector& s_minus);

/// Reduced Hamiltonian field on the orbit product.
std::pair<DualVector, DualVector> orbit_vf(const GroupDescriptor& d, const DualVector& s_plus,
                                           const DualVector& s_minus);

/// <s+, [X+, Y+]> - <s-, [X-, Y-]>.
double orbit_form(const GroupDescriptor& d, const DualVector& s_plus, const DualVector& s_minus,
                  const std::pair<AlgebraVector, AlgebraVector>& x,
                  const std::pair<AlgebraVector, AlgebraVector>& y);

/// Canonical 2-form on left-trivialized tangent vectors (X, lambda), (Y, mu).
double canonical_form(const GroupDescriptor& d, const PhasePoint& p, const TangentVector& v1,
                      const TangentVector& v2);

/// Orthonormal basis of tangent vectors to the level set of J at p; each
/// entry is (X, lambda).
std::vector<TangentVector> lambda_tangent_basis(const GroupDescriptor& d, const PhasePoint& p);

/// Derivative of orbit_map_L along a tangent vector.
std::pair<DualVector, DualVector> orbit_pushforward(const GroupDescriptor& d,
                                                    const PhasePoint& p,
                                                    const TangentVector& v);

/// Orbit generators (Pi+ Ad_{g-} X, Pi- Ad_{g-} X) of a tangent vector.
std::pair<AlgebraVector, AlgebraVector> orbit_generators(const GroupDescriptor& d,
                                                         const PhasePoint& p,
                                                         const AlgebraVector& x);

/// Reduced quadratic field on N(g-, eta-). Throws NotCharacter.
TangentVector aks_vf_on_N(const GroupDescriptor& d, const PhasePoint& p);

}  // namespace fdirac
