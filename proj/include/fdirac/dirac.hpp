#pragma once

#include "fdirac/double_group.hpp"

#include <functional>
#include <utility>
#include <vector>

namespace fdirac {

/// Point (g, eta) of the left-trivialized cotangent bundle, with cached
/// factors g = g+ g-.
struct PhasePoint {
    GroupElement g;
    DualVector eta;
    GroupElement g_plus;
    GroupElement g_minus;
};

PhasePoint make_point(const GroupDescriptor& d, const GroupElement& g, const DualVector& eta);

/// Left-trivialized differential dF = (g bold_d F, delta F).
struct Differential {
    DualVector bold_d;
    AlgebraVector delta;
};

/// Function on G x g* with its differential.
struct ScalarField {
    std::function<double(const PhasePoint&)> eval;
    std::function<Differential(const PhasePoint&)> diff;
    bool analytic = true;
};

/// Left-trivialized velocity: body velocity g^-1 gdot and eta dot.
struct TangentVector {
    AlgebraVector body_velocity;
    DualVector eta_dot;
};

/// Constraint fibration: N fibers over (g-, eta-), M fibers over (g+, eta+).
enum class Constraint { N, M };

/// Selects how the Dirac matrix is assembled.
enum class MatrixMode { ClosedForm, Verification };

/// Central finite-difference differential (group directions g exp(tE_i),
/// dual directions eta + t e_i).
Differential fd_differential(const GroupDescriptor& d,
                             const std::function<double(const PhasePoint&)>& f,
                             const PhasePoint& p, double step = 1e-5);

/// Field with finite-difference differential only.
ScalarField fd_field(const GroupDescriptor& d, std::function<double(const PhasePoint&)> f,
                     double step = 1e-5);

/// Real (imag = false) or imaginary part of the matrix entry g_ij.
ScalarField group_entry(const GroupDescriptor& d, int i, int j, bool imag);
/// Dual coordinate eta_A (A < n: xi_A, A >= n: xi^{A-n}).
ScalarField dual_coordinate(const GroupDescriptor& d, int index);
/// Product F G with the Leibniz differential.
ScalarField product(const ScalarField& f, const ScalarField& g);
/// The 8 real group-entry fields followed by the 2n dual coordinates.
std::vector<ScalarField> coordinate_fields(const GroupDescriptor& d);

/// Coordinates of the constraint map: entries of g- and the eta- block for
/// N, entries of g+ and the eta+ block for M.
std::vector<ScalarField> constraint_fields(const GroupDescriptor& d, Constraint side);

/// Moves p along V for time t: (g exp(t v), eta + t eta_dot).
PhasePoint flow_point(const GroupDescriptor& d, const PhasePoint& p, const TangentVector& v,
                      double t);

/// dF(V) = <g bold_d F, v> + <eta_dot, delta F>.
double apply(const Differential& df, const TangentVector& v);

/// Canonical bracket <g dF, dG> - <g dG, dF> - <eta, [dF, dG]>.
double canonical_bracket(const GroupDescriptor& d, const Differential& df,
                         const Differential& dg, const PhasePoint& p);
double canonical_bracket(const GroupDescriptor& d, const ScalarField& f, const ScalarField& g,
                         const PhasePoint& p);

/// Psi(g, eta) = (g-, eta-) for N, Upsilon(g, eta) = (g+, eta+) for M.
std::pair<GroupElement, DualVector> constraint_value(const GroupDescriptor& d,
                                                     const PhasePoint& p, Constraint side);

/// Differentials of the 2n constraint forms (alpha, beta for N; theta,
/// gamma for M).
std::vector<Differential> constraint_forms(const GroupDescriptor& d, const PhasePoint& p,
                                           Constraint side);

/// Omega_ab = -<eta-, [T^a, T^b]>.
RealMatrix omega_matrix(const GroupDescriptor& d, const DualVector& eta);

/// Dirac matrix of the constraint forms.
RealMatrix dirac_matrix(const GroupDescriptor& d, const PhasePoint& p, Constraint side,
                        MatrixMode mode = MatrixMode::ClosedForm);

/// Dirac bracket by inverting the Dirac matrix. Throws NotSecondClass.
double dirac_bracket_general(const GroupDescriptor& d, const Differential& df,
                             const Differential& dg, const PhasePoint& p, Constraint side,
                             MatrixMode mode = MatrixMode::ClosedForm);
double dirac_bracket_general(const GroupDescriptor& d, const ScalarField& f,
                             const ScalarField& g, const PhasePoint& p, Constraint side,
                             MatrixMode mode = MatrixMode::ClosedForm);

/// Projector Ad_{g-^-1} Pi+ Ad_{g-} in coordinates.
RealMatrix projector_N(const GroupDescriptor& d, const GroupElement& g_minus);

/// Closed-form Dirac bracket on N(g-, eta-).
double dirac_bracket_N(const GroupDescriptor& d, const Differential& df, const Differential& dg,
                       const PhasePoint& p);
double dirac_bracket_N(const GroupDescriptor& d, const ScalarField& f, const ScalarField& g,
                       const PhasePoint& p);

/// Closed-form Dirac bracket on M(g+, eta+).
double dirac_bracket_M(const GroupDescriptor& d, const Differential& df, const Differential& dg,
                       const PhasePoint& p);
double dirac_bracket_M(const GroupDescriptor& d, const ScalarField& f, const ScalarField& g,
                       const PhasePoint& p);

/// Closed-form bracket of the given side.
double dirac_bracket(const GroupDescriptor& d, const Differential& df, const Differential& dg,
                     const PhasePoint& p, Constraint side);

/// Fundamental Dirac brackets on N.
struct FundamentalBrackets {
    /// xi_T[a](i, j) = {xi_a, g_ij} (real and imaginary parts).
    std::vector<CMat2> xi_T;
    /// xi_xi(a, b) = {xi_a, xi_b}.
    RealMatrix xi_xi;
    /// f[c](a, b): [T_a, T_b] = f_ab^c T_c.
    std::vector<RealMatrix> f;
    /// m[c](a, b) and n[c](a, b) coefficients.
    std::vector<RealMatrix> m;
    std::vector<RealMatrix> n;
};

FundamentalBrackets fundamental_brackets_N(const GroupDescriptor& d, const PhasePoint& p);

/// Phi^L(g, eta) = coAd(g, eta).
DualVector momentum_map_left(const GroupDescriptor& d, const PhasePoint& p);

/// phi_X(g, eta) = <eta, Ad_{g^-1} X> with analytic differential.
ScalarField momentum_fn(const GroupDescriptor& d, const AlgebraVector& x);

/// -<coAd(g-, eta-), [Pi- Ad_{g+^-1} X, Pi- Ad_{g+^-1} Y]>.
double momentum_correction(const GroupDescriptor& d, const AlgebraVector& x,
                           const AlgebraVector& y, const PhasePoint& p);

/// Hamiltonian vector fields of the Dirac structures on N and M.
TangentVector ham_vf_N(const GroupDescriptor& d, const Differential& dh, const PhasePoint& p);
TangentVector ham_vf_N(const GroupDescriptor& d, const ScalarField& h, const PhasePoint& p);
TangentVector ham_vf_M(const GroupDescriptor& d, const Differential& dh, const PhasePoint& p);
TangentVector ham_vf_M(const GroupDescriptor& d, const ScalarField& h, const PhasePoint& p);

/// Closed-form Hamiltonian fields of phi_X on N and on M.
TangentVector momentum_vf_N(const GroupDescriptor& d, const AlgebraVector& x,
                            const PhasePoint& p);
TangentVector momentum_vf_M(const GroupDescriptor& d, const AlgebraVector& x,
                            const PhasePoint& p);

/// Induced action of G on N(g-, eta-).
PhasePoint g_action_N(const GroupDescriptor& d, const GroupElement& h, const PhasePoint& p);
/// Induced action of G on M(g+, eta+).
PhasePoint g_action_M(const GroupDescriptor& d, const GroupElement& h, const PhasePoint& p);

/// True iff the Dirac matrix has full numerical rank at tol 1e-10.
bool second_class_check(const GroupDescriptor& d, const PhasePoint& p, Constraint side);

}  // namespace fdirac
