#include "fdirac/sl2c_example.hpp"

#include "fdirac/errors.hpp"

#include <cmath>

namespace fdirac::sl2c {

namespace {

using C = std::complex<double>;
constexpr C I{0.0, 1.0};

RealVector six(const Eigen::Vector3d& plus, const Eigen::Vector3d& minus) {
    RealVector x(6);
    x << plus, minus;
    return x;
}

DualVector plus_dual(const Eigen::Vector3d& v) { return {six(v, Eigen::Vector3d::Zero())}; }

CMat2 su2_matrix(const std::array<C, 3>& c) {
    const std::vector<CMat2> t = basis();
    return c[0] * t[0] + c[1] * t[1] + c[2] * t[2];
}

CMat2 plus_matrix(const Eigen::Vector3d& v) {
    return su2_matrix({C(v(0)), C(v(1)), C(v(2))});
}

void require_beta(const Sl2Coordinates& s) {
    if (std::abs(s.beta) < 1e-10) throw SingularConfiguration("metric undefined at beta = 0");
}

}  // namespace

Sl2Coordinates coordinates(const PhasePoint& p) {
    Sl2Coordinates s;
    s.alpha = p.g_plus.matrix(0, 0);
    s.beta = p.g_plus.matrix(0, 1);
    s.a = p.g_minus.matrix(0, 0).real();
    s.z = p.g_minus.matrix(0, 1);
    s.eta_plus = p.eta.coords.head(3);
    s.eta_minus = p.eta.coords.tail(3);
    return s;
}

PhasePoint to_point(const GroupDescriptor& d, const Sl2Coordinates& s) {
    CMat2 gp;
    gp << s.alpha, s.beta, -std::conj(s.beta), std::conj(s.alpha);
    CMat2 gm;
    gm << s.a, s.z, 0.0, 1.0 / s.a;
    return make_point(d, GroupElement{gp * gm, Tag::Full}, DualVector{six(s.eta_plus, s.eta_minus)});
}

std::array<AlgebraVector, 3> explicit_projected_generators(const GroupDescriptor& d, double a,
                                                           double b, double c) {
    const double k = 1.0 - b * b / (a * a) - c * c / (a * a) - 1.0 / std::pow(a, 4);
    RealVector g1(6);
    RealVector g2(6);
    RealVector g3(6);
    g1 << 1, 0, 0, 0, -k, -2 * c / a;
    g2 << 0, 1, 0, k, 0, -2 * b / a;
    g3 << 0, 0, 1, 2 * c / a, 2 * b / a, 0;
    return {algebra_from_coords(d, g1), algebra_from_coords(d, g2), algebra_from_coords(d, g3)};
}

ExplicitBrackets explicit_fundamental_brackets(const GroupDescriptor& d, const Sl2Coordinates& s) {
    ExplicitBrackets out = explicit_character_brackets(d, s);
    const double a = s.a;
    const double b = s.b();
    const double c = s.c();
    const double r = (b * b + c * c) / (a * a) + 1.0 / std::pow(a, 4);
    const Eigen::Vector3d& u = s.eta_minus;
    const double x12 = 2 * (c / a) * (1 + r) * u(0) + 2 * (b / a) * (1 + r) * u(1);
    const double x13 = 2 * ((b * b - c * c) / (a * a) + 1.0 / std::pow(a, 4) - 1) * u(0) -
                       4 * (b * c / (a * a)) * u(1) + 4 * (b / a) * u(2);
    const double x23 = -4 * (b * c / (a * a)) * u(0) +
                       2 * ((c * c - b * b) / (a * a) + 1.0 / std::pow(a, 4) - 1) * u(1) -
                       4 * (c / a) * u(2);
    out.xi_xi(0, 1) += x12;
    out.xi_xi(1, 0) -= x12;
    out.xi_xi(0, 2) += x13;
    out.xi_xi(2, 0) -= x13;
    out.xi_xi(1, 2) += x23;
    out.xi_xi(2, 1) -= x23;
    return out;
}

ExplicitBrackets explicit_character_brackets(const GroupDescriptor& d, const Sl2Coordinates& s) {
    const double a = s.a;
    const double b = s.b();
    const double c = s.c();
    const double r = (b * b + c * c) / (a * a) + 1.0 / std::pow(a, 4);
    const Eigen::Vector3d& x = s.eta_plus;
    const PhasePoint p = to_point(d, s);
    const auto gens = explicit_projected_generators(d, a, b, c);
    ExplicitBrackets out;
    for (int k = 0; k < 3; ++k) out.xi_T[k] = -(p.g.matrix * gens[k].matrix);
    out.xi_xi.setZero();
    out.xi_xi(0, 1) = -2 * (b / a) * x(0) + 2 * (c / a) * x(1) + 2 * r * x(2);
    out.xi_xi(0, 2) = -2 * x(1) - 2 * (c / a) * x(2);
    out.xi_xi(1, 2) = 2 * x(0) - 2 * (b / a) * x(2);
    out.xi_xi(1, 0) = -out.xi_xi(0, 1);
    out.xi_xi(2, 0) = -out.xi_xi(0, 2);
    out.xi_xi(2, 1) = -out.xi_xi(1, 2);
    return out;
}

Eigen::Vector3d phi_explicit(const Sl2Coordinates& s) {
    const C al = s.alpha;
    const C be = s.beta;
    const C alb = std::conj(al);
    const C beb = std::conj(be);
    const C z = s.z;
    const C zb = std::conj(z);
    const double a = s.a;
    const double a2 = a * a;
    const Eigen::Vector3d& e = s.eta_plus;
    const C p1 = 0.5 * I * a2 * (be * be - beb * beb) * e(0) - 0.5 * a2 * (be * be + beb * beb) * e(1) +
                 0.5 * I * (al * be - alb * beb - a * zb * be * be + a * z * beb * beb) * e(2);
    const C p2 = -0.5 * a2 * (be * be + beb * beb) * e(0) - 0.5 * I * a2 * (be * be - beb * beb) * e(1) +
                 0.5 * (a * zb * be * be + a * z * beb * beb - alb * beb - al * be) * e(2);
    const C p3 = -0.5 * I * a2 * (alb * be - al * beb) * e(0) + 0.5 * a2 * (al * beb + alb * be) * e(1) +
                 0.5 * I * a * (zb * alb * be - z * al * beb) * e(2);
    return {p1.real(), p2.real(), p3.real()};
}

double example_hamiltonian(const GroupDescriptor& d, const PhasePoint& p) {
    const AlgebraVector x =
        project(d, Ad(d, p.g, flat_map(d, project_dual(d, p.eta, Side::Plus))), Side::Plus);
    return (-killing(x.matrix, x.matrix) / 16.0).real();
}

Eigen::Vector3d example_plus_velocity(const GroupDescriptor& d, const PhasePoint& p) {
    const TangentVector v = example_hamilton_eqs(d, p);
    return Ad(d, p.g_minus, v.body_velocity).coords.head(3);
}

TangentVector example_hamilton_eqs(const GroupDescriptor& d, const PhasePoint& p) {
    if (p.eta.coords.tail(3).cwiseAbs().maxCoeff() > 0.0) {
        throw NotCharacter("example_hamilton_eqs: requires eta- = 0");
    }
    const DualVector ep = project_dual(d, p.eta, Side::Plus);
    const AlgebraVector x = project(d, Ad(d, p.g, flat_map(d, ep)), Side::Plus);
    RealVector kh = RealVector::Zero(6);
    for (int i = 0; i < 3; ++i) kh(i) = killing(x.matrix, d.basis[i]).real();
    const AlgebraVector w = flat_map(d, DualVector{kh});
    const AlgebraVector aw = Ad(d, inverse(p.g_plus), w);
    const AlgebraVector plus_velocity = (-1.0 / 8.0) * project(d, aw, Side::Plus);
    const DualVector moved = coAd(d, p.g_minus, ep);
    const DualVector rhs =
        (1.0 / 8.0) * project_dual(d, -coad(d, project(d, aw, Side::Minus), moved), Side::Plus);
    return {Ad(d, inverse(p.g_minus), plus_velocity), coAd(d, inverse(p.g_minus), rhs)};
}

std::array<C, 2> metric_coefficients(const Sl2Coordinates& s) {
    require_beta(s);
    const C al = s.alpha;
    const C be = s.beta;
    const C alb = std::conj(al);
    const C beb = std::conj(be);
    const C z = s.z;
    const C zb = std::conj(z);
    const double a = s.a;
    const C den = 2.0 * a * a * be * beb;
    const C m = ((a * a - 1.0) * (be * alb + al * beb) + a * (zb + z) * be * beb) / den;
    const C n = I * ((1.0 - a * a) * (al * beb - be * alb) + a * (z - zb) * be * beb) / den;
    return {m, n};
}

Eigen::Matrix3d metric_K(const Sl2Coordinates& s) {
    const auto mn = metric_coefficients(s);
    const double m = mn[0].real();
    const double n = mn[1].real();
    Eigen::Matrix3d k;
    k << 1, 0, m, 0, 1, n, m, n, 1;
    return k / (2.0 * std::norm(s.beta));
}

std::array<C, 3> vector_A_coefficients(const Sl2Coordinates& s) {
    const C al = s.alpha;
    const C be = s.beta;
    const C alb = std::conj(al);
    const C ga = -std::conj(be);
    const C z = s.z;
    const C zb = std::conj(z);
    const double a = s.a;
    const C u = be * (a * z * ga - alb);
    const C w = ga * (a * zb * be - al);
    return {I / 8.0 * (u + w), -(u - w) / 8.0, a * a * be * ga / 4.0};
}

AlgebraVector vector_A(const GroupDescriptor& d, const Sl2Coordinates& s) {
    return algebra_from_matrix(d, su2_matrix(vector_A_coefficients(s)));
}

C constraint_Omega(const GroupDescriptor&, const Sl2Coordinates& s, const Eigen::Vector3d& v) {
    return killing(su2_matrix(vector_A_coefficients(s)), plus_matrix(v));
}

C lagrangian_eval(const GroupDescriptor&, const Sl2Coordinates& s, const Eigen::Vector3d& v,
                  double lambda) {
    const Eigen::Vector3d kv = metric_K(s) * v;
    const CMat2 rhs = plus_matrix(kv) + lambda * su2_matrix(vector_A_coefficients(s));
    return -killing(plus_matrix(v), rhs) / 8.0;
}

LegendreRoundTrip legendre_round_trip(const GroupDescriptor& d, const PhasePoint& p) {
    const Sl2Coordinates s = coordinates(p);
    const auto velocity = [&](const Eigen::Vector3d& eta_plus) {
        const PhasePoint q = make_point(d, p.g, plus_dual(eta_plus));
        return example_plus_velocity(d, q);
    };
    Eigen::Matrix3d vmap;
    for (int i = 0; i < 3; ++i) vmap.col(i) = velocity(Eigen::Vector3d::Unit(i));
    const Eigen::Vector3d v = velocity(s.eta_plus);
    Eigen::CompleteOrthogonalDecomposition<Eigen::Matrix3d> cod(vmap);
    cod.setThreshold(1e-10);
    const Eigen::Vector3d eta2 = cod.solve(v);
    const PhasePoint q = make_point(d, p.g, plus_dual(eta2));
    const double h0 = example_hamiltonian(d, p);
    const double h2 = example_hamiltonian(d, q);
    LegendreRoundTrip r;
    r.rank = static_cast<int>(cod.rank());
    r.velocity_residual = (vmap * eta2 - v).cwiseAbs().maxCoeff();
    r.energy_residual = std::abs(h2 - h0);
    const C lag = lagrangian_eval(d, s, v, 0.0);
    r.legendre_residual = std::abs(lag + h2 - eta2.dot(v));
    return r;
}

}  // namespace fdirac::sl2c
