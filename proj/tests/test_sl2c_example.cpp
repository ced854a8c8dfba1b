#include "fdirac/errors.hpp"
#include "fdirac/sl2c_example.hpp"

#include <doctest.h>

using namespace fdirac;
using namespace fdirac::sl2c;

namespace {

const GroupDescriptor& sl2() { return descriptor(); }

double gap(const RealVector& x, const RealVector& y) { return (x - y).cwiseAbs().maxCoeff(); }

double gap(const TangentVector& x, const TangentVector& y) {
    return std::max(gap(x.body_velocity.coords, y.body_velocity.coords), gap(x.eta_dot.coords, y.eta_dot.coords));
}

PhasePoint character_point(Sampler& s, double x3 = 0.0) {
    DualVector eta = s.dual(sl2());
    eta.coords.tail(3) << 0, 0, x3;
    return make_point(sl2(), s.group(sl2()), eta);
}

}  // namespace

TEST_CASE("projected generators") {
    const auto& d = sl2();
    const auto unit = explicit_projected_generators(d, 1, 0, 0);
    for (int a = 0; a < 3; ++a) CHECK(gap(unit[a].coords, algebra_basis(d, a).coords) <= 1e-15);

    Sampler s(81);
    for (int k = 0; k < 50; ++k) {
        const Sl2Coordinates c = coordinates(make_point(d, s.group(d), s.dual(d)));
        const auto gens = explicit_projected_generators(d, c.a, c.b(), c.c());
        const RealMatrix proj = projector_N(d, to_point(d, c).g_minus);
        for (int a = 0; a < 3; ++a) CHECK(gap(gens[a].coords, proj.col(a)) <= 1e-10);
        CHECK(gap(project(d, gens[2], Side::Plus).coords, algebra_basis(d, 2).coords) <= 1e-12);
    }
    const auto fixed = explicit_projected_generators(d, 2, 1, -1);
    const RealMatrix proj = projector_N(d, to_point(d, Sl2Coordinates{1.0, 0.0, 2.0, {1.0, -1.0}}).g_minus);
    for (int a = 0; a < 3; ++a) CHECK(gap(fixed[a].coords, proj.col(a)) <= 1e-10);
}

TEST_CASE("coordinates round trip") {
    const auto& d = sl2();
    Sampler s(82);
    for (int k = 0; k < 20; ++k) {
        const PhasePoint p = make_point(d, s.group(d), s.dual(d));
        const PhasePoint q = to_point(d, coordinates(p));
        CHECK(max_norm(q.g.matrix - p.g.matrix) <= 1e-12);
        CHECK(gap(q.eta.coords, p.eta.coords) <= 1e-15);
    }
}

TEST_CASE("character bracket table") {
    const auto& d = sl2();
    Sampler s(83);
    for (int k = 0; k < 50; ++k) {
        const PhasePoint p = character_point(s);
        const Sl2Coordinates c = coordinates(p);
        const Eigen::Vector3d x = c.eta_plus;
        const ExplicitBrackets t = explicit_character_brackets(d, c);
        CHECK(t.xi_xi(2, 0) == doctest::Approx(2 * x(1) + 2 * (c.c() / c.a) * x(2)));
        CHECK(t.xi_xi(1, 2) == doctest::Approx(2 * x(0) - 2 * (c.b() / c.a) * x(2)));
        CHECK((t.xi_xi + t.xi_xi.transpose()).cwiseAbs().maxCoeff() <= 1e-14);

        const FundamentalBrackets fb = fundamental_brackets_N(d, p);
        const ExplicitBrackets full = explicit_fundamental_brackets(d, c);
        CHECK(max_norm(RealMatrix(fb.xi_xi.topLeftCorner(3, 3) - RealMatrix(t.xi_xi))) <= 1e-9);
        CHECK(max_norm(RealMatrix(full.xi_xi - t.xi_xi)) <= 1e-12);
        for (int a = 0; a < 3; ++a) CHECK(max_norm(CMat2(fb.xi_T[a] - t.xi_T[a])) <= 1e-9);
    }
}

TEST_CASE("full bracket table matches the engine") {
    const auto& d = sl2();
    Sampler s(84);
    for (int k = 0; k < 50; ++k) {
        const PhasePoint p = make_point(d, s.group(d), s.dual(d));
        const FundamentalBrackets fb = fundamental_brackets_N(d, p);
        const ExplicitBrackets t = explicit_fundamental_brackets(d, coordinates(p));
        CHECK(max_norm(RealMatrix(fb.xi_xi.topLeftCorner(3, 3) - RealMatrix(t.xi_xi))) <= 1e-9);
        for (int a = 0; a < 3; ++a) CHECK(max_norm(CMat2(fb.xi_T[a] - t.xi_T[a])) <= 1e-9);
    }
}

TEST_CASE("momentum components") {
    const auto& d = sl2();
    Sampler s(85);
    Sl2Coordinates id{1.0, 0.0, 1.0, 0.0};
    id.eta_plus << 0.3, -0.2, 0.7;
    CHECK(phi_explicit(id).cwiseAbs().maxCoeff() <= 1e-15);

    for (int k = 0; k < 50; ++k) {
        const PhasePoint p = character_point(s);
        const Eigen::Vector3d ph = phi_explicit(coordinates(p));
        const DualVector mom = momentum_map_left(d, p);
        for (int a = 0; a < 3; ++a) CHECK(std::abs(ph(a) - pair(mom, algebra_basis(d, 3 + a))) <= 1e-10);

        Sl2Coordinates c = coordinates(p);
        c.beta = 0.0;
        c.alpha = std::polar(1.0, s.uniform(0.0, 6.0));
        c.a = 1.0;
        c.z = 0.0;
        const Eigen::Vector3d diag = phi_explicit(c);
        CHECK(std::abs(diag(0)) <= 1e-14);
        CHECK(std::abs(diag(1)) <= 1e-14);
    }
}

TEST_CASE("example Hamiltonian and Hamilton equations") {
    const auto& d = sl2();
    Sampler s(86);
    const ScalarField h = fd_field(d, [&d](const PhasePoint& x) { return example_hamiltonian(d, x); });
    for (int k = 0; k < 20; ++k) {
        const PhasePoint p = character_point(s);
        CHECK(gap(example_hamilton_eqs(d, p), ham_vf_N(d, h, p)) <= 1e-8);
        CHECK(gap(example_plus_velocity(d, p),
                  tangent_split(d, p.g, example_hamilton_eqs(d, p).body_velocity).plus_velocity.coords.head(3)) <= 1e-10);

        DualVector eta = p.eta;
        eta.coords.head(3).setZero();
        const PhasePoint rest = make_point(d, p.g, eta);
        CHECK(example_hamiltonian(d, rest) == 0.0);
        CHECK(gap(example_hamilton_eqs(d, rest), TangentVector{algebra_zero(d), dual_zero(d)}) <= 1e-15);
    }
    CHECK_THROWS_AS(example_hamilton_eqs(d, character_point(s, 0.5)), NotCharacter);
}

TEST_CASE("metric tensor") {
    const auto& d = sl2();
    Sampler s(87);
    int tested = 0;
    while (tested < 50) {
        const GroupElement g = s.plus(d);
        if (std::abs(g.matrix(0, 1)) < 0.2) continue;
        const PhasePoint p = make_point(d, g, dual_zero(d));
        const Sl2Coordinates c = coordinates(p);
        const Eigen::Matrix3d k = metric_K(c);
        CHECK((k - Eigen::Matrix3d(k.diagonal().asDiagonal())).cwiseAbs().maxCoeff() <= 1e-14);
        const auto mn = metric_coefficients(c);
        CHECK(std::abs(mn[0].imag()) <= 1e-12);
        CHECK(std::abs(mn[1].imag()) <= 1e-12);
        CHECK(k(0, 0) == doctest::Approx(0.5 / std::norm(c.beta)));

        const auto coeff = vector_A_coefficients(c);
        Eigen::Vector3d re;
        Eigen::Vector3d im;
        for (int a = 0; a < 3; ++a) {
            re(a) = coeff[a].real();
            im(a) = coeff[a].imag();
        }
        Eigen::Vector3d v = re.cross(im);
        if (v.norm() < 1e-6) v = re.unitOrthogonal();
        CHECK(std::abs(constraint_Omega(d, c, v)) <= 1e-12 * (1.0 + re.norm() + im.norm()));

        CHECK(std::abs(lagrangian_eval(d, c, Eigen::Vector3d::Zero(), 0.0)) == 0.0);
        const Eigen::Vector3d w(s.uniform(), s.uniform(), s.uniform());
        const auto l0 = lagrangian_eval(d, c, w, 0.0);
        const auto l1 = lagrangian_eval(d, c, w, 1.0);
        const auto l2 = lagrangian_eval(d, c, w, 2.0);
        CHECK(std::abs(l2 - 2.0 * l1 + l0) <= 1e-12 * (1.0 + std::abs(l0)));

        const LegendreRoundTrip rt = legendre_round_trip(d, make_point(d, g, s.dual(d)));
        CHECK(rt.velocity_residual <= 1e-7);
        CHECK(rt.legendre_residual <= 1e-7);
        CHECK(rt.energy_residual <= 1e-7);
        CHECK(rt.rank == 2);
        ++tested;
    }

    Sl2Coordinates flat{1.0, 1e-12, 1.0, 0.0};
    CHECK_THROWS_AS(metric_K(flat), SingularConfiguration);
}
