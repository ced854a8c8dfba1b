#include "fdirac/dirac.hpp"
#include "fdirac/errors.hpp"
#include "fdirac/sl2c.hpp"

#include <doctest.h>

using namespace fdirac;
using C = std::complex<double>;

namespace {

const GroupDescriptor& sl2() { return sl2c::descriptor(); }

double gap(const RealVector& x, const RealVector& y) { return (x - y).cwiseAbs().maxCoeff(); }

double gap(const Differential& x, const Differential& y) {
    return std::max(gap(x.bold_d.coords, y.bold_d.coords), gap(x.delta.coords, y.delta.coords));
}

double gap(const TangentVector& x, const TangentVector& y) {
    return std::max(gap(x.body_velocity.coords, y.body_velocity.coords), gap(x.eta_dot.coords, y.eta_dot.coords));
}

PhasePoint random_point(Sampler& s) {
    const GroupElement g = s.group(sl2());
    return make_point(sl2(), g, s.dual(sl2()));
}

PhasePoint with_minus(const PhasePoint& p, double x1, double x2, double x3) {
    DualVector eta = p.eta;
    eta.coords.tail(3) << x1, x2, x3;
    return make_point(sl2(), p.g, eta);
}

/// Fixed point alpha = 0.6 + 0.48i, beta = 0.64i, a = 2, z = 1 - i.
PhasePoint fixture() {
    CMat2 k;
    k << C(0.6, 0.48), C(0, 0.64), C(0, 0.64), C(0.6, -0.48);
    CMat2 b;
    b << 2.0, C(1, -1), 0, 0.5;
    RealVector eta(6);
    eta << 0.3, -0.7, 0.5, 0.2, 0.1, -0.4;
    return make_point(sl2(), GroupElement{k * b, Tag::Full}, DualVector{eta});
}

/// Velocity of a curve of phase points at t = 0 by central differences.
TangentVector curve_velocity(const std::function<PhasePoint(double)>& curve, double h = 1e-5) {
    const PhasePoint p0 = curve(0.0);
    const PhasePoint fwd = curve(h);
    const PhasePoint bwd = curve(-h);
    const CMat2 body = p0.g.matrix.inverse() * (fwd.g.matrix - bwd.g.matrix) / (2 * h);
    const auto& d = sl2();
    RealVector rhs(d.dim());
    for (int i = 0; i < d.dim(); ++i) rhs(i) = d.form(body, d.basis[i]);
    return {algebra_from_coords(d, d.pairing_inverse * rhs), DualVector{(fwd.eta.coords - bwd.eta.coords) / (2 * h)}};
}

}  // namespace

TEST_CASE("make_point caches the factorization") {
    Sampler s(41);
    const PhasePoint p = random_point(s);
    CHECK(max_norm(p.g_plus.matrix * p.g_minus.matrix - p.g.matrix) <= 1e-12);
    CHECK(p.g_plus.tag == Tag::Plus);
    CHECK(p.g_minus.tag == Tag::Minus);
}

TEST_CASE("analytic differentials match finite differences") {
    const auto& d = sl2();
    Sampler s(42);
    std::vector<ScalarField> fields = coordinate_fields(d);
    fields.push_back(momentum_fn(d, s.algebra(d)));
    fields.push_back(product(fields[1], fields[9]));
    for (const Constraint side : {Constraint::N, Constraint::M}) {
        for (const auto& f : constraint_fields(d, side)) fields.push_back(f);
    }
    for (int k = 0; k < 10; ++k) {
        const PhasePoint p = random_point(s);
        for (const auto& f : fields) {
            CHECK(f.analytic);
            CHECK(gap(f.diff(p), fd_differential(d, f.eval, p)) <= 1e-6);
        }
    }
}

TEST_CASE("canonical bracket") {
    const auto& d = sl2();
    Sampler s(43);
    for (int k = 0; k < 20; ++k) {
        const PhasePoint p = random_point(s);
        const ScalarField f = momentum_fn(d, s.algebra(d));
        CHECK(canonical_bracket(d, f, f, p) == 0.0);
        for (int a = 0; a < 6; ++a) {
            for (int b = 0; b < 6; ++b) {
                const double expected = -pair(p.eta, ad(d, algebra_basis(d, a), algebra_basis(d, b)));
                CHECK(canonical_bracket(d, dual_coordinate(d, a), dual_coordinate(d, b), p) ==
                      doctest::Approx(expected).epsilon(1e-12));
            }
            const CMat2 gt = p.g.matrix * d.basis[a];
            for (int i = 0; i < 2; ++i) {
                for (int j = 0; j < 2; ++j) {
                    CHECK(canonical_bracket(d, dual_coordinate(d, a), group_entry(d, i, j, false), p) ==
                          doctest::Approx(-gt(i, j).real()).epsilon(1e-12));
                    CHECK(canonical_bracket(d, dual_coordinate(d, a), group_entry(d, i, j, true), p) ==
                          doctest::Approx(-gt(i, j).imag()).epsilon(1e-12));
                }
            }
        }
    }
}

TEST_CASE("constraint values") {
    const auto& d = sl2();
    Sampler s(44);
    DualVector eta = s.dual(d);
    eta.coords.tail(3).setZero();
    const PhasePoint q = make_point(d, s.plus(d), eta);
    const auto [gm, em] = constraint_value(d, q, Constraint::N);
    CHECK(max_norm(gm.matrix - CMat2::Identity()) <= 1e-12);
    CHECK(em.coords.cwiseAbs().maxCoeff() == 0.0);

    const PhasePoint p = random_point(s);
    const auto [n_g, n_eta] = constraint_value(d, p, Constraint::N);
    CHECK(max_norm(n_g.matrix - p.g_minus.matrix) == 0.0);
    CHECK(gap(n_eta.coords, project_dual(d, p.eta, Side::Minus).coords) == 0.0);
    const auto [m_g, m_eta] = constraint_value(d, p, Constraint::M);
    CHECK(max_norm(m_g.matrix - p.g_plus.matrix) == 0.0);
    CHECK(gap(m_eta.coords, project_dual(d, p.eta, Side::Plus).coords) == 0.0);
}

TEST_CASE("Dirac matrices") {
    const auto& d = sl2();
    Sampler s(45);
    const PhasePoint p = with_minus(random_point(s), 0, 0, 0);
    RealMatrix expected = RealMatrix::Zero(6, 6);
    expected.topRightCorner(3, 3) = -RealMatrix::Identity(3, 3);
    expected.bottomLeftCorner(3, 3) = RealMatrix::Identity(3, 3);
    CHECK(max_norm(dirac_matrix(d, p, Constraint::N) - expected) <= 1e-14);

    const PhasePoint q = random_point(s);
    const RealMatrix omega = omega_matrix(d, q.eta);
    CHECK(max_norm(RealMatrix(omega + omega.transpose())) == 0.0);
    const RealMatrix cn = dirac_matrix(d, q, Constraint::N);
    CHECK(max_norm(RealMatrix(cn.bottomRightCorner(3, 3) - omega)) <= 1e-14);
    RealMatrix inverse = RealMatrix::Zero(6, 6);
    inverse.topLeftCorner(3, 3) = omega;
    inverse.topRightCorner(3, 3) = RealMatrix::Identity(3, 3);
    inverse.bottomLeftCorner(3, 3) = -RealMatrix::Identity(3, 3);
    CHECK(max_norm(RealMatrix(cn * inverse - RealMatrix::Identity(6, 6))) <= 1e-14);
    CHECK(max_norm(RealMatrix(cn - dirac_matrix(d, q, Constraint::N, MatrixMode::Verification))) <= 1e-12);

    const PhasePoint r = make_point(d, s.plus(d), s.dual(d));
    const RealMatrix cm = dirac_matrix(d, r, Constraint::M);
    CHECK(max_norm(RealMatrix(cm.topLeftCorner(3, 3))) <= 1e-14);
    CHECK(max_norm(RealMatrix(cm.topRightCorner(3, 3) - RealMatrix::Identity(3, 3))) <= 1e-14);
    CHECK(max_norm(RealMatrix(cm.bottomLeftCorner(3, 3) + RealMatrix::Identity(3, 3))) <= 1e-14);
    CHECK(max_norm(RealMatrix(cm - dirac_matrix(d, r, Constraint::M, MatrixMode::Verification))) <= 1e-12);
}

TEST_CASE("general Dirac bracket") {
    const auto& d = sl2();
    Sampler s(46);
    const auto fields = coordinate_fields(d);
    for (int k = 0; k < 10; ++k) {
        const PhasePoint p = random_point(s);
        for (const Constraint side : {Constraint::N, Constraint::M}) {
            for (const auto& f : fields) {
                CHECK(std::abs(dirac_bracket_general(d, f, f, p, side)) <= 1e-14);
                for (const auto& c : constraint_fields(d, side)) {
                    CHECK(std::abs(dirac_bracket_general(d, f, c, p, side)) <= 1e-9);
                }
            }
        }
        for (const auto& f : fields) {
            for (const auto& g : fields) {
                CHECK(std::abs(dirac_bracket_general(d, f, g, p, Constraint::N) - dirac_bracket_N(d, f, g, p)) <= 1e-9);
                CHECK(std::abs(dirac_bracket_general(d, f, g, p, Constraint::M) - dirac_bracket_M(d, f, g, p)) <= 1e-9);
                CHECK(dirac_bracket_N(d, f, g, p) == doctest::Approx(-dirac_bracket_N(d, g, f, p)).epsilon(1e-14));
                CHECK(dirac_bracket_M(d, f, g, p) == doctest::Approx(-dirac_bracket_M(d, g, f, p)).epsilon(1e-14));
            }
        }
    }
}

TEST_CASE("closed-form bracket on N at the unit level") {
    const auto& d = sl2();
    Sampler s(47);
    const auto fields = coordinate_fields(d);
    for (int k = 0; k < 10; ++k) {
        DualVector eta = s.dual(d);
        eta.coords.tail(3).setZero();
        const PhasePoint p = make_point(d, s.plus(d), eta);
        for (const auto& f : fields) {
            for (const auto& g : fields) {
                const Differential df = f.diff(p);
                const Differential dg = g.diff(p);
                const AlgebraVector fp = project(d, df.delta, Side::Plus);
                const AlgebraVector gp = project(d, dg.delta, Side::Plus);
                const double expected = pair(df.bold_d, gp) - pair(dg.bold_d, fp) - pair(p.eta, ad(d, fp, gp));
                CHECK(std::abs(dirac_bracket_N(d, df, dg, p) - expected) <= 1e-12);
            }
        }
    }
}

TEST_CASE("closed-form bracket on M vanishes on plus-dual functions") {
    const auto& d = sl2();
    Sampler s(48);
    const PhasePoint p = random_point(s);
    for (int a = 0; a < 3; ++a) {
        for (int b = 0; b < 3; ++b) {
            CHECK(dirac_bracket_M(d, dual_coordinate(d, a), dual_coordinate(d, b), p) == 0.0);
        }
    }
}

TEST_CASE("frozen bracket values at a fixed point") {
    const auto& d = sl2();
    const PhasePoint p = fixture();
    const auto xi = [&d](int a) { return dual_coordinate(d, a); };
    CHECK(dirac_bracket_N(d, xi(0), xi(1), p) == doctest::Approx(0.80625).epsilon(1e-12));
    CHECK(dirac_bracket_N(d, xi(2), xi(0), p) == doctest::Approx(-0.825).epsilon(1e-12));
    CHECK(dirac_bracket_N(d, xi(0), group_entry(d, 0, 0, false), p) == doctest::Approx(0.8).epsilon(1e-12));
    CHECK(dirac_bracket_N(d, xi(1), group_entry(d, 0, 1, true), p) == doctest::Approx(-0.44).epsilon(1e-12));
    CHECK(std::abs(dirac_bracket_N(d, xi(3), xi(0), p)) <= 1e-14);
    CHECK(std::abs(dirac_bracket_M(d, xi(0), xi(1), p)) <= 1e-14);
    CHECK(dirac_bracket_M(d, xi(3), xi(5), p) == doctest::Approx(-0.2).epsilon(1e-12));
    CHECK(dirac_bracket_M(d, xi(5), group_entry(d, 0, 0, false), p) == doctest::Approx(0.6).epsilon(1e-12));

    RealVector phi(6);
    phi << -1.4460399999999995, 1.5612000000000006, 0.49471999999999716, -0.9416799999999993,
        -0.6681200000000009, -1.06856;
    CHECK(gap(momentum_map_left(d, p).coords, phi) <= 1e-13);
}

TEST_CASE("fundamental brackets") {
    const auto& d = sl2();
    Sampler s(49);
    const PhasePoint e = make_point(d, s.plus(d), s.dual(d));
    const FundamentalBrackets fe = fundamental_brackets_N(d, e);
    for (int c = 0; c < 3; ++c) {
        CHECK(max_norm(fe.m[c]) <= 1e-14);
        CHECK(max_norm(fe.n[c]) <= 1e-14);
    }
    for (int k = 0; k < 20; ++k) {
        const PhasePoint p = random_point(s);
        const FundamentalBrackets fb = fundamental_brackets_N(d, p);
        for (int a = 3; a < 6; ++a) {
            for (int b = 3; b < 6; ++b) {
                CHECK(std::abs(dirac_bracket_N(d, dual_coordinate(d, a), dual_coordinate(d, b), p)) <= 1e-14);
            }
        }
        for (int a = 0; a < 3; ++a) {
            for (int b = 0; b < 3; ++b) {
                const double v = dirac_bracket_general(d, dual_coordinate(d, a), dual_coordinate(d, b), p, Constraint::N);
                CHECK(std::abs(fb.xi_xi(a, b) - v) <= 1e-9);
            }
        }
        for (int a = 0; a < 3; ++a) {
            for (int i = 0; i < 2; ++i) {
                for (int j = 0; j < 2; ++j) {
                    const double re = dirac_bracket_general(d, dual_coordinate(d, a), group_entry(d, i, j, false), p,
                                                            Constraint::N);
                    const double im = dirac_bracket_general(d, dual_coordinate(d, a), group_entry(d, i, j, true), p,
                                                            Constraint::N);
                    CHECK(std::abs(fb.xi_T[a](i, j) - C(re, im)) <= 1e-9);
                }
            }
        }
    }
}

TEST_CASE("momentum map") {
    const auto& d = sl2();
    Sampler s(50);
    const DualVector eta = s.dual(d);
    CHECK(gap(momentum_map_left(d, make_point(d, GroupElement{}, eta)).coords, eta.coords) <= 1e-15);
    for (int k = 0; k < 100; ++k) {
        const PhasePoint p = random_point(s);
        const AlgebraVector x = s.algebra(d);
        CHECK(pair(momentum_map_left(d, p), x) == doctest::Approx(momentum_fn(d, x).eval(p)).epsilon(1e-12));
        const GroupElement h = s.group(d);
        const PhasePoint hp = make_point(d, compose(h, p.g), p.eta);
        CHECK(gap(momentum_map_left(d, hp).coords, coAd(d, h, momentum_map_left(d, p)).coords) <= 1e-11);
    }
    const AlgebraVector x = s.algebra(d);
    CHECK(momentum_fn(d, x).eval(make_point(d, GroupElement{}, eta)) == doctest::Approx(pair(eta, x)));
}

TEST_CASE("momentum functions of the minus basis generate the dressing action") {
    const auto& d = sl2();
    Sampler s(51);
    for (int k = 0; k < 20; ++k) {
        const PhasePoint p = random_point(s);
        for (int a = 3; a < 6; ++a) {
            const AlgebraVector x = algebra_basis(d, a);
            const TangentVector v = ham_vf_N(d, momentum_fn(d, x), p);
            const TangentSplit split = tangent_split(d, p.g, v.body_velocity);
            CHECK(gap(split.plus_velocity.coords, dressing_generator(d, p.g_plus, x).coords) <= 1e-12);
            CHECK(split.minus_velocity.coords.cwiseAbs().maxCoeff() <= 1e-12);
        }
    }
}

TEST_CASE("Hamiltonian vector fields") {
    const auto& d = sl2();
    Sampler s(52);
    ScalarField constant;
    constant.eval = [](const PhasePoint&) { return 3.0; };
    constant.diff = [&d](const PhasePoint&) { return Differential{dual_zero(d), algebra_zero(d)}; };
    const auto fields = coordinate_fields(d);
    for (int k = 0; k < 20; ++k) {
        const PhasePoint p = random_point(s);
        CHECK(ham_vf_N(d, constant, p).body_velocity.coords.cwiseAbs().maxCoeff() == 0.0);
        CHECK(ham_vf_M(d, constant, p).eta_dot.coords.cwiseAbs().maxCoeff() == 0.0);
        const AlgebraVector x = s.algebra(d);
        const ScalarField phi = momentum_fn(d, x);
        CHECK(gap(momentum_vf_N(d, x, p), ham_vf_N(d, phi, p)) <= 1e-12);
        CHECK(gap(momentum_vf_M(d, x, p), ham_vf_M(d, phi, p)) <= 1e-12);

        const ScalarField h = product(product(fields[k % 8], fields[8 + k % 6]), phi);
        const TangentVector vn = ham_vf_N(d, h, p);
        CHECK(tangent_split(d, p.g, vn.body_velocity).minus_velocity.coords.cwiseAbs().maxCoeff() <= 1e-12);
        CHECK(vn.eta_dot.coords.tail(3).cwiseAbs().maxCoeff() <= 1e-12);
        const TangentVector vm = ham_vf_M(d, h, p);
        CHECK(tangent_split(d, p.g, vm.body_velocity).plus_velocity.coords.cwiseAbs().maxCoeff() <= 1e-12);
        CHECK(vm.eta_dot.coords.head(3).cwiseAbs().maxCoeff() <= 1e-12);

        for (const auto& f : fields) {
            CHECK(apply(f.diff(p), vn) == doctest::Approx(dirac_bracket_N(d, f, h, p)).epsilon(1e-10));
            CHECK(apply(f.diff(p), vm) == doctest::Approx(dirac_bracket_M(d, f, h, p)).epsilon(1e-10));
        }
    }
}

TEST_CASE("induced action on N") {
    const auto& d = sl2();
    Sampler s(53);
    for (int k = 0; k < 20; ++k) {
        const PhasePoint p = with_minus(random_point(s), 0, 0, 0);
        const PhasePoint same = g_action_N(d, GroupElement{}, p);
        CHECK(max_norm(same.g.matrix - p.g.matrix) <= 1e-12);
        CHECK(gap(same.eta.coords, p.eta.coords) <= 1e-12);

        const GroupElement h1 = s.group(d);
        const GroupElement h2 = s.group(d);
        const PhasePoint lhs = g_action_N(d, compose(h1, h2), p);
        const PhasePoint rhs = g_action_N(d, h1, g_action_N(d, h2, p));
        CHECK(max_norm(lhs.g.matrix - rhs.g.matrix) <= 1e-9);
        CHECK(gap(lhs.eta.coords, rhs.eta.coords) <= 1e-9);
        CHECK(max_norm(lhs.g_minus.matrix - p.g_minus.matrix) <= 1e-9);

        const PhasePoint q = with_minus(random_point(s), 0, 0, s.uniform());
        const AlgebraVector x = s.algebra(d);
        const TangentVector fd = curve_velocity([&](double t) { return g_action_N(d, exp_algebra(t * x), q); });
        CHECK(gap(fd, ham_vf_N(d, momentum_fn(d, x), q)) <= 1e-6);
    }
}

TEST_CASE("induced action on M") {
    const auto& d = sl2();
    Sampler s(54);
    for (int k = 0; k < 20; ++k) {
        const PhasePoint r = random_point(s);
        DualVector eta = r.eta;
        eta.coords.head(3).setZero();
        const PhasePoint p = make_point(d, r.g, eta);
        const PhasePoint same = g_action_M(d, GroupElement{}, p);
        CHECK(max_norm(same.g.matrix - p.g.matrix) <= 1e-12);
        CHECK(gap(same.eta.coords, p.eta.coords) <= 1e-12);

        const GroupElement h1 = s.group(d);
        const GroupElement h2 = s.group(d);
        const PhasePoint lhs = g_action_M(d, compose(h1, h2), p);
        const PhasePoint rhs = g_action_M(d, h1, g_action_M(d, h2, p));
        CHECK(max_norm(lhs.g.matrix - rhs.g.matrix) <= 1e-9);
        CHECK(gap(lhs.eta.coords, rhs.eta.coords) <= 1e-9);
        CHECK(max_norm(lhs.g_plus.matrix - p.g_plus.matrix) <= 1e-9);
        CHECK(gap(lhs.eta.coords.head(3), p.eta.coords.head(3)) <= 1e-9);

        const AlgebraVector x = s.algebra(d);
        const TangentVector fd = curve_velocity([&](double t) { return g_action_M(d, exp_algebra(t * x), p); });
        CHECK(gap(fd, ham_vf_M(d, momentum_fn(d, x), p)) <= 1e-6);
    }
}

TEST_CASE("second-class check") {
    const auto& d = sl2();
    Sampler s(55);
    for (int k = 0; k < 20; ++k) {
        const PhasePoint p = random_point(s);
        CHECK(second_class_check(d, p, Constraint::N));
        CHECK(second_class_check(d, p, Constraint::M));
    }
    CHECK(numerical_rank(RealMatrix::Zero(6, 6), 1e-10) < 6);
}
