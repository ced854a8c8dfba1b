#include "verify.hpp"

#include "fdirac/aks.hpp"
#include "fdirac/errors.hpp"
#include "fdirac/sl2c_example.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace fdirac::verify {

namespace {

constexpr int kCharacterIndex = 5;
constexpr int kNonCharacterIndex = 3;

class Recorder {
public:
    Recorder(std::string suite, const Config& cfg) : suite_(std::move(suite)), cfg_(cfg) {}

    double tol(const std::string& check, double fallback) const {
        const auto it = cfg_.tolerances.find(suite_ + "." + check);
        return it == cfg_.tolerances.end() ? fallback : it->second;
    }

    void upper(const std::string& check, double residual, double fallback) {
        const double t = tol(check, fallback);
        results_.push_back({suite_, check, residual, t, "<=", residual <= t});
    }

    void lower(const std::string& check, double residual, double fallback) {
        const double t = tol(check, fallback);
        results_.push_back({suite_, check, residual, t, ">", residual > t});
    }

    void runtime(const std::string& check, double seconds, double limit) {
        if (cfg_.timing) upper(check, seconds, limit);
    }

    std::vector<CheckResult> take() { return std::move(results_); }

private:
    std::string suite_;
    const Config& cfg_;
    std::vector<CheckResult> results_;
};

class Stopwatch {
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

double gap(const RealVector& x, const RealVector& y) { return (x - y).cwiseAbs().maxCoeff(); }

double gap(const TangentVector& x, const TangentVector& y) {
    return std::max(gap(x.body_velocity.coords, y.body_velocity.coords),
                    gap(x.eta_dot.coords, y.eta_dot.coords));
}

DualVector with_minus(const GroupDescriptor& d, const DualVector& eta, const RealVector& minus) {
    DualVector out = eta;
    out.coords.tail(d.dim_half) = minus;
    return out;
}

RealVector minus_unit(const GroupDescriptor& d, int index, double scale) {
    RealVector m = RealVector::Zero(d.dim_half);
    m(index - d.dim_half) = scale;
    return m;
}

PhasePoint random_point(const GroupDescriptor& d, Sampler& s) {
    const GroupElement g = s.group(d);
    return make_point(d, g, s.dual(d));
}

PhasePoint random_point_with_minus(const GroupDescriptor& d, Sampler& s, const RealVector& minus) {
    const GroupElement g = s.group(d);
    return make_point(d, g, with_minus(d, s.dual(d), minus));
}

CMat2 random_unimodular(Sampler& s) {
    for (;;) {
        CMat2 m;
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) m(i, j) = {s.uniform(), s.uniform()};
        }
        const std::complex<double> det = m.determinant();
        if (std::abs(det) < 1e-3) continue;
        return m / std::sqrt(det);
    }
}

std::vector<CheckResult> suite_iwasawa(const Config& cfg) {
    Recorder r("iwasawa", cfg);
    Sampler s(cfg.seed);
    const int samples = 10000;
    std::vector<CMat2> inputs;
    inputs.reserve(samples);
    for (int k = 0; k < samples; ++k) inputs.push_back(random_unimodular(s));

    double recon = 0.0;
    double unitary = 0.0;
    double lower_entry = 0.0;
    double min_diag = 1e300;
    double diag_imag = 0.0;
    Stopwatch clock;
    for (const CMat2& g : inputs) {
        const sl2c::IwasawaFactors f = sl2c::iwasawa(g);
        const CMat2& k = f.su2_part.matrix;
        const CMat2& b = f.b_part.matrix;
        recon = std::max(recon, max_norm(k * b - g));
        unitary = std::max(unitary, max_norm(k.adjoint() * k - CMat2::Identity()));
        lower_entry = std::max(lower_entry, std::abs(b(1, 0)));
        diag_imag = std::max({diag_imag, std::abs(b(0, 0).imag()), std::abs(b(1, 1).imag())});
        min_diag = std::min({min_diag, b(0, 0).real(), b(1, 1).real()});
    }
    const double elapsed = clock.seconds();
    r.upper("reconstruction", recon, 1e-11);
    r.upper("unitarity", unitary, 1e-10);
    r.upper("lower_triangle", lower_entry, 0.0);
    r.upper("diagonal_imag", diag_imag, 1e-12);
    r.lower("diagonal_min", min_diag, 0.0);
    r.runtime("runtime_s", elapsed, 1.0);
    return r.take();
}

std::vector<CheckResult> suite_pairing(const Config& cfg) {
    Recorder r("pairing", cfg);
    const GroupDescriptor& d = sl2c::descriptor();
    const int n = d.dim_half;
    RealMatrix expected = RealMatrix::Zero(d.dim(), d.dim());
    expected.topRightCorner(n, n).setIdentity();
    expected.bottomLeftCorner(n, n).setIdentity();
    RealMatrix direct(d.dim(), d.dim());
    for (int i = 0; i < d.dim(); ++i) {
        for (int j = 0; j < d.dim(); ++j) direct(i, j) = sl2c::bilinear_form(d.basis[i], d.basis[j]);
    }
    r.upper("delta_table", max_norm(direct - expected), 0.0);
    r.upper("isotropic_plus", max_norm(direct.topLeftCorner(n, n)), 1e-14);
    r.upper("isotropic_minus", max_norm(direct.bottomRightCorner(n, n)), 1e-14);
    r.upper("descriptor_table", max_norm(d.pairing - expected), 0.0);
    return r.take();
}

std::vector<CheckResult> suite_dirac_equivalence(const Config& cfg) {
    Recorder r("dirac_equivalence", cfg);
    const GroupDescriptor& d = sl2c::descriptor();
    Sampler s(cfg.seed + 3);
    const auto fields = coordinate_fields(d);
    double gap_n = 0.0;
    double gap_m = 0.0;
    double matrix_n = 0.0;
    double matrix_m = 0.0;
    Stopwatch clock;
    for (int k = 0; k < 100; ++k) {
        const PhasePoint p = random_point(d, s);
        std::vector<Differential> diffs;
        for (const auto& f : fields) diffs.push_back(f.diff(p));
        for (std::size_t i = 0; i < diffs.size(); ++i) {
            for (std::size_t j = i + 1; j < diffs.size(); ++j) {
                gap_n = std::max(gap_n, std::abs(dirac_bracket_general(d, diffs[i], diffs[j], p, Constraint::N) -
                                                 dirac_bracket_N(d, diffs[i], diffs[j], p)));
                gap_m = std::max(gap_m, std::abs(dirac_bracket_general(d, diffs[i], diffs[j], p, Constraint::M) -
                                                 dirac_bracket_M(d, diffs[i], diffs[j], p)));
            }
        }
        matrix_n = std::max(matrix_n, max_norm(dirac_matrix(d, p, Constraint::N, MatrixMode::ClosedForm) -
                                               dirac_matrix(d, p, Constraint::N, MatrixMode::Verification)));
        matrix_m = std::max(matrix_m, max_norm(dirac_matrix(d, p, Constraint::M, MatrixMode::ClosedForm) -
                                               dirac_matrix(d, p, Constraint::M, MatrixMode::Verification)));
    }
    const double elapsed = clock.seconds();
    r.upper("general_vs_N", gap_n, 1e-9);
    r.upper("general_vs_M", gap_m, 1e-9);
    r.upper("matrix_N", matrix_n, 1e-10);
    r.upper("matrix_M", matrix_m, 1e-10);
    r.runtime("runtime_s", elapsed, 5.0);
    return r.take();
}

double table_gap(const GroupDescriptor& d, const sl2c::ExplicitBrackets& table, const PhasePoint& p) {
    double g = 0.0;
    for (int a = 0; a < 3; ++a) {
        const ScalarField xa = dual_coordinate(d, a);
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) {
                const double re = dirac_bracket_general(d, xa, group_entry(d, i, j, false), p, Constraint::N);
                const double im = dirac_bracket_general(d, xa, group_entry(d, i, j, true), p, Constraint::N);
                g = std::max({g, std::abs(table.xi_T[a](i, j).real() - re),
                              std::abs(table.xi_T[a](i, j).imag() - im)});
            }
        }
        for (int b = 0; b < 3; ++b) {
            const double v = dirac_bracket_general(d, xa, dual_coordinate(d, b), p, Constraint::N);
            g = std::max(g, std::abs(table.xi_xi(a, b) - v));
        }
    }
    return g;
}

std::vector<CheckResult> suite_example(const Config& cfg) {
    Recorder r("example_transcription", cfg);
    const GroupDescriptor& d = sl2c::descriptor();
    Sampler s(cfg.seed + 4);
    double full = 0.0;
    double fundamental = 0.0;
    double character = 0.0;
    double generators = 0.0;
    double phi = 0.0;
    double hamilton = 0.0;
    for (int k = 0; k < 100; ++k) {
        const PhasePoint p = random_point(d, s);
        const sl2c::Sl2Coordinates c = sl2c::coordinates(p);
        const sl2c::ExplicitBrackets table = sl2c::explicit_fundamental_brackets(d, c);
        full = std::max(full, table_gap(d, table, p));

        const FundamentalBrackets fb = fundamental_brackets_N(d, p);
        for (int a = 0; a < 3; ++a) {
            fundamental = std::max(fundamental, max_norm(fb.xi_T[a] - table.xi_T[a]));
        }
        fundamental = std::max(fundamental, max_norm(fb.xi_xi.topLeftCorner(3, 3) - RealMatrix(table.xi_xi)));

        const PhasePoint q = make_point(d, p.g, with_minus(d, p.eta, RealVector::Zero(3)));
        const sl2c::Sl2Coordinates cq = sl2c::coordinates(q);
        character = std::max(character, table_gap(d, sl2c::explicit_character_brackets(d, cq), q));

        const auto gens = sl2c::explicit_projected_generators(d, c.a, c.b(), c.c());
        const RealMatrix proj = projector_N(d, p.g_minus);
        for (int a = 0; a < 3; ++a) generators = std::max(generators, gap(gens[a].coords, proj.col(a)));

        const DualVector mom = momentum_map_left(d, q);
        const Eigen::Vector3d ph = sl2c::phi_explicit(cq);
        for (int a = 0; a < 3; ++a) {
            phi = std::max(phi, std::abs(ph(a) - pair(mom, algebra_basis(d, 3 + a))));
        }

        const ScalarField h = fd_field(d, [&d](const PhasePoint& x) { return sl2c::example_hamiltonian(d, x); });
        hamilton = std::max(hamilton, gap(sl2c::example_hamilton_eqs(d, q), ham_vf_N(d, h, q)));
    }
    r.upper("fundamental_vs_general", full, 1e-9);
    r.upper("fundamental_vs_engine", fundamental, 1e-9);
    r.upper("character_vs_general", character, 1e-9);
    r.upper("projected_generators", generators, 1e-10);
    r.upper("phi_vs_momentum_map", phi, 1e-10);
    r.upper("hamilton_eqs_vs_engine", hamilton, 1e-8);
    return r.take();
}

/// Richardson extrapolation of two central-difference differentials.
Differential richardson_differential(const GroupDescriptor& d,
                                     const std::function<double(const PhasePoint&)>& f,
                                     const PhasePoint& p) {
    const Differential coarse = fd_differential(d, f, p, 5e-4);
    const Differential fine = fd_differential(d, f, p, 2.5e-4);
    return {(4.0 / 3.0) * fine.bold_d - (1.0 / 3.0) * coarse.bold_d,
            (4.0 / 3.0) * fine.delta - (1.0 / 3.0) * coarse.delta};
}

using BracketFn = std::function<double(const Differential&, const Differential&, const PhasePoint&)>;

std::vector<CheckResult> suite_bracket_axioms(const Config& cfg) {
    Recorder r("bracket_axioms", cfg);
    const GroupDescriptor& d = sl2c::descriptor();
    Sampler s(cfg.seed + 5);
    const auto fields = coordinate_fields(d);
    const int nf = static_cast<int>(fields.size());
    double antisym = 0.0;
    double leibniz = 0.0;
    double jacobi = 0.0;
    double casimir = 0.0;

    for (const Constraint side : {Constraint::N, Constraint::M}) {
        const BracketFn br = [&d, side](const Differential& a, const Differential& b, const PhasePoint& p) {
            return dirac_bracket(d, a, b, p, side);
        };
        const auto constraints = constraint_fields(d, side);
        for (int k = 0; k < 100; ++k) {
            const PhasePoint p = random_point(d, s);
            std::vector<Differential> df;
            std::vector<double> val;
            for (const auto& f : fields) {
                df.push_back(f.diff(p));
                val.push_back(f.eval(p));
            }
            RealMatrix b(nf, nf);
            for (int i = 0; i < nf; ++i) {
                for (int j = 0; j < nf; ++j) b(i, j) = br(df[i], df[j], p);
            }
            antisym = std::max(antisym, max_norm(b + b.transpose()));

            for (int t = 0; t < 4; ++t) {
                const int i = static_cast<int>(std::floor(s.uniform(0.0, nf))) % nf;
                const int j = static_cast<int>(std::floor(s.uniform(0.0, nf))) % nf;
                const int l = static_cast<int>(std::floor(s.uniform(0.0, nf))) % nf;
                const auto& fj = fields[j];
                const auto& fl = fields[l];
                const ScalarField prod = fd_field(d, [&fj, &fl](const PhasePoint& x) { return fj.eval(x) * fl.eval(x); });
                const double lhs = br(df[i], prod.diff(p), p);
                leibniz = std::max(leibniz, std::abs(lhs - (b(i, j) * val[l] + val[j] * b(i, l))));
            }

            std::vector<Differential> db(nf * nf);
            for (int i = 0; i < nf; ++i) {
                for (int j = i + 1; j < nf; ++j) {
                    const auto& fi = fields[i];
                    const auto& fj = fields[j];
                    db[i * nf + j] = richardson_differential(
                        d, [&](const PhasePoint& x) { return br(fi.diff(x), fj.diff(x), x); }, p);
                }
            }
            const auto bracket_of = [&](int i, int j, int l) {
                if (j == l) return 0.0;
                const double sign = j < l ? 1.0 : -1.0;
                const Differential& inner = db[std::min(j, l) * nf + std::max(j, l)];
                return sign * br(df[i], inner, p);
            };
            for (int i = 0; i < nf; ++i) {
                for (int j = i + 1; j < nf; ++j) {
                    for (int l = j + 1; l < nf; ++l) {
                        const double cyc = bracket_of(i, j, l) + bracket_of(j, l, i) + bracket_of(l, i, j);
                        jacobi = std::max(jacobi, std::abs(cyc));
                    }
                }
            }

            for (const auto& c : constraints) {
                const Differential dc = c.diff(p);
                for (int i = 0; i < nf; ++i) casimir = std::max(casimir, std::abs(br(dc, df[i], p)));
            }
        }
    }
    r.upper("antisymmetry", antisym, 1e-10);
    r.upper("leibniz", leibniz, 1e-8);
    r.upper("jacobi", jacobi, 1e-7);
    r.upper("casimir", casimir, 1e-9);
    return r.take();
}

std::vector<CheckResult> suite_momentum(const Config& cfg) {
    Recorder r("momentum_algebra", cfg);
    const GroupDescriptor& d = sl2c::descriptor();
    Sampler s(cfg.seed + 6);
    double identity = 0.0;
    double at_zero = 0.0;
    double noncharacter = 0.0;
    double field_n = 0.0;
    double field_m = 0.0;
    for (int k = 0; k < 100; ++k) {
        const AlgebraVector x = s.algebra(d);
        const AlgebraVector y = s.algebra(d);
        const ScalarField fx = momentum_fn(d, x);
        const ScalarField fy = momentum_fn(d, y);
        const ScalarField fxy = momentum_fn(d, ad(d, x, y));

        const PhasePoint p = random_point(d, s);
        const double lhs = dirac_bracket_N(d, fx, fy, p) - fxy.eval(p);
        identity = std::max(identity, std::abs(lhs - momentum_correction(d, x, y, p)));
        field_n = std::max(field_n, gap(momentum_vf_N(d, x, p), ham_vf_N(d, fx, p)));
        field_m = std::max(field_m, gap(momentum_vf_M(d, x, p), ham_vf_M(d, fx, p)));

        const PhasePoint q = make_point(d, p.g, with_minus(d, p.eta, RealVector::Zero(d.dim_half)));
        at_zero = std::max(at_zero, std::abs(momentum_correction(d, x, y, q)));
        at_zero = std::max(at_zero, std::abs(dirac_bracket_N(d, fx, fy, q) - fxy.eval(q)));

        const PhasePoint nc = make_point(d, p.g, with_minus(d, p.eta, minus_unit(d, kNonCharacterIndex, 1.0)));
        noncharacter = std::max(noncharacter, std::abs(momentum_correction(d, x, y, nc)));
    }
    r.upper("correction_identity", identity, 1e-9);
    r.upper("correction_at_zero", at_zero, 1e-12);
    r.lower("correction_noncharacter", noncharacter, 1e-3);
    r.upper("field_N", field_n, 1e-9);
    r.upper("field_M", field_m, 1e-9);
    return r.take();
}

std::vector<CheckResult> suite_involutivity(const Config& cfg) {
    Recorder r("involutivity", cfg);
    const GroupDescriptor& d = sl2c::descriptor();
    Sampler s(cfg.seed + 7);
    const CollectiveHamiltonian quad = quadratic_hamiltonian(d);
    const CollectiveHamiltonian kill = killing_hamiltonian(d);
    const CollectiveHamiltonian quart = quartic_hamiltonian(d);
    const CollectiveHamiltonian lin_a = linear_hamiltonian(d, 0);
    const CollectiveHamiltonian lin_b = linear_hamiltonian(d, 1);
    double positive = 0.0;
    double negative_point = 0.0;
    double negative_function = 0.0;
    for (int k = 0; k < 100; ++k) {
        const double c = (k % 4 == 0) ? 0.0 : s.uniform();
        const RealVector minus = cfg.inject_noncharacter ? minus_unit(d, kNonCharacterIndex, 1.0)
                                                         : minus_unit(d, kCharacterIndex, c);
        const PhasePoint p = random_point_with_minus(d, s, minus);
        positive = std::max({positive, std::abs(involutivity_check(d, quad, kill, p)),
                             std::abs(involutivity_check(d, kill, quart, p)),
                             std::abs(involutivity_check(d, quad, quart, p))});

        const PhasePoint nc = make_point(d, p.g, with_minus(d, p.eta, minus_unit(d, kNonCharacterIndex, 1.0)));
        negative_point = std::max(negative_point, std::abs(involutivity_check(d, quad, kill, nc)));

        const PhasePoint ch = make_point(d, p.g, with_minus(d, p.eta, minus_unit(d, kCharacterIndex, 0.6)));
        negative_function = std::max(negative_function, std::abs(involutivity_check(d, lin_a, lin_b, ch)));
    }
    r.upper("invariant_pairs", positive, 1e-9);
    r.lower("noncharacter_control", negative_point, 1e-3);
    r.lower("noninvariant_control", negative_function, 1e-3);
    return r.take();
}

struct FlowCase {
    std::string name;
    CollectiveHamiltonian h;
    PhasePoint p0;
};

std::vector<CheckResult> suite_factorization(const Config& cfg) {
    Recorder r("factorization", cfg);
    const GroupDescriptor& d = sl2c::descriptor();
    Sampler s(cfg.seed + 8);
    const double t_end = 5.0;
    std::vector<FlowCase> cases;
    cases.push_back({"killing", killing_hamiltonian(d), random_point_with_minus(d, s, RealVector::Zero(3))});
    cases.push_back({"quadratic", quadratic_hamiltonian(d),
                     random_point_with_minus(d, s, minus_unit(d, kCharacterIndex, 0.6))});

    double endpoint = 0.0;
    double order = 1e300;
    double xi_drift = 0.0;
    double h_drift = 0.0;
    double level = 0.0;
    Stopwatch clock;
    for (const FlowCase& fc : cases) {
        const VectorField vf = [&d, &fc](const PhasePoint& x) { return collective_vf(d, fc.h, x); };
        const Trajectory exact = solve_by_factorization(d, fc.h, fc.p0, t_end, 100);
        const PhasePoint& target = exact.points.back();
        const auto endpoint_gap = [&](const PhasePoint& x) {
            return std::max(max_norm(x.g.matrix - target.g.matrix), gap(x.eta.coords, target.eta.coords));
        };

        const Trajectory rk = integrate_rk4(d, vf, fc.p0, t_end, 10000);
        endpoint = std::max(endpoint, endpoint_gap(rk.points.back()));

        std::vector<double> ladder;
        for (const int steps : {100, 200, 400, 800}) {
            ladder.push_back(endpoint_gap(integrate_rk4_endpoint(d, vf, fc.p0, t_end, steps)));
        }
        for (std::size_t i = 0; i + 1 < ladder.size(); ++i) {
            order = std::min(order, std::log2(ladder[i] / ladder[i + 1]));
        }

        const DualVector xi0 = reconstruct_xi(d, exact.points.front(), exact.h_minus.front());
        const double h0 = fc.h.h(momentum_map_left(d, fc.p0));
        for (std::size_t i = 0; i < exact.points.size(); ++i) {
            const PhasePoint& x = exact.points[i];
            xi_drift = std::max(xi_drift, gap(reconstruct_xi(d, x, exact.h_minus[i]).coords, xi0.coords));
            h_drift = std::max(h_drift, std::abs(fc.h.h(momentum_map_left(d, x)) - h0));
            level = std::max({level, max_norm(x.g_minus.matrix - fc.p0.g_minus.matrix),
                              gap(x.eta.coords.tail(3), fc.p0.eta.coords.tail(3))});
        }
        for (const PhasePoint& x : rk.points) {
            h_drift = std::max(h_drift, std::abs(fc.h.h(momentum_map_left(d, x)) - h0));
            level = std::max({level, max_norm(x.g_minus.matrix - fc.p0.g_minus.matrix),
                              gap(x.eta.coords.tail(3), fc.p0.eta.coords.tail(3))});
        }
    }
    const double elapsed = clock.seconds();
    r.upper("endpoint_gap", endpoint, 1e-6);
    r.lower("convergence_order", order, 3.7);
    r.upper("xi_constant", xi_drift, 1e-10);
    r.upper("energy_drift", h_drift, 1e-8);
    r.upper("level_preserved", level, 1e-12);
    r.runtime("runtime_s", elapsed, 10.0);
    return r.take();
}

TangentVector combine(const GroupDescriptor& d, const std::vector<TangentVector>& basis, Sampler& s) {
    TangentVector v{algebra_zero(d), dual_zero(d)};
    for (const TangentVector& b : basis) {
        const double w = s.uniform();
        v.body_velocity = v.body_velocity + w * b.body_velocity;
        v.eta_dot = v.eta_dot + w * b.eta_dot;
    }
    return v;
}

std::vector<CheckResult> suite_orbit(const Config& cfg) {
    Recorder r("orbit", cfg);
    const GroupDescriptor& d = sl2c::descriptor();
    Sampler s(cfg.seed + 9);
    double pullback = 0.0;
    double dimension = 0.0;
    for (int k = 0; k < 50; ++k) {
        const PhasePoint p = random_point(d, s);
        const auto level = aks_momentum_J(d, p);
        const auto orbit = orbit_map_L(d, p, level.first, level.second);
        const auto basis = lambda_tangent_basis(d, p);
        dimension = std::max(dimension, std::abs(static_cast<double>(basis.size()) - 6.0));
        const TangentVector v1 = combine(d, basis, s);
        const TangentVector v2 = combine(d, basis, s);
        const double lhs = canonical_form(d, p, v1, v2);
        const double rhs = orbit_form(d, orbit.first, orbit.second,
                                      orbit_generators(d, p, v1.body_velocity),
                                      orbit_generators(d, p, v2.body_velocity));
        pullback = std::max(pullback, std::abs(lhs - rhs));
    }

    const CollectiveHamiltonian quad = quadratic_hamiltonian(d);
    double field = 0.0;
    for (int k = 0; k < 100; ++k) {
        const double c = (k % 4 == 0) ? 0.0 : s.uniform();
        const PhasePoint p = random_point_with_minus(d, s, minus_unit(d, kCharacterIndex, c));
        field = std::max(field, gap(aks_vf_on_N(d, p), collective_vf(d, quad, p)));
    }
    r.upper("pullback_identity", pullback, 1e-8);
    r.upper("tangent_dimension", dimension, 0.0);
    r.upper("aks_vf_vs_collective", field, 1e-9);
    return r.take();
}

std::vector<CheckResult> suite_lagrangian(const Config& cfg) {
    Recorder r("lagrangian", cfg);
    const GroupDescriptor& d = sl2c::descriptor();
    Sampler s(cfg.seed + 10);
    double off_diagonal = 0.0;
    double round_trip = 0.0;
    int low_rank = 0;
    int accepted = 0;
    while (accepted < 100) {
        const GroupElement g = s.plus(d);
        if (std::abs(g.matrix(0, 1)) < 0.2) continue;
        const PhasePoint p = make_point(d, g, with_minus(d, s.dual(d), RealVector::Zero(d.dim_half)));
        const sl2c::Sl2Coordinates c = sl2c::coordinates(p);
        const Eigen::Matrix3d k = sl2c::metric_K(c);
        off_diagonal = std::max(off_diagonal, (k - Eigen::Matrix3d(k.diagonal().asDiagonal())).cwiseAbs().maxCoeff());
        const sl2c::LegendreRoundTrip rt = sl2c::legendre_round_trip(d, p);
        round_trip = std::max({round_trip, rt.velocity_residual, rt.legendre_residual, rt.energy_residual});
        low_rank = std::max(low_rank, std::abs(rt.rank - 2));
        ++accepted;
    }
    r.upper("K_diagonal", off_diagonal, 1e-14);
    r.upper("legendre_round_trip", round_trip, 1e-7);
    r.upper("velocity_map_rank", static_cast<double>(low_rank), 0.0);
    return r.take();
}

using SuiteFn = std::vector<CheckResult> (*)(const Config&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> suites = {
        {"iwasawa", suite_iwasawa},
        {"pairing", suite_pairing},
        {"dirac_equivalence", suite_dirac_equivalence},
        {"example_transcription", suite_example},
        {"bracket_axioms", suite_bracket_axioms},
        {"momentum_algebra", suite_momentum},
        {"involutivity", suite_involutivity},
        {"factorization", suite_factorization},
        {"orbit", suite_orbit},
        {"lagrangian", suite_lagrangian},
    };
    return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& entry : registry()) out.push_back(entry.first);
        return out;
    }();
    return names;
}

std::vector<CheckResult> run_suite(const std::string& name, const Config& cfg) {
    for (const auto& entry : registry()) {
        if (entry.first == name) return entry.second(cfg);
    }
    throw std::invalid_argument("unknown suite: " + name);
}

std::vector<CheckResult> run_all(const Config& cfg) {
    std::vector<CheckResult> out;
    for (const auto& entry : registry()) {
        auto part = entry.second(cfg);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

}  // namespace fdirac::verify
