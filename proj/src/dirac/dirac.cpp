#include "fdirac/dirac.hpp"

#include "fdirac/errors.hpp"

namespace fdirac {

namespace {

AlgebraVector apply_matrix(const GroupDescriptor& d, const RealMatrix& m, const AlgebraVector& x) {
    return algebra_from_coords(d, m * x.coords);
}

RealMatrix block_projector(const GroupDescriptor& d, Side side) {
    RealMatrix p = RealMatrix::Zero(d.dim(), d.dim());
    const int n = d.dim_half;
    if (side == Side::Plus) {
        p.topLeftCorner(n, n).setIdentity();
    } else {
        p.bottomRightCorner(n, n).setIdentity();
    }
    return p;
}

double three_term(const GroupDescriptor& d, const Differential& df, const Differential& dg,
                  const AlgebraVector& pf, const AlgebraVector& pg, const DualVector& eta) {
    return pair(df.bold_d, pg) - pair(dg.bold_d, pf) - pair(eta, ad(d, pf, pg));
}

}  // namespace

PhasePoint make_point(const GroupDescriptor& d, const GroupElement& g, const DualVector& eta) {
    const auto [gp, gm] = factorize(d, g);
    return {GroupElement{g.matrix, Tag::Full}, eta, gp, gm};
}

Differential fd_differential(const GroupDescriptor& d,
                             const std::function<double(const PhasePoint&)>& f,
                             const PhasePoint& p, double step) {
    const int dim = d.dim();
    RealVector bold(dim);
    RealVector delta(dim);
    for (int i = 0; i < dim; ++i) {
        const AlgebraVector e = algebra_basis(d, i);
        const GroupElement gp = compose(p.g, exp_algebra(step * e));
        const GroupElement gm = compose(p.g, exp_algebra(-step * e));
        bold(i) = (f(make_point(d, gp, p.eta)) - f(make_point(d, gm, p.eta))) / (2.0 * step);
        const DualVector de = step * dual_basis(d, i);
        delta(i) = (f(make_point(d, p.g, p.eta + de)) - f(make_point(d, p.g, p.eta - de))) /
                   (2.0 * step);
    }
    return {DualVector{bold}, algebra_from_coords(d, delta)};
}

ScalarField fd_field(const GroupDescriptor& d, std::function<double(const PhasePoint&)> f,
                     double step) {
    ScalarField s;
    s.eval = f;
    s.diff = [&d, f, step](const PhasePoint& p) { return fd_differential(d, f, p, step); };
    s.analytic = false;
    return s;
}

ScalarField group_entry(const GroupDescriptor& d, int i, int j, bool imag) {
    ScalarField s;
    s.eval = [i, j, imag](const PhasePoint& p) {
        const auto v = p.g.matrix(i, j);
        return imag ? v.imag() : v.real();
    };
    s.diff = [&d, i, j, imag](const PhasePoint& p) {
        RealVector bold(d.dim());
        for (int k = 0; k < d.dim(); ++k) {
            const auto v = (p.g.matrix * d.basis[k])(i, j);
            bold(k) = imag ? v.imag() : v.real();
        }
        return Differential{DualVector{bold}, algebra_zero(d)};
    };
    return s;
}

ScalarField dual_coordinate(const GroupDescriptor& d, int index) {
    ScalarField s;
    s.eval = [index](const PhasePoint& p) { return p.eta.coords(index); };
    s.diff = [&d, index](const PhasePoint&) {
        return Differential{dual_zero(d), algebra_basis(d, index)};
    };
    return s;
}

ScalarField product(const ScalarField& f, const ScalarField& g) {
    ScalarField s;
    s.eval = [f, g](const PhasePoint& p) { return f.eval(p) * g.eval(p); };
    s.diff = [f, g](const PhasePoint& p) {
        const double fv = f.eval(p);
        const double gv = g.eval(p);
        const Differential df = f.diff(p);
        const Differential dg = g.diff(p);
        return Differential{gv * df.bold_d + fv * dg.bold_d, gv * df.delta + fv * dg.delta};
    };
    s.analytic = f.analytic && g.analytic;
    return s;
}

std::vector<ScalarField> coordinate_fields(const GroupDescriptor& d) {
    std::vector<ScalarField> out;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            out.push_back(group_entry(d, i, j, false));
            out.push_back(group_entry(d, i, j, true));
        }
    }
    for (int a = 0; a < d.dim(); ++a) out.push_back(dual_coordinate(d, a));
    return out;
}

std::vector<ScalarField> constraint_fields(const GroupDescriptor& d, Constraint side) {
    std::vector<ScalarField> out;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            for (const bool imag : {false, true}) {
                ScalarField s;
                s.eval = [side, i, j, imag](const PhasePoint& p) {
                    const auto v = (side == Constraint::N ? p.g_minus : p.g_plus).matrix(i, j);
                    return imag ? v.imag() : v.real();
                };
                s.diff = [&d, side, i, j, imag](const PhasePoint& p) {
                    RealVector bold(d.dim());
                    for (int k = 0; k < d.dim(); ++k) {
                        const TangentSplit ts = tangent_split(d, p.g, algebra_basis(d, k));
                        const auto v = side == Constraint::N
                                           ? (p.g_minus.matrix * ts.minus_velocity.matrix)(i, j)
                                           : (p.g_plus.matrix * ts.plus_velocity.matrix)(i, j);
                        bold(k) = imag ? v.imag() : v.real();
                    }
                    return Differential{DualVector{bold}, algebra_zero(d)};
                };
                out.push_back(s);
            }
        }
    }
    const int offset = side == Constraint::N ? d.dim_half : 0;
    for (int a = 0; a < d.dim_half; ++a) out.push_back(dual_coordinate(d, offset + a));
    return out;
}

PhasePoint flow_point(const GroupDescriptor& d, const PhasePoint& p, const TangentVector& v,
                      double t) {
    return make_point(d, compose(p.g, exp_algebra(t * v.body_velocity)), p.eta + t * v.eta_dot);
}

double apply(const Differential& df, const TangentVector& v) {
    return pair(df.bold_d, v.body_velocity) + pair(v.eta_dot, df.delta);
}

double canonical_bracket(const GroupDescriptor& d, const Differential& df,
                         const Differential& dg, const PhasePoint& p) {
    return three_term(d, df, dg, df.delta, dg.delta, p.eta);
}

double canonical_bracket(const GroupDescriptor& d, const ScalarField& f, const ScalarField& g,
                         const PhasePoint& p) {
    return canonical_bracket(d, f.diff(p), g.diff(p), p);
}

std::pair<GroupElement, DualVector> constraint_value(const GroupDescriptor& d,
                                                     const PhasePoint& p, Constraint side) {
    if (side == Constraint::N) return {p.g_minus, project_dual(d, p.eta, Side::Minus)};
    return {p.g_plus, project_dual(d, p.eta, Side::Plus)};
}

std::vector<Differential> constraint_forms(const GroupDescriptor& d, const PhasePoint& p,
                                           Constraint side) {
    const int n = d.dim_half;
    std::vector<Differential> forms;
    if (side == Constraint::N) {
        const RealMatrix q = Ad_matrix(d, inverse(p.g_minus)) * block_projector(d, Side::Minus) *
                             Ad_matrix(d, p.g_minus);
        for (int a = 0; a < n; ++a) {
            forms.push_back({DualVector{-q.row(n + a).transpose()}, algebra_zero(d)});
        }
        for (int a = 0; a < n; ++a) forms.push_back({dual_zero(d), algebra_basis(d, n + a)});
    } else {
        const RealMatrix q = block_projector(d, Side::Plus) * Ad_matrix(d, p.g_minus);
        for (int a = 0; a < n; ++a) {
            forms.push_back({DualVector{q.row(a).transpose()}, algebra_zero(d)});
        }
        for (int a = 0; a < n; ++a) forms.push_back({dual_zero(d), algebra_basis(d, a)});
    }
    return forms;
}

RealMatrix omega_matrix(const GroupDescriptor& d, const DualVector& eta) {
    const int n = d.dim_half;
    const DualVector em = project_dual(d, eta, Side::Minus);
    RealMatrix om(n, n);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) om(a, b) = -em.coords.dot(d.structure[n + a].col(n + b));
    }
    return om;
}

RealMatrix dirac_matrix(const GroupDescriptor& d, const PhasePoint& p, Constraint side,
                        MatrixMode mode) {
    const int n = d.dim_half;
    if (mode == MatrixMode::Verification) {
        const std::vector<Differential> forms = constraint_forms(d, p, side);
        RealMatrix c(2 * n, 2 * n);
        for (int j = 0; j < 2 * n; ++j) {
            for (int k = 0; k < 2 * n; ++k) c(j, k) = canonical_bracket(d, forms[j], forms[k], p);
        }
        return c;
    }
    RealMatrix c = RealMatrix::Zero(2 * n, 2 * n);
    if (side == Constraint::N) {
        c.topRightCorner(n, n) = -RealMatrix::Identity(n, n);
        c.bottomLeftCorner(n, n) = RealMatrix::Identity(n, n);
        c.bottomRightCorner(n, n) = omega_matrix(d, p.eta);
    } else {
        RealMatrix f(n, n);
        RealMatrix theta(n, n);
        const GroupElement gmi = inverse(p.g_minus);
        const DualVector ep = project_dual(d, p.eta, Side::Plus);
        for (int a = 0; a < n; ++a) {
            const AlgebraVector ta = Ad(d, gmi, algebra_basis(d, n + a));
            for (int b = 0; b < n; ++b) {
                f(a, b) = form(d, ta, algebra_basis(d, b));
                theta(a, b) = -ep.coords.dot(d.structure[a].col(b));
            }
        }
        c.topRightCorner(n, n) = f;
        c.bottomLeftCorner(n, n) = -f.transpose();
        c.bottomRightCorner(n, n) = theta;
    }
    return c;
}

double dirac_bracket_general(const GroupDescriptor& d, const Differential& df,
                             const Differential& dg, const PhasePoint& p, Constraint side,
                             MatrixMode mode) {
    const std::vector<Differential> forms = constraint_forms(d, p, side);
    const int m = static_cast<int>(forms.size());
    RealVector u(m);
    RealVector v(m);
    for (int j = 0; j < m; ++j) {
        u(j) = canonical_bracket(d, df, forms[j], p);
        v(j) = canonical_bracket(d, forms[j], dg, p);
    }
    RealVector x;
    try {
        x = solve_linear(dirac_matrix(d, p, side, mode), v);
    } catch (const SingularMatrix& e) {
        throw NotSecondClass(e.what());
    }
    return canonical_bracket(d, df, dg, p) - u.dot(x);
}

double dirac_bracket_general(const GroupDescriptor& d, const ScalarField& f,
                             const ScalarField& g, const PhasePoint& p, Constraint side,
                             MatrixMode mode) {
    return dirac_bracket_general(d, f.diff(p), g.diff(p), p, side, mode);
}

RealMatrix projector_N(const GroupDescriptor& d, const GroupElement& g_minus) {
    return Ad_matrix(d, inverse(g_minus)) * block_projector(d, Side::Plus) *
           Ad_matrix(d, g_minus);
}

double dirac_bracket_N(const GroupDescriptor& d, const Differential& df, const Differential& dg,
                       const PhasePoint& p) {
    const RealMatrix q = projector_N(d, p.g_minus);
    return three_term(d, df, dg, apply_matrix(d, q, df.delta), apply_matrix(d, q, dg.delta),
                      p.eta);
}

double dirac_bracket_N(const GroupDescriptor& d, const ScalarField& f, const ScalarField& g,
                       const PhasePoint& p) {
    return dirac_bracket_N(d, f.diff(p), g.diff(p), p);
}

double dirac_bracket_M(const GroupDescriptor& d, const Differential& df, const Differential& dg,
                       const PhasePoint& p) {
    return three_term(d, df, dg, project(d, df.delta, Side::Minus),
                      project(d, dg.delta, Side::Minus), p.eta);
}

double dirac_bracket_M(const GroupDescriptor& d, const ScalarField& f, const ScalarField& g,
                       const PhasePoint& p) {
    return dirac_bracket_M(d, f.diff(p), g.diff(p), p);
}

double dirac_bracket(const GroupDescriptor& d, const Differential& df, const Differential& dg,
                     const PhasePoint& p, Constraint side) {
    return side == Constraint::N ? dirac_bracket_N(d, df, dg, p) : dirac_bracket_M(d, df, dg, p);
}

FundamentalBrackets fundamental_brackets_N(const GroupDescriptor& d, const PhasePoint& p) {
    const int n = d.dim_half;
    const RealMatrix q = projector_N(d, p.g_minus);
    const RealMatrix id = RealMatrix::Identity(d.dim(), d.dim());
    FundamentalBrackets fb;
    std::vector<AlgebraVector> t(d.dim());
    std::vector<AlgebraVector> dd(n);
    for (int i = 0; i < d.dim(); ++i) t[i] = algebra_basis(d, i);
    for (int a = 0; a < n; ++a) {
        const AlgebraVector gen = apply_matrix(d, q, t[a]);
        fb.xi_T.push_back(-(p.g.matrix * gen.matrix));
        dd[a] = apply_matrix(d, id - q, t[a]);
    }
    fb.f.assign(n, RealMatrix(n, n));
    fb.m.assign(n, RealMatrix(n, n));
    fb.n.assign(n, RealMatrix(n, n));
    fb.xi_xi = RealMatrix::Zero(n, n);
    for (int c = 0; c < n; ++c) {
        const AlgebraVector& lo = t[n + c];
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b) {
                fb.f[c](a, b) = d.structure[a](c, b);
                fb.m[c](a, b) = form(d, ad(d, dd[b], lo), t[a]) - form(d, ad(d, dd[a], lo), t[b]);
                fb.n[c](a, b) = form(d, ad(d, t[b], t[c]), dd[a]) -
                                form(d, ad(d, t[a], t[c]), dd[b]) -
                                form(d, t[c], ad(d, dd[a], dd[b]));
            }
        }
    }
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            double s = 0.0;
            for (int c = 0; c < n; ++c) {
                s += (-fb.f[c](a, b) + fb.m[c](a, b)) * p.eta.coords(c) +
                     fb.n[c](a, b) * p.eta.coords(n + c);
            }
            fb.xi_xi(a, b) = s;
        }
    }
    return fb;
}

DualVector momentum_map_left(const GroupDescriptor& d, const PhasePoint& p) {
    return coAd(d, p.g, p.eta);
}

ScalarField momentum_fn(const GroupDescriptor& d, const AlgebraVector& x) {
    ScalarField s;
    s.eval = [&d, x](const PhasePoint& p) { return pair(p.eta, Ad(d, inverse(p.g), x)); };
    s.diff = [&d, x](const PhasePoint& p) {
        const AlgebraVector delta = Ad(d, inverse(p.g), x);
        return Differential{-coad(d, delta, p.eta), delta};
    };
    return s;
}

double momentum_correction(const GroupDescriptor& d, const AlgebraVector& x,
                           const AlgebraVector& y, const PhasePoint& p) {
    const GroupElement gpi = inverse(p.g_plus);
    const AlgebraVector xm = project(d, Ad(d, gpi, x), Side::Minus);
    const AlgebraVector ym = project(d, Ad(d, gpi, y), Side::Minus);
    const DualVector em = coAd(d, p.g_minus, project_dual(d, p.eta, Side::Minus));
    return -pair(em, ad(d, xm, ym));
}

TangentVector ham_vf_N(const GroupDescriptor& d, const Differential& dh, const PhasePoint& p) {
    const RealMatrix q = projector_N(d, p.g_minus);
    const AlgebraVector v = apply_matrix(d, q, dh.delta);
    const DualVector w = -dh.bold_d - coad(d, v, p.eta);
    return {v, DualVector{q.transpose() * w.coords}};
}

TangentVector ham_vf_N(const GroupDescriptor& d, const ScalarField& h, const PhasePoint& p) {
    return ham_vf_N(d, h.diff(p), p);
}

TangentVector ham_vf_M(const GroupDescriptor& d, const Differential& dh, const PhasePoint& p) {
    const AlgebraVector v = project(d, dh.delta, Side::Minus);
    const DualVector w = -dh.bold_d - coad(d, v, p.eta);
    return {v, project_dual(d, w, Side::Minus)};
}

TangentVector ham_vf_M(const GroupDescriptor& d, const ScalarField& h, const PhasePoint& p) {
    return ham_vf_M(d, h.diff(p), p);
}

TangentVector momentum_vf_N(const GroupDescriptor& d, const AlgebraVector& x,
                            const PhasePoint& p) {
    const GroupElement gmi = inverse(p.g_minus);
    const AlgebraVector y = Ad(d, inverse(p.g_plus), x);
    const AlgebraVector v = Ad(d, gmi, project(d, y, Side::Plus));
    const AlgebraVector e = Ad(d, p.g_minus, flat_map(d, p.eta));
    const AlgebraVector w =
        Ad(d, gmi, project(d, ad(d, project(d, y, Side::Minus), e), Side::Minus));
    return {v, sharp_map(d, w)};
}

TangentVector momentum_vf_M(const GroupDescriptor& d, const AlgebraVector& x,
                            const PhasePoint& p) {
    const AlgebraVector y = Ad(d, inverse(p.g), x);
    const AlgebraVector v = project(d, y, Side::Minus);
    const AlgebraVector w =
        project(d, ad(d, project(d, y, Side::Plus), flat_map(d, p.eta)), Side::Plus);
    return {v, sharp_map(d, w)};
}

PhasePoint g_action_N(const GroupDescriptor& d, const GroupElement& h, const PhasePoint& p) {
    const GroupElement k = compose(compose(inverse(p.g_plus), h), p.g_plus);
    const auto [kp, km] = factorize(d, k);
    const GroupElement g = compose(compose(p.g_plus, kp), p.g_minus);
    const GroupElement t = compose(compose(inverse(p.g_minus), km), p.g_minus);
    return make_point(d, g, coAd(d, t, p.eta));
}

PhasePoint g_action_M(const GroupDescriptor& d, const GroupElement& h, const PhasePoint& p) {
    const GroupElement m = compose(compose(inverse(p.g), h), p.g);
    const auto [qp, qm] = factorize(d, inverse(m));
    const GroupElement g = compose(p.g, inverse(qm));
    return make_point(d, g, coAd(d, inverse(qp), p.eta));
}

bool second_class_check(const GroupDescriptor& d, const PhasePoint& p, Constraint side) {
    return numerical_rank(dirac_matrix(d, p, side), 1e-10) == 2 * d.dim_half;
}

}  // namespace fdirac
