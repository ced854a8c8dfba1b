#include "fdirac/aks.hpp"

#include "fdirac/errors.hpp"

#include <cmath>

namespace fdirac {

namespace {

RealMatrix real_trace_form(const GroupDescriptor& d) {
    RealMatrix k(d.dim(), d.dim());
    for (int i = 0; i < d.dim(); ++i) {
        for (int j = 0; j < d.dim(); ++j) {
            k(i, j) = -0.5 * (d.basis[i] * d.basis[j]).trace().real();
        }
    }
    return k;
}

AlgebraVector dexp_inv(const GroupDescriptor& d, const AlgebraVector& u, const AlgebraVector& v) {
    const AlgebraVector uv = ad(d, u, v);
    return v - 0.5 * uv + (1.0 / 12.0) * ad(d, u, uv);
}

GroupElement unimodular(const GroupElement& g) {
    return {g.matrix / std::sqrt(g.matrix.determinant()), Tag::Full};
}

PhasePoint rk4_step(const GroupDescriptor& d, const VectorField& vf, const PhasePoint& p,
                    double h) {
    const TangentVector s1 = vf(p);
    const AlgebraVector u2 = (0.5 * h) * s1.body_velocity;
    const PhasePoint p2 =
        make_point(d, compose(p.g, exp_algebra(u2)), p.eta + (0.5 * h) * s1.eta_dot);
    const TangentVector s2 = vf(p2);
    const AlgebraVector k2 = dexp_inv(d, u2, s2.body_velocity);
    const AlgebraVector u3 = (0.5 * h) * k2;
    const PhasePoint p3 =
        make_point(d, compose(p.g, exp_algebra(u3)), p.eta + (0.5 * h) * s2.eta_dot);
    const TangentVector s3 = vf(p3);
    const AlgebraVector k3 = dexp_inv(d, u3, s3.body_velocity);
    const AlgebraVector u4 = h * k3;
    const PhasePoint p4 = make_point(d, compose(p.g, exp_algebra(u4)), p.eta + h * s3.eta_dot);
    const TangentVector s4 = vf(p4);
    const AlgebraVector k4 = dexp_inv(d, u4, s4.body_velocity);
    const AlgebraVector u = (h / 6.0) * (s1.body_velocity + 2.0 * k2 + 2.0 * k3 + k4);
    const DualVector w = (h / 6.0) * (s1.eta_dot + 2.0 * s2.eta_dot + 2.0 * s3.eta_dot + s4.eta_dot);
    return make_point(d, unimodular(compose(p.g, exp_algebra(u))), p.eta + w);
}

}  // namespace

CollectiveHamiltonian quadratic_hamiltonian(const GroupDescriptor& d) {
    CollectiveHamiltonian c;
    c.h = [&d](const DualVector& xi) { return 0.5 * pair(xi, flat_map(d, xi)); };
    c.legendre = [&d](const DualVector& xi) { return flat_map(d, xi); };
    c.ad_invariant = true;
    return c;
}

CollectiveHamiltonian killing_hamiltonian(const GroupDescriptor& d) {
    const RealMatrix kinv = real_trace_form(d).inverse();
    CollectiveHamiltonian c;
    c.h = [kinv](const DualVector& xi) { return 0.5 * xi.coords.dot(kinv * xi.coords); };
    c.legendre = [&d, kinv](const DualVector& xi) {
        return algebra_from_coords(d, kinv * xi.coords);
    };
    c.ad_invariant = true;
    return c;
}

CollectiveHamiltonian quartic_hamiltonian(const GroupDescriptor& d) {
    CollectiveHamiltonian c;
    c.h = [&d](const DualVector& xi) {
        const double q = 0.5 * pair(xi, flat_map(d, xi));
        return q * q;
    };
    c.legendre = [&d](const DualVector& xi) {
        const AlgebraVector f = flat_map(d, xi);
        return pair(xi, f) * f;
    };
    c.ad_invariant = true;
    return c;
}

CollectiveHamiltonian linear_hamiltonian(const GroupDescriptor& d, int index) {
    CollectiveHamiltonian c;
    c.h = [index](const DualVector& xi) { return xi.coords(index); };
    c.legendre = [&d, index](const DualVector&) { return algebra_basis(d, index); };
    c.ad_invariant = false;
    return c;
}

ScalarField lift(const GroupDescriptor& d, const CollectiveHamiltonian& h) {
    ScalarField s;
    s.eval = [&d, h](const PhasePoint& p) { return h.h(momentum_map_left(d, p)); };
    s.diff = [&d, h](const PhasePoint& p) {
        const AlgebraVector delta = Ad(d, inverse(p.g), h.legendre(momentum_map_left(d, p)));
        return Differential{-coad(d, delta, p.eta), delta};
    };
    return s;
}

TangentVector collective_vf(const GroupDescriptor& d, const CollectiveHamiltonian& h,
                            const PhasePoint& p) {
    const RealMatrix q = projector_N(d, p.g_minus);
    const AlgebraVector v = algebra_from_coords(d, q * h.legendre(p.eta).coords);
    return {v, DualVector{-(q.transpose() * coad(d, v, p.eta).coords)}};
}

Trajectory integrate_rk4(const GroupDescriptor& d, const VectorField& vf, const PhasePoint& p0,
                         double t_end, int steps) {
    if (steps < 1) throw DegenerateInput("integrate_rk4: steps must be positive");
    const double h = t_end / steps;
    Trajectory tr;
    tr.times.push_back(0.0);
    tr.points.push_back(p0);
    PhasePoint p = p0;
    for (int i = 1; i <= steps; ++i) {
        p = rk4_step(d, vf, p, h);
        tr.times.push_back(i * h);
        tr.points.push_back(p);
    }
    return tr;
}

PhasePoint integrate_rk4_endpoint(const GroupDescriptor& d, const VectorField& vf,
                                  const PhasePoint& p0, double t_end, int steps) {
    if (steps < 1) throw DegenerateInput("integrate_rk4: steps must be positive");
    const double h = t_end / steps;
    PhasePoint p = p0;
    for (int i = 0; i < steps; ++i) p = rk4_step(d, vf, p, h);
    return p;
}

Trajectory solve_by_factorization(const GroupDescriptor& d, const CollectiveHamiltonian& h,
                                  const PhasePoint& p0, double t_end, int samples) {
    if (!is_character(d, project_dual(d, p0.eta, Side::Minus))) {
        throw NotCharacter("solve_by_factorization: eta- is not a character");
    }
    if (!h.ad_invariant) throw Error("solve_by_factorization: Hamiltonian not Ad-invariant");
    if (samples < 1) throw DegenerateInput("solve_by_factorization: samples must be positive");
    const DualVector xi0 = coAd(d, p0.g_minus, p0.eta);
    const AlgebraVector l = h.legendre(xi0);
    const GroupElement gmi = inverse(p0.g_minus);
    Trajectory tr;
    const int count = (t_end == 0.0) ? 1 : samples + 1;
    for (int i = 0; i < count; ++i) {
        const double t = (count == 1) ? 0.0 : t_end * i / samples;
        const GroupElement k = compose(p0.g_plus, exp_algebra(t * l));
        const auto [kp, km] = factorize(d, k);
        const GroupElement g = compose(kp, p0.g_minus);
        const DualVector eta = coAd(d, compose(gmi, km), xi0);
        tr.times.push_back(t);
        tr.points.push_back(make_point(d, g, eta));
        tr.h_minus.push_back(km);
    }
    return tr;
}

DualVector reconstruct_xi(const GroupDescriptor& d, const PhasePoint& p,
                          const GroupElement& h_minus) {
    return coAd(d, compose(inverse(h_minus), p.g_minus), p.eta);
}

double involutivity_check(const GroupDescriptor& d, const CollectiveHamiltonian& f,
                          const CollectiveHamiltonian& g, const PhasePoint& p) {
    return dirac_bracket_N(d, lift(d, f), lift(d, g), p);
}

std::pair<DualVector, DualVector> aks_momentum_J(const GroupDescriptor& d, const PhasePoint& p) {
    return {project_dual(d, coAd(d, p.g, p.eta), Side::Plus),
            project_dual(d, p.eta, Side::Minus)};
}

std::pair<DualVector, DualVector> orbit_map_L(const GroupDescriptor& d, const PhasePoint& p,
                                              const DualVector& eta_plus,
                                              const DualVector& eta_minus, double tol) {
    const auto [jp, jm] = aks_momentum_J(d, p);
    const double gap = std::max((jp - eta_plus).coords.cwiseAbs().maxCoeff(),
                                (jm - eta_minus).coords.cwiseAbs().maxCoeff());
    if (gap > tol) throw NotOnLevelSet("orbit_map_L: point not on the momentum level set");
    const DualVector s = coAd(d, p.g_minus, p.eta);
    return {project_dual(d, s, Side::Plus), project_dual(d, s, Side::Minus)};
}

double reduced_hamiltonian(const GroupDescriptor& d, const DualVector& s_plus,
                           const DualVector& s_minus) {
    return 0.5 * pair(s_plus, flat_map(d, s_plus)) + 0.5 * pair(s_minus, flat_map(d, s_minus)) +
           pair(s_plus, flat_map(d, s_minus));
}

std::pair<DualVector, DualVector> orbit_vf(const GroupDescriptor& d, const DualVector& s_plus,
                                           const DualVector& s_minus) {
    const AlgebraVector f = flat_map(d, s_plus + s_minus);
    const DualVector a = coad(d, project(d, f, Side::Plus), s_plus);
    const DualVector b = coad(d, project(d, f, Side::Minus), s_minus);
    return {-project_dual(d, a, Side::Plus), project_dual(d, b, Side::Minus)};
}

double orbit_form(const GroupDescriptor& d, const DualVector& s_plus, const DualVector& s_minus,
                  const std::pair<AlgebraVector, AlgebraVector>& x,
                  const std::pair<AlgebraVector, AlgebraVector>& y) {
    return pair(s_plus, ad(d, x.first, y.first)) - pair(s_minus, ad(d, x.second, y.second));
}

double canonical_form(const GroupDescriptor& d, const PhasePoint& p, const TangentVector& v1,
                      const TangentVector& v2) {
    return pair(v1.eta_dot, v2.body_velocity) - pair(v2.eta_dot, v1.body_velocity) -
           pair(p.eta, ad(d, v1.body_velocity, v2.body_velocity));
}

std::vector<TangentVector> lambda_tangent_basis(const GroupDescriptor& d, const PhasePoint& p) {
    const int dim = d.dim();
    const int n = d.dim_half;
    RealMatrix cond = RealMatrix::Zero(dim, 2 * dim);
    for (int j = 0; j < 2 * dim; ++j) {
        DualVector w = dual_zero(d);
        DualVector lam = dual_zero(d);
        if (j < dim) {
            w = coad(d, algebra_basis(d, j), p.eta);
        } else {
            lam = dual_basis(d, j - dim);
            w = lam;
        }
        const DualVector c = coAd(d, p.g, w);
        cond.block(0, j, n, 1) = c.coords.head(n);
        cond.block(n, j, n, 1) = lam.coords.tail(n);
    }
    const RealMatrix ns = null_space(cond);
    std::vector<TangentVector> out;
    for (int k = 0; k < ns.cols(); ++k) {
        out.push_back({algebra_from_coords(d, ns.col(k).head(dim)),
                       DualVector{ns.col(k).tail(dim)}});
    }
    return out;
}

std::pair<DualVector, DualVector> orbit_pushforward(const GroupDescriptor& d,
                                                    const PhasePoint& p,
                                                    const TangentVector& v) {
    const AlgebraVector w =
        Ad(d, inverse(p.g_minus),
           project(d, Ad(d, p.g_minus, v.body_velocity), Side::Minus));
    const DualVector t = coAd(d, p.g_minus, coad(d, w, p.eta) + v.eta_dot);
    return {project_dual(d, t, Side::Plus), project_dual(d, t, Side::Minus)};
}

std::pair<AlgebraVector, AlgebraVector> orbit_generators(const GroupDescriptor& d,
                                                         const PhasePoint& p,
                                                         const AlgebraVector& x) {
    const AlgebraVector y = Ad(d, p.g_minus, x);
    return {project(d, y, Side::Plus), project(d, y, Side::Minus)};
}

TangentVector aks_vf_on_N(const GroupDescriptor& d, const PhasePoint& p) {
    if (!is_character(d, project_dual(d, p.eta, Side::Minus))) {
        throw NotCharacter("aks_vf_on_N: eta- is not a character");
    }
    const GroupElement gmi = inverse(p.g_minus);
    const AlgebraVector a = Ad(d, p.g_minus, flat_map(d, p.eta));
    const AlgebraVector v = Ad(d, gmi, project(d, a, Side::Plus));
    const AlgebraVector w = Ad(d, gmi, ad(d, project(d, a, Side::Minus), a));
    return {v, sharp_map(d, w)};
}

}  // namespace fdirac
