#include "fdirac/double_group.hpp"

#include "fdirac/errors.hpp"

#include <cmath>

namespace fdirac {

AlgebraVector operator+(const AlgebraVector& x, const AlgebraVector& y) {
    return {x.coords + y.coords, x.matrix + y.matrix};
}

AlgebraVector operator-(const AlgebraVector& x, const AlgebraVector& y) {
    return {x.coords - y.coords, x.matrix - y.matrix};
}

AlgebraVector operator-(const AlgebraVector& x) { return {-x.coords, -x.matrix}; }

AlgebraVector operator*(double s, const AlgebraVector& x) {
    return {s * x.coords, s * x.matrix};
}

DualVector operator+(const DualVector& x, const DualVector& y) { return {x.coords + y.coords}; }

DualVector operator-(const DualVector& x, const DualVector& y) { return {x.coords - y.coords}; }

DualVector operator-(const DualVector& x) { return {-x.coords}; }

DualVector operator*(double s, const DualVector& x) { return {s * x.coords}; }

double pair(const DualVector& eta, const AlgebraVector& x) { return eta.coords.dot(x.coords); }

GroupDescriptor make_descriptor(int dim_half, std::vector<CMat2> basis, MatrixForm form,
                                Factorizer factorizer, MembershipTest is_plus,
                                MembershipTest is_minus) {
    const int dim = 2 * dim_half;
    if (dim_half <= 0 || static_cast<int>(basis.size()) != dim) {
        throw DegenerateInput("make_descriptor: basis size must be 2n");
    }
    GroupDescriptor d;
    d.dim_half = dim_half;
    d.basis = std::move(basis);
    d.form = std::move(form);
    d.factorizer = std::move(factorizer);
    d.is_plus_member = std::move(is_plus);
    d.is_minus_member = std::move(is_minus);
    d.pairing = RealMatrix(dim, dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) d.pairing(i, j) = d.form(d.basis[i], d.basis[j]);
    }
    const double scale = max_norm(d.pairing);
    if (max_norm(RealMatrix(d.pairing - d.pairing.transpose())) > 1e-12 * scale) {
        throw DegenerateInput("make_descriptor: pairing not symmetric");
    }
    if (numerical_rank(d.pairing, 1e-10) != dim) {
        throw DegenerateInput("make_descriptor: pairing degenerate");
    }
    const int n = dim_half;
    if (max_norm(RealMatrix(d.pairing.topLeftCorner(n, n))) > 1e-12 * scale ||
        max_norm(RealMatrix(d.pairing.bottomRightCorner(n, n))) > 1e-12 * scale) {
        throw DegenerateInput("make_descriptor: subspaces not isotropic");
    }
    d.pairing_inverse = d.pairing.inverse();
    d.structure.assign(dim, RealMatrix(dim, dim));
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            const CMat2 c = d.basis[i] * d.basis[j] - d.basis[j] * d.basis[i];
            d.structure[i].col(j) = expand(d, c);
        }
    }
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            const bool both_plus = i < n && j < n;
            const bool both_minus = i >= n && j >= n;
            const RealVector& c = d.structure[i].col(j);
            if ((both_plus && c.tail(n).cwiseAbs().maxCoeff() > 1e-12) ||
                (both_minus && c.head(n).cwiseAbs().maxCoeff() > 1e-12)) {
                throw DegenerateInput("make_descriptor: subalgebra not closed");
            }
        }
    }
    return d;
}

RealVector expand(const GroupDescriptor& d, const CMat2& m) {
    const int dim = d.dim();
    RealVector rhs(dim);
    for (int i = 0; i < dim; ++i) rhs(i) = d.form(m, d.basis[i]);
    const RealVector x = d.pairing_inverse * rhs;
    CMat2 back = CMat2::Zero();
    for (int i = 0; i < dim; ++i) back += x(i) * d.basis[i];
    if (max_norm(CMat2(back - m)) > 1e-10 * (1.0 + max_norm(m))) {
        throw BasisExpansionFailure("expand: matrix outside the basis span");
    }
    return x;
}

AlgebraVector algebra_from_coords(const GroupDescriptor& d, const RealVector& x) {
    CMat2 m = CMat2::Zero();
    for (int i = 0; i < d.dim(); ++i) m += x(i) * d.basis[i];
    return {x, m};
}

AlgebraVector algebra_from_matrix(const GroupDescriptor& d, const CMat2& m) {
    return {expand(d, m), m};
}

AlgebraVector algebra_basis(const GroupDescriptor& d, int i) {
    return algebra_from_coords(d, RealVector::Unit(d.dim(), i));
}

AlgebraVector algebra_zero(const GroupDescriptor& d) {
    return {RealVector::Zero(d.dim()), CMat2::Zero()};
}

DualVector dual_basis(const GroupDescriptor& d, int i) { return {RealVector::Unit(d.dim(), i)}; }

DualVector dual_zero(const GroupDescriptor& d) { return {RealVector::Zero(d.dim())}; }

double form(const GroupDescriptor& d, const AlgebraVector& x, const AlgebraVector& y) {
    return x.coords.dot(d.pairing * y.coords);
}

GroupElement inverse(const GroupElement& g) { return {g.matrix.inverse(), g.tag}; }

GroupElement compose(const GroupElement& g, const GroupElement& h) {
    const Tag tag = (g.tag == h.tag) ? g.tag : Tag::Full;
    return {g.matrix * h.matrix, tag};
}

GroupElement exp_algebra(const AlgebraVector& x) { return {mat_exp<double>(x.matrix), Tag::Full}; }

std::pair<GroupElement, GroupElement> factorize(const GroupDescriptor& d, const GroupElement& g) {
    auto [gp, gm] = d.factorizer(g.matrix);
    return {GroupElement{gp, Tag::Plus}, GroupElement{gm, Tag::Minus}};
}

AlgebraVector project(const GroupDescriptor& d, const AlgebraVector& x, Side side) {
    RealVector c = x.coords;
    const int n = d.dim_half;
    if (side == Side::Plus) {
        c.tail(n).setZero();
    } else {
        c.head(n).setZero();
    }
    return algebra_from_coords(d, c);
}

DualVector project_dual(const GroupDescriptor& d, const DualVector& eta, Side side) {
    RealVector c = eta.coords;
    const int n = d.dim_half;
    if (side == Side::Plus) {
        c.tail(n).setZero();
    } else {
        c.head(n).setZero();
    }
    return {c};
}

AlgebraVector ad(const GroupDescriptor& d, const AlgebraVector& x, const AlgebraVector& y) {
    return algebra_from_matrix(d, x.matrix * y.matrix - y.matrix * x.matrix);
}

AlgebraVector Ad(const GroupDescriptor& d, const GroupElement& g, const AlgebraVector& x) {
    return algebra_from_matrix(d, g.matrix * x.matrix * g.matrix.inverse());
}

RealMatrix Ad_matrix(const GroupDescriptor& d, const GroupElement& g) {
    RealMatrix m(d.dim(), d.dim());
    const CMat2 gi = g.matrix.inverse();
    for (int j = 0; j < d.dim(); ++j) m.col(j) = expand(d, g.matrix * d.basis[j] * gi);
    return m;
}

DualVector coAd(const GroupDescriptor& d, const GroupElement& g, const DualVector& eta) {
    return {Ad_matrix(d, inverse(g)).transpose() * eta.coords};
}

DualVector coad(const GroupDescriptor& d, const AlgebraVector& x, const DualVector& eta) {
    RealMatrix adx = RealMatrix::Zero(d.dim(), d.dim());
    for (int i = 0; i < d.dim(); ++i) adx += x.coords(i) * d.structure[i];
    return {-adx.transpose() * eta.coords};
}

GroupElement dressing(const GroupDescriptor& d, const GroupElement& h_minus,
                      const GroupElement& g_plus) {
    return factorize(d, compose(h_minus, g_plus)).first;
}

AlgebraVector dressing_generator(const GroupDescriptor& d, const GroupElement& g_plus,
                                 const AlgebraVector& x_minus) {
    return project(d, Ad(d, inverse(g_plus), x_minus), Side::Plus);
}

TangentSplit tangent_split(const GroupDescriptor& d, const GroupElement& g,
                           const AlgebraVector& v_body) {
    const auto [gp, gm] = factorize(d, g);
    const AlgebraVector w = Ad(d, gm, v_body);
    TangentSplit s;
    s.x_plus = project(d, v_body, Side::Plus);
    s.x_minus = project(d, v_body, Side::Minus);
    s.plus_velocity = project(d, w, Side::Plus);
    s.minus_velocity = Ad(d, inverse(gm), project(d, w, Side::Minus));
    return s;
}

bool is_character(const GroupDescriptor& d, const DualVector& eta_minus, double tol) {
    const int n = d.dim_half;
    const DualVector e = project_dual(d, eta_minus, Side::Minus);
    for (int a = n; a < 2 * n; ++a) {
        for (int b = n; b < 2 * n; ++b) {
            if (std::abs(e.coords.dot(d.structure[a].col(b))) > tol) return false;
        }
    }
    return true;
}

AlgebraVector flat_map(const GroupDescriptor& d, const DualVector& xi) {
    return algebra_from_coords(d, d.pairing_inverse.transpose() * xi.coords);
}

DualVector sharp_map(const GroupDescriptor& d, const AlgebraVector& x) {
    return {d.pairing.transpose() * x.coords};
}

double Sampler::uniform(double lo, double hi) {
    const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
}

AlgebraVector Sampler::algebra(const GroupDescriptor& d) {
    RealVector x(d.dim());
    for (int i = 0; i < d.dim(); ++i) x(i) = uniform();
    return algebra_from_coords(d, x);
}

DualVector Sampler::dual(const GroupDescriptor& d) {
    RealVector x(d.dim());
    for (int i = 0; i < d.dim(); ++i) x(i) = uniform();
    return {x};
}

GroupElement Sampler::group(const GroupDescriptor& d) { return exp_algebra(algebra(d)); }

GroupElement Sampler::plus(const GroupDescriptor& d) { return factorize(d, group(d)).first; }

GroupElement Sampler::minus(const GroupDescriptor& d) { return factorize(d, group(d)).second; }

}  // namespace fdirac
