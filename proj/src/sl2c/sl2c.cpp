#include "fdirac/sl2c.hpp"

#include "fdirac/errors.hpp"

#include <cmath>

namespace fdirac::sl2c {

namespace {
using C = std::complex<double>;
constexpr C I{0.0, 1.0};
}  // namespace

IwasawaFactors iwasawa(const CMat2& g) {
    if (std::abs(g.determinant() - C(1.0)) > 1e-10) {
        throw DegenerateInput("iwasawa: matrix is not unimodular");
    }
    const Eigen::Vector2cd col = g.col(0);
    const double nrm = col.norm();
    if (nrm < 1e-12) throw DegenerateInput("iwasawa: vanishing first column");
    const Eigen::Vector2cd u = col / nrm;
    CMat2 k;
    k << u(0), -std::conj(u(1)), u(1), std::conj(u(0));
    CMat2 b = k.adjoint() * g;
    b(1, 0) = 0.0;
    b(0, 0) = nrm;
    return {GroupElement{k, Tag::Plus}, GroupElement{b, Tag::Minus}};
}

std::vector<CMat2> basis() {
    CMat2 t1, t2, t3, u1, u2, u3;
    t1 << 0, I, I, 0;
    t2 << 0, 1, -1, 0;
    t3 << I, 0, 0, -I;
    u1 << 0, -1, 0, 0;
    u2 << 0, I, 0, 0;
    u3 << -0.5, 0, 0, 0.5;
    return {t1, t2, t3, u1, u2, u3};
}

C killing(const CMat2& x, const CMat2& y) { return 4.0 * (x * y).trace(); }

double bilinear_form(const CMat2& x, const CMat2& y) { return -0.25 * killing(x, y).imag(); }

bool is_su2(const CMat2& m, double tol) {
    return max_norm(CMat2(m.adjoint() * m - CMat2::Identity())) <= tol &&
           std::abs(m.determinant() - C(1.0)) <= tol;
}

bool is_b(const CMat2& m, double tol) {
    return std::abs(m(1, 0)) <= tol && std::abs(m(0, 0).imag()) <= tol &&
           std::abs(m(1, 1).imag()) <= tol && m(0, 0).real() > 0.0 && m(1, 1).real() > 0.0 &&
           std::abs(m.determinant() - C(1.0)) <= tol;
}

GroupDescriptor build_descriptor() {
    return make_descriptor(
        3, basis(), bilinear_form,
        [](const CMat2& g) {
            const IwasawaFactors f = iwasawa(g);
            return std::make_pair(f.su2_part.matrix, f.b_part.matrix);
        },
        [](const CMat2& m) { return is_su2(m); }, [](const CMat2& m) { return is_b(m); });
}

const GroupDescriptor& descriptor() {
    static const GroupDescriptor d = build_descriptor();
    return d;
}

DualVector psi(const GroupDescriptor& d, const AlgebraVector& x) {
    RealVector c = RealVector::Zero(d.dim());
    c.tail(3) = x.coords.head(3);
    return {c};
}

AlgebraVector psi_inverse(const GroupDescriptor& d, const DualVector& xi) {
    RealVector c = RealVector::Zero(d.dim());
    c.head(3) = xi.coords.tail(3);
    return algebra_from_coords(d, c);
}

}  // namespace fdirac::sl2c
