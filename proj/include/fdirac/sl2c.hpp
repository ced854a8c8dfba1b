#pragma once

#include "fdirac/double_group.hpp"

#include <complex>

namespace fdirac::sl2c {

/// Iwasawa factors g = k b with k in SU(2), b upper triangular with
/// diagonal (a, 1/a), a > 0.
struct IwasawaFactors {
    GroupElement su2_part;
    GroupElement b_part;

    std::complex<double> alpha() const { return su2_part.matrix(0, 0); }
    std::complex<double> beta() const { return su2_part.matrix(0, 1); }
    double a() const { return b_part.matrix(0, 0).real(); }
    std::complex<double> z() const { return b_part.matrix(0, 1); }
};

/// Gram-Schmidt Iwasawa factorization of a unimodular matrix. Throws
/// DegenerateInput if |det g - 1| > 1e-10 or the first column vanishes.
IwasawaFactors iwasawa(const CMat2& g);

/// Basis T_1, T_2, T_3 (su2) and T^1, T^2, T^3 (b).
std::vector<CMat2> basis();

/// kappa(X, Y) = 4 tr(XY).
std::complex<double> killing(const CMat2& x, const CMat2& y);

/// (X, Y) = -1/4 Im kappa(X, Y).
double bilinear_form(const CMat2& x, const CMat2& y);

bool is_su2(const CMat2& m, double tol = 1e-10);
bool is_b(const CMat2& m, double tol = 1e-10);

/// Descriptor of SL(2,C) = SU(2) B.
GroupDescriptor build_descriptor();

/// Shared descriptor instance.
const GroupDescriptor& descriptor();

/// psi: su2 -> b*, x_a T_a -> x_a t^a.
DualVector psi(const GroupDescriptor& d, const AlgebraVector& x);
/// Inverse of psi.
AlgebraVector psi_inverse(const GroupDescriptor& d, const DualVector& xi);

}  // namespace fdirac::sl2c
