#include "fdirac/linalg.hpp"

#include "fdirac/errors.hpp"

namespace fdirac {

RealVector solve_linear(const RealMatrix& a, const RealVector& b) {
    if (a.rows() != a.cols() || a.rows() != b.size()) {
        throw DegenerateInput("solve_linear: shape mismatch");
    }
    if (a.rows() == 0) return RealVector(0);
    const double scale = max_norm(a);
    Eigen::PartialPivLU<RealMatrix> lu(a);
    const RealVector pivots = lu.matrixLU().diagonal();
    if (scale == 0.0 || pivots.cwiseAbs().minCoeff() < 1e-12 * scale) {
        throw SingularMatrix("solve_linear: pivot below threshold");
    }
    return lu.solve(b);
}

int numerical_rank(const RealMatrix& a, double tol) {
    if (a.size() == 0 || max_norm(a) == 0.0) return 0;
    Eigen::FullPivLU<RealMatrix> lu(a);
    lu.setThreshold(tol);
    return static_cast<int>(lu.rank());
}

RealMatrix null_space(const RealMatrix& a, double tol) {
    if (a.size() == 0 || max_norm(a) == 0.0) {
        return RealMatrix::Identity(a.cols(), a.cols());
    }
    Eigen::FullPivLU<RealMatrix> lu(a);
    lu.setThreshold(tol);
    const RealMatrix kernel = lu.kernel();
    if (lu.rank() == a.cols()) return RealMatrix(a.cols(), 0);
    Eigen::HouseholderQR<RealMatrix> qr(kernel);
    return qr.householderQ() * RealMatrix::Identity(kernel.rows(), kernel.cols());
}

}  // namespace fdirac
