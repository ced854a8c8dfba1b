#pragma once

#include "fdirac/linalg.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <utility>
#include <vector>

namespace fdirac {

/// Which factor a group element belongs to.
enum class Tag { Full, Plus, Minus };

/// Selects the G+ / g+ side or the G- / g- side of a splitting.
enum class Side { Plus, Minus };

/// Unimodular 2x2 matrix tagged with its group.
struct GroupElement {
    CMat2 matrix = CMat2::Identity();
    Tag tag = Tag::Full;
};

/// Element of the Lie algebra: coordinates on the combined basis
/// (x_1..x_n on the plus basis, y_1..y_n on the minus basis) and the matrix.
struct AlgebraVector {
    RealVector coords;
    CMat2 matrix = CMat2::Zero();
};

/// Element of the dual algebra: coordinates xi_a (plus block) and xi^a
/// (minus block) in the dual basis.
struct DualVector {
    RealVector coords;
};

AlgebraVector operator+(const AlgebraVector& x, const AlgebraVector& y);
AlgebraVector operator-(const AlgebraVector& x, const AlgebraVector& y);
AlgebraVector operator-(const AlgebraVector& x);
AlgebraVector operator*(double s, const AlgebraVector& x);
DualVector operator+(const DualVector& x, const DualVector& y);
DualVector operator-(const DualVector& x, const DualVector& y);
DualVector operator-(const DualVector& x);
DualVector operator*(double s, const DualVector& x);

/// Dual pairing <eta, X>.
double pair(const DualVector& eta, const AlgebraVector& x);

/// Factorization g -> (g+, g-) with g = g+ g-.
using Factorizer = std::function<std::pair<CMat2, CMat2>(const CMat2&)>;
/// Membership predicate for one of the factor groups.
using MembershipTest = std::function<bool(const CMat2&)>;
/// Real bilinear form on matrices.
using MatrixForm = std::function<double(const CMat2&, const CMat2&)>;

/// Immutable description of a double Lie group G = G+ G-.
struct GroupDescriptor {
    int dim_half = 0;
    /// Plus basis followed by minus basis (2n matrices).
    std::vector<CMat2> basis;
    MatrixForm form;
    /// pairing(i, j) = form(basis[i], basis[j]).
    RealMatrix pairing;
    RealMatrix pairing_inverse;
    Factorizer factorizer;
    MembershipTest is_plus_member;
    MembershipTest is_minus_member;
    /// structure[i].col(j) = coordinates of [basis[i], basis[j]].
    std::vector<RealMatrix> structure;

    int dim() const { return 2 * dim_half; }
};

/// Builds a descriptor and checks its invariants (symmetric nondegenerate
/// block-off-diagonal pairing, subalgebra closure). Throws DegenerateInput.
GroupDescriptor make_descriptor(int dim_half, std::vector<CMat2> basis, MatrixForm form,
                                Factorizer factorizer, MembershipTest is_plus,
                                MembershipTest is_minus);

/// Coordinates of a matrix in the basis; throws BasisExpansionFailure when
/// the matrix is not in the span.
RealVector expand(const GroupDescriptor& d, const CMat2& m);

AlgebraVector algebra_from_coords(const GroupDescriptor& d, const RealVector& x);
AlgebraVector algebra_from_matrix(const GroupDescriptor& d, const CMat2& m);
AlgebraVector algebra_basis(const GroupDescriptor& d, int i);
AlgebraVector algebra_zero(const GroupDescriptor& d);
DualVector dual_basis(const GroupDescriptor& d, int i);
DualVector dual_zero(const GroupDescriptor& d);

/// Invariant bilinear form (X, Y) on the algebra.
double form(const GroupDescriptor& d, const AlgebraVector& x, const AlgebraVector& y);

GroupElement inverse(const GroupElement& g);
GroupElement compose(const GroupElement& g, const GroupElement& h);
GroupElement exp_algebra(const AlgebraVector& x);

/// g = g+ g- with tagged factors.
std::pair<GroupElement, GroupElement> factorize(const GroupDescriptor& d, const GroupElement& g);

/// Keeps the coordinate block of the given side and zeroes the other.
AlgebraVector project(const GroupDescriptor& d, const AlgebraVector& x, Side side);
/// Keeps the dual coordinate block of the given side (Plus = xi_a block).
DualVector project_dual(const GroupDescriptor& d, const DualVector& eta, Side side);

/// Lie bracket [X, Y].
AlgebraVector ad(const GroupDescriptor& d, const AlgebraVector& x, const AlgebraVector& y);
/// Adjoint action g X g^-1.
AlgebraVector Ad(const GroupDescriptor& d, const GroupElement& g, const AlgebraVector& x);
/// Matrix of Ad_g in basis coordinates.
RealMatrix Ad_matrix(const GroupDescriptor& d, const GroupElement& g);
/// Coadjoint action: <coAd(g, eta), X> = <eta, Ad_{g^-1} X>.
DualVector coAd(const GroupDescriptor& d, const GroupElement& g, const DualVector& eta);
/// Infinitesimal coadjoint action: <coad(X, eta), Y> = -<eta, [X, Y]>.
DualVector coad(const GroupDescriptor& d, const AlgebraVector& x, const DualVector& eta);

/// Dressing action of G- on G+: the G+ factor of h- g+.
GroupElement dressing(const GroupDescriptor& d, const GroupElement& h_minus,
                      const GroupElement& g_plus);
/// Left-trivialized dressing generator Pi+ Ad_{g+^-1} X-.
AlgebraVector dressing_generator(const GroupDescriptor& d, const GroupElement& g_plus,
                                 const AlgebraVector& x_minus);

/// Splitting of a body velocity v at g = g+ g-.
struct TangentSplit {
    AlgebraVector x_plus;
    AlgebraVector x_minus;
    /// g+^-1 d/dt g+.
    AlgebraVector plus_velocity;
    /// g-^-1 d/dt g-.
    AlgebraVector minus_velocity;
};

TangentSplit tangent_split(const GroupDescriptor& d, const GroupElement& g,
                           const AlgebraVector& v_body);

/// True iff <eta-, [T^a, T^b]> vanishes (to tol) on the minus subalgebra.
bool is_character(const GroupDescriptor& d, const DualVector& eta_minus, double tol = 1e-12);

/// Identification of the dual with the algebra: (flat_map(xi), Y) = <xi, Y>.
AlgebraVector flat_map(const GroupDescriptor& d, const DualVector& xi);
/// Inverse of flat_map.
DualVector sharp_map(const GroupDescriptor& d, const AlgebraVector& x);

/// Seeded sampler: algebra and dual coordinates uniform in [-1, 1], group
/// elements as exponentials of random algebra vectors.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : engine_(seed) {}

    double uniform(double lo = -1.0, double hi = 1.0);
    AlgebraVector algebra(const GroupDescriptor& d);
    DualVector dual(const GroupDescriptor& d);
    GroupElement group(const GroupDescriptor& d);
    GroupElement plus(const GroupDescriptor& d);
    GroupElement minus(const GroupDescriptor& d);

private:
    std::mt19937_64 engine_;
};

}  // namespace fdirac
