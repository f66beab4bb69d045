#ifndef TORICMON_CONES_HPP
#define TORICMON_CONES_HPP

#include <vector>

#include "toricmon/intlin.hpp"

namespace toricmon {

/// Strongly convex rational polyhedral cone in N, given by its extreme rays.
struct Cone {
    std::size_t ambient_rank = 0;
    std::vector<Vec> rays;  // primitive, pairwise non-proportional, canonically sorted
};

/// Validates: primitive rays, no proportional pair, strongly convex,
/// every listed ray extreme.  Rays are stored canonically sorted.
Cone make_cone(std::vector<Vec> rays, std::size_t ambient_rank);

/// omega = sigma-dual in M.  `generators` are the extreme rays of the
/// pointed part; when sigma does not span N_Q the dual has a lineality
/// subspace, spanned by `lineality` (then +-each basis vector is needed
/// to generate omega as a cone).
struct DualConeData {
    std::vector<Vec> generators;
    std::vector<Vec> lineality;
    std::vector<Vec> facet_normals;  // the rays p_i of sigma
};

DualConeData dual_cone(const Cone& c);

/// Minimal generating set of the semigroup M n omega, canonically sorted.
/// Requires omega pointed (facet normals spanning M_Q).
std::vector<Vec> hilbert_basis(const DualConeData& dual);

/// x^lhs = x^rhs between monomials in the given semigroup generators.
/// Exponent vectors are componentwise >= 0 with disjoint supports.
struct BinomialRelation {
    std::vector<Int> lhs, rhs;
    bool operator==(const BinomialRelation&) const = default;
};

/// Binomial relations among `gens` with both sides of total degree at most
/// `degree_bound`, read off kernel vectors of the generator matrix.  This
/// is a bounded report, not a generating set of the toric ideal.
std::vector<BinomialRelation> binomial_relations(const std::vector<Vec>& gens,
                                                 unsigned degree_bound);

/// 2D cone normal form: a basis of N in which the rays become
/// (0,1) and (d,-k) with d > 0, 0 <= k <= d, gcd(d,k) = 1.
/// The pair (d,k) is canonicalized over the two ray orderings
/// (k vs its inverse mod d), making it an isomorphism invariant
/// of (N, sigma).
struct SurfaceNormalForm {
    Int d, k;
    Mat basis_change;  // maps input rays onto {(0,1),(d,-k)}
};

SurfaceNormalForm normal_form_2d(const Cone& c);

}  // namespace toricmon

#endif
