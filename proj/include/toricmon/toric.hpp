#ifndef TORICMON_TORIC_HPP
#define TORICMON_TORIC_HPP

#include <vector>

#include "toricmon/cones.hpp"
#include "toricmon/intlin.hpp"

namespace toricmon {

/// An affine toric variety together with the combinatorial data the rest
/// of the library reads off it.  When the rays do not span N_Q the
/// coordinates are changed (by `basis_change`, unimodular) so that the
/// rays occupy the first n - torus_rank coordinates and X splits off a
/// torus factor (K^x)^torus_rank; everything downstream works in these
/// adapted coordinates.
struct AffineToricVariety {
    std::size_t lattice_rank = 0;
    Cone cone;                     // rays in adapted coordinates
    std::size_t torus_rank = 0;    // m-tilde
    Mat basis_change;              // input N coordinates -> adapted N coordinates
    DualConeData dual;             // dual of the pointed part, padded to full length
    std::vector<Vec> hilbert;      // Hilbert basis of S_{X_0}, padded to full length
    std::vector<Vec> torus_units;  // +-e_j for each torus coordinate

    std::size_t ray_count() const { return cone.rays.size(); }
    std::size_t pointed_rank() const { return lattice_rank - torus_rank; }
    /// <p_i, u>
    Int pairing(std::size_t ray_index, const Vec& u) const;
    /// u in S_X, i.e. all ray pairings nonnegative (torus coordinates free)
    bool in_weight_monoid(const Vec& u) const;
    /// Hilbert basis plus the +-torus unit generators; generates S_X.
    std::vector<Vec> weight_generators() const;
};

AffineToricVariety build_variety(std::vector<Vec> rays, std::size_t lattice_rank);

/// e in M with <p_i, e> = -1 and <p_j, e> >= 0 for j != i.
/// Ray indices are 0-based throughout the library.
struct DemazureRoot {
    std::size_t ray_index = 0;
    Vec e;
    bool operator==(const DemazureRoot&) const = default;
};

bool is_demazure_root(const AffineToricVariety& x, std::size_t ray_index, const Vec& e);

/// All roots at the given ray with every coordinate in [-height_bound,
/// height_bound], canonically sorted.  Complete within the box.
std::vector<DemazureRoot> enumerate_roots(const AffineToricVariety& x, std::size_t ray_index,
                                          long height_bound);

/// coeff * chi^exponent; the zero term is stored as coeff 0 with a zero
/// exponent vector.
struct GradedTerm {
    Rat coeff;
    Vec exponent;
    bool operator==(const GradedTerm&) const = default;
    bool is_zero() const { return coeff == 0; }
};

/// The homogeneous LND attached to a root: chi^u -> <p_i,u> chi^{u+e}.
GradedTerm lnd_apply(const AffineToricVariety& x, const DemazureRoot& root, const Vec& u);

/// exp(alpha * d_e) applied to chi^u, expanded in closed binomial form;
/// <p_i,u> + 1 terms before zero-coefficient pruning, all exponents in S_X.
std::vector<GradedTerm> ga_action(const AffineToricVariety& x, const DemazureRoot& root,
                                  const Rat& alpha, const Vec& u);

Rat rat_pow(const Rat& base, long exp);

}  // namespace toricmon

#endif
