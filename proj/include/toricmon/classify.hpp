#ifndef TORICMON_CLASSIFY_HPP
#define TORICMON_CLASSIFY_HPP

#include <optional>
#include <utility>
#include <vector>

#include "toricmon/bialg.hpp"
#include "toricmon/cones.hpp"
#include "toricmon/toric.hpp"

namespace toricmon {

/// The variety of a 2D normal form, rays {(0,1),(d,-k)}.
AffineToricVariety normal_form_variety(const SurfaceNormalForm& nf);

/// First `count` members of the two root series of a surface in normal
/// form: series 1 is (l,-1) at (0,1); series 2 starts at the solution of
/// d l1 - k l2 = -1 with minimal l2 >= 0 and increases by (k,d).
std::vector<DemazureRoot> root_series(const SurfaceNormalForm& nf, int series, std::size_t count);

/// Whether the ray swap tau preserves N, i.e. d | k^2 - 1.
bool tau_is_integral(const SurfaceNormalForm& nf);

/// The root paired with e under the dual of the ray swap; bijection
/// between the two series when tau is integral.
DemazureRoot tau_pair(const SurfaceNormalForm& nf, const DemazureRoot& e);

/// Whether the rank n-1 structures of two roots are isomorphic: some
/// lattice automorphism preserving the ray set must carry r2.e to r1.e
/// dually.  Torus-factor coordinates never obstruct (the pointed part of
/// a root is always primitive, so shears absorb them).
bool isomorphic_roots(const AffineToricVariety& x, const DemazureRoot& r1, const DemazureRoot& r2);

/// Classification of the monoid structures on a surface, rank by rank.
/// Rank-1 families are infinite series; `root_count` bounds how many
/// representatives get listed, not the classification itself.
struct ClassificationReport {
    AffineToricVariety variety;
    std::size_t root_count = 0;
    std::optional<SurfaceNormalForm> normal_form;  // two-ray case
    std::optional<bool> tau_integral;              // two-ray case
    bool has_toric = true;
    bool rank1_series_complete = false;  // one-ray case: one class covers everything
    std::vector<DemazureRoot> rank1_reps;  // adapted coordinates, pairwise non-isomorphic
    std::vector<std::pair<DemazureRoot, DemazureRoot>> iso_pairs;  // series pairing when tau integral
    bool has_additive = false;
};

ClassificationReport classify_surface(const std::vector<Vec>& rays, std::size_t root_count);

}  // namespace toricmon

#endif
