#ifndef TORICMON_COXLIFT_HPP
#define TORICMON_COXLIFT_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "toricmon/bialg.hpp"
#include "toricmon/intlin.hpp"
#include "toricmon/linexpr.hpp"
#include "toricmon/toric.hpp"

namespace toricmon {

/// Cox data of X: the class group Cl(X) as cokernel of the bar map on the
/// pointed part, the Cl(X)-degree of every Cox coordinate, and the bar
/// matrix u -> (<p_1,u>, ..., <p_m,u>, u-tilde).
struct CoxData {
    std::size_t m = 0;           // ray count = pointed Cox coordinates
    std::size_t torus_rank = 0;  // remaining coordinates live in K^x
    AbelianGroupStructure class_group;
    /// degree of each Cox coordinate: torsion residues (one per torsion
    /// invariant, reduced mod d) followed by free coordinates
    std::vector<std::vector<Int>> degrees;
    Mat bar;  // (m + torus_rank) x n

    std::size_t total_coordinates() const { return m + torus_rank; }
};

CoxData cox_data(const AffineToricVariety& x);

/// Cl(X)-degree of a Cox monomial, torsion part reduced.
std::vector<Int> monomial_degree(const CoxData& cox, const Vec& cox_exponents);
bool degree_is_zero(const std::vector<Int>& deg);

/// bar(u) for u in S_X; all pointed coordinates nonnegative.
Vec bar_monomial(const AffineToricVariety& x, const Vec& u);
/// bar applied to a symbolic exponent (used for lifted roots e-bar).
LinVec bar_symbolic(const AffineToricVariety& x, const LinVec& u);

/// Point of the total coordinate space A^m x (K^x)^torus_rank.
using CoxPoint = std::vector<Rat>;

/// A monoid structure together with its lift to the total coordinate
/// space: for corank 1 the lifted root e-bar = bar(e).
struct LiftedMonoid {
    MonoidStructure base;
    std::optional<Vec> lifted_root;
};

LiftedMonoid make_lifted(MonoidStructure s);

/// prod pt_j^{exp_j} with the convention 0^0 = 1.
Rat eval_monomial(const Vec& exponents, const CoxPoint& pt);

/// The lifted multiplication on the total coordinate space: componentwise
/// product (toric), componentwise sum (additive), or the corank-1 formula
/// x_i y^{e-bar,i} + x^{e-bar,i} y_i in slot i and products elsewhere.
CoxPoint lifted_product(const LiftedMonoid& lm, const CoxPoint& x, const CoxPoint& y);

/// Unit point of the lifted structure: (1,...,1), the origin, or
/// (1,...,1,0_i,1,...,1).
CoxPoint lifted_unit(const LiftedMonoid& lm);

/// Exact coherence test of the base and lifted multiplications:
/// chi^{bar u}(x * y) must equal the comultiplication of chi^u evaluated
/// as sum c * chi^{bar a}(x) chi^{bar b}(y), for every weight generator u
/// and `samples` seeded rational point pairs.
bool coherence_check(const LiftedMonoid& lm, unsigned samples, std::uint64_t seed);

/// Every Hilbert-basis monomial must land in degree zero, i.e. in the
/// H_X-invariant subalgebra.
bool invariant_monomial_check(const AffineToricVariety& x);

/// Seeded sample point with all coordinates nonzero; deterministic.
CoxPoint sample_point(std::uint64_t& state, std::size_t len);

}  // namespace toricmon

#endif
