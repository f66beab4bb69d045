#ifndef TORICMON_BIALG_HPP
#define TORICMON_BIALG_HPP

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "toricmon/linexpr.hpp"
#include "toricmon/toric.hpp"

namespace toricmon {

/// Element of K[X] (x) K[X]: finite rational combination of pairs of
/// weight-monoid exponents, kept in canonical form (sorted keys, no zero
/// coefficients).
class TensorElement {
public:
    struct KeyLess {
        bool operator()(const std::pair<Vec, Vec>& a, const std::pair<Vec, Vec>& b) const {
            if (a.first != b.first) return vec_less(a.first, b.first);
            return vec_less(a.second, b.second);
        }
    };
    using Terms = std::map<std::pair<Vec, Vec>, Rat, KeyLess>;

    void add(const Vec& a, const Vec& b, const Rat& coeff);
    const Terms& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    bool operator==(const TensorElement&) const = default;

    TensorElement swapped() const;
    std::string to_string() const;

private:
    Terms terms_;
};

TensorElement tensor_multiply(const TensorElement& t1, const TensorElement& t2);

class TripleTensorElement {
public:
    struct KeyLess {
        bool operator()(const std::tuple<Vec, Vec, Vec>& a, const std::tuple<Vec, Vec, Vec>& b) const;
    };
    using Terms = std::map<std::tuple<Vec, Vec, Vec>, Rat, KeyLess>;

    void add(const Vec& a, const Vec& b, const Vec& c, const Rat& coeff);
    const Terms& terms() const { return terms_; }
    bool operator==(const TripleTensorElement&) const = default;

private:
    Terms terms_;
};

enum class MonoidKind { toric, corank1, additive };

/// A commutative monoid structure on an affine toric variety:
/// rank n (toric), rank n-1 (a Demazure root), or rank 0 (A^n only).
struct MonoidStructure {
    MonoidKind kind = MonoidKind::toric;
    AffineToricVariety variety;
    std::optional<DemazureRoot> root;  // corank1 only

    std::string describe() const;
};

MonoidStructure make_toric(AffineToricVariety x);
MonoidStructure make_corank1(AffineToricVariety x, DemazureRoot root);
/// Requires X = A^n: no torus factor and the rays a lattice basis.
MonoidStructure make_additive(AffineToricVariety x);

/// The comultiplication of the structure applied to chi^u: group-like for
/// toric, the expanded binomial chi^u (x) chi^u (1 (x) chi^e + chi^e (x) 1)^{<p_i,u>}
/// for corank 1, and the multiplicative extension of u -> u (x) 1 + 1 (x) u
/// from the coordinate generators for the additive structure.
TensorElement comultiply(const MonoidStructure& s, const Vec& u);

bool coassociativity_check(const MonoidStructure& s, const Vec& u);
bool cocommutativity_check(const MonoidStructure& s, const Vec& u);

/// Counit evaluation at the variant's unit point.
Rat counit_value(const MonoidStructure& s, const Vec& u);
/// (eps (x) id) Phi = id = (id (x) eps) Phi over all weight generators.
bool counit_check(const MonoidStructure& s);

/// Tensor element with exponents affine in named parameters; used to
/// reproduce parameterized multiplication tables like e = (l,-1).
class SymTensorElement {
public:
    struct KeyLess {
        bool operator()(const std::pair<LinVec, LinVec>& a,
                        const std::pair<LinVec, LinVec>& b) const {
            if (!(a.first == b.first)) return linvec_less(a.first, b.first);
            return linvec_less(a.second, b.second);
        }
    };
    using Terms = std::map<std::pair<LinVec, LinVec>, Rat, KeyLess>;

    void add(const LinVec& a, const LinVec& b, const Rat& coeff);
    const Terms& terms() const { return terms_; }
    bool operator==(const SymTensorElement&) const = default;
    std::string to_string() const;

private:
    Terms terms_;
};

/// Corank-1 comultiplication of chi^u with the root carried symbolically.
/// Checks <p_i, e> = -1 exactly and that no other pairing has a negative
/// parameter coefficient; constant offsets may restrict the parameter
/// range (e.g. l3 >= 1) and are the caller's responsibility to surface.
SymTensorElement comultiply_symbolic(const AffineToricVariety& x, std::size_t ray_index,
                                     const LinVec& root, const Vec& u);

/// Parameter-range constraints <p_j, e> >= 0 implied by a symbolic root,
/// rendered as strings like "2l+1 >= 0"; trivially true ones are omitted.
std::vector<std::string> symbolic_root_constraints(const AffineToricVariety& x,
                                                   std::size_t ray_index, const LinVec& root);

}  // namespace toricmon

#endif
