#ifndef TORICMON_INTLIN_HPP
#define TORICMON_INTLIN_HPP

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace toricmon {

using Int = mpz_class;
using Rat = mpq_class;

/// An element of the character lattice M or the one-parameter lattice N.
/// All arithmetic is arbitrary precision.
using Vec = std::vector<Int>;

Int dot(const Vec& a, const Vec& b);
Int l1_norm(const Vec& v);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Int& c, const Vec& v);
Vec vec_neg(const Vec& v);
bool is_zero(const Vec& v);

/// Canonical order used everywhere a set of lattice vectors is serialized:
/// ascending L1 grade, then lexicographically descending within a grade.
/// (The descending tie-break reproduces the customary generator listings,
/// e.g. (1,0,0), (0,1,0), (0,0,1) for the unit vectors.)
bool vec_less(const Vec& a, const Vec& b);

struct VecLess {
    bool operator()(const Vec& a, const Vec& b) const { return vec_less(a, b); }
};

std::string to_string(const Vec& v);

/// Dense integer matrix, row major.
class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols);

    static Mat identity(std::size_t n);
    static Mat from_rows(const std::vector<Vec>& rows);
    static Mat from_cols(const std::vector<Vec>& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Vec row(std::size_t i) const;
    Vec col(std::size_t j) const;

    /// Matrix times column vector.
    Vec apply(const Vec& v) const;

    Mat operator*(const Mat& other) const;
    bool operator==(const Mat& other) const = default;

    Mat transposed() const;

    void swap_rows(std::size_t i, std::size_t k);
    void swap_cols(std::size_t j, std::size_t k);
    void negate_row(std::size_t i);
    void negate_col(std::size_t j);
    /// row_i += c * row_k
    void add_row(std::size_t i, std::size_t k, const Int& c);
    /// col_j += c * col_k
    void add_col(std::size_t j, std::size_t k, const Int& c);

    std::string to_string() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> a_;
};

Int det(const Mat& m);
std::size_t rank(const Mat& m);
Mat adjugate(const Mat& m);
bool is_unimodular(const Mat& m);
/// Inverse of a matrix with det = +-1.
Mat inverse_unimodular(const Mat& m);

/// Isomorphism type of a finitely generated abelian group,
/// Z^free_rank x Z/d_1 x ... with d_1 | d_2 | ..., each d >= 2.
struct AbelianGroupStructure {
    std::size_t free_rank = 0;
    std::vector<Int> torsion;

    bool operator==(const AbelianGroupStructure&) const = default;
    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
    std::string to_string() const;
};

/// u * d * v == input, u and v unimodular, d diagonal with
/// d_1 | d_2 | ... and all diagonal entries >= 0.
struct SmithDecomposition {
    Mat u, d, v;
};

SmithDecomposition smith_normal_form(const Mat& a);

/// Structure of Z^rows / (column span of a).
AbelianGroupStructure cokernel_structure(const Mat& a);

/// v divided by the gcd of its entries; errors on the zero vector.
Vec primitive(const Vec& v);

/// All unimodular n x n matrices t with { t*p : p in src } = dst as sets.
/// Requires src to span Q^n; t is then determined by the ray permutation,
/// so the search is exhaustive over the m! permutations.  Fine for the
/// handful of rays an affine cone has, hopeless beyond that.
std::vector<Mat> lattice_automorphism_candidates(const std::vector<Vec>& src,
                                                 const std::vector<Vec>& dst);

}  // namespace toricmon

#endif
