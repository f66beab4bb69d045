#include "toricmon/intlin.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace toricmon {

Int dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Int l1_norm(const Vec& v) {
    Int s = 0;
    for (const auto& x : v) s += abs(x);
    return s;
}

Vec vec_add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vec_add: length mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vec_sub: length mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec vec_scale(const Int& c, const Vec& v) {
    Vec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
    return r;
}

Vec vec_neg(const Vec& v) { return vec_scale(-1, v); }

bool is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

bool vec_less(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    Int ga = l1_norm(a), gb = l1_norm(b);
    if (ga != gb) return ga < gb;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] > b[i];
    return false;
}

std::string to_string(const Vec& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v[i];
    }
    os << ")";
    return os.str();
}

Mat::Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Int(0)) {}

Mat Mat::identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r ? rows[0].size() : 0;
    Mat m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw std::invalid_argument("from_rows: ragged rows");
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

Mat Mat::from_cols(const std::vector<Vec>& cols) {
    std::size_t c = cols.size();
    std::size_t r = c ? cols[0].size() : 0;
    Mat m(r, c);
    for (std::size_t j = 0; j < c; ++j) {
        if (cols[j].size() != r) throw std::invalid_argument("from_cols: ragged columns");
        for (std::size_t i = 0; i < r; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
}

Vec Mat::row(std::size_t i) const {
    Vec v(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
    return v;
}

Vec Mat::col(std::size_t j) const {
    Vec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

Vec Mat::apply(const Vec& v) const {
    if (v.size() != cols_) throw std::invalid_argument("apply: length mismatch");
    Vec r(rows_, Int(0));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
    return r;
}

Mat Mat::operator*(const Mat& other) const {
    if (cols_ != other.rows_) throw std::invalid_argument("mul: shape mismatch");
    Mat r(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            if (at(i, k) == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j)
                r.at(i, j) += at(i, k) * other.at(k, j);
        }
    return r;
}

Mat Mat::transposed() const {
    Mat r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

void Mat::swap_rows(std::size_t i, std::size_t k) {
    if (i == k) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap(at(i, j), at(k, j));
}

void Mat::swap_cols(std::size_t j, std::size_t k) {
    if (j == k) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap(at(i, j), at(i, k));
}

void Mat::negate_row(std::size_t i) {
    for (std::size_t j = 0; j < cols_; ++j) at(i, j) = -at(i, j);
}

void Mat::negate_col(std::size_t j) {
    for (std::size_t i = 0; i < rows_; ++i) at(i, j) = -at(i, j);
}

void Mat::add_row(std::size_t i, std::size_t k, const Int& c) {
    for (std::size_t j = 0; j < cols_; ++j) at(i, j) += c * at(k, j);
}

void Mat::add_col(std::size_t j, std::size_t k, const Int& c) {
    for (std::size_t i = 0; i < rows_; ++i) at(i, j) += c * at(i, k);
}

std::string Mat::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i) os << "; ";
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) os << " ";
            os << at(i, j);
        }
    }
    os << "]";
    return os.str();
}

Int det(const Mat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det: not square");
    std::size_t n = m.rows();
    if (n == 0) return 1;
    if (n == 1) return m.at(0, 0);
    // cofactor expansion along the first row; matrices here stay tiny
    Int s = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (m.at(0, j) == 0) continue;
        Mat minor(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t cj = 0;
            for (std::size_t k = 0; k < n; ++k) {
                if (k == j) continue;
                minor.at(i - 1, cj++) = m.at(i, k);
            }
        }
        Int term = m.at(0, j) * det(minor);
        if (j % 2 == 0)
            s += term;
        else
            s -= term;
    }
    return s;
}

std::size_t rank(const Mat& m) {
    // rational Gaussian elimination
    std::size_t r = m.rows(), c = m.cols();
    std::vector<std::vector<Rat>> a(r, std::vector<Rat>(c));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) a[i][j] = Rat(m.at(i, j));
    std::size_t rk = 0;
    for (std::size_t j = 0; j < c && rk < r; ++j) {
        std::size_t piv = rk;
        while (piv < r && a[piv][j] == 0) ++piv;
        if (piv == r) continue;
        std::swap(a[rk], a[piv]);
        for (std::size_t i = rk + 1; i < r; ++i) {
            if (a[i][j] == 0) continue;
            Rat f = a[i][j] / a[rk][j];
            for (std::size_t k = j; k < c; ++k) a[i][k] -= f * a[rk][k];
        }
        ++rk;
    }
    return rk;
}

Mat adjugate(const Mat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("adjugate: not square");
    std::size_t n = m.rows();
    Mat adj(n, n);
    if (n == 0) return adj;
    if (n == 1) {
        adj.at(0, 0) = 1;
        return adj;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Mat minor(n - 1, n - 1);
            std::size_t ri = 0;
            for (std::size_t p = 0; p < n; ++p) {
                if (p == i) continue;
                std::size_t rj = 0;
                for (std::size_t q = 0; q < n; ++q) {
                    if (q == j) continue;
                    minor.at(ri, rj++) = m.at(p, q);
                }
                ++ri;
            }
            Int cof = det(minor);
            if ((i + j) % 2 == 1) cof = -cof;
            adj.at(j, i) = cof;  // transposed cofactor
        }
    return adj;
}

bool is_unimodular(const Mat& m) {
    if (m.rows() != m.cols()) return false;
    Int d = det(m);
    return d == 1 || d == -1;
}

Mat inverse_unimodular(const Mat& m) {
    Int d = det(m);
    if (d != 1 && d != -1) throw std::invalid_argument("inverse_unimodular: matrix is not unimodular");
    Mat adj = adjugate(m);
    if (d == -1)
        for (std::size_t i = 0; i < adj.rows(); ++i) adj.negate_row(i);
    return adj;
}

std::string AbelianGroupStructure::to_string() const {
    if (is_trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    if (free_rank == 1) {
        os << "Z";
        first = false;
    } else if (free_rank > 1) {
        os << "Z^" << free_rank;
        first = false;
    }
    for (const auto& d : torsion) {
        if (!first) os << " x ";
        os << "Z/" << d;
        first = false;
    }
    return os.str();
}

namespace {

// smallest nonzero |entry| of d[t.., t..]; returns false if the submatrix is zero
bool find_pivot(const Mat& d, std::size_t t, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    Int best;
    for (std::size_t i = t; i < d.rows(); ++i)
        for (std::size_t j = t; j < d.cols(); ++j) {
            if (d.at(i, j) == 0) continue;
            Int a = abs(d.at(i, j));
            if (!found || a < best) {
                found = true;
                best = a;
                pi = i;
                pj = j;
            }
        }
    return found;
}

}  // namespace

SmithDecomposition smith_normal_form(const Mat& a) {
    std::size_t r = a.rows(), c = a.cols();
    Mat d = a;
    Mat u = Mat::identity(r);
    Mat v = Mat::identity(c);
    // invariant: u * d * v == a; every op on d is mirrored by the inverse on u or v

    std::size_t t = 0;
    std::size_t nmin = std::min(r, c);
    while (t < nmin) {
        std::size_t pi, pj;
        if (!find_pivot(d, t, pi, pj)) break;
        d.swap_rows(t, pi);
        u.swap_cols(t, pi);
        d.swap_cols(t, pj);
        v.swap_rows(t, pj);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < r; ++i) {
                if (d.at(i, t) == 0) continue;
                Int q = d.at(i, t) / d.at(t, t);  // truncated, remainder |.| < |pivot|
                if (q != 0) {
                    d.add_row(i, t, -q);
                    u.add_col(t, i, q);
                }
                if (d.at(i, t) != 0) {
                    d.swap_rows(t, i);
                    u.swap_cols(t, i);
                    clean = false;
                }
            }
            if (!clean) continue;
            for (std::size_t j = t + 1; j < c; ++j) {
                if (d.at(t, j) == 0) continue;
                Int q = d.at(t, j) / d.at(t, t);
                if (q != 0) {
                    d.add_col(j, t, -q);
                    v.add_row(t, j, q);
                }
                if (d.at(t, j) != 0) {
                    d.swap_cols(t, j);
                    v.swap_rows(t, j);
                    clean = false;
                }
            }
            if (!clean) continue;
            // pivot must divide the rest of the submatrix
            for (std::size_t i = t + 1; i < r && clean; ++i)
                for (std::size_t j = t + 1; j < c && clean; ++j)
                    if (d.at(i, j) % d.at(t, t) != 0) {
                        d.add_row(t, i, 1);
                        u.add_col(i, t, -1);
                        clean = false;
                    }
        }
        if (d.at(t, t) < 0) {
            d.negate_row(t);
            u.negate_col(t);
        }
        ++t;
    }
    return {u, d, v};
}

AbelianGroupStructure cokernel_structure(const Mat& a) {
    SmithDecomposition snf = smith_normal_form(a);
    AbelianGroupStructure g;
    std::size_t nonzero = 0;
    std::size_t nmin = std::min(a.rows(), a.cols());
    for (std::size_t i = 0; i < nmin; ++i) {
        const Int& di = snf.d.at(i, i);
        if (di == 0) continue;
        ++nonzero;
        if (di > 1) g.torsion.push_back(di);
    }
    g.free_rank = a.rows() - nonzero;
    return g;
}

Vec primitive(const Vec& v) {
    if (is_zero(v)) throw std::invalid_argument("no primitive representative");
    Int g = 0;
    for (const auto& x : v) g = gcd(g, x);
    Vec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
    return r;
}

std::vector<Mat> lattice_automorphism_candidates(const std::vector<Vec>& src,
                                                 const std::vector<Vec>& dst) {
    std::vector<Mat> out;
    if (src.size() != dst.size()) return out;
    if (src.empty()) return out;
    std::size_t n = src[0].size();
    std::size_t m = src.size();

    Mat s = Mat::from_cols(src);
    if (rank(s) != n) throw std::invalid_argument("lattice_automorphism_candidates: rays must span Q^n");

    // greedily pick n linearly independent source rays
    std::vector<std::size_t> idx;
    for (std::size_t j = 0; j < m && idx.size() < n; ++j) {
        idx.push_back(j);
        std::vector<Vec> sel;
        for (auto k : idx) sel.push_back(src[k]);
        if (rank(Mat::from_cols(sel)) != idx.size()) idx.pop_back();
    }
    std::vector<Vec> bcols;
    for (auto k : idx) bcols.push_back(src[k]);
    Mat b = Mat::from_cols(bcols);
    Int db = det(b);
    Mat adjb = adjugate(b);

    std::vector<std::size_t> perm(m);
    for (std::size_t i = 0; i < m; ++i) perm[i] = i;
    do {
        std::vector<Vec> dsel;
        for (auto k : idx) dsel.push_back(dst[perm[k]]);
        Mat tnum = Mat::from_cols(dsel) * adjb;
        bool integral = true;
        Mat tmat(n, n);
        for (std::size_t i = 0; i < n && integral; ++i)
            for (std::size_t j = 0; j < n && integral; ++j) {
                if (tnum.at(i, j) % db != 0) {
                    integral = false;
                    break;
                }
                tmat.at(i, j) = tnum.at(i, j) / db;
            }
        if (!integral) continue;
        if (!is_unimodular(tmat)) continue;
        bool maps_all = true;
        for (std::size_t j = 0; j < m; ++j)
            if (tmat.apply(src[j]) != dst[perm[j]]) {
                maps_all = false;
                break;
            }
        if (!maps_all) continue;
        if (std::find(out.begin(), out.end(), tmat) == out.end()) out.push_back(tmat);
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::sort(out.begin(), out.end(), [](const Mat& x, const Mat& y) {
        for (std::size_t i = 0; i < x.rows(); ++i)
            for (std::size_t j = 0; j < x.cols(); ++j)
                if (x.at(i, j) != y.at(i, j)) return x.at(i, j) < y.at(i, j);
        return false;
    });
    return out;
}

}  // namespace toricmon
