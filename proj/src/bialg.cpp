#include "toricmon/bialg.hpp"

#include <sstream>
#include <stdexcept>

namespace toricmon {

void TensorElement::add(const Vec& a, const Vec& b, const Rat& coeff) {
    if (coeff == 0) return;
    auto key = std::make_pair(a, b);
    Rat& c = terms_[key];
    c += coeff;
    if (c == 0) terms_.erase(key);
}

TensorElement TensorElement::swapped() const {
    TensorElement r;
    for (const auto& [key, c] : terms_) r.add(key.second, key.first, c);
    return r;
}

std::string TensorElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : terms_) {
        if (!first) os << " + ";
        if (c != 1) os << c << "*";
        os << "chi^" << toricmon::to_string(key.first) << " (x) chi^" << toricmon::to_string(key.second);
        first = false;
    }
    return os.str();
}

TensorElement tensor_multiply(const TensorElement& t1, const TensorElement& t2) {
    TensorElement r;
    for (const auto& [k1, c1] : t1.terms())
        for (const auto& [k2, c2] : t2.terms())
            r.add(vec_add(k1.first, k2.first), vec_add(k1.second, k2.second), c1 * c2);
    return r;
}

bool TripleTensorElement::KeyLess::operator()(const std::tuple<Vec, Vec, Vec>& a,
                                              const std::tuple<Vec, Vec, Vec>& b) const {
    if (std::get<0>(a) != std::get<0>(b)) return vec_less(std::get<0>(a), std::get<0>(b));
    if (std::get<1>(a) != std::get<1>(b)) return vec_less(std::get<1>(a), std::get<1>(b));
    return vec_less(std::get<2>(a), std::get<2>(b));
}

void TripleTensorElement::add(const Vec& a, const Vec& b, const Vec& c, const Rat& coeff) {
    if (coeff == 0) return;
    auto key = std::make_tuple(a, b, c);
    Rat& v = terms_[key];
    v += coeff;
    if (v == 0) terms_.erase(key);
}

std::string MonoidStructure::describe() const {
    switch (kind) {
        case MonoidKind::toric:
            return "toric (rank n)";
        case MonoidKind::additive:
            return "additive (rank 0)";
        case MonoidKind::corank1:
            return "corank 1, ray " + std::to_string(root->ray_index + 1) + ", root " +
                   toricmon::to_string(root->e);
    }
    return "?";
}

MonoidStructure make_toric(AffineToricVariety x) {
    return MonoidStructure{MonoidKind::toric, std::move(x), std::nullopt};
}

MonoidStructure make_corank1(AffineToricVariety x, DemazureRoot root) {
    if (!is_demazure_root(x, root.ray_index, root.e))
        throw std::invalid_argument("not a Demazure root of this variety: " + to_string(root.e));
    return MonoidStructure{MonoidKind::corank1, std::move(x), std::move(root)};
}

MonoidStructure make_additive(AffineToricVariety x) {
    bool affine_space = x.torus_rank == 0 && x.ray_count() == x.lattice_rank &&
                        x.lattice_rank > 0 && is_unimodular(Mat::from_cols(x.cone.rays));
    if (!affine_space)
        throw std::invalid_argument("additive structure requires X = A^n (rays a lattice basis)");
    return MonoidStructure{MonoidKind::additive, std::move(x), std::nullopt};
}

namespace {

Int binom(const Int& n, long k) {
    Int r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(k));
    return r;
}

long small(const Int& v, const char* what) {
    if (!v.fits_slong_p()) throw std::runtime_error(std::string(what) + ": value too large");
    return v.get_si();
}

void require_weight(const AffineToricVariety& x, const Vec& u) {
    if (!x.in_weight_monoid(u))
        throw std::domain_error("exponent " + to_string(u) + " is not in the weight monoid S_X");
}

// dual basis of the ray basis: columns of (P^T)^{-1}, so that
// chi^u = prod x_i^{<p_i, u>}
std::vector<Vec> coordinate_weights(const AffineToricVariety& x) {
    Mat pt = Mat::from_cols(x.cone.rays).transposed();
    Mat inv = inverse_unimodular(pt);
    std::vector<Vec> cols;
    for (std::size_t j = 0; j < inv.cols(); ++j) cols.push_back(inv.col(j));
    return cols;
}

}  // namespace

TensorElement comultiply(const MonoidStructure& s, const Vec& u) {
    const AffineToricVariety& x = s.variety;
    require_weight(x, u);
    TensorElement r;
    switch (s.kind) {
        case MonoidKind::toric:
            r.add(u, u, Rat(1));
            break;
        case MonoidKind::corank1: {
            Int m = x.pairing(s.root->ray_index, u);
            long mm = small(m, "comultiply");
            for (long j = 0; j <= mm; ++j) {
                Vec a = vec_add(u, vec_scale(Int(mm - j), s.root->e));
                Vec b = vec_add(u, vec_scale(Int(j), s.root->e));
                r.add(a, b, Rat(binom(m, j)));
            }
            break;
        }
        case MonoidKind::additive: {
            std::vector<Vec> basis = coordinate_weights(x);
            std::size_t n = x.lattice_rank;
            std::vector<long> c(n), j(n, 0);
            for (std::size_t i = 0; i < n; ++i) c[i] = small(x.pairing(i, u), "comultiply");
            while (true) {
                Int coeff = 1;
                Vec a(n, Int(0)), b(n, Int(0));
                for (std::size_t i = 0; i < n; ++i) {
                    coeff *= binom(Int(c[i]), j[i]);
                    a = vec_add(a, vec_scale(Int(c[i] - j[i]), basis[i]));
                    b = vec_add(b, vec_scale(Int(j[i]), basis[i]));
                }
                r.add(a, b, Rat(coeff));
                std::size_t i = 0;
                while (i < n && j[i] == c[i]) {
                    j[i] = 0;
                    ++i;
                }
                if (i == n) break;
                ++j[i];
            }
            break;
        }
    }
    for (const auto& [key, c] : r.terms()) {
        (void)c;
        if (!x.in_weight_monoid(key.first) || !x.in_weight_monoid(key.second))
            throw std::logic_error("comultiply: exponent left S_X");
    }
    return r;
}

bool coassociativity_check(const MonoidStructure& s, const Vec& u) {
    TensorElement phi = comultiply(s, u);
    TripleTensorElement left, right;
    for (const auto& [key, c] : phi.terms()) {
        TensorElement phi_a = comultiply(s, key.first);
        for (const auto& [k2, c2] : phi_a.terms()) left.add(k2.first, k2.second, key.second, c * c2);
        TensorElement phi_b = comultiply(s, key.second);
        for (const auto& [k2, c2] : phi_b.terms()) right.add(key.first, k2.first, k2.second, c * c2);
    }
    return left == right;
}

bool cocommutativity_check(const MonoidStructure& s, const Vec& u) {
    TensorElement phi = comultiply(s, u);
    return phi == phi.swapped();
}

Rat counit_value(const MonoidStructure& s, const Vec& u) {
    require_weight(s.variety, u);
    switch (s.kind) {
        case MonoidKind::toric:
            return Rat(1);
        case MonoidKind::corank1:
            return s.variety.pairing(s.root->ray_index, u) == 0 ? Rat(1) : Rat(0);
        case MonoidKind::additive:
            return is_zero(u) ? Rat(1) : Rat(0);
    }
    return Rat(0);
}

bool counit_check(const MonoidStructure& s) {
    for (const Vec& u : s.variety.weight_generators()) {
        TensorElement phi = comultiply(s, u);
        std::map<Vec, Rat, VecLess> left, right;
        for (const auto& [key, c] : phi.terms()) {
            Rat cl = c * counit_value(s, key.first);
            if (cl != 0) left[key.second] += cl;
            Rat cr = c * counit_value(s, key.second);
            if (cr != 0) right[key.first] += cr;
        }
        auto is_chi_u = [&](std::map<Vec, Rat, VecLess>& side) {
            for (auto it = side.begin(); it != side.end();)
                it = it->second == 0 ? side.erase(it) : std::next(it);
            return side.size() == 1 && side.begin()->first == u && side.begin()->second == 1;
        };
        if (!is_chi_u(left) || !is_chi_u(right)) return false;
    }
    return true;
}

void SymTensorElement::add(const LinVec& a, const LinVec& b, const Rat& coeff) {
    if (coeff == 0) return;
    auto key = std::make_pair(a, b);
    Rat& c = terms_[key];
    c += coeff;
    if (c == 0) terms_.erase(key);
}

std::string SymTensorElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : terms_) {
        if (!first) os << " + ";
        if (c != 1) os << c << "*";
        os << "chi^" << toricmon::to_string(key.first) << " (x) chi^" << toricmon::to_string(key.second);
        first = false;
    }
    return os.str();
}

namespace {

LinVec lift(const Vec& v) {
    LinVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = LinExpr(v[i]);
    return r;
}

void require_symbolic_root(const AffineToricVariety& x, std::size_t ray_index, const LinVec& root) {
    if (ray_index >= x.ray_count()) throw std::out_of_range("ray index out of range");
    if (root.size() != x.lattice_rank)
        throw std::invalid_argument("root length does not match lattice rank");
    for (std::size_t j = 0; j < x.ray_count(); ++j) {
        LinExpr v = dot(x.cone.rays[j], root);
        if (j == ray_index) {
            if (!(v == LinExpr(-1)))
                throw std::invalid_argument("symbolic root must pair to -1 with its ray, got " +
                                            v.to_string());
        } else {
            for (const auto& [sym, coeff] : v.terms())
                if (coeff < 0)
                    throw std::invalid_argument("pairing " + v.to_string() + " with ray " +
                                                to_string(x.cone.rays[j]) +
                                                " decreases in parameter " + sym);
            if (v.is_constant() && v.constant() < 0)
                throw std::invalid_argument("not a Demazure root: pairing " + v.to_string() +
                                            " with ray " + to_string(x.cone.rays[j]));
        }
    }
}

}  // namespace

std::vector<std::string> symbolic_root_constraints(const AffineToricVariety& x,
                                                   std::size_t ray_index, const LinVec& root) {
    require_symbolic_root(x, ray_index, root);
    std::vector<std::string> out;
    for (std::size_t j = 0; j < x.ray_count(); ++j) {
        if (j == ray_index) continue;
        LinExpr v = dot(x.cone.rays[j], root);
        // parameters range over Z>=0, so only a negative offset restricts them
        if (!v.is_constant() && v.constant() < 0) out.push_back(v.to_string() + " >= 0");
    }
    return out;
}

SymTensorElement comultiply_symbolic(const AffineToricVariety& x, std::size_t ray_index,
                                     const LinVec& root, const Vec& u) {
    require_symbolic_root(x, ray_index, root);
    if (!x.in_weight_monoid(u))
        throw std::domain_error("exponent " + to_string(u) + " is not in the weight monoid S_X");
    Int m = x.pairing(ray_index, u);
    long mm = small(m, "comultiply_symbolic");
    SymTensorElement r;
    LinVec lu = lift(u);
    for (long j = 0; j <= mm; ++j) {
        LinVec a = linvec_add(lu, linvec_scale(Int(mm - j), root));
        LinVec b = linvec_add(lu, linvec_scale(Int(j), root));
        r.add(a, b, Rat(binom(m, j)));
    }
    return r;
}

}  // namespace toricmon
