#include "toricmon/toric.hpp"

#include <algorithm>
#include <stdexcept>

namespace toricmon {

Int AffineToricVariety::pairing(std::size_t ray_index, const Vec& u) const {
    if (ray_index >= cone.rays.size()) throw std::out_of_range("ray index out of range");
    return dot(cone.rays[ray_index], u);
}

bool AffineToricVariety::in_weight_monoid(const Vec& u) const {
    if (u.size() != lattice_rank) return false;
    for (const Vec& p : cone.rays)
        if (dot(p, u) < 0) return false;
    return true;
}

std::vector<Vec> AffineToricVariety::weight_generators() const {
    std::vector<Vec> gens = hilbert;
    gens.insert(gens.end(), torus_units.begin(), torus_units.end());
    return gens;
}

AffineToricVariety build_variety(std::vector<Vec> rays, std::size_t lattice_rank) {
    Cone input_cone = make_cone(std::move(rays), lattice_rank);

    AffineToricVariety x;
    x.lattice_rank = lattice_rank;
    x.basis_change = Mat::identity(lattice_rank);

    std::size_t span = input_cone.rays.empty() ? 0 : rank(Mat::from_cols(input_cone.rays));
    x.torus_rank = lattice_rank - span;

    if (x.torus_rank == 0) {
        x.cone = input_cone;
    } else if (span == 0) {
        x.cone = Cone{lattice_rank, {}};
    } else {
        // adapt coordinates so the rays sit in the first `span` slots
        SmithDecomposition snf = smith_normal_form(Mat::from_cols(input_cone.rays));
        x.basis_change = inverse_unimodular(snf.u);
        std::vector<Vec> adapted;
        for (const Vec& r : input_cone.rays) adapted.push_back(x.basis_change.apply(r));
        std::sort(adapted.begin(), adapted.end(), vec_less);
        for (const Vec& r : adapted)
            for (std::size_t j = span; j < lattice_rank; ++j)
                if (r[j] != 0) throw std::logic_error("build_variety: adaptation failed");
        x.cone = Cone{lattice_rank, adapted};
    }

    if (span > 0) {
        std::vector<Vec> pointed;
        for (const Vec& r : x.cone.rays) pointed.push_back(Vec(r.begin(), r.begin() + span));
        DualConeData dual0 = dual_cone(make_cone(pointed, span));
        auto pad = [&](const Vec& v) {
            Vec w(lattice_rank, Int(0));
            std::copy(v.begin(), v.end(), w.begin());
            return w;
        };
        for (const Vec& g : dual0.generators) x.dual.generators.push_back(pad(g));
        x.dual.facet_normals = x.cone.rays;
        for (const Vec& h : hilbert_basis(dual0)) x.hilbert.push_back(pad(h));
    }

    for (std::size_t j = span; j < lattice_rank; ++j) {
        Vec e(lattice_rank, Int(0));
        e[j] = 1;
        x.torus_units.push_back(e);
        e[j] = -1;
        x.torus_units.push_back(e);
    }
    std::sort(x.torus_units.begin(), x.torus_units.end(), vec_less);
    return x;
}

bool is_demazure_root(const AffineToricVariety& x, std::size_t ray_index, const Vec& e) {
    if (ray_index >= x.ray_count()) throw std::out_of_range("ray index out of range");
    if (e.size() != x.lattice_rank) throw std::invalid_argument("root length does not match lattice rank");
    for (std::size_t j = 0; j < x.ray_count(); ++j) {
        Int v = x.pairing(j, e);
        if (j == ray_index ? v != -1 : v < 0) return false;
    }
    return true;
}

std::vector<DemazureRoot> enumerate_roots(const AffineToricVariety& x, std::size_t ray_index,
                                          long height_bound) {
    if (ray_index >= x.ray_count()) throw std::out_of_range("ray index out of range");
    if (height_bound < 0) throw std::invalid_argument("height bound must be nonnegative");
    std::size_t n = x.lattice_rank;
    std::vector<DemazureRoot> out;
    std::vector<long> ctr(n, -height_bound);
    Vec e(n);
    while (true) {
        for (std::size_t j = 0; j < n; ++j) e[j] = ctr[j];
        if (is_demazure_root(x, ray_index, e)) out.push_back({ray_index, e});
        std::size_t j = 0;
        while (j < n && ctr[j] == height_bound) {
            ctr[j] = -height_bound;
            ++j;
        }
        if (j == n) break;
        ++ctr[j];
    }
    std::sort(out.begin(), out.end(),
              [](const DemazureRoot& a, const DemazureRoot& b) { return vec_less(a.e, b.e); });
    return out;
}

namespace {

void require_root(const AffineToricVariety& x, const DemazureRoot& root) {
    if (!is_demazure_root(x, root.ray_index, root.e))
        throw std::invalid_argument("not a Demazure root of this variety: " + to_string(root.e));
}

void require_weight(const AffineToricVariety& x, const Vec& u) {
    if (!x.in_weight_monoid(u))
        throw std::domain_error("exponent " + to_string(u) + " is not in the weight monoid S_X");
}

}  // namespace

GradedTerm lnd_apply(const AffineToricVariety& x, const DemazureRoot& root, const Vec& u) {
    require_root(x, root);
    require_weight(x, u);
    Int m = x.pairing(root.ray_index, u);
    if (m == 0) return GradedTerm{Rat(0), Vec(x.lattice_rank, Int(0))};
    return GradedTerm{Rat(m), vec_add(u, root.e)};
}

Rat rat_pow(const Rat& base, long exp) {
    if (exp < 0) {
        if (base == 0) throw std::domain_error("zero to a negative power");
        Rat inv(base.get_den(), base.get_num());
        inv.canonicalize();
        return rat_pow(inv, -exp);
    }
    Rat r(1);
    Rat b = base;
    long e = exp;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

std::vector<GradedTerm> ga_action(const AffineToricVariety& x, const DemazureRoot& root,
                                  const Rat& alpha, const Vec& u) {
    require_root(x, root);
    require_weight(x, u);
    Int m = x.pairing(root.ray_index, u);
    if (!m.fits_slong_p()) throw std::runtime_error("ga_action: pairing overflow");
    long mm = m.get_si();
    std::vector<GradedTerm> out;
    Vec expnt = u;
    for (long j = 0; j <= mm; ++j) {
        Int binom;
        mpz_bin_ui(binom.get_mpz_t(), m.get_mpz_t(), static_cast<unsigned long>(j));
        Rat coeff = Rat(binom) * rat_pow(alpha, j);
        if (coeff != 0) {
            if (!x.in_weight_monoid(expnt)) throw std::logic_error("ga_action: exponent left S_X");
            out.push_back(GradedTerm{coeff, expnt});
        }
        expnt = vec_add(expnt, root.e);
    }
    std::sort(out.begin(), out.end(),
              [](const GradedTerm& a, const GradedTerm& b) { return vec_less(a.exponent, b.exponent); });
    return out;
}

}  // namespace toricmon
