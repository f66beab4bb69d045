#include "toricmon/coxlift.hpp"

#include <algorithm>
#include <stdexcept>

namespace toricmon {

CoxData cox_data(const AffineToricVariety& x) {
    CoxData cox;
    cox.m = x.ray_count();
    cox.torus_rank = x.torus_rank;
    std::size_t n = x.lattice_rank;
    std::size_t s = x.pointed_rank();

    cox.bar = Mat(cox.m + cox.torus_rank, n);
    for (std::size_t i = 0; i < cox.m; ++i)
        for (std::size_t j = 0; j < n; ++j) cox.bar.at(i, j) = x.cone.rays[i][j];
    for (std::size_t j = 0; j < cox.torus_rank; ++j) cox.bar.at(cox.m + j, s + j) = 1;

    if (cox.m == 0) {
        cox.degrees.assign(cox.torus_rank, {});
        return cox;
    }

    // Cl(X) = Z^m / bar(M_0), the pointed part of sequence (0 -> M -> Z^m -> Cl -> 0)
    Mat a(cox.m, s);
    for (std::size_t i = 0; i < cox.m; ++i)
        for (std::size_t j = 0; j < s; ++j) a.at(i, j) = x.cone.rays[i][j];
    SmithDecomposition snf = smith_normal_form(a);
    cox.class_group = cokernel_structure(a);

    std::size_t nmin = std::min(cox.m, s);
    std::vector<std::size_t> torsion_rows, free_rows;
    for (std::size_t i = 0; i < nmin; ++i)
        if (snf.d.at(i, i) > 1) torsion_rows.push_back(i);
    for (std::size_t i = 0; i < cox.m; ++i)
        if (i >= nmin || snf.d.at(i, i) == 0) free_rows.push_back(i);

    // class of the i-th invariant divisor in the U^{-1} coordinates
    Mat uinv = inverse_unimodular(snf.u);
    std::vector<std::vector<Int>> deg(cox.m);
    for (std::size_t i = 0; i < cox.m; ++i) {
        Vec c = uinv.col(i);
        for (std::size_t t = 0; t < torsion_rows.size(); ++t) {
            const Int& d = snf.d.at(torsion_rows[t], torsion_rows[t]);
            deg[i].push_back(((c[torsion_rows[t]] % d) + d) % d);
        }
        for (auto f : free_rows) deg[i].push_back(c[f]);
    }
    // fix signs of the free generators: first nonzero weight positive
    for (std::size_t f = 0; f < free_rows.size(); ++f) {
        std::size_t slot = torsion_rows.size() + f;
        for (std::size_t i = 0; i < cox.m; ++i) {
            if (deg[i][slot] == 0) continue;
            if (deg[i][slot] < 0)
                for (std::size_t k = 0; k < cox.m; ++k) deg[k][slot] = -deg[k][slot];
            break;
        }
    }
    cox.degrees = std::move(deg);
    cox.degrees.resize(cox.m + cox.torus_rank,
                       std::vector<Int>(torsion_rows.size() + free_rows.size(), Int(0)));
    return cox;
}

std::vector<Int> monomial_degree(const CoxData& cox, const Vec& cox_exponents) {
    if (cox_exponents.size() != cox.total_coordinates())
        throw std::invalid_argument("monomial_degree: exponent length mismatch");
    std::size_t len = cox.degrees.empty() ? 0 : cox.degrees[0].size();
    std::vector<Int> deg(len, Int(0));
    for (std::size_t i = 0; i < cox_exponents.size(); ++i)
        for (std::size_t j = 0; j < len; ++j) deg[j] += cox_exponents[i] * cox.degrees[i][j];
    for (std::size_t t = 0; t < cox.class_group.torsion.size(); ++t) {
        const Int& d = cox.class_group.torsion[t];
        deg[t] = ((deg[t] % d) + d) % d;
    }
    return deg;
}

bool degree_is_zero(const std::vector<Int>& deg) {
    return std::all_of(deg.begin(), deg.end(), [](const Int& v) { return v == 0; });
}

Vec bar_monomial(const AffineToricVariety& x, const Vec& u) {
    if (!x.in_weight_monoid(u))
        throw std::domain_error("exponent " + to_string(u) + " is not in the weight monoid S_X");
    Vec bar;
    for (std::size_t i = 0; i < x.ray_count(); ++i) bar.push_back(x.pairing(i, u));
    for (std::size_t j = x.pointed_rank(); j < x.lattice_rank; ++j) bar.push_back(u[j]);
    return bar;
}

LinVec bar_symbolic(const AffineToricVariety& x, const LinVec& u) {
    if (u.size() != x.lattice_rank) throw std::invalid_argument("bar_symbolic: length mismatch");
    LinVec bar;
    for (std::size_t i = 0; i < x.ray_count(); ++i) bar.push_back(dot(x.cone.rays[i], u));
    for (std::size_t j = x.pointed_rank(); j < x.lattice_rank; ++j) bar.push_back(u[j]);
    return bar;
}

LiftedMonoid make_lifted(MonoidStructure s) {
    LiftedMonoid lm{std::move(s), std::nullopt};
    if (lm.base.kind == MonoidKind::corank1) {
        const AffineToricVariety& x = lm.base.variety;
        const DemazureRoot& root = *lm.base.root;
        Vec ebar;
        for (std::size_t i = 0; i < x.ray_count(); ++i) ebar.push_back(x.pairing(i, root.e));
        for (std::size_t j = x.pointed_rank(); j < x.lattice_rank; ++j) ebar.push_back(root.e[j]);
        // e-bar is a Demazure root of the total coordinate space
        for (std::size_t i = 0; i < x.ray_count(); ++i)
            if (i == root.ray_index ? ebar[i] != -1 : ebar[i] < 0)
                throw std::logic_error("lifted root is not a root of the coordinate space");
        lm.lifted_root = std::move(ebar);
    }
    return lm;
}

Rat eval_monomial(const Vec& exponents, const CoxPoint& pt) {
    if (exponents.size() != pt.size()) throw std::invalid_argument("eval_monomial: length mismatch");
    Rat r(1);
    for (std::size_t i = 0; i < pt.size(); ++i) {
        if (exponents[i] == 0) continue;  // 0^0 = 1
        if (!exponents[i].fits_slong_p()) throw std::runtime_error("eval_monomial: exponent overflow");
        long e = exponents[i].get_si();
        if (pt[i] == 0) {
            if (e < 0) throw std::domain_error("eval_monomial: zero coordinate with negative exponent");
            return Rat(0);
        }
        r *= rat_pow(pt[i], e);
    }
    return r;
}

namespace {

void require_point(const LiftedMonoid& lm, const CoxPoint& p) {
    const AffineToricVariety& x = lm.base.variety;
    if (p.size() != x.ray_count() + x.torus_rank)
        throw std::invalid_argument("Cox point has wrong number of coordinates");
    for (std::size_t j = x.ray_count(); j < p.size(); ++j)
        if (p[j] == 0) throw std::invalid_argument("torus coordinates of a Cox point must be nonzero");
}

}  // namespace

CoxPoint lifted_product(const LiftedMonoid& lm, const CoxPoint& x, const CoxPoint& y) {
    require_point(lm, x);
    require_point(lm, y);
    std::size_t len = x.size();
    CoxPoint r(len);
    switch (lm.base.kind) {
        case MonoidKind::toric:
            for (std::size_t j = 0; j < len; ++j) r[j] = x[j] * y[j];
            break;
        case MonoidKind::additive:
            for (std::size_t j = 0; j < len; ++j) r[j] = x[j] + y[j];
            break;
        case MonoidKind::corank1: {
            std::size_t i = lm.base.root->ray_index;
            Vec mono = *lm.lifted_root;
            mono[i] = 0;  // x^{e-bar,i} omits slot i
            for (std::size_t j = 0; j < len; ++j) r[j] = x[j] * y[j];
            r[i] = x[i] * eval_monomial(mono, y) + eval_monomial(mono, x) * y[i];
            break;
        }
    }
    return r;
}

CoxPoint lifted_unit(const LiftedMonoid& lm) {
    std::size_t len = lm.base.variety.ray_count() + lm.base.variety.torus_rank;
    switch (lm.base.kind) {
        case MonoidKind::toric:
            return CoxPoint(len, Rat(1));
        case MonoidKind::additive:
            return CoxPoint(len, Rat(0));
        case MonoidKind::corank1: {
            CoxPoint u(len, Rat(1));
            u[lm.base.root->ray_index] = 0;
            return u;
        }
    }
    return {};
}

// xorshift64*; the standard engines are avoided so that the sampled
// points are identical across platforms and library versions
CoxPoint sample_point(std::uint64_t& state, std::size_t len) {
    auto next = [&state]() {
        state ^= state >> 12;
        state ^= state << 25;
        state ^= state >> 27;
        return state * 0x2545F4914F6CDD1DULL;
    };
    CoxPoint p(len);
    for (std::size_t i = 0; i < len; ++i) {
        long num = static_cast<long>(next() % 9) - 4;  // -4..4
        if (num <= 0) --num;                           // skip zero: -5..-1, 1..4
        long den = static_cast<long>(next() % 4) + 1;  // 1..4
        Rat q(num, den);
        q.canonicalize();
        p[i] = q;
    }
    return p;
}

bool coherence_check(const LiftedMonoid& lm, unsigned samples, std::uint64_t seed) {
    const AffineToricVariety& x = lm.base.variety;
    std::vector<Vec> gens = x.weight_generators();
    std::uint64_t state = seed ? seed : 0x9E3779B97F4A7C15ULL;
    std::size_t len = x.ray_count() + x.torus_rank;
    for (unsigned s = 0; s < samples; ++s) {
        CoxPoint px = sample_point(state, len);
        CoxPoint py = sample_point(state, len);
        CoxPoint prod = lifted_product(lm, px, py);
        for (const Vec& u : gens) {
            Rat lhs = eval_monomial(bar_monomial(x, u), prod);
            Rat rhs(0);
            TensorElement phi = comultiply(lm.base, u);
            for (const auto& [key, c] : phi.terms())
                rhs += c * eval_monomial(bar_monomial(x, key.first), px) *
                       eval_monomial(bar_monomial(x, key.second), py);
            if (lhs != rhs) return false;
        }
    }
    return true;
}

bool invariant_monomial_check(const AffineToricVariety& x) {
    CoxData cox = cox_data(x);
    for (const Vec& u : x.weight_generators())
        if (!degree_is_zero(monomial_degree(cox, bar_monomial(x, u)))) return false;
    return true;
}

}  // namespace toricmon
