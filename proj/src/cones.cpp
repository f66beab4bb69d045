#include "toricmon/cones.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace toricmon {

namespace {

struct DualDescription {
    std::vector<Vec> rays;       // extreme rays modulo lineality
    std::vector<Vec> lineality;  // basis of the largest subspace contained in the cone
};

// saturated projection along l0: v * <p,l0> - l0 * <p,v>, made primitive
Vec project_off(const Vec& v, const Vec& l0, const Int& pv, const Int& pl0) {
    Vec w = vec_sub(vec_scale(pl0, v), vec_scale(pv, l0));
    return primitive(w);
}

// Incremental double description for {u : <p,u> >= 0 for all p in normals}.
// Lineality is carried explicitly; the ray list stays the exact set of
// extreme rays modulo lineality after every insertion (Fukuda-Prodon
// adjacency test on zero sets of the processed constraints).
DualDescription dual_description(const std::vector<Vec>& normals, std::size_t n) {
    DualDescription dd;
    for (std::size_t i = 0; i < n; ++i) {
        Vec e(n, Int(0));
        e[i] = 1;
        dd.lineality.push_back(e);
    }
    std::vector<Vec> processed;

    for (const Vec& p : normals) {
        auto lit = std::find_if(dd.lineality.begin(), dd.lineality.end(),
                                [&](const Vec& l) { return dot(p, l) != 0; });
        if (lit != dd.lineality.end()) {
            Vec l0 = *lit;
            if (dot(p, l0) < 0) l0 = vec_neg(l0);
            Int pl0 = dot(p, l0);
            std::vector<Vec> newlin;
            for (const Vec& l : dd.lineality) {
                if (&l == &*lit) continue;
                newlin.push_back(project_off(l, l0, dot(p, l), pl0));
            }
            std::vector<Vec> newrays;
            for (const Vec& r : dd.rays) {
                Int pr = dot(p, r);
                newrays.push_back(pr == 0 ? r : project_off(r, l0, pr, pl0));
            }
            newrays.push_back(l0);
            dd.lineality = std::move(newlin);
            dd.rays = std::move(newrays);
        } else {
            std::vector<std::size_t> pos, zer, neg;
            std::vector<Int> val(dd.rays.size());
            for (std::size_t i = 0; i < dd.rays.size(); ++i) {
                val[i] = dot(p, dd.rays[i]);
                if (val[i] > 0)
                    pos.push_back(i);
                else if (val[i] == 0)
                    zer.push_back(i);
                else
                    neg.push_back(i);
            }
            if (!neg.empty()) {
                // zero sets w.r.t. the constraints seen so far
                std::vector<std::set<std::size_t>> zset(dd.rays.size());
                for (std::size_t i = 0; i < dd.rays.size(); ++i)
                    for (std::size_t j = 0; j < processed.size(); ++j)
                        if (dot(processed[j], dd.rays[i]) == 0) zset[i].insert(j);

                std::vector<Vec> next;
                for (auto i : pos) next.push_back(dd.rays[i]);
                for (auto i : zer) next.push_back(dd.rays[i]);
                for (auto ip : pos)
                    for (auto in : neg) {
                        std::set<std::size_t> common;
                        std::set_intersection(zset[ip].begin(), zset[ip].end(), zset[in].begin(),
                                              zset[in].end(), std::inserter(common, common.begin()));
                        bool adjacent = true;
                        for (std::size_t w = 0; w < dd.rays.size(); ++w) {
                            if (w == ip || w == in) continue;
                            if (std::includes(zset[w].begin(), zset[w].end(), common.begin(),
                                              common.end())) {
                                adjacent = false;
                                break;
                            }
                        }
                        if (!adjacent) continue;
                        Vec comb = vec_sub(vec_scale(val[ip], dd.rays[in]),
                                           vec_scale(val[in], dd.rays[ip]));
                        comb = primitive(comb);
                        if (std::find(next.begin(), next.end(), comb) == next.end())
                            next.push_back(comb);
                    }
                dd.rays = std::move(next);
            }
        }
        processed.push_back(p);
    }
    std::sort(dd.rays.begin(), dd.rays.end(), vec_less);
    std::sort(dd.lineality.begin(), dd.lineality.end(), vec_less);
    return dd;
}

std::size_t dim_of(const DualDescription& dd) {
    std::vector<Vec> all = dd.rays;
    all.insert(all.end(), dd.lineality.begin(), dd.lineality.end());
    if (all.empty()) return 0;
    return rank(Mat::from_cols(all));
}

}  // namespace

Cone make_cone(std::vector<Vec> rays, std::size_t ambient_rank) {
    for (const Vec& r : rays) {
        if (r.size() != ambient_rank) throw std::invalid_argument("ray length does not match lattice rank");
        if (is_zero(r)) throw std::invalid_argument("zero vector is not a ray");
        if (primitive(r) != r) throw std::invalid_argument("ray " + to_string(r) + " is not primitive");
    }
    for (std::size_t i = 0; i < rays.size(); ++i)
        for (std::size_t j = i + 1; j < rays.size(); ++j)
            if (rays[i] == rays[j] || rays[i] == vec_neg(rays[j]))
                throw std::invalid_argument("proportional rays " + to_string(rays[i]) + ", " +
                                            to_string(rays[j]));

    DualDescription dual = dual_description(rays, ambient_rank);
    if (dim_of(dual) < ambient_rank) throw std::invalid_argument("cone contains a line");

    // recover sigma from its dual; the input must be exactly the extreme rays
    std::vector<Vec> normals = dual.rays;
    for (const Vec& l : dual.lineality) {
        normals.push_back(l);
        normals.push_back(vec_neg(l));
    }
    DualDescription primal = dual_description(normals, ambient_rank);
    std::vector<Vec> sorted = rays;
    std::sort(sorted.begin(), sorted.end(), vec_less);
    if (primal.rays != sorted || !primal.lineality.empty())
        throw std::invalid_argument("rays are not the extreme rays of the cone they span");

    return Cone{ambient_rank, sorted};
}

DualConeData dual_cone(const Cone& c) {
    DualDescription dd = dual_description(c.rays, c.ambient_rank);
    if (dim_of(dd) < c.ambient_rank) throw std::invalid_argument("cone contains a line");
    return DualConeData{dd.rays, dd.lineality, c.rays};
}

namespace {

long to_long(const Int& v, const char* what) {
    if (!v.fits_slong_p()) throw std::runtime_error(std::string("bound overflow in ") + what);
    return v.get_si();
}

bool in_cone(const Vec& x, const std::vector<Vec>& facet_normals) {
    for (const Vec& p : facet_normals)
        if (dot(p, x) < 0) return false;
    return true;
}

}  // namespace

std::vector<Vec> hilbert_basis(const DualConeData& dual) {
    if (!dual.lineality.empty()) throw std::invalid_argument("dual cone not pointed");
    if (dual.facet_normals.empty()) {
        if (!dual.generators.empty()) throw std::invalid_argument("dual cone not pointed");
        return {};
    }
    std::size_t n = dual.facet_normals[0].size();
    if (rank(Mat::from_cols(dual.facet_normals)) != n)
        throw std::invalid_argument("dual cone not pointed");

    // w = sum of facet normals is strictly positive on omega \ {0}
    Vec w(n, Int(0));
    for (const Vec& p : dual.facet_normals) w = vec_add(w, p);

    // every irreducible element lies in the zonotope of the extreme rays,
    // hence has w-degree at most D = sum of the extreme-ray degrees
    Int dbound = 0;
    std::vector<Int> raydeg;
    for (const Vec& u : dual.generators) {
        Int dg = dot(w, u);
        raydeg.push_back(dg);
        dbound += dg;
    }

    // bounding box of {x in omega : <w,x> <= D} from its vertices (D/deg_i) u_i
    std::vector<long> lo(n, 0), hi(n, 0);
    for (std::size_t i = 0; i < dual.generators.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Int num = dbound * dual.generators[i][j];
            Int fl, cl;
            mpz_fdiv_q(fl.get_mpz_t(), num.get_mpz_t(), raydeg[i].get_mpz_t());
            mpz_cdiv_q(cl.get_mpz_t(), num.get_mpz_t(), raydeg[i].get_mpz_t());
            lo[j] = std::min(lo[j], to_long(fl, "hilbert_basis"));
            hi[j] = std::max(hi[j], to_long(cl, "hilbert_basis"));
        }

    std::vector<Vec> candidates;
    Vec x(n);
    std::vector<long> ctr(n);
    for (std::size_t j = 0; j < n; ++j) ctr[j] = lo[j];
    while (true) {
        for (std::size_t j = 0; j < n; ++j) x[j] = ctr[j];
        if (!is_zero(x) && in_cone(x, dual.facet_normals) && dot(w, x) <= dbound)
            candidates.push_back(x);
        std::size_t j = 0;
        while (j < n && ctr[j] == hi[j]) {
            ctr[j] = lo[j];
            ++j;
        }
        if (j == n) break;
        ++ctr[j];
    }

    std::sort(candidates.begin(), candidates.end(), [&](const Vec& a, const Vec& b) {
        Int da = dot(w, a), db = dot(w, b);
        if (da != db) return da < db;
        return vec_less(a, b);
    });
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    // increasing degree: x is reducible iff x - h stays in the semigroup
    // for some already accepted h
    std::vector<Vec> basis;
    for (const Vec& cand : candidates) {
        bool reducible = false;
        for (const Vec& h : basis) {
            Vec diff = vec_sub(cand, h);
            if (!is_zero(diff) && in_cone(diff, dual.facet_normals)) {
                reducible = true;
                break;
            }
        }
        if (!reducible) basis.push_back(cand);
    }
    std::sort(basis.begin(), basis.end(), vec_less);
    return basis;
}

std::vector<BinomialRelation> binomial_relations(const std::vector<Vec>& gens,
                                                 unsigned degree_bound) {
    std::vector<BinomialRelation> out;
    if (gens.empty()) return out;
    std::size_t k = gens.size();
    long b = degree_bound;

    std::vector<long> c(k, -b);
    while (true) {
        // orientation: first nonzero coefficient positive
        bool nonzero = false, oriented = false;
        long posdeg = 0, negdeg = 0;
        for (std::size_t i = 0; i < k; ++i) {
            if (c[i] != 0 && !nonzero) {
                nonzero = true;
                oriented = c[i] > 0;
            }
            if (c[i] > 0) posdeg += c[i];
            if (c[i] < 0) negdeg -= c[i];
        }
        if (nonzero && oriented && posdeg <= b && negdeg <= b) {
            Vec sum(gens[0].size(), Int(0));
            for (std::size_t i = 0; i < k; ++i)
                if (c[i] != 0) sum = vec_add(sum, vec_scale(Int(c[i]), gens[i]));
            if (is_zero(sum)) {
                BinomialRelation rel;
                rel.lhs.resize(k);
                rel.rhs.resize(k);
                for (std::size_t i = 0; i < k; ++i) {
                    rel.lhs[i] = c[i] > 0 ? Int(c[i]) : Int(0);
                    rel.rhs[i] = c[i] < 0 ? Int(-c[i]) : Int(0);
                }
                out.push_back(rel);
            }
        }
        std::size_t j = 0;
        while (j < k && c[j] == b) {
            c[j] = -b;
            ++j;
        }
        if (j == k) break;
        ++c[j];
    }

    std::sort(out.begin(), out.end(), [](const BinomialRelation& x, const BinomialRelation& y) {
        if (x.lhs != y.lhs) return vec_less(x.lhs, y.lhs);
        return vec_less(x.rhs, y.rhs);
    });
    return out;
}

namespace {

// unimodular map sending `first` to (0,1) and `second` to (d,-k), k in [0,d)
SurfaceNormalForm normalize_ordered(const Vec& first, const Vec& second) {
    const Int& a = first[0];
    const Int& b = first[1];
    Int g, x, y;
    mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    // rows (b,-a) and (x,y): maps first to (0,1)
    Mat m(2, 2);
    m.at(0, 0) = b;
    m.at(0, 1) = -a;
    m.at(1, 0) = x;
    m.at(1, 1) = y;
    Vec img = m.apply(second);
    if (img[0] < 0) {
        m.negate_row(0);
        img[0] = -img[0];
    }
    const Int& d = img[0];
    Int k = ((-img[1]) % d + d) % d;
    Int shear = (-k - img[1]) / d;  // exact
    Mat sh = Mat::identity(2);
    sh.at(1, 0) = shear;
    return SurfaceNormalForm{d, k, sh * m};
}

}  // namespace

SurfaceNormalForm normal_form_2d(const Cone& c) {
    if (c.ambient_rank != 2 || c.rays.size() != 2)
        throw std::invalid_argument("normal_form_2d needs a two-dimensional cone with two rays");
    SurfaceNormalForm nf1 = normalize_ordered(c.rays[0], c.rays[1]);
    SurfaceNormalForm nf2 = normalize_ordered(c.rays[1], c.rays[0]);
    if (nf1.d != nf2.d) throw std::logic_error("normal_form_2d: inconsistent index");
    // swapping the rays replaces k by its inverse mod d; take the smaller one
    return nf2.k < nf1.k ? nf2 : nf1;
}

}  // namespace toricmon
