#include "toricmon/classify.hpp"

#include <algorithm>
#include <stdexcept>

namespace toricmon {

AffineToricVariety normal_form_variety(const SurfaceNormalForm& nf) {
    Vec p1{Int(0), Int(1)};
    Vec p2{nf.d, -nf.k};
    return build_variety({p1, p2}, 2);
}

namespace {

std::size_t ray_index_of(const AffineToricVariety& x, const Vec& ray) {
    auto it = std::find(x.cone.rays.begin(), x.cone.rays.end(), ray);
    if (it == x.cone.rays.end()) throw std::logic_error("ray not found");
    return static_cast<std::size_t>(it - x.cone.rays.begin());
}

}  // namespace

std::vector<DemazureRoot> root_series(const SurfaceNormalForm& nf, int series, std::size_t count) {
    if (series != 1 && series != 2) throw std::invalid_argument("series must be 1 or 2");
    AffineToricVariety x = normal_form_variety(nf);
    std::size_t i1 = ray_index_of(x, Vec{Int(0), Int(1)});
    std::size_t i2 = ray_index_of(x, Vec{nf.d, -nf.k});

    std::vector<DemazureRoot> out;
    if (series == 1) {
        for (std::size_t l = 0; l < count; ++l)
            out.push_back({i1, Vec{Int(l), Int(-1)}});
    } else {
        // base solution of d l1 - k l2 = -1 with minimal l2 = k^{-1} mod d
        Int l2;
        if (nf.d == 1) {
            l2 = 0;
        } else if (mpz_invert(l2.get_mpz_t(), nf.k.get_mpz_t(), nf.d.get_mpz_t()) == 0) {
            throw std::logic_error("k has no inverse mod d");  // gcd(d,k)=1 rules this out
        }
        Int l1 = (nf.k * l2 - 1) / nf.d;
        Vec e{l1, l2};
        Vec step{nf.k, nf.d};
        for (std::size_t l = 0; l < count; ++l) {
            out.push_back({i2, e});
            e = vec_add(e, step);
        }
    }
    for (const DemazureRoot& r : out)
        if (!is_demazure_root(x, r.ray_index, r.e))
            throw std::logic_error("root series produced a non-root");
    return out;
}

bool tau_is_integral(const SurfaceNormalForm& nf) { return (nf.k * nf.k - 1) % nf.d == 0; }

DemazureRoot tau_pair(const SurfaceNormalForm& nf, const DemazureRoot& e) {
    if (!tau_is_integral(nf)) throw std::invalid_argument("rays not swappable over N");
    AffineToricVariety x = normal_form_variety(nf);
    if (!is_demazure_root(x, e.ray_index, e.e))
        throw std::invalid_argument("not a Demazure root of the normal-form cone");
    Mat tau(2, 2);
    tau.at(0, 0) = nf.k;
    tau.at(0, 1) = nf.d;
    tau.at(1, 0) = (1 - nf.k * nf.k) / nf.d;
    tau.at(1, 1) = -nf.k;
    Vec image = tau.transposed().apply(e.e);
    std::size_t i1 = ray_index_of(x, Vec{Int(0), Int(1)});
    std::size_t i2 = ray_index_of(x, Vec{nf.d, -nf.k});
    std::size_t other = e.ray_index == i1 ? i2 : i1;
    DemazureRoot paired{other, image};
    if (!is_demazure_root(x, paired.ray_index, paired.e))
        throw std::logic_error("tau image is not a root");
    return paired;
}

bool isomorphic_roots(const AffineToricVariety& x, const DemazureRoot& r1, const DemazureRoot& r2) {
    if (!is_demazure_root(x, r1.ray_index, r1.e) || !is_demazure_root(x, r2.ray_index, r2.e))
        throw std::invalid_argument("isomorphic_roots needs valid Demazure roots");
    std::size_t s = x.pointed_rank();
    std::vector<Vec> pointed;
    for (const Vec& r : x.cone.rays) pointed.push_back(Vec(r.begin(), r.begin() + s));
    Vec e1(r1.e.begin(), r1.e.begin() + s);
    Vec e2(r2.e.begin(), r2.e.begin() + s);
    // torus components are absorbed by shear automorphisms: the pointed
    // part pairs to -1 with a primitive ray, so its gcd is 1
    for (const Mat& t : lattice_automorphism_candidates(pointed, pointed))
        if (t.transposed().apply(e2) == e1) return true;
    return false;
}

ClassificationReport classify_surface(const std::vector<Vec>& rays, std::size_t root_count) {
    for (const Vec& r : rays)
        if (r.size() != 2) throw std::invalid_argument("classify_surface expects a rank-2 lattice");

    ClassificationReport rep;
    rep.variety = build_variety(rays, 2);
    rep.root_count = root_count;

    const AffineToricVariety& x = rep.variety;
    switch (x.ray_count()) {
        case 0:
            break;  // torus: only the toric structure
        case 1: {
            // X = A^1 x K^x; every rank-1 structure is isomorphic to the
            // one with root pairing -1 and trivial torus part
            Vec e(2, Int(0));
            e[0] = -x.cone.rays[0][0];  // adapted ray is (+-1, 0)
            rep.rank1_reps.push_back({0, e});
            rep.rank1_series_complete = true;
            break;
        }
        case 2: {
            SurfaceNormalForm nf = normal_form_2d(x.cone);
            rep.tau_integral = tau_is_integral(nf);
            rep.has_additive = nf.d == 1 && nf.k == 0;

            // pull roots back from normal-form coordinates: e -> W^T e
            Mat wt = nf.basis_change.transposed();
            auto pull = [&](const DemazureRoot& r) {
                Vec e = wt.apply(r.e);
                AffineToricVariety nfx = normal_form_variety(nf);
                Vec ray_nf = nfx.cone.rays[r.ray_index];
                // the input ray mapping onto this normal-form ray
                for (std::size_t j = 0; j < x.ray_count(); ++j)
                    if (nf.basis_change.apply(x.cone.rays[j]) == ray_nf) return DemazureRoot{j, e};
                throw std::logic_error("normal form basis change does not match rays");
            };

            for (const DemazureRoot& r : root_series(nf, 1, root_count))
                rep.rank1_reps.push_back(pull(r));
            if (*rep.tau_integral) {
                std::vector<DemazureRoot> s2 = root_series(nf, 2, root_count);
                for (std::size_t l = 0; l < root_count; ++l)
                    rep.iso_pairs.emplace_back(rep.rank1_reps[l], pull(s2[l]));
            } else {
                for (const DemazureRoot& r : root_series(nf, 2, root_count))
                    rep.rank1_reps.push_back(pull(r));
            }
            rep.normal_form = std::move(nf);
            break;
        }
        default:
            throw std::logic_error("a strongly convex 2D cone has at most two rays");
    }
    return rep;
}

}  // namespace toricmon
