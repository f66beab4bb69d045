#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle.hpp"
#include "toricmon/cones.hpp"

using namespace toricmon;

namespace {

Vec v2(long a, long b) { return Vec{Int(a), Int(b)}; }
Vec v3(long a, long b, long c) { return Vec{Int(a), Int(b), Int(c)}; }

const std::vector<Vec> quad_rays{v2(0, 1), v2(2, -1)};
const std::vector<Vec> threefold_rays{v3(1, 0, 0), v3(0, 1, 0), v3(1, 0, 1), v3(0, 1, 1)};

}  // namespace

TEST_CASE("dual cone of the quadratic cone") {
    DualConeData dual = dual_cone(make_cone(quad_rays, 2));
    CHECK(dual.generators == std::vector<Vec>{v2(1, 0), v2(1, 2)});
    CHECK(dual.lineality.empty());
}

TEST_CASE("the orthant is self dual") {
    DualConeData dual = dual_cone(make_cone({v2(1, 0), v2(0, 1)}, 2));
    CHECK(dual.generators == std::vector<Vec>{v2(1, 0), v2(0, 1)});
}

TEST_CASE("dual cone of the 3-fold") {
    DualConeData dual = dual_cone(make_cone(threefold_rays, 3));
    std::vector<Vec> expected{v3(1, 0, 0), v3(0, 1, 0), v3(0, 0, 1), v3(1, 1, -1)};
    std::sort(expected.begin(), expected.end(), vec_less);
    CHECK(dual.generators == expected);
    for (const Vec& g : dual.generators)
        for (const Vec& p : dual.facet_normals) CHECK(dot(p, g) >= 0);
}

TEST_CASE("a cone with a line is rejected") {
    CHECK_THROWS_WITH(make_cone({v2(1, 0), v2(-1, 0)}, 2), "proportional rays (1,0), (-1,0)");
    CHECK_THROWS_AS(make_cone({v2(1, 0), v2(-1, 1), v2(0, -1)}, 2), std::invalid_argument);
}

TEST_CASE("make_cone validates its input") {
    CHECK_THROWS_AS(make_cone({v2(2, 0)}, 2), std::invalid_argument);          // not primitive
    CHECK_THROWS_AS(make_cone({v2(0, 0)}, 2), std::invalid_argument);          // zero
    CHECK_THROWS_AS(make_cone({v2(1, 0), v2(1, 0)}, 2), std::invalid_argument);
    // (1,1) is inside the orthant, not an extreme ray
    CHECK_THROWS_AS(make_cone({v2(1, 0), v2(0, 1), v2(1, 1)}, 2), std::invalid_argument);
}

TEST_CASE("dualizing twice returns the cone") {
    oracle::Rng rng(0xC0DE);
    int done = 0;
    while (done < 30) {
        Vec a = v2(rng.range(-6, 6), rng.range(-6, 6));
        Vec b = v2(rng.range(-6, 6), rng.range(-6, 6));
        Cone c;
        try {
            c = make_cone({is_zero(a) ? v2(1, 0) : primitive(a), is_zero(b) ? v2(0, 1) : primitive(b)}, 2);
        } catch (const std::invalid_argument&) {
            continue;
        }
        DualConeData dual = dual_cone(c);
        Cone dc = make_cone(dual.generators, 2);
        CHECK(dual_cone(dc).generators == c.rays);
        ++done;
    }
}

TEST_CASE("dualizing twice returns the 3-fold") {
    Cone c = make_cone(threefold_rays, 3);
    DualConeData dual = dual_cone(c);
    Cone dc = make_cone(dual.generators, 3);
    CHECK(dual_cone(dc).generators == c.rays);
}

TEST_CASE("hilbert basis of the quadratic cone") {
    DualConeData dual = dual_cone(make_cone(quad_rays, 2));
    CHECK(hilbert_basis(dual) == std::vector<Vec>{v2(1, 0), v2(1, 1), v2(1, 2)});
}

TEST_CASE("hilbert basis of the 3-fold") {
    DualConeData dual = dual_cone(make_cone(threefold_rays, 3));
    std::vector<Vec> expected{v3(1, 0, 0), v3(0, 1, 0), v3(0, 0, 1), v3(1, 1, -1)};
    std::sort(expected.begin(), expected.end(), vec_less);
    CHECK(hilbert_basis(dual) == expected);
}

TEST_CASE("hilbert basis of the first quadrant") {
    DualConeData dual = dual_cone(make_cone({v2(1, 0), v2(0, 1)}, 2));
    CHECK(hilbert_basis(dual) == std::vector<Vec>{v2(1, 0), v2(0, 1)});
}

TEST_CASE("hilbert basis agrees with the brute-force oracle on random cones") {
    oracle::Rng rng(0x517B);
    int done = 0;
    while (done < 12) {
        Vec a = v2(rng.range(-6, 6), rng.range(-6, 6));
        Vec b = v2(rng.range(-6, 6), rng.range(-6, 6));
        Cone c;
        try {
            c = make_cone({is_zero(a) ? v2(1, 1) : primitive(a), is_zero(b) ? v2(0, 1) : primitive(b)}, 2);
        } catch (const std::invalid_argument&) {
            continue;
        }
        DualConeData dual = dual_cone(c);
        CHECK(hilbert_basis(dual) == oracle::bruteforce_hilbert(dual));
        ++done;
    }
}

TEST_CASE("hilbert basis is irreducible and generates") {
    for (const auto& rays : {quad_rays, threefold_rays}) {
        std::size_t n = rays[0].size();
        DualConeData dual = dual_cone(make_cone(rays, n));
        std::vector<Vec> basis = hilbert_basis(dual);

        // no element is a sum of two nonzero semigroup elements; any
        // decomposition would have an irreducible summand, so testing
        // against the oracle's irreducibles is exhaustive
        for (const Vec& h : basis)
            for (const Vec& y : oracle::bruteforce_hilbert(dual)) {
                Vec z = vec_sub(h, y);
                bool z_in_cone = !is_zero(z);
                for (const Vec& p : dual.facet_normals)
                    if (dot(p, z) < 0) z_in_cone = false;
                CHECK_FALSE(z_in_cone);
            }

        // every lattice point of the cone with |coords| <= 6 is reachable
        std::vector<long> ctr(n, -6);
        Vec x(n);
        while (true) {
            for (std::size_t j = 0; j < n; ++j) x[j] = ctr[j];
            bool inside = true;
            for (const Vec& p : dual.facet_normals)
                if (dot(p, x) < 0) inside = false;
            if (inside) CHECK(oracle::representable(basis, dual.facet_normals, x));
            std::size_t j = 0;
            while (j < n && ctr[j] == 6) {
                ctr[j] = -6;
                ++j;
            }
            if (j == n) break;
            ++ctr[j];
        }
    }
}

TEST_CASE("random 3D cones validate and round-trip through the dual") {
    oracle::Rng rng(0x3D);
    int done = 0, attempts = 0;
    while (done < 20 && attempts < 4000) {
        ++attempts;
        std::vector<Vec> rays;
        long m = rng.range(3, 4);
        for (long i = 0; i < m; ++i) {
            Vec v = v3(rng.range(-3, 3), rng.range(-3, 3), rng.range(-3, 3));
            if (is_zero(v)) v = v3(1, 0, 0);
            rays.push_back(primitive(v));
        }
        Cone c;
        try {
            c = make_cone(rays, 3);  // internally checks dual-of-dual == rays
        } catch (const std::invalid_argument&) {
            continue;
        }
        DualConeData dual = dual_cone(c);
        for (const Vec& g : dual.generators)
            for (const Vec& p : dual.facet_normals) CHECK(dot(p, g) >= 0);
        CHECK(dual.lineality.empty());
        ++done;
    }
    CHECK(done == 20);
}

TEST_CASE("dual rays agree with the tight-subset enumeration") {
    // fixed cases first
    for (const auto& rays : {quad_rays, threefold_rays}) {
        std::size_t n = rays[0].size();
        DualConeData dual = dual_cone(make_cone(rays, n));
        CHECK(dual.generators == oracle::dual_rays_by_subsets(rays, n));
    }
    oracle::Rng rng(0xDD17);
    int done = 0, attempts = 0;
    while (done < 25 && attempts < 6000) {
        ++attempts;
        std::vector<Vec> rays;
        long m = rng.range(3, 5);
        bool bad = false;
        for (long i = 0; i < m; ++i) {
            Vec v = v3(rng.range(-3, 3), rng.range(-3, 3), rng.range(-3, 3));
            if (is_zero(v)) bad = true;
            else rays.push_back(primitive(v));
        }
        if (bad) continue;
        for (std::size_t i = 0; i < rays.size() && !bad; ++i)
            for (std::size_t j = i + 1; j < rays.size() && !bad; ++j)
                if (rays[i] == rays[j] || rays[i] == vec_neg(rays[j])) bad = true;
        if (bad) continue;
        if (rank(Mat::from_cols(rays)) != 3) continue;  // the subset oracle needs a pointed dual
        Cone c{3, rays};  // dual_cone only needs pointedness, redundant rays welcome
        DualConeData dual;
        try {
            dual = dual_cone(c);
        } catch (const std::invalid_argument&) {
            continue;
        }
        CHECK(dual.generators == oracle::dual_rays_by_subsets(rays, 3));
        ++done;
    }
    CHECK(done == 25);
}

TEST_CASE("hilbert basis generates on random 2D cones") {
    oracle::Rng rng(0x9E17);
    int done = 0;
    while (done < 8) {
        Vec a = v2(rng.range(-5, 5), rng.range(-5, 5));
        Vec b = v2(rng.range(-5, 5), rng.range(-5, 5));
        Cone c;
        try {
            c = make_cone({is_zero(a) ? v2(1, 3) : primitive(a), is_zero(b) ? v2(0, 1) : primitive(b)}, 2);
        } catch (const std::invalid_argument&) {
            continue;
        }
        DualConeData dual = dual_cone(c);
        std::vector<Vec> basis = hilbert_basis(dual);
        for (long x0 = -6; x0 <= 6; ++x0)
            for (long x1 = -6; x1 <= 6; ++x1) {
                Vec x = v2(x0, x1);
                bool inside = true;
                for (const Vec& p : dual.facet_normals)
                    if (dot(p, x) < 0) inside = false;
                if (inside) CHECK(oracle::representable(basis, dual.facet_normals, x));
            }
        ++done;
    }
}

TEST_CASE("binomial relations reproduce ac = b^2") {
    std::vector<Vec> gens{v2(1, 0), v2(1, 1), v2(1, 2)};
    std::vector<BinomialRelation> rels = binomial_relations(gens, 2);
    BinomialRelation ac_b2{{Int(1), Int(0), Int(1)}, {Int(0), Int(2), Int(0)}};
    CHECK(std::find(rels.begin(), rels.end(), ac_b2) != rels.end());
}

TEST_CASE("binomial relations reproduce ab = cd") {
    std::vector<Vec> gens{v3(1, 0, 0), v3(0, 1, 0), v3(0, 0, 1), v3(1, 1, -1)};
    std::vector<BinomialRelation> rels = binomial_relations(gens, 2);
    BinomialRelation ab_cd{{Int(1), Int(1), Int(0), Int(0)}, {Int(0), Int(0), Int(1), Int(1)}};
    CHECK(std::find(rels.begin(), rels.end(), ab_cd) != rels.end());
}

TEST_CASE("a polynomial ring has no binomial relations") {
    CHECK(binomial_relations({v2(1, 0), v2(0, 1)}, 2).empty());
}

TEST_CASE("normal form of the quadratic cone is (2,1)") {
    SurfaceNormalForm nf = normal_form_2d(make_cone(quad_rays, 2));
    CHECK(nf.d == 2);
    CHECK(nf.k == 1);
    CHECK(is_unimodular(nf.basis_change));
    std::vector<Vec> images{nf.basis_change.apply(quad_rays[0]), nf.basis_change.apply(quad_rays[1])};
    std::sort(images.begin(), images.end(), vec_less);
    std::vector<Vec> target{v2(0, 1), v2(2, -1)};
    std::sort(target.begin(), target.end(), vec_less);
    CHECK(images == target);
}

TEST_CASE("normal form of the smooth cone is (1,0)") {
    SurfaceNormalForm nf = normal_form_2d(make_cone({v2(0, 1), v2(1, 0)}, 2));
    CHECK(nf.d == 1);
    CHECK(nf.k == 0);
}

TEST_CASE("normal form of the (3,2) cone") {
    SurfaceNormalForm nf = normal_form_2d(make_cone({v2(0, 1), v2(3, -2)}, 2));
    CHECK(nf.d == 3);
    CHECK(nf.k == 2);
}

TEST_CASE("normal form is invariant under unimodular basis change") {
    oracle::Rng rng(0xFAB);
    int done = 0;
    while (done < 40) {
        Vec a = v2(rng.range(-6, 6), rng.range(-6, 6));
        Vec b = v2(rng.range(-6, 6), rng.range(-6, 6));
        Cone c;
        try {
            c = make_cone({is_zero(a) ? v2(1, 2) : primitive(a), is_zero(b) ? v2(0, 1) : primitive(b)}, 2);
        } catch (const std::invalid_argument&) {
            continue;
        }
        SurfaceNormalForm nf = normal_form_2d(c);
        CHECK(gcd(nf.d, nf.k) == 1);
        CHECK(nf.k >= 0);
        CHECK(nf.k <= nf.d);

        Mat t = oracle::random_unimodular(rng, 2, 10);
        Cone moved = make_cone({t.apply(c.rays[0]), t.apply(c.rays[1])}, 2);
        SurfaceNormalForm nf2 = normal_form_2d(moved);
        CHECK(nf2.d == nf.d);
        CHECK(nf2.k == nf.k);
        ++done;
    }
}
