#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "oracle.hpp"
#include "toricmon/toric.hpp"

using namespace toricmon;

namespace {

Vec v2(long a, long b) { return Vec{Int(a), Int(b)}; }
Vec v3(long a, long b, long c) { return Vec{Int(a), Int(b), Int(c)}; }

AffineToricVariety quad_cone() { return build_variety({v2(0, 1), v2(2, -1)}, 2); }
AffineToricVariety threefold() {
    return build_variety({v3(1, 0, 0), v3(0, 1, 0), v3(1, 0, 1), v3(0, 1, 1)}, 3);
}
AffineToricVariety plane() { return build_variety({v2(1, 0), v2(0, 1)}, 2); }

using Poly = std::map<Vec, Rat, VecLess>;

Poly to_poly(const std::vector<GradedTerm>& terms) {
    Poly p;
    for (const GradedTerm& t : terms) {
        if (t.coeff == 0) continue;
        p[t.exponent] += t.coeff;
        if (p[t.exponent] == 0) p.erase(t.exponent);
    }
    return p;
}

Poly apply_ga(const AffineToricVariety& x, const DemazureRoot& root, const Rat& alpha,
              const Poly& p) {
    Poly out;
    for (const auto& [u, c] : p)
        for (const GradedTerm& t : ga_action(x, root, alpha, u)) {
            out[t.exponent] += c * t.coeff;
            if (out[t.exponent] == 0) out.erase(t.exponent);
        }
    return out;
}

}  // namespace

TEST_CASE("build_variety on the quadratic cone") {
    AffineToricVariety x = quad_cone();
    CHECK(x.torus_rank == 0);
    CHECK(x.cone.rays == std::vector<Vec>{v2(0, 1), v2(2, -1)});
    CHECK(x.hilbert == std::vector<Vec>{v2(1, 0), v2(1, 1), v2(1, 2)});
    CHECK(x.torus_units.empty());
}

TEST_CASE("build_variety splits off a torus factor") {
    AffineToricVariety x = build_variety({v2(1, 0)}, 2);
    CHECK(x.torus_rank == 1);
    CHECK(x.pointed_rank() == 1);
    CHECK(x.hilbert.size() == 1);
    CHECK(x.hilbert[0][1] == 0);
    CHECK(x.torus_units.size() == 2);
    CHECK(is_unimodular(x.basis_change));
}

TEST_CASE("build_variety of the torus has no rays") {
    AffineToricVariety x = build_variety({}, 2);
    CHECK(x.torus_rank == 2);
    CHECK(x.ray_count() == 0);
    CHECK(x.hilbert.empty());
    CHECK(x.torus_units.size() == 4);
    CHECK(x.in_weight_monoid(v2(-3, 5)));
}

TEST_CASE("demazure root membership on the quadratic cone") {
    AffineToricVariety x = quad_cone();
    CHECK(is_demazure_root(x, 0, v2(3, -1)));
    CHECK_FALSE(is_demazure_root(x, 0, v2(-1, -1)));
    CHECK_THROWS_AS(is_demazure_root(x, 2, v2(0, -1)), std::out_of_range);
}

TEST_CASE("demazure root membership on the 3-fold") {
    AffineToricVariety x = threefold();
    CHECK_FALSE(is_demazure_root(x, 0, v3(-1, 0, 0)));  // needs l3 >= 1
    CHECK(is_demazure_root(x, 0, v3(-1, 0, 1)));
    CHECK(is_demazure_root(x, 0, v3(-1, 2, 3)));
}

TEST_CASE("root enumeration matches the R2 series of the quadratic cone") {
    AffineToricVariety x = quad_cone();
    std::vector<DemazureRoot> roots = enumerate_roots(x, 1, 5);
    std::vector<Vec> es;
    for (const auto& r : roots) es.push_back(r.e);
    CHECK(es == std::vector<Vec>{v2(0, 1), v2(1, 3), v2(2, 5)});
}

TEST_CASE("root enumeration on the plane") {
    AffineToricVariety x = plane();
    // rays sort as (1,0), (0,1); roots at (1,0) are (-1, c) with c >= 0
    CHECK(x.cone.rays[0] == v2(1, 0));
    std::vector<DemazureRoot> roots = enumerate_roots(x, 0, 1);
    std::vector<Vec> es;
    for (const auto& r : roots) es.push_back(r.e);
    CHECK(es == std::vector<Vec>{v2(-1, 0), v2(-1, 1)});
}

TEST_CASE("root enumeration on the 3-fold respects the sign of the third slot") {
    AffineToricVariety x = threefold();
    std::vector<DemazureRoot> r3 = enumerate_roots(x, 2, 1);
    std::vector<Vec> es;
    for (const auto& r : r3) es.push_back(r.e);
    // <p3,e> = -1 forces e3 = -1 - e1 < 0
    CHECK(es == std::vector<Vec>{v3(0, 1, -1)});
    std::vector<DemazureRoot> r4 = enumerate_roots(x, 3, 1);
    es.clear();
    for (const auto& r : r4) es.push_back(r.e);
    CHECK(es == std::vector<Vec>{v3(1, 0, -1)});
}

TEST_CASE("the paper's parametrized root series lie in the enumerated sets") {
    AffineToricVariety x = quad_cone();
    for (long l = 0; l <= 6; ++l) {
        CHECK(is_demazure_root(x, 0, v2(l, -1)));
        CHECK(is_demazure_root(x, 1, v2(l, 1 + 2 * l)));
    }
}

TEST_CASE("lnd_apply differentiates c to 2b on the quadratic cone") {
    AffineToricVariety x = quad_cone();
    GradedTerm t = lnd_apply(x, {0, v2(0, -1)}, v2(1, 2));
    CHECK(t.coeff == 2);
    CHECK(t.exponent == v2(1, 1));
}

TEST_CASE("lnd_apply kills invariants") {
    AffineToricVariety x = quad_cone();
    GradedTerm t = lnd_apply(x, {0, v2(1, -1)}, v2(1, 0));  // <p1,(1,0)> = 0
    CHECK(t.is_zero());
}

TEST_CASE("lnd_apply is the usual derivative on the plane") {
    AffineToricVariety x = plane();
    GradedTerm t = lnd_apply(x, {0, v2(-1, 0)}, v2(2, 0));
    CHECK(t.coeff == 2);
    CHECK(t.exponent == v2(1, 0));
}

TEST_CASE("lnd_apply rejects exponents outside S_X") {
    AffineToricVariety x = quad_cone();
    CHECK_THROWS_AS(lnd_apply(x, {0, v2(0, -1)}, v2(-1, 0)), std::domain_error);
}

TEST_CASE("lnd is locally nilpotent") {
    for (AffineToricVariety x : {quad_cone(), threefold()}) {
        for (std::size_t i = 0; i < x.ray_count(); ++i)
            for (const DemazureRoot& root : enumerate_roots(x, i, 3))
                for (const Vec& u : x.hilbert) {
                    Int m = x.pairing(i, u);
                    GradedTerm t{Rat(1), u};
                    for (Int step = 0; step <= m; ++step) {
                        if (t.is_zero()) break;
                        GradedTerm next = lnd_apply(x, root, t.exponent);
                        next.coeff *= t.coeff;
                        t = next;
                    }
                    CHECK(t.is_zero());
                }
    }
}

TEST_CASE("leibniz rule on Hilbert-basis pairs") {
    for (AffineToricVariety x : {quad_cone(), threefold()}) {
        for (std::size_t i = 0; i < x.ray_count(); ++i) {
            std::vector<DemazureRoot> roots = enumerate_roots(x, i, 2);
            for (const DemazureRoot& root : roots)
                for (const Vec& u : x.hilbert)
                    for (const Vec& v : x.hilbert) {
                        Poly lhs = to_poly({lnd_apply(x, root, vec_add(u, v))});
                        GradedTerm du = lnd_apply(x, root, u);
                        GradedTerm dv = lnd_apply(x, root, v);
                        Poly rhs;
                        if (!du.is_zero()) rhs[vec_add(du.exponent, v)] += du.coeff;
                        if (!dv.is_zero()) rhs[vec_add(u, dv.exponent)] += dv.coeff;
                        for (auto it = rhs.begin(); it != rhs.end();)
                            it = it->second == 0 ? rhs.erase(it) : std::next(it);
                        CHECK(lhs == rhs);
                    }
        }
    }
}

TEST_CASE("ga_action expands the binomial series") {
    AffineToricVariety x = quad_cone();
    // e = (1,-1), u = c = (1,2), alpha = 1: c + 2 chi^(2,1) + chi^(3,0)
    std::vector<GradedTerm> terms = ga_action(x, {0, v2(1, -1)}, Rat(1), v2(1, 2));
    REQUIRE(terms.size() == 3);
    CHECK(terms[0] == GradedTerm{Rat(1), v2(3, 0)});
    CHECK(terms[1] == GradedTerm{Rat(2), v2(2, 1)});
    CHECK(terms[2] == GradedTerm{Rat(1), v2(1, 2)});
}

TEST_CASE("ga_action with alpha 0 is the identity") {
    AffineToricVariety x = quad_cone();
    std::vector<GradedTerm> terms = ga_action(x, {0, v2(0, -1)}, Rat(0), v2(1, 2));
    REQUIRE(terms.size() == 1);
    CHECK(terms[0] == GradedTerm{Rat(1), v2(1, 2)});
}

TEST_CASE("ga_action fixes invariant monomials") {
    AffineToricVariety x = quad_cone();
    std::vector<GradedTerm> terms = ga_action(x, {0, v2(0, -1)}, Rat(7, 3), v2(1, 0));
    REQUIRE(terms.size() == 1);
    CHECK(terms[0] == GradedTerm{Rat(1), v2(1, 0)});
}

TEST_CASE("ga_action is a one-parameter group") {
    Rat alpha(1, 2), beta(-2, 3);
    for (AffineToricVariety x : {quad_cone(), threefold()}) {
        for (std::size_t i = 0; i < x.ray_count(); ++i)
            for (const DemazureRoot& root : enumerate_roots(x, i, 2))
                for (const Vec& u : x.hilbert) {
                    Poly one = to_poly(ga_action(x, root, alpha, u));
                    Poly then = apply_ga(x, root, beta, one);
                    Poly direct = to_poly(ga_action(x, root, alpha + beta, u));
                    CHECK(then == direct);
                }
    }
}

TEST_CASE("ga_action exponents stay in the weight monoid") {
    AffineToricVariety x = threefold();
    for (std::size_t i = 0; i < x.ray_count(); ++i)
        for (const DemazureRoot& root : enumerate_roots(x, i, 2))
            for (const Vec& u : x.hilbert)
                for (const GradedTerm& t : ga_action(x, root, Rat(3), u))
                    CHECK(x.in_weight_monoid(t.exponent));
}

TEST_CASE("build_variety rejects bad rays") {
    CHECK_THROWS_AS(build_variety({v2(2, 4)}, 2), std::invalid_argument);
    CHECK_THROWS_AS(build_variety({v2(1, 0), v2(-1, 0)}, 2), std::invalid_argument);
}
