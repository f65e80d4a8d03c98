#include <doctest.h>

#include "pencillab/rng.hpp"
#include "pencillab/unipoly.hpp"

using namespace pencillab;

namespace {

UniPoly poly(std::initializer_list<long> coeffs) {
    std::vector<Rat> c;
    for (long v : coeffs) c.emplace_back(v);
    return UniPoly(std::move(c));
}

UniPoly random_poly(Rng& rng, int max_deg) {
    int d = static_cast<int>(rng.int_in(1, max_deg));
    std::vector<Rat> c;
    for (int i = 0; i <= d; ++i) c.emplace_back(rng.int_in(-9, 9));
    UniPoly p(std::move(c));
    return p.is_zero() ? UniPoly::variable() : p;
}

}  // namespace

TEST_CASE("arithmetic and division") {
    UniPoly f = poly({-2, 0, 1});  // t^2 - 2
    UniPoly g = poly({1, 1});      // t + 1
    auto [q, r] = f.divrem(g);
    CHECK(q == poly({-1, 1}));
    CHECK(r == poly({-1}));
    CHECK((q * g + r) == f);
    CHECK(f.eval(Rat(3)) == Rat(7));
    CHECK(f.derivative() == poly({0, 2}));
}

TEST_CASE("gcd and squarefree part") {
    UniPoly f = poly({1, -2, 1});  // (t-1)^2
    UniPoly g = poly({-1, 1});     // t - 1
    CHECK(gcd(f, g) == g.monic());
    CHECK(squarefree_part(f).monic() == g.monic());
    UniPoly h = poly({0, -1, 0, 1});  // t(t-1)(t+1)
    CHECK(squarefree_part(h).monic() == h.monic());
}

TEST_CASE("real_root_count spec examples") {
    // t^2 - 2 on (0, 2): one root
    CHECK(real_root_count(poly({-2, 0, 1}), Rat(0), Rat(2)) == 1);
    // t^2 + 1 everywhere: none
    CHECK(real_root_count(poly({1, 0, 1})) == 0);
    CHECK_THROWS_AS(real_root_count(UniPoly()), InputError);
}

TEST_CASE("half-open interval semantics") {
    UniPoly f = poly({0, -1, 0, 1});  // roots -1, 0, 1
    CHECK(real_root_count(f, Rat(-1), Rat(0)) == 1);   // counts 0
    CHECK(real_root_count(f, Rat(0), Rat(1)) == 1);    // counts 1
    CHECK(real_root_count(f, Rat(-2), Rat(-1)) == 1);  // right endpoint included
    CHECK(real_root_count(f, Rat(-1), Rat(1)) == 2);
    CHECK(real_root_count(f) == 3);
}

TEST_CASE("isolate_roots spec examples") {
    UniPoly f = poly({0, -1, 0, 1});
    auto roots = isolate_roots(f);
    REQUIRE(roots.size() == 3);
    CHECK(roots[0].lo <= Rat(-1));
    CHECK(roots[0].hi >= Rat(-1));
    CHECK(roots[1].lo <= Rat(0));
    CHECK(roots[1].hi >= Rat(0));
    CHECK(roots[2].lo <= Rat(1));
    CHECK(roots[2].hi >= Rat(1));
    for (size_t i = 0; i + 1 < roots.size(); ++i) CHECK(roots[i].hi < roots[i + 1].lo);

    auto dbl = isolate_roots(poly({1, -2, 1}));  // (t-1)^2: multiplicity collapses
    REQUIRE(dbl.size() == 1);
    CHECK(dbl[0].lo <= Rat(1));
    CHECK(dbl[0].hi >= Rat(1));
}

TEST_CASE("isolated intervals each hold exactly one root") {
    Rng rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        UniPoly f = random_poly(rng, 7);
        auto roots = isolate_roots(f);
        CHECK(static_cast<long>(roots.size()) == real_root_count(f));
        for (const auto& r : roots) {
            if (r.is_exact()) {
                CHECK(f.eval(r.lo) == 0);
            } else {
                CHECK(real_root_count(f, r.lo, r.hi) == 1);
                CHECK(f.eval(r.lo) != 0);
                CHECK(f.eval(r.hi) != 0);
            }
        }
        auto samples = gap_samples(roots);
        for (const auto& s : samples) CHECK(squarefree_part(f).eval(s) != 0);
    }
}

TEST_CASE("count additivity across a non-root midpoint") {
    Rng rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        UniPoly f = random_poly(rng, 6);
        Rat a(-50), c(50);
        Rat b(rng.int_in(-40, 40), rng.int_in(1, 5));
        if (f.eval(b) == 0) continue;
        CHECK(real_root_count(f, a, b) + real_root_count(f, b, c) == real_root_count(f, a, c));
    }
}

TEST_CASE("cauchy bound really bounds") {
    Rng rng(13);
    for (int trial = 0; trial < 30; ++trial) {
        UniPoly f = random_poly(rng, 6);
        Rat b = cauchy_bound(f);
        CHECK(real_root_count(f, -b, b) == real_root_count(f));
    }
}

TEST_CASE("interpolation reproduces polynomials") {
    Rng rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        UniPoly f = random_poly(rng, 5);
        std::vector<std::pair<Rat, Rat>> pts;
        for (int i = 0; i <= f.degree(); ++i) pts.emplace_back(Rat(i), f.eval(Rat(i)));
        CHECK(interpolate(pts) == f);
    }
}
