#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>

#include "test_support.hpp"

using namespace vps;

TEST_CASE("count_points: trivial systems") {
    auto r1 = make_ring({"x1"}, 3);
    PolyP sq(r1);
    sq.add_term({2}, Fp(1, 3));
    AffineSystem one(3, 1, {sq});
    CHECK(count_points(one) == 1);

    AffineSystem empty(3, 10, {});
    CHECK(count_points(empty) == 59049);

    auto r2 = make_ring({"x1", "x2"}, 5);
    // x1^2 + x2^2 = 0 over F_5: 9 points (five with x1=2x2 type, -1 is a square)
    PolyP f(r2);
    f.add_term({2, 0}, Fp(1, 5));
    f.add_term({0, 2}, Fp(1, 5));
    AffineSystem circ(5, 2, {f});
    CHECK(count_points(circ) == 9);
}

TEST_CASE("count_points: deterministic across thread budgets") {
    InteriorVars iv(4);
    auto sec = sec_equations(4, iv);
    auto sys = reduce_system(sec, 5);
    setenv("VPS_THREADS", "1", 1);
    auto a = count_points(sys);
    setenv("VPS_THREADS", "8", 1);
    auto b = count_points(sys);
    unsetenv("VPS_THREADS");
    auto c = count_points(sys);
    CHECK(a == b);
    CHECK(a == c);
}

TEST_CASE("count_points: resource bound") {
    AffineSystem big(31, 7, {});
    CHECK_THROWS_AS(count_points(big), Error);
}

TEST_CASE("sec_equations(5) point count over F_3: golden and dimension signal") {
    auto sec = sec_equations(5);
    REQUIRE(sec.size() == 6);
    auto sys = reduce_system(sec, 3);
    std::uint64_t count = count_points(sys);
    // frozen after the first exact enumeration of F_3^10
    CHECK(count == 963);
    // coarse dimension signal for dim 6: between 3^5 and 3^7
    CHECK(count >= 243);
    CHECK(count <= 2187 * 10);
    double logp = std::log(static_cast<double>(count)) / std::log(3.0);
    CHECK(logp >= 5.0);
    CHECK(logp <= 7.0);
}

TEST_CASE("jacobian_rank: smooth quadric point") {
    auto r = make_ring({"x", "y", "z"});
    PolyQ f = parse_poly("x^2 + y^2 - z^2", r);
    std::vector<Rat> pt = {Rat(3), Rat(4), Rat(5)};
    CHECK(jacobian_rank<Rat>({f}, pt) == 1);

    std::vector<Rat> off = {Rat(1), Rat(1), Rat(1)};
    CHECK_THROWS_AS(jacobian_rank<Rat>({f}, off), Error);
}

TEST_CASE("jacobian_rank: the displayed set-theoretic loc(4) system at the origin") {
    InteriorVars iv(4);
    auto a = [&](unsigned i, unsigned j, unsigned k) { return iv.var(i, j, k); };
    std::vector<PolyQ> displayed = {a(2, 2, 2) + a(2, 3, 3), a(2, 2, 3) + a(3, 3, 3),
                                    a(2, 3, 3) * a(2, 3, 3) + a(2, 2, 3) * a(2, 2, 3)};
    std::vector<Rat> origin(4, Rat(0));
    CHECK(jacobian_rank(displayed, origin) == 2);
    // the pre-saturation system has no linear part, so its Jacobian
    // vanishes at the cone point
    CHECK(jacobian_rank(loc_equations(4, iv), origin) == 0);
}

TEST_CASE("V^sec_p(5): rational sample points are smooth of codimension 4") {
    const ChartSystem& cs = chart_system(5);
    InteriorVars iv(5);
    auto sec = sec_equations(5, iv);
    int done = 0;
    for (std::uint64_t seed = 1; done < 10 && seed < 40; ++seed) {
        ChartPoint pt = sec_sample_point(5, seed);
        for (const auto& r : cs.residuals(pt)) CHECK(is_zero(r));
        auto coords = iv.from_chart_point(cs, pt);
        bool origin = true;
        for (const auto& c : coords)
            if (!is_zero(c)) origin = false;
        if (origin) continue;
        for (const auto& f : sec) CHECK(is_zero(f.eval(coords, Rat(1))));
        CHECK(jacobian_rank(sec, coords) == 4);
        ++done;
    }
    CHECK(done == 10);
}

TEST_CASE("V^loc_p(5): curvilinear samples over F_p are smooth of codimension 7") {
    InteriorVars iv(5);
    auto loc = loc_equations(5, iv);
    for (std::uint32_t p : {3u, 5u, 7u}) {
        RingPtr pring = make_ring(iv.ring()->vars, p);
        std::vector<PolyP> locp;
        for (const auto& f : loc) locp.push_back(reduce_mod_p(f, p, pring));
        int done = 0;
        for (std::uint64_t seed = 1; done < 4 && seed < 200; ++seed) {
            auto sample = vps_test::loc_curvilinear_sample(p, seed);
            if (!sample) continue;
            Fp one(1, p);
            for (const auto& f : locp) CHECK(is_zero(f.eval(sample->interior, one)));
            CHECK(jacobian_rank(locp, sample->interior) == 7);
            ++done;
        }
        CHECK(done == 4);
    }
}
