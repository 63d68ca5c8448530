#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "vps/matrix.hpp"
#include "vps/polynomial.hpp"
#include "vps/rng.hpp"
#include "vps/subspace.hpp"

using namespace vps;

namespace {

PolyQ random_poly(const RingPtr& ring, unsigned maxdeg, Rng& rng) {
    PolyQ p(ring);
    std::size_t terms = 1 + rng.below(5);
    for (std::size_t t = 0; t < terms; ++t) {
        Expo e(ring->nvars(), 0);
        unsigned d = static_cast<unsigned>(rng.below(maxdeg + 1));
        for (unsigned k = 0; k < d; ++k) e[rng.below(ring->nvars())]++;
        p.add_term(e, make_rat(rng.range(-5, 5), rng.range(1, 4)));
    }
    return p;
}

}  // namespace

TEST_CASE("parse: spec examples") {
    auto T4 = indexed_ring('y', 4);
    PolyQ q = parse_poly("2*y1*y4 + y2^2 + y3^2", T4);
    CHECK(q.term_count() == 3);
    Expo e14 = {1, 0, 0, 1};
    CHECK(q.coeff(e14) == 2);
    CHECK(q.degree() == 2);

    CHECK(parse_poly("0", T4).is_zero());

    auto S1 = indexed_ring('x', 1);
    CHECK(parse_poly("1/2*x1^2 - 1/2*x1^2", S1).is_zero());
}

TEST_CASE("parse: errors carry positions") {
    auto S2 = indexed_ring('x', 2);
    CHECK_THROWS_AS(parse_poly("x1 + @", S2), Error);
    CHECK_THROWS_AS(parse_poly("x3", S2), Error);
    try {
        parse_poly("x1 + z9", S2);
        CHECK(false);
    } catch (const Error& err) {
        CHECK(err.kind() == ErrorKind::UnknownVariable);
    }
}

TEST_CASE("parse: optional * and implicit coefficient") {
    auto S3 = indexed_ring('x', 3);
    CHECK(parse_poly("2x1x2", S3) == parse_poly("2*x1*x2", S3));
    CHECK(parse_poly("-x1^2", S3) == parse_poly("0 - x1^2", S3));
    CHECK(parse_poly("x1*x1", S3) == parse_poly("x1^2", S3));
}

TEST_CASE("print/parse round-trip on canonical output") {
    auto S3 = indexed_ring('x', 3);
    Rng rng(7);
    for (int i = 0; i < 200; ++i) {
        PolyQ p = random_poly(S3, 3, rng);
        std::string s = print_poly(p);
        PolyQ q = parse_poly(s, S3);
        CHECK(q == p);
        CHECK(print_poly(q) == s);
    }
}

TEST_CASE("printer emits grevlex-descending terms") {
    auto S4 = indexed_ring('x', 4);
    PolyQ p = parse_poly("x4^2 + x1*x4 + x2^2 + x1^2 + x2*x3", S4);
    CHECK(print_poly(p) == "x1^2 + x2^2 + x2*x3 + x1*x4 + x4^2");
}

TEST_CASE("diff_apply: spec examples") {
    auto S = indexed_ring('x', 4);
    auto T = indexed_ring('y', 4);

    PolyQ D = parse_poly("x1", S);
    PolyQ f = parse_poly("y1^2", T);
    CHECK(print_poly(diff_apply(D, f)) == "2*y1");

    PolyQ D2 = parse_poly("x1*x4", S);
    PolyQ q = parse_poly("2*y1*y4 + y2^2 + y3^2", T);
    CHECK(print_poly(diff_apply(D2, q)) == "2");

    PolyQ D3 = parse_poly("x2^2", S);
    PolyQ g = parse_poly("y1*y4", T);
    CHECK(diff_apply(D3, g).is_zero());
}

TEST_CASE("diff_apply: operator composition and bilinearity") {
    auto S = indexed_ring('x', 3);
    auto T = indexed_ring('y', 3);
    Rng rng(11);
    for (int i = 0; i < 100; ++i) {
        PolyQ d1 = random_poly(S, 2, rng);
        PolyQ d2 = random_poly(S, 2, rng);
        PolyQ f = random_poly(T, 4, rng);
        CHECK(diff_apply(d1 * d2, f) == diff_apply(d1, diff_apply(d2, f)));
        PolyQ g = random_poly(T, 4, rng);
        CHECK(diff_apply(d1, f + g) == diff_apply(d1, f) + diff_apply(d1, g));
    }
}

TEST_CASE("row_reduce: identity and zero") {
    MatrixQ id = MatrixQ::identity(3, Rat(1));
    auto rr = row_reduce(id);
    CHECK(rr.rank == 3);
    CHECK(rr.kernel.rows() == 0);
    CHECK(rr.rref == id);

    MatrixQ z(2, 4);
    auto rz = row_reduce(z);
    CHECK(rz.rank == 0);
    CHECK(rz.kernel.rows() == 4);
}

TEST_CASE("row_reduce: q-perp coefficient matrix for n=4 has rank 9") {
    // pairing of monomial quadrics against q = y1^2+..+y4^2: only the
    // squares pair nonzero, so the kernel (= q-perp) has dimension 9;
    // its basis matrix must reduce with rank 9.
    auto S = indexed_ring('x', 4);
    auto T = indexed_ring('y', 4);
    PolyQ q(T);
    for (int i = 0; i < 4; ++i) {
        Expo e(4, 0);
        e[i] = 2;
        q.add_term(e, Rat(1));
    }
    GradedPiece S2(S, 2);
    MatrixQ pairing(1, S2.dim());
    for (std::size_t j = 0; j < S2.dim(); ++j) {
        PolyQ D = PolyQ::monomial(S, S2.basis[j], Rat(1));
        PolyQ val = diff_apply(D, q);
        pairing.at(0, j) = val.is_zero() ? Rat(0) : val.coeff(Expo(4, 0));
    }
    auto rr = row_reduce(pairing);
    CHECK(rr.kernel.rows() == 9);
    auto rr2 = row_reduce(rr.kernel);
    CHECK(rr2.rank == 9);
}

TEST_CASE("row_reduce is idempotent and kernel annihilates") {
    Rng rng(13);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t r = 1 + rng.below(6), c = 1 + rng.below(7);
        MatrixQ m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                m.at(i, j) = make_rat(rng.range(-6, 6), rng.range(1, 3));
        auto rr = row_reduce(m);
        auto rr2 = row_reduce(rr.rref);
        CHECK(rr2.rref == rr.rref);
        CHECK(rr2.rank == rr.rank);
        CHECK(rr.rank + rr.kernel.rows() == c);
        for (std::size_t k = 0; k < rr.kernel.rows(); ++k) {
            auto v = rr.kernel.row(k);
            for (const auto& x : m.apply(v)) CHECK(is_zero(x));
        }
    }
}

TEST_CASE("det and inverse") {
    MatrixQ m(3, 3);
    long vals[3][3] = {{2, 1, 0}, {1, 3, 1}, {0, 1, 4}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m.at(i, j) = vals[i][j];
    CHECK(det(m) == Rat(18));
    MatrixQ inv = inverse_matrix(m);
    CHECK(m * inv == MatrixQ::identity(3, Rat(1)));

    MatrixQ sing(2, 2);
    sing.at(0, 0) = 1;
    sing.at(0, 1) = 2;
    sing.at(1, 0) = 2;
    sing.at(1, 1) = 4;
    CHECK(det(sing) == 0);
    CHECK_THROWS_AS(inverse_matrix(sing), Error);
}

TEST_CASE("subspace equality is representation independent") {
    Rng rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t amb = 4 + rng.below(4);
        std::size_t d = 1 + rng.below(3);
        MatrixQ rows(d, amb);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < amb; ++j) rows.at(i, j) = Rat(rng.range(-4, 4));
        Subspace a = Subspace::from_rows(amb, rows);
        // same space generated by random invertible combinations
        MatrixQ rows2(d + 1, amb);
        for (std::size_t i = 0; i < d + 1; ++i) {
            std::vector<Rat> v(amb, Rat(0));
            for (std::size_t k = 0; k < d; ++k) {
                Rat ck(rng.range(-3, 3));
                for (std::size_t j = 0; j < amb; ++j) v[j] += ck * rows.at(k, j);
            }
            rows2.set_row(i, v);
        }
        Subspace b = Subspace::from_rows(amb, rows2);
        CHECK(a.contains_subspace(b));
        if (b.dim() == a.dim()) CHECK(a == b);
    }
}

TEST_CASE("subspace sum and intersection") {
    // span{e1,e2} cap span{e2,e3} = span{e2} inside Q^4
    auto e = [](int i) {
        std::vector<Rat> v(4, Rat(0));
        v[i] = 1;
        return v;
    };
    Subspace a = Subspace::from_vectors(4, {e(0), e(1)});
    Subspace b = Subspace::from_vectors(4, {e(1), e(2)});
    Subspace c = intersect(a, b);
    CHECK(c.dim() == 1);
    CHECK(c.contains(e(1)));
    Subspace s = sum(a, b);
    CHECK(s.dim() == 3);
}

TEST_CASE("Fp arithmetic and field mismatch") {
    Fp a(5, 7), b(4, 7);
    CHECK((a + b).value == 2);
    CHECK((a * b).value == 6);
    CHECK((a - b).value == 1);
    CHECK((inverse(a) * a).value == 1);
    Fp c(1, 5);
    CHECK_THROWS_AS((void)(a + c), Error);

    MatrixP m(2, 2, Fp(0, 7));
    m.at(0, 0) = Fp(2, 7);
    m.at(0, 1) = Fp(1, 7);
    m.at(1, 0) = Fp(4, 7);
    m.at(1, 1) = Fp(2, 7);
    auto rr = row_reduce(m);
    CHECK(rr.rank == 1);
    CHECK(rr.kernel.rows() == 1);
}
