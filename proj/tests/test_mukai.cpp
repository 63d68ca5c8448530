#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "vps/mukai.hpp"

using namespace vps;

namespace {

// Block-diagonal model data:  M has antidiagonal blocks of the given
// sizes (the matrix of sum_k y_(i,k) y_(i,n_i+1-k)), and the partner
// A = sum_b (mu_b M_b + N_b) with N_b the nilpotent symmetric shift of
// the block.  A M^{-1} has one Jordan block of size n_b per eigenvalue
// mu_b.
MatrixQ model_matrix(const std::vector<std::size_t>& lengths) {
    std::size_t n = 0;
    for (auto k : lengths) n += k;
    MatrixQ m(n, n);
    std::size_t off = 0;
    for (auto k : lengths) {
        for (std::size_t i = 0; i < k; ++i) m.at(off + i, off + k - 1 - i) = 2;
        off += k;
    }
    return m;
}

MatrixQ jordan_partner(const std::vector<std::size_t>& lengths, const std::vector<Rat>& mus) {
    std::size_t n = 0;
    for (auto k : lengths) n += k;
    MatrixQ a(n, n);
    std::size_t off = 0;
    for (std::size_t b = 0; b < lengths.size(); ++b) {
        std::size_t k = lengths[b];
        for (std::size_t i = 0; i < k; ++i) a.at(off + i, off + k - 1 - i) += 2 * mus[b];
        for (std::size_t i = 0; i + 1 < k; ++i) a.at(off + i, off + k - 2 - i) += 2;
        off += k;
    }
    return a;
}

// Rational M-orthogonal matrix from a seeded Cayley transform.
MatrixQ cayley_orthogonal(const MatrixQ& m, std::uint64_t seed) {
    std::size_t n = m.rows();
    Rng rng(seed);
    while (true) {
        MatrixQ s(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                Rat v = make_rat(rng.range(-3, 3), rng.range(1, 3));
                s.at(i, j) = v;
                s.at(j, i) = -v;
            }
        MatrixQ k = inverse_matrix(m) * s;
        MatrixQ id = MatrixQ::identity(n, Rat(1));
        if (is_zero(det(id + k)) || is_zero(det(id - k))) continue;
        return (id - k) * inverse_matrix(id + k);
    }
}

Subspace transport_ideal(const Subspace& ideal, const MatrixQ& point_map, const RingPtr& sring) {
    GradedPiece s2(sring, 2);
    MatrixQ inv = inverse_matrix(point_map);
    std::vector<std::vector<Rat>> rows;
    for (std::size_t i = 0; i < inv.rows(); ++i) rows.push_back(inv.row(i));
    std::vector<PolyQ> gens;
    for (const auto& f : polys_of_subspace(s2, ideal)) gens.push_back(f.substitute_linear(rows));
    return span_of_polys(s2, gens);
}

}  // namespace

TEST_CASE("tau: q' = q gives zero") {
    auto T = indexed_ring('y', 4);
    auto S = indexed_ring('x', 4);
    auto q = standard_quadric(4, T);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
            CHECK(tau(q, q, SkewForm::wedge(4, i, j), S).poly().is_zero());
}

TEST_CASE("tau: diagonal pencil scales coordinate quadrics") {
    auto T = indexed_ring('y', 4);
    auto S = indexed_ring('x', 4);
    auto q = QuadraticForm::parse("1/2*y1^2 + 1/2*y2^2 + 1/2*y3^2 + 1/2*y4^2", T);
    std::vector<long> lam = {1, 2, 3, 5};
    PolyQ qp(T);
    for (std::size_t i = 0; i < 4; ++i) {
        Expo e(4, 0);
        e[i] = 2;
        qp.add_term(e, make_rat(lam[i], 2));
    }
    auto qprime = QuadraticForm::from_poly(qp);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j) {
            auto out = tau(q, qprime, SkewForm::wedge(4, i, j), S);
            // expected (lam_j - lam_i) * x_i x_j
            PolyQ expect(S);
            Expo e(4, 0);
            e[i] = 1;
            e[j] = 1;
            expect.add_term(e, Rat(lam[j] - lam[i]));
            CHECK(out.poly() == expect);
        }
}

TEST_CASE("tau: image is apolar to both forms") {
    auto T = indexed_ring('y', 4);
    auto S = indexed_ring('x', 4);
    auto q = standard_quadric(4, T);
    Rng rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        MatrixQ a(4, 4);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = i; j < 4; ++j) {
                Rat v = make_rat(rng.range(-4, 4), rng.range(1, 3));
                a.at(i, j) = v;
                a.at(j, i) = v;
            }
        auto qprime = QuadraticForm::from_matrix(T, a);
        MatrixQ s(4, 4);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = i + 1; j < 4; ++j) {
                Rat v(rng.range(-3, 3));
                s.at(i, j) = v;
                s.at(j, i) = -v;
            }
        auto out = tau(q, qprime, SkewForm::from_matrix(s), S);
        CHECK(diff_apply(out.poly(), q.poly()).is_zero());
        CHECK(diff_apply(out.poly(), qprime.poly()).is_zero());
    }
}

TEST_CASE("tau_image: diagonal distinct gives the coordinate-simplex ideal") {
    auto T = indexed_ring('y', 3);
    auto S = indexed_ring('x', 3);
    auto q = QuadraticForm::parse("1/2*y1^2 + 1/2*y2^2 + 1/2*y3^2", T);
    auto qp = QuadraticForm::parse("1/2*y1^2 + y2^2 + 3/2*y3^2", T);
    Subspace img = tau_image(q, qp, S);
    GradedPiece s2(S, 2);
    Subspace expected = span_of_polys(
        s2, {parse_poly("x1*x2", S), parse_poly("x1*x3", S), parse_poly("x2*x3", S)});
    CHECK(img == expected);

    CHECK(tau_image(q, q, S).dim() == 0);
}

TEST_CASE("tau_image: corank-2 member drops the dimension") {
    auto T = indexed_ring('y', 4);
    auto S = indexed_ring('x', 4);
    auto q = QuadraticForm::parse("1/2*y1^2 + 1/2*y2^2 + 1/2*y3^2 + 1/2*y4^2", T);
    auto qp = QuadraticForm::parse("1/2*y3^2 + y4^2", T);  // eigenvalue 0 twice, two blocks
    CHECK(tau_image(q, qp, S).dim() < 6);
    CHECK_FALSE(pencil_profile(q, qp).unique);
}

TEST_CASE("tau_image: pencil invariance") {
    auto T = indexed_ring('y', 4);
    auto S = indexed_ring('x', 4);
    auto q = standard_quadric(4, T);
    Rng rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        MatrixQ a(4, 4);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = i; j < 4; ++j) {
                Rat v(rng.range(-4, 4));
                a.at(i, j) = v;
                a.at(j, i) = v;
            }
        auto qp = QuadraticForm::from_matrix(T, a);
        Rat c = make_rat(rng.range(-3, 3), rng.range(1, 2));
        auto shifted = QuadraticForm::from_matrix(T, a + q.matrix() * c);
        CHECK(tau_image(q, qp, S) == tau_image(q, shifted, S));
    }
}

TEST_CASE("pencil_profile: spec examples") {
    auto T = indexed_ring('y', 4);
    auto q = QuadraticForm::parse("1/2*y1^2 + 1/2*y2^2 + 1/2*y3^2 + 1/2*y4^2", T);
    auto diag = QuadraticForm::parse("1/2*y1^2 + y2^2 + 3/2*y3^2 + 2*y4^2", T);
    auto pr = pencil_profile(q, diag);
    CHECK(pr.unique);
    CHECK(pr.max_corank == 1);
    CHECK(pr.det_poly.degree() == 4);
    CHECK(pr.generic_full_rank);
    CHECK(pr.minor_gcd.degree() == 0);

    // degenerate pencil: q' = 0
    auto zero = QuadraticForm::from_poly(PolyQ::zero(T));
    auto pz = pencil_profile(q, zero);
    CHECK_FALSE(pz.unique);
    CHECK(pz.max_corank == 4);

    // double eigenvalue, one Jordan block per eigenvalue: still unique
    auto M = model_matrix({2, 1, 1});
    auto A = jordan_partner({2, 1, 1}, {Rat(3), Rat(5), Rat(7)});
    auto qm = QuadraticForm::from_matrix(T, M);
    auto qa = QuadraticForm::from_matrix(T, A);
    auto pj = pencil_profile(qm, qa);
    CHECK(pj.unique);
    // discriminant has the double root -3
    CHECK(is_zero(pj.det_poly.eval(Rat(-3))));
    CHECK(is_zero(deflate(pj.det_poly, Rat(-3)).eval(Rat(-3))));

    // same eigenvalue on two blocks: corank 2, not unique
    auto A2 = jordan_partner({2, 1, 1}, {Rat(3), Rat(3), Rat(7)});
    CHECK_FALSE(pencil_profile(qm, QuadraticForm::from_matrix(T, A2)).unique);
    CHECK(pencil_profile(qm, QuadraticForm::from_matrix(T, A2)).max_corank == 2);
}

TEST_CASE("eigensimplex: diagonal case returns the coordinate simplex") {
    auto T = indexed_ring('y', 3);
    auto S = indexed_ring('x', 3);
    auto q = QuadraticForm::parse("1/2*y1^2 + 1/2*y2^2 + 1/2*y3^2", T);
    auto qp = QuadraticForm::parse("1/2*y1^2 + y2^2 + 3/2*y3^2", T);
    ApolarScheme g = eigensimplex(q, qp, S, true);
    CHECK(g.repr() == ApolarScheme::Repr::Points);
    std::vector<std::vector<Rat>> expect = {{Rat(1), Rat(0), Rat(0)},
                                            {Rat(0), Rat(1), Rat(0)},
                                            {Rat(0), Rat(0), Rat(1)}};
    auto pts = g.points();
    std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) {
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    });
    std::sort(expect.begin(), expect.end(), [](const auto& a, const auto& b) {
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    });
    CHECK(pts == expect);
    CHECK(is_apolar(g, q));
    CHECK(is_apolar(g, qp));
}

TEST_CASE("eigensimplex: conjugation equivariance") {
    auto T = indexed_ring('y', 4);
    auto S = indexed_ring('x', 4);
    auto q = QuadraticForm::parse("1/2*y1^2 + 1/2*y2^2 + 1/2*y3^2 + 1/2*y4^2", T);
    auto qp = QuadraticForm::parse("1/2*y1^2 + y2^2 + 3/2*y3^2 + 5/2*y4^2", T);
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        MatrixQ r = cayley_orthogonal(q.matrix(), seed);
        // congruence by R preserves q; points move by R^t
        MatrixQ a2 = r.transpose() * qp.matrix() * r;
        auto qc = QuadraticForm::from_matrix(T, a2);
        ApolarScheme g = eigensimplex(q, qc, S, true);
        ApolarScheme base = eigensimplex(q, qp, S, true);
        MatrixQ pmap = r.transpose();
        std::vector<std::vector<Rat>> moved;
        for (const auto& v : base.points()) moved.push_back(normalize_point(pmap.apply(v)));
        auto sortpts = [](std::vector<std::vector<Rat>> v) {
            std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
                for (std::size_t i = 0; i < a.size(); ++i)
                    if (a[i] != b[i]) return a[i] < b[i];
                return false;
            });
            return v;
        };
        CHECK(sortpts(moved) == sortpts(g.points()));
        CHECK(transport_ideal(base.ideal(), pmap, S) == g.ideal());
    }
}

TEST_CASE("eigensimplex: nilpotent model returns the curvilinear ideal") {
    for (std::size_t n : {3, 4, 5}) {
        auto T = indexed_ring('y', n);
        auto S = indexed_ring('x', n);
        auto [gamma, qmax] = curvilinear_scheme({n}, S, T);
        // q' has the symmetric nilpotent matrix of the shift
        auto A = jordan_partner({n}, {Rat(0)});
        auto qp = QuadraticForm::from_matrix(T, A);
        // A M^{-1} is nilpotent of rank n-1
        MatrixQ g = A * inverse_matrix(qmax.matrix());
        MatrixQ p = g;
        for (std::size_t k = 1; k < n; ++k) p = p * g;
        bool zero = true;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (!is_zero(p.at(i, j))) zero = false;
        CHECK(zero);
        CHECK(row_reduce(g).rank == n - 1);

        ApolarScheme got = eigensimplex(qmax, qp, S);
        CHECK(got.repr() == ApolarScheme::Repr::Ideal);
        CHECK(got.ideal() == gamma.ideal());
        CHECK(is_apolar(got, qmax));
        CHECK(is_apolar(got, qp));
    }
}

TEST_CASE("eigensimplex: mixed blocks match block curvilinear schemes") {
    std::vector<std::vector<std::size_t>> shapes = {{2, 1}, {2, 2}, {3, 1}, {2, 1, 1}, {3, 2}};
    for (const auto& lengths : shapes) {
        std::size_t n = 0;
        for (auto k : lengths) n += k;
        auto T = indexed_ring('y', n);
        auto S = indexed_ring('x', n);
        std::vector<Rat> mus;
        for (std::size_t b = 0; b < lengths.size(); ++b) mus.push_back(Rat(3 * (long)b + 1));
        auto M = model_matrix(lengths);
        auto A = jordan_partner(lengths, mus);
        auto q = QuadraticForm::from_matrix(T, M);
        auto qp = QuadraticForm::from_matrix(T, A);
        CHECK(pencil_profile(q, qp).unique);
        ApolarScheme got = eigensimplex(q, qp, S);
        auto [gamma, qmax] = curvilinear_scheme(lengths, S, T);
        CHECK(qmax.matrix() == M);
        CHECK(got.ideal() == gamma.ideal());
        // apolar to every member of the pencil, not just the two spanning forms
        for (long c : {-2L, 1L, 3L}) {
            auto member = QuadraticForm::from_matrix(T, A + M * Rat(c));
            CHECK(is_apolar(got, member));
        }
    }
}

TEST_CASE("eigensimplex recovers a sampled simplex from its weighted pencil") {
    // build q' = sum c_i mu_i l_i^2 from a random simplex q = sum c_i l_i^2
    // with distinct rational mu_i; the unique common apolar subscheme of
    // <q, q'> must be exactly the sampled point set
    for (std::size_t n : {3, 4}) {
        auto T = indexed_ring('y', n);
        auto S = indexed_ring('x', n);
        auto q = standard_quadric(n, T);
        for (std::uint64_t seed = 0; seed < 8; ++seed) {
            ApolarScheme g = random_polar_simplex(q, seed, S);
            MatrixQ a(n, n);
            for (std::size_t i = 0; i < n; ++i) {
                Rat mu(static_cast<long>(2 * i + 1));
                const auto& u = g.points()[i];
                Rat w = g.weights()[i] * mu;
                for (std::size_t r = 0; r < n; ++r)
                    for (std::size_t c = 0; c < n; ++c) a.at(r, c) += 2 * w * u[r] * u[c];
            }
            auto qp = QuadraticForm::from_matrix(T, a);
            ApolarScheme back = eigensimplex(q, qp, S, true);
            auto sortpts = [](std::vector<std::vector<Rat>> v) {
                std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) {
                    for (std::size_t i = 0; i < x.size(); ++i)
                        if (x[i] != y[i]) return x[i] < y[i];
                    return false;
                });
                return v;
            };
            CHECK(sortpts(back.points()) == sortpts(g.points()));
            CHECK(back.ideal() == g.ideal());
        }
    }
}

TEST_CASE("eigensimplex: errors") {
    auto T = indexed_ring('y', 4);
    auto S = indexed_ring('x', 4);
    auto q = QuadraticForm::parse("1/2*y1^2 + 1/2*y2^2 + 1/2*y3^2 + 1/2*y4^2", T);
    auto bad = QuadraticForm::parse("1/2*y3^2 + y4^2", T);
    try {
        eigensimplex(q, bad, S);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotUnique);
    }
    // irrational spectrum: A = [[0,1],[1,0]] extended has eigenvalues +-1 fine;
    // use y1*y2 + 2y3^2-ish with non-square discriminant: eigenvalues of
    // diag-block [[0,1],[1,0]] are rational; pick [[1,1],[1,3]]: eigenvalues 2+-sqrt2
    MatrixQ a(4, 4);
    a.at(0, 0) = 1;
    a.at(0, 1) = 1;
    a.at(1, 0) = 1;
    a.at(1, 1) = 3;
    a.at(2, 2) = 5;
    a.at(3, 3) = 7;
    auto qp = QuadraticForm::from_matrix(T, a);
    try {
        eigensimplex(q, qp, S, true);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::IrrationalSpectrum);
    }
    // without the points requirement it falls back to the ideal
    ApolarScheme g = eigensimplex(q, qp, S);
    CHECK(g.repr() == ApolarScheme::Repr::Ideal);
    CHECK(g.ideal().dim() == 6);
    CHECK(is_apolar(g, q));
    CHECK(is_apolar(g, qp));
}

TEST_CASE("eigenvector criterion for vanishing at a point, both directions") {
    // vanishing of v^t (Lambda A M^{-1} - M^{-1} A Lambda) v for all basis
    // skew forms  <=>  v is an eigenvector of A M^{-1}
    std::vector<std::vector<std::size_t>> shapes = {{1, 1, 1}, {2, 1}, {3}, {2, 2}, {4, 1}};
    for (const auto& lengths : shapes) {
        std::size_t n = 0;
        for (auto k : lengths) n += k;
        auto T = indexed_ring('y', n);
        auto S = indexed_ring('x', n);
        std::vector<Rat> mus;
        for (std::size_t b = 0; b < lengths.size(); ++b) mus.push_back(Rat(2 * (long)b + 1));
        auto q = QuadraticForm::from_matrix(T, model_matrix(lengths));
        auto qp = QuadraticForm::from_matrix(T, jordan_partner(lengths, mus));
        MatrixQ g = qp.matrix() * inverse_matrix(q.matrix());

        auto vanishes_all = [&](const std::vector<Rat>& v) {
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j) {
                    auto b = tau(q, qp, SkewForm::wedge(n, i, j), S);
                    if (!is_zero(b.poly().eval(v, Rat(1)))) return false;
                }
            return true;
        };
        auto is_eigen = [&](const std::vector<Rat>& v) {
            auto gv = g.apply(v);
            // gv parallel to v?
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    if (gv[i] * v[j] != gv[j] * v[i]) return false;
            return true;
        };
        Rng rng(n * 100 + 7);
        int eigens_seen = 0;
        for (int trial = 0; trial < 60; ++trial) {
            std::vector<Rat> v(n);
            bool nonzero = false;
            for (auto& x : v) {
                x = Rat(rng.range(-3, 3));
                if (!is_zero(x)) nonzero = true;
            }
            if (!nonzero) continue;
            CHECK(vanishes_all(v) == is_eigen(v));
        }
        // and explicitly on true eigenvectors (kernel chains of each block)
        std::size_t off = 0;
        for (auto k : lengths) {
            std::vector<Rat> v(n, Rat(0));
            v[off] = 1;  // head of the Jordan chain
            CHECK(is_eigen(v));
            CHECK(vanishes_all(v));
            ++eigens_seen;
            off += k;
        }
        CHECK(eigens_seen == (int)lengths.size());
    }
}

TEST_CASE("curvilinear_scheme: spec examples") {
    // lengths (1,...,1): coordinate simplex and q = sum y_i^2
    auto S3 = indexed_ring('x', 3);
    auto T3 = indexed_ring('y', 3);
    auto [simplex, qdiag] = curvilinear_scheme({1, 1, 1}, S3, T3);
    CHECK(qdiag.poly() == parse_poly("y1^2 + y2^2 + y3^2", T3));
    GradedPiece s23(S3, 2);
    CHECK(simplex.ideal() == span_of_polys(s23, {parse_poly("x1*x2", S3),
                                                 parse_poly("x1*x3", S3),
                                                 parse_poly("x2*x3", S3)}));

    // lengths (n): the catalecticant minors and pairing quadric
    auto S4 = indexed_ring('x', 4);
    auto T4 = indexed_ring('y', 4);
    auto [curv, qmax] = curvilinear_scheme({4}, S4, T4);
    CHECK(qmax.poly() == parse_poly("2*y1*y4 + 2*y2*y3", T4));
    GradedPiece s24(S4, 2);
    // minors of [[x1,x2,x3,x4],[x2,x3,x4,0]]
    std::vector<PolyQ> minors = {
        parse_poly("x1*x3 - x2^2", S4), parse_poly("x1*x4 - x2*x3", S4),
        parse_poly("-x2*x4", S4),       parse_poly("x2*x4 - x3^2", S4),
        parse_poly("-x3*x4", S4),       parse_poly("-x4^2", S4)};
    CHECK(curv.ideal() == span_of_polys(s24, minors));
    CHECK(is_apolar(curv, qmax));

    // lengths (2,1): length 3 via the Hilbert function in degrees <= 3
    auto [mixed, qm] = curvilinear_scheme({2, 1}, S3, T3);
    CHECK(is_apolar(mixed, qm));
    GradedPiece s1(S3, 1), s3(S3, 3);
    // HF(2) = dim S_2 - 3 = 3; HF(3) = dim S_3 - dim S_1*I_2 = 10 - 7 = 3
    std::vector<PolyQ> deg3;
    for (const auto& g : mixed.generators())
        for (std::size_t v = 0; v < 3; ++v) deg3.push_back(g * PolyQ::variable(S3, v, Rat(1)));
    Subspace i3 = span_of_polys(s3, deg3);
    CHECK(s3.dim() - i3.dim() == 3);
}

TEST_CASE("pencil ideal equivalence: dim tau_image = C(n,2) iff unique") {
    // randomized mix of diagonal / conjugated / Jordan / corank-2 data
    for (std::size_t n : {3, 4}) {
        auto T = indexed_ring('y', n);
        auto S = indexed_ring('x', n);
        Rng rng(n);
        for (int trial = 0; trial < 25; ++trial) {
            QuadraticForm q, qp;
            int kind = trial % 4;
            if (kind == 0) {
                // diagonal, possibly with repeats
                MatrixQ m = MatrixQ::identity(n, Rat(1)), a(n, n);
                for (std::size_t i = 0; i < n; ++i) a.at(i, i) = Rat(rng.range(0, 2));
                q = QuadraticForm::from_matrix(T, m);
                qp = QuadraticForm::from_matrix(T, a);
            } else if (kind == 1) {
                MatrixQ m = MatrixQ::identity(n, Rat(1)), a(n, n);
                for (std::size_t i = 0; i < n; ++i) a.at(i, i) = Rat((long)i + 1);
                MatrixQ r = cayley_orthogonal(m, rng.next());
                q = QuadraticForm::from_matrix(T, m);
                qp = QuadraticForm::from_matrix(T, r.transpose() * a * r);
            } else {
                // jordan blocks with random eigenvalues (repeats allowed)
                std::vector<std::size_t> lengths;
                std::size_t left = n;
                while (left > 0) {
                    std::size_t k = 1 + rng.below(left);
                    lengths.push_back(k);
                    left -= k;
                }
                std::vector<Rat> mus;
                for (std::size_t b = 0; b < lengths.size(); ++b) mus.push_back(Rat(rng.range(0, 2)));
                q = QuadraticForm::from_matrix(T, model_matrix(lengths));
                qp = QuadraticForm::from_matrix(T, jordan_partner(lengths, mus));
            }
            auto prof = pencil_profile(q, qp);
            Subspace img = tau_image(q, qp, S);
            CHECK((img.dim() == n * (n - 1) / 2) == prof.unique);
        }
    }
}
