#pragma once

#include "vps/apolar.hpp"
#include "vps/unipoly.hpp"

namespace vps {

// omega in Wedge^2 S_1 with its skew-symmetric matrix; the basis element
// x_i ^ x_j maps to E_ij - E_ji.
struct SkewForm {
    std::size_t n = 0;
    MatrixQ lambda;

    static SkewForm wedge(std::size_t n, std::size_t i, std::size_t j) {
        require(i < j && j < n, ErrorKind::DimensionMismatch, "wedge indices");
        SkewForm w;
        w.n = n;
        w.lambda = MatrixQ(n, n);
        w.lambda.at(i, j) = 1;
        w.lambda.at(j, i) = -1;
        return w;
    }

    static SkewForm from_matrix(MatrixQ m) {
        std::size_t n = m.rows();
        require(m.cols() == n, ErrorKind::DimensionMismatch, "skew matrix must be square");
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j)
                require(m.at(i, j) == -m.at(j, i), ErrorKind::DimensionMismatch,
                        "matrix is not skew-symmetric");
        return SkewForm{n, std::move(m)};
    }
};

// The Mukai form: the quadric in q-perp with symmetric matrix
//   Lambda M_{q'} M_q^{-1}  -  M_q^{-1} M_{q'} Lambda.
// Only the span of the image is contractual; this scalar normalization
// is fixed once here.
inline QuadraticForm tau(const QuadraticForm& q, const QuadraticForm& qp, const SkewForm& w,
                         const RingPtr& sring) {
    require(q.nondegenerate(), ErrorKind::DegenerateForm, "tau needs nondegenerate q");
    require(qp.nvars() == q.nvars() && w.n == q.nvars(), ErrorKind::DimensionMismatch,
            "tau operand sizes");
    MatrixQ minv = inverse_matrix(q.matrix());
    const MatrixQ& a = qp.matrix();
    MatrixQ b = w.lambda * a * minv - minv * a * w.lambda;
    return QuadraticForm::from_matrix(sring, b);
}

// Span of tau(q, q', x_i ^ x_j) over the basis skew forms; for pencils
// with a unique common apolar subscheme this is its full quadric ideal.
inline Subspace tau_image(const QuadraticForm& q, const QuadraticForm& qp, const RingPtr& sring) {
    std::size_t n = q.nvars();
    GradedPiece s2(sring, 2);
    std::vector<PolyQ> gens;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            gens.push_back(tau(q, qp, SkewForm::wedge(n, i, j), sring).poly());
    return span_of_polys(s2, gens);
}

// Rank stratification data of the pencil <q, q'>: the discriminant
// det(M_{q'} + lambda M_q), the gcd of its (n-1)-minors, the maximal
// corank attained on the pencil, and the uniqueness flag (a unique
// common apolar subscheme exists iff the corank never exceeds 1).
struct PencilProfile {
    UniPoly det_poly;
    UniPoly minor_gcd;       // gcd of all (n-1) x (n-1) minors
    std::size_t max_corank = 0;
    bool unique = false;
    bool generic_full_rank = false;
};

namespace detail {

// gcd over all s x s minors of A + lambda M, via interpolation
inline UniPoly minor_gcd_of_size(const MatrixQ& a, const MatrixQ& m, std::size_t s) {
    std::size_t n = a.rows();
    std::vector<Rat> xs;
    for (std::size_t t = 0; t <= s; ++t) xs.push_back(Rat(static_cast<long>(t)));
    std::vector<MatrixQ> at;
    for (const auto& x : xs) at.push_back(a + m * x);

    std::vector<std::size_t> rows(s), cols(s);
    UniPoly g;  // zero
    std::function<bool(std::vector<std::size_t>&, std::size_t)> next =
        [&](std::vector<std::size_t>& sel, std::size_t limit) {
            std::size_t i = sel.size();
            while (i-- > 0) {
                if (sel[i] + (sel.size() - i) < limit) {
                    ++sel[i];
                    for (std::size_t j = i + 1; j < sel.size(); ++j) sel[j] = sel[j - 1] + 1;
                    return true;
                }
            }
            return false;
        };
    for (std::size_t i = 0; i < s; ++i) rows[i] = i;
    do {
        for (std::size_t i = 0; i < s; ++i) cols[i] = i;
        do {
            std::vector<Rat> ys;
            for (std::size_t t = 0; t < at.size(); ++t) {
                MatrixQ sub(s, s);
                for (std::size_t i = 0; i < s; ++i)
                    for (std::size_t j = 0; j < s; ++j) sub.at(i, j) = at[t].at(rows[i], cols[j]);
                ys.push_back(det(sub));
            }
            UniPoly minor = interpolate(xs, ys);
            g = unipoly_gcd(g, minor);
            if (!g.zero() && g.degree() == 0) return g;  // already trivial
        } while (next(cols, n));
    } while (next(rows, n));
    return g;
}

}  // namespace detail

inline PencilProfile pencil_profile(const QuadraticForm& q, const QuadraticForm& qp) {
    require(q.nondegenerate(), ErrorKind::DegenerateForm, "pencil_profile needs nondegenerate q");
    require(qp.nvars() == q.nvars(), ErrorKind::DimensionMismatch, "pencil operand sizes");
    std::size_t n = q.nvars();
    const MatrixQ &a = qp.matrix(), &m = q.matrix();

    PencilProfile pr;
    {
        std::vector<Rat> xs, ys;
        for (std::size_t t = 0; t <= n; ++t) {
            xs.push_back(Rat(static_cast<long>(t)));
            ys.push_back(det(a + m * xs.back()));
        }
        pr.det_poly = interpolate(xs, ys);
    }
    pr.generic_full_rank = pr.det_poly.degree() == static_cast<int>(n);
    pr.minor_gcd = n >= 2 ? detail::minor_gcd_of_size(a, m, n - 1) : UniPoly{};

    // corank >= k at some member iff all (n-k+1)-minors share a root
    pr.max_corank = 1;  // det always has a root over the closure
    for (std::size_t k = 2; k <= n; ++k) {
        std::size_t s = n - k + 1;
        UniPoly g = (s == n - 1) ? pr.minor_gcd : detail::minor_gcd_of_size(a, m, s);
        if (g.zero() || g.degree() >= 1)
            pr.max_corank = k;
        else
            break;
    }
    pr.unique = pr.max_corank <= 1;
    return pr;
}

// The unique common apolar subscheme of the pencil.  Path A (rational
// distinct spectrum of M_{q'} M_q^{-1}) returns points; otherwise the
// tau-image ideal is returned.  With require_points the rational-
// spectrum condition is an error instead of a fallback.
inline ApolarScheme eigensimplex(const QuadraticForm& q, const QuadraticForm& qp,
                                 const RingPtr& sring, bool require_points = false) {
    require(q.nondegenerate(), ErrorKind::DegenerateForm, "eigensimplex needs nondegenerate q");
    std::size_t n = q.nvars();
    PencilProfile prof = pencil_profile(q, qp);
    require(prof.unique, ErrorKind::NotUnique,
            "pencil has a member of corank >= 2, common apolar subscheme is not unique");

    MatrixQ g = qp.matrix() * inverse_matrix(q.matrix());
    // char poly det(g - lambda I) by interpolation
    std::vector<Rat> xs, ys;
    MatrixQ id = MatrixQ::identity(n, Rat(1));
    for (std::size_t t = 0; t <= n; ++t) {
        xs.push_back(Rat(static_cast<long>(t)));
        ys.push_back(det(g - id * xs.back()));
    }
    UniPoly chi = interpolate(xs, ys);
    std::vector<Rat> roots = rational_roots(chi);
    bool distinct_rational = roots.size() == n;
    for (std::size_t i = 0; i < roots.size() && distinct_rational; ++i)
        for (std::size_t j = i + 1; j < roots.size(); ++j)
            if (roots[i] == roots[j]) distinct_rational = false;

    if (distinct_rational) {
        std::vector<std::vector<Rat>> pts;
        for (const auto& lam : roots) {
            auto rr = row_reduce(g - id * lam);
            require(rr.kernel.rows() == 1, ErrorKind::Internal, "eigenspace dimension != 1");
            pts.push_back(rr.kernel.row(0));
        }
        return ApolarScheme::from_points(std::move(pts), sring);
    }
    require(!require_points, ErrorKind::IrrationalSpectrum,
            "spectrum is not rational with distinct roots");
    return ApolarScheme::from_ideal(n, tau_image(q, qp, sring), sring);
}

// The standard curvilinear scheme with component lengths n_1..n_r: the
// ideal of 2x2 minors of the per-block catalecticant rows plus the
// cross-block products, together with the maximal rank quadric
// sum_i sum_k y_{(i,k)} y_{(i,n_i+1-k)} it is apolar to.
inline std::pair<ApolarScheme, QuadraticForm> curvilinear_scheme(
    const std::vector<std::size_t>& lengths, const RingPtr& sring, const RingPtr& tring) {
    std::size_t n = 0;
    for (auto k : lengths) {
        require(k >= 1, ErrorKind::DimensionMismatch, "component lengths must be >= 1");
        n += k;
    }
    require(sring->nvars() == n && tring->nvars() == n, ErrorKind::DimensionMismatch,
            "ring sizes must match the total length");

    auto var = [&](std::size_t i) { return PolyQ::variable(sring, i, Rat(1)); };
    std::vector<PolyQ> gens;
    std::vector<std::size_t> offset;
    std::size_t off = 0;
    for (auto k : lengths) {
        offset.push_back(off);
        // 2 x n_i matrix: top row x_1..x_{n_i}, bottom row x_2..x_{n_i}, 0
        auto top = [&](std::size_t c) { return var(off + c); };
        auto bot = [&](std::size_t c) {
            return c + 1 < k ? var(off + c + 1) : PolyQ::zero(sring);
        };
        for (std::size_t c1 = 0; c1 < k; ++c1)
            for (std::size_t c2 = c1 + 1; c2 < k; ++c2)
                gens.push_back(top(c1) * bot(c2) - top(c2) * bot(c1));
        off += k;
    }
    for (std::size_t b1 = 0; b1 < lengths.size(); ++b1)
        for (std::size_t b2 = b1 + 1; b2 < lengths.size(); ++b2)
            for (std::size_t i = 0; i < lengths[b1]; ++i)
                for (std::size_t j = 0; j < lengths[b2]; ++j)
                    gens.push_back(var(offset[b1] + i) * var(offset[b2] + j));

    PolyQ qp(tring);
    for (std::size_t b = 0; b < lengths.size(); ++b)
        for (std::size_t k = 1; k <= lengths[b]; ++k) {
            Expo e(n, 0);
            e[offset[b] + k - 1] += 1;
            e[offset[b] + lengths[b] - k] += 1;
            qp.add_term(e, Rat(1));
        }
    QuadraticForm q = QuadraticForm::from_poly(qp);

    GradedPiece s2(sring, 2);
    ApolarScheme g = ApolarScheme::from_ideal(n, span_of_polys(s2, gens), sring);
    require(is_apolar(g, q), ErrorKind::Internal, "curvilinear scheme failed apolarity");
    return {g, q};
}

}  // namespace vps
