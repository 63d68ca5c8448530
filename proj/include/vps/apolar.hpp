#pragma once

#include "vps/algebra.hpp"
#include "vps/quadratic_form.hpp"
#include "vps/rng.hpp"

namespace vps {

// Canonical representative of a projective point: first nonzero
// coordinate scaled to 1.
inline std::vector<Rat> normalize_point(std::vector<Rat> v) {
    for (const auto& x : v) {
        if (!is_zero(x)) {
            Rat inv = 1 / x;
            for (auto& y : v) y *= inv;
            return v;
        }
    }
    fail(ErrorKind::ZeroVector, "projective point has no nonzero coordinate");
}

// The degree-2 part of the ideal of a set of n distinct points spanning
// P(T_1): the kernel of evaluation.  For points in linearly general
// position the dimension is C(n,2).
inline Subspace ideal_of_points(const std::vector<std::vector<Rat>>& points,
                                const GradedPiece& s2) {
    std::size_t n = s2.ring->nvars();
    require(!points.empty(), ErrorKind::DegeneratePoints, "no points");
    std::vector<std::vector<Rat>> norm;
    for (const auto& p : points) {
        require(p.size() == n, ErrorKind::DimensionMismatch, "point coordinate length");
        norm.push_back(normalize_point(p));
    }
    for (std::size_t i = 0; i < norm.size(); ++i)
        for (std::size_t j = i + 1; j < norm.size(); ++j)
            require(norm[i] != norm[j], ErrorKind::DegeneratePoints, "points are not distinct");
    MatrixQ coords(norm.size(), n);
    for (std::size_t i = 0; i < norm.size(); ++i) coords.set_row(i, norm[i]);
    require(row_reduce(coords).rank == n, ErrorKind::DegeneratePoints,
            "points do not span P(T_1)");

    MatrixQ eval(norm.size(), s2.dim());
    for (std::size_t i = 0; i < norm.size(); ++i)
        for (std::size_t j = 0; j < s2.dim(); ++j) {
            Rat v(1);
            const Expo& e = s2.basis[j];
            for (std::size_t k = 0; k < n; ++k)
                for (unsigned t = 0; t < e[k]; ++t) v *= norm[i][k];
            eval.at(i, j) = v;
        }
    auto rr = row_reduce(eval);
    return Subspace::from_rows(s2.dim(), rr.kernel);
}

// A length-n apolar subscheme, as points or as its quadric ideal.  The
// ideal is always materialized so predicates work uniformly.
class ApolarScheme {
public:
    enum class Repr { Points, Ideal };

    static ApolarScheme from_points(std::vector<std::vector<Rat>> pts, const RingPtr& sring,
                                    std::vector<Rat> weights = {}) {
        ApolarScheme g;
        g.n_ = sring->nvars();
        g.repr_ = Repr::Points;
        g.sring_ = sring;
        g.s2_ = GradedPiece(sring, 2);
        for (auto& p : pts) g.points_.push_back(normalize_point(std::move(p)));
        g.weights_ = std::move(weights);
        require(g.points_.size() == g.n_, ErrorKind::DegeneratePoints,
                "expected exactly n points");
        g.ideal_ = ideal_of_points(g.points_, g.s2_);
        require(g.ideal_.dim() == g.n_ * (g.n_ - 1) / 2, ErrorKind::DegeneratePoints,
                "points do not impose independent conditions on quadrics");
        return g;
    }

    static ApolarScheme from_ideal(std::size_t n, const Subspace& ideal, const RingPtr& sring) {
        ApolarScheme g;
        g.n_ = n;
        g.repr_ = Repr::Ideal;
        g.sring_ = sring;
        g.s2_ = GradedPiece(sring, 2);
        require(ideal.ambient_dim() == g.s2_.dim(), ErrorKind::DimensionMismatch,
                "ideal lives in the wrong graded piece");
        require(ideal.dim() == n * (n - 1) / 2, ErrorKind::DimensionMismatch,
                "quadric ideal of a length-n scheme must have dimension C(n,2)");
        g.ideal_ = ideal;
        return g;
    }

    std::size_t n() const { return n_; }
    Repr repr() const { return repr_; }
    const RingPtr& sring() const { return sring_; }
    const GradedPiece& s2() const { return s2_; }
    const Subspace& ideal() const { return ideal_; }
    const std::vector<std::vector<Rat>>& points() const {
        require(repr_ == Repr::Points, ErrorKind::Internal, "scheme has no point representation");
        return points_;
    }
    const std::vector<Rat>& weights() const { return weights_; }

    std::vector<PolyQ> generators() const { return polys_of_subspace(s2_, ideal_); }

private:
    std::size_t n_ = 0;
    Repr repr_ = Repr::Ideal;
    RingPtr sring_;
    GradedPiece s2_;
    Subspace ideal_;
    std::vector<std::vector<Rat>> points_;
    std::vector<Rat> weights_;
};

// Apolarity lemma test: I_{G,2} contained in q-perp, i.e. every ideal
// generator annihilates q.
inline bool is_apolar(const ApolarScheme& g, const QuadraticForm& q) {
    require(q.nvars() == g.n(), ErrorKind::DimensionMismatch, "variable count mismatch");
    for (const auto& D : g.generators())
        if (!diff_apply(D, q.poly()).is_zero()) return false;
    return true;
}

// Unique decomposition q = q1 + q2 with q_i supported on (U_i)^2, for a
// direct sum T_1 = U_1 + U_2 (Prop-style orthogonal decomposition).
inline std::pair<QuadraticForm, QuadraticForm> decompose_form(const QuadraticForm& q,
                                                              const Subspace& u1,
                                                              const Subspace& u2) {
    std::size_t n = q.nvars();
    require(u1.ambient_dim() == n && u2.ambient_dim() == n, ErrorKind::DimensionMismatch,
            "U_i must be subspaces of T_1");
    require(u1.dim() + u2.dim() == n && intersect(u1, u2).dim() == 0, ErrorKind::NotDirectSum,
            "T_1 is not the direct sum of U_1 and U_2");

    GradedPiece t2(q.ring(), 2);
    auto square_span = [&](const Subspace& u) {
        std::vector<PolyQ> prods;
        std::vector<PolyQ> lin;
        for (std::size_t i = 0; i < u.dim(); ++i) {
            PolyQ li(q.ring());
            for (std::size_t j = 0; j < n; ++j) {
                Expo e(n, 0);
                e[j] = 1;
                li.add_term(e, u.basis().at(i, j));
            }
            lin.push_back(li);
        }
        for (std::size_t i = 0; i < lin.size(); ++i)
            for (std::size_t j = i; j < lin.size(); ++j) prods.push_back(lin[i] * lin[j]);
        return prods;
    };

    auto p1 = square_span(u1);
    auto p2 = square_span(u2);
    MatrixQ system(t2.dim(), p1.size() + p2.size());
    for (std::size_t c = 0; c < p1.size(); ++c) {
        auto v = t2.to_vector(p1[c]);
        for (std::size_t r = 0; r < t2.dim(); ++r) system.at(r, c) = v[r];
    }
    for (std::size_t c = 0; c < p2.size(); ++c) {
        auto v = t2.to_vector(p2[c]);
        for (std::size_t r = 0; r < t2.dim(); ++r) system.at(r, p1.size() + c) = v[r];
    }
    // solve system * x = vec(q)
    auto target = t2.to_vector(q.poly());
    MatrixQ aug(t2.dim(), system.cols() + 1);
    for (std::size_t r = 0; r < t2.dim(); ++r) {
        for (std::size_t c = 0; c < system.cols(); ++c) aug.at(r, c) = system.at(r, c);
        aug.at(r, system.cols()) = target[r];
    }
    auto rr_sys = row_reduce(system);
    auto rr_aug = row_reduce(aug);
    require(rr_sys.rank == rr_aug.rank, ErrorKind::NoDecomposition,
            "q does not lie in (U_1)^2 + (U_2)^2");
    // read a particular solution off the augmented rref
    std::vector<Rat> x(system.cols(), Rat(0));
    for (std::size_t k = 0; k < rr_aug.rank; ++k) {
        std::size_t c = rr_aug.pivots[k];
        require(c < system.cols(), ErrorKind::NoDecomposition, "inconsistent linear system");
        x[c] = rr_aug.rref.at(k, system.cols());
    }
    PolyQ q1(q.ring()), q2(q.ring());
    for (std::size_t c = 0; c < p1.size(); ++c) q1 += p1[c] * x[c];
    for (std::size_t c = 0; c < p2.size(); ++c) q2 += p2[c] * x[p1.size() + c];
    return {QuadraticForm::from_poly(q1), QuadraticForm::from_poly(q2)};
}

// I_{G,2} meets l*S_1 nontrivially?  (membership test for the special
// Pluecker divisor H_{l}.)
inline bool meets_hyperplane(const ApolarScheme& g, const PolyQ& l) {
    require(!l.is_zero(), ErrorKind::ZeroForm, "hyperplane form is zero");
    require(l.is_homogeneous(1), ErrorKind::DimensionMismatch, "l must be linear");
    const GradedPiece& s2 = g.s2();
    std::vector<PolyQ> prods;
    for (std::size_t j = 0; j < g.n(); ++j)
        prods.push_back(l * PolyQ::variable(l.ring(), j, Rat(1)));
    Subspace lS1 = span_of_polys(s2, prods);
    return intersect(g.ideal(), lS1).dim() > 0;
}

// Pluecker coordinates of G inside q-perp: the maximal minors of the
// coordinate matrix of the canonical ideal basis with respect to the
// canonical basis of q-perp, in lexicographic column-subset order,
// scaled so the first nonzero coordinate is 1.
inline std::vector<Rat> pluecker_coords(const ApolarScheme& g, const QuadraticForm& q) {
    require(q.nondegenerate(), ErrorKind::DegenerateForm, "q must be nondegenerate");
    require(is_apolar(g, q), ErrorKind::NotApolar, "scheme is not apolar to q");
    Subspace qperp = perp_space(q, g.s2());
    std::size_t rows = g.ideal().dim(), cols = qperp.dim();
    MatrixQ coords(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        auto c = qperp.coordinates(g.ideal().basis().row(i));
        require(c.has_value(), ErrorKind::NotApolar, "ideal not contained in q-perp");
        coords.set_row(i, *c);
    }
    // enumerate column subsets of size `rows` in lexicographic order
    std::vector<Rat> out;
    std::vector<std::size_t> sel(rows);
    for (std::size_t i = 0; i < rows; ++i) sel[i] = i;
    auto emit = [&]() {
        MatrixQ minor(rows, rows);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < rows; ++j) minor.at(i, j) = coords.at(i, sel[j]);
        out.push_back(det(minor));
    };
    while (true) {
        emit();
        bool advanced = false;
        std::size_t i = rows;
        while (i-- > 0) {
            if (sel[i] + (rows - i) < cols) {
                ++sel[i];
                for (std::size_t j = i + 1; j < rows; ++j) sel[j] = sel[j - 1] + 1;
                advanced = true;
                break;
            }
        }
        if (!advanced) break;
    }
    // normalize first nonzero to 1
    for (const auto& v : out) {
        if (!is_zero(v)) {
            Rat inv = 1 / v;
            for (auto& w : out) w *= inv;
            break;
        }
    }
    return out;
}

// Symmetric Gaussian congruence: returns (C, D) with C^t M C = D diagonal.
inline std::pair<MatrixQ, MatrixQ> congruence_diagonalize(const MatrixQ& m) {
    std::size_t n = m.rows();
    MatrixQ a = m, c = MatrixQ::identity(n, Rat(1));
    auto add_col = [&](std::size_t dst, std::size_t src, const Rat& f) {
        // E = I + f * e_src e_dst^t:  col_dst += f * col_src (applied on
        // both sides of a and once on c)
        for (std::size_t i = 0; i < n; ++i) a.at(i, dst) += f * a.at(i, src);
        for (std::size_t j = 0; j < n; ++j) a.at(dst, j) += f * a.at(src, j);
        for (std::size_t i = 0; i < n; ++i) c.at(i, dst) += f * c.at(i, src);
    };
    auto swap_cols = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < n; ++r) std::swap(a.at(r, i), a.at(r, j));
        for (std::size_t r = 0; r < n; ++r) std::swap(a.at(i, r), a.at(j, r));
        for (std::size_t r = 0; r < n; ++r) std::swap(c.at(r, i), c.at(r, j));
    };
    for (std::size_t k = 0; k < n; ++k) {
        if (is_zero(a.at(k, k))) {
            bool fixed = false;
            for (std::size_t j = k + 1; j < n && !fixed; ++j)
                if (!is_zero(a.at(j, j))) {
                    swap_cols(k, j);
                    fixed = true;
                }
            if (!fixed) {
                for (std::size_t i = k; i < n && !fixed; ++i)
                    for (std::size_t j = i + 1; j < n && !fixed; ++j)
                        if (!is_zero(a.at(i, j))) {
                            add_col(i, j, Rat(1));  // makes a(i,i) = 2 a(i,j) != 0
                            swap_cols(k, i);
                            fixed = true;
                        }
            }
            require(fixed, ErrorKind::DegenerateForm, "form is degenerate");
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            if (is_zero(a.at(k, i))) continue;
            add_col(i, k, -a.at(k, i) / a.at(k, k));
        }
    }
    return {c, a};
}

// A rational M-orthogonal matrix R (R^t M R = M) from a seeded Cayley
// transform of a random skew generator K = M^{-1} S.
inline MatrixQ cayley_orthogonal(const MatrixQ& m, Rng& rng) {
    std::size_t n = m.rows();
    for (int attempt = 0; attempt < 32; ++attempt) {
        MatrixQ s(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                Rat v = make_rat(rng.range(-3, 3), rng.range(1, 3));
                s.at(i, j) = v;
                s.at(j, i) = -v;
            }
        MatrixQ k = inverse_matrix(m) * s;
        MatrixQ id = MatrixQ::identity(n, Rat(1));
        MatrixQ iplus = id + k, iminus = id - k;
        if (is_zero(det(iplus)) || is_zero(det(iminus))) continue;
        return iminus * inverse_matrix(iplus);
    }
    fail(ErrorKind::CayleySingular, "Cayley transform stayed singular after retries");
}

// A seeded random weighted polar simplex of q: n points [l_i] with
// q = sum c_i l_i^2, c_i rational.  Built from a symmetric congruence
// diagonalization conjugated by a Cayley-transform M_q-orthogonal
// matrix; apolarity of the result is the ground truth and is asserted.
inline ApolarScheme random_polar_simplex(const QuadraticForm& q, std::uint64_t seed,
                                         const RingPtr& sring) {
    require(q.nondegenerate(), ErrorKind::DegenerateForm, "q must be nondegenerate");
    std::size_t n = q.nvars();
    auto [c, d] = congruence_diagonalize(q.matrix());
    MatrixQ cinv = inverse_matrix(c);

    Rng rng(seed);
    MatrixQ r = cayley_orthogonal(q.matrix(), rng);

    MatrixQ t = inverse_matrix(r).transpose();  // point transform preserving M_q
    std::vector<std::vector<Rat>> pts;
    std::vector<Rat> weights;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Rat> u(n);
        for (std::size_t row = 0; row < n; ++row) u[row] = cinv.at(i, row);  // row i of C^{-1}
        auto v = t.apply(u);
        // normalize and absorb the scaling into the weight
        Rat scale(0);
        for (const auto& x : v)
            if (!is_zero(x)) {
                scale = x;
                break;
            }
        require(!is_zero(scale), ErrorKind::Internal, "zero simplex point");
        for (auto& x : v) x /= scale;
        pts.push_back(v);
        weights.push_back(d.at(i, i) / 2 * scale * scale);
    }
    ApolarScheme g = ApolarScheme::from_points(std::move(pts), sring, std::move(weights));
    require(is_apolar(g, q), ErrorKind::Internal, "random simplex failed apolarity post-check");
    return g;
}

}  // namespace vps
