#pragma once

#include "vps/polynomial.hpp"
#include "vps/subspace.hpp"

namespace vps {

// A quadratic form together with its symmetric matrix, with the fixed
// convention  form = 1/2 * v^t M v,  i.e.
//   M_ii = 2 * coeff(v_i^2),   M_ij = coeff(v_i v_j)  for i != j.
// With this normalization q = 1/2*sum(y_i^2) has the identity matrix and
// the inverse form of sum(alpha_i y_i^2) is sum(x_i^2 / (4 alpha_i)).
class QuadraticForm {
public:
    QuadraticForm() = default;

    static QuadraticForm from_poly(const PolyQ& p) {
        require(p.is_zero() || p.degree() == 2, ErrorKind::DimensionMismatch,
                "quadratic form must be homogeneous of degree 2");
        require(p.is_zero() || p.is_homogeneous(2), ErrorKind::DimensionMismatch,
                "quadratic form must be homogeneous of degree 2");
        QuadraticForm q;
        q.ring_ = p.ring();
        q.poly_ = p;
        std::size_t n = p.ring()->nvars();
        q.matrix_ = MatrixQ(n, n);
        for (const auto& [e, c] : p.terms()) {
            int a = -1, b = -1;
            for (std::size_t i = 0; i < n; ++i) {
                if (e[i] == 2) a = b = static_cast<int>(i);
                if (e[i] == 1) (a < 0 ? a : b) = static_cast<int>(i);
            }
            if (a == b) {
                q.matrix_.at(a, a) = 2 * c;
            } else {
                q.matrix_.at(a, b) = c;
                q.matrix_.at(b, a) = c;
            }
        }
        return q;
    }

    static QuadraticForm from_matrix(const RingPtr& ring, const MatrixQ& m) {
        std::size_t n = ring->nvars();
        require(m.rows() == n && m.cols() == n, ErrorKind::DimensionMismatch, "matrix size");
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                require(m.at(i, j) == m.at(j, i), ErrorKind::DimensionMismatch,
                        "matrix is not symmetric");
        QuadraticForm q;
        q.ring_ = ring;
        q.matrix_ = m;
        PolyQ p(ring);
        for (std::size_t i = 0; i < n; ++i) {
            Expo e(n, 0);
            e[i] = 2;
            p.add_term(e, m.at(i, i) / 2);
            for (std::size_t j = i + 1; j < n; ++j) {
                Expo f(n, 0);
                f[i] = 1;
                f[j] = 1;
                p.add_term(f, m.at(i, j));
            }
        }
        q.poly_ = p;
        return q;
    }

    static QuadraticForm parse(const std::string& text, const RingPtr& ring) {
        return from_poly(parse_poly(text, ring));
    }

    const RingPtr& ring() const { return ring_; }
    const PolyQ& poly() const { return poly_; }
    const MatrixQ& matrix() const { return matrix_; }
    std::size_t nvars() const { return ring_->nvars(); }

    bool is_zero() const { return poly_.is_zero(); }
    Rat determinant() const { return det(matrix_); }
    bool nondegenerate() const { return !vps::is_zero(determinant()); }

    // value of the form at a coordinate vector
    Rat operator()(const std::vector<Rat>& v) const {
        return poly_.eval(v, Rat(1));
    }

    friend bool operator==(const QuadraticForm& a, const QuadraticForm& b) {
        return a.poly_ == b.poly_;
    }

private:
    RingPtr ring_;
    PolyQ poly_;
    MatrixQ matrix_;
};

// The standard quadric of the affine-chart coordinates:
//   q_std = 2 y_1 y_n + y_2^2 + ... + y_{n-1}^2.
inline QuadraticForm standard_quadric(std::size_t n, const RingPtr& tring) {
    require(n >= 2, ErrorKind::UnsupportedN, "standard quadric needs n >= 2");
    PolyQ p(tring);
    Expo e(n, 0);
    e[0] = 1;
    e[n - 1] += 1;
    p.add_term(e, Rat(2));
    for (std::size_t i = 1; i + 1 < n; ++i) {
        Expo f(n, 0);
        f[i] = 2;
        p.add_term(f, Rat(1));
    }
    return QuadraticForm::from_poly(p);
}

// q-perp: the kernel of S_2 -> Q, D |-> D(q).  Dimension is dim S_2 - 1
// exactly when q != 0.
inline Subspace perp_space(const QuadraticForm& q, const GradedPiece& s2) {
    require(s2.ring->nvars() == q.nvars(), ErrorKind::DimensionMismatch,
            "S_2 and q have different variable counts");
    MatrixQ pairing(1, s2.dim());
    Expo zero(q.nvars(), 0);
    for (std::size_t j = 0; j < s2.dim(); ++j) {
        PolyQ D = PolyQ::monomial(s2.ring, s2.basis[j], Rat(1));
        PolyQ val = diff_apply(D, q.poly());
        pairing.at(0, j) = val.coeff(zero);
    }
    auto rr = row_reduce(pairing);
    return Subspace::from_rows(s2.dim(), rr.kernel);
}

// q^{-1}: the form whose matrix is M_q^{-1}, living in the dual ring.
inline QuadraticForm inverse_form(const QuadraticForm& q, const RingPtr& dual_ring) {
    require(q.nondegenerate(), ErrorKind::DegenerateForm, "inverse_form of a degenerate form");
    require(dual_ring->nvars() == q.nvars(), ErrorKind::DimensionMismatch, "dual ring size");
    return QuadraticForm::from_matrix(dual_ring, inverse_matrix(q.matrix()));
}

}  // namespace vps
