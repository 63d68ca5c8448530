#pragma once

#include <optional>

#include "vps/matrix.hpp"
#include "vps/polynomial.hpp"

namespace vps {

// Descriptor of a graded piece R_d of a polynomial ring, with its fixed
// monomial basis in descending grevlex order.
struct GradedPiece {
    RingPtr ring;
    unsigned degree = 0;
    std::vector<Expo> basis;

    GradedPiece() = default;
    GradedPiece(RingPtr r, unsigned d) : ring(std::move(r)), degree(d) {
        basis = monomial_basis(ring->nvars(), degree);
    }

    std::size_t dim() const { return basis.size(); }

    std::size_t index_of(const Expo& e) const {
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (basis[i] == e) return i;
        fail(ErrorKind::Internal, "monomial not in graded piece");
    }

    std::vector<Rat> to_vector(const PolyQ& p) const {
        require(same_ring(p.ring(), ring), ErrorKind::DimensionMismatch, "wrong ring");
        std::vector<Rat> v(dim(), Rat(0));
        for (const auto& [e, c] : p.terms()) {
            require(total_degree(e) == degree, ErrorKind::DimensionMismatch,
                    "polynomial is not homogeneous of the piece's degree");
            v[index_of(e)] = c;
        }
        return v;
    }

    PolyQ to_poly(const std::vector<Rat>& v) const {
        require(v.size() == dim(), ErrorKind::DimensionMismatch, "coordinate length");
        PolyQ p(ring);
        for (std::size_t i = 0; i < v.size(); ++i) p.add_term(basis[i], v[i]);
        return p;
    }
};

// A linear subspace of a fixed coordinate space, held as the reduced
// row-echelon basis matrix.  Equal subspaces have identical matrices.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

    static Subspace from_rows(std::size_t ambient, const MatrixQ& rows) {
        Subspace s(ambient);
        require(rows.cols() == ambient, ErrorKind::DimensionMismatch, "ambient mismatch");
        auto rr = row_reduce(rows);
        MatrixQ b(rr.rank, ambient);
        for (std::size_t i = 0; i < rr.rank; ++i)
            for (std::size_t j = 0; j < ambient; ++j) b.at(i, j) = rr.rref.at(i, j);
        s.basis_ = b;
        s.pivots_ = rr.pivots;
        return s;
    }

    static Subspace from_vectors(std::size_t ambient, const std::vector<std::vector<Rat>>& vecs) {
        MatrixQ rows(vecs.size(), ambient);
        for (std::size_t i = 0; i < vecs.size(); ++i) rows.set_row(i, vecs[i]);
        return from_rows(ambient, rows);
    }

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const MatrixQ& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    bool contains(const std::vector<Rat>& v) const {
        // reduce v against the rref basis
        std::vector<Rat> w = v;
        for (std::size_t k = 0; k < basis_.rows(); ++k) {
            std::size_t c = pivots_[k];
            if (is_zero(w[c])) continue;
            Rat f = w[c];
            for (std::size_t j = 0; j < ambient_; ++j) w[j] -= f * basis_.at(k, j);
        }
        for (const auto& x : w)
            if (!is_zero(x)) return false;
        return true;
    }

    // Coordinates of v in the rref basis; nullopt if not contained.
    std::optional<std::vector<Rat>> coordinates(const std::vector<Rat>& v) const {
        std::vector<Rat> w = v, coords(basis_.rows(), Rat(0));
        for (std::size_t k = 0; k < basis_.rows(); ++k) {
            std::size_t c = pivots_[k];
            if (is_zero(w[c])) continue;
            Rat f = w[c];
            coords[k] = f;
            for (std::size_t j = 0; j < ambient_; ++j) w[j] -= f * basis_.at(k, j);
        }
        for (const auto& x : w)
            if (!is_zero(x)) return std::nullopt;
        return coords;
    }

    bool contains_subspace(const Subspace& other) const {
        for (std::size_t i = 0; i < other.dim(); ++i)
            if (!contains(other.basis_.row(i))) return false;
        return true;
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

    friend Subspace sum(const Subspace& a, const Subspace& b) {
        require(a.ambient_ == b.ambient_, ErrorKind::DimensionMismatch, "ambient mismatch");
        MatrixQ rows(a.dim() + b.dim(), a.ambient_);
        for (std::size_t i = 0; i < a.dim(); ++i) rows.set_row(i, a.basis_.row(i));
        for (std::size_t i = 0; i < b.dim(); ++i) rows.set_row(a.dim() + i, b.basis_.row(i));
        return from_rows(a.ambient_, rows);
    }

    // v in A cap B found via the kernel of [A^t | -B^t] pairings: solve
    // u^t A = w^t B by stacking A and B and intersecting row spaces.
    friend Subspace intersect(const Subspace& a, const Subspace& b) {
        require(a.ambient_ == b.ambient_, ErrorKind::DimensionMismatch, "ambient mismatch");
        // rows of the combined matrix: basis of A then basis of B; a kernel
        // vector (u, w) of the transpose-stack gives u^t A = -w^t B in the
        // intersection.
        std::size_t da = a.dim(), db = b.dim();
        MatrixQ stacked(a.ambient_, da + db);
        for (std::size_t j = 0; j < a.ambient_; ++j) {
            for (std::size_t i = 0; i < da; ++i) stacked.at(j, i) = a.basis_.at(i, j);
            for (std::size_t i = 0; i < db; ++i) stacked.at(j, da + i) = -b.basis_.at(i, j);
        }
        auto rr = row_reduce(stacked);
        std::vector<std::vector<Rat>> vecs;
        for (std::size_t k = 0; k < rr.kernel.rows(); ++k) {
            std::vector<Rat> v(a.ambient_, Rat(0));
            for (std::size_t i = 0; i < da; ++i) {
                const Rat& u = rr.kernel.at(k, i);
                if (is_zero(u)) continue;
                for (std::size_t j = 0; j < a.ambient_; ++j) v[j] += u * a.basis_.at(i, j);
            }
            vecs.push_back(std::move(v));
        }
        return from_vectors(a.ambient_, vecs);
    }

private:
    std::size_t ambient_ = 0;
    MatrixQ basis_;
    std::vector<std::size_t> pivots_;
};

// Subspace of a graded piece spanned by homogeneous polynomials.
inline Subspace span_of_polys(const GradedPiece& piece, const std::vector<PolyQ>& polys) {
    std::vector<std::vector<Rat>> vecs;
    vecs.reserve(polys.size());
    for (const auto& p : polys) vecs.push_back(piece.to_vector(p));
    return Subspace::from_vectors(piece.dim(), vecs);
}

inline std::vector<PolyQ> polys_of_subspace(const GradedPiece& piece, const Subspace& s) {
    std::vector<PolyQ> out;
    out.reserve(s.dim());
    for (std::size_t i = 0; i < s.dim(); ++i) out.push_back(piece.to_poly(s.basis().row(i)));
    return out;
}

}  // namespace vps
