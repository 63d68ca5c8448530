#pragma once

#include "vps/quadratic_form.hpp"

namespace vps {

// Structure constants of a commutative unital algebra B of dimension n
// with distinguished basis (1, b_1, ..., b_{n-1}).  Elements are
// coordinate vectors of length n, index 0 being the unit component.
class AlgebraTable {
public:
    AlgebraTable(std::size_t n) : n_(n), table_(n > 0 ? (n - 1) * (n - 1) : 0) {}

    std::size_t dim() const { return n_; }

    // product b_i * b_j, 1-based generator indices
    const std::vector<Rat>& product(std::size_t i, std::size_t j) const {
        return table_[(i - 1) * (n_ - 1) + (j - 1)];
    }

    void set_product(std::size_t i, std::size_t j, std::vector<Rat> v) {
        require(v.size() == n_, ErrorKind::DimensionMismatch, "product vector length");
        table_[(i - 1) * (n_ - 1) + (j - 1)] = v;
        table_[(j - 1) * (n_ - 1) + (i - 1)] = std::move(v);
    }

    std::vector<Rat> mul(const std::vector<Rat>& x, const std::vector<Rat>& y) const {
        std::vector<Rat> out(n_, Rat(0));
        out[0] = x[0] * y[0];
        for (std::size_t k = 1; k < n_; ++k) out[k] = x[0] * y[k] + y[0] * x[k];
        for (std::size_t i = 1; i < n_; ++i) {
            if (is_zero(x[i])) continue;
            for (std::size_t j = 1; j < n_; ++j) {
                if (is_zero(y[j])) continue;
                const auto& p = product(i, j);
                Rat f = x[i] * y[j];
                for (std::size_t k = 0; k < n_; ++k) out[k] += f * p[k];
            }
        }
        return out;
    }

    std::vector<Rat> basis_vec(std::size_t i) const {
        std::vector<Rat> v(n_, Rat(0));
        v[i] = 1;
        return v;
    }

    bool is_associative() const {
        for (std::size_t i = 1; i < n_; ++i)
            for (std::size_t j = i; j < n_; ++j)
                for (std::size_t k = j; k < n_; ++k) {
                    auto left = mul(mul(basis_vec(i), basis_vec(j)), basis_vec(k));
                    auto right = mul(basis_vec(i), mul(basis_vec(j), basis_vec(k)));
                    if (left != right) return false;
                }
        return true;
    }

    // socle (0 : m) with m = <b_1, ..., b_{n-1}>
    Subspace socle() const {
        MatrixQ cond((n_ - 1) * n_, n_);
        for (std::size_t i = 1; i < n_; ++i) {
            // multiplication-by-b_i operator applied to unknown v
            for (std::size_t k = 0; k < n_; ++k) {
                // coefficient of basis k in v * b_i as a linear function of v
                // v = sum v_a e_a;  e_0 * b_i = b_i;  e_a * b_i = product(a,i)
                for (std::size_t a = 0; a < n_; ++a) {
                    Rat coeff(0);
                    if (a == 0) {
                        coeff = (k == i) ? Rat(1) : Rat(0);
                    } else {
                        coeff = product(a, i)[k];
                    }
                    cond.at((i - 1) * n_ + k, a) = coeff;
                }
            }
        }
        auto rr = row_reduce(cond);
        return Subspace::from_rows(n_, rr.kernel);
    }

    // Is span(b_1..b_{n-1}) a nilpotent ideal?  That is exactly "B is
    // local Artinian with maximal ideal spanned by the chosen basis".
    bool is_local() const {
        for (std::size_t i = 1; i < n_; ++i)
            for (std::size_t j = i; j < n_; ++j)
                if (!is_zero(product(i, j)[0])) return false;  // m is not an ideal
        std::vector<std::vector<Rat>> gens;
        for (std::size_t i = 1; i < n_; ++i) gens.push_back(basis_vec(i));
        Subspace power = Subspace::from_vectors(n_, gens);
        for (std::size_t round = 0; round < n_ + 1; ++round) {
            if (power.dim() == 0) return true;
            std::vector<std::vector<Rat>> next;
            for (std::size_t r = 0; r < power.dim(); ++r)
                for (std::size_t i = 1; i < n_; ++i)
                    next.push_back(mul(power.basis().row(r), basis_vec(i)));
            Subspace np = Subspace::from_vectors(n_, next);
            if (np.dim() >= power.dim()) return false;  // stabilized nonzero
            power = np;
        }
        return power.dim() == 0;
    }

    bool is_gorenstein() const { return is_local() && socle().dim() == 1; }

private:
    std::size_t n_;
    std::vector<std::vector<Rat>> table_;
};

// The quadratic form q_psi(a) = psi(pi(a^2)) on B = A_{<=1}, where pi is
// the projection onto the socle.  Rank n iff B is Gorenstein and psi is
// nonzero on the (then 1-dimensional) socle.
inline QuadraticForm gorenstein_form(const AlgebraTable& table, const std::vector<Rat>& psi,
                                     const RingPtr& ring) {
    std::size_t n = table.dim();
    require(psi.size() == n, ErrorKind::DimensionMismatch, "psi length");
    require(ring->nvars() == n, ErrorKind::DimensionMismatch, "ring size");
    require(table.is_associative(), ErrorKind::NotAssociative, "algebra is not associative");
    require(table.is_local(), ErrorKind::NotLocal, "maximal ideal is not nilpotent");
    Subspace soc = table.socle();

    // pi: match socle coordinates at the pivot positions of its rref basis
    auto project = [&](const std::vector<Rat>& v) {
        std::vector<Rat> out(n, Rat(0));
        for (std::size_t k = 0; k < soc.dim(); ++k) {
            Rat c = v[soc.pivots()[k]];
            if (is_zero(c)) continue;
            for (std::size_t j = 0; j < n; ++j) out[j] += c * soc.basis().at(k, j);
        }
        return out;
    };
    auto pair = [&](const std::vector<Rat>& a, const std::vector<Rat>& b) {
        auto p = project(table.mul(a, b));
        Rat acc(0);
        for (std::size_t j = 0; j < n; ++j) acc += psi[j] * p[j];
        return acc;
    };

    MatrixQ beta(n, n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a; b < n; ++b) {
            Rat v = pair(table.basis_vec(a), table.basis_vec(b));
            beta.at(a, b) = v;
            beta.at(b, a) = v;
        }
    return QuadraticForm::from_matrix(ring, beta * Rat(2));
}

}  // namespace vps
