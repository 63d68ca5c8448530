#pragma once

#include <map>
#include <mutex>

#include "vps/subspace.hpp"

namespace vps {

constexpr unsigned kMaxGradedDegree = 6;  // resource bound for graded pieces

// S / (ideal generated by quadrics), with exact graded pieces.  A_d is
// represented by the non-pivot monomials of the reduced ideal piece, so
// multiplication maps are plain linear algebra.
class GradedQuotient {
public:
    GradedQuotient(RingPtr ring, std::vector<PolyQ> degree2_gens)
        : ring_(std::move(ring)),
          gens_(std::move(degree2_gens)),
          cache_(std::make_shared<Cache>()) {
        for (const auto& g : gens_)
            require(g.is_zero() || g.is_homogeneous(2), ErrorKind::DimensionMismatch,
                    "ideal generators must be quadrics");
    }

    const RingPtr& ring() const { return ring_; }
    std::size_t nvars() const { return ring_->nvars(); }

    struct Piece {
        GradedPiece ambient;
        Subspace ideal;
        std::vector<std::size_t> quotient_basis;  // non-pivot monomial indices
    };

    const Piece& piece(unsigned d) const {
        require(d <= kMaxGradedDegree, ErrorKind::ResourceBound,
                "graded degree exceeds the resource bound");
        std::lock_guard<std::mutex> lock(cache_->mu);
        auto it = cache_->pieces.find(d);
        if (it != cache_->pieces.end()) return it->second;
        Piece p;
        p.ambient = GradedPiece(ring_, d);
        std::vector<PolyQ> span;
        if (d >= 2) {
            GradedPiece lower(ring_, d - 2);
            for (const auto& mono : lower.basis) {
                PolyQ m = PolyQ::monomial(ring_, mono, Rat(1));
                for (const auto& g : gens_) span.push_back(m * g);
            }
        }
        p.ideal = span_of_polys(p.ambient, span);
        std::vector<bool> is_pivot(p.ambient.dim(), false);
        for (auto c : p.ideal.pivots()) is_pivot[c] = true;
        for (std::size_t i = 0; i < p.ambient.dim(); ++i)
            if (!is_pivot[i]) p.quotient_basis.push_back(i);
        return cache_->pieces.emplace(d, std::move(p)).first->second;
    }

    std::size_t dim(unsigned d) const {
        const Piece& p = piece(d);
        return p.quotient_basis.size();
    }

    // coordinates of [v] in the quotient basis of A_d
    std::vector<Rat> reduce(unsigned d, std::vector<Rat> v) const {
        const Piece& p = piece(d);
        const Subspace& ideal = p.ideal;
        for (std::size_t k = 0; k < ideal.dim(); ++k) {
            std::size_t c = ideal.pivots()[k];
            if (is_zero(v[c])) continue;
            Rat f = v[c];
            for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * ideal.basis().at(k, j);
        }
        std::vector<Rat> coords;
        coords.reserve(p.quotient_basis.size());
        for (auto idx : p.quotient_basis) coords.push_back(v[idx]);
        return coords;
    }

    // multiplication A_d -> A_{d+1} by the variable x_s, as a matrix on
    // quotient bases (columns indexed by A_d, rows by A_{d+1})
    MatrixQ mult_by_var(unsigned d, std::size_t s) const {
        const Piece& from = piece(d);
        const Piece& to = piece(d + 1);
        MatrixQ m(to.quotient_basis.size(), from.quotient_basis.size());
        for (std::size_t col = 0; col < from.quotient_basis.size(); ++col) {
            Expo e = from.ambient.basis[from.quotient_basis[col]];
            e[s] += 1;
            std::vector<Rat> v(to.ambient.dim(), Rat(0));
            v[to.ambient.index_of(e)] = 1;
            auto coords = reduce(d + 1, std::move(v));
            for (std::size_t row = 0; row < coords.size(); ++row) m.at(row, col) = coords[row];
        }
        return m;
    }

private:
    struct Cache {
        std::mutex mu;
        std::map<unsigned, Piece> pieces;
    };

    RingPtr ring_;
    std::vector<PolyQ> gens_;
    std::shared_ptr<Cache> cache_;
};

inline std::vector<std::size_t> hilbert_function(const GradedQuotient& q, unsigned dmax) {
    require(dmax <= kMaxGradedDegree, ErrorKind::ResourceBound, "dmax exceeds the resource bound");
    std::vector<std::size_t> hf;
    for (unsigned d = 0; d <= dmax; ++d) hf.push_back(q.dim(d));
    return hf;
}

struct BettiTable {
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> beta;

    std::size_t at(std::size_t i, std::size_t j) const {
        auto it = beta.find({i, j});
        return it == beta.end() ? 0 : it->second;
    }
};

namespace detail {

inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    if (k > n) return out;
    std::vector<std::size_t> sel(k);
    for (std::size_t i = 0; i < k; ++i) sel[i] = i;
    while (true) {
        out.push_back(sel);
        bool adv = false;
        std::size_t i = k;
        while (i-- > 0) {
            if (sel[i] + (k - i) < n) {
                ++sel[i];
                for (std::size_t j = i + 1; j < k; ++j) sel[j] = sel[j - 1] + 1;
                adv = true;
                break;
            }
        }
        if (!adv) break;
    }
    return out;
}

// Koszul differential  Wedge^i V (x) A_e  ->  Wedge^{i-1} V (x) A_{e+1}
inline MatrixQ koszul_map(const GradedQuotient& q, std::size_t i, unsigned e) {
    std::size_t n = q.nvars();
    auto src_sets = subsets(n, i);
    auto dst_sets = subsets(n, i - 1);
    std::map<std::vector<std::size_t>, std::size_t> dst_index;
    for (std::size_t t = 0; t < dst_sets.size(); ++t) dst_index[dst_sets[t]] = t;
    std::size_t da = q.dim(e), db = q.dim(e + 1);

    std::vector<MatrixQ> mult;
    for (std::size_t s = 0; s < n; ++s) mult.push_back(q.mult_by_var(e, s));

    MatrixQ m(dst_sets.size() * db, src_sets.size() * da);
    for (std::size_t sidx = 0; sidx < src_sets.size(); ++sidx) {
        const auto& set = src_sets[sidx];
        for (std::size_t t = 0; t < set.size(); ++t) {
            std::vector<std::size_t> rest;
            for (std::size_t u = 0; u < set.size(); ++u)
                if (u != t) rest.push_back(set[u]);
            std::size_t didx = dst_index.at(rest);
            Rat sign = (t % 2 == 0) ? Rat(1) : Rat(-1);
            const MatrixQ& mm = mult[set[t]];
            for (std::size_t r = 0; r < db; ++r)
                for (std::size_t c = 0; c < da; ++c)
                    m.at(didx * db + r, sidx * da + c) += sign * mm.at(r, c);
        }
    }
    return m;
}

}  // namespace detail

// Graded Betti numbers from Koszul strand homology:
//   beta_{i,j} = dim H( W^{i+1}V (x) A_{j-i-1} -> W^i V (x) A_{j-i} -> W^{i-1}V (x) A_{j-i+1} )
// computed for the linear strand j = i+1 and the adjacent strand j = i+2
// (where the dual socle entry of the Gorenstein table lives).
inline BettiTable betti_numbers(const GradedQuotient& q, std::size_t imax) {
    std::size_t n = q.nvars();
    require(imax <= n, ErrorKind::ResourceBound, "imax exceeds the variable count");
    BettiTable table;
    table.beta[{0, 0}] = 1;
    for (std::size_t i = 1; i <= imax; ++i) {
        for (std::size_t off = 1; off <= 2; ++off) {
            std::size_t j = i + off;
            if (j < i + 1) continue;
            unsigned e = static_cast<unsigned>(j - i);
            if (e - 1 > kMaxGradedDegree || e + 1 > kMaxGradedDegree) fail(ErrorKind::ResourceBound, "degree");
            MatrixQ out = detail::koszul_map(q, i, e);          // mid -> right
            std::size_t mid_dim = out.cols();
            std::size_t ker = mid_dim - row_reduce(out).rank;
            std::size_t img = 0;
            if (i + 1 <= n && q.dim(e - 1) > 0) {
                MatrixQ in = detail::koszul_map(q, i + 1, e - 1);  // left -> mid
                img = row_reduce(in).rank;
            }
            std::size_t beta = ker - img;
            if (beta > 0) table.beta[{i, j}] = beta;
        }
    }
    return table;
}

enum class BettiKind { AQ, Points };

// Closed forms of the classical Betti tables:  k(n-k)/(n+1) * C(n+2,k+1)  for
// the apolar Artinian Gorenstein ring and  k * C(n,k+1)  for length-n
// point schemes; both must be integers.
inline Int expected_betti(BettiKind kind, std::size_t n, std::size_t k) {
    require(k >= 1 && k <= n - 1, ErrorKind::DimensionMismatch, "strand index out of range");
    if (kind == BettiKind::AQ) {
        Int num = Int(k) * Int(n - k) * binomial(n + 2, k + 1);
        require(num % Int(n + 1) == 0, ErrorKind::Internal, "closed form is not integral");
        return num / Int(n + 1);
    }
    return Int(k) * binomial(n, k + 1);
}

}  // namespace vps
