#pragma once

#include <mutex>

#include "vps/apolar.hpp"

namespace vps {

// ---------------------------------------------------------------------
// The affine chart of apolar subschemes avoiding {x_n = 0}, for the
// fixed standard quadric q_std = 2 y_1 y_n + y_2^2 + ... + y_{n-1}^2.
//
// A chart point is the coefficient vector a_{(ij,k)} of the perturbed
// generators
//   f_11 = x_1^2            - sum_k a_{(11,k)} x_k x_n
//   f_ij = x_i x_j          - sum_k a_{(ij,k)} x_k x_n     (i < j)
//   f_ii = x_i^2 - x_1 x_n  - sum_k a_{(ii,k)} x_k x_n     (2 <= i)
// with 1 <= i <= j <= n-1 and 2 <= k <= n.
// ---------------------------------------------------------------------

struct ChartIndex {
    unsigned i = 0, j = 0, k = 0;  // 1-based, i <= j <= n-1, 2 <= k <= n
    friend bool operator==(const ChartIndex&, const ChartIndex&) = default;
};

// Sorted symmetrized index (u,v,w): u <= v <= w, u,v in 1..n-1, w in 2..n,
// with w == n only in the distinguished variable a_{11n}.
struct SymIndex {
    unsigned u = 0, v = 0, w = 0;
    friend auto operator<=>(const SymIndex&, const SymIndex&) = default;
};

class ChartVars {
public:
    explicit ChartVars(std::size_t n) : n_(n) {
        require(n >= 3 && n <= 9, ErrorKind::UnsupportedN, "chart supports 3 <= n <= 9");
        // pair order follows the grevlex order of the monomials x_i x_j
        for (unsigned j = 1; j <= static_cast<unsigned>(n) - 1; ++j)
            for (unsigned i = 1; i <= j; ++i) pairs_.push_back({i, j});
        std::vector<std::string> names;
        for (auto [i, j] : pairs_)
            for (unsigned k = 2; k <= n; ++k) {
                list_.push_back({i, j, k});
                names.push_back("a(" + std::to_string(i) + std::to_string(j) + "," +
                                std::to_string(k) + ")");
            }
        ring_ = make_ring(names);

        // symmetrized variables
        for (unsigned k = 2; k <= n; ++k) sym_list_.push_back({1, 1, k});
        for (unsigned j = 2; j + 1 <= n; ++j)
            for (unsigned k = j; k + 1 <= n; ++k) sym_list_.push_back({1, j, k});
        for (unsigned i = 2; i + 1 <= n; ++i)
            for (unsigned j = i; j + 1 <= n; ++j)
                for (unsigned k = j; k + 1 <= n; ++k) sym_list_.push_back({i, j, k});
        std::vector<std::string> sym_names;
        for (auto s : sym_list_)
            sym_names.push_back("a" + std::to_string(s.u) + std::to_string(s.v) +
                                std::to_string(s.w));
        sym_ring_ = make_ring(sym_names);
    }

    std::size_t n() const { return n_; }
    std::size_t count() const { return list_.size(); }
    const std::vector<ChartIndex>& list() const { return list_; }
    const std::vector<std::pair<unsigned, unsigned>>& pairs() const { return pairs_; }
    const RingPtr& ring() const { return ring_; }

    std::size_t pair_pos(unsigned i, unsigned j) const {
        for (std::size_t t = 0; t < pairs_.size(); ++t)
            if (pairs_[t].first == i && pairs_[t].second == j) return t;
        fail(ErrorKind::Internal, "bad pair index");
    }

    std::size_t pos(unsigned i, unsigned j, unsigned k) const {
        if (i > j) std::swap(i, j);
        return pair_pos(i, j) * (n_ - 1) + (k - 2);
    }

    PolyQ var(unsigned i, unsigned j, unsigned k) const {
        return PolyQ::variable(ring_, pos(i, j, k), Rat(1));
    }

    // weight of a_{(ij,k)} under the contracting torus action
    unsigned weight(unsigned i, unsigned j, unsigned k) const {
        if (i > j) std::swap(i, j);
        unsigned base = (i == 1 && j == 1) ? 3 : (i == 1 ? 2 : 1);
        return base + (k == n_ ? 1 : 0);
    }

    // symmetrized side
    const std::vector<SymIndex>& sym_list() const { return sym_list_; }
    const RingPtr& sym_ring() const { return sym_ring_; }

    SymIndex sym_of(unsigned i, unsigned j, unsigned k) const {
        if (i > j) std::swap(i, j);
        if (k == n_) {
            if (i == 1 && j == 1) return {1, 1, static_cast<unsigned>(n_)};
            if (i == 1) return {1, 1, j};
            return {1, i, j};
        }
        std::array<unsigned, 3> t = {i, j, k};
        std::sort(t.begin(), t.end());
        return {t[0], t[1], t[2]};
    }

    std::size_t sym_pos(const SymIndex& s) const {
        for (std::size_t t = 0; t < sym_list_.size(); ++t)
            if (sym_list_[t] == s) return t;
        fail(ErrorKind::Internal, "bad symmetrized index");
    }

    PolyQ sym_var(unsigned u, unsigned v, unsigned w) const {
        return PolyQ::variable(sym_ring_, sym_pos({u, v, w}), Rat(1));
    }

    unsigned sym_weight(const SymIndex& s) const {
        if (s.u == 1 && s.v == 1) return s.w == n_ ? 4 : 3;
        if (s.u == 1) return 2;
        return 1;
    }

    // ring homomorphism original -> symmetrized (variable to variable)
    PolyQ symmetrize(const PolyQ& f) const {
        std::vector<PolyQ> images;
        for (const auto& idx : list_)
            images.push_back(PolyQ::variable(sym_ring_, sym_pos(sym_of(idx.i, idx.j, idx.k)), Rat(1)));
        return f.eval(images, PolyQ::constant(sym_ring_, Rat(1)));
    }

private:
    std::size_t n_;
    std::vector<std::pair<unsigned, unsigned>> pairs_;
    std::vector<ChartIndex> list_;
    RingPtr ring_;
    std::vector<SymIndex> sym_list_;
    RingPtr sym_ring_;
};

// A point of the chart parameter space (not necessarily on V^aff).
struct ChartPoint {
    std::size_t n = 0;
    std::vector<Rat> values;  // indexed per ChartVars::pos

    Rat at(const ChartVars& vars, unsigned i, unsigned j, unsigned k) const {
        return values[vars.pos(i, j, k)];
    }
};

// The symbolic generator system of V^aff_h(n).
class ChartSystem {
public:
    explicit ChartSystem(std::size_t n);

    std::size_t n() const { return n_; }
    const ChartVars& vars() const { return vars_; }
    const std::vector<PolyQ>& linear_relations() const { return linear_relations_; }
    const std::vector<PolyQ>& generators_orig() const { return gens_orig_; }
    const std::vector<PolyQ>& generators_sym() const { return gens_sym_; }
    const std::vector<unsigned>& generator_weights() const { return gen_weights_; }

    const RingPtr& sring() const { return sring_; }
    const RingPtr& tring() const { return tring_; }
    const QuadraticForm& q_std() const { return q_std_; }

    // all linear relation and generator values at a point
    std::vector<Rat> residuals(const ChartPoint& a) const {
        require(a.n == n_ && a.values.size() == vars_.count(), ErrorKind::DimensionMismatch,
                "chart point size");
        std::vector<Rat> out;
        out.reserve(linear_relations_.size() + gens_orig_.size());
        for (const auto& r : linear_relations_) out.push_back(r.eval(a.values, Rat(1)));
        for (const auto& g : gens_orig_) out.push_back(g.eval(a.values, Rat(1)));
        return out;
    }

    bool on_chart_variety(const ChartPoint& a) const {
        for (const auto& r : residuals(a))
            if (!is_zero(r)) return false;
        return true;
    }

    // the equations (5.1)-style quadric rows of a chart point
    std::vector<PolyQ> equations(const ChartPoint& a) const {
        require(a.n == n_, ErrorKind::DimensionMismatch, "chart point size");
        auto xv = [&](std::size_t i) { return PolyQ::variable(sring_, i, Rat(1)); };
        PolyQ x1xn = xv(0) * xv(n_ - 1);
        std::vector<PolyQ> eqs;
        for (auto [i, j] : vars_.pairs()) {
            PolyQ f = xv(i - 1) * xv(j - 1);
            if (i == j && i >= 2) f -= x1xn;
            for (unsigned k = 2; k <= n_; ++k)
                f -= a.at(vars_, i, j, k) * (xv(k - 1) * xv(n_ - 1));
            eqs.push_back(f);
        }
        return eqs;
    }

    Subspace ideal_of(const ChartPoint& a) const {
        GradedPiece s2(sring_, 2);
        return span_of_polys(s2, equations(a));
    }

    ApolarScheme scheme_of(const ChartPoint& a) const {
        return ApolarScheme::from_ideal(n_, ideal_of(a), sring_);
    }

    // tangent-space dimension at Gamma_p: parameters minus the rank of
    // the linear parts of all ideal generators
    std::size_t tangent_dim() const { return tangent_dim_; }

private:
    void build_generators();
    void verify_weights() const;
    void verify_minor_span() const;
    void compute_tangent_dim();

    std::size_t n_;
    ChartVars vars_;
    std::vector<PolyQ> linear_relations_;
    std::vector<PolyQ> gens_orig_;
    std::vector<PolyQ> gens_sym_;
    std::vector<unsigned> gen_weights_;
    std::size_t tangent_dim_ = 0;
    RingPtr sring_;
    RingPtr tring_;
    QuadraticForm q_std_;
};

inline ChartSystem::ChartSystem(std::size_t n) : n_(n), vars_(n) {
    sring_ = indexed_ring('x', n);
    tring_ = indexed_ring('y', n);
    q_std_ = standard_quadric(n, tring_);

    auto a = [&](unsigned i, unsigned j, unsigned k) { return vars_.var(i, j, k); };
    unsigned nn = static_cast<unsigned>(n), nm1 = nn - 1;

    // linear relations (the coefficients of x_1 x_n^2 in the lifted syzygies)
    for (unsigned i = 2; i <= nm1; ++i) {
        linear_relations_.push_back(a(1, 1, i) - a(1, i, nn));
        linear_relations_.push_back(a(1, i, i) - a(i, i, nn));
    }
    for (unsigned i = 2; i <= nm1; ++i)
        for (unsigned j = 2; j <= nm1; ++j) {
            if (i == j) continue;
            linear_relations_.push_back(a(1, j, i) - a(std::min(i, j), std::max(i, j), nn));
            linear_relations_.push_back(a(std::min(i, j), std::max(i, j), j) - a(j, j, i));
        }
    for (unsigned i = 2; i <= nm1; ++i)
        for (unsigned j = i + 1; j <= nm1; ++j)
            for (unsigned k = j + 1; k <= nm1; ++k) {
                linear_relations_.push_back(a(i, j, k) - a(j, k, i));
                linear_relations_.push_back(a(i, j, k) - a(i, k, j));
            }

    build_generators();
    for (const auto& g : gens_orig_) gens_sym_.push_back(vars_.symmetrize(g));
    verify_weights();
    if (n <= 7) verify_minor_span();
    compute_tangent_dim();
}

inline void ChartSystem::build_generators() {
    auto a = [&](unsigned i, unsigned j, unsigned k) {
        return vars_.var(std::min(i, j), std::max(i, j), k);
    };
    unsigned nn = static_cast<unsigned>(n_), nm1 = nn - 1;
    auto push = [&](PolyQ g, unsigned w) {
        gens_orig_.push_back(std::move(g));
        gen_weights_.push_back(w);
    };

    // weight 2: one per pair {i<j}, three per 3-subset (each element
    // distinguished), two pairings per 4-subset
    for (unsigned i = 2; i <= nm1; ++i)
        for (unsigned j = i + 1; j <= nm1; ++j) {
            PolyQ g = a(1, i, i) + a(1, j, j);
            for (unsigned m = 2; m <= nm1; ++m) g -= a(j, m, i) * a(i, m, j) - a(i, m, i) * a(j, m, j);
            push(g, 2);
        }
    for (unsigned i = 2; i <= nm1; ++i)
        for (unsigned j = 2; j <= nm1; ++j)
            for (unsigned k = j + 1; k <= nm1; ++k) {
                if (i == j || i == k) continue;
                PolyQ g = a(1, j, k);
                for (unsigned m = 2; m <= nm1; ++m)
                    g -= a(j, m, i) * a(i, m, k) - a(i, m, i) * a(j, m, k);
                push(g, 2);
            }
    for (unsigned i = 2; i <= nm1; ++i)
        for (unsigned j = i + 1; j <= nm1; ++j)
            for (unsigned k = j + 1; k <= nm1; ++k)
                for (unsigned l = k + 1; l <= nm1; ++l) {
                    PolyQ g1(vars_.ring()), g2(vars_.ring());
                    for (unsigned m = 2; m <= nm1; ++m) {
                        g1 += a(i, m, j) * a(k, m, l) - a(k, m, j) * a(i, m, l);
                        g2 += a(i, m, k) * a(j, m, l) - a(j, m, k) * a(i, m, l);
                    }
                    push(g1, 2);
                    push(g2, 2);
                }

    // weight 3: one per ordered pair (i,j), three per 3-subset (a
    // distinguished column element)
    for (unsigned i = 2; i <= nm1; ++i)
        for (unsigned j = 2; j <= nm1; ++j) {
            if (i == j) continue;
            PolyQ g = a(1, 1, i);
            for (unsigned m = 2; m <= nm1; ++m) g -= a(j, m, nn) * a(i, m, j) - a(i, m, nn) * a(j, m, j);
            push(g, 3);
        }
    for (unsigned p = 2; p <= nm1; ++p)
        for (unsigned q = p + 1; q <= nm1; ++q)
            for (unsigned r = q + 1; r <= nm1; ++r) {
                // row pair and column element run over the subset {p,q,r}
                const unsigned roles[3][3] = {{p, q, r}, {p, r, q}, {q, r, p}};
                for (const auto& t : roles) {
                    unsigned u = t[0], v = t[1], w = t[2];
                    PolyQ g(vars_.ring());
                    for (unsigned m = 2; m <= nm1; ++m)
                        g += a(u, m, nn) * a(v, m, w) - a(v, m, nn) * a(u, m, w);
                    push(g, 3);
                }
            }

    // weight 4: one per i, one per pair {i<j}
    for (unsigned i = 2; i <= nm1; ++i) {
        PolyQ g = a(1, 1, nn);
        for (unsigned m = 2; m <= nm1; ++m) g -= a(i, m, nn) * a(1, m, i) - a(1, m, nn) * a(i, m, i);
        push(g, 4);
    }
    for (unsigned i = 2; i <= nm1; ++i)
        for (unsigned j = i + 1; j <= nm1; ++j) {
            PolyQ g(vars_.ring());
            for (unsigned m = 2; m <= nm1; ++m)
                g += a(1, m, nn) * a(i, m, j) - a(i, m, nn) * a(1, m, j);
            push(g, 4);
        }
}

inline void ChartSystem::verify_weights() const {
    auto weight_of_expo = [&](const Expo& e) {
        unsigned w = 0;
        for (std::size_t t = 0; t < e.size(); ++t) {
            if (e[t] == 0) continue;
            const ChartIndex& idx = vars_.list()[t];
            w += e[t] * vars_.weight(idx.i, idx.j, idx.k);
        }
        return w;
    };
    for (std::size_t g = 0; g < gens_orig_.size(); ++g) {
        for (const auto& [e, c] : gens_orig_[g].terms())
            require(weight_of_expo(e) == gen_weights_[g], ErrorKind::Internal,
                    "chart generator is not weight-homogeneous");
    }
    for (const auto& r : linear_relations_) {
        unsigned w = 0;
        bool first = true;
        for (const auto& [e, c] : r.terms()) {
            unsigned we = weight_of_expo(e);
            if (first) {
                w = we;
                first = false;
            }
            require(we == w, ErrorKind::Internal, "linear relation is not weight-homogeneous");
        }
    }
}

inline void ChartSystem::compute_tangent_dim() {
    // rank of the linear parts of everything in the ideal presentation
    std::vector<std::vector<Rat>> rows;
    auto linear_part_row = [&](const PolyQ& f) {
        std::vector<Rat> row(vars_.count(), Rat(0));
        bool any = false;
        for (const auto& [e, c] : f.terms()) {
            if (total_degree(e) != 1) continue;
            for (std::size_t t = 0; t < e.size(); ++t)
                if (e[t] == 1) {
                    row[t] += c;
                    any = true;
                }
        }
        return any ? std::optional<std::vector<Rat>>(row) : std::nullopt;
    };
    for (const auto& r : linear_relations_)
        if (auto row = linear_part_row(r)) rows.push_back(*row);
    for (const auto& g : gens_orig_)
        if (auto row = linear_part_row(g)) rows.push_back(*row);
    Subspace span = Subspace::from_vectors(vars_.count(), rows);
    tangent_dim_ = vars_.count() - span.dim();
}

// Sparse elimination helper: verify that the quadratic part of every
// generator lies in the span of the 2x2 minors of the A-block of the
// coefficient matrix A_F (the Grassmannian linear-section statement).
inline void ChartSystem::verify_minor_span() const {
    using Key = std::pair<std::size_t, std::size_t>;  // sorted variable pair
    using Row = std::map<Key, Rat>;
    auto reduce = [](Row r, const std::map<Key, Row>& basis) {
        while (!r.empty()) {
            auto lead = r.rbegin()->first;
            auto it = basis.find(lead);
            if (it == basis.end()) break;
            Rat f = r.rbegin()->second / it->second.rbegin()->second;
            for (const auto& [k, v] : it->second) {
                auto jt = r.find(k);
                Rat nv = (jt == r.end() ? Rat(0) : jt->second) - f * v;
                if (is_zero(nv))
                    r.erase(k);
                else
                    r[k] = nv;
            }
        }
        return r;
    };
    std::map<Key, Row> basis;
    auto insert = [&](Row r) {
        r = reduce(std::move(r), basis);
        if (!r.empty()) basis[r.rbegin()->first] = std::move(r);
    };

    unsigned nn = static_cast<unsigned>(n_);
    const auto& pairs = vars_.pairs();
    for (std::size_t p1 = 0; p1 < pairs.size(); ++p1)
        for (std::size_t p2 = p1 + 1; p2 < pairs.size(); ++p2)
            for (unsigned k1 = 2; k1 <= nn; ++k1)
                for (unsigned k2 = k1 + 1; k2 <= nn; ++k2) {
                    std::size_t a = vars_.pos(pairs[p1].first, pairs[p1].second, k1);
                    std::size_t b = vars_.pos(pairs[p2].first, pairs[p2].second, k2);
                    std::size_t c = vars_.pos(pairs[p1].first, pairs[p1].second, k2);
                    std::size_t d = vars_.pos(pairs[p2].first, pairs[p2].second, k1);
                    Row r;
                    r[{std::min(a, b), std::max(a, b)}] += Rat(1);
                    r[{std::min(c, d), std::max(c, d)}] -= Rat(1);
                    insert(std::move(r));
                }

    for (const auto& g : gens_orig_) {
        Row r;
        for (const auto& [e, c] : g.terms()) {
            if (total_degree(e) != 2) continue;
            std::vector<std::size_t> idx;
            for (std::size_t t = 0; t < e.size(); ++t)
                for (unsigned rep = 0; rep < e[t]; ++rep) idx.push_back(t);
            r[{idx[0], idx[1]}] += c;
        }
        require(reduce(std::move(r), basis).empty(), ErrorKind::Internal,
                "generator quadratic part escapes the minor span");
    }
}

// memoized access
inline const ChartSystem& chart_system(std::size_t n) {
    static std::mutex mu;
    static std::map<std::size_t, std::unique_ptr<ChartSystem>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, std::make_unique<ChartSystem>(n)).first;
    return *it->second;
}

inline std::size_t tangent_dim(std::size_t n) { return chart_system(n).tangent_dim(); }

inline ChartPoint gamma_p(std::size_t n) {
    const ChartSystem& cs = chart_system(n);
    ChartPoint p;
    p.n = n;
    p.values.assign(cs.vars().count(), Rat(0));
    return p;
}

// Chart coordinates of an apolar scheme avoiding {x_n = 0}: the reduced
// ideal basis must pivot exactly on the monomials without x_n.
inline ChartPoint normal_form(const ChartSystem& cs, const ApolarScheme& g) {
    std::size_t n = cs.n();
    require(g.n() == n, ErrorKind::DimensionMismatch, "scheme size");
    require(is_apolar(g, cs.q_std()), ErrorKind::NotApolar, "scheme is not apolar to q_std");
    const Subspace& ideal = g.ideal();
    std::size_t lead = n * (n - 1) / 2;
    for (std::size_t r = 0; r < ideal.dim(); ++r)
        require(ideal.pivots()[r] == r, ErrorKind::NotInChart,
                "scheme meets the hyperplane {x_n = 0}");
    GradedPiece s2(g.s2());
    ChartPoint p;
    p.n = n;
    p.values.assign(cs.vars().count(), Rat(0));
    for (std::size_t r = 0; r < lead; ++r) {
        auto [i, j] = cs.vars().pairs()[r];
        // row r is f_ij; read the trailing coefficients
        for (unsigned k = 2; k <= n; ++k) {
            Expo e(n, 0);
            e[k - 1] += 1;
            e[n - 1] += 1;
            p.values[cs.vars().pos(i, j, k)] = -ideal.basis().at(r, s2.index_of(e));
        }
        Expo e1n(n, 0);
        e1n[0] = 1;
        e1n[n - 1] = 1;
        Rat c1 = ideal.basis().at(r, s2.index_of(e1n));
        require(c1 == ((i == j && i >= 2) ? Rat(-1) : Rat(0)), ErrorKind::Internal,
                "x_1 x_n coefficient violates the apolarity pattern");
    }
    return p;
}

// multiplication table of the quotient algebra with x_n = 1
inline AlgebraTable mult_table(const ChartSystem& cs, const ChartPoint& a) {
    std::size_t n = cs.n();
    AlgebraTable b(n);
    const ChartVars& v = cs.vars();
    for (unsigned i = 1; i + 1 <= n; ++i)
        for (unsigned j = i; j + 1 <= n; ++j) {
            std::vector<Rat> prod(n, Rat(0));
            prod[0] = a.at(v, i, j, static_cast<unsigned>(n));  // unit component
            for (unsigned k = 2; k + 1 <= n; ++k) prod[k] = a.at(v, i, j, k);
            if (i == j && i >= 2) prod[1] += 1;  // x_i^2 contains x_1
            b.set_product(i, j, std::move(prod));
        }
    return b;
}

}  // namespace vps
