#pragma once

#include "vps/chart.hpp"

namespace vps {

// ---------------------------------------------------------------------
// Affine parameterization of V^aff_h(n) for n <= 5: the chart is an
// affine space and every bound coordinate is a polynomial in the free
// ones.  The substitution is built symbolically once per n and verified
// against the full generator system.
// ---------------------------------------------------------------------
struct ChartParameterization {
    std::size_t n = 0;
    RingPtr free_ring;                // one variable per free coordinate
    std::vector<SymIndex> free_vars;  // paper's parameter lists
    std::vector<PolyQ> orig_values;   // per original coordinate, in free_ring
};

namespace detail {

inline ChartParameterization build_parameterization(std::size_t n) {
    require(n >= 3 && n <= 5, ErrorKind::UnsupportedN,
            "the chart is an affine space only for n <= 5");
    const ChartSystem& cs = chart_system(n);
    const ChartVars& vars = cs.vars();

    ChartParameterization par;
    par.n = n;
    if (n == 3) {
        par.free_vars = {{1, 1, 2}, {1, 2, 2}, {2, 2, 2}};
    } else if (n == 4) {
        par.free_vars = {{1, 2, 2}, {1, 2, 3}, {2, 2, 2}, {2, 2, 3}, {2, 3, 3}, {3, 3, 3}};
    } else {
        for (unsigned i = 2; i <= 4; ++i)
            for (unsigned j = i; j <= 4; ++j)
                for (unsigned k = j; k <= 4; ++k) par.free_vars.push_back({i, j, k});
    }
    std::vector<std::string> names;
    for (auto s : par.free_vars)
        names.push_back("a" + std::to_string(s.u) + std::to_string(s.v) + std::to_string(s.w));
    par.free_ring = make_ring(names);

    std::map<SymIndex, PolyQ> value;
    for (std::size_t t = 0; t < par.free_vars.size(); ++t)
        value[par.free_vars[t]] = PolyQ::variable(par.free_ring, t, Rat(1));
    auto sv = [&](unsigned u, unsigned v, unsigned w) {
        std::array<unsigned, 3> s = {u, v, w};
        std::sort(s.begin(), s.end());
        auto it = value.find({s[0], s[1], s[2]});
        require(it != value.end(), ErrorKind::Internal, "parameterization order violated");
        return it->second;
    };
    unsigned nn = static_cast<unsigned>(n), nm1 = nn - 1;

    if (n >= 5) {
        // weight 2, distinguished-element relations: a_{1jk} for j < k
        for (unsigned j = 2; j <= nm1; ++j)
            for (unsigned k = j + 1; k <= nm1; ++k) {
                unsigned i = 0;  // the remaining element of {2..n-1}
                for (unsigned c = 2; c <= nm1; ++c)
                    if (c != j && c != k) i = c;
                PolyQ g(par.free_ring);
                for (unsigned m = 2; m <= nm1; ++m)
                    g += sv(i, j, m) * sv(i, k, m) - sv(i, i, m) * sv(j, k, m);
                value[{1, j, k}] = g;
            }
        // weight 2, pair sums: solve a_{1ii}+a_{1jj} = Q_ij for the three
        // diagonal unknowns
        auto Q = [&](unsigned i, unsigned j) {
            PolyQ g(par.free_ring);
            for (unsigned m = 2; m <= nm1; ++m)
                g += sv(i, j, m) * sv(i, j, m) - sv(i, i, m) * sv(j, j, m);
            return g;
        };
        PolyQ q23 = Q(2, 3), q24 = Q(2, 4), q34 = Q(3, 4);
        Rat half = make_rat(1, 2);
        value[{1, 2, 2}] = (q23 + q24 - q34) * half;
        value[{1, 3, 3}] = (q23 - q24 + q34) * half;
        value[{1, 4, 4}] = (q24 - q23 + q34) * half;
    }
    if (n == 4) {
        // a_{133} from a_{122} + a_{133} = Q_23
        PolyQ q23(par.free_ring);
        for (unsigned m = 2; m <= 3; ++m) q23 += sv(2, 3, m) * sv(2, 3, m) - sv(2, 2, m) * sv(3, 3, m);
        value[{1, 3, 3}] = q23 - sv(1, 2, 2);
    }
    if (n >= 4) {
        // weight 3: a_{11i} from the ordered-pair generators
        for (unsigned i = 2; i <= nm1; ++i) {
            unsigned j = (i == 2) ? 3 : 2;
            PolyQ g(par.free_ring);
            for (unsigned m = 2; m <= nm1; ++m)
                g += sv(1, j, m) * sv(i, j, m) - sv(1, i, m) * sv(j, j, m);
            value[{1, 1, i}] = g;
        }
    }
    // weight 4: a_{11n} from the i = 2 generator
    {
        unsigned i = 2;
        PolyQ g(par.free_ring);
        for (unsigned m = 2; m <= nm1; ++m)
            g += sv(1, i, m) * sv(1, i, m) - sv(1, 1, m) * sv(i, i, m);
        value[{1, 1, nn}] = g;
    }

    for (const auto& idx : vars.list())
        par.orig_values.push_back(value.at(vars.sym_of(idx.i, idx.j, idx.k)));

    // symbolic verification: the whole generator system vanishes
    PolyQ one = PolyQ::constant(par.free_ring, Rat(1));
    for (const auto& r : cs.linear_relations())
        require(r.eval(par.orig_values, one).is_zero(), ErrorKind::Internal,
                "parameterization violates a linear relation");
    for (const auto& g : cs.generators_orig())
        require(g.eval(par.orig_values, one).is_zero(), ErrorKind::Internal,
                "parameterization violates a chart generator");
    return par;
}

}  // namespace detail

inline const ChartParameterization& chart_parameterization(std::size_t n) {
    static std::mutex mu;
    static std::map<std::size_t, std::unique_ptr<ChartParameterization>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end())
        it = cache.emplace(n, std::make_unique<ChartParameterization>(
                                  detail::build_parameterization(n)))
                 .first;
    return *it->second;
}

// The unique chart point with the given free coordinates (n <= 5).
inline ChartPoint chart_parameterize(std::size_t n, const std::vector<Rat>& free) {
    const ChartParameterization& par = chart_parameterization(n);
    require(free.size() == par.free_vars.size(), ErrorKind::DimensionMismatch,
            "expected one value per free parameter");
    ChartPoint p;
    p.n = n;
    for (const auto& f : par.orig_values) p.values.push_back(f.eval(free, Rat(1)));
    return p;
}

// ---------------------------------------------------------------------
// The Veronese cone V^vero: rank-1 interior blocks a_{ijk} = s_i s_j s_k.
// ---------------------------------------------------------------------
inline ChartPoint vero_point(std::size_t n, const std::vector<Rat>& s) {
    const ChartSystem& cs = chart_system(n);
    require(s.size() == n - 2, ErrorKind::DimensionMismatch,
            "s must have one coordinate per index 2..n-1");
    bool nonzero = false;
    for (const auto& x : s) nonzero = nonzero || !is_zero(x);
    require(nonzero, ErrorKind::ZeroVector, "s must be nonzero");
    ChartPoint p;
    p.n = n;
    p.values.assign(cs.vars().count(), Rat(0));
    for (unsigned i = 2; i + 1 <= n; ++i)
        for (unsigned j = i; j + 1 <= n; ++j)
            for (unsigned k = 2; k + 1 <= n; ++k)
                p.values[cs.vars().pos(i, j, k)] = s[i - 2] * s[j - 2] * s[k - 2];
    return p;
}

// The explicit generators of Gamma_s from the cone construction.
inline std::vector<PolyQ> gamma_s_ideal(std::size_t n, const std::vector<Rat>& s) {
    const ChartSystem& cs = chart_system(n);
    require(s.size() == n - 2, ErrorKind::DimensionMismatch, "s size");
    bool nonzero = false;
    for (const auto& x : s) nonzero = nonzero || !is_zero(x);
    require(nonzero, ErrorKind::ZeroVector, "s must be nonzero");
    const RingPtr& S = cs.sring();
    auto xv = [&](std::size_t i) { return PolyQ::variable(S, i, Rat(1)); };
    PolyQ sx(S);
    for (unsigned i = 2; i + 1 <= n; ++i) sx += s[i - 2] * xv(i - 1);
    PolyQ x1xn = xv(0) * xv(n - 1);
    std::vector<PolyQ> gens;
    for (unsigned t = 1; t + 1 <= n; ++t) gens.push_back(xv(0) * xv(t - 1));
    for (unsigned i = 2; i + 1 <= n; ++i)
        gens.push_back(xv(i - 1) * xv(i - 1) - x1xn - s[i - 2] * s[i - 2] * (sx * xv(n - 1)));
    for (unsigned i = 2; i + 1 <= n; ++i)
        for (unsigned j = i + 1; j + 1 <= n; ++j)
            gens.push_back(xv(i - 1) * xv(j - 1) - s[i - 2] * s[j - 2] * (sx * xv(n - 1)));
    return gens;
}

// the distinguished second component [ ||s||^2 <s,y> + y_n ] of Gamma_s
inline std::vector<Rat> vero_extra_point(std::size_t n, const std::vector<Rat>& s) {
    Rat norm(0);
    for (const auto& x : s) norm += x * x;
    std::vector<Rat> p(n, Rat(0));
    for (unsigned i = 2; i + 1 <= n; ++i) p[i - 1] = norm * s[i - 2];
    p[n - 1] = 1;
    return p;
}

// ---------------------------------------------------------------------
// Interior coordinates (the a_{ijk} with 2 <= i <= j <= k <= n-1) and
// the V^sec / V^loc equation systems living in them.
// ---------------------------------------------------------------------
class InteriorVars {
public:
    explicit InteriorVars(std::size_t n) : n_(n) {
        std::vector<std::string> names;
        for (unsigned i = 2; i + 1 <= n; ++i)
            for (unsigned j = i; j + 1 <= n; ++j)
                for (unsigned k = j; k + 1 <= n; ++k) {
                    list_.push_back({i, j, k});
                    names.push_back("a" + std::to_string(i) + std::to_string(j) +
                                    std::to_string(k));
                }
        ring_ = make_ring(names);
    }

    std::size_t n() const { return n_; }
    const RingPtr& ring() const { return ring_; }
    const std::vector<SymIndex>& list() const { return list_; }

    std::size_t pos(unsigned i, unsigned j, unsigned k) const {
        std::array<unsigned, 3> t = {i, j, k};
        std::sort(t.begin(), t.end());
        for (std::size_t p = 0; p < list_.size(); ++p)
            if (list_[p] == SymIndex{t[0], t[1], t[2]}) return p;
        fail(ErrorKind::Internal, "bad interior index");
    }

    PolyQ var(unsigned i, unsigned j, unsigned k) const {
        return PolyQ::variable(ring_, pos(i, j, k), Rat(1));
    }

    // interior coordinates of a chart point (requires the sec condition
    // a_{(ij,n)} = 0 to be meaningful as a point of these equations)
    std::vector<Rat> from_chart_point(const ChartSystem& cs, const ChartPoint& a) const {
        std::vector<Rat> v(list_.size(), Rat(0));
        for (std::size_t p = 0; p < list_.size(); ++p) {
            auto s = list_[p];
            v[p] = a.at(cs.vars(), s.u, s.v, s.w);
        }
        return v;
    }

private:
    std::size_t n_;
    std::vector<SymIndex> list_;
    RingPtr ring_;
};

// V^sec: the chart generators specialized by a_{(ij,n)} = 0, reduced to
// the interior coordinates.
inline std::vector<PolyQ> sec_equations(std::size_t n, const InteriorVars& iv) {
    require(n >= 3, ErrorKind::UnsupportedN, "sec_equations needs n >= 3");
    unsigned nm1 = static_cast<unsigned>(n) - 1;
    auto a = [&](unsigned i, unsigned j, unsigned k) { return iv.var(i, j, k); };
    std::vector<PolyQ> out;
    for (unsigned i = 2; i <= nm1; ++i)
        for (unsigned j = i + 1; j <= nm1; ++j) {
            PolyQ g(iv.ring());
            for (unsigned m = 2; m <= nm1; ++m) g += a(i, j, m) * a(i, j, m) - a(i, i, m) * a(j, j, m);
            out.push_back(g);
        }
    for (unsigned i = 2; i <= nm1; ++i)
        for (unsigned j = 2; j <= nm1; ++j)
            for (unsigned k = j + 1; k <= nm1; ++k) {
                if (i == j || i == k) continue;
                PolyQ g(iv.ring());
                for (unsigned m = 2; m <= nm1; ++m)
                    g += a(i, j, m) * a(i, k, m) - a(i, i, m) * a(j, k, m);
                out.push_back(g);
            }
    for (unsigned i = 2; i <= nm1; ++i)
        for (unsigned j = i + 1; j <= nm1; ++j)
            for (unsigned k = j + 1; k <= nm1; ++k)
                for (unsigned l = k + 1; l <= nm1; ++l) {
                    PolyQ g1(iv.ring()), g2(iv.ring());
                    for (unsigned m = 2; m <= nm1; ++m) {
                        g1 += a(i, j, m) * a(k, l, m) - a(i, k, m) * a(j, l, m);
                        g2 += a(i, j, m) * a(k, l, m) - a(i, l, m) * a(j, k, m);
                    }
                    out.push_back(g1);
                    out.push_back(g2);
                }
    return out;
}

inline std::vector<PolyQ> sec_equations(std::size_t n) {
    InteriorVars iv(n);
    return sec_equations(n, iv);
}

// V^loc: V^sec plus the nilpotency conditions m_p^n = 0, extracted from
// symbolic n-fold products in the generic local algebra and reduced by
// linear algebra (no saturation).
inline std::vector<PolyQ> loc_equations(std::size_t n, const InteriorVars& iv) {
    require(n >= 3 && n <= 5, ErrorKind::UnsupportedN,
            "loc_equations supports n in {3,4,5}");
    unsigned nm1 = static_cast<unsigned>(n) - 1;
    const RingPtr& R = iv.ring();
    PolyQ zero = PolyQ::zero(R), one = PolyQ::constant(R, Rat(1));

    // basis (1, x_1, x_2..x_{n-1}); multiplication by a generator x_g
    auto mul_gen = [&](const std::vector<PolyQ>& v, unsigned g) {
        std::vector<PolyQ> out(n + 0, zero);
        // x_g * 1 = x_g
        out[g] += v[0];
        // x_g * x_1 = 0
        for (unsigned j = 2; j <= nm1; ++j) {
            if (v[j].is_zero()) continue;
            // x_g * x_j = delta_{gj} x_1 + sum_k a_{gjk} x_k
            if (g == j) out[1] += v[j];
            for (unsigned k = 2; k <= nm1; ++k) out[k] += iv.var(g, j, k) * v[j];
        }
        return out;
    };

    std::vector<PolyQ> conditions = sec_equations(n, iv);
    // all degree-n words in the generators x_2..x_{n-1}
    std::vector<std::vector<unsigned>> words;
    std::vector<unsigned> w;
    std::function<void(unsigned)> rec = [&](unsigned lo) {
        if (w.size() == n) {
            words.push_back(w);
            return;
        }
        for (unsigned g = lo; g <= nm1; ++g) {
            w.push_back(g);
            rec(g);
            w.pop_back();
        }
    };
    rec(2);
    for (const auto& word : words) {
        std::vector<PolyQ> v(n, zero);
        v[0] = one;
        for (unsigned g : word) v = mul_gen(v, g);
        require(v[0].is_zero(), ErrorKind::Internal, "product escaped the maximal ideal");
        for (unsigned t = 1; t <= nm1; ++t)
            if (!v[t].is_zero()) conditions.push_back(v[t]);
    }

    // reduce by linear algebra: substitute away linear forms one at a
    // time, then take canonical spanning rows of the rest
    std::vector<PolyQ> linear;
    std::vector<PolyQ> rest;
    for (const auto& c : conditions)
        if (!c.is_zero()) rest.push_back(c);
    while (true) {
        std::size_t found = rest.size();
        for (std::size_t t = 0; t < rest.size(); ++t)
            if (rest[t].degree() == 1) {
                found = t;
                break;
            }
        if (found == rest.size()) break;
        PolyQ f = rest[found];
        auto lead = f.terms().begin();
        std::size_t v = 0;
        for (std::size_t t = 0; t < lead->first.size(); ++t)
            if (lead->first[t] == 1) v = t;
        PolyQ rhs = (f - PolyQ::monomial(R, lead->first, lead->second)) *
                    (Rat(-1) / lead->second);
        std::vector<PolyQ> subst;
        for (std::size_t t = 0; t < R->nvars(); ++t)
            subst.push_back(t == v ? rhs : PolyQ::variable(R, t, Rat(1)));
        linear.push_back(f);
        std::vector<PolyQ> next;
        for (std::size_t t = 0; t < rest.size(); ++t) {
            if (t == found) continue;
            PolyQ g = rest[t].eval(subst, one);
            if (!g.is_zero()) next.push_back(g);
        }
        rest = std::move(next);
    }
    // canonical rows for the survivors: row-reduce over their monomials
    std::vector<PolyQ> out;
    {
        // collect monomials
        std::vector<Expo> monos;
        for (const auto& f : rest)
            for (const auto& [e, c] : f.terms()) monos.push_back(e);
        std::sort(monos.begin(), monos.end(), grevlex_greater);
        monos.erase(std::unique(monos.begin(), monos.end()), monos.end());
        MatrixQ m(rest.size(), monos.size());
        for (std::size_t r = 0; r < rest.size(); ++r)
            for (const auto& [e, c] : rest[r].terms()) {
                std::size_t col =
                    std::lower_bound(monos.begin(), monos.end(), e, grevlex_greater) - monos.begin();
                m.at(r, col) = c;
            }
        auto rr = row_reduce(m);
        // linear forms first (RREF'd for canonicity)
        if (!linear.empty()) {
            GradedPiece l1(R, 1);
            Subspace ls = span_of_polys(l1, linear);
            for (const auto& f : polys_of_subspace(l1, ls)) out.push_back(f);
        }
        for (std::size_t r = 0; r < rr.rank; ++r) {
            PolyQ f(R);
            for (std::size_t c = 0; c < monos.size(); ++c) f.add_term(monos[c], rr.rref.at(r, c));
            out.push_back(f);
        }
    }
    return out;
}

inline std::vector<PolyQ> loc_equations(std::size_t n) {
    InteriorVars iv(n);
    return loc_equations(n, iv);
}

// A random rational point of V^sec_p(n): an apolar scheme through
// p = [0:...:0:1].  Any such scheme is nonreduced at p, so it is built
// as (double point at p inside a plane U_1) + (polar simplex of the
// complementary form on the M_q-orthogonal complement U_2).
inline ChartPoint sec_sample_point(std::size_t n, std::uint64_t seed) {
    const ChartSystem& cs = chart_system(n);
    const QuadraticForm& q = cs.q_std();
    const MatrixQ& m = q.matrix();
    Rng rng(seed);
    GradedPiece s2(cs.sring(), 2);

    for (int attempt = 0; attempt < 64; ++attempt) {
        // U_1 = <p, w> with a random second direction
        std::vector<Rat> p(n, Rat(0)), w(n, Rat(0));
        p[n - 1] = 1;
        for (std::size_t i = 0; i < n; ++i) w[i] = Rat(rng.range(-3, 3));
        MatrixQ u1(2, n);
        u1.set_row(0, p);
        u1.set_row(1, w);
        if (row_reduce(u1).rank != 2) continue;
        // q restricted to U_1 must be nondegenerate
        MatrixQ gram(2, 2);
        {
            auto mp = m.apply(p), mw = m.apply(w);
            Rat pp(0), pw(0), ww(0);
            for (std::size_t i = 0; i < n; ++i) {
                pp += p[i] * mp[i];
                pw += w[i] * mp[i];
                ww += w[i] * mw[i];
            }
            gram.at(0, 0) = pp;
            gram.at(0, 1) = pw;
            gram.at(1, 0) = pw;
            gram.at(1, 1) = ww;
        }
        if (is_zero(det(gram))) continue;
        // U_2 = M_q-orthogonal complement of U_1
        MatrixQ pairing(2, n);
        {
            auto mp = m.apply(p), mw = m.apply(w);
            for (std::size_t i = 0; i < n; ++i) {
                pairing.at(0, i) = mp[i];
                pairing.at(1, i) = mw[i];
            }
        }
        auto rrp = row_reduce(pairing);
        MatrixQ u2 = rrp.kernel;  // (n-2) x n
        Subspace U1 = Subspace::from_rows(n, u1);
        Subspace U2 = Subspace::from_rows(n, u2);
        if (intersect(U1, U2).dim() != 0) continue;
        auto [q1, q2] = decompose_form(q, U1, U2);

        // q2 as an element of Sym^2 U_2 in the basis given by the rows
        // of u2: solve  M_{q2} = u2^t * m2 * u2  for m2
        MatrixQ gram2 = u2 * u2.transpose();
        MatrixQ ginv = inverse_matrix(gram2);
        MatrixQ m2 = ginv * (u2 * q2.matrix() * u2.transpose()) * ginv;
        auto small_t = indexed_ring('y', n - 2);
        auto small_s = indexed_ring('x', n - 2);
        QuadraticForm q2small = QuadraticForm::from_matrix(small_t, m2);
        if (!q2small.nondegenerate()) continue;
        ApolarScheme inner = random_polar_simplex(q2small, rng.next(), small_s);
        std::vector<std::vector<Rat>> outer;
        bool good = true;
        for (const auto& c : inner.points()) {
            std::vector<Rat> v(n, Rat(0));
            for (std::size_t a2 = 0; a2 < n - 2; ++a2)
                for (std::size_t i = 0; i < n; ++i) v[i] += c[a2] * u2.at(a2, i);
            if (is_zero(v[n - 1])) good = false;  // must avoid {x_n = 0}
            outer.push_back(std::move(v));
        }
        if (!good) continue;

        // I_{Gamma,2} = (quadrics of the double point at p towards w)
        //              cap (quadrics through the simplex points)
        MatrixQ jet(2, s2.dim());
        for (std::size_t c = 0; c < s2.dim(); ++c) {
            const Expo& e = s2.basis[c];
            // value at p and first-order term of mono(p + t w)
            Rat v0(1), v1(0);
            for (std::size_t i = 0; i < n; ++i)
                for (unsigned k = 0; k < e[i]; ++k) v0 *= p[i];
            for (std::size_t i = 0; i < n; ++i) {
                if (e[i] == 0) continue;
                Rat dterm = Rat(static_cast<long>(e[i])) * w[i];
                for (std::size_t j = 0; j < n; ++j) {
                    unsigned rem = e[j] - (j == i ? 1 : 0);
                    for (unsigned k = 0; k < rem; ++k) dterm *= p[j];
                }
                v1 += dterm;
            }
            jet.at(0, c) = v0;
            jet.at(1, c) = v1;
        }
        Subspace ideal = Subspace::from_rows(s2.dim(), row_reduce(jet).kernel);
        for (const auto& v : outer) {
            MatrixQ row(1, s2.dim());
            for (std::size_t c = 0; c < s2.dim(); ++c) {
                Rat val(1);
                for (std::size_t i = 0; i < n; ++i)
                    for (unsigned k = 0; k < s2.basis[c][i]; ++k) val *= v[i];
                row.at(0, c) = val;
            }
            ideal = intersect(ideal, Subspace::from_rows(s2.dim(), row_reduce(row).kernel));
        }
        if (ideal.dim() != n * (n - 1) / 2) continue;
        ApolarScheme g = ApolarScheme::from_ideal(n, ideal, cs.sring());
        if (!is_apolar(g, q)) continue;
        ChartPoint pt = normal_form(cs, g);
        // on V^sec the trailing x_n^2 coefficients vanish
        bool sec_ok = true;
        for (auto [i, j] : cs.vars().pairs())
            if (!is_zero(pt.at(cs.vars(), i, j, static_cast<unsigned>(n)))) sec_ok = false;
        if (!sec_ok) continue;
        return pt;
    }
    fail(ErrorKind::Internal, "sec sample construction kept degenerating");
}

// V^vero as equations: the non-interior coordinates vanish and the
// symmetric flattening matrix (rows indexed by 2..n-1, columns by pairs)
// has rank 1.
inline std::vector<PolyQ> vero_equations(std::size_t n, const InteriorVars& iv) {
    unsigned nm1 = static_cast<unsigned>(n) - 1;
    std::vector<PolyQ> out;
    std::vector<std::array<unsigned, 3>> cells;
    for (unsigned i = 2; i <= nm1; ++i)
        for (unsigned j = 2; j <= nm1; ++j)
            for (unsigned k = j; k <= nm1; ++k) cells.push_back({i, j, k});
    for (std::size_t p = 0; p < cells.size(); ++p)
        for (std::size_t q = p + 1; q < cells.size(); ++q) {
            auto [i1, j1, k1] = cells[p];
            auto [i2, j2, k2] = cells[q];
            PolyQ g = iv.var(i1, j1, k1) * iv.var(i2, j2, k2) -
                      iv.var(i1, j2, k2) * iv.var(i2, j1, k1);
            if (!g.is_zero()) out.push_back(g);
        }
    // dedupe by span
    GradedPiece deg2(iv.ring(), 2);
    Subspace s = span_of_polys(deg2, out);
    return polys_of_subspace(deg2, s);
}

}  // namespace vps
