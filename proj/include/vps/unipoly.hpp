#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "vps/matrix.hpp"
#include "vps/rng.hpp"

namespace vps {

// Dense univariate polynomial over Q, coefficient of lambda^i at index i.
struct UniPoly {
    std::vector<Rat> c;

    void trim() {
        while (!c.empty() && is_zero(c.back())) c.pop_back();
    }
    bool zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for 0

    Rat eval(const Rat& x) const {
        Rat acc(0);
        for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
        return acc;
    }

    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.zero() || b.zero()) return {};
        UniPoly r;
        r.c.assign(a.c.size() + b.c.size() - 1, Rat(0));
        for (std::size_t i = 0; i < a.c.size(); ++i)
            for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
        return r;
    }

    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
        UniPoly r = a;
        r.c.resize(std::max(a.c.size(), b.c.size()), Rat(0));
        for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
        r.trim();
        return r;
    }

    UniPoly monic() const {
        UniPoly r = *this;
        if (r.zero()) return r;
        Rat lead = r.c.back();
        for (auto& x : r.c) x /= lead;
        return r;
    }
};

// remainder of a by b (b != 0)
inline UniPoly unipoly_rem(UniPoly a, const UniPoly& b) {
    a.trim();
    while (!a.zero() && a.degree() >= b.degree()) {
        Rat f = a.c.back() / b.c.back();
        std::size_t shift = a.c.size() - b.c.size();
        for (std::size_t i = 0; i < b.c.size(); ++i) a.c[shift + i] -= f * b.c[i];
        a.c.pop_back();
        a.trim();
    }
    return a;
}

inline UniPoly unipoly_gcd(UniPoly a, UniPoly b) {
    a.trim();
    b.trim();
    while (!b.zero()) {
        UniPoly r = unipoly_rem(a, b);
        a = b;
        b = r;
    }
    return a.monic();
}

// exact quotient by (x - root); the division must be exact
inline UniPoly deflate(const UniPoly& p, const Rat& root) {
    UniPoly q;
    q.c.assign(p.c.size() - 1, Rat(0));
    Rat carry = p.c.back();
    for (std::size_t i = p.c.size() - 1; i-- > 0;) {
        q.c[i] = carry;
        carry = p.c[i] + carry * root;
    }
    require(is_zero(carry), ErrorKind::Internal, "deflation by a non-root");
    return q;
}

// Lagrange interpolation through (x_i, y_i) with distinct x_i.
inline UniPoly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
    UniPoly acc;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        UniPoly term;
        term.c = {Rat(1)};
        Rat denom(1);
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            UniPoly lin;
            lin.c = {-xs[j], Rat(1)};
            term = term * lin;
            denom *= xs[i] - xs[j];
        }
        Rat f = ys[i] / denom;
        for (auto& x : term.c) x *= f;
        acc.c.resize(std::max(acc.c.size(), term.c.size()), Rat(0));
        for (std::size_t k = 0; k < term.c.size(); ++k) acc.c[k] += term.c[k];
    }
    acc.trim();
    return acc;
}

namespace detail {

inline void factor_into(Int n, std::map<Int, unsigned>& out);

inline Int pollard_rho(const Int& n) {
    if (n % 2 == 0) return 2;
    Rng rngseed(static_cast<std::uint64_t>(mpz_get_ui(n.get_mpz_t())));
    while (true) {
        Int x = rngseed.below(1000003) + 2, y = x, c = rngseed.below(1000003) + 1, d = 1;
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            Int diff = x - y;
            if (diff < 0) diff = -diff;
            if (diff == 0) break;
            d = gcd(diff, n);
        }
        if (d != 1 && d != n) return d;
    }
}

inline bool is_probable_prime(const Int& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0;
}

inline void factor_into(Int n, std::map<Int, unsigned>& out) {
    if (n <= 1) return;
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
        while (n % p == 0) {
            out[Int(p)]++;
            n /= p;
        }
    }
    if (n == 1) return;
    // trial division
    Int p = 17;
    while (p * p <= n && p < 100000) {
        while (n % p == 0) {
            out[p]++;
            n /= p;
        }
        p += 2;
    }
    if (n == 1) return;
    if (is_probable_prime(n)) {
        out[n]++;
        return;
    }
    Int d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

inline std::vector<Int> divisors(const Int& n) {
    std::map<Int, unsigned> f;
    Int m = n < 0 ? Int(-n) : n;
    factor_into(m, f);
    std::vector<Int> divs = {Int(1)};
    for (const auto& [p, e] : f) {
        std::size_t base = divs.size();
        Int pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    return divs;
}

}  // namespace detail

// All rational roots, with multiplicity, found by the rational root
// theorem on the primitive integer model (complete, not heuristic).
inline std::vector<Rat> rational_roots(const UniPoly& p0) {
    UniPoly p = p0;
    p.trim();
    std::vector<Rat> roots;
    if (p.zero() || p.degree() == 0) return roots;
    // strip roots at zero
    std::size_t low = 0;
    while (low < p.c.size() && is_zero(p.c[low])) ++low;
    for (std::size_t i = 0; i < low; ++i) roots.push_back(Rat(0));
    p.c.erase(p.c.begin(), p.c.begin() + low);
    if (p.degree() == 0) return roots;

    Int denlcm = 1;
    for (const auto& x : p.c) denlcm = lcm(denlcm, Int(x.get_den()));
    std::vector<Int> ic;
    Int content = 0;
    for (const auto& x : p.c) {
        Rat v = x * Rat(denlcm);
        ic.push_back(Int(v.get_num()));
        content = gcd(content, ic.back());
    }
    for (auto& x : ic) x /= content;

    auto ps = detail::divisors(ic.front());
    auto qs = detail::divisors(ic.back());
    std::vector<Rat> candidates;
    for (const auto& a : ps)
        for (const auto& b : qs) {
            candidates.push_back(make_rat(a, b));
            candidates.push_back(make_rat(-a, b));
        }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    UniPoly cur = p;
    bool again = true;
    while (again && cur.degree() > 0) {
        again = false;
        for (const auto& r : candidates) {
            if (is_zero(cur.eval(r))) {
                roots.push_back(r);
                cur = deflate(cur, r);
                again = true;
                break;
            }
        }
    }
    return roots;
}

}  // namespace vps
