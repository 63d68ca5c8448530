#pragma once

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <thread>

#include "vps/polynomial.hpp"
#include "vps/matrix.hpp"

namespace vps {

// Brute-force verification utilities over small prime fields.

inline bool small_odd_prime(std::uint32_t p) {
    if (p < 3 || p % 2 == 0) return false;
    for (std::uint32_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

struct AffineSystem {
    std::uint32_t p = 0;
    std::size_t nvars = 0;
    std::vector<PolyP> polys;

    AffineSystem(std::uint32_t prime, std::size_t vars, std::vector<PolyP> ps)
        : p(prime), nvars(vars), polys(std::move(ps)) {
        require(small_odd_prime(p), ErrorKind::DimensionMismatch,
                "p must be an odd prime below 2^31");
        for (const auto& f : polys)
            require(f.ring()->nvars() == nvars, ErrorKind::DimensionMismatch,
                    "system polynomial has wrong variable count");
    }
};

// Coefficient-wise reduction mod p; denominators must be units.
inline PolyP reduce_mod_p(const PolyQ& f, std::uint32_t p, const RingPtr& pring) {
    PolyP out(pring);
    for (const auto& [e, c] : f.terms()) {
        Int num = c.get_num() % p;
        Int den = c.get_den() % p;
        require(den != 0, ErrorKind::FieldMismatch,
                "coefficient denominator vanishes mod p");
        Fp fc(num.get_si(), p);
        Fp fd(den.get_si(), p);
        out.add_term(e, fc * inverse(fd));
    }
    return out;
}

inline AffineSystem reduce_system(const std::vector<PolyQ>& polys, std::uint32_t p) {
    require(!polys.empty(), ErrorKind::DimensionMismatch, "empty polynomial list");
    std::size_t nv = polys[0].ring()->nvars();
    RingPtr pring = make_ring(polys[0].ring()->vars, p);
    std::vector<PolyP> out;
    for (const auto& f : polys) out.push_back(reduce_mod_p(f, p, pring));
    return AffineSystem(p, nv, std::move(out));
}

namespace detail {

// compiled evaluation form: terms as (coefficient, packed exponents)
struct CompiledPoly {
    struct Term {
        std::int64_t coeff;
        std::vector<std::pair<std::size_t, unsigned>> exps;
    };
    std::vector<Term> terms;

    static CompiledPoly compile(const PolyP& f) {
        CompiledPoly out;
        for (const auto& [e, c] : f.terms()) {
            Term t;
            t.coeff = c.value;
            for (std::size_t i = 0; i < e.size(); ++i)
                if (e[i] > 0) t.exps.push_back({i, e[i]});
            out.terms.push_back(std::move(t));
        }
        return out;
    }

    std::int64_t eval(const std::vector<std::int64_t>& x, std::int64_t p) const {
        std::int64_t acc = 0;
        for (const auto& t : terms) {
            std::int64_t v = t.coeff;
            for (const auto& [i, e] : t.exps)
                for (unsigned k = 0; k < e; ++k) v = v * x[i] % p;
            acc = (acc + v) % p;
        }
        return acc;
    }
};

inline std::uint64_t count_block(const AffineSystem& sys,
                                 const std::vector<detail::CompiledPoly>& compiled,
                                 std::int64_t first_value) {
    std::vector<std::int64_t> x(sys.nvars, 0);
    x[0] = first_value;
    std::uint64_t count = 0;
    std::int64_t p = sys.p;
    while (true) {
        bool ok = true;
        for (const auto& f : compiled) {
            if (f.eval(x, p) != 0) {
                ok = false;
                break;
            }
        }
        if (ok) ++count;
        // odometer over coordinates 1..n-1 (coordinate 0 is the block)
        std::size_t i = 1;
        while (i < sys.nvars && ++x[i] == p) x[i++] = 0;
        if (i == sys.nvars) break;
        if (sys.nvars == 1) break;
    }
    return count;
}

}  // namespace detail

inline unsigned thread_budget() {
    if (const char* env = std::getenv("VPS_THREADS")) {
        long v = std::atol(env);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

// Exact number of common zeros in F_p^v, by enumeration with early
// rejection.  Partitioned by the value of the first variable; the
// blocks are summed in fixed order, so the result does not depend on
// the thread count.
inline std::uint64_t count_points(const AffineSystem& sys) {
    double size = std::pow(static_cast<double>(sys.p), static_cast<double>(sys.nvars));
    require(size <= 1e8, ErrorKind::ResourceBound, "p^v exceeds the enumeration bound");
    std::vector<detail::CompiledPoly> compiled;
    for (const auto& f : sys.polys) compiled.push_back(detail::CompiledPoly::compile(f));
    if (sys.nvars == 0) {
        for (const auto& f : compiled)
            if (!f.terms.empty() && f.terms[0].coeff % sys.p != 0) return 0;
        return 1;
    }

    std::vector<std::uint64_t> block(sys.p, 0);
    unsigned threads = std::min<unsigned>(thread_budget(), sys.p);
    if (threads <= 1) {
        for (std::uint32_t b = 0; b < sys.p; ++b)
            block[b] = detail::count_block(sys, compiled, b);
    } else {
        std::vector<std::thread> pool;
        std::atomic<std::uint32_t> next{0};
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back([&]() {
                while (true) {
                    std::uint32_t b = next.fetch_add(1);
                    if (b >= sys.p) return;
                    block[b] = detail::count_block(sys, compiled, b);
                }
            });
        for (auto& th : pool) th.join();
    }
    std::uint64_t total = 0;
    for (std::uint32_t b = 0; b < sys.p; ++b) total += block[b];
    return total;
}

// Rank of the Jacobian at a point satisfying the system exactly.
template <typename K>
std::size_t jacobian_rank(const std::vector<Polynomial<K>>& polys, const std::vector<K>& point) {
    require(!polys.empty(), ErrorKind::DimensionMismatch, "empty system");
    std::size_t nv = polys[0].ring()->nvars();
    K one = field_one(point.empty() ? K() : point[0]);
    for (const auto& f : polys)
        require(is_zero(f.eval(point, one)), ErrorKind::NotOnVariety,
                "point does not satisfy the system");
    Matrix<K> jac(polys.size(), nv);
    for (std::size_t r = 0; r < polys.size(); ++r) {
        for (std::size_t v = 0; v < nv; ++v) {
            // partial derivative
            Polynomial<K> d(polys[r].ring());
            for (const auto& [e, c] : polys[r].terms()) {
                if (e[v] == 0) continue;
                Expo f2 = e;
                f2[v] -= 1;
                d.add_term(f2, c * K(static_cast<long>(e[v])));
            }
            jac.at(r, v) = d.eval(point, one);
        }
    }
    return row_reduce(jac).rank;
}

}  // namespace vps
