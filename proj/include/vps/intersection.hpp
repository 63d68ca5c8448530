#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <vector>

#include "vps/scalar.hpp"

namespace vps {

// A partition lambda of m = C(n,2) into n parts with n-1 >= l_1 >= ... >= l_n >= 0,
// with the zero-free multiplicity vector lambda^*.
struct Partition {
    std::size_t n = 0;
    std::vector<unsigned> parts;           // length n, weakly decreasing
    std::vector<unsigned> multiplicities;  // index i-1 counts parts equal to i, i = 1..n-1

    unsigned m() const {
        unsigned s = 0;
        for (auto p : parts) s += p;
        return s;
    }
};

// All partitions of m = C(n,2) into at most n parts bounded by n-1,
// zero-padded to length n, in decreasing lexicographic order.
inline std::vector<Partition> partitions(std::size_t n) {
    require(n >= 2, ErrorKind::UnsupportedN, "partitions needs n >= 2");
    unsigned m = static_cast<unsigned>(n * (n - 1) / 2);
    std::vector<Partition> out;
    std::vector<unsigned> cur;
    std::function<void(unsigned, unsigned)> rec = [&](unsigned remaining, unsigned maxpart) {
        if (cur.size() == n) {
            if (remaining == 0) {
                Partition p;
                p.n = n;
                p.parts = cur;
                p.multiplicities.assign(n - 1, 0);
                for (auto x : cur)
                    if (x > 0) p.multiplicities[x - 1]++;
                out.push_back(std::move(p));
            }
            return;
        }
        unsigned hi = std::min(maxpart, remaining);
        for (unsigned v = hi + 1; v-- > 0;) {
            cur.push_back(v);
            rec(remaining - v, v);
            cur.pop_back();
            if (v == 0) break;
        }
    };
    rec(m, static_cast<unsigned>(n - 1));
    return out;
}

// The intersection number  prod_{i<j} (D_i + D_j)  on
// P^{n-1-l_1} x ... x P^{n-1-l_n}:  the coefficient of the top monomial
// prod D_i^{n-1-l_i}, computed by an incremental capped expansion.
inline Int d_lambda(std::size_t n, const Partition& lam) {
    require(lam.n == n && lam.parts.size() == n, ErrorKind::DimensionMismatch,
            "partition does not fit n");
    std::vector<unsigned> caps(n);
    for (std::size_t i = 0; i < n; ++i) {
        require(lam.parts[i] <= n - 1, ErrorKind::DimensionMismatch, "part exceeds n-1");
        caps[i] = static_cast<unsigned>(n - 1) - lam.parts[i];
    }
    std::map<std::vector<unsigned>, Int> state;
    state[std::vector<unsigned>(n, 0)] = 1;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            std::map<std::vector<unsigned>, Int> next;
            for (const auto& [e, c] : state) {
                if (e[i] < caps[i]) {
                    auto f = e;
                    f[i]++;
                    next[f] += c;
                }
                if (e[j] < caps[j]) {
                    auto f = e;
                    f[j]++;
                    next[f] += c;
                }
            }
            state.swap(next);
        }
    }
    auto it = state.find(caps);
    return it == state.end() ? Int(0) : it->second;
}

// One summand of the degree formula: multinomial(m; lambda) / lambda^*! * d_lambda.
struct DegreeTerm {
    Partition lambda;
    Int multinomial;
    Int mult_factorial;  // lambda^*!
    Int d;
    Int summand;
};

inline DegreeTerm degree_term(std::size_t n, const Partition& lam) {
    DegreeTerm t;
    t.lambda = lam;
    unsigned m = lam.m();
    Int multi = factorial(m);
    for (auto p : lam.parts) multi /= factorial(p);
    t.multinomial = multi;
    Int mf = 1;
    for (auto c : lam.multiplicities) mf *= factorial(c);
    t.mult_factorial = mf;
    t.d = d_lambda(n, lam);
    Int num = t.multinomial * t.d;
    require(num % mf == 0, ErrorKind::Internal, "degree summand is not integral");
    t.summand = num / mf;
    return t;
}

// deg VPS(Q,n) = sum over partitions of multinomial/lambda^*! * d_lambda.
inline Int vps_degree(std::size_t n) {
    require(n >= 2, ErrorKind::UnsupportedN, "vps_degree needs n >= 2");
    Int total = 0;
    for (const auto& lam : partitions(n)) total += degree_term(n, lam).summand;
    return total;
}

}  // namespace vps
