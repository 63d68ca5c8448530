#pragma once

#include <algorithm>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "vps/errors.hpp"

namespace vps {

// A polynomial ring descriptor: ordered variable names plus the field
// (prime == 0 means Q).  Rings are shared immutably by the values
// defined over them.
struct Ring {
    std::vector<std::string> vars;
    std::uint32_t prime = 0;

    std::size_t nvars() const { return vars.size(); }

    int var_index(const std::string& name) const {
        for (std::size_t i = 0; i < vars.size(); ++i)
            if (vars[i] == name) return static_cast<int>(i);
        return -1;
    }
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(std::vector<std::string> vars, std::uint32_t prime = 0) {
    auto r = std::make_shared<Ring>();
    r->vars = std::move(vars);
    r->prime = prime;
    return r;
}

// Ring with variables <letter>1 .. <letter>n.
inline RingPtr indexed_ring(char letter, std::size_t n, std::uint32_t prime = 0) {
    std::vector<std::string> vars;
    vars.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) vars.push_back(std::string(1, letter) + std::to_string(i));
    return make_ring(std::move(vars), prime);
}

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
    if (a == b) return true;
    return a && b && a->vars == b->vars && a->prime == b->prime;
}

using Expo = std::vector<unsigned>;

inline unsigned total_degree(const Expo& e) {
    unsigned d = 0;
    for (unsigned x : e) d += x;
    return d;
}

// Graded reverse lexicographic order with var 0 > var 1 > ... .
// Returns true iff a > b.
inline bool grevlex_greater(const Expo& a, const Expo& b) {
    unsigned da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    // a > b iff the last nonzero entry of a-b is negative
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

struct GrevlexDesc {
    bool operator()(const Expo& a, const Expo& b) const { return grevlex_greater(a, b); }
};

// All exponent vectors of the given total degree, in descending grevlex
// order (so the basis index of a monomial is its position here).
inline std::vector<Expo> monomial_basis(std::size_t nvars, unsigned degree) {
    std::vector<Expo> out;
    Expo cur(nvars, 0);
    // enumerate recursively, then sort canonically
    std::vector<std::pair<std::size_t, unsigned>> stack;
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned rem) {
        if (i + 1 == nvars) {
            cur[i] = rem;
            out.push_back(cur);
            cur[i] = 0;
            return;
        }
        for (unsigned e = 0; e <= rem; ++e) {
            cur[i] = e;
            rec(i + 1, rem - e);
        }
        cur[i] = 0;
    };
    if (nvars == 0) {
        if (degree == 0) out.push_back({});
        return out;
    }
    rec(0, degree);
    std::sort(out.begin(), out.end(), grevlex_greater);
    return out;
}

}  // namespace vps
