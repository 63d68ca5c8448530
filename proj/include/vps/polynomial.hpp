#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "vps/ring.hpp"
#include "vps/scalar.hpp"

namespace vps {

// Sparse multivariate polynomial over an exact field K.  Terms are kept
// in descending grevlex order; zero coefficients are never stored, so
// equality is term-map equality.
template <typename K>
class Polynomial {
public:
    using TermMap = std::map<Expo, K, GrevlexDesc>;

    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }

    static Polynomial constant(RingPtr ring, const K& c) {
        Polynomial p(std::move(ring));
        p.add_term(Expo(p.ring_->nvars(), 0), c);
        return p;
    }

    static Polynomial variable(RingPtr ring, std::size_t idx, const K& one) {
        Polynomial p(ring);
        require(idx < ring->nvars(), ErrorKind::UnknownVariable, "variable index out of range");
        Expo e(ring->nvars(), 0);
        e[idx] = 1;
        p.add_term(e, one);
        return p;
    }

    static Polynomial monomial(RingPtr ring, const Expo& e, const K& c) {
        Polynomial p(std::move(ring));
        p.add_term(e, c);
        return p;
    }

    const RingPtr& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    unsigned degree() const {
        unsigned d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
        return d;
    }

    bool is_homogeneous(unsigned d) const {
        for (const auto& [e, c] : terms_)
            if (total_degree(e) != d) return false;
        return true;
    }

    void add_term(const Expo& e, const K& c) {
        require(e.size() == ring_->nvars(), ErrorKind::DimensionMismatch,
                "exponent vector length != ring variable count");
        if (vps::is_zero(c)) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (vps::is_zero(it->second)) terms_.erase(it);
        }
    }

    K coeff(const Expo& e) const {
        auto it = terms_.find(e);
        if (it == terms_.end()) return K();
        return it->second;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        require(same_ring(a.ring_, b.ring_), ErrorKind::DimensionMismatch, "ring mismatch in +");
        Polynomial r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        require(same_ring(a.ring_, b.ring_), ErrorKind::DimensionMismatch, "ring mismatch in -");
        Polynomial r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
        return r;
    }

    friend Polynomial operator-(const Polynomial& a) {
        Polynomial r(a.ring_);
        for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
        return r;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        require(same_ring(a.ring_, b.ring_), ErrorKind::DimensionMismatch, "ring mismatch in *");
        Polynomial r(a.ring_);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                Expo e(ea);
                for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
                r.add_term(e, ca * cb);
            }
        }
        return r;
    }

    friend Polynomial operator*(const Polynomial& a, const K& c) {
        Polynomial r(a.ring_);
        if (vps::is_zero(c)) return r;
        for (const auto& [e, k] : a.terms_) r.terms_.emplace(e, k * c);
        return r;
    }
    friend Polynomial operator*(const K& c, const Polynomial& a) { return a * c; }

    Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
    Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }
    Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Polynomial pow(unsigned e) const {
        Polynomial r = constant(ring_, field_one(K()));
        for (unsigned i = 0; i < e; ++i) r = r * (*this);
        return r;
    }

    // Evaluation at a point whose entries live in any ring T with
    // T*T, T+T and T*K defined (T = K, or T = Polynomial for symbolic
    // substitution).
    template <typename T>
    T eval(const std::vector<T>& values, const T& one) const {
        require(values.size() == ring_->nvars(), ErrorKind::DimensionMismatch,
                "evaluation point has wrong length");
        T acc = one - one;  // zero of T
        for (const auto& [e, c] : terms_) {
            T t = one;
            for (std::size_t i = 0; i < e.size(); ++i)
                for (unsigned j = 0; j < e[i]; ++j) t = t * values[i];
            acc = acc + t * c;
        }
        return acc;
    }

    // Linear substitution var_i -> sum_j C[i][j] var_j (C given as rows).
    Polynomial substitute_linear(const std::vector<std::vector<K>>& rows) const {
        std::vector<Polynomial> images;
        images.reserve(ring_->nvars());
        for (std::size_t i = 0; i < ring_->nvars(); ++i) {
            Polynomial li(ring_);
            require(rows[i].size() == ring_->nvars(), ErrorKind::DimensionMismatch,
                    "substitution matrix shape");
            for (std::size_t j = 0; j < ring_->nvars(); ++j) {
                Expo e(ring_->nvars(), 0);
                e[j] = 1;
                li.add_term(e, rows[i][j]);
            }
            images.push_back(li);
        }
        return eval(images, constant(ring_, field_one(K())));
    }

private:
    RingPtr ring_;
    TermMap terms_;
};

using PolyQ = Polynomial<Rat>;
using PolyP = Polynomial<Fp>;

// ---------------------------------------------------------------------
// The apolarity action: D in S acts on f in T as a constant-coefficient
// differential operator, var i of S mapping to d/d(var i of T).
// ---------------------------------------------------------------------
template <typename K>
Polynomial<K> diff_apply(const Polynomial<K>& D, const Polynomial<K>& f) {
    require(D.ring()->nvars() == f.ring()->nvars(), ErrorKind::DimensionMismatch,
            "diff_apply: variable counts differ");
    Polynomial<K> out(f.ring());
    for (const auto& [ed, cd] : D.terms()) {
        for (const auto& [ef, cf] : f.terms()) {
            bool ok = true;
            K factor = cd * cf;
            Expo e(ef);
            for (std::size_t i = 0; i < e.size() && ok; ++i) {
                if (ef[i] < ed[i]) { ok = false; break; }
                for (unsigned j = 0; j < ed[i]; ++j) factor *= K(static_cast<long>(ef[i] - j));
                e[i] = ef[i] - ed[i];
            }
            if (ok) out.add_term(e, factor);
        }
    }
    return out;
}

// ---------------------------------------------------------------------
// Text format.  Grammar (whitespace insignificant):
//   poly   := ['+'|'-'] term (('+'|'-') term)*
//   term   := coeff ('*'? varpow)* | varpow ('*' varpow)*
//   coeff  := int ('/' uint)?
//   varpow := name ('^' uint)?
// Names are the ring's variable names (longest match wins).
// ---------------------------------------------------------------------
namespace detail {

inline void skip_ws(const std::string& s, std::size_t& i) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

inline Int parse_uint(const std::string& s, std::size_t& i) {
    skip_ws(s, i);
    require(i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])), ErrorKind::SyntaxError,
            "expected digit at byte " + std::to_string(i));
    std::string digits;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) digits += s[i++];
    return Int(digits);
}

// Longest variable-name match at position i, or -1.
inline int match_var(const Ring& ring, const std::string& s, std::size_t& i) {
    int best = -1;
    std::size_t best_len = 0;
    for (std::size_t v = 0; v < ring.vars.size(); ++v) {
        const std::string& name = ring.vars[v];
        if (name.size() > best_len && s.compare(i, name.size(), name) == 0) {
            best = static_cast<int>(v);
            best_len = name.size();
        }
    }
    if (best >= 0) i += best_len;
    return best;
}

}  // namespace detail

inline PolyQ parse_poly(const std::string& text, const RingPtr& ring) {
    using detail::skip_ws;
    PolyQ out(ring);
    std::size_t i = 0;
    skip_ws(text, i);
    require(i < text.size(), ErrorKind::SyntaxError, "empty input");
    bool first = true;
    while (true) {
        skip_ws(text, i);
        int sign = 1;
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
        } else {
            require(first, ErrorKind::SyntaxError, "expected '+' or '-' at byte " + std::to_string(i));
        }
        skip_ws(text, i);
        require(i < text.size(), ErrorKind::SyntaxError, "dangling sign at byte " + std::to_string(i));

        Rat coeff(1);
        bool saw_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(text[i]))) {
            Int num = detail::parse_uint(text, i);
            Int den = 1;
            skip_ws(text, i);
            if (i < text.size() && text[i] == '/') {
                ++i;
                den = detail::parse_uint(text, i);
                require(den != 0, ErrorKind::SyntaxError, "zero denominator at byte " + std::to_string(i));
            }
            coeff = make_rat(num, den);
            saw_coeff = true;
        }
        Expo e(ring->nvars(), 0);
        bool saw_var = false;
        while (true) {
            skip_ws(text, i);
            std::size_t save = i;
            if (i < text.size() && text[i] == '*') {
                ++i;
                skip_ws(text, i);
            }
            if (i >= text.size()) {
                require(save == i, ErrorKind::SyntaxError, "dangling '*' at byte " + std::to_string(save));
                break;
            }
            std::size_t before = i;
            int v = detail::match_var(*ring, text, i);
            if (v < 0) {
                // a '*' must be followed by a variable
                require(save == before, ErrorKind::SyntaxError,
                        "expected variable after '*' at byte " + std::to_string(before));
                if (std::isalpha(static_cast<unsigned char>(text[before])))
                    fail(ErrorKind::UnknownVariable, "unknown variable at byte " + std::to_string(before));
                break;
            }
            unsigned exp = 1;
            skip_ws(text, i);
            if (i < text.size() && text[i] == '^') {
                ++i;
                Int p = detail::parse_uint(text, i);
                require(p.fits_uint_p(), ErrorKind::SyntaxError, "exponent too large");
                exp = static_cast<unsigned>(p.get_ui());
            }
            e[v] += exp;
            saw_var = true;
        }
        require(saw_coeff || saw_var, ErrorKind::SyntaxError,
                "expected term at byte " + std::to_string(i));
        out.add_term(e, sign < 0 ? Rat(-coeff) : coeff);
        skip_ws(text, i);
        if (i >= text.size()) break;
        require(text[i] == '+' || text[i] == '-', ErrorKind::SyntaxError,
                "unexpected character at byte " + std::to_string(i));
        first = false;
    }
    return out;
}

// Canonical printer: terms in descending grevlex order, coefficients in
// lowest terms, unit coefficients omitted next to variables.
inline std::string print_poly(const PolyQ& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        Rat a = c;
        bool neg = sgn(a) < 0;
        if (neg) a = -a;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        std::string vars;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += p.ring()->vars[i];
            if (e[i] > 1) vars += "^" + std::to_string(e[i]);
        }
        if (vars.empty()) {
            os << a.get_str();
        } else if (a == 1) {
            os << vars;
        } else {
            os << a.get_str() << "*" << vars;
        }
    }
    return os.str();
}

}  // namespace vps
