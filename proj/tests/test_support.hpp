#pragma once

// Shared sampling helpers for the mod-p and acceptance suites.

#include "vps/chart_ops.hpp"
#include "vps/modp.hpp"

namespace vps_test {

using namespace vps;

// A curvilinear local apolar scheme of length 5 at p over F_p, in chart
// coordinates: a basis (x_2, x_3, x_4) of t*F_p[t]/(t^5, t^4-span) that
// is orthogonal with equal norms for the Hankel pairing
// <u, v> = u_1 v_3 + u_2 v_2 + u_3 v_1 (the t^4 coefficient of the
// product), plus x_1 = alpha t^4.  Over Q no such basis exists for
// q_std (a real-signature obstruction), which is exactly why this
// stratum is sampled over finite fields.
struct LocSample {
    std::uint32_t p;
    std::vector<Fp> interior;  // coordinates in InteriorVars(5) order
};

inline std::optional<LocSample> loc_curvilinear_sample(std::uint32_t p, std::uint64_t seed) {
    Rng rng(seed);
    auto fp = [&](std::int64_t v) { return Fp(v, p); };
    auto hankel = [&](const std::array<Fp, 3>& u, const std::array<Fp, 3>& v) {
        return u[0] * v[2] + u[1] * v[1] + u[2] * v[0];
    };
    for (int attempt = 0; attempt < 4000; ++attempt) {
        std::array<std::array<Fp, 3>, 3> c;
        for (auto& row : c)
            for (auto& x : row) x = fp(static_cast<std::int64_t>(rng.below(p)));
        // require C invertible and C H C^t = alpha I with alpha != 0
        Fp alpha = hankel(c[0], c[0]);
        if (is_zero(alpha)) continue;
        bool ok = true;
        for (int i = 0; i < 3 && ok; ++i)
            for (int j = i; j < 3 && ok; ++j) {
                Fp v = hankel(c[i], c[j]);
                if (i == j ? (v != alpha) : !is_zero(v)) ok = false;
            }
        if (!ok) continue;
        MatrixP cm(3, 3, fp(0));
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) cm.at(i, j) = c[i][j];
        if (row_reduce(cm).rank != 3) continue;

        // structure constants: x_i x_j - delta_ij alpha t^4 lies in
        // <t^2, t^3>, expressed back in the basis x_2..x_4
        InteriorVars iv(5);
        std::vector<Fp> interior(iv.list().size(), fp(0));
        bool solved = true;
        for (unsigned i = 2; i <= 4 && solved; ++i)
            for (unsigned j = i; j <= 4 && solved; ++j) {
                // product coefficients over (t^2, t^3, t^4)
                std::array<Fp, 3> prod = {fp(0), fp(0), fp(0)};
                for (int u = 0; u < 3; ++u)
                    for (int v = 0; v < 3; ++v) {
                        int pow = u + v + 2;  // t^{u+1} * t^{v+1}
                        if (pow <= 4) prod[pow - 2] += c[i - 2][u] * c[j - 2][v];
                    }
                if (i == j) prod[2] -= alpha;
                require(is_zero(prod[2]), ErrorKind::Internal, "hankel normalization failed");
                // solve sum_k a_k x_k = prod over (t, t^2, t^3): zero
                // t-coordinate, prod[0] at t^2, prod[1] at t^3
                MatrixP sys(3, 4, fp(0));
                for (int k = 0; k < 3; ++k)
                    for (int t = 0; t < 3; ++t) sys.at(t, k) = c[k][t];
                sys.at(0, 3) = fp(0);
                sys.at(1, 3) = prod[0];
                sys.at(2, 3) = prod[1];
                auto rr = row_reduce(sys);
                if (rr.rank != 3 || (rr.pivots.size() == 3 && rr.pivots[2] == 3)) {
                    solved = false;
                    break;
                }
                for (int k = 0; k < 3; ++k)
                    interior[iv.pos(i, j, static_cast<unsigned>(k + 2))] = rr.rref.at(k, 3);
            }
        if (!solved) continue;
        return LocSample{p, interior};
    }
    return std::nullopt;
}

}  // namespace vps_test
