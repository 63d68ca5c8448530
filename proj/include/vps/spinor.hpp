#pragma once

#include "vps/chart_ops.hpp"

namespace vps {

// ---------------------------------------------------------------------
// The n = 6 identification: eliminating the ten weight-2 coordinates
// with a "6" in the index from the twenty weight-2 chart generators
// leaves ten quadrics in sixteen linear forms of the interior
// coordinates, and those are spinor coordinates of S_10 in P^15.
// ---------------------------------------------------------------------

struct SpinorCheck {
    std::vector<PolyQ> eliminated;      // ten quadrics in the interior variables
    std::vector<PolyQ> renamed;         // q_0..q_9 in the sixteen abstract variables
    std::vector<PolyQ> substituted;     // q_0..q_9 pushed into the interior variables
    bool spans_match = false;           // eliminated span == substituted span
    bool relation_holds = false;        // q0 q5 + q1 q6 + q2 q7 + q3 q8 + q4 q9 == 0
    bool pfaffian_structure = false;    // q_0..q_4 are x_0 * x_I + Pfaffian(x_st)
    bool ok() const { return spans_match && relation_holds && pfaffian_structure; }
};

namespace detail {

// names and order of the sixteen spinor coordinates
inline const std::vector<std::string>& spinor_names() {
    static const std::vector<std::string> names = {
        "x0",    "x12",   "x13",   "x14",   "x15",   "x23",   "x24",   "x25",
        "x34",   "x35",   "x45",   "x1234", "x1235", "x1245", "x1345", "x2345"};
    return names;
}

}  // namespace detail

inline SpinorCheck spinor_check() {
    const std::size_t n = 6;
    const ChartSystem& cs = chart_system(n);
    const ChartVars& vars = cs.vars();
    const RingPtr& R = vars.sym_ring();

    SpinorCheck out;

    // 1. the twenty weight-2 generators, symmetrized
    std::vector<PolyQ> w2;
    for (std::size_t g = 0; g < cs.generators_sym().size(); ++g)
        if (cs.generator_weights()[g] == 2) w2.push_back(cs.generators_sym()[g]);
    require(w2.size() == 20, ErrorKind::Internal, "expected twenty weight-2 generators");

    // 2. eliminate the ten weight-2 variables a_{1jk} (the a_{ij6} of the
    //    fully symmetric notation): order monomials so that those come
    //    first, reduce, and keep the rows supported on the rest
    std::vector<Expo> monos;
    for (const auto& f : w2)
        for (const auto& [e, c] : f.terms()) monos.push_back(e);
    std::sort(monos.begin(), monos.end(), grevlex_greater);
    monos.erase(std::unique(monos.begin(), monos.end()), monos.end());
    auto involves_weight2_var = [&](const Expo& e) {
        for (std::size_t t = 0; t < e.size(); ++t) {
            if (e[t] == 0) continue;
            const SymIndex& s = vars.sym_list()[t];
            if (vars.sym_weight(s) != 1) return true;
        }
        return false;
    };
    std::stable_partition(monos.begin(), monos.end(), involves_weight2_var);
    std::size_t forbidden = 0;
    while (forbidden < monos.size() && involves_weight2_var(monos[forbidden])) ++forbidden;

    MatrixQ rows(w2.size(), monos.size());
    for (std::size_t r = 0; r < w2.size(); ++r)
        for (const auto& [e, c] : w2[r].terms()) {
            std::size_t col = std::find(monos.begin(), monos.end(), e) - monos.begin();
            rows.at(r, col) = c;
        }
    auto rr = row_reduce(rows);
    for (std::size_t r = 0; r < rr.rank; ++r) {
        if (rr.pivots[r] < forbidden) continue;
        PolyQ f(R);
        for (std::size_t c = forbidden; c < monos.size(); ++c) f.add_term(monos[c], rr.rref.at(r, c));
        out.eliminated.push_back(f);
    }

    // 3. the renaming: sixteen linear forms in the interior variables
    RingPtr X = make_ring(detail::spinor_names());
    auto a = [&](unsigned u, unsigned v, unsigned w) { return vars.sym_var(u, v, w); };
    std::map<std::string, PolyQ> rename;
    rename["x1234"] = -a(3, 3, 5) + a(2, 2, 5);
    rename["x15"] = -a(5, 5, 5) + a(4, 4, 5) + a(3, 3, 5) + a(2, 2, 5);
    rename["x34"] = a(3, 4, 5);
    rename["x1235"] = a(4, 5, 5) - a(4, 4, 4) + a(3, 3, 4) + a(2, 2, 4);
    rename["x14"] = a(3, 3, 4) - a(2, 2, 4);
    rename["x35"] = a(3, 5, 5) - a(2, 2, 3);
    rename["x1245"] = -a(3, 5, 5) - a(3, 4, 4) + a(3, 3, 3) - a(2, 2, 3);
    rename["x13"] = a(3, 5, 5) - a(3, 4, 4);
    rename["x24"] = a(2, 4, 5);
    rename["x1345"] = a(2, 5, 5) + a(2, 4, 4) + a(2, 3, 3) - a(2, 2, 2);
    rename["x12"] = a(2, 5, 5) - a(2, 4, 4);
    rename["x23"] = a(2, 3, 5);
    rename["x2345"] = a(4, 4, 5) - a(3, 3, 5);
    rename["x45"] = a(4, 5, 5) - a(2, 2, 4);
    rename["x25"] = -a(2, 4, 4) + a(2, 3, 3);
    rename["x0"] = a(2, 3, 4);

    // 4. q_0..q_9 in the abstract variables
    auto xv = [&](const std::string& name) {
        int idx = X->var_index(name);
        require(idx >= 0, ErrorKind::Internal, "bad spinor name");
        return PolyQ::variable(X, static_cast<std::size_t>(idx), Rat(1));
    };
    PolyQ x0 = xv("x0"), x12 = xv("x12"), x13 = xv("x13"), x14 = xv("x14"), x15 = xv("x15"),
          x23 = xv("x23"), x24 = xv("x24"), x25 = xv("x25"), x34 = xv("x34"), x35 = xv("x35"),
          x45 = xv("x45"), x1234 = xv("x1234"), x1235 = xv("x1235"), x1245 = xv("x1245"),
          x1345 = xv("x1345"), x2345 = xv("x2345");
    // q_2 carries the Pfaffian sign on x14 x25 (the quadratic relation
    // below forces it; the alternating pattern matches q_0, q_1, q_3, q_4)
    out.renamed = {
        x25 * x34 - x35 * x24 + x45 * x23 + x2345 * x0,
        -x45 * x13 + x14 * x35 - x15 * x34 + x1345 * x0,
        x45 * x12 - x14 * x25 + x15 * x24 + x1245 * x0,
        -x35 * x12 + x13 * x25 - x15 * x23 + x1235 * x0,
        x12 * x34 - x13 * x24 + x14 * x23 + x1234 * x0,
        x1345 * x12 + x1245 * x13 + x1235 * x14 + x15 * x1234,
        -x2345 * x12 + x1245 * x23 + x1235 * x24 + x1234 * x25,
        -x2345 * x13 - x1345 * x23 + x1235 * x34 + x1234 * x35,
        -x2345 * x14 - x1345 * x24 - x1245 * x34 + x1234 * x45,
        -x15 * x2345 - x1345 * x25 - x1245 * x35 - x1235 * x45,
    };

    // 5. substitute the renaming
    std::vector<PolyQ> images;
    for (const auto& name : detail::spinor_names()) images.push_back(rename.at(name));
    PolyQ one = PolyQ::constant(R, Rat(1));
    for (const auto& q : out.renamed) out.substituted.push_back(q.eval(images, one));

    // 6. compare spans inside the quadratic part of the interior ring
    {
        GradedPiece deg2(R, 2);
        out.spans_match = out.eliminated.size() == 10 &&
                          span_of_polys(deg2, out.eliminated) ==
                              span_of_polys(deg2, out.substituted);
    }

    // 7. the quadratic relation among the ten spinor quadrics
    {
        PolyQ rel(X);
        for (int i = 0; i < 5; ++i) rel += out.renamed[i] * out.renamed[i + 5];
        out.relation_holds = rel.is_zero();
    }

    // 8. q_0..q_4 express the x_{ijkl} as quadratic Pfaffians at x_0 = 1
    {
        const std::string four_index[5] = {"x2345", "x1345", "x1245", "x1235", "x1234"};
        out.pfaffian_structure = true;
        for (int i = 0; i < 5 && out.pfaffian_structure; ++i) {
            PolyQ residue = out.renamed[i] - x0 * xv(four_index[i]);
            for (const auto& [e, c] : residue.terms()) {
                for (std::size_t t = 0; t < e.size(); ++t) {
                    if (e[t] == 0) continue;
                    const std::string& name = X->vars[t];
                    if (name == "x0" || name.size() > 3) out.pfaffian_structure = false;
                }
            }
        }
    }
    return out;
}

}  // namespace vps
