#pragma once

#include "ilo/split_epi.hpp"

// Digroups (two group laws sharing a unit), left skew braces, and the two
// forgetful hyperindexes a brace split epi carries.

namespace ilo {

struct Digroup {
    FiniteGroup star;
    FiniteGroup circ;

    int order() const { return star.order; }
    int unit() const { return star.unit; }
};

inline Digroup make_digroup(OpTable star, OpTable circ, std::string name = "") {
    UnitalGroupCheck gs = group_law(star);
    UnitalGroupCheck gc = group_law(circ);
    if (!gs.ok || !gc.ok) fail(errc::invalid_table, "both laws must be group laws");
    if (gs.unit != gc.unit) fail(errc::unit_mismatch, "the two laws have different units");
    Digroup d{make_group(std::move(star), name), make_group(std::move(circ), name)};
    return d;
}

// a∘(b*c) = (a∘b) * a^{-*} * (a∘c)
inline bool is_skew_brace(const Digroup& d) {
    const int n = d.order();
    for (int a = 0; a < n; ++a) {
        int ainv = d.star.inverse(a);
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                int lhs = d.circ.op(a, d.star.op(b, c));
                int rhs = d.star.op(d.star.op(d.circ.op(a, b), ainv), d.circ.op(a, c));
                if (lhs != rhs) return false;
            }
    }
    return true;
}

struct SkewBrace {
    Digroup dg;

    int order() const { return dg.order(); }
};

inline SkewBrace make_skew_brace(Digroup d) {
    if (!is_skew_brace(d)) fail(errc::not_skew_brace, "the skew-brace axiom fails");
    return SkewBrace{std::move(d)};
}

// (G, *, *) — a brace on any group.
inline SkewBrace trivial_brace(const FiniteGroup& g) {
    OpTable a = g.mult, b = g.mult;
    return make_skew_brace(make_digroup(std::move(a), std::move(b), g.name));
}

// (G, *, *ᵒᵖ) — also a brace on any group, nontrivial when G is nonabelian.
inline SkewBrace opposite_brace(const FiniteGroup& g) {
    OpTable a = g.mult;
    OpTable b = make_table(g.order, [&](int x, int y) { return g.op(y, x); });
    return make_skew_brace(make_digroup(std::move(a), std::move(b), g.name + "op"));
}

struct BraceSplitEpi {
    SkewBrace total;
    SkewBrace base;
    std::vector<int> f;
    std::vector<int> s;
    std::vector<int> kernel;        // f⁻¹(unit); the same set for both laws
    std::vector<int> kernel_index;
};

inline BraceSplitEpi make_brace_split_epi(SkewBrace total, SkewBrace base, std::vector<int> f,
                                          std::vector<int> s) {
    detail::check_map_shape(f, total.order(), base.order(), "f");
    detail::check_map_shape(s, base.order(), total.order(), "s");
    if (!is_group_hom(total.dg.star, base.dg.star, f) ||
        !is_group_hom(total.dg.circ, base.dg.circ, f))
        fail(errc::not_bihomomorphism, "f must be a homomorphism for both laws");
    if (!is_group_hom(base.dg.star, total.dg.star, s) ||
        !is_group_hom(base.dg.circ, total.dg.circ, s))
        fail(errc::not_bihomomorphism, "s must be a homomorphism for both laws");
    for (int y = 0; y < base.order(); ++y)
        if (f[s[y]] != y) fail(errc::not_section, "f∘s is not the identity", y);
    BraceSplitEpi e{std::move(total), std::move(base), std::move(f), std::move(s), {}, {}};
    e.kernel_index.assign(e.total.order(), -1);
    for (int x = 0; x < e.total.order(); ++x)
        if (e.f[x] == e.base.dg.unit()) {
            e.kernel_index[x] = static_cast<int>(e.kernel.size());
            e.kernel.push_back(x);
        }
    return e;
}

// γ_*(x) = s(f(x))^{-*} * x and γ_∘(x) = s(f(x))^{-∘} ∘ x, each checked as a
// hyperindex against the shared kernel.
inline std::pair<IndexWitness, IndexWitness> brace_indexes(const BraceSplitEpi& e) {
    const int n = e.total.order();
    std::vector<int> gstar(n), gcirc(n);
    const FiniteGroup& st = e.total.dg.star;
    const FiniteGroup& ci = e.total.dg.circ;
    for (int x = 0; x < n; ++x) {
        int sf = e.s[e.f[x]];
        gstar[x] = st.op(st.inverse(sf), x);
        gcirc[x] = ci.op(ci.inverse(sf), x);
    }
    IndexWitness ws =
        detail::finish_witness(e, std::move(gstar), n, e.base.order(), e.total.dg.unit());
    IndexWitness wc =
        detail::finish_witness(e, std::move(gcirc), n, e.base.order(), e.total.dg.unit());
    return {std::move(ws), std::move(wc)};
}

}  // namespace ilo
