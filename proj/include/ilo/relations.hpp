#pragma once

#include "ilo/split_epi.hpp"

// Acupuncturing elements, split epis and reflexive relations on prequandles,
// pullbacks of split epis with the jointly-strongly-epic closure check, the
// Mal'tsev term of latin prequandles, and the autonomy checks.

namespace ilo {

// y ↦ x▷y is a permutation.
inline bool is_acupuncturing_element(const IloModel& m, int x) {
    if (!m.flags.test(StructureClass::Prequandle))
        fail(errc::not_prequandle, "acupuncturing is defined on prequandles");
    return is_permutation(row_map(m.d, x));
}

// s(y) acts bijectively on the fiber f⁻¹(y) for every base element y.
inline bool is_acupuncturing_split_epi(const ModelSplitEpi& e) {
    const int n = e.total.order();
    for (int y = 0; y < e.base.order(); ++y) {
        std::vector<int> fiber;
        for (int x = 0; x < n; ++x)
            if (e.f[x] == y) fiber.push_back(x);
        std::vector<char> hit(n, 0);
        for (int u : fiber) {
            int v = e.total.d.at(e.s[y], u);
            if (e.f[v] != y || hit[v]) return false;
            hit[v] = 1;
        }
    }
    return true;
}

// θ_y: the fiber inverse of u ↦ s(y)▷u, materialized per base element; only
// defined for acupuncturing split epis.
inline std::optional<std::vector<std::vector<int>>> acupuncturing_thetas(const ModelSplitEpi& e) {
    if (!is_acupuncturing_split_epi(e)) return std::nullopt;
    const int n = e.total.order();
    std::vector<std::vector<int>> thetas(e.base.order(), std::vector<int>(n, -1));
    for (int y = 0; y < e.base.order(); ++y)
        for (int u = 0; u < n; ++u)
            if (e.f[u] == y) thetas[y][e.total.d.at(e.s[y], u)] = u;  // s(y)▷θ_y(v) = v
    return thetas;
}

// ---- pullbacks of split epis -----------------------------------------------------

struct PullbackOfSplitEpis {
    ModelSplitEpi left;   // (f, s): X ⇄ Z
    ModelSplitEpi right;  // (g, t): Y ⇄ Z
    std::vector<std::pair<int, int>> carrier;  // {(x, y) | f(x) = g(y)}, lex order
    IloModel model;                            // componentwise operation
    std::vector<int> inj_x;  // ι_X(x) = (x, t(f(x))) as a carrier index
    std::vector<int> inj_y;  // ι_Y(y) = (s(g(y)), y)
};

inline PullbackOfSplitEpis make_pullback(ModelSplitEpi left, ModelSplitEpi right) {
    if (!(left.base.d == right.base.d))
        fail(errc::bad_input, "pullback legs must share the base");
    PullbackOfSplitEpis p;
    std::map<std::pair<int, int>, int> index;
    for (int x = 0; x < left.total.order(); ++x)
        for (int y = 0; y < right.total.order(); ++y)
            if (left.f[x] == right.f[y]) {
                index[{x, y}] = static_cast<int>(p.carrier.size());
                p.carrier.emplace_back(x, y);
            }
    const int n = static_cast<int>(p.carrier.size());
    OpTable t = make_table(n, [&](int a, int b) {
        auto [xa, ya] = p.carrier[a];
        auto [xb, yb] = p.carrier[b];
        return index.at({left.total.d.at(xa, xb), right.total.d.at(ya, yb)});
    });
    p.model = make_model(std::move(t));
    p.inj_x.resize(left.total.order());
    for (int x = 0; x < left.total.order(); ++x)
        p.inj_x[x] = index.at({x, right.s[left.f[x]]});
    p.inj_y.resize(right.total.order());
    for (int y = 0; y < right.total.order(); ++y)
        p.inj_y[y] = index.at({left.s[right.f[y]], y});
    p.left = std::move(left);
    p.right = std::move(right);
    return p;
}

// The canonical pair of injections is jointly strongly epic iff the
// subalgebra they generate is the whole pullback.
inline bool jointly_strongly_epic_check(const PullbackOfSplitEpis& p) {
    std::vector<int> seed = p.inj_x;
    seed.insert(seed.end(), p.inj_y.begin(), p.inj_y.end());
    return static_cast<int>(subalgebra_closure(p.model, std::move(seed)).size()) ==
           p.model.order();
}

// Closure trace for the report: carrier pairs in the order they are reached.
inline std::vector<std::pair<int, int>> pullback_closure_trace(const PullbackOfSplitEpis& p) {
    std::vector<int> seed = p.inj_x;
    seed.insert(seed.end(), p.inj_y.begin(), p.inj_y.end());
    std::vector<std::pair<int, int>> out;
    for (int i : subalgebra_closure_trace(p.model, std::move(seed))) out.push_back(p.carrier[i]);
    return out;
}

// Pullback of (f', s'): X' ⇄ Z' along h: Z -> Z'; stays a split epi over Z.
inline ModelSplitEpi pullback_along(const ModelSplitEpi& e, const std::vector<int>& h,
                                    const IloModel& z) {
    detail::check_map_shape(h, z.order(), e.base.order(), "h");
    if (!is_model_hom(z, e.base, h)) fail(errc::not_homomorphism, "h is not a homomorphism");
    std::map<std::pair<int, int>, int> index;
    std::vector<std::pair<int, int>> carrier;
    for (int a = 0; a < z.order(); ++a)
        for (int x = 0; x < e.total.order(); ++x)
            if (h[a] == e.f[x]) {
                index[{a, x}] = static_cast<int>(carrier.size());
                carrier.emplace_back(a, x);
            }
    const int n = static_cast<int>(carrier.size());
    OpTable t = make_table(n, [&](int i, int j) {
        auto [za, xa] = carrier[i];
        auto [zb, xb] = carrier[j];
        return index.at({z.d.at(za, zb), e.total.d.at(xa, xb)});
    });
    std::vector<int> f(n), s(z.order());
    for (int i = 0; i < n; ++i) f[i] = carrier[i].first;
    for (int a = 0; a < z.order(); ++a) s[a] = index.at({a, e.s[h[a]]});
    return make_model_split_epi(make_model(std::move(t)), z, std::move(f), std::move(s));
}

// ---- reflexive relations ----------------------------------------------------------

struct ReflexiveRelation {
    IloModel base;
    std::vector<std::pair<int, int>> pairs;  // sorted, contains the diagonal
};

inline ReflexiveRelation make_relation(IloModel base, std::vector<std::pair<int, int>> pairs) {
    if (!base.flags.test(StructureClass::Prequandle))
        fail(errc::not_prequandle, "relation base must be a prequandle");
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    std::map<std::pair<int, int>, int> index;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        auto [x, y] = pairs[i];
        if (x < 0 || x >= base.order() || y < 0 || y >= base.order())
            fail(errc::invalid_relation, "pair out of range");
        index[pairs[i]] = static_cast<int>(i);
    }
    for (int x = 0; x < base.order(); ++x)
        if (!index.count({x, x}))
            fail(errc::invalid_relation, "relation must contain the diagonal", x);
    for (auto [xa, ya] : pairs)
        for (auto [xb, yb] : pairs)
            if (!index.count({base.d.at(xa, xb), base.d.at(ya, yb)}))
                fail(errc::invalid_relation, "relation is not closed under the operation");
    return ReflexiveRelation{std::move(base), std::move(pairs)};
}

// R as a prequandle together with the split epi (d0, s0): R ⇄ X.
inline ModelSplitEpi relation_split_epi(const ReflexiveRelation& r) {
    std::map<std::pair<int, int>, int> index;
    for (std::size_t i = 0; i < r.pairs.size(); ++i) index[r.pairs[i]] = static_cast<int>(i);
    const int n = static_cast<int>(r.pairs.size());
    OpTable t = make_table(n, [&](int a, int b) {
        auto [xa, ya] = r.pairs[a];
        auto [xb, yb] = r.pairs[b];
        return index.at({r.base.d.at(xa, xb), r.base.d.at(ya, yb)});
    });
    std::vector<int> d0(n), s0(r.base.order());
    for (int i = 0; i < n; ++i) d0[i] = r.pairs[i].first;
    for (int x = 0; x < r.base.order(); ++x) s0[x] = index.at({x, x});
    return make_model_split_epi(make_model(std::move(t)), r.base, std::move(d0), std::move(s0));
}

struct RelationReport {
    bool acupuncturing = false;
    bool transitive = false;
    bool equivalence = false;
    bool classes_latin = false;  // meaningful for equivalence relations
};

inline RelationReport check_relation(const ReflexiveRelation& r) {
    RelationReport rep;
    rep.acupuncturing = is_acupuncturing_split_epi(relation_split_epi(r));

    std::map<std::pair<int, int>, bool> has;
    for (auto p : r.pairs) has[p] = true;
    rep.transitive = true;
    for (auto [x, y] : r.pairs)
        for (auto [y2, z] : r.pairs)
            if (y2 == y && !has.count({x, z})) rep.transitive = false;
    bool symmetric = true;
    for (auto [x, y] : r.pairs)
        if (!has.count({y, x})) symmetric = false;
    rep.equivalence = symmetric && rep.transitive;

    if (rep.equivalence) {
        rep.classes_latin = true;
        std::vector<char> done(r.base.order(), 0);
        for (int x = 0; x < r.base.order() && rep.classes_latin; ++x) {
            if (done[x]) continue;
            std::vector<int> cls;
            for (int y = 0; y < r.base.order(); ++y)
                if (has.count({x, y})) {
                    cls.push_back(y);
                    done[y] = 1;
                }
            std::map<int, int> pos;
            for (std::size_t i = 0; i < cls.size(); ++i) pos[cls[i]] = static_cast<int>(i);
            OpTable sub = make_table(static_cast<int>(cls.size()), [&](int a, int b) {
                return pos.at(r.base.d.at(cls[a], cls[b]));
            });
            if (!columns_are_permutations(sub) || !rows_are_permutations(sub))
                rep.classes_latin = false;
        }
    }
    return rep;
}

// Every reflexive subprequandle relation on m (subsets of the square that
// contain the diagonal and are closed under the componentwise operation).
template <class Fn>
inline void enumerate_reflexive_relations(const IloModel& m, Fn&& visit) {
    const int n = m.order();
    if (n > 4) fail(errc::order_too_large, "relation enumeration is capped at base order 4", n);
    std::vector<std::pair<int, int>> off;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (x != y) off.emplace_back(x, y);
    const int bits = static_cast<int>(off.size());
    for (long long mask = 0; mask < (1LL << bits); ++mask) {
        std::vector<std::pair<int, int>> pairs;
        for (int x = 0; x < n; ++x) pairs.emplace_back(x, x);
        for (int b = 0; b < bits; ++b)
            if ((mask >> b) & 1) pairs.push_back(off[b]);
        std::sort(pairs.begin(), pairs.end());
        std::map<std::pair<int, int>, bool> has;
        for (auto p : pairs) has[p] = true;
        bool closed = true;
        for (auto [xa, ya] : pairs) {
            for (auto [xb, yb] : pairs)
                if (!has.count({m.d.at(xa, xb), m.d.at(ya, yb)})) {
                    closed = false;
                    break;
                }
            if (!closed) break;
        }
        if (closed) visit(make_relation(m, pairs));
    }
}

// ---- the Mal'tsev term -------------------------------------------------------------

// p(x, y, z) = (y ∘ x) ▷ δ(z, y) where ∘ is the adjoint of ▷ (column inverse)
// and δ is the row inverse (the unique w with y▷w = z). Satisfies
// p(x, x, z) = z and p(x, y, y) = x on every latin prequandle.
inline TernaryTable maltsev_term(const IloModel& m) {
    if (!m.flags.test(StructureClass::Latin) || !m.flags.test(StructureClass::Prequandle))
        fail(errc::not_latin, "the Mal'tsev term needs a latin prequandle");
    const int n = m.order();
    // row inverses: delta[y][z] = w with d(y, w) = z
    std::vector<std::vector<int>> delta(n);
    for (int y = 0; y < n; ++y) delta[y] = inverse_permutation(row_map(m.d, y));
    TernaryTable p(n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                p.at(x, y, z) = m.d.at(m.adj.at(y, x), delta[y][z]);
    return p;
}

struct AutonomyReport {
    bool autonomous = false;
    std::optional<bool> p_is_homomorphism;  // present when the model is latin
};

inline AutonomyReport check_autonomy_naturality(const IloModel& m) {
    if (!m.flags.test(StructureClass::Prequandle))
        fail(errc::not_prequandle, "autonomy is defined on prequandles");
    AutonomyReport rep;
    rep.autonomous = interchange_law(m.d);
    if (m.flags.test(StructureClass::Latin)) {
        TernaryTable p = maltsev_term(m);
        const int n = m.order();
        bool hom = true;
        for (int a = 0; a < n && hom; ++a)
            for (int b = 0; b < n && hom; ++b)
                for (int c = 0; c < n && hom; ++c)
                    for (int a2 = 0; a2 < n && hom; ++a2)
                        for (int b2 = 0; b2 < n && hom; ++b2)
                            for (int c2 = 0; c2 < n && hom; ++c2)
                                hom = p.at(m.d.at(a, a2), m.d.at(b, b2), m.d.at(c, c2)) ==
                                      m.d.at(p.at(a, b, c), p.at(a2, b2, c2));
        rep.p_is_homomorphism = hom;
    }
    return rep;
}

}  // namespace ilo
