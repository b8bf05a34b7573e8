#pragma once

#include "ilo/group.hpp"

// Named model constructions: group-derived hypersubtractions, Alexander and
// conjugation quandles, trivial quandles, products, subalgebra closures.

namespace ilo {

// d(x,y) = y⁻¹·x; the adjoint is the group law itself.
inline IloModel from_group(const FiniteGroup& g) {
    OpTable d = make_table(g.order, [&](int x, int y) { return g.op(g.inverse(y), x); });
    return make_model(std::move(d), g.unit);
}

struct AlexanderDatum {
    FiniteGroup group;  // must be abelian
    std::vector<int> f; // an automorphism, as an element map
};

inline void validate_alexander(const AlexanderDatum& a) {
    if (!is_abelian(a.group)) fail(errc::not_abelian, "Alexander base group must be abelian");
    if (static_cast<int>(a.f.size()) != a.group.order || !is_permutation(a.f))
        fail(errc::not_automorphism, "f is not a bijection on the carrier");
    if (!is_group_hom(a.group, a.group, a.f))
        fail(errc::not_automorphism, "f is not additive");
}

// x▷y = f(x) + y − f(y). Always an autonomous quandle; latin iff Id−f is a
// bijection.
inline IloModel alexander(const AlexanderDatum& a) {
    validate_alexander(a);
    const FiniteGroup& g = a.group;
    OpTable t = make_table(g.order, [&](int x, int y) {
        return g.op(g.op(a.f[x], y), g.inverse(a.f[y]));
    });
    return make_model(std::move(t));
}

// x▷y = y·x·y⁻¹
inline IloModel conjugation_quandle(const FiniteGroup& g) {
    OpTable t = make_table(g.order, [&](int x, int y) {
        return g.op(g.op(y, x), g.inverse(y));
    });
    return make_model(std::move(t));
}

// d = first projection (its adjoint is the second projection).
inline IloModel trivial_quandle(int n) {
    if (n < 1) fail(errc::bad_input, "order must be positive", n);
    return make_model(make_table(n, [](int x, int) { return x; }));
}

// Componentwise operation on pairs (i, j) -> i*|b| + j.
inline IloModel product(const IloModel& a, const IloModel& b) {
    const int n = a.order() * b.order();
    OpTable t = make_table(n, [&](int x, int y) {
        int xa = x / b.order(), xb = x % b.order();
        int ya = y / b.order(), yb = y % b.order();
        return a.d.at(xa, ya) * b.order() + b.d.at(xb, yb);
    });
    std::optional<int> unit;
    if (a.unit && b.unit) unit = *a.unit * b.order() + *b.unit;
    return make_model(std::move(t), unit);
}

namespace detail {

// Round-based worklist closure. Each round scans the ordered pairs of the
// current member list in ascending (a, b) order, applying d then ∘, and
// appends discoveries in that order; the trace is therefore deterministic.
inline std::vector<int> closure_impl(const IloModel& m, std::vector<int> seed,
                                     bool trace_order) {
    std::vector<char> in(m.order(), 0);
    std::vector<int> members;
    std::sort(seed.begin(), seed.end());
    seed.erase(std::unique(seed.begin(), seed.end()), seed.end());
    for (int s : seed) {
        if (s < 0 || s >= m.order()) fail(errc::bad_input, "seed element out of range", s);
        if (!in[s]) {
            in[s] = 1;
            members.push_back(s);
        }
    }
    if (m.unit && !in[*m.unit]) {
        in[*m.unit] = 1;
        members.push_back(*m.unit);
        std::sort(members.begin(), members.end());
    }
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<int> fresh;
        const std::size_t snapshot = members.size();
        for (std::size_t i = 0; i < snapshot; ++i)
            for (std::size_t j = 0; j < snapshot; ++j) {
                for (int v : {m.d.at(members[i], members[j]), m.adj.at(members[i], members[j])})
                    if (!in[v]) {
                        in[v] = 1;
                        fresh.push_back(v);
                    }
            }
        if (!fresh.empty()) {
            grew = true;
            members.insert(members.end(), fresh.begin(), fresh.end());
        }
    }
    if (!trace_order) std::sort(members.begin(), members.end());
    return members;
}

}  // namespace detail

// Smallest subset containing the seed (and the unit when present) closed under
// both d and ∘; returned ascending.
inline std::vector<int> subalgebra_closure(const IloModel& m, std::vector<int> seed) {
    return detail::closure_impl(m, std::move(seed), false);
}

// Same closure, in discovery order (seeds ascending, then round by round).
inline std::vector<int> subalgebra_closure_trace(const IloModel& m, std::vector<int> seed) {
    return detail::closure_impl(m, std::move(seed), true);
}

}  // namespace ilo
