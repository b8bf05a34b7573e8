#pragma once

#include <map>
#include <numeric>
#include <string>

#include "ilo/classify.hpp"
#include "ilo/op_table.hpp"

// Finite groups on {0..n-1} with unit 0, the desk-scale fixture catalog, and
// brute-force homomorphism enumeration driven by precomputed generating sets.

namespace ilo {

struct FiniteGroup {
    int order = 0;
    OpTable mult;
    int unit = 0;
    std::vector<int> inv;
    std::string name;

    int op(int a, int b) const { return mult.at(a, b); }
    int inverse(int a) const { return inv[a]; }
};

inline FiniteGroup make_group(OpTable mult, std::string name = "") {
    validate_table(mult);
    UnitalGroupCheck g = group_law(mult);
    if (!g.ok) fail(errc::invalid_table, "table is not a group law");
    if (g.unit != 0) fail(errc::invalid_table, "group unit must be normalized to 0", g.unit);
    FiniteGroup grp;
    grp.order = mult.order;
    grp.unit = 0;
    grp.inv.assign(grp.order, -1);
    for (int x = 0; x < grp.order; ++x)
        for (int y = 0; y < grp.order; ++y)
            if (mult.at(x, y) == 0) grp.inv[x] = y;
    grp.mult = std::move(mult);
    grp.name = std::move(name);
    return grp;
}

inline bool is_abelian(const FiniteGroup& g) {
    for (int a = 0; a < g.order; ++a)
        for (int b = 0; b < a; ++b)
            if (g.op(a, b) != g.op(b, a)) return false;
    return true;
}

inline bool has_exponent_two(const FiniteGroup& g) {
    for (int a = 0; a < g.order; ++a)
        if (g.op(a, a) != g.unit) return false;
    return true;
}

// ---- fixture builders ---------------------------------------------------------

inline FiniteGroup cyclic_group(int n) {
    return make_group(make_table(n, [n](int a, int b) { return (a + b) % n; }),
                      "Z" + std::to_string(n));
}

// Pair (a, b) of A x B is the element a*|B| + b.
inline FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b,
                                  std::string name = "") {
    const int n = a.order * b.order;
    OpTable t = make_table(n, [&](int x, int y) {
        int xa = x / b.order, xb = x % b.order;
        int ya = y / b.order, yb = y % b.order;
        return a.op(xa, ya) * b.order + b.op(xb, yb);
    });
    if (name.empty()) name = a.name + "x" + b.name;
    return make_group(std::move(t), std::move(name));
}

// Order 2m; element e*m + a stands for r^a s^e, with s r^b = r^{-b} s.
inline FiniteGroup dihedral_group(int m) {
    const int n = 2 * m;
    OpTable t = make_table(n, [m](int x, int y) {
        int xa = x % m, xe = x / m;
        int ya = y % m, ye = y / m;
        int rot = (xa + (xe ? (m - ya) % m : ya)) % m;
        return (xe ^ ye) * m + rot;
    });
    return make_group(std::move(t), "D" + std::to_string(m));
}

// {1,-1,i,-i,j,-j,k,-k}; element = basis*2 + sign bit.
inline FiniteGroup quaternion_group() {
    // basis products: bt[a][b] = (sign, basis) with 0=1, 1=i, 2=j, 3=k
    static constexpr int bsign[4][4] = {
        {0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    static constexpr int bidx[4][4] = {
        {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    OpTable t = make_table(8, [](int x, int y) {
        int bx = x / 2, sx = x % 2;
        int by = y / 2, sy = y % 2;
        int s = sx ^ sy ^ bsign[bx][by];
        return bidx[bx][by] * 2 + s;
    });
    return make_group(std::move(t), "Q8");
}

namespace detail {

inline std::vector<std::vector<int>> permutations_of(int n) {
    std::vector<int> p = identity_permutation(n);
    std::vector<std::vector<int>> all;
    do {
        all.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return all;
}

inline bool perm_is_even(std::vector<int> p) {
    int swaps = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        while (p[i] != static_cast<int>(i)) {
            std::swap(p[i], p[p[i]]);
            ++swaps;
        }
    return swaps % 2 == 0;
}

// Group of the given permutations under composition (a*b)(i) = a[b[i]].
// The permutation list must be closed; elements are indexed in list order.
inline FiniteGroup permutation_group(const std::vector<std::vector<int>>& perms,
                                     std::string name) {
    std::map<std::vector<int>, int> index;
    for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<int>(i);
    const int n = static_cast<int>(perms.size());
    OpTable t = make_table(n, [&](int x, int y) {
        std::vector<int> c(perms[x].size());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = perms[x][perms[y][i]];
        return index.at(c);
    });
    return make_group(std::move(t), std::move(name));
}

}  // namespace detail

// Permutations listed in lexicographic order, identity first (so unit = 0).
inline FiniteGroup symmetric3_group() {
    return detail::permutation_group(detail::permutations_of(3), "S3");
}

inline FiniteGroup alternating4_group() {
    std::vector<std::vector<int>> evens;
    for (auto& p : detail::permutations_of(4))
        if (detail::perm_is_even(p)) evens.push_back(p);
    return detail::permutation_group(evens, "A4");
}

// Permutation vector -> element index in a permutation-group fixture
// (rebuilds the lex-ordered listing the fixture was defined with).
inline int permutation_index(const FiniteGroup& g, const std::vector<int>& perm) {
    int degree = g.name == "A4" ? 4 : 3;
    auto all = detail::permutations_of(degree);
    std::vector<std::vector<int>> elems;
    for (auto& p : all)
        if (g.name != "A4" || detail::perm_is_even(p)) elems.push_back(p);
    for (std::size_t i = 0; i < elems.size(); ++i)
        if (elems[i] == perm) return static_cast<int>(i);
    fail(errc::bad_input, "permutation not in group");
}

// Cyclic groups up to 16 plus enough non-cyclic variety for split-epi tests.
inline const std::vector<FiniteGroup>& group_catalog() {
    static const std::vector<FiniteGroup> cat = [] {
        std::vector<FiniteGroup> v;
        for (int n = 1; n <= 16; ++n) v.push_back(cyclic_group(n));
        FiniteGroup z2 = cyclic_group(2), z4 = cyclic_group(4);
        v.push_back(direct_product(z2, z2, "Z2xZ2"));
        v.push_back(direct_product(z2, z4, "Z2xZ4"));
        for (int m = 3; m <= 6; ++m) v.push_back(dihedral_group(m));
        v.push_back(quaternion_group());
        v.push_back(symmetric3_group());
        v.push_back(alternating4_group());
        return v;
    }();
    return cat;
}

inline const FiniteGroup& catalog_group(std::string_view name) {
    for (const auto& g : group_catalog())
        if (g.name == name) return g;
    fail(errc::bad_input, "no catalog group named " + std::string(name));
}

// ---- generating sets and homomorphism enumeration ------------------------------

inline std::vector<int> subgroup_closure(const FiniteGroup& g, std::vector<int> elems) {
    std::vector<char> in(g.order, 0);
    in[g.unit] = 1;
    std::vector<int> work = {g.unit};
    for (int e : elems)
        if (!in[e]) {
            in[e] = 1;
            work.push_back(e);
        }
    for (std::size_t i = 0; i < work.size(); ++i)
        for (std::size_t j = 0; j < work.size(); ++j) {
            for (int v : {g.op(work[i], work[j]), g.op(work[j], work[i])})
                if (!in[v]) {
                    in[v] = 1;
                    work.push_back(v);
                }
        }
    std::sort(work.begin(), work.end());
    return work;
}

// Smallest (by size, then lexicographically) generating set; all catalog
// fixtures are generated by at most two elements.
inline std::vector<int> generating_set(const FiniteGroup& g) {
    if (g.order == 1) return {};
    for (int a = 0; a < g.order; ++a)
        if (static_cast<int>(subgroup_closure(g, {a}).size()) == g.order) return {a};
    for (int a = 0; a < g.order; ++a)
        for (int b = a + 1; b < g.order; ++b)
            if (static_cast<int>(subgroup_closure(g, {a, b}).size()) == g.order)
                return {a, b};
    for (int a = 0; a < g.order; ++a)
        for (int b = a + 1; b < g.order; ++b)
            for (int c = b + 1; c < g.order; ++c)
                if (static_cast<int>(subgroup_closure(g, {a, b, c}).size()) == g.order)
                    return {a, b, c};
    fail(errc::bad_input, "group needs more than three generators");
}

// All homomorphisms A -> B, brute-forced over images of A's generating set.
inline std::vector<std::vector<int>> all_homs(const FiniteGroup& a, const FiniteGroup& b) {
    std::vector<int> gens = generating_set(a);
    // BFS expression of each element as (previous element) * generator.
    std::vector<int> prev(a.order, -1), via(a.order, -1), bfs;
    std::vector<char> seen(a.order, 0);
    seen[a.unit] = 1;
    bfs.push_back(a.unit);
    for (std::size_t i = 0; i < bfs.size(); ++i)
        for (std::size_t gi = 0; gi < gens.size(); ++gi) {
            int nxt = a.op(bfs[i], gens[gi]);
            if (!seen[nxt]) {
                seen[nxt] = 1;
                prev[nxt] = bfs[i];
                via[nxt] = static_cast<int>(gi);
                bfs.push_back(nxt);
            }
        }

    std::vector<std::vector<int>> homs;
    std::vector<int> choice(gens.size(), 0);
    std::vector<int> img(a.order, -1);
    while (true) {
        img.assign(a.order, -1);
        img[a.unit] = b.unit;
        for (std::size_t i = 1; i < bfs.size(); ++i) {
            int x = bfs[i];
            img[x] = b.op(img[prev[x]], choice[via[x]]);
        }
        bool ok = true;
        for (int x = 0; x < a.order && ok; ++x)
            for (int y = 0; y < a.order && ok; ++y)
                ok = img[a.op(x, y)] == b.op(img[x], img[y]);
        if (ok) homs.push_back(img);
        // odometer over generator images
        std::size_t k = 0;
        for (; k < choice.size(); ++k) {
            if (++choice[k] < b.order) break;
            choice[k] = 0;
        }
        if (k == choice.size()) break;
        if (gens.empty()) break;
    }
    if (gens.empty()) homs = {std::vector<int>(a.order, b.unit)};
    return homs;
}

inline bool is_group_hom(const FiniteGroup& a, const FiniteGroup& b,
                         const std::vector<int>& h) {
    if (static_cast<int>(h.size()) != a.order) return false;
    for (int x = 0; x < a.order; ++x)
        for (int y = 0; y < a.order; ++y)
            if (h[a.op(x, y)] != b.op(h[x], h[y])) return false;
    return true;
}

inline std::vector<std::vector<int>> group_automorphisms(const FiniteGroup& g) {
    std::vector<std::vector<int>> out;
    for (auto& h : all_homs(g, g))
        if (is_permutation(h)) out.push_back(h);
    return out;
}

}  // namespace ilo
