#pragma once

#include <cstdlib>
#include <functional>
#include <map>

#include "ilo/classify.hpp"

// Exhaustive model enumeration by backtracking over table cells in row-major
// order (so the output stream is lexicographic), isomorphism search, and
// minimal-table canonical forms.

namespace ilo {

struct EnumerationRequest {
    int order = 0;
    StructureClass cls = StructureClass::Ilo;
    bool up_to_iso = false;
    std::optional<std::pair<int, int>> shard;  // (index, count)
};

inline int default_order_cap(StructureClass c) {
    switch (c) {
        case StructureClass::Prequandle:
        case StructureClass::Quandle:
        case StructureClass::Autonomous:
            return 6;
        case StructureClass::Subtraction:
            return 4;  // (n-1)^2 free cells; order 5 is out of desk scale
        default:
            return 5;
    }
}

inline int order_cap(StructureClass c) {
    if (const char* env = std::getenv("ILO_MAX_ORDER")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return default_order_cap(c);
}

namespace detail {

struct EnumConstraints {
    bool column_perm = false;
    bool row_perm = false;
    bool column_involution = false;
    bool row_involution = false;
    int diag = -1;                  // -1 free, 0 forced unit 0, 1 idempotent
    bool unit_column_identity = false;  // d(z, 0) = z
    bool distributive = false;      // incremental right self-distributivity
    int final_kind = 0;             // 0 none, 1 quandle, 2 autonomous, 3 group
    bool pointed = false;           // stream carries unit 0
};

inline EnumConstraints constraints_for(StructureClass c) {
    EnumConstraints k;
    switch (c) {
        case StructureClass::Ilo:
            k.column_perm = true;
            break;
        case StructureClass::Latin:
            k.column_perm = k.row_perm = true;
            break;
        case StructureClass::Symmetric:
            k.column_perm = k.row_perm = k.row_involution = true;
            break;
        case StructureClass::Involutive:
            k.column_perm = k.column_involution = true;
            break;
        case StructureClass::Slominski:
        case StructureClass::HyperSlominski:
            k.column_perm = true;
            k.diag = 0;
            k.pointed = true;
            break;
        case StructureClass::Subtraction:
            k.diag = 0;
            k.unit_column_identity = true;
            k.pointed = true;
            break;
        case StructureClass::Hypersubtraction:
            k.column_perm = true;
            k.diag = 0;
            k.unit_column_identity = true;
            k.pointed = true;
            break;
        case StructureClass::Prequandle:
            k.column_perm = true;
            k.diag = 1;
            break;
        case StructureClass::Quandle:
            k.column_perm = true;
            k.diag = 1;
            k.distributive = true;
            k.final_kind = 1;
            break;
        case StructureClass::Autonomous:
            k.column_perm = true;
            k.diag = 1;
            k.distributive = true;  // valid pruning: autonomous implies quandle
            k.final_kind = 2;
            break;
        case StructureClass::GroupDerived:
            k.column_perm = k.row_perm = true;
            k.diag = 0;
            k.unit_column_identity = true;
            k.pointed = true;
            k.final_kind = 3;
            break;
    }
    return k;
}

// Right self-distributivity on every triple whose lookups are all decided.
// -1 marks an undecided cell.
inline bool partial_distributive_ok(const OpTable& t) {
    const int n = t.order;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int xy = t.at(x, y);
            for (int z = 0; z < n; ++z) {
                int xz = t.at(x, z), yz = t.at(y, z);
                if (xz < 0 || yz < 0) continue;
                int rhs = t.at(xz, yz);
                if (rhs < 0) continue;
                if (xy >= 0) {
                    int lhs = t.at(xy, z);
                    if (lhs >= 0 && lhs != rhs) return false;
                }
            }
        }
    return true;
}

struct EnumState {
    OpTable t;
    std::vector<char> col_used;  // [c*n + v]
    std::vector<char> row_used;  // [r*n + v]
    EnumConstraints k;
    std::function<void(const OpTable&)> leaf;

    bool candidate_ok(int r, int c, int v) const {
        const int n = t.order;
        if (k.column_perm && col_used[c * n + v]) return false;
        if ((k.row_perm || k.row_involution) && row_used[r * n + v]) return false;
        if (k.row_involution) {
            // row r must be an involution: t[r][v] = c whenever t[r][c] = v
            if (v < c && t.at(r, v) != c) return false;
            int back = t.at(r, v);
            if (v > c && back >= 0 && back != c) return false;
        }
        if (k.column_involution) {
            if (v < r && t.at(v, c) != r) return false;
            int back = v > r ? t.at(v, c) : (v == r ? r : -2);
            if (v > r && back >= 0 && back != r) return false;
        }
        return true;
    }

    void dfs(int cell) {
        const int n = t.order;
        if (cell == n * n) {
            switch (k.final_kind) {
                case 1:
                    if (!right_self_distributive(t)) return;
                    break;
                case 2:
                    if (!interchange_law(t)) return;
                    break;
                case 3:
                    if (!group_law(adjoint(t)).ok) return;
                    break;
                default:
                    break;
            }
            leaf(t);
            return;
        }
        const int r = cell / n, c = cell % n;
        int lo = 0, hi = n - 1;
        if (r == c && k.diag == 0) lo = hi = 0;
        if (r == c && k.diag == 1) lo = hi = r;
        if (c == 0 && k.unit_column_identity) lo = hi = r;
        for (int v = lo; v <= hi; ++v) {
            if (!candidate_ok(r, c, v)) continue;
            t.at(r, c) = v;
            col_used[c * n + v] = 1;
            row_used[r * n + v] = 1;
            if (!k.distributive || partial_distributive_ok(t)) dfs(cell + 1);
            col_used[c * n + v] = 0;
            row_used[r * n + v] = 0;
            t.at(r, c) = -1;
        }
    }
};

}  // namespace detail

inline std::vector<std::vector<int>> all_permutations(int n) {
    std::vector<int> p = identity_permutation(n);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

inline OpTable relabel(const OpTable& t, const std::vector<int>& sigma) {
    OpTable r(t.order, 0);
    for (int x = 0; x < t.order; ++x)
        for (int y = 0; y < t.order; ++y)
            r.at(sigma[x], sigma[y]) = sigma[t.at(x, y)];
    return r;
}

// Lexicographically least relabeling of the table. Isomorphism-invariant by
// construction; for pointed (constant-diagonal) models the minimum lands on
// diagonal 0, so the unit tracks automatically.
inline OpTable canonical_form(const OpTable& t) {
    OpTable best = t;
    std::vector<int> sigma = identity_permutation(t.order);
    while (std::next_permutation(sigma.begin(), sigma.end())) {
        OpTable cand = relabel(t, sigma);
        if (cand < best) best = cand;
    }
    return best;
}

// Streams every table of the class at the requested order exactly once, in
// lexicographic order. With up_to_iso only canonical representatives are
// emitted; with a shard (i, k) only every k-th survivor starting at i.
template <class Fn>
inline void enumerate(const EnumerationRequest& req, Fn&& emit) {
    if (req.order < 1) fail(errc::bad_input, "order must be positive", req.order);
    if (req.order > order_cap(req.cls))
        fail(errc::order_too_large,
             std::string("order exceeds the enumeration cap for class ") + to_string(req.cls),
             req.order);
    if (req.shard) {
        auto [idx, cnt] = *req.shard;
        if (cnt < 1 || idx < 0 || idx >= cnt) fail(errc::bad_input, "invalid shard");
    }
    detail::EnumState st;
    st.t = OpTable(req.order, -1);
    st.col_used.assign(static_cast<std::size_t>(req.order) * req.order, 0);
    st.row_used.assign(static_cast<std::size_t>(req.order) * req.order, 0);
    st.k = detail::constraints_for(req.cls);
    long long counter = 0;
    std::optional<int> unit;
    if (st.k.pointed) unit = 0;
    st.leaf = [&](const OpTable& t) {
        if (req.up_to_iso && canonical_form(t) != t) return;
        bool pass = true;
        if (req.shard) pass = counter % req.shard->second == req.shard->first;
        ++counter;
        if (pass) emit(t, unit);
    };
    st.dfs(0);
}

// Latin prequandles (idempotent latin squares) are not a StructureClass of
// their own; the theorem sweeps enumerate them directly.
template <class Fn>
inline void enumerate_latin_prequandles(int order, Fn&& emit) {
    if (order < 1 || order > 6) fail(errc::order_too_large, "latin prequandle sweep cap is 6");
    detail::EnumState st;
    st.t = OpTable(order, -1);
    st.col_used.assign(static_cast<std::size_t>(order) * order, 0);
    st.row_used.assign(static_cast<std::size_t>(order) * order, 0);
    st.k = detail::EnumConstraints{};
    st.k.column_perm = st.k.row_perm = true;
    st.k.diag = 1;
    st.leaf = [&](const OpTable& t) { emit(t); };
    st.dfs(0);
}

inline long long count_models(int order, StructureClass cls, bool up_to_iso = false) {
    long long n = 0;
    enumerate(EnumerationRequest{order, cls, up_to_iso, {}},
              [&](const OpTable&, std::optional<int>) { ++n; });
    return n;
}

struct Isomorphism {
    std::vector<int> map;
};

namespace detail {

// Per-element invariant: translation cycle type, row behaviour, idempotency.
inline std::vector<int> element_signature(const IloModel& m, int x) {
    std::vector<int> sig = cycle_type(column_map(m.d, x));
    sig.push_back(-1);
    std::vector<int> row = row_map(m.d, x);
    std::vector<int> count(m.order(), 0);
    for (int v : row) ++count[v];
    std::sort(count.begin(), count.end());
    sig.insert(sig.end(), count.begin(), count.end());
    sig.push_back(m.d.at(x, x) == x ? 1 : 0);
    return sig;
}

inline bool iso_extend(const IloModel& a, const IloModel& b, std::vector<int>& sigma,
                       std::vector<char>& used, int k,
                       const std::vector<std::vector<int>>& cand) {
    const int n = a.order();
    if (k == n) return true;
    for (int img : cand[k]) {
        if (used[img]) continue;
        sigma[k] = img;
        used[img] = 1;
        bool ok = true;
        for (int i = 0; i <= k && ok; ++i)
            for (int j = 0; j <= k && ok; ++j) {
                int v = a.d.at(i, j);
                if (v <= k) ok = b.d.at(sigma[i], sigma[j]) == sigma[v];
            }
        if (ok && iso_extend(a, b, sigma, used, k + 1, cand)) return true;
        used[img] = 0;
        sigma[k] = -1;
    }
    return false;
}

}  // namespace detail

// First d-isomorphism in lexicographic backtracking order, or nothing. When
// both models are pointed the witness must map unit to unit. Invariant
// pruning can be disabled to cross-check that it never changes the verdict.
inline std::optional<Isomorphism> are_isomorphic(const IloModel& a, const IloModel& b,
                                                 bool prune = true) {
    if (a.order() != b.order()) return std::nullopt;
    const int n = a.order();
    if (prune && !(a.flags == b.flags)) return std::nullopt;
    std::vector<std::vector<int>> cand(n);
    std::vector<std::vector<int>> sig_b;
    if (prune) {
        sig_b.reserve(n);
        for (int x = 0; x < n; ++x) sig_b.push_back(detail::element_signature(b, x));
    }
    for (int x = 0; x < n; ++x) {
        std::vector<int> sig_a;
        if (prune) sig_a = detail::element_signature(a, x);
        for (int y = 0; y < n; ++y) {
            if (a.unit && b.unit && ((x == *a.unit) != (y == *b.unit))) continue;
            if (prune && sig_a != sig_b[y]) continue;
            cand[x].push_back(y);
        }
        if (cand[x].empty()) return std::nullopt;
    }
    std::vector<int> sigma(n, -1);
    std::vector<char> used(n, 0);
    if (detail::iso_extend(a, b, sigma, used, 0, cand)) return Isomorphism{sigma};
    return std::nullopt;
}

struct IsoClass {
    OpTable representative;       // lexicographically least table in the class
    std::optional<int> unit;
    long long count = 0;
};

inline std::vector<IsoClass> iso_classes(const std::vector<IloModel>& models) {
    if (models.empty()) return {};
    const int n = models.front().order();
    for (const auto& m : models)
        if (m.order() != n) fail(errc::bad_input, "iso_classes requires equal orders");
    std::map<OpTable, long long> buckets;
    for (const auto& m : models) ++buckets[canonical_form(m.d)];
    std::vector<IsoClass> out;
    for (auto& [rep, cnt] : buckets)
        out.push_back(IsoClass{rep, constant_diagonal(rep), cnt});
    return out;
}

}  // namespace ilo
