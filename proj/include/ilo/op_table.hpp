#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ilo {

// Failure codes surfaced by the public operations. The CLI maps input-shape
// problems to exit 2 and failed theorem assertions to exit 1.
enum class errc {
    bad_input,
    invalid_table,
    invalid_relation,
    non_invertible_translation,
    not_abelian,
    not_automorphism,
    not_bihomomorphism,
    not_homomorphism,
    not_internal,
    not_latin,
    not_morphism_of_split_epis,
    not_prequandle,
    not_section,
    not_skew_brace,
    not_slominski,
    order_too_large,
    unit_mismatch,
};

inline const char* to_string(errc c) {
    switch (c) {
        case errc::bad_input: return "bad-input";
        case errc::invalid_table: return "invalid-table";
        case errc::invalid_relation: return "invalid-relation";
        case errc::non_invertible_translation: return "non-invertible-translation";
        case errc::not_abelian: return "not-abelian";
        case errc::not_automorphism: return "not-automorphism";
        case errc::not_bihomomorphism: return "not-bihomomorphism";
        case errc::not_homomorphism: return "not-homomorphism";
        case errc::not_internal: return "not-internal";
        case errc::not_latin: return "not-latin";
        case errc::not_morphism_of_split_epis: return "not-morphism-of-split-epis";
        case errc::not_prequandle: return "not-prequandle";
        case errc::not_section: return "not-section";
        case errc::not_skew_brace: return "not-skew-brace";
        case errc::not_slominski: return "not-slominski";
        case errc::order_too_large: return "order-too-large";
        case errc::unit_mismatch: return "unit-mismatch";
    }
    return "unknown";
}

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what, std::optional<int> detail = {})
        : std::runtime_error(what), code_(code), detail_(detail) {}

    errc code() const noexcept { return code_; }
    std::optional<int> detail() const noexcept { return detail_; }

private:
    errc code_;
    std::optional<int> detail_;
};

[[noreturn]] inline void fail(errc code, const std::string& what,
                              std::optional<int> detail = {}) {
    throw error(code, what, detail);
}

// Cayley table of a binary operation on the carrier {0..n-1}.
// cells[a*n + b] = op(a, b); the row index is the left argument.
struct OpTable {
    int order = 0;
    std::vector<int> cells;

    OpTable() = default;
    OpTable(int n, int fill)
        : order(n), cells(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), fill) {}
    OpTable(int n, std::vector<int> c) : order(n), cells(std::move(c)) {}

    int at(int a, int b) const {
        return cells[static_cast<std::size_t>(a) * order + static_cast<std::size_t>(b)];
    }
    int& at(int a, int b) {
        return cells[static_cast<std::size_t>(a) * order + static_cast<std::size_t>(b)];
    }

    friend bool operator==(const OpTable& x, const OpTable& y) = default;
    friend bool operator<(const OpTable& x, const OpTable& y) {
        if (x.order != y.order) return x.order < y.order;
        return x.cells < y.cells;
    }
};

template <class F>
OpTable make_table(int n, F&& op) {
    OpTable t(n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t.at(a, b) = op(a, b);
    return t;
}

inline void validate_table(const OpTable& t) {
    if (t.order <= 0) fail(errc::invalid_table, "table order must be positive");
    if (t.cells.size() != static_cast<std::size_t>(t.order) * t.order)
        fail(errc::invalid_table, "table is not square");
    for (int v : t.cells)
        if (v < 0 || v >= t.order) fail(errc::invalid_table, "table entry out of range", v);
}

// n*n*n table for ternary terms; cells[(a*n + b)*n + c] = p(a, b, c).
struct TernaryTable {
    int order = 0;
    std::vector<int> cells;

    TernaryTable() = default;
    explicit TernaryTable(int n)
        : order(n),
          cells(static_cast<std::size_t>(n) * static_cast<std::size_t>(n) *
                    static_cast<std::size_t>(n),
                0) {}

    int at(int a, int b, int c) const {
        return cells[(static_cast<std::size_t>(a) * order + b) * order + c];
    }
    int& at(int a, int b, int c) {
        return cells[(static_cast<std::size_t>(a) * order + b) * order + c];
    }

    friend bool operator==(const TernaryTable&, const TernaryTable&) = default;
};

inline bool is_permutation(const std::vector<int>& v) {
    std::vector<char> seen(v.size(), 0);
    for (int x : v) {
        if (x < 0 || x >= static_cast<int>(v.size()) || seen[x]) return false;
        seen[x] = 1;
    }
    return true;
}

inline std::vector<int> inverse_permutation(const std::vector<int>& p) {
    std::vector<int> inv(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) inv[p[i]] = static_cast<int>(i);
    return inv;
}

inline std::vector<int> identity_permutation(int n) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    return p;
}

// z ↦ t(z, x): the translation inverted by the adjoint operation.
inline std::vector<int> column_map(const OpTable& t, int x) {
    std::vector<int> c(t.order);
    for (int z = 0; z < t.order; ++z) c[z] = t.at(z, x);
    return c;
}

// y ↦ t(x, y)
inline std::vector<int> row_map(const OpTable& t, int x) {
    std::vector<int> r(t.order);
    for (int y = 0; y < t.order; ++y) r[y] = t.at(x, y);
    return r;
}

// Sorted cycle lengths of a permutation; used as an isomorphism invariant.
inline std::vector<int> cycle_type(const std::vector<int>& p) {
    std::vector<char> seen(p.size(), 0);
    std::vector<int> lens;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (std::size_t j = i; !seen[j]; j = p[j]) {
            seen[j] = 1;
            ++len;
        }
        lens.push_back(len);
    }
    std::sort(lens.begin(), lens.end());
    return lens;
}

}  // namespace ilo
