#pragma once

#include "ilo/constructions.hpp"

// Operations internal to a finite abelian group: the (f, g) decomposition of
// Slominski operations, extraction of Alexander data from internal
// prequandles, and the unitary-magma/hypersubtraction abelianness check.

namespace ilo {

struct InternalOpDatum {
    FiniteGroup ambient;  // abelian
    OpTable op;
};

// op(x+x', y+y') = op(x,y) + op(x',y'): op is a homomorphism from the square.
inline bool internal_check(const FiniteGroup& ambient, const OpTable& op) {
    if (!is_abelian(ambient)) fail(errc::not_abelian, "ambient group must be abelian");
    validate_table(op);
    if (op.order != ambient.order) fail(errc::bad_input, "carrier sizes differ");
    const int n = ambient.order;
    for (int x = 0; x < n; ++x)
        for (int x2 = 0; x2 < n; ++x2)
            for (int y = 0; y < n; ++y)
                for (int y2 = 0; y2 < n; ++y2)
                    if (op.at(ambient.op(x, x2), ambient.op(y, y2)) !=
                        ambient.op(op.at(x, y), op.at(x2, y2)))
                        return false;
    return true;
}

struct SlominskiDecomposition {
    std::vector<int> f;  // f(x) = d(x, 0), so d(x, y) = f(x - y)
    std::vector<int> g;  // g(y) = 0∘y,    so x∘y = x + g(y); g∘f = id
};

inline SlominskiDecomposition decompose_slominski(const InternalOpDatum& datum) {
    if (!internal_check(datum.ambient, datum.op))
        fail(errc::not_internal, "operation is not internal to the ambient group");
    const FiniteGroup& a = datum.ambient;
    const int n = a.order;
    if (!constant_diagonal(datum.op) || *constant_diagonal(datum.op) != a.unit)
        fail(errc::not_slominski, "d(x,x) is not constantly the unit");
    if (!columns_are_permutations(datum.op))
        fail(errc::not_slominski, "some translation d(-,x) is not invertible");
    OpTable adj = adjoint(datum.op);
    SlominskiDecomposition dec;
    dec.f.resize(n);
    dec.g.resize(n);
    for (int x = 0; x < n; ++x) {
        dec.f[x] = datum.op.at(x, a.unit);
        dec.g[x] = adj.at(a.unit, x);
    }
    for (int x = 0; x < n; ++x) {
        if (dec.g[dec.f[x]] != x) fail(errc::not_slominski, "g∘f is not the identity", x);
        for (int y = 0; y < n; ++y) {
            if (datum.op.at(x, y) != dec.f[a.op(x, a.inverse(y))])
                fail(errc::not_slominski, "d(x,y) != f(x-y)");
            if (adj.at(x, y) != a.op(x, dec.g[y]))
                fail(errc::not_slominski, "x∘y != x + g(y)");
        }
    }
    if (!is_permutation(dec.f)) fail(errc::not_slominski, "f is not bijective");
    return dec;
}

// f(x) = x▷0; every internal prequandle is the Alexander quandle of its f.
inline AlexanderDatum extract_alexander(const InternalOpDatum& datum) {
    if (!internal_check(datum.ambient, datum.op))
        fail(errc::not_internal, "operation is not internal to the ambient group");
    const FiniteGroup& a = datum.ambient;
    const int n = a.order;
    if (!idempotent_diagonal(datum.op))
        fail(errc::not_prequandle, "operation is not idempotent");
    if (!columns_are_permutations(datum.op))
        fail(errc::not_prequandle, "some translation is not invertible");
    AlexanderDatum out;
    out.group = a;
    out.f.resize(n);
    for (int x = 0; x < n; ++x) out.f[x] = datum.op.at(x, a.unit);
    validate_alexander(out);  // throws not_automorphism on failure
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (datum.op.at(x, y) != a.op(a.op(out.f[x], y), a.inverse(out.f[y])))
                fail(errc::not_prequandle, "operation is not of Alexander form");
    return out;
}

// Mutual internality of a unitary magma and a hypersubtraction sharing the
// unit: the interchange law (x*y)∘(x'*y') = (x∘x')*(y∘y') where ∘ is d here.
// When it holds, the magma is an abelian group law and d(x,y) = x * inv(y);
// both facts are verified exhaustively before returning true.
inline bool umag_hst_abelian_check(const OpTable& star, const OpTable& d, int unit) {
    validate_table(star);
    validate_table(d);
    if (star.order != d.order) fail(errc::bad_input, "carrier sizes differ");
    const int n = star.order;
    if (unit < 0 || unit >= n) fail(errc::bad_input, "unit out of range", unit);
    for (int x = 0; x < n; ++x)
        if (star.at(unit, x) != x || star.at(x, unit) != x)
            fail(errc::unit_mismatch, "star does not have the given two-sided unit", x);
    FlagSet df = classify(d, unit);
    if (!df.test(StructureClass::Hypersubtraction))
        fail(errc::unit_mismatch, "d is not a hypersubtraction with the given unit");

    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int x2 = 0; x2 < n; ++x2)
                for (int y2 = 0; y2 < n; ++y2)
                    if (d.at(star.at(x, y), star.at(x2, y2)) !=
                        star.at(d.at(x, x2), d.at(y, y2)))
                        return false;

    // Mutual internality established; the derived structure must be abelian.
    UnitalGroupCheck g = group_law(star);
    if (!g.ok || g.unit != unit)
        fail(errc::unit_mismatch, "interchange held but star is not a group law");
    std::vector<int> inv(n, -1);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (star.at(x, y) == unit) inv[x] = y;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (star.at(x, y) != star.at(y, x))
                fail(errc::unit_mismatch, "interchange held but star is not abelian");
            if (d.at(x, y) != star.at(x, inv[y]))
                fail(errc::unit_mismatch, "d is not subtraction in the derived group");
        }
    return true;
}

}  // namespace ilo
