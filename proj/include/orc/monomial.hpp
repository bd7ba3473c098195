// Copyright 2026 the orc authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <vector>

#include "orc/error.hpp"

namespace orc {

/// Exponent vector; the arity is fixed by the owning ring.
struct Monomial {
    std::vector<int> e;

    Monomial() = default;
    explicit Monomial(std::vector<int> exps) : e(std::move(exps)) {}

    static Monomial one(std::size_t nvars) { return Monomial(std::vector<int>(nvars, 0)); }

    static Monomial var(std::size_t nvars, std::size_t i, int power = 1) {
        Monomial m = one(nvars);
        m.e[i] = power;
        return m;
    }

    std::size_t arity() const { return e.size(); }
    int degree() const { return std::accumulate(e.begin(), e.end(), 0); }
    bool is_one() const {
        return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
    }

    bool divides(const Monomial& m) const {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > m.e[i]) return false;
        return true;
    }

    bool coprime_with(const Monomial& m) const {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0 && m.e[i] > 0) return false;
        return true;
    }

    Monomial times(const Monomial& m) const {
        Monomial r = *this;
        for (std::size_t i = 0; i < e.size(); ++i) r.e[i] += m.e[i];
        return r;
    }

    /// Quotient of exponent vectors; requires divides(m) on the caller's side.
    Monomial quotient_into(const Monomial& m) const {
        Monomial r = m;
        for (std::size_t i = 0; i < e.size(); ++i) r.e[i] -= e[i];
        return r;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r = a;
        for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] = std::max(a.e[i], b.e[i]);
        return r;
    }

    bool operator==(const Monomial& o) const = default;
};

enum class OrderKind {
    Lex,
    GrLex,
    GrevLex,
    /// Block order with the first variable eliminated: compare its exponent
    /// first, grevlex on the rest. Used internally for intersection and
    /// radical-membership constructions.
    Elim1,
};

struct MonomialOrder {
    OrderKind kind = OrderKind::GrevLex;
    bool operator==(const MonomialOrder&) const = default;
};

/// Three-way comparison in the given order: negative if a < b, 0 if equal,
/// positive if a > b.
inline int mono_cmp(const Monomial& a, const Monomial& b, MonomialOrder order) {
    auto lex = [](const Monomial& x, const Monomial& y, std::size_t from) {
        for (std::size_t i = from; i < x.e.size(); ++i)
            if (x.e[i] != y.e[i]) return x.e[i] < y.e[i] ? -1 : 1;
        return 0;
    };
    auto grevlex = [](const Monomial& x, const Monomial& y, std::size_t from) {
        int dx = 0, dy = 0;
        for (std::size_t i = from; i < x.e.size(); ++i) dx += x.e[i], dy += y.e[i];
        if (dx != dy) return dx < dy ? -1 : 1;
        for (std::size_t i = x.e.size(); i-- > from;)
            if (x.e[i] != y.e[i]) return x.e[i] > y.e[i] ? -1 : 1;
        return 0;
    };
    switch (order.kind) {
        case OrderKind::Lex:
            return lex(a, b, 0);
        case OrderKind::GrLex: {
            int da = a.degree(), db = b.degree();
            if (da != db) return da < db ? -1 : 1;
            return lex(a, b, 0);
        }
        case OrderKind::GrevLex:
            return grevlex(a, b, 0);
        case OrderKind::Elim1: {
            if (a.e[0] != b.e[0]) return a.e[0] < b.e[0] ? -1 : 1;
            return grevlex(a, b, 1);
        }
    }
    fail(errc::BadConstruction, "unknown monomial order");
}

}  // namespace orc
