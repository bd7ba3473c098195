// Copyright 2026 the orc authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "orc/domain.hpp"
#include "orc/monomial.hpp"

namespace orc {

/// Comparator giving descending monomial order, so term iteration starts at
/// the leading term.
struct TermOrder {
    MonomialOrder order;
    bool operator()(const Monomial& a, const Monomial& b) const {
        return mono_cmp(a, b, order) > 0;
    }
};

/// Sparse multivariate polynomial over a PolyRing domain. No zero
/// coefficients are ever stored; the zero polynomial has an empty term map.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Value, TermOrder>;

    static Polynomial zero(const DomainPtr& ring);
    static Polynomial constant(const DomainPtr& ring, const Value& c);
    static Polynomial variable(const DomainPtr& ring, std::size_t index);
    static Polynomial term(const DomainPtr& ring, const Monomial& m, const Value& c);
    /// Adopt an already-canonical term map (no zero coefficients).
    static Polynomial from_term_map(const DomainPtr& ring, TermMap terms);

    /// In-place merge used by the reduction engine: m[mono] += v, dropping
    /// zeros.
    static void merge_term(TermMap& m, const Monomial& mono, Value v);

    const DomainPtr& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    const Monomial& leading_monomial() const;
    const Value& leading_coeff() const;
    /// Total degree; -1 for the zero polynomial.
    int total_degree() const;
    int degree_in(std::size_t var) const;

    bool is_constant() const;
    /// The constant coefficient (zero of the coefficient domain if absent).
    Value constant_value() const;

    Polynomial add(const Polynomial& o) const;
    Polynomial sub(const Polynomial& o) const;
    Polynomial neg() const;
    Polynomial mul(const Polynomial& o) const;
    Polynomial mul_term(const Monomial& m, const Value& c) const;
    Polynomial scale(const Value& c) const;
    /// Divide every coefficient by c; c must be a unit of the coefficient
    /// domain or the domain must be a field.
    Polynomial divide_coeffs(const Value& c) const;
    Polynomial pow(unsigned long n) const;

    bool equals(const Polynomial& o) const;

    /// Coefficients in term order (the generators of the content ideal).
    std::vector<Value> coefficients() const;

    std::string str() const;

private:
    explicit Polynomial(DomainPtr ring);

    void insert_term(const Monomial& m, const Value& c);

    DomainPtr ring_;
    TermMap terms_;
};

/// Rebuild f over another polynomial ring with the same variable names,
/// coercing each coefficient. Used to push generators along coefficient-field
/// inclusions such as K[x,y] -> L[x,y].
Polynomial rering(const Polynomial& f, const DomainPtr& target_ring);

/// Same-variables check plus coefficient-domain coercibility.
bool rering_possible(const DomainPtr& from_ring, const DomainPtr& to_ring);

}  // namespace orc
