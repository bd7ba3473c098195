// Copyright 2026 the orc authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "orc/poly.hpp"

namespace orc {

/// Canonical form of an ideal, cached per ideal:
///   - PrincipalInt: ideals of Z, a single nonnegative gcd generator;
///   - FieldIdeal: (0) or (1) in a field;
///   - GroebnerBasis: reduced Groebner basis over a field coefficient ring;
///   - QuotientLift: reduced Groebner basis in the ambient ring of the lifted
///     generators together with the defining ideal;
///   - ProductTuple: componentwise ideals of a product ring.
struct CanonForm {
    enum class Tag { PrincipalInt, FieldIdeal, GroebnerBasis, QuotientLift, ProductTuple };
    Tag tag = Tag::FieldIdeal;
    BigInt principal;
    bool field_unit = false;
    std::vector<Polynomial> basis;
    std::vector<Ideal> components;
};

/// Ideal of a supported ring, given by a generator list. The canonical form
/// is computed once on first use (thread-safe) and shared by copies; since
/// reduced Groebner bases are unique for a fixed order, ideal equality is
/// canonical-form equality.
class Ideal {
public:
    Ideal(DomainPtr ring, std::vector<Value> gens);

    static Ideal zero(const DomainPtr& ring);
    static Ideal unit(const DomainPtr& ring);
    /// Convenience: ideal of a PolyRing domain from polynomial generators.
    static Ideal of_polys(const DomainPtr& ring, const std::vector<Polynomial>& gens);

    const DomainPtr& ring() const { return ring_; }
    const std::vector<Value>& gens() const { return gens_; }
    std::vector<Polynomial> gen_polys() const;

    /// May throw UnsupportedCoefficients (e.g. multivariate ideals with
    /// integer coefficients).
    const CanonForm& canonical() const;

    bool contains(const Value& v) const;
    bool contains(const Polynomial& f) const;
    bool contains_ideal(const Ideal& other) const;
    /// Radical membership. Fields: trivial; Z: divisibility of a power;
    /// polynomial rings over fields: the auxiliary-variable construction
    /// 1 in I + (1 - y f); quotients: on lifts with the defining ideal
    /// adjoined.
    bool radical_contains(const Value& v) const;
    bool radical_contains(const Polynomial& f) const;

    bool is_zero_ideal() const;
    bool is_unit_ideal() const;
    bool equals(const Ideal& other) const;

    std::string str() const;

private:
    friend struct CanonFormAccess;
    DomainPtr ring_;
    std::vector<Value> gens_;

    struct Cache {
        std::once_flag once;
        CanonForm form;
        std::string error_code;
        std::string error_msg;
    };
    std::shared_ptr<Cache> cache_;
};

enum class IdealCombine { Sum, Product, Power, Intersection };

/// Sum / product / power / intersection with canonicalized result.
/// Intersection over field coefficients uses elimination with an auxiliary
/// variable on t*I + (1-t)*J; over Z it is the lcm of gcd generators.
/// Power(0) is the unit ideal and ignores J.
Ideal ideal_combine(const Ideal& I, const Ideal& J, IdealCombine kind, unsigned long power = 1);

Ideal ideal_sum(const Ideal& I, const Ideal& J);
Ideal ideal_product(const Ideal& I, const Ideal& J);
Ideal ideal_power(const Ideal& I, unsigned long n);
Ideal ideal_intersection(const Ideal& I, const Ideal& J);

bool ideal_equal(const Ideal& I, const Ideal& J);
bool ideal_membership(const Polynomial& f, const Ideal& I);
bool radical_membership(const Polynomial& f, const Ideal& I);

/// Reduced Groebner basis of I as an ideal (idempotent; same ideal).
/// Requires field coefficients.
Ideal groebner_basis(const Ideal& I);

/// Full multivariate division remainder of f against the canonical basis of
/// I. normal_form(f, I) == 0 iff f lies in I; idempotent.
Polynomial normal_form(const Polynomial& f, const Ideal& I);

// Groebner engine primitives (field coefficients).
Polynomial reduce_full(const Polynomial& f, const std::vector<Polynomial>& basis);
std::vector<Polynomial> reduced_groebner(const std::vector<Polynomial>& gens);

}  // namespace orc
