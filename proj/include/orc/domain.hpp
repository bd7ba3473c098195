// Copyright 2026 the orc authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "orc/error.hpp"
#include "orc/monomial.hpp"

namespace orc {

using BigInt = mpz_class;
using BigRat = mpq_class;

class Domain;
class Value;
class Polynomial;
class Ideal;
using DomainPtr = std::shared_ptr<const Domain>;

enum class DomainKind { Integers, Rationals, PrimeField, PolyRing, Quotient, Fraction, Product };

enum class ArithKind { Add, Sub, Mul, Div };

/// Runtime description of an exact base ring. Domains are immutable and
/// shared; structural equality (`same`) is the identity used everywhere.
///
/// Supported constructions: Z, Q, F_p, R[x1..xn], R[x..]/I (with the defining
/// ideal's Groebner basis cached at construction), Frac(R), and finite
/// products R1 x ... x Rk.
class Domain : public std::enable_shared_from_this<Domain> {
public:
    static DomainPtr integers();
    static DomainPtr rationals();
    /// p must be prime; checked by trial division (desk-scale inputs).
    static DomainPtr prime_field(const BigInt& p);
    static DomainPtr poly_ring(DomainPtr coeff, std::vector<std::string> vars,
                               MonomialOrder order = MonomialOrder{});
    /// `ambient` must be a PolyRing over a field. Whether the quotient is an
    /// integral domain is an asserted attribute supplied by the caller (for
    /// scenario files, by the scenario), never decided here.
    static DomainPtr quotient(const DomainPtr& ambient, const Ideal& defining,
                              bool integral_domain);
    /// `base` must be an integral domain with an exact zero test.
    static DomainPtr fraction_field(DomainPtr base);
    static DomainPtr product(std::vector<DomainPtr> factors);

    DomainKind kind() const { return kind_; }
    bool is_field() const;
    bool is_integral_domain() const;
    bool same(const Domain& other) const;
    bool same(const DomainPtr& other) const { return same(*other); }

    // PrimeField
    const BigInt& modulus() const { return p_; }

    // PolyRing
    const DomainPtr& coeff() const { return coeff_; }
    const std::vector<std::string>& vars() const { return vars_; }
    MonomialOrder order() const { return order_; }
    std::size_t nvars() const { return vars_.size(); }
    int var_index(const std::string& name) const;
    int mono_compare(const Monomial& a, const Monomial& b) const {
        return mono_cmp(a, b, order_);
    }

    // Quotient
    const DomainPtr& ambient() const { return ambient_; }
    const Ideal& defining() const { return *defining_; }
    bool integral_attr() const { return integral_; }

    // Fraction
    const DomainPtr& base() const { return base_; }

    // Product
    const std::vector<DomainPtr>& factors() const { return factors_; }

    Value zero() const;
    Value one() const;
    Value from_int(long n) const;
    Value from_bigint(const BigInt& n) const;

    /// Human-readable label, e.g. "F_5[a,b]/( a^2, b^2 )".
    std::string describe() const;

private:
    Domain() = default;

    DomainKind kind_ = DomainKind::Integers;
    BigInt p_;
    DomainPtr coeff_;
    std::vector<std::string> vars_;
    MonomialOrder order_{};
    DomainPtr ambient_;
    std::shared_ptr<const Ideal> defining_;
    bool integral_ = false;
    DomainPtr base_;
    std::vector<DomainPtr> factors_;
};

/// An element of a Domain, always stored in canonical payload form:
/// residues in [0,p), rationals reduced, poly-ring and quotient elements as
/// (normal-form) polynomials, fraction-field elements as num/den pairs with
/// nonzero denominator, product elements componentwise.
///
/// Values are immutable; all operations return fresh values.
class Value {
public:
    struct FracPair {
        std::shared_ptr<const Value> num, den;
    };
    using PolyPtr = std::shared_ptr<const Polynomial>;
    using Payload = std::variant<BigInt, BigRat, PolyPtr, FracPair, std::vector<Value>>;

    Value(DomainPtr domain, Payload payload)
        : dom_(std::move(domain)), payload_(std::move(payload)) {}

    const DomainPtr& domain() const { return dom_; }

    bool is_zero() const;
    bool is_one() const;
    /// Unit test, decidable per construction: +-1 in Z, nonzero in fields,
    /// nonzero constants with unit coefficient in poly rings, nonzero
    /// constant normal forms in quotients, componentwise in products.
    bool is_unit() const;
    /// Semantic equality. For fraction fields over quotient domains this is
    /// cross-multiplication followed by ideal membership of the difference.
    bool equals(const Value& o) const;

    Value add(const Value& o) const { return arith(*this, o, ArithKind::Add); }
    Value sub(const Value& o) const { return arith(*this, o, ArithKind::Sub); }
    Value mul(const Value& o) const { return arith(*this, o, ArithKind::Mul); }
    Value div(const Value& o) const { return arith(*this, o, ArithKind::Div); }
    Value neg() const;
    Value pow(unsigned long n) const;

    static Value arith(const Value& a, const Value& b, ArithKind kind);

    std::string str() const;

    // Checked payload accessors.
    const BigInt& as_int() const;
    const BigRat& as_rat() const;
    const Polynomial& as_poly() const;
    const Value& num() const;
    const Value& den() const;
    const std::vector<Value>& components() const;

private:
    DomainPtr dom_;
    Payload payload_;
};

/// Structural coercion into a target domain along the canonical inclusions:
/// identity, Z -> Q, Z -> F_p, base -> fraction field, coefficient -> constant
/// polynomial, ambient -> quotient (normal form), and compositions of these.
/// Throws DomainMismatch when no such path exists.
Value coerce(const Value& v, const DomainPtr& target);

/// True when `coerce` can map elements of `from` into `to`.
bool coercible(const DomainPtr& from, const DomainPtr& to);

}  // namespace orc
