// Copyright 2026 the orc authors
// SPDX-License-Identifier: Apache-2.0

#include "orc/domain.hpp"

#include <sstream>

#include "orc/ideal.hpp"
#include "orc/poly.hpp"

namespace orc {

namespace {

bool is_prime_trial_division(const BigInt& p) {
    if (p < 2) return false;
    if (p < 4) return true;
    if (p % 2 == 0) return false;
    for (BigInt d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

BigInt mod_nonneg(const BigInt& a, const BigInt& p) {
    BigInt r = a % p;
    if (r < 0) r += p;
    return r;
}

BigInt mod_inverse(const BigInt& a, const BigInt& p) {
    BigInt inv;
    if (mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()) == 0)
        fail(errc::DivisionByZero, "no inverse modulo " + p.get_str());
    return inv;
}

/// Cheap canonicalization of fraction payloads: zero numerators collapse to
/// 0/1 and unit denominators fold into the numerator. Full gcd reduction is
/// only available for Q (handled by mpq); deeper towers decide equality by
/// cross multiplication instead.
Value make_fraction(const DomainPtr& frac, Value n, Value d) {
    require(!d.is_zero(), errc::DivisionByZero,
            "zero denominator in " + frac->describe());
    if (n.is_zero())
        return Value(frac, Value::FracPair{std::make_shared<const Value>(frac->base()->zero()),
                                           std::make_shared<const Value>(frac->base()->one())});
    if (d.is_unit() && !d.is_one()) {
        n = n.div(d);
        d = frac->base()->one();
    }
    return Value(frac, Value::FracPair{std::make_shared<const Value>(std::move(n)),
                                       std::make_shared<const Value>(std::move(d))});
}

}  // namespace

// ---------------------------------------------------------------------------
// Domain construction

DomainPtr Domain::integers() {
    static DomainPtr instance = [] {
        auto d = std::shared_ptr<Domain>(new Domain());
        d->kind_ = DomainKind::Integers;
        return DomainPtr(d);
    }();
    return instance;
}

DomainPtr Domain::rationals() {
    static DomainPtr instance = [] {
        auto d = std::shared_ptr<Domain>(new Domain());
        d->kind_ = DomainKind::Rationals;
        return DomainPtr(d);
    }();
    return instance;
}

DomainPtr Domain::prime_field(const BigInt& p) {
    require(is_prime_trial_division(p), errc::BadConstruction,
            "prime field modulus " + p.get_str() + " is not prime");
    auto d = std::shared_ptr<Domain>(new Domain());
    d->kind_ = DomainKind::PrimeField;
    d->p_ = p;
    return d;
}

DomainPtr Domain::poly_ring(DomainPtr coeff, std::vector<std::string> vars, MonomialOrder order) {
    require(coeff != nullptr, errc::BadConstruction, "polynomial ring needs a coefficient domain");
    require(!vars.empty(), errc::BadConstruction, "polynomial ring needs at least one variable");
    for (std::size_t i = 0; i < vars.size(); ++i)
        for (std::size_t j = i + 1; j < vars.size(); ++j)
            require(vars[i] != vars[j], errc::BadConstruction, "duplicate variable " + vars[i]);
    auto d = std::shared_ptr<Domain>(new Domain());
    d->kind_ = DomainKind::PolyRing;
    d->coeff_ = std::move(coeff);
    d->vars_ = std::move(vars);
    d->order_ = order;
    return d;
}

DomainPtr Domain::quotient(const DomainPtr& ambient, const Ideal& defining, bool integral_domain) {
    require(ambient && ambient->kind() == DomainKind::PolyRing, errc::BadConstruction,
            "quotient ambient must be a polynomial ring");
    require(ambient->coeff()->is_field(), errc::BadConstruction,
            "quotient ambient must have field coefficients");
    require(defining.ring()->same(ambient), errc::DomainMismatch,
            "defining ideal lives in a different ring");
    defining.canonical();  // force the cached Groebner basis now
    require(!defining.is_unit_ideal(), errc::BadConstruction,
            "defining ideal is the unit ideal");
    auto d = std::shared_ptr<Domain>(new Domain());
    d->kind_ = DomainKind::Quotient;
    d->ambient_ = ambient;
    d->defining_ = std::make_shared<const Ideal>(defining);
    d->integral_ = integral_domain;
    return d;
}

DomainPtr Domain::fraction_field(DomainPtr base) {
    require(base != nullptr, errc::BadConstruction, "fraction field needs a base domain");
    require(base->is_integral_domain(), errc::BadConstruction,
            "fraction field base must be an integral domain (asserted for quotients)");
    auto d = std::shared_ptr<Domain>(new Domain());
    d->kind_ = DomainKind::Fraction;
    d->base_ = std::move(base);
    return d;
}

DomainPtr Domain::product(std::vector<DomainPtr> factors) {
    require(!factors.empty(), errc::BadConstruction, "product of no rings");
    auto d = std::shared_ptr<Domain>(new Domain());
    d->kind_ = DomainKind::Product;
    d->factors_ = std::move(factors);
    return d;
}

bool Domain::is_field() const {
    switch (kind_) {
        case DomainKind::Rationals:
        case DomainKind::PrimeField:
        case DomainKind::Fraction:
            return true;
        default:
            return false;
    }
}

bool Domain::is_integral_domain() const {
    switch (kind_) {
        case DomainKind::Integers:
        case DomainKind::Rationals:
        case DomainKind::PrimeField:
        case DomainKind::Fraction:
            return true;
        case DomainKind::PolyRing:
            return coeff_->is_integral_domain();
        case DomainKind::Quotient:
            return integral_;
        case DomainKind::Product:
            return false;
    }
    return false;
}

bool Domain::same(const Domain& o) const {
    if (this == &o) return true;
    if (kind_ != o.kind_) return false;
    switch (kind_) {
        case DomainKind::Integers:
        case DomainKind::Rationals:
            return true;
        case DomainKind::PrimeField:
            return p_ == o.p_;
        case DomainKind::PolyRing:
            return vars_ == o.vars_ && order_ == o.order_ && coeff_->same(*o.coeff_);
        case DomainKind::Quotient:
            return ambient_->same(*o.ambient_) && defining_->equals(*o.defining_) &&
                   integral_ == o.integral_;
        case DomainKind::Fraction:
            return base_->same(*o.base_);
        case DomainKind::Product: {
            if (factors_.size() != o.factors_.size()) return false;
            for (std::size_t i = 0; i < factors_.size(); ++i)
                if (!factors_[i]->same(*o.factors_[i])) return false;
            return true;
        }
    }
    return false;
}

int Domain::var_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return static_cast<int>(i);
    return -1;
}

Value Domain::zero() const { return from_bigint(0); }
Value Domain::one() const { return from_bigint(1); }
Value Domain::from_int(long n) const { return from_bigint(BigInt(n)); }

Value Domain::from_bigint(const BigInt& n) const {
    DomainPtr self = shared_from_this();
    switch (kind_) {
        case DomainKind::Integers:
            return Value(self, n);
        case DomainKind::Rationals:
            return Value(self, BigRat(n));
        case DomainKind::PrimeField:
            return Value(self, mod_nonneg(n, p_));
        case DomainKind::PolyRing: {
            Value c = coeff_->from_bigint(n);
            Polynomial p = Polynomial::constant(self, c);
            return Value(self, std::make_shared<const Polynomial>(std::move(p)));
        }
        case DomainKind::Quotient: {
            Value amb = ambient_->from_bigint(n);
            Polynomial nf = normal_form(amb.as_poly(), *defining_);
            return Value(self, std::make_shared<const Polynomial>(std::move(nf)));
        }
        case DomainKind::Fraction: {
            Value::FracPair fp{std::make_shared<const Value>(base_->from_bigint(n)),
                               std::make_shared<const Value>(base_->one())};
            return Value(self, std::move(fp));
        }
        case DomainKind::Product: {
            std::vector<Value> comps;
            comps.reserve(factors_.size());
            for (const auto& f : factors_) comps.push_back(f->from_bigint(n));
            return Value(self, std::move(comps));
        }
    }
    fail(errc::BadConstruction, "unreachable domain kind");
}

std::string Domain::describe() const {
    std::ostringstream os;
    switch (kind_) {
        case DomainKind::Integers:
            return "Z";
        case DomainKind::Rationals:
            return "Q";
        case DomainKind::PrimeField:
            return "F_" + p_.get_str();
        case DomainKind::PolyRing: {
            os << coeff_->describe() << "[";
            for (std::size_t i = 0; i < vars_.size(); ++i) os << (i ? "," : "") << vars_[i];
            os << "]";
            return os.str();
        }
        case DomainKind::Quotient:
            return ambient_->describe() + "/" + defining_->str();
        case DomainKind::Fraction:
            return "Frac(" + base_->describe() + ")";
        case DomainKind::Product: {
            for (std::size_t i = 0; i < factors_.size(); ++i)
                os << (i ? " x " : "") << factors_[i]->describe();
            return os.str();
        }
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Value

const BigInt& Value::as_int() const {
    const BigInt* p = std::get_if<BigInt>(&payload_);
    require(p != nullptr, errc::BadConstruction, "value payload is not an integer");
    return *p;
}

const BigRat& Value::as_rat() const {
    const BigRat* p = std::get_if<BigRat>(&payload_);
    require(p != nullptr, errc::BadConstruction, "value payload is not a rational");
    return *p;
}

const Polynomial& Value::as_poly() const {
    const PolyPtr* p = std::get_if<PolyPtr>(&payload_);
    require(p != nullptr, errc::BadConstruction, "value payload is not a polynomial");
    return **p;
}

const Value& Value::num() const {
    const FracPair* p = std::get_if<FracPair>(&payload_);
    require(p != nullptr, errc::BadConstruction, "value payload is not a fraction");
    return *p->num;
}

const Value& Value::den() const {
    const FracPair* p = std::get_if<FracPair>(&payload_);
    require(p != nullptr, errc::BadConstruction, "value payload is not a fraction");
    return *p->den;
}

const std::vector<Value>& Value::components() const {
    const std::vector<Value>* p = std::get_if<std::vector<Value>>(&payload_);
    require(p != nullptr, errc::BadConstruction, "value payload is not a tuple");
    return *p;
}

bool Value::is_zero() const {
    switch (dom_->kind()) {
        case DomainKind::Integers:
        case DomainKind::PrimeField:
            return as_int() == 0;
        case DomainKind::Rationals:
            return as_rat() == 0;
        case DomainKind::PolyRing:
        case DomainKind::Quotient:
            return as_poly().is_zero();
        case DomainKind::Fraction:
            // Exact zero test of the base; for quotient bases this is ideal
            // membership of the numerator's normal form.
            return num().is_zero();
        case DomainKind::Product: {
            for (const auto& c : components())
                if (!c.is_zero()) return false;
            return true;
        }
    }
    return false;
}

bool Value::is_one() const { return equals(dom_->one()); }

bool Value::is_unit() const {
    switch (dom_->kind()) {
        case DomainKind::Integers:
            return as_int() == 1 || as_int() == -1;
        case DomainKind::Rationals:
        case DomainKind::PrimeField:
        case DomainKind::Fraction:
            return !is_zero();
        case DomainKind::PolyRing:
            return as_poly().is_constant() && !as_poly().is_zero() &&
                   as_poly().constant_value().is_unit();
        case DomainKind::Quotient:
            // Units detectable as nonzero constants; other units are not
            // recognized (and never needed).
            return as_poly().is_constant() && !as_poly().is_zero() &&
                   as_poly().constant_value().is_unit();
        case DomainKind::Product: {
            for (const auto& c : components())
                if (!c.is_unit()) return false;
            return true;
        }
    }
    return false;
}

bool Value::equals(const Value& o) const {
    require(dom_->same(*o.dom_), errc::DomainMismatch, "comparing values of different domains");
    return sub(o).is_zero();
}

Value Value::neg() const { return dom_->zero().sub(*this); }

Value Value::pow(unsigned long n) const {
    Value acc = dom_->one();
    Value base = *this;
    while (n > 0) {
        if (n & 1) acc = acc.mul(base);
        n >>= 1;
        if (n) base = base.mul(base);
    }
    return acc;
}

Value Value::arith(const Value& a, const Value& b, ArithKind kind) {
    require(a.dom_->same(*b.dom_), errc::DomainMismatch,
            "operands live in different domains: " + a.dom_->describe() + " vs " +
                b.dom_->describe());
    const DomainPtr& dom = a.dom_;
    switch (dom->kind()) {
        case DomainKind::Integers: {
            const BigInt& x = a.as_int();
            const BigInt& y = b.as_int();
            switch (kind) {
                case ArithKind::Add: return Value(dom, BigInt(x + y));
                case ArithKind::Sub: return Value(dom, BigInt(x - y));
                case ArithKind::Mul: return Value(dom, BigInt(x * y));
                case ArithKind::Div:
                    require(y != 0, errc::DivisionByZero, "division by zero in Z");
                    require(y == 1 || y == -1, errc::NonUnitDivisor,
                            "division by non-unit " + y.get_str() + " in Z");
                    return Value(dom, BigInt(x * y));  // y = +-1
            }
            break;
        }
        case DomainKind::Rationals: {
            const BigRat& x = a.as_rat();
            const BigRat& y = b.as_rat();
            BigRat r;
            switch (kind) {
                case ArithKind::Add: r = x + y; break;
                case ArithKind::Sub: r = x - y; break;
                case ArithKind::Mul: r = x * y; break;
                case ArithKind::Div:
                    require(y != 0, errc::DivisionByZero, "division by zero in Q");
                    r = x / y;
                    break;
            }
            r.canonicalize();
            return Value(dom, r);
        }
        case DomainKind::PrimeField: {
            const BigInt& p = dom->modulus();
            const BigInt& x = a.as_int();
            const BigInt& y = b.as_int();
            switch (kind) {
                case ArithKind::Add: return Value(dom, mod_nonneg(x + y, p));
                case ArithKind::Sub: return Value(dom, mod_nonneg(x - y, p));
                case ArithKind::Mul: return Value(dom, mod_nonneg(x * y, p));
                case ArithKind::Div:
                    require(y != 0, errc::DivisionByZero, "division by zero in F_" + p.get_str());
                    return Value(dom, mod_nonneg(x * mod_inverse(y, p), p));
            }
            break;
        }
        case DomainKind::PolyRing: {
            const Polynomial& x = a.as_poly();
            const Polynomial& y = b.as_poly();
            Polynomial r = Polynomial::zero(dom);
            switch (kind) {
                case ArithKind::Add: r = x.add(y); break;
                case ArithKind::Sub: r = x.sub(y); break;
                case ArithKind::Mul: r = x.mul(y); break;
                case ArithKind::Div: {
                    require(!y.is_zero(), errc::DivisionByZero, "division by zero polynomial");
                    require(b.is_unit(), errc::NonUnitDivisor,
                            "polynomial divisor " + y.str() + " is not a unit");
                    r = x.divide_coeffs(y.constant_value());
                    break;
                }
            }
            return Value(dom, std::make_shared<const Polynomial>(std::move(r)));
        }
        case DomainKind::Quotient: {
            const Polynomial& x = a.as_poly();
            const Polynomial& y = b.as_poly();
            Polynomial r = Polynomial::zero(dom->ambient());
            switch (kind) {
                case ArithKind::Add: r = x.add(y); break;
                case ArithKind::Sub: r = x.sub(y); break;
                case ArithKind::Mul: r = normal_form(x.mul(y), dom->defining()); break;
                case ArithKind::Div: {
                    require(!b.is_zero(), errc::DivisionByZero,
                            "division by zero in " + dom->describe());
                    require(b.is_unit(), errc::NonUnitDivisor,
                            "divisor " + y.str() + " is not a detectable unit of " +
                                dom->describe());
                    r = x.divide_coeffs(y.constant_value());
                    break;
                }
            }
            return Value(dom, std::make_shared<const Polynomial>(std::move(r)));
        }
        case DomainKind::Fraction: {
            const Value& an = a.num();
            const Value& ad = a.den();
            const Value& bn = b.num();
            const Value& bd = b.den();
            Value rn = an, rd = ad;
            switch (kind) {
                case ArithKind::Add:
                    rn = an.mul(bd).add(bn.mul(ad));
                    rd = ad.mul(bd);
                    break;
                case ArithKind::Sub:
                    rn = an.mul(bd).sub(bn.mul(ad));
                    rd = ad.mul(bd);
                    break;
                case ArithKind::Mul:
                    rn = an.mul(bn);
                    rd = ad.mul(bd);
                    break;
                case ArithKind::Div:
                    require(!b.is_zero(), errc::DivisionByZero,
                            "division by zero in " + dom->describe());
                    rn = an.mul(bd);
                    rd = ad.mul(bn);
                    break;
            }
            return make_fraction(dom, std::move(rn), std::move(rd));
        }
        case DomainKind::Product: {
            const auto& xs = a.components();
            const auto& ys = b.components();
            std::vector<Value> rs;
            rs.reserve(xs.size());
            for (std::size_t i = 0; i < xs.size(); ++i) rs.push_back(arith(xs[i], ys[i], kind));
            return Value(dom, std::move(rs));
        }
    }
    fail(errc::BadConstruction, "unreachable arithmetic case");
}

std::string Value::str() const {
    switch (dom_->kind()) {
        case DomainKind::Integers:
        case DomainKind::PrimeField:
            return as_int().get_str();
        case DomainKind::Rationals: {
            const BigRat& q = as_rat();
            if (q.get_den() == 1) return q.get_num().get_str();
            return q.get_num().get_str() + "/" + q.get_den().get_str();
        }
        case DomainKind::PolyRing:
        case DomainKind::Quotient:
            return as_poly().str();
        case DomainKind::Fraction: {
            if (den().is_one()) return num().str();
            return "(" + num().str() + ")/(" + den().str() + ")";
        }
        case DomainKind::Product: {
            std::string s = "(";
            const auto& cs = components();
            for (std::size_t i = 0; i < cs.size(); ++i) s += (i ? ", " : "") + cs[i].str();
            return s + ")";
        }
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Coercion

bool coercible(const DomainPtr& from, const DomainPtr& to) {
    if (from->same(*to)) return true;
    switch (to->kind()) {
        case DomainKind::Rationals:
            return from->kind() == DomainKind::Integers;
        case DomainKind::PrimeField:
            return from->kind() == DomainKind::Integers;
        case DomainKind::PolyRing:
            return coercible(from, to->coeff());
        case DomainKind::Quotient:
            return coercible(from, to->ambient());
        case DomainKind::Fraction:
            return coercible(from, to->base());
        default:
            return false;
    }
}

Value coerce(const Value& v, const DomainPtr& target) {
    if (v.domain()->same(*target)) return v;
    switch (target->kind()) {
        case DomainKind::Rationals:
            if (v.domain()->kind() == DomainKind::Integers)
                return Value(target, BigRat(v.as_int()));
            break;
        case DomainKind::PrimeField:
            if (v.domain()->kind() == DomainKind::Integers)
                return target->from_bigint(v.as_int());
            break;
        case DomainKind::PolyRing: {
            Value c = coerce(v, target->coeff());
            Polynomial p = Polynomial::constant(target, c);
            return Value(target, std::make_shared<const Polynomial>(std::move(p)));
        }
        case DomainKind::Quotient: {
            Value amb = coerce(v, target->ambient());
            Polynomial nf = normal_form(amb.as_poly(), target->defining());
            return Value(target, std::make_shared<const Polynomial>(std::move(nf)));
        }
        case DomainKind::Fraction: {
            Value n = coerce(v, target->base());
            Value::FracPair fp{std::make_shared<const Value>(std::move(n)),
                               std::make_shared<const Value>(target->base()->one())};
            return Value(target, std::move(fp));
        }
        default:
            break;
    }
    fail(errc::DomainMismatch,
         "cannot coerce " + v.domain()->describe() + " into " + target->describe());
}

}  // namespace orc
