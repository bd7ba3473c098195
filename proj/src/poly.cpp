// Copyright 2026 the orc authors
// SPDX-License-Identifier: Apache-2.0

#include "orc/poly.hpp"

#include <sstream>

namespace orc {

Polynomial::Polynomial(DomainPtr ring)
    : ring_(std::move(ring)), terms_(TermOrder{ring_->order()}) {
    require(ring_->kind() == DomainKind::PolyRing, errc::BadConstruction,
            "polynomial requires a polynomial ring domain");
}

Polynomial Polynomial::zero(const DomainPtr& ring) { return Polynomial(ring); }

Polynomial Polynomial::constant(const DomainPtr& ring, const Value& c) {
    Polynomial p(ring);
    p.insert_term(Monomial::one(ring->nvars()), c);
    return p;
}

Polynomial Polynomial::variable(const DomainPtr& ring, std::size_t index) {
    require(index < ring->nvars(), errc::IndexOutOfRange, "variable index out of range");
    Polynomial p(ring);
    p.insert_term(Monomial::var(ring->nvars(), index), ring->coeff()->one());
    return p;
}

Polynomial Polynomial::term(const DomainPtr& ring, const Monomial& m, const Value& c) {
    require(m.arity() == ring->nvars(), errc::BadConstruction, "monomial arity mismatch");
    Polynomial p(ring);
    p.insert_term(m, c);
    return p;
}

void Polynomial::insert_term(const Monomial& m, const Value& c) {
    require(c.domain()->same(ring_->coeff()), errc::DomainMismatch,
            "coefficient domain mismatch");
    merge_term(terms_, m, c);
}

Polynomial Polynomial::from_term_map(const DomainPtr& ring, TermMap terms) {
    Polynomial p(ring);
    p.terms_ = std::move(terms);
    return p;
}

void Polynomial::merge_term(TermMap& m, const Monomial& mono, Value v) {
    auto it = m.find(mono);
    if (it == m.end()) {
        if (!v.is_zero()) m.emplace(mono, std::move(v));
        return;
    }
    Value s = it->second.add(v);
    if (s.is_zero())
        m.erase(it);
    else
        it->second = std::move(s);
}

const Monomial& Polynomial::leading_monomial() const {
    require(!terms_.empty(), errc::BadConstruction, "zero polynomial has no leading term");
    return terms_.begin()->first;
}

const Value& Polynomial::leading_coeff() const {
    require(!terms_.empty(), errc::BadConstruction, "zero polynomial has no leading term");
    return terms_.begin()->second;
}

int Polynomial::total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

int Polynomial::degree_in(std::size_t var) const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.e[var]);
    return d;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Value Polynomial::constant_value() const {
    Monomial one = Monomial::one(ring_->nvars());
    auto it = terms_.find(one);
    if (it == terms_.end()) return ring_->coeff()->zero();
    return it->second;
}

Polynomial Polynomial::add(const Polynomial& o) const {
    require(ring_->same(*o.ring_), errc::DomainMismatch, "adding polynomials of different rings");
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.insert_term(m, c);
    return r;
}

Polynomial Polynomial::sub(const Polynomial& o) const { return add(o.neg()); }

Polynomial Polynomial::neg() const {
    Polynomial r(ring_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, c.neg());
    return r;
}

Polynomial Polynomial::mul(const Polynomial& o) const {
    require(ring_->same(*o.ring_), errc::DomainMismatch,
            "multiplying polynomials of different rings");
    Polynomial r(ring_);
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) r.insert_term(m1.times(m2), c1.mul(c2));
    return r;
}

Polynomial Polynomial::mul_term(const Monomial& m, const Value& c) const {
    Polynomial r(ring_);
    if (c.is_zero()) return r;
    for (const auto& [m1, c1] : terms_) r.insert_term(m1.times(m), c1.mul(c));
    return r;
}

Polynomial Polynomial::scale(const Value& c) const {
    return mul_term(Monomial::one(ring_->nvars()), c);
}

Polynomial Polynomial::divide_coeffs(const Value& c) const {
    Polynomial r(ring_);
    for (const auto& [m, v] : terms_) r.insert_term(m, v.div(c));
    return r;
}

Polynomial Polynomial::pow(unsigned long n) const {
    Polynomial acc = constant(ring_, ring_->coeff()->one());
    Polynomial base = *this;
    while (n > 0) {
        if (n & 1) acc = acc.mul(base);
        n >>= 1;
        if (n) base = base.mul(base);
    }
    return acc;
}

bool Polynomial::equals(const Polynomial& o) const {
    require(ring_->same(*o.ring_), errc::DomainMismatch,
            "comparing polynomials of different rings");
    if (terms_.size() != o.terms_.size()) return false;
    auto it = terms_.begin();
    auto jt = o.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt) {
        if (!(it->first == jt->first)) return false;
        if (!it->second.equals(jt->second)) return false;
    }
    return true;
}

std::vector<Value> Polynomial::coefficients() const {
    std::vector<Value> cs;
    cs.reserve(terms_.size());
    for (const auto& [m, c] : terms_) cs.push_back(c);
    return cs;
}

namespace {

std::string monomial_str(const Monomial& m, const std::vector<std::string>& vars) {
    std::string s;
    for (std::size_t i = 0; i < m.e.size(); ++i) {
        if (m.e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += vars[i];
        if (m.e[i] != 1) s += "^" + std::to_string(m.e[i]);
    }
    return s;
}

/// Numeric atoms (integers, residues, plain fractions) with an optional sign.
bool atomic_coeff(const std::string& s) {
    std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (i >= s.size()) return false;
    bool seen_slash = false;
    for (; i < s.size(); ++i) {
        if (s[i] == '/' && !seen_slash) {
            seen_slash = true;
            continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

bool fully_wrapped(const std::string& s) {
    if (s.size() < 2 || s.front() != '(' || s.back() != ')') return false;
    int depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(') ++depth;
        if (s[i] == ')' && --depth == 0) return i + 1 == s.size();
    }
    return false;
}

}  // namespace

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        std::string cs = c.str();
        std::string ms = monomial_str(m, ring_->vars());
        std::string piece;
        if (ms.empty()) {
            // Constant terms append raw: addition is associative, so a
            // composite constant flattens into the sum without parentheses.
            piece = cs;
        } else if (cs == "1") {
            piece = ms;
        } else if (cs == "-1") {
            piece = "-" + ms;
        } else if (atomic_coeff(cs) || fully_wrapped(cs)) {
            piece = cs + "*" + ms;
        } else {
            piece = "(" + cs + ")*" + ms;
        }
        bool negative = !piece.empty() && piece[0] == '-';
        if (first) {
            os << piece;
            first = false;
        } else if (negative) {
            os << " - " << piece.substr(1);
        } else {
            os << " + " << piece;
        }
    }
    return os.str();
}

bool rering_possible(const DomainPtr& from_ring, const DomainPtr& to_ring) {
    if (from_ring->kind() != DomainKind::PolyRing || to_ring->kind() != DomainKind::PolyRing)
        return false;
    if (from_ring->vars() != to_ring->vars()) return false;
    return coercible(from_ring->coeff(), to_ring->coeff());
}

Polynomial rering(const Polynomial& f, const DomainPtr& target_ring) {
    require(rering_possible(f.ring(), target_ring), errc::DomainMismatch,
            "cannot map " + f.ring()->describe() + " into " + target_ring->describe());
    Polynomial r = Polynomial::zero(target_ring);
    for (const auto& [m, c] : f.terms())
        r = r.add(Polynomial::term(target_ring, m, coerce(c, target_ring->coeff())));
    return r;
}

}  // namespace orc
