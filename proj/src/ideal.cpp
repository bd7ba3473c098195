// Copyright 2026 the orc authors
// SPDX-License-Identifier: Apache-2.0

#include "orc/ideal.hpp"

#include <sstream>

namespace orc {

namespace {

BigInt abs_big(const BigInt& a) { return a < 0 ? BigInt(-a) : a; }

BigInt gcd_big(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

BigInt lcm_big(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

/// Prepend an extra variable (exponent 0) to every monomial of f, moving it
/// into `ext` (same coefficients, one more variable in front).
Polynomial extend_poly(const Polynomial& f, const DomainPtr& ext) {
    Polynomial r = Polynomial::zero(ext);
    for (const auto& [m, c] : f.terms()) {
        Monomial em = Monomial::one(ext->nvars());
        for (std::size_t i = 0; i < m.e.size(); ++i) em.e[i + 1] = m.e[i];
        r = r.add(Polynomial::term(ext, em, c));
    }
    return r;
}

/// Inverse of extend_poly for polynomials whose first exponent vanishes.
Polynomial shrink_poly(const Polynomial& f, const DomainPtr& ring) {
    Polynomial r = Polynomial::zero(ring);
    for (const auto& [m, c] : f.terms()) {
        Monomial sm = Monomial::one(ring->nvars());
        for (std::size_t i = 0; i < sm.e.size(); ++i) sm.e[i] = m.e[i + 1];
        r = r.add(Polynomial::term(ring, sm, c));
    }
    return r;
}

DomainPtr elimination_ring(const DomainPtr& ring, const std::string& aux) {
    std::vector<std::string> vars;
    vars.reserve(ring->nvars() + 1);
    vars.push_back(aux);
    for (const auto& v : ring->vars()) vars.push_back(v);
    return Domain::poly_ring(ring->coeff(), std::move(vars), MonomialOrder{OrderKind::Elim1});
}

bool basis_is_unit(const std::vector<Polynomial>& basis) {
    return basis.size() == 1 && basis.front().is_constant() && !basis.front().is_zero();
}

}  // namespace

// ---------------------------------------------------------------------------
// Construction

Ideal::Ideal(DomainPtr ring, std::vector<Value> gens)
    : ring_(std::move(ring)), gens_(std::move(gens)), cache_(std::make_shared<Cache>()) {
    for (const auto& g : gens_)
        require(g.domain()->same(ring_), errc::DomainMismatch,
                "ideal generator lives in a different ring");
}

Ideal Ideal::zero(const DomainPtr& ring) { return Ideal(ring, {}); }

Ideal Ideal::unit(const DomainPtr& ring) { return Ideal(ring, {ring->one()}); }

Ideal Ideal::of_polys(const DomainPtr& ring, const std::vector<Polynomial>& gens) {
    require(ring->kind() == DomainKind::PolyRing, errc::BadConstruction,
            "of_polys requires a polynomial ring domain");
    std::vector<Value> vs;
    vs.reserve(gens.size());
    for (const auto& g : gens) {
        require(g.ring()->same(ring), errc::DomainMismatch, "generator ring mismatch");
        vs.emplace_back(ring, std::make_shared<const Polynomial>(g));
    }
    return Ideal(ring, std::move(vs));
}

std::vector<Polynomial> Ideal::gen_polys() const {
    std::vector<Polynomial> ps;
    ps.reserve(gens_.size());
    for (const auto& g : gens_) ps.push_back(g.as_poly());
    return ps;
}

// ---------------------------------------------------------------------------
// Canonical form

const CanonForm& Ideal::canonical() const {
    std::call_once(cache_->once, [this] {
        try {
            CanonForm form;
            switch (ring_->kind()) {
                case DomainKind::Integers: {
                    form.tag = CanonForm::Tag::PrincipalInt;
                    BigInt g = 0;
                    for (const auto& v : gens_) g = gcd_big(g, v.as_int());
                    form.principal = abs_big(g);
                    break;
                }
                case DomainKind::Rationals:
                case DomainKind::PrimeField:
                case DomainKind::Fraction: {
                    form.tag = CanonForm::Tag::FieldIdeal;
                    form.field_unit = false;
                    for (const auto& v : gens_)
                        if (!v.is_zero()) form.field_unit = true;
                    break;
                }
                case DomainKind::PolyRing: {
                    require(ring_->coeff()->is_field(), errc::UnsupportedCoefficients,
                            "ideal arithmetic over " + ring_->describe() +
                                " is not supported (field coefficients required)");
                    form.tag = CanonForm::Tag::GroebnerBasis;
                    std::vector<Polynomial> ps;
                    for (const auto& g : gens_)
                        if (!g.as_poly().is_zero()) ps.push_back(g.as_poly());
                    form.basis = reduced_groebner(ps);
                    break;
                }
                case DomainKind::Quotient: {
                    form.tag = CanonForm::Tag::QuotientLift;
                    std::vector<Polynomial> ps;
                    for (const auto& g : gens_)
                        if (!g.as_poly().is_zero()) ps.push_back(g.as_poly());
                    for (const auto& d : ring_->defining().canonical().basis) ps.push_back(d);
                    form.basis = reduced_groebner(ps);
                    break;
                }
                case DomainKind::Product: {
                    form.tag = CanonForm::Tag::ProductTuple;
                    const auto& factors = ring_->factors();
                    for (std::size_t i = 0; i < factors.size(); ++i) {
                        std::vector<Value> comp_gens;
                        for (const auto& g : gens_) comp_gens.push_back(g.components()[i]);
                        form.components.emplace_back(factors[i], std::move(comp_gens));
                        form.components.back().canonical();
                    }
                    break;
                }
            }
            cache_->form = std::move(form);
        } catch (const Error& e) {
            cache_->error_code = e.code();
            cache_->error_msg = e.message();
        }
    });
    if (!cache_->error_code.empty()) throw Error(cache_->error_code, cache_->error_msg);
    return cache_->form;
}

// ---------------------------------------------------------------------------
// Membership and equality

bool Ideal::contains(const Value& v) const {
    require(v.domain()->same(ring_), errc::DomainMismatch, "membership across rings");
    const CanonForm& c = canonical();
    switch (c.tag) {
        case CanonForm::Tag::PrincipalInt: {
            if (c.principal == 0) return v.as_int() == 0;
            return v.as_int() % c.principal == 0;
        }
        case CanonForm::Tag::FieldIdeal:
            return c.field_unit || v.is_zero();
        case CanonForm::Tag::GroebnerBasis:
        case CanonForm::Tag::QuotientLift:
            return reduce_full(v.as_poly(), c.basis).is_zero();
        case CanonForm::Tag::ProductTuple: {
            const auto& comps = v.components();
            for (std::size_t i = 0; i < comps.size(); ++i)
                if (!c.components[i].contains(comps[i])) return false;
            return true;
        }
    }
    return false;
}

bool Ideal::contains(const Polynomial& f) const {
    return contains(Value(ring_, std::make_shared<const Polynomial>(f)));
}

bool Ideal::contains_ideal(const Ideal& other) const {
    require(other.ring()->same(ring_), errc::DomainMismatch, "containment across rings");
    for (const auto& g : other.gens())
        if (!contains(g)) return false;
    return true;
}

bool Ideal::radical_contains(const Value& v) const {
    require(v.domain()->same(ring_), errc::DomainMismatch, "membership across rings");
    const CanonForm& c = canonical();
    switch (c.tag) {
        case CanonForm::Tag::PrincipalInt: {
            const BigInt& g = c.principal;
            if (g == 0) return v.as_int() == 0;
            if (g == 1) return true;
            // v in sqrt(gZ) iff g divides v^k where k bounds every prime
            // multiplicity of g; bit length does.
            if (v.as_int() == 0) return true;
            unsigned long k = mpz_sizeinbase(g.get_mpz_t(), 2);
            BigInt base = v.as_int() % g;
            if (base < 0) base += g;
            BigInt pw;
            BigInt e(static_cast<unsigned long>(k));
            mpz_powm(pw.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), g.get_mpz_t());
            return pw == 0;
        }
        case CanonForm::Tag::FieldIdeal:
            return c.field_unit || v.is_zero();
        case CanonForm::Tag::GroebnerBasis:
        case CanonForm::Tag::QuotientLift: {
            const Polynomial& f = v.as_poly();
            if (reduce_full(f, c.basis).is_zero()) return true;  // fast path: f in I
            const DomainPtr& ambient_ring = f.ring();
            DomainPtr ext = elimination_ring(ambient_ring, "~y");
            std::vector<Polynomial> gens;
            for (const auto& b : c.basis) gens.push_back(extend_poly(b, ext));
            Polynomial y = Polynomial::variable(ext, 0);
            Polynomial one = Polynomial::constant(ext, ext->coeff()->one());
            gens.push_back(one.sub(y.mul(extend_poly(f, ext))));
            return basis_is_unit(reduced_groebner(gens));
        }
        case CanonForm::Tag::ProductTuple: {
            const auto& comps = v.components();
            for (std::size_t i = 0; i < comps.size(); ++i)
                if (!c.components[i].radical_contains(comps[i])) return false;
            return true;
        }
    }
    return false;
}

bool Ideal::radical_contains(const Polynomial& f) const {
    return radical_contains(Value(ring_, std::make_shared<const Polynomial>(f)));
}

bool Ideal::is_zero_ideal() const {
    const CanonForm& c = canonical();
    switch (c.tag) {
        case CanonForm::Tag::PrincipalInt: return c.principal == 0;
        case CanonForm::Tag::FieldIdeal: return !c.field_unit;
        case CanonForm::Tag::GroebnerBasis: return c.basis.empty();
        case CanonForm::Tag::QuotientLift:
            return Ideal::zero(ring_).equals(*this);
        case CanonForm::Tag::ProductTuple: {
            for (const auto& comp : c.components)
                if (!comp.is_zero_ideal()) return false;
            return true;
        }
    }
    return false;
}

bool Ideal::is_unit_ideal() const {
    const CanonForm& c = canonical();
    switch (c.tag) {
        case CanonForm::Tag::PrincipalInt: return c.principal == 1;
        case CanonForm::Tag::FieldIdeal: return c.field_unit;
        case CanonForm::Tag::GroebnerBasis:
        case CanonForm::Tag::QuotientLift: return basis_is_unit(c.basis);
        case CanonForm::Tag::ProductTuple: {
            for (const auto& comp : c.components)
                if (!comp.is_unit_ideal()) return false;
            return true;
        }
    }
    return false;
}

bool Ideal::equals(const Ideal& other) const {
    require(other.ring()->same(ring_), errc::DomainMismatch, "ideal equality across rings");
    const CanonForm& a = canonical();
    const CanonForm& b = other.canonical();
    switch (a.tag) {
        case CanonForm::Tag::PrincipalInt:
            return a.principal == b.principal;
        case CanonForm::Tag::FieldIdeal:
            return a.field_unit == b.field_unit;
        case CanonForm::Tag::GroebnerBasis:
        case CanonForm::Tag::QuotientLift: {
            if (a.basis.size() != b.basis.size()) return false;
            for (std::size_t i = 0; i < a.basis.size(); ++i)
                if (!a.basis[i].equals(b.basis[i])) return false;
            return true;
        }
        case CanonForm::Tag::ProductTuple: {
            for (std::size_t i = 0; i < a.components.size(); ++i)
                if (!a.components[i].equals(b.components[i])) return false;
            return true;
        }
    }
    return false;
}

std::string Ideal::str() const {
    const CanonForm& c = canonical();
    std::ostringstream os;
    os << "( ";
    switch (c.tag) {
        case CanonForm::Tag::PrincipalInt:
            os << c.principal.get_str();
            break;
        case CanonForm::Tag::FieldIdeal:
            os << (c.field_unit ? "1" : "0");
            break;
        case CanonForm::Tag::GroebnerBasis: {
            if (c.basis.empty()) {
                os << "0";
            } else {
                for (std::size_t i = 0; i < c.basis.size(); ++i)
                    os << (i ? ", " : "") << c.basis[i].str();
            }
            break;
        }
        case CanonForm::Tag::QuotientLift: {
            // Print normal forms of the lifted basis, dropping generators of
            // the defining ideal itself.
            std::vector<std::string> printed;
            for (const auto& b : c.basis) {
                Polynomial nf = reduce_full(b, ring_->defining().canonical().basis);
                if (!nf.is_zero()) printed.push_back(nf.str());
            }
            if (printed.empty()) {
                os << "0";
            } else {
                for (std::size_t i = 0; i < printed.size(); ++i)
                    os << (i ? ", " : "") << printed[i];
            }
            break;
        }
        case CanonForm::Tag::ProductTuple: {
            for (std::size_t i = 0; i < c.components.size(); ++i)
                os << (i ? ", " : "") << c.components[i].str();
            break;
        }
    }
    os << " )";
    return os.str();
}

// ---------------------------------------------------------------------------
// Combination

namespace {

Ideal combine_dispatch(const Ideal& I, const Ideal& J, IdealCombine kind, unsigned long n);

/// Generators off the canonical form where that shrinks the list (reduced
/// Groebner bases, gcd generators); raw generators otherwise. Keeps iterated
/// products from multiplying generator counts.
std::vector<Value> reduced_generators(const Ideal& I) {
    const CanonForm& c = I.canonical();
    switch (c.tag) {
        case CanonForm::Tag::PrincipalInt:
            return {Value(I.ring(), c.principal)};
        case CanonForm::Tag::GroebnerBasis: {
            std::vector<Value> gens;
            for (const auto& b : c.basis)
                gens.emplace_back(I.ring(), std::make_shared<const Polynomial>(b));
            return gens;
        }
        case CanonForm::Tag::QuotientLift: {
            // keep quotient payloads in normal form; defining-ideal elements
            // reduce to zero and drop out
            std::vector<Value> gens;
            for (const auto& b : c.basis) {
                Polynomial nf = reduce_full(b, I.ring()->defining().canonical().basis);
                if (!nf.is_zero())
                    gens.emplace_back(I.ring(), std::make_shared<const Polynomial>(nf));
            }
            return gens;
        }
        default:
            return I.gens();
    }
}

Ideal product_ideal(const Ideal& I, const Ideal& J) {
    std::vector<Value> gens;
    for (const auto& a : reduced_generators(I))
        for (const auto& b : reduced_generators(J)) gens.push_back(a.mul(b));
    return Ideal(I.ring(), std::move(gens));
}

Ideal intersection_ideal(const Ideal& I, const Ideal& J) {
    const DomainPtr& ring = I.ring();
    switch (ring->kind()) {
        case DomainKind::Integers: {
            BigInt a = I.canonical().principal;
            BigInt b = J.canonical().principal;
            return Ideal(ring, {Value(ring, lcm_big(a, b))});
        }
        case DomainKind::Rationals:
        case DomainKind::PrimeField:
        case DomainKind::Fraction: {
            if (I.is_zero_ideal() || J.is_zero_ideal()) return Ideal::zero(ring);
            return Ideal::unit(ring);
        }
        case DomainKind::PolyRing: {
            // Elimination on t*I + (1-t)*J with the auxiliary variable first.
            DomainPtr ext = elimination_ring(ring, "~t");
            Polynomial t = Polynomial::variable(ext, 0);
            Polynomial one = Polynomial::constant(ext, ext->coeff()->one());
            Polynomial omt = one.sub(t);
            std::vector<Polynomial> gens;
            for (const auto& f : I.canonical().basis) gens.push_back(t.mul(extend_poly(f, ext)));
            for (const auto& g : J.canonical().basis) gens.push_back(omt.mul(extend_poly(g, ext)));
            std::vector<Polynomial> result;
            for (const auto& b : reduced_groebner(gens))
                if (b.leading_monomial().e[0] == 0) result.push_back(shrink_poly(b, ring));
            return Ideal::of_polys(ring, result);
        }
        case DomainKind::Quotient: {
            // Intersect the full preimages in the ambient ring.
            const DomainPtr& amb = ring->ambient();
            auto lift = [&](const Ideal& K) {
                std::vector<Polynomial> ps;
                for (const auto& g : K.gens()) ps.push_back(g.as_poly());
                for (const auto& d : ring->defining().gen_polys()) ps.push_back(d);
                return Ideal::of_polys(amb, ps);
            };
            Ideal meet = intersection_ideal(lift(I), lift(J));
            std::vector<Value> gens;
            for (const auto& b : meet.canonical().basis)
                gens.emplace_back(ring, std::make_shared<const Polynomial>(
                                            reduce_full(b, ring->defining().canonical().basis)));
            return Ideal(ring, std::move(gens));
        }
        case DomainKind::Product: {
            const auto& factors = ring->factors();
            const auto& ci = I.canonical().components;
            const auto& cj = J.canonical().components;
            // Reassemble componentwise intersections into product generators:
            // pad each component generator with zero (resp. unchanged)
            // entries elsewhere.
            std::vector<Value> gens;
            for (std::size_t i = 0; i < factors.size(); ++i) {
                Ideal meet = intersection_ideal(ci[i], cj[i]);
                for (const auto& g : meet.gens()) {
                    std::vector<Value> tuple;
                    for (std::size_t k = 0; k < factors.size(); ++k)
                        tuple.push_back(k == i ? g : factors[k]->zero());
                    gens.emplace_back(ring, std::move(tuple));
                }
            }
            return Ideal(ring, std::move(gens));
        }
    }
    fail(errc::BadConstruction, "unreachable intersection case");
}

Ideal combine_dispatch(const Ideal& I, const Ideal& J, IdealCombine kind, unsigned long n) {
    require(I.ring()->same(J.ring()), errc::DomainMismatch, "combining ideals across rings");
    switch (kind) {
        case IdealCombine::Sum: {
            std::vector<Value> gens = I.gens();
            for (const auto& g : J.gens()) gens.push_back(g);
            return Ideal(I.ring(), std::move(gens));
        }
        case IdealCombine::Product:
            return product_ideal(I, J);
        case IdealCombine::Power: {
            if (n == 0) return Ideal::unit(I.ring());
            Ideal acc = I;
            for (unsigned long k = 1; k < n; ++k) acc = product_ideal(acc, I);
            return acc;
        }
        case IdealCombine::Intersection:
            return intersection_ideal(I, J);
    }
    fail(errc::BadConstruction, "unreachable combine case");
}

}  // namespace

Ideal ideal_combine(const Ideal& I, const Ideal& J, IdealCombine kind, unsigned long power) {
    Ideal r = combine_dispatch(I, J, kind, power);
    r.canonical();
    return r;
}

Ideal ideal_sum(const Ideal& I, const Ideal& J) { return ideal_combine(I, J, IdealCombine::Sum); }
Ideal ideal_product(const Ideal& I, const Ideal& J) {
    return ideal_combine(I, J, IdealCombine::Product);
}
Ideal ideal_power(const Ideal& I, unsigned long n) {
    return ideal_combine(I, I, IdealCombine::Power, n);
}
Ideal ideal_intersection(const Ideal& I, const Ideal& J) {
    return ideal_combine(I, J, IdealCombine::Intersection);
}

bool ideal_equal(const Ideal& I, const Ideal& J) { return I.equals(J); }

bool ideal_membership(const Polynomial& f, const Ideal& I) { return I.contains(f); }

bool radical_membership(const Polynomial& f, const Ideal& I) { return I.radical_contains(f); }

Ideal groebner_basis(const Ideal& I) {
    const CanonForm& c = I.canonical();
    require(c.tag == CanonForm::Tag::GroebnerBasis, errc::UnsupportedCoefficients,
            "groebner_basis requires a polynomial ring over a field");
    if (c.basis.empty()) return Ideal::zero(I.ring());
    return Ideal::of_polys(I.ring(), c.basis);
}

Polynomial normal_form(const Polynomial& f, const Ideal& I) {
    require(f.ring()->same(I.ring()), errc::DomainMismatch, "normal form across rings");
    const CanonForm& c = I.canonical();
    require(c.tag == CanonForm::Tag::GroebnerBasis, errc::UnsupportedCoefficients,
            "normal form requires a polynomial ring over a field");
    return reduce_full(f, c.basis);
}

}  // namespace orc
