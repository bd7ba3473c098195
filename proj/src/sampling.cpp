// Copyright 2026 the orc authors
// SPDX-License-Identifier: Apache-2.0

#include "orc/sampling.hpp"

namespace orc {

Value sample_value(const DomainPtr& domain, Rng& rng, const SampleOptions& opt) {
    switch (domain->kind()) {
        case DomainKind::Integers:
            return domain->from_int(static_cast<long>(rng.range(-opt.int_bound, opt.int_bound)));
        case DomainKind::Rationals: {
            BigRat q(static_cast<long>(rng.range(-opt.int_bound, opt.int_bound)),
                     static_cast<long>(rng.range(1, opt.den_bound)));
            q.canonicalize();
            return Value(domain, q);
        }
        case DomainKind::PrimeField: {
            unsigned long p = domain->modulus().get_ui();
            return domain->from_int(static_cast<long>(rng.below(p)));
        }
        case DomainKind::PolyRing: {
            Polynomial p = sample_polynomial(domain, rng, opt);
            return Value(domain, std::make_shared<const Polynomial>(std::move(p)));
        }
        case DomainKind::Quotient:
            return coerce(sample_value(domain->ambient(), rng, opt), domain);
        case DomainKind::Fraction: {
            Value n = sample_value(domain->base(), rng, opt);
            Value d = sample_nonzero(domain->base(), rng, opt);
            // Route through division so unit denominators normalize away.
            return coerce(n, domain).div(coerce(d, domain));
        }
        case DomainKind::Product: {
            std::vector<Value> comps;
            for (const auto& f : domain->factors()) comps.push_back(sample_value(f, rng, opt));
            return Value(domain, std::move(comps));
        }
    }
    fail(errc::BadConstruction, "unreachable sample case");
}

Value sample_nonzero(const DomainPtr& domain, Rng& rng, const SampleOptions& opt) {
    for (int tries = 0; tries < 32; ++tries) {
        Value v = sample_value(domain, rng, opt);
        if (!v.is_zero()) return v;
    }
    return domain->one();
}

Polynomial sample_polynomial(const DomainPtr& ring, Rng& rng, const SampleOptions& opt) {
    Polynomial p = Polynomial::zero(ring);
    int nterms = static_cast<int>(rng.below(static_cast<std::uint64_t>(opt.max_terms + 1)));
    for (int t = 0; t < nterms; ++t) {
        Monomial m = Monomial::one(ring->nvars());
        for (std::size_t i = 0; i < ring->nvars(); ++i)
            m.e[i] = static_cast<int>(rng.below(static_cast<std::uint64_t>(opt.max_degree + 1)));
        p = p.add(Polynomial::term(ring, m, sample_value(ring->coeff(), rng, opt)));
    }
    return p;
}

Polynomial sample_nonzero_polynomial(const DomainPtr& ring, Rng& rng, const SampleOptions& opt) {
    for (int tries = 0; tries < 32; ++tries) {
        Polynomial p = sample_polynomial(ring, rng, opt);
        if (!p.is_zero()) return p;
    }
    return Polynomial::constant(ring, ring->coeff()->one());
}

Ideal sample_ideal(const DomainPtr& domain, Rng& rng, const SampleOptions& opt) {
    std::size_t n = 1 + rng.below(static_cast<std::uint64_t>(opt.max_gens));
    std::vector<Value> gens;
    for (std::size_t i = 0; i < n; ++i) gens.push_back(sample_value(domain, rng, opt));
    return Ideal(domain, std::move(gens));
}

}  // namespace orc
