// Copyright 2026 the orc authors
// SPDX-License-Identifier: Apache-2.0

#include <map>

#include "orc/ideal.hpp"

namespace orc {

namespace {

void check_field_coefficients(const DomainPtr& ring) {
    require(ring->kind() == DomainKind::PolyRing, errc::UnsupportedCoefficients,
            "Groebner arithmetic needs a polynomial ring, got " + ring->describe());
    require(ring->coeff()->is_field(), errc::UnsupportedCoefficients,
            "Groebner arithmetic needs field coefficients, got " +
                ring->coeff()->describe());
}

Polynomial make_monic(const Polynomial& f) {
    if (f.is_zero()) return f;
    if (f.leading_coeff().is_one()) return f;
    return f.divide_coeffs(f.leading_coeff());
}

/// Working normalization for basis elements. Monic scaling over Q spreads
/// the worst coefficient of a fat S-polynomial into every term and the
/// fractions compound through later reductions; scaling to primitive
/// integer form instead keeps intermediate coefficients small. The reduced
/// basis is monicized at the very end for canonical uniqueness.
Polynomial normalize_working(const Polynomial& f) {
    if (f.is_zero()) return f;
    if (f.ring()->coeff()->kind() != DomainKind::Rationals) return make_monic(f);
    BigInt den_lcm = 1;
    for (const auto& [m, c] : f.terms())
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.as_rat().get_den().get_mpz_t());
    BigInt num_gcd = 0;
    for (const auto& [m, c] : f.terms()) {
        BigInt n = c.as_rat().get_num() * (den_lcm / c.as_rat().get_den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    }
    BigRat scale(den_lcm, num_gcd);
    scale.canonicalize();
    if (f.leading_coeff().as_rat() < 0) scale = -scale;
    return f.scale(Value(f.ring()->coeff(), scale));
}

/// S-polynomial, cross-scaled by leading coefficients so no division is
/// needed.
Polynomial s_poly(const Polynomial& f, const Polynomial& g) {
    Monomial l = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
    Polynomial a = f.mul_term(f.leading_monomial().quotient_into(l), g.leading_coeff());
    Polynomial b = g.mul_term(g.leading_monomial().quotient_into(l), f.leading_coeff());
    return a.sub(b);
}

/// Rescale both term maps to primitive integer form over Q (a no-op for
/// other coefficient fields). Only valid where the caller may pick its own
/// scaling.
void strip_content(Polynomial::TermMap& work, Polynomial::TermMap& rem, const DomainPtr& coeff) {
    if (coeff->kind() != DomainKind::Rationals) return;
    BigInt den_lcm = 1, num_gcd = 0;
    for (const auto* m : {&work, &rem}) {
        for (const auto& [mono, c] : *m)
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
                    c.as_rat().get_den().get_mpz_t());
    }
    for (const auto* m : {&work, &rem}) {
        for (const auto& [mono, c] : *m) {
            BigInt n = c.as_rat().get_num() * (den_lcm / c.as_rat().get_den());
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
        }
    }
    if (num_gcd == 0) return;
    BigRat scale(den_lcm, num_gcd);
    scale.canonicalize();
    if (scale == 1) return;
    Value s(coeff, scale);
    for (auto* m : {&work, &rem})
        for (auto& [mono, c] : *m) c = c.mul(s);
}

enum class ReduceMode { Exact, AnyScale };

Polynomial reduce_impl(const Polynomial& f, const std::vector<Polynomial>& basis,
                       ReduceMode mode) {
    Polynomial::TermMap work = f.terms();
    Polynomial::TermMap rem(TermOrder{f.ring()->order()});
    const DomainPtr& coeff = f.ring()->coeff();
    int steps = 0;
    while (!work.empty()) {
        auto lead = work.begin();
        const Monomial lm = lead->first;
        const Polynomial* reducer = nullptr;
        for (const auto& g : basis) {
            if (!g.is_zero() && g.leading_monomial().divides(lm)) {
                reducer = &g;
                break;
            }
        }
        if (reducer) {
            Value c = lead->second.div(reducer->leading_coeff());
            Monomial shift = reducer->leading_monomial().quotient_into(lm);
            for (const auto& [m2, c2] : reducer->terms())
                Polynomial::merge_term(work, m2.times(shift), c2.mul(c).neg());
            if (mode == ReduceMode::AnyScale && ++steps % 8 == 0)
                strip_content(work, rem, coeff);
        } else {
            rem.emplace(lm, std::move(lead->second));
            work.erase(lead);
        }
    }
    return Polynomial::from_term_map(f.ring(), std::move(rem));
}

}  // namespace

Polynomial reduce_full(const Polynomial& f, const std::vector<Polynomial>& basis) {
    return reduce_impl(f, basis, ReduceMode::Exact);
}

/// Buchberger with the coprime and chain criteria, processing pairs by
/// ascending lcm; adequate for desk-scale inputs.
std::vector<Polynomial> reduced_groebner(const std::vector<Polynomial>& gens) {
    std::vector<Polynomial> basis;
    if (gens.empty()) return basis;
    const DomainPtr ring = gens.front().ring();
    check_field_coefficients(ring);

    struct PairKey {
        int degree;
        Monomial lcm;
    };
    struct PairKeyLess {
        const Domain* ring;
        bool operator()(const PairKey& a, const PairKey& b) const {
            if (a.degree != b.degree) return a.degree < b.degree;
            return ring->mono_compare(a.lcm, b.lcm) < 0;
        }
    };
    std::multimap<PairKey, std::pair<std::size_t, std::size_t>, PairKeyLess> pending{
        PairKeyLess{ring.get()}};
    // pairs already removed from the queue (processed or discarded by a
    // criterion); needed for the chain criterion
    std::vector<std::vector<bool>> done;

    auto add_to_basis = [&](const Polynomial& f, bool presimplified) {
        Polynomial g = normalize_working(
            presimplified ? f : reduce_impl(f, basis, ReduceMode::AnyScale));
        if (g.is_zero()) return;
        std::size_t idx = basis.size();
        basis.push_back(std::move(g));
        done.emplace_back(idx + 1, false);
        for (std::size_t i = 0; i < idx; ++i) {
            Monomial l = Monomial::lcm(basis[i].leading_monomial(),
                                       basis[idx].leading_monomial());
            pending.emplace(PairKey{l.degree(), l}, std::make_pair(i, idx));
        }
    };

    for (const auto& f : gens) add_to_basis(f, false);

    while (!pending.empty()) {
        auto it = pending.begin();
        auto [i, j] = it->second;
        Monomial lcm_ij = it->first.lcm;
        pending.erase(it);
        done[j][i] = true;
        if (basis[i].leading_monomial().coprime_with(basis[j].leading_monomial())) continue;
        // chain criterion: k with LM(k) | lcm(i,j) and both pairs (i,k),
        // (j,k) already handled makes this pair redundant
        bool redundant = false;
        for (std::size_t k = 0; k < basis.size() && !redundant; ++k) {
            if (k == i || k == j) continue;
            if (!basis[k].leading_monomial().divides(lcm_ij)) continue;
            bool ik = done[std::max(i, k)][std::min(i, k)];
            bool jk = done[std::max(j, k)][std::min(j, k)];
            if (ik && jk) redundant = true;
        }
        if (redundant) continue;
        Polynomial s = reduce_impl(s_poly(basis[i], basis[j]), basis, ReduceMode::AnyScale);
        if (!s.is_zero()) add_to_basis(s, true);
    }

    // Minimalize: drop any element whose leading monomial another one divides.
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (i == j) continue;
            const Monomial& mi = basis[i].leading_monomial();
            const Monomial& mj = basis[j].leading_monomial();
            if (mj.divides(mi) && (!mi.divides(mj) || j < i)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) minimal.push_back(basis[i]);
    }

    // Inter-reduce, then monicize for the unique reduced basis.
    std::vector<Polynomial> reduced = minimal;
    for (std::size_t i = 0; i < reduced.size(); ++i) {
        std::vector<Polynomial> others;
        for (std::size_t j = 0; j < reduced.size(); ++j)
            if (j != i) others.push_back(reduced[j]);
        reduced[i] = normalize_working(reduce_impl(reduced[i], others, ReduceMode::AnyScale));
    }
    std::erase_if(reduced, [](const Polynomial& p) { return p.is_zero(); });
    for (auto& p : reduced) p = make_monic(p);

    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
        return ring->mono_compare(a.leading_monomial(), b.leading_monomial()) < 0;
    });
    return reduced;
}

}  // namespace orc
