// Copyright 2026 the orc authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>

#include "orc/ideal.hpp"

namespace orc {

/// Verdicts for one pair (f, g) in a polynomial extension R -> R[x1..xn].
/// The containment c_fg subseteq c_f c_g is checked whenever a report is
/// assembled; its failure would be a library bug and raises an error.
struct ContentReport {
    Polynomial f, g, fg;
    Ideal c_f, c_g, c_fg;
    Ideal c_product;  // c_f * c_g
    bool gaussian = false;
    std::optional<bool> weak_content;
    std::optional<int> dm_exponent;  // least n with c_f^n c_g = c_f^(n-1) c_fg
    bool unital_applicable = false;
    std::optional<bool> unital_holds;
};

/// The content of f: the ideal of the base ring generated by the
/// coefficients (equal to the Ohm-Rush content for free extensions).
/// content_ideal(0) is the zero ideal.
Ideal content_ideal(const Polynomial& f);

/// Fills f, g, fg, the three content ideals, their product and the gaussian
/// flag; other fields are left unset.
ContentReport is_gaussian_pair(const Polynomial& f, const Polynomial& g);

/// Least n <= bound with c_f^n c_g = c_f^(n-1) c_fg. Throws DMBoundExceeded
/// when no such n exists below the bound; the classical bound deg(g)+1 is
/// the default. The equality is rechecked at n+1 as a monotonicity sanity
/// assertion.
int dm_exponent(const Polynomial& f, const Polynomial& g, int bound);
int default_dm_bound(const Polynomial& g);

/// sqrt(c_fg) = sqrt(c_f c_g), decided by mutual radical membership of
/// generators.
bool is_weak_content_pair(const Polynomial& f, const Polynomial& g);

/// Empty when c_f is not the unit ideal (check not applicable); otherwise
/// whether c_fg = c_g.
std::optional<bool> unital_check(const Polynomial& f, const Polynomial& g);

/// Runs every check (gaussian, weak content, Dedekind-Mertens exponent,
/// unital) on the pair, recording absences where a check does not apply.
ContentReport analyze_pair(const Polynomial& f, const Polynomial& g,
                           std::optional<int> dm_bound = std::nullopt);

/// Content of the image of f in (R/I)[x..], computed two ways and asserted
/// equal: reduce coefficients then take content, versus content then reduce.
/// `reduced_content` is the first representation (an ideal of R containing I).
struct ContentModResult {
    Ideal reduced_content;
    Ideal via_content;
    Ideal modulus;
    bool agree = false;
    std::string str() const { return reduced_content.str() + " mod " + modulus.str(); }
};
ContentModResult content_mod_ideal(const Polynomial& f, const Ideal& I);

struct MultiplicativeSet {
    enum class Kind { ComplementOfPrime, PowersOf, Units };
    Kind kind = Kind::Units;
    std::optional<Ideal> prime;  // ComplementOfPrime
    std::optional<Value> element;  // PowersOf

    static MultiplicativeSet units();
    /// p must be a prime ideal; verified by integer primality for ideals
    /// of Z (the only supported base).
    static MultiplicativeSet complement_of_prime(Ideal p);
    static MultiplicativeSet powers_of(Value w);
    std::string str() const;
};

/// Content of f/1 over Z_W in canonical form: for the complement of (p) the
/// exact p-power of the coefficient gcd, for powers of w the gcd with every
/// factor shared with w stripped. Computed per-coefficient as well and
/// asserted equal to the extension of content_ideal(f).
struct LocalizedContent {
    Ideal ideal;  // ideal of Z holding the canonical local generator
    std::string ring_label;
    std::string str() const { return ideal.str() + " in " + ring_label; }
};
LocalizedContent content_localize(const Polynomial& f, const MultiplicativeSet& W);

/// Componentwise contents over a product base ring, asserted to reassemble
/// to the product content.
std::vector<Ideal> content_product_ring(const Polynomial& f);

/// Certificate that pS is not prime: u v lies in pS while neither u nor v
/// does. The generators of p are pushed into u's ring along the coefficient
/// inclusion. Throws NotAWitness when a membership check breaks the pattern.
struct WitnessVerdict {
    bool confirmed = false;
    bool uv_in = false, u_in = false, v_in = false;
    std::string detail;
};
WitnessVerdict nonprime_extension_witness(const Ideal& p, const Polynomial& u,
                                          const Polynomial& v);

/// Element of A[t..] localized at the nonzero polynomials of K[t..] (K the
/// base field of A), given as numerator over A and denominator with
/// coefficients in K. Its content over A is the content of the numerator;
/// the denominator has unit content and cannot change it.
struct PolyFraction {
    Polynomial num;
    Polynomial den;
};
Ideal pure_transcendental_content(const PolyFraction& f);

}  // namespace orc
