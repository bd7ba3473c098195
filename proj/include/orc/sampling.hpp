// Copyright 2026 the orc authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "orc/ideal.hpp"
#include "orc/rng.hpp"

namespace orc {

/// Options bounding the size of sampled objects; defaults are desk scale.
struct SampleOptions {
    int int_bound = 50;        // |integer| bound
    int den_bound = 12;        // rational denominator bound
    int max_terms = 3;         // polynomial terms
    int max_degree = 3;        // per-variable exponent bound
    int max_gens = 3;          // ideal generators
};

/// Random element of any supported domain (componentwise through the tower).
Value sample_value(const DomainPtr& domain, Rng& rng, const SampleOptions& opt = {});

/// Random nonzero element; retries and falls back to 1.
Value sample_nonzero(const DomainPtr& domain, Rng& rng, const SampleOptions& opt = {});

/// Random sparse polynomial over a PolyRing domain.
Polynomial sample_polynomial(const DomainPtr& ring, Rng& rng, const SampleOptions& opt = {});

/// Random nonzero sparse polynomial.
Polynomial sample_nonzero_polynomial(const DomainPtr& ring, Rng& rng,
                                     const SampleOptions& opt = {});

/// Random ideal of a supported ring.
Ideal sample_ideal(const DomainPtr& domain, Rng& rng, const SampleOptions& opt = {});

}  // namespace orc
