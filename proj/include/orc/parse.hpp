// Copyright 2026 the orc authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include "orc/ideal.hpp"

namespace orc {

/// Parse the deterministic polynomial grammar: `+ - * / ^ ( )`, integer
/// literals, identifiers. `*` is optional (juxtaposition multiplies);
/// identifiers resolve first against the ring's variables, then recursively
/// through the coefficient tower (quotient ambients, fraction bases, nested
/// polynomial rings). Throws ParseError with a position on bad input.
Polynomial parse_polynomial(const std::string& text, const DomainPtr& ring);

/// Parse a scalar of an arbitrary supported domain with the same grammar.
Value parse_value(const std::string& text, const DomainPtr& domain);

/// Parse `( g1, g2, ... )` (outer parentheses optional) into an ideal.
Ideal parse_ideal(const std::string& text, const DomainPtr& domain);

}  // namespace orc
