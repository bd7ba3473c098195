// Copyright 2026 the orc authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "orc/valuation.hpp"

namespace orc {

/// The prime spectrum of a finite-rank valuation ring: a chain of rank+1
/// primes indexed by height, prime i corresponding to the convex subgroup of
/// corank i (index 0 is the zero ideal, index rank the maximal ideal).
struct PrimeChainPoset {
    OrderedGroup group;
    int rank = 0;
    int size() const { return rank + 1; }
    int height(int prime_index) const;
    std::string str() const;
};

PrimeChainPoset spec_chain(int rank);
PrimeChainPoset spec_chain_of(const OrderedGroup& group);

/// Induced map Spec S -> Spec V through phi's action on convex subgroups;
/// for finite chains, homeomorphism = order isomorphism both ways.
struct SpecMapReport {
    bool is_bijective = false;
    bool is_homeomorphism = false;
    std::vector<int> extended_primes;  // index map Spec V -> Spec S
};
SpecMapReport spec_map_check(const ValuationExtension& e);

struct HeightReport {
    int ht_p = 0;
    int ht_ps = 0;
    bool equal = false;
};
HeightReport height_check(const ValuationExtension& e, int prime_index);

/// dim S_P = dim V_p + dim S_P/(p S_P); fibers are zero-dimensional in the
/// value-cut model because every prime is extended.
struct DimFormulaReport {
    int lhs = 0;
    int rhs = 0;
    bool equal = false;
};
DimFormulaReport dim_formula_check(const ValuationExtension& e, int prime_index);

/// dim S <= sum of t_i with t_i = max{1, fiber dimension at p_i} = 1 here,
/// so the bound is rank+1.
struct DimBoundReport {
    int bound = 0;
    int dim_s = 0;
    bool holds = false;
};
DimBoundReport dimension_bound(const ValuationExtension& e);

/// Intersection model R = cap V_i inside S = cap W_i for pairwise
/// independent branches, each a content extension. Elements are modeled as
/// vectors of branch values; independence is a recorded modeling assumption,
/// not verified (it would need the ambient field).
struct SemilocalModel {
    std::vector<ValuationExtension> branches;
    bool independence_assumed = true;

    /// One shared zero prime plus the disjoint nonzero chains of every
    /// branch.
    int spec_r_size() const;
    int spec_s_size() const;
};

SemilocalModel semilocal_build(std::vector<ValuationExtension> branches);

/// Componentwise content cuts of a value vector; verifies g in orc(g) S and
/// the per-branch maximal-ideal extension along the way.
std::vector<ValueCutIdeal> semilocal_content_vector(const std::vector<GroupElem>& g,
                                                    const SemilocalModel& m);

}  // namespace orc
