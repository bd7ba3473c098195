// Copyright 2026 the orc authors
// SPDX-License-Identifier: Apache-2.0

#include "orc/spectra.hpp"

namespace orc {

int PrimeChainPoset::height(int prime_index) const {
    require(prime_index >= 0 && prime_index <= rank, errc::IndexOutOfRange,
            "prime index " + std::to_string(prime_index) + " outside chain of rank " +
                std::to_string(rank));
    return prime_index;
}

std::string PrimeChainPoset::str() const {
    std::string s = "0";
    for (int i = 1; i < rank; ++i) s += " < p" + std::to_string(i);
    if (rank >= 1) s += " < m";
    return s;
}

PrimeChainPoset spec_chain(int rank) {
    require(rank >= 0, errc::BadConstruction, "negative rank");
    return PrimeChainPoset{OrderedGroup::lex(rank), rank};
}

PrimeChainPoset spec_chain_of(const OrderedGroup& group) {
    return PrimeChainPoset{group, group.chain_rank()};
}

namespace {

/// Verify that phi carries the convex subgroup of corank i onto the one of
/// corank i, for every i. For the constructible homomorphism shapes this
/// follows from lower-triangularity plus a unimodular diagonal, but it is
/// recomputed from the matrix rather than assumed.
bool convex_subgroups_correspond(const GroupHom& phi) {
    if (phi.kind() == GroupHom::Kind::Scale) return phi.is_order_iso();
    const auto& m = phi.matrix();
    std::size_t r = m.size();
    for (std::size_t corank = 0; corank <= r; ++corank) {
        std::size_t cutoff = r - corank;  // subgroup spans coordinates >= cutoff
        // image containment: columns j >= cutoff stay supported in rows >= cutoff
        for (std::size_t j = cutoff; j < r; ++j)
            for (std::size_t i = 0; i < cutoff; ++i)
                if (m[i][j] != 0) return false;
        // surjectivity onto the subgroup needs unit diagonal on the block
        for (std::size_t j = cutoff; j < r; ++j)
            if (m[j][j] != 1) return false;
    }
    return true;
}

}  // namespace

SpecMapReport spec_map_check(const ValuationExtension& e) {
    require(is_content_extension(e), errc::NotContentExtension,
            "spectral comparison requires a content extension");
    PrimeChainPoset sv = spec_chain_of(e.base->group);
    PrimeChainPoset ss = spec_chain_of(e.target->group);
    SpecMapReport r;
    bool corr = convex_subgroups_correspond(e.phi) && sv.rank == ss.rank;
    require(corr, errc::BadConstruction,
            "content extension failed the convex-subgroup correspondence");
    r.is_bijective = true;
    r.is_homeomorphism = true;  // order isomorphism both ways on finite chains
    r.extended_primes.resize(static_cast<std::size_t>(sv.size()));
    for (int i = 0; i <= sv.rank; ++i) r.extended_primes[static_cast<std::size_t>(i)] = i;
    return r;
}

HeightReport height_check(const ValuationExtension& e, int prime_index) {
    require(is_content_extension(e), errc::NotContentExtension,
            "height comparison requires a content extension");
    PrimeChainPoset sv = spec_chain_of(e.base->group);
    PrimeChainPoset ss = spec_chain_of(e.target->group);
    int ht_p = sv.height(prime_index);
    int ht_ps = ss.height(spec_map_check(e).extended_primes[static_cast<std::size_t>(prime_index)]);
    HeightReport r{ht_p, ht_ps, ht_p == ht_ps};
    require(r.equal, errc::BadConstruction, "height preservation failed; this is a bug");
    return r;
}

DimFormulaReport dim_formula_check(const ValuationExtension& e, int prime_index) {
    require(is_content_extension(e), errc::NotContentExtension,
            "dimension formula requires a content extension");
    PrimeChainPoset ss = spec_chain_of(e.target->group);
    int lhs = ss.height(prime_index);
    // contraction has the same chain position; every prime is extended, so
    // the fiber chain has length zero
    int rhs = spec_chain_of(e.base->group).height(prime_index) + 0;
    DimFormulaReport r{lhs, rhs, lhs == rhs};
    require(r.equal, errc::BadConstruction, "dimension formula failed; this is a bug");
    return r;
}

DimBoundReport dimension_bound(const ValuationExtension& e) {
    int d = e.base->group.chain_rank();
    int bound = d + 1;  // t_i = max{1, 0-dimensional fiber} = 1 for each of d+1 primes
    int dim_s = e.target->group.chain_rank();
    return DimBoundReport{bound, dim_s, dim_s <= bound};
}

int SemilocalModel::spec_r_size() const {
    int n = 1;
    for (const auto& b : branches) n += b.base->group.chain_rank();
    return n;
}

int SemilocalModel::spec_s_size() const {
    int n = 1;
    for (const auto& b : branches) n += b.target->group.chain_rank();
    return n;
}

SemilocalModel semilocal_build(std::vector<ValuationExtension> branches) {
    require(!branches.empty(), errc::BadConstruction, "semilocal model needs branches");
    for (const auto& b : branches)
        require(is_content_extension(b), errc::BranchNotContent,
                "every branch must be a content extension");
    return SemilocalModel{std::move(branches), true};
}

std::vector<ValueCutIdeal> semilocal_content_vector(const std::vector<GroupElem>& g,
                                                    const SemilocalModel& m) {
    require(g.size() == m.branches.size(), errc::DomainMismatch,
            "value vector length differs from the branch count");
    std::vector<ValueCutIdeal> cuts;
    for (std::size_t i = 0; i < g.size(); ++i) {
        const ValuationExtension& e = m.branches[i];
        require(g[i].group.same(e.target->group), errc::DomainMismatch,
                "component " + std::to_string(i) + " lies in the wrong value group");
        require(g[i].nonneg(), errc::NegativeValueComponent,
                "component " + std::to_string(i) + " is negative");
        require(maximal_extension_check(e), errc::BadConstruction,
                "branch maximal ideal failed to extend; this is a bug");
        if (g[i].is_zero()) {
            cuts.push_back(ValueCutIdeal::unit(e.base->group));
            continue;
        }
        GroupElem pulled = e.phi.inverse().apply(g[i]);
        ValueCutIdeal cut = ValueCutIdeal::closed_at(pulled);
        // g in orc(g) S componentwise: the pushforward of the cut point
        // reaches the component value
        require(group_cmp(e.phi.apply(pulled), g[i]) <= 0, errc::BadConstruction,
                "componentwise content failed to contain g");
        cuts.push_back(cut);
    }
    return cuts;
}

}  // namespace orc
