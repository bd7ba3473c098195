// Copyright 2026 the orc authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "orc/spectra.hpp"

using namespace orc;

namespace {

DomainPtr lres() { return Domain::fraction_field(Domain::poly_ring(Domain::rationals(), {"u"})); }

ValuationExtension identity_ext(int rank) {
    OrderedGroup g = OrderedGroup::lex(rank);
    return make_extension(make_val_spec(g, Domain::rationals(), "V"),
                          make_val_spec(g, lres(), "S"), GroupHom::identity(g));
}

ValuationExtension triangular_ext(int rank, Rng& rng) {
    OrderedGroup g = OrderedGroup::lex(rank);
    std::size_t r = static_cast<std::size_t>(rank);
    std::vector<std::vector<BigInt>> m(r, std::vector<BigInt>(r));
    for (std::size_t i = 0; i < r; ++i) {
        m[i][i] = 1;
        for (std::size_t j = 0; j < i; ++j) m[i][j] = static_cast<long>(rng.range(-9, 9));
    }
    return make_extension(make_val_spec(g, Domain::rationals(), "V"),
                          make_val_spec(g, lres(), "S"),
                          GroupHom::lattice_map(g, g, std::move(m)));
}

ValuationExtension nth_root_ext(long n) {
    OrderedGroup base = OrderedGroup::rational(1);
    OrderedGroup tgt = OrderedGroup::rational(n);
    return make_extension(make_val_spec(base, Domain::rationals(), "k[[x]]"),
                          make_val_spec(tgt, Domain::rationals(), "k[[x^(1/n)]]"),
                          GroupHom::scaling(base, tgt, 1, 1));
}

}  // namespace

TEST_CASE("prime chains") {
    CHECK(spec_chain(0).size() == 1);
    CHECK(spec_chain(0).height(0) == 0);
    CHECK(spec_chain(2).size() == 3);
    CHECK(spec_chain(1).str() == "0 < m");
    CHECK(spec_chain(3).str() == "0 < p1 < p2 < m");
    CHECK_THROWS_WITH_AS(spec_chain(2).height(3), doctest::Contains("IndexOutOfRange"), Error);
    CHECK(spec_chain_of(OrderedGroup::rational(5)).size() == 2);
}

TEST_CASE("spectral maps of content extensions are homeomorphisms") {
    SpecMapReport r = spec_map_check(identity_ext(2));
    CHECK(r.is_bijective);
    CHECK(r.is_homeomorphism);
    CHECK(r.extended_primes == std::vector<int>{0, 1, 2});

    // rank-1 with a larger residue field
    OrderedGroup g1 = OrderedGroup::rational(1);
    ValuationExtension res = make_extension(make_val_spec(g1, Domain::rationals(), "K[[x]]"),
                                            make_val_spec(g1, lres(), "L[[x]]"),
                                            GroupHom::scaling(g1, g1, 1, 1));
    CHECK(spec_map_check(res).is_homeomorphism);

    CHECK_THROWS_WITH_AS(spec_map_check(nth_root_ext(2)),
                         doctest::Contains("NotContentExtension"), Error);
}

TEST_CASE("heights are preserved at every prime") {
    ValuationExtension e = identity_ext(2);
    HeightReport mid = height_check(e, 1);
    CHECK(mid.ht_p == 1);
    CHECK(mid.ht_ps == 1);
    CHECK(mid.equal);
    CHECK(height_check(e, 0).equal);
    CHECK(height_check(e, 2).ht_ps == 2);
    CHECK_THROWS_WITH_AS(height_check(e, 9), doctest::Contains("IndexOutOfRange"), Error);
}

TEST_CASE("dimension formula with zero-dimensional fibers") {
    ValuationExtension e2 = identity_ext(2);
    DimFormulaReport top = dim_formula_check(e2, 2);
    CHECK(top.lhs == 2);
    CHECK(top.rhs == 2);
    CHECK(top.equal);
    CHECK(dim_formula_check(e2, 0).equal);
    ValuationExtension e3 = identity_ext(3);
    DimFormulaReport mid = dim_formula_check(e3, 2);
    CHECK(mid.lhs == 2);
    CHECK(mid.equal);
}

TEST_CASE("dimension bound rank+1") {
    DimBoundReport r2 = dimension_bound(identity_ext(2));
    CHECK(r2.bound == 3);
    CHECK(r2.dim_s == 2);
    CHECK(r2.holds);

    OrderedGroup g0 = OrderedGroup::lex(0);
    ValuationExtension rank0{make_val_spec(g0, Domain::rationals(), "K"),
                             make_val_spec(g0, Domain::rationals(), "K"),
                             GroupHom::lattice_map(g0, g0, {})};
    DimBoundReport r0 = dimension_bound(rank0);
    CHECK(r0.bound == 1);
    CHECK(r0.dim_s == 0);
    CHECK(r0.holds);

    DimBoundReport r5 = dimension_bound(identity_ext(5));
    CHECK(r5.bound == 6);
    CHECK(r5.dim_s == 5);
    CHECK(r5.holds);

    // the bound also covers the non-content nth-root inclusion
    CHECK(dimension_bound(nth_root_ext(3)).holds);
}

TEST_CASE("ranks 1-6, identity and triangular automorphisms") {
    Rng rng(0);
    for (int rank = 1; rank <= 6; ++rank) {
        for (int variant = 0; variant < 4; ++variant) {
            ValuationExtension e =
                variant == 0 ? identity_ext(rank) : triangular_ext(rank, rng);
            SpecMapReport sm = spec_map_check(e);
            CHECK(sm.is_bijective);
            CHECK(sm.is_homeomorphism);
            for (int i = 0; i <= rank; ++i) {
                CHECK(height_check(e, i).equal);
                CHECK(dim_formula_check(e, i).equal);
            }
            DimBoundReport db = dimension_bound(e);
            CHECK(db.bound == rank + 1);
            CHECK(db.holds);
        }
    }
}

TEST_CASE("semilocal intersection model") {
    Rng rng(1);
    ValuationExtension b1 = identity_ext(2);
    ValuationExtension b2 = triangular_ext(2, rng);
    SemilocalModel m = semilocal_build({b1, b2});
    CHECK(m.independence_assumed);
    CHECK(m.spec_r_size() == 5);  // shared zero + two chains of two
    CHECK(m.spec_s_size() == 5);

    SemilocalModel one = semilocal_build({b1});
    CHECK(one.spec_r_size() == spec_chain(2).size());

    OrderedGroup g1 = OrderedGroup::rational(1);
    auto dvr = [&] {
        return make_extension(make_val_spec(g1, Domain::rationals(), "V"),
                              make_val_spec(g1, lres(), "W"), GroupHom::scaling(g1, g1, 1, 1));
    };
    CHECK(semilocal_build({dvr(), dvr()}).spec_r_size() == 3);

    CHECK_THROWS_WITH_AS(semilocal_build({nth_root_ext(2)}),
                         doctest::Contains("BranchNotContent"), Error);
}

TEST_CASE("semilocal content vectors") {
    ValuationExtension b1 = identity_ext(2);
    ValuationExtension b2 = identity_ext(2);
    SemilocalModel m = semilocal_build({b1, b2});
    OrderedGroup g = OrderedGroup::lex(2);

    std::vector<GroupElem> v1 = {parse_group_elem("(1,0)", g), parse_group_elem("(0,0)", g)};
    auto cuts = semilocal_content_vector(v1, m);
    CHECK(cuts[0].str() == "(>= (1,0))");
    CHECK(cuts[1].str() == "(1)");

    std::vector<GroupElem> zero = {GroupElem::zero(g), GroupElem::zero(g)};
    for (const auto& c : semilocal_content_vector(zero, m)) CHECK(c.str() == "(1)");

    std::vector<GroupElem> v2 = {parse_group_elem("(0,1)", g), parse_group_elem("(2,0)", g)};
    auto cuts2 = semilocal_content_vector(v2, m);
    CHECK(cuts2[0].str() == "(>= (0,1))");
    CHECK(cuts2[1].str() == "(>= (2,0))");

    std::vector<GroupElem> bad = {parse_group_elem("(-1,0)", g), GroupElem::zero(g)};
    CHECK_THROWS_WITH_AS(semilocal_content_vector(bad, m),
                         doctest::Contains("NegativeValueComponent"), Error);
}

TEST_CASE("semilocal components match the single-branch content") {
    Rng rng(2);
    ValuationExtension b1 = triangular_ext(2, rng);
    ValuationExtension b2 = triangular_ext(2, rng);
    SemilocalModel m = semilocal_build({b1, b2});
    for (int i = 0; i < 200; ++i) {
        GroupElem x = sample_group_elem(OrderedGroup::lex(2), rng, 6);
        GroupElem y = sample_group_elem(OrderedGroup::lex(2), rng, 6);
        if (!x.nonneg()) x = group_neg(x);
        if (!y.nonneg()) y = group_neg(y);
        auto cuts = semilocal_content_vector({x, y}, m);
        // localizing at branch i recovers branch i's content behavior
        auto check_branch = [](const ValuationExtension& e, const GroupElem& v,
                               const ValueCutIdeal& cut) {
            if (v.is_zero()) return cut.kind() == ValueCutIdeal::Kind::Unit;
            return cut.equals(ValueCutIdeal::closed_at(e.phi.inverse().apply(v)));
        };
        CHECK(check_branch(b1, x, cuts[0]));
        CHECK(check_branch(b2, y, cuts[1]));
    }
}
