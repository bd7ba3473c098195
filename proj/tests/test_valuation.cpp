// Copyright 2026 the orc authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "orc/parse.hpp"
#include "orc/valuation.hpp"

using namespace orc;

namespace {

ValSpecPtr discrete_spec(const std::string& label = "K[[x]]",
                         DomainPtr residue = Domain::rationals()) {
    return make_val_spec(OrderedGroup::lex(1), std::move(residue), label);
}

ValSpecPtr nth_root_spec(long n) {
    return make_val_spec(OrderedGroup::rational(n), Domain::rationals(),
                         "k[[x^(1/" + std::to_string(n) + ")]]");
}

DomainPtr big_residue() { return Domain::fraction_field(Domain::poly_ring(Domain::rationals(), {"u"})); }

/// K[[x]] inside L[[x]]: identical value groups, larger residue field.
ValuationExtension residue_extension() {
    ValSpecPtr base = make_val_spec(OrderedGroup::rational(1), Domain::rationals(), "K[[x]]");
    ValSpecPtr target = make_val_spec(OrderedGroup::rational(1), big_residue(), "L[[x]]");
    return make_extension(base, target, GroupHom::scaling(base->group, target->group, 1, 1));
}

/// k[[x]] inside k[[x^(1/n)]]: index-n value-group inclusion.
ValuationExtension nth_root_extension(long n) {
    ValSpecPtr base = make_val_spec(OrderedGroup::rational(1), Domain::rationals(), "k[[x]]");
    ValSpecPtr target = nth_root_spec(n);
    return make_extension(base, target, GroupHom::scaling(base->group, target->group, 1, 1));
}

ValuationExtension lex_identity_extension(int rank) {
    OrderedGroup g = OrderedGroup::lex(rank);
    ValSpecPtr base = make_val_spec(g, Domain::rationals(), "V");
    ValSpecPtr target = make_val_spec(g, big_residue(), "S");
    return make_extension(base, target, GroupHom::identity(g));
}

}  // namespace

TEST_CASE("group element ordering and printing") {
    OrderedGroup g2 = OrderedGroup::lex(2);
    GroupElem a = parse_group_elem("(1,0)", g2);
    GroupElem b = parse_group_elem("(0,7)", g2);
    CHECK(group_cmp(a, b) > 0);  // first nonzero coordinate decides
    CHECK(group_add(a, b).str() == "(1,7)");
    CHECK(GroupElem::min_positive(g2).str() == "(0,1)");

    OrderedGroup half = OrderedGroup::rational(2);
    GroupElem h = parse_group_elem("1/2", half);
    CHECK(h.str() == "1/2");
    CHECK(group_add(h, h).str() == "1");
    CHECK_THROWS_WITH_AS(parse_group_elem("1/3", half), doctest::Contains("lattice"), Error);
    CHECK(group_cmp(h, GroupElem::zero(half)) > 0);
}

TEST_CASE("homomorphism construction is structurally restricted") {
    OrderedGroup g2 = OrderedGroup::lex(2);
    CHECK_THROWS_WITH_AS(GroupHom::lattice_map(g2, g2, {{1, 5}, {0, 1}}),
                         doctest::Contains("lower-triangular"), Error);
    CHECK_THROWS_WITH_AS(GroupHom::lattice_map(g2, g2, {{-1, 0}, {0, 1}}),
                         doctest::Contains("positive diagonal"), Error);
    CHECK_THROWS_WITH_AS(
        GroupHom::scaling(OrderedGroup::rational(2), OrderedGroup::rational(3), 1, 1),
        doctest::Contains("does not map"), Error);

    GroupHom tri = GroupHom::lattice_map(g2, g2, {{1, 0}, {3, 1}});
    CHECK(tri.is_order_iso());
    GroupHom scaled = GroupHom::lattice_map(g2, g2, {{2, 0}, {0, 1}});
    CHECK_FALSE(scaled.is_order_iso());
}

TEST_CASE("order isomorphism detection") {
    CHECK(hom_is_order_iso(GroupHom::identity(OrderedGroup::lex(2))));
    // Z -> (1/2)Z inclusion: multiplier 1, lattices differ
    GroupHom incl = GroupHom::scaling(OrderedGroup::rational(1), OrderedGroup::rational(2), 1, 1);
    CHECK_FALSE(hom_is_order_iso(incl));
    GroupHom tri = GroupHom::lattice_map(OrderedGroup::lex(2), OrderedGroup::lex(2),
                                         {{1, 0}, {3, 1}});
    CHECK(hom_is_order_iso(tri));
}

TEST_CASE("hom inverse composes to the identity on sampled elements") {
    Rng rng(0);
    GroupHom tri = GroupHom::lattice_map(OrderedGroup::lex(3), OrderedGroup::lex(3),
                                         {{1, 0, 0}, {-2, 1, 0}, {5, 7, 1}});
    GroupHom inv = tri.inverse();
    for (int i = 0; i < 200; ++i) {
        GroupElem x = sample_group_elem(tri.dom(), rng);
        CHECK(group_cmp(inv.apply(tri.apply(x)), x) == 0);
        CHECK(group_cmp(tri.apply(inv.apply(x)), x) == 0);
    }
}

TEST_CASE("constructible homs preserve order on sampled positive elements") {
    Rng rng(1);
    std::vector<GroupHom> homs = {
        GroupHom::lattice_map(OrderedGroup::lex(2), OrderedGroup::lex(2), {{2, 0}, {-7, 3}}),
        GroupHom::lattice_map(OrderedGroup::lex(3), OrderedGroup::lex(3),
                              {{1, 0, 0}, {4, 2, 0}, {-1, 9, 5}}),
        GroupHom::scaling(OrderedGroup::rational(2), OrderedGroup::rational(6), 5, 3),
    };
    for (const auto& phi : homs) {
        for (int i = 0; i < 1000; ++i) {
            GroupElem x = sample_group_elem(phi.dom(), rng);
            GroupElem y = sample_group_elem(phi.dom(), rng);
            int before = group_cmp(x, y);
            int after = group_cmp(phi.apply(x), phi.apply(y));
            CHECK(((before < 0) == (after < 0)));
            CHECK(((before == 0) == (after == 0)));
        }
    }
}

TEST_CASE("series arithmetic") {
    ValSpecPtr spec = discrete_spec();
    GenSeries one_plus = parse_series("1 + x + O(x^5)", spec);
    GenSeries one_minus = parse_series("1 - x + O(x^5)", spec);
    GenSeries prod = series_mul(one_plus, one_minus);
    CHECK(prod.str() == "1 - x^2 + O(x^5)");

    GenSeries inv = series_invert_unit(parse_series("1 - x + O(x^4)", spec));
    CHECK(inv.str() == "1 + x + x^2 + x^3 + O(x^4)");
    CHECK(series_mul(inv, parse_series("1 - x + O(x^4)", spec)).str() == "1 + O(x^4)");

    ValSpecPtr half = nth_root_spec(2);
    GenSeries root = parse_series("x^(1/2) + O(x^3)", half);
    CHECK(value_of(series_mul(root, root)).str() == "1");

    CHECK_THROWS_WITH_AS(series_invert_unit(parse_series("x + O(x^3)", spec)),
                         doctest::Contains("NotAUnit"), Error);
}

TEST_CASE("inverses with unbounded support are refused, not truncated silently") {
    ValSpecPtr spec2 = make_val_spec(OrderedGroup::lex(2), Domain::rationals(), "V2");
    // 1 - x^(0,1) has inverse sum_k x^(0,k), infinitely many exponents below
    // the cut (1,0).
    GenSeries u = parse_series("1 - x^(0,1) + O(x^(1,0))", spec2);
    CHECK_THROWS_WITH_AS(series_invert_unit(u), doctest::Contains("PrecisionExhausted"), Error);
    // with a cut inside the same archimedean class it terminates
    GenSeries v = parse_series("1 - x^(0,1) + O(x^(0,4))", spec2);
    CHECK(series_invert_unit(v).str() == "1 + x^(0,1) + x^(0,2) + x^(0,3) + O(x^(0,4))");
}

TEST_CASE("series_arith dispatches to the three operations") {
    ValSpecPtr spec = discrete_spec();
    GenSeries a = parse_series("1 + x + O(x^4)", spec);
    GenSeries b = parse_series("1 - x + O(x^4)", spec);
    CHECK(series_arith(a, b, SeriesArith::Add).str() == "2 + O(x^4)");
    CHECK(series_arith(a, b, SeriesArith::Mul).str() == "1 - x^2 + O(x^4)");
    CHECK(series_arith(b, b, SeriesArith::InvertUnit).str() ==
          "1 + x + x^2 + x^3 + O(x^4)");
}

TEST_CASE("printed series parse back to themselves") {
    Rng rng(5);
    std::vector<ValSpecPtr> specs = {discrete_spec(), nth_root_spec(3),
                                     make_val_spec(OrderedGroup::lex(2), Domain::rationals(),
                                                   "V2")};
    for (const auto& spec : specs) {
        GroupElem prec =
            spec->group.kind == OrderedGroup::Kind::RatRank1
                ? GroupElem::of(spec->group, {BigInt(9) * spec->group.denom})
                : (spec->group.rank == 1 ? GroupElem::of(spec->group, {BigInt(9)})
                                         : GroupElem::of(spec->group, {BigInt(2), BigInt(0)}));
        for (int i = 0; i < 40; ++i) {
            GenSeries s = sample_series(spec, prec, rng);
            GenSeries back = parse_series(s.str(), spec);
            CHECK(back.str() == s.str());
        }
    }
}

TEST_CASE("value_of distinguishes zero-so-far from zero") {
    ValSpecPtr spec = discrete_spec();
    GenSeries g = parse_series("3*x^2 + x^5 + O(x^10)", spec);
    CHECK(value_of(g).str() == "2");
    GenSeries zero = parse_series("O(x^10)", spec);
    SeriesValue v = value_of(zero);
    CHECK(v.below_precision);
    CHECK(v.str() == "BelowPrecision(10)");

    ValSpecPtr half = nth_root_spec(2);
    CHECK(value_of(parse_series("x^(1/2) + x + O(x^4)", half)).str() == "1/2");
}

TEST_CASE("valuation axioms on sampled series") {
    ValSpecPtr spec = discrete_spec();
    OrderedGroup g = spec->group;
    GroupElem prec = parse_group_elem("12", g);
    Rng rng(0);
    for (int i = 0; i < 150; ++i) {
        GenSeries a = sample_series(spec, prec, rng);
        GenSeries b = sample_series(spec, prec, rng);
        SeriesValue va = value_of(a);
        SeriesValue vb = value_of(b);
        if (va.below_precision || vb.below_precision) continue;
        SeriesValue vab = value_of(series_mul(a, b));
        CHECK_FALSE(vab.below_precision);
        CHECK(group_cmp(vab.at, group_add(va.at, vb.at)) == 0);
        SeriesValue vsum = value_of(series_add(a, b));
        GroupElem m = group_cmp(va.at, vb.at) <= 0 ? va.at : vb.at;
        CHECK(group_cmp(vsum.below_precision ? series_add(a, b).precision() : vsum.at, m) >= 0);
    }
}

TEST_CASE("content extension criterion") {
    CHECK(is_content_extension(residue_extension()));
    CHECK_FALSE(is_content_extension(nth_root_extension(2)));
    CHECK(is_content_extension(lex_identity_extension(2)));

    ValSpecPtr trivial = make_val_spec(OrderedGroup::lex(0), Domain::rationals(), "K");
    ValuationExtension e{trivial, trivial,
                         GroupHom::lattice_map(OrderedGroup::lex(0), OrderedGroup::lex(0), {})};
    CHECK_THROWS_WITH_AS(is_content_extension(e), doctest::Contains("TrivialValuation"), Error);
}

TEST_CASE("content of a series is the closed cut at its pulled-back value") {
    ValuationExtension e = residue_extension();
    GenSeries g = parse_series("3*x^3 + x^4 + O(x^9)", e.target);
    ValueCutIdeal c = content_of_series(g, e);
    CHECK(c.str() == "(>= 3)");
    CHECK(c.contains_value(value_of(g).at));

    GenSeries unit = parse_series("2 + x + O(x^9)", e.target);
    CHECK(content_of_series(unit, e).str() == "(1)");

    ValuationExtension lex2 = lex_identity_extension(2);
    GenSeries h = parse_series("x^(1,2) + O(x^(2,0))", lex2.target);
    CHECK(content_of_series(h, lex2).str() == "(>= (1,2))");

    CHECK_THROWS_WITH_AS(content_of_series(parse_series("O(x^5)", e.target), e),
                         doctest::Contains("PrecisionExhausted"), Error);
    CHECK_THROWS_WITH_AS(
        content_of_series(parse_series("x + O(x^2)", nth_root_extension(2).target),
                          nth_root_extension(2)),
        doctest::Contains("NotContentExtension"), Error);
}

TEST_CASE("nth-root witnesses certify the non-prime extension") {
    for (long n : {2L, 3L}) {
        ValuationExtension e = nth_root_extension(n);
        NthRootWitness w = noncontent_witness(e);
        CHECK(w.confirmed);
        CHECK(w.n == n);
        CHECK(w.value_g.str() == (n == 2 ? "1/2" : "1/3"));
        CHECK(w.value_gn.str() == "1");
        CHECK(group_cmp(w.value_gn, w.m_cut) >= 0);
        CHECK(group_cmp(w.value_g, w.m_cut) < 0);
    }
    CHECK_THROWS_WITH_AS(noncontent_witness(residue_extension()),
                         doctest::Contains("NoWitnessConstructed"), Error);

    // rank-one lattice defect inside lex groups works the same way
    OrderedGroup z1 = OrderedGroup::lex(1);
    ValSpecPtr b = make_val_spec(z1, Domain::rationals(), "V");
    ValSpecPtr t = make_val_spec(z1, Domain::rationals(), "S");
    ValuationExtension lex_defect =
        make_extension(b, t, GroupHom::lattice_map(z1, z1, {{3}}));
    NthRootWitness w = noncontent_witness(lex_defect);
    CHECK(w.n == 3);

    // higher-rank defects are reported, not guessed
    OrderedGroup z2 = OrderedGroup::lex(2);
    ValSpecPtr b2 = make_val_spec(z2, Domain::rationals(), "V");
    ValuationExtension deep = make_extension(
        b2, b2, GroupHom::lattice_map(z2, z2, {{2, 0}, {0, 1}}));
    CHECK_THROWS_WITH_AS(noncontent_witness(deep), doctest::Contains("rank-one"), Error);
}

TEST_CASE("maximal ideals extend to maximal ideals") {
    CHECK(maximal_extension_check(residue_extension()));
    CHECK(maximal_extension_check(lex_identity_extension(2)));
    CHECK_THROWS_WITH_AS(maximal_extension_check(nth_root_extension(2)),
                         doctest::Contains("NotContentExtension"), Error);
}

TEST_CASE("content formula properties on sampled series") {
    ValuationExtension e = residue_extension();
    GroupElem prec = parse_group_elem("10", e.target->group);
    GroupElem base_prec = parse_group_elem("10", e.base->group);
    Rng rng(3);
    for (int i = 0; i < 150; ++i) {
        GenSeries g = sample_series(e.target, prec, rng);
        if (g.support_empty()) continue;
        ValueCutIdeal c = content_of_series(g, e);
        // g in orc(g) S
        CHECK(c.contains_value(e.phi.inverse().apply(value_of(g).at)));
        // scalars act by value shifts
        GenSeries r = sample_series(e.base, base_prec, rng);
        if (r.support_empty()) continue;
        GenSeries rg = series_mul(map_series(e, r), g);
        ValueCutIdeal c_rg = content_of_series(rg, e);
        GroupElem expected = group_add(e.phi.inverse().apply(value_of(map_series(e, r)).at),
                                       c.kind() == ValueCutIdeal::Kind::Unit
                                           ? GroupElem::zero(e.base->group)
                                           : c.gamma());
        CHECK(c_rg.equals(ValueCutIdeal::closed_at(expected)));
        // unital: unit-value scalars leave the content alone
        GenSeries u = parse_series("1 + x + O(x^10)", e.target);
        CHECK(content_of_series(series_mul(u, g), e).equals(c));
    }
}

TEST_CASE("purity: extended cuts contract back to themselves") {
    ValuationExtension e = lex_identity_extension(3);
    Rng rng(4);
    for (int i = 0; i < 200; ++i) {
        GroupElem gamma = sample_group_elem(e.base->group, rng, 5);
        if (!gamma.nonneg()) gamma = group_neg(gamma);
        ValueCutIdeal j = ValueCutIdeal::closed_at(gamma);
        // extend along phi, contract by pulling the cut point back
        if (j.kind() != ValueCutIdeal::Kind::ClosedAt) {
            CHECK(j.equals(ValueCutIdeal::unit(e.base->group)));
            continue;
        }
        GroupElem pushed = e.phi.apply(j.gamma());
        GroupElem pulled = e.phi.inverse().apply(pushed);
        CHECK(ValueCutIdeal::closed_at(pulled).equals(j));
    }
}

TEST_CASE("open cuts normalize through the discrete successor") {
    OrderedGroup g2 = OrderedGroup::lex(2);
    ValueCutIdeal open0 = ValueCutIdeal::open_at(GroupElem::zero(g2));
    CHECK(open0.str() == "(>= (0,1))");
    CHECK(open0.equals(ValueCutIdeal::closed_at(GroupElem::min_positive(g2))));
    CHECK(ValueCutIdeal::closed_at(GroupElem::zero(g2)).str() == "(1)");
    OrderedGroup half = OrderedGroup::rational(2);
    CHECK(ValueCutIdeal::open_at(parse_group_elem("1/2", half)).str() == "(>= 1)");
    CHECK(ValueCutIdeal::zero(half).str() == "(0)");
    // cuts of a valuation ring are totally ordered by inclusion
    ValueCutIdeal a = ValueCutIdeal::closed_at(parse_group_elem("1/2", half));
    ValueCutIdeal b = ValueCutIdeal::closed_at(parse_group_elem("3/2", half));
    CHECK(a.includes(b));
    CHECK_FALSE(b.includes(a));
}
