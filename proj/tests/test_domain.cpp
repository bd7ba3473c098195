// Copyright 2026 the orc authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "orc/parse.hpp"
#include "orc/rng.hpp"
#include "orc/sampling.hpp"

using namespace orc;

namespace {

DomainPtr artinian_f5() {
    // F_5[a,b]/(a^2, b^2)
    DomainPtr amb = Domain::poly_ring(Domain::prime_field(5), {"a", "b"});
    return Domain::quotient(amb, parse_ideal("a^2, b^2", amb), false);
}

DomainPtr aclosed_field(int p) {
    // Frac( F_p(s,t)[a,b] / (s a^p + t b^p - 1) ), an integral domain by
    // scenario assertion (the defining polynomial is irreducible).
    DomainPtr k = Domain::prime_field(p);
    DomainPtr kst = Domain::fraction_field(Domain::poly_ring(k, {"s", "t"}));
    DomainPtr amb = Domain::poly_ring(kst, {"a", "b"});
    std::string rel = "s*a^" + std::to_string(p) + " + t*b^" + std::to_string(p) + " - 1";
    return Domain::fraction_field(Domain::quotient(amb, parse_ideal(rel, amb), true));
}

}  // namespace

TEST_CASE("prime field arithmetic") {
    DomainPtr f5 = Domain::prime_field(5);
    CHECK(f5->from_int(3).mul(f5->from_int(4)).equals(f5->from_int(2)));
    CHECK(f5->from_int(-1).as_int() == 4);  // canonical residue
    CHECK_THROWS_WITH_AS(Domain::prime_field(6), doctest::Contains("not prime"), Error);
    CHECK_THROWS_AS(f5->from_int(1).div(f5->zero()), Error);
}

TEST_CASE("rational arithmetic is canonical") {
    DomainPtr q = Domain::rationals();
    Value a = parse_value("2/3", q);
    Value b = parse_value("1/6", q);
    CHECK(a.add(b).equals(parse_value("5/6", q)));
    CHECK(a.add(b).str() == "5/6");
    CHECK(parse_value("4/6", q).str() == "2/3");
}

TEST_CASE("nilpotents in the Artinian quotient") {
    DomainPtr r = artinian_f5();
    Value a = parse_value("a", r);
    CHECK(a.mul(a).is_zero());
    CHECK_FALSE(a.is_zero());
    Value ab = parse_value("a*b", r);
    CHECK_FALSE(ab.is_zero());
    CHECK(ab.mul(a).is_zero());
}

TEST_CASE("quotient division only by detectable units") {
    DomainPtr r = artinian_f5();
    Value x = parse_value("a + 3", r);
    CHECK(x.div(r->from_int(2)).mul(r->from_int(2)).equals(x));
    CHECK_THROWS_WITH_AS(x.div(parse_value("a", r)), doctest::Contains("NonUnitDivisor"), Error);
    CHECK_THROWS_WITH_AS(r->one().div(parse_value("b", r)), doctest::Contains("NonUnitDivisor"),
                         Error);
}

TEST_CASE("integer division restricted to units") {
    DomainPtr z = Domain::integers();
    CHECK(z->from_int(7).div(z->from_int(-1)).equals(z->from_int(-7)));
    CHECK_THROWS_WITH_AS(z->from_int(4).div(z->from_int(2)), doctest::Contains("NonUnitDivisor"),
                         Error);
    CHECK_THROWS_WITH_AS(z->from_int(4).div(z->from_int(0)), doctest::Contains("DivisionByZero"),
                         Error);
}

TEST_CASE("domain mismatch is rejected") {
    CHECK_THROWS_WITH_AS(Domain::integers()->one().add(Domain::rationals()->one()),
                         doctest::Contains("DomainMismatch"), Error);
}

TEST_CASE("zero test by membership in fraction field over a quotient") {
    DomainPtr l = aclosed_field(3);
    Value rel = parse_value("s*a^3 + t*b^3 - 1", l);
    CHECK(rel.is_zero());
    Value other = parse_value("s*a^3 + t*b^3", l);
    CHECK_FALSE(other.is_zero());
    CHECK(other.equals(l->one()));  // differs from the relation by exactly 1
    CHECK_FALSE(parse_value("5/6", Domain::rationals()).is_zero());
}

TEST_CASE("fraction equality via cross multiplication") {
    DomainPtr l = aclosed_field(3);
    Value a = parse_value("a", l);
    Value b = parse_value("b", l);
    Value q1 = a.div(b);
    Value q2 = a.mul(a).div(a.mul(b));
    CHECK(q1.equals(q2));
    CHECK_FALSE(q1.equals(q2.add(l->one())));
}

TEST_CASE("product ring arithmetic is componentwise") {
    DomainPtr z6 = Domain::product({Domain::prime_field(2), Domain::prime_field(3)});
    Value x = z6->from_int(4);  // (0 mod 2, 1 mod 3)
    CHECK(x.components()[0].as_int() == 0);
    CHECK(x.components()[1].as_int() == 1);
    CHECK(x.mul(z6->from_int(3)).equals(z6->from_int(12)));
    CHECK(z6->from_int(6).is_zero());
}

TEST_CASE("ring axioms hold on sampled triples in every supported domain") {
    std::vector<DomainPtr> domains = {
        Domain::integers(),
        Domain::rationals(),
        Domain::prime_field(5),
        Domain::poly_ring(Domain::rationals(), {"a", "b"}),
        artinian_f5(),
        aclosed_field(3),
        Domain::product({Domain::prime_field(2), Domain::prime_field(3)}),
    };
    for (const auto& dom : domains) {
        CAPTURE(dom->describe());
        // Deep towers (fractions over quotients) get smaller operands; their
        // fraction pairs are not gcd-reduced, so sizes grow with each op.
        SampleOptions opt;
        if (dom->kind() == DomainKind::Fraction) opt = {.max_terms = 2, .max_degree = 1};
        Rng rng(0);
        for (int i = 0; i < 60; ++i) {
            Value a = sample_value(dom, rng, opt);
            Value b = sample_value(dom, rng, opt);
            Value c = sample_value(dom, rng, opt);
            CHECK(a.add(b).add(c).equals(a.add(b.add(c))));
            CHECK(a.mul(b).mul(c).equals(a.mul(b.mul(c))));
            CHECK(a.mul(b.add(c)).equals(a.mul(b).add(a.mul(c))));
            CHECK(a.add(b).equals(b.add(a)));
            CHECK(a.mul(b).equals(b.mul(a)));
            CHECK(a.add(dom->zero()).equals(a));
            CHECK(a.mul(dom->one()).equals(a));
            CHECK(a.sub(a).is_zero());
        }
    }
}

TEST_CASE("Fermat: a^p = a in F_p") {
    for (long p : {2L, 3L, 5L, 7L, 13L}) {
        DomainPtr fp = Domain::prime_field(p);
        Rng rng(0);
        for (int i = 0; i < 200; ++i) {
            Value a = sample_value(fp, rng);
            CHECK(a.pow(static_cast<unsigned long>(p)).equals(a));
        }
    }
}

TEST_CASE("fraction equality is an equivalence relation over a quotient base") {
    DomainPtr l = aclosed_field(3);
    Rng rng(1);
    for (int i = 0; i < 40; ++i) {
        Value a = sample_value(l, rng);
        Value b = sample_value(l, rng);
        Value c = sample_value(l, rng);
        CHECK(a.equals(a));
        if (a.equals(b)) CHECK(b.equals(a));
        if (a.equals(b) && b.equals(c)) CHECK(a.equals(c));
        // exercise nontrivial positives as well
        Value scale = parse_value("s", l);
        Value a2 = a.mul(scale).div(scale);
        CHECK(a2.equals(a));
    }
}

TEST_CASE("coercion follows the tower") {
    DomainPtr z = Domain::integers();
    DomainPtr q = Domain::rationals();
    CHECK(coerce(z->from_int(3), q).equals(q->from_int(3)));
    DomainPtr l = aclosed_field(3);
    Value s_in_l = coerce(parse_value("s", Domain::poly_ring(Domain::prime_field(3), {"s", "t"})), l);
    CHECK(s_in_l.equals(parse_value("s", l)));
    CHECK_THROWS_WITH_AS(coerce(q->one(), z), doctest::Contains("DomainMismatch"), Error);
}
