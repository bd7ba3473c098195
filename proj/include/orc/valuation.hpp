// Copyright 2026 the orc authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <optional>

#include "orc/domain.hpp"
#include "orc/rng.hpp"

namespace orc {

/// Totally ordered abelian value group: either Z^r under the lexicographic
/// order (first nonzero coordinate decides) or the rank-one lattice (1/d)Z
/// inside Q. Both are discrete: every element has an immediate successor,
/// which keeps value-cut arithmetic exact.
struct OrderedGroup {
    enum class Kind { LexZ, RatRank1 };
    Kind kind = Kind::LexZ;
    int rank = 1;    // LexZ
    BigInt denom = 1;  // RatRank1: the lattice (1/denom)Z

    static OrderedGroup lex(int rank);
    static OrderedGroup rational(const BigInt& denom);

    bool trivial() const { return kind == Kind::LexZ && rank == 0; }
    /// Length of the chain of proper convex subgroups (the valuation rank).
    int chain_rank() const { return kind == Kind::LexZ ? rank : 1; }
    bool same(const OrderedGroup& o) const;
    std::string describe() const;
};

/// Element of an OrderedGroup. LexZ: one coordinate per rank; RatRank1: a
/// single numerator over the group's lattice denominator.
struct GroupElem {
    OrderedGroup group;
    std::vector<BigInt> c;

    static GroupElem zero(const OrderedGroup& g);
    static GroupElem min_positive(const OrderedGroup& g);
    static GroupElem of(const OrderedGroup& g, std::vector<BigInt> coords);

    bool is_zero() const;
    bool nonneg() const;
    std::string str() const;
};

int group_cmp(const GroupElem& a, const GroupElem& b);
GroupElem group_add(const GroupElem& a, const GroupElem& b);
GroupElem group_sub(const GroupElem& a, const GroupElem& b);
GroupElem group_neg(const GroupElem& a);
GroupElem group_scale(const BigInt& k, const GroupElem& a);

GroupElem parse_group_elem(const std::string& text, const OrderedGroup& group);

/// Random element with coordinates in [-bound, bound] (numerator for the
/// rank-one case).
GroupElem sample_group_elem(const OrderedGroup& g, Rng& rng, int bound = 20);

/// Order-compatible homomorphism between value groups. Only shapes whose
/// order preservation is structural are constructible: lower-triangular
/// integer matrices with positive diagonal between equal-rank lex lattices,
/// and positive rational multipliers between rank-one lattices (with the
/// image required to land in the codomain lattice). Anything else is
/// rejected at construction.
class GroupHom {
public:
    enum class Kind { Matrix, Scale };

    static GroupHom lattice_map(const OrderedGroup& dom, const OrderedGroup& cod,
                                std::vector<std::vector<BigInt>> matrix);
    static GroupHom scaling(const OrderedGroup& dom, const OrderedGroup& cod,
                            const BigInt& num, const BigInt& den);
    static GroupHom identity(const OrderedGroup& g);

    Kind kind() const { return kind_; }
    const OrderedGroup& dom() const { return dom_; }
    const OrderedGroup& cod() const { return cod_; }
    const std::vector<std::vector<BigInt>>& matrix() const { return mat_; }
    const BigInt& scale_num() const { return num_; }
    const BigInt& scale_den() const { return den_; }

    GroupElem apply(const GroupElem& x) const;
    /// Bijective (and then order-isomorphic both ways): all-ones diagonal in
    /// the lattice case, multiplier mapping one lattice onto the other in
    /// the rank-one case.
    bool is_order_iso() const;
    GroupHom inverse() const;  // requires is_order_iso()
    std::string describe() const;

private:
    GroupHom() = default;
    Kind kind_ = Kind::Matrix;
    OrderedGroup dom_, cod_;
    std::vector<std::vector<BigInt>> mat_;
    BigInt num_ = 1, den_ = 1;
};

bool hom_is_order_iso(const GroupHom& phi);

/// A valuation ring presented by its value group and residue coefficient
/// field; `label` is a display name such as "K[[x]]".
struct ValRingSpec {
    OrderedGroup group;
    DomainPtr residue;
    std::string label;
};
using ValSpecPtr = std::shared_ptr<const ValRingSpec>;

ValSpecPtr make_val_spec(const OrderedGroup& group, DomainPtr residue, std::string label);

struct GroupElemLess {
    bool operator()(const GroupElem& a, const GroupElem& b) const { return group_cmp(a, b) < 0; }
};

/// Finitely supported generalized power series with an explicit precision
/// cut: terms with exponent >= precision are unknown, support exponents are
/// >= 0 and < precision, coefficients are nonzero residue-field elements.
class GenSeries {
public:
    using TermMap = std::map<GroupElem, Value, GroupElemLess>;

    GenSeries(ValSpecPtr spec, GroupElem precision);

    static GenSeries from_terms(ValSpecPtr spec,
                                const std::vector<std::pair<GroupElem, Value>>& terms,
                                GroupElem precision);
    /// c * x^gamma + O(x^precision)
    static GenSeries monomial(ValSpecPtr spec, const GroupElem& gamma, const Value& coeff,
                              const GroupElem& precision);

    const ValSpecPtr& spec() const { return spec_; }
    const TermMap& terms() const { return terms_; }
    const GroupElem& precision() const { return precision_; }
    bool support_empty() const { return terms_.empty(); }
    /// Smallest support exponent, or the precision cut when empty (a lower
    /// bound for the true value either way).
    GroupElem value_lower_bound() const;

    std::string str() const;

private:
    void insert(const GroupElem& e, const Value& v);
    friend GenSeries series_add(const GenSeries&, const GenSeries&);
    friend GenSeries series_mul(const GenSeries&, const GenSeries&);
    friend GenSeries series_invert_unit(const GenSeries&);

    ValSpecPtr spec_;
    TermMap terms_;
    GroupElem precision_;
};

GenSeries series_add(const GenSeries& a, const GenSeries& b);
GenSeries series_mul(const GenSeries& a, const GenSeries& b);
/// Inverse of a unit (leading exponent 0). Raises NotAUnit otherwise, and
/// PrecisionExhausted when the inverse is not finitely supported below the
/// precision cut (possible in lex rank >= 2).
GenSeries series_invert_unit(const GenSeries& a);

enum class SeriesArith { Add, Mul, InvertUnit };
GenSeries series_arith(const GenSeries& a, const GenSeries& b, SeriesArith kind);

/// Leading value of a series, or the honesty marker when the support is
/// empty but the precision is finite ("zero so far" is not zero).
struct SeriesValue {
    bool below_precision = false;
    GroupElem at;  // the value, or the precision cut for the marker
    std::string str() const;
};
SeriesValue value_of(const GenSeries& g);

/// Ideal of a valuation ring presented as a value cut. OpenAt(gamma)
/// normalizes to ClosedAt(gamma + minimal positive) -- exact because the
/// supported groups are discrete -- and ClosedAt(0) is the unit ideal.
class ValueCutIdeal {
public:
    enum class Kind { Zero, Unit, ClosedAt };

    static ValueCutIdeal zero(const OrderedGroup& g);
    static ValueCutIdeal unit(const OrderedGroup& g);
    static ValueCutIdeal closed_at(const GroupElem& gamma);
    static ValueCutIdeal open_at(const GroupElem& gamma);

    Kind kind() const { return kind_; }
    const OrderedGroup& group() const { return group_; }
    /// Cut point; only for ClosedAt.
    const GroupElem& gamma() const;

    bool contains_value(const GroupElem& v) const;
    bool includes(const ValueCutIdeal& other) const;  // superset
    bool equals(const ValueCutIdeal& other) const;
    std::string str() const;

private:
    Kind kind_ = Kind::Zero;
    OrderedGroup group_;
    std::optional<GroupElem> gamma_;
};

/// Inclusion of valuation rings (V, m) -> (S, n) presented by the induced
/// value-group homomorphism and the residue coercion V-residue -> S-residue.
struct ValuationExtension {
    ValSpecPtr base;
    ValSpecPtr target;
    GroupHom phi;
};

ValuationExtension make_extension(ValSpecPtr base, ValSpecPtr target, GroupHom phi);

/// The content criterion: true iff phi is an order isomorphism. Raises
/// TrivialValuation when the base value group is trivial (the base is a
/// field and the criterion's hypothesis fails).
bool is_content_extension(const ValuationExtension& e);

/// orc(g) = gS cap V as a value cut of the base: the closed cut at the
/// pullback of g's value. Requires a content extension and a defined value.
ValueCutIdeal content_of_series(const GenSeries& g, const ValuationExtension& e);

/// Certificate that mS is not prime for a non-isomorphic rank-one lattice
/// defect of index n: an element g with g^n in mS but g outside mS. The
/// membership values are recomputed by series arithmetic before returning.
struct NthRootWitness {
    GenSeries g;
    long n = 0;
    GroupElem value_g;
    GroupElem value_gn;
    GroupElem m_cut;  // the cut of mS
    bool confirmed = false;
};
NthRootWitness noncontent_witness(const ValuationExtension& e);

/// Whether the extended maximal cut equals the target's maximal cut
/// (phi(min positive of V) against min positive of S); always true under an
/// order isomorphism, recomputed as a consistency check.
bool maximal_extension_check(const ValuationExtension& e);

/// Push a base-ring series into the target along phi, coercing coefficients
/// through the residue inclusion.
GenSeries map_series(const ValuationExtension& e, const GenSeries& base_series);

GenSeries parse_series(const std::string& text, const ValSpecPtr& spec);

/// Random series with support below the given precision.
GenSeries sample_series(const ValSpecPtr& spec, const GroupElem& precision, Rng& rng,
                        int max_terms = 4);

}  // namespace orc
