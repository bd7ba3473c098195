// Copyright 2026 the orc authors
// SPDX-License-Identifier: Apache-2.0

#include "orc/valuation.hpp"

#include <sstream>

#include "orc/parse.hpp"
#include "orc/sampling.hpp"

namespace orc {

// ---------------------------------------------------------------------------
// Ordered groups

OrderedGroup OrderedGroup::lex(int rank) {
    require(rank >= 0, errc::BadConstruction, "negative rank");
    OrderedGroup g;
    g.kind = Kind::LexZ;
    g.rank = rank;
    return g;
}

OrderedGroup OrderedGroup::rational(const BigInt& denom) {
    require(denom >= 1, errc::BadConstruction, "lattice denominator must be positive");
    OrderedGroup g;
    g.kind = Kind::RatRank1;
    g.rank = 1;
    g.denom = denom;
    return g;
}

bool OrderedGroup::same(const OrderedGroup& o) const {
    return kind == o.kind && rank == o.rank && denom == o.denom;
}

std::string OrderedGroup::describe() const {
    if (kind == Kind::LexZ) {
        if (rank == 0) return "0";
        if (rank == 1) return "Z";
        return "Z^" + std::to_string(rank) + " lex";
    }
    if (denom == 1) return "Z";
    return "(1/" + denom.get_str() + ")Z";
}

GroupElem GroupElem::zero(const OrderedGroup& g) {
    return GroupElem{g, std::vector<BigInt>(g.kind == OrderedGroup::Kind::LexZ
                                                ? static_cast<std::size_t>(g.rank)
                                                : 1)};
}

GroupElem GroupElem::min_positive(const OrderedGroup& g) {
    require(!g.trivial(), errc::BadConstruction, "trivial group has no positive element");
    GroupElem e = zero(g);
    e.c.back() = 1;
    return e;
}

GroupElem GroupElem::of(const OrderedGroup& g, std::vector<BigInt> coords) {
    std::size_t want = g.kind == OrderedGroup::Kind::LexZ ? static_cast<std::size_t>(g.rank) : 1;
    require(coords.size() == want, errc::BadConstruction, "coordinate count mismatch");
    return GroupElem{g, std::move(coords)};
}

bool GroupElem::is_zero() const {
    for (const auto& x : c)
        if (x != 0) return false;
    return true;
}

bool GroupElem::nonneg() const { return group_cmp(*this, zero(group)) >= 0; }

std::string GroupElem::str() const {
    if (group.kind == OrderedGroup::Kind::RatRank1) {
        BigRat q(c[0], group.denom);
        q.canonicalize();
        if (q.get_den() == 1) return q.get_num().get_str();
        return q.get_num().get_str() + "/" + q.get_den().get_str();
    }
    if (group.rank == 1) return c[0].get_str();
    std::string s = "(";
    for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + c[i].get_str();
    return s + ")";
}

int group_cmp(const GroupElem& a, const GroupElem& b) {
    require(a.group.same(b.group), errc::DomainMismatch, "comparing across value groups");
    for (std::size_t i = 0; i < a.c.size(); ++i)
        if (a.c[i] != b.c[i]) return a.c[i] < b.c[i] ? -1 : 1;
    return 0;
}

GroupElem group_add(const GroupElem& a, const GroupElem& b) {
    require(a.group.same(b.group), errc::DomainMismatch, "adding across value groups");
    GroupElem r = a;
    for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] += b.c[i];
    return r;
}

GroupElem group_sub(const GroupElem& a, const GroupElem& b) { return group_add(a, group_neg(b)); }

GroupElem group_neg(const GroupElem& a) {
    GroupElem r = a;
    for (auto& x : r.c) x = -x;
    return r;
}

GroupElem group_scale(const BigInt& k, const GroupElem& a) {
    GroupElem r = a;
    for (auto& x : r.c) x *= k;
    return r;
}

GroupElem parse_group_elem(const std::string& text, const OrderedGroup& group) {
    std::string s = text;
    std::erase_if(s, [](char ch) { return std::isspace(static_cast<unsigned char>(ch)); });
    require(!s.empty(), errc::ParseError, "empty group element");
    if (!s.empty() && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == ',') {
            parts.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    auto parse_int = [&](const std::string& p) {
        require(!p.empty() && p.find_first_not_of("-0123456789") == std::string::npos,
                errc::ParseError, "bad integer '" + p + "' in group element \"" + text + "\"");
        return BigInt(p);
    };
    if (group.kind == OrderedGroup::Kind::LexZ) {
        require(static_cast<int>(parts.size()) == group.rank, errc::ParseError,
                "expected " + std::to_string(group.rank) + " coordinates in \"" + text + "\"");
        std::vector<BigInt> coords;
        for (const auto& p : parts) coords.push_back(parse_int(p));
        return GroupElem::of(group, std::move(coords));
    }
    require(parts.size() == 1, errc::ParseError, "rank-one element cannot be a tuple");
    const std::string& p = parts[0];
    std::size_t slash = p.find('/');
    BigInt num, den = 1;
    if (slash == std::string::npos) {
        num = parse_int(p);
    } else {
        num = parse_int(p.substr(0, slash));
        den = parse_int(p.substr(slash + 1));
        require(den > 0, errc::ParseError, "denominator must be positive in \"" + text + "\"");
    }
    // value num/den must lie in (1/denom)Z
    BigInt scaled = num * group.denom;
    require(scaled % den == 0, errc::ParseError,
            "value " + p + " is not in the lattice " + group.describe());
    return GroupElem::of(group, {scaled / den});
}

GroupElem sample_group_elem(const OrderedGroup& g, Rng& rng, int bound) {
    GroupElem e = GroupElem::zero(g);
    for (auto& x : e.c) x = static_cast<long>(rng.range(-bound, bound));
    return e;
}

// ---------------------------------------------------------------------------
// Group homomorphisms

GroupHom GroupHom::lattice_map(const OrderedGroup& dom, const OrderedGroup& cod,
                               std::vector<std::vector<BigInt>> matrix) {
    require(dom.kind == OrderedGroup::Kind::LexZ && cod.kind == OrderedGroup::Kind::LexZ,
            errc::BadConstruction, "lattice maps need lex groups on both sides");
    require(dom.rank == cod.rank, errc::BadConstruction,
            "lattice maps are supported between equal ranks only");
    std::size_t r = static_cast<std::size_t>(dom.rank);
    require(matrix.size() == r, errc::BadConstruction, "matrix row count mismatch");
    for (std::size_t i = 0; i < r; ++i) {
        require(matrix[i].size() == r, errc::BadConstruction, "matrix column count mismatch");
        for (std::size_t j = i + 1; j < r; ++j)
            require(matrix[i][j] == 0, errc::BadConstruction,
                    "order preservation requires a lower-triangular matrix");
        require(matrix[i][i] > 0, errc::BadConstruction,
                "order preservation requires a positive diagonal");
    }
    GroupHom h;
    h.kind_ = Kind::Matrix;
    h.dom_ = dom;
    h.cod_ = cod;
    h.mat_ = std::move(matrix);
    return h;
}

GroupHom GroupHom::scaling(const OrderedGroup& dom, const OrderedGroup& cod, const BigInt& num,
                           const BigInt& den) {
    require(dom.kind == OrderedGroup::Kind::RatRank1 && cod.kind == OrderedGroup::Kind::RatRank1,
            errc::BadConstruction, "scaling maps need rank-one rational groups");
    require(num > 0 && den > 0, errc::BadConstruction, "multiplier must be positive");
    // image of the lattice: (num/den)(1/dom.denom)Z must land in (1/cod.denom)Z
    BigInt img_num = num * cod.denom;
    BigInt img_den = den * dom.denom;
    require(img_num % img_den == 0, errc::BadConstruction,
            "multiplier " + num.get_str() + "/" + den.get_str() + " does not map " +
                dom.describe() + " into " + cod.describe());
    GroupHom h;
    h.kind_ = Kind::Scale;
    h.dom_ = dom;
    h.cod_ = cod;
    h.num_ = num;
    h.den_ = den;
    return h;
}

GroupHom GroupHom::identity(const OrderedGroup& g) {
    if (g.kind == OrderedGroup::Kind::RatRank1) return scaling(g, g, 1, 1);
    std::size_t r = static_cast<std::size_t>(g.rank);
    std::vector<std::vector<BigInt>> m(r, std::vector<BigInt>(r));
    for (std::size_t i = 0; i < r; ++i) m[i][i] = 1;
    return lattice_map(g, g, std::move(m));
}

GroupElem GroupHom::apply(const GroupElem& x) const {
    require(x.group.same(dom_), errc::DomainMismatch, "argument outside the domain group");
    if (kind_ == Kind::Matrix) {
        GroupElem y = GroupElem::zero(cod_);
        for (std::size_t i = 0; i < mat_.size(); ++i)
            for (std::size_t j = 0; j <= i; ++j) y.c[i] += mat_[i][j] * x.c[j];
        return y;
    }
    // x = k/dom.denom maps to k * (num cod.denom)/(den dom.denom) / cod.denom
    BigInt step = (num_ * cod_.denom) / (den_ * dom_.denom);
    return GroupElem::of(cod_, {x.c[0] * step});
}

bool GroupHom::is_order_iso() const {
    if (kind_ == Kind::Matrix) {
        for (std::size_t i = 0; i < mat_.size(); ++i)
            if (mat_[i][i] != 1) return false;
        return true;
    }
    // bijective iff the multiplier carries one lattice exactly onto the other
    return num_ * cod_.denom == den_ * dom_.denom;
}

GroupHom GroupHom::inverse() const {
    require(is_order_iso(), errc::BadConstruction, "only order isomorphisms invert");
    if (kind_ == Kind::Scale) return scaling(cod_, dom_, den_, num_);
    // unimodular lower-triangular inverse by forward substitution
    std::size_t r = mat_.size();
    std::vector<std::vector<BigInt>> inv(r, std::vector<BigInt>(r));
    for (std::size_t j = 0; j < r; ++j) {
        inv[j][j] = 1;
        for (std::size_t i = j + 1; i < r; ++i) {
            BigInt acc = 0;
            for (std::size_t k = j; k < i; ++k) acc += mat_[i][k] * inv[k][j];
            inv[i][j] = -acc;
        }
    }
    return lattice_map(cod_, dom_, std::move(inv));
}

std::string GroupHom::describe() const {
    if (kind_ == Kind::Scale) return "x" + num_.get_str() + "/" + den_.get_str();
    std::string s = "[";
    for (std::size_t i = 0; i < mat_.size(); ++i) {
        s += i ? "; " : "";
        for (std::size_t j = 0; j < mat_[i].size(); ++j)
            s += (j ? "," : "") + mat_[i][j].get_str();
    }
    return s + "]";
}

bool hom_is_order_iso(const GroupHom& phi) { return phi.is_order_iso(); }

// ---------------------------------------------------------------------------
// Valuation ring specs and series

ValSpecPtr make_val_spec(const OrderedGroup& group, DomainPtr residue, std::string label) {
    require(residue != nullptr && residue->is_field(), errc::BadConstruction,
            "residue coefficients must form a field");
    return std::make_shared<const ValRingSpec>(ValRingSpec{group, std::move(residue),
                                                           std::move(label)});
}

GenSeries::GenSeries(ValSpecPtr spec, GroupElem precision)
    : spec_(std::move(spec)), precision_(std::move(precision)) {
    require(precision_.group.same(spec_->group), errc::DomainMismatch,
            "precision cut outside the value group");
    require(group_cmp(precision_, GroupElem::zero(spec_->group)) > 0, errc::PrecisionExhausted,
            "precision cut must be positive");
}

void GenSeries::insert(const GroupElem& e, const Value& v) {
    require(e.group.same(spec_->group), errc::DomainMismatch, "exponent outside the value group");
    require(e.nonneg(), errc::BadConstruction, "ring elements have nonnegative exponents");
    require(group_cmp(e, precision_) < 0, errc::BadConstruction,
            "support exponent at or beyond the precision cut");
    require(v.domain()->same(spec_->residue), errc::DomainMismatch,
            "coefficient outside the residue field");
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        if (!v.is_zero()) terms_.emplace(e, v);
        return;
    }
    Value s = it->second.add(v);
    if (s.is_zero())
        terms_.erase(it);
    else
        it->second = std::move(s);
}

GenSeries GenSeries::from_terms(ValSpecPtr spec,
                                const std::vector<std::pair<GroupElem, Value>>& terms,
                                GroupElem precision) {
    GenSeries s(std::move(spec), std::move(precision));
    for (const auto& [e, v] : terms) s.insert(e, v);
    return s;
}

GenSeries GenSeries::monomial(ValSpecPtr spec, const GroupElem& gamma, const Value& coeff,
                              const GroupElem& precision) {
    return from_terms(std::move(spec), {{gamma, coeff}}, precision);
}

GroupElem GenSeries::value_lower_bound() const {
    return terms_.empty() ? precision_ : terms_.begin()->first;
}

std::string GenSeries::str() const {
    auto exp_str = [](const GroupElem& e) -> std::string {
        std::string s = e.str();
        if (!s.empty() && s.front() == '(') return s;  // tuples come wrapped
        if (s.find('/') != std::string::npos) return "(" + s + ")";
        return s;
    };
    std::string out;
    for (const auto& [e, v] : terms_) {
        std::string cs = v.str();
        bool wrap = cs.find_first_of("+*/ ,") != std::string::npos ||
                    cs.find('-', 1) != std::string::npos;
        std::string piece;
        if (e.is_zero()) {
            piece = wrap ? "(" + cs + ")" : cs;
        } else {
            std::string xs = "x";
            std::string es = exp_str(e);
            if (es != "1") xs += "^" + es;
            if (cs == "1")
                piece = xs;
            else if (cs == "-1")
                piece = "-" + xs;
            else
                piece = (wrap ? "(" + cs + ")" : cs) + "*" + xs;
        }
        if (out.empty())
            out = piece;
        else if (!piece.empty() && piece[0] == '-')
            out += " - " + piece.substr(1);
        else
            out += " + " + piece;
    }
    std::string tail = "O(x^" + exp_str(precision_) + ")";
    return out.empty() ? tail : out + " + " + tail;
}

GenSeries series_add(const GenSeries& a, const GenSeries& b) {
    require(a.spec_->group.same(b.spec_->group) && a.spec_->residue->same(b.spec_->residue),
            errc::DomainMismatch, "series live in different rings");
    GroupElem prec = group_cmp(a.precision_, b.precision_) <= 0 ? a.precision_ : b.precision_;
    GenSeries r(a.spec_, prec);
    for (const auto& [e, v] : a.terms_)
        if (group_cmp(e, prec) < 0) r.insert(e, v);
    for (const auto& [e, v] : b.terms_)
        if (group_cmp(e, prec) < 0) r.insert(e, v);
    return r;
}

GenSeries series_mul(const GenSeries& a, const GenSeries& b) {
    require(a.spec_->group.same(b.spec_->group) && a.spec_->residue->same(b.spec_->residue),
            errc::DomainMismatch, "series live in different rings");
    GroupElem p1 = group_add(a.precision_, b.value_lower_bound());
    GroupElem p2 = group_add(b.precision_, a.value_lower_bound());
    GroupElem prec = group_cmp(p1, p2) <= 0 ? p1 : p2;
    require(group_cmp(prec, GroupElem::zero(prec.group)) > 0, errc::PrecisionExhausted,
            "product retains no terms below its precision cut");
    GenSeries r(a.spec_, prec);
    for (const auto& [e1, v1] : a.terms_)
        for (const auto& [e2, v2] : b.terms_) {
            GroupElem e = group_add(e1, e2);
            if (group_cmp(e, prec) < 0) r.insert(e, v1.mul(v2));
        }
    return r;
}

namespace {

/// Least k >= 1 with k*gamma >= pi in the lex order, if one exists. gamma
/// must be positive.
std::optional<BigInt> cofinal_multiple(const GroupElem& gamma, const GroupElem& pi) {
    GroupElem zero = GroupElem::zero(gamma.group);
    if (group_cmp(pi, zero) <= 0) return BigInt(1);
    std::size_t i = 0;
    while (i < gamma.c.size() && gamma.c[i] == 0) ++i;
    std::size_t j = 0;
    while (j < pi.c.size() && pi.c[j] == 0) ++j;
    if (i < j) return BigInt(1);
    if (i > j) return std::nullopt;
    BigInt k = pi.c[j] / gamma.c[i] + 1;
    return k < 1 ? BigInt(1) : k;
}

}  // namespace

GenSeries series_invert_unit(const GenSeries& a) {
    require(!a.support_empty(), errc::NotAUnit,
            "series has no visible terms; unit status undecidable below the precision cut");
    const GroupElem& lead = a.terms_.begin()->first;
    require(lead.is_zero(), errc::NotAUnit, "leading exponent must be 0 to invert");
    const Value c0 = a.terms_.begin()->second;
    const GroupElem& prec = a.precision_;

    // a = c0 (1 + m); invert by the finite geometric sum of (-m)^j.
    GenSeries m(a.spec_, prec);
    Value c0inv = a.spec_->residue->one().div(c0);
    for (auto it = std::next(a.terms_.begin()); it != a.terms_.end(); ++it)
        m.insert(it->first, it->second.mul(c0inv).neg());

    GenSeries acc(a.spec_, prec);
    acc.insert(GroupElem::zero(a.spec_->group), a.spec_->residue->one());
    if (!m.support_empty()) {
        std::optional<BigInt> k = cofinal_multiple(m.terms_.begin()->first, prec);
        require(k.has_value(), errc::PrecisionExhausted,
                "inverse support is unbounded below the precision cut");
        GenSeries power = m;
        while (!power.support_empty()) {
            for (const auto& [e, v] : power.terms_) acc.insert(e, v);
            // next power, truncated at the fixed cut
            GenSeries next(a.spec_, prec);
            for (const auto& [e1, v1] : power.terms_)
                for (const auto& [e2, v2] : m.terms_) {
                    GroupElem e = group_add(e1, e2);
                    if (group_cmp(e, prec) < 0) next.insert(e, v1.mul(v2));
                }
            power = std::move(next);
        }
    }
    GenSeries r(a.spec_, prec);
    for (const auto& [e, v] : acc.terms_) r.insert(e, v.mul(c0inv));
    return r;
}

GenSeries series_arith(const GenSeries& a, const GenSeries& b, SeriesArith kind) {
    switch (kind) {
        case SeriesArith::Add: return series_add(a, b);
        case SeriesArith::Mul: return series_mul(a, b);
        case SeriesArith::InvertUnit: return series_invert_unit(a);
    }
    fail(errc::BadConstruction, "unreachable series op");
}

std::string SeriesValue::str() const {
    if (below_precision) return "BelowPrecision(" + at.str() + ")";
    return at.str();
}

SeriesValue value_of(const GenSeries& g) {
    if (g.support_empty()) return SeriesValue{true, g.precision()};
    return SeriesValue{false, g.terms().begin()->first};
}

// ---------------------------------------------------------------------------
// Value cuts

ValueCutIdeal ValueCutIdeal::zero(const OrderedGroup& g) {
    ValueCutIdeal c;
    c.kind_ = Kind::Zero;
    c.group_ = g;
    return c;
}

ValueCutIdeal ValueCutIdeal::unit(const OrderedGroup& g) {
    ValueCutIdeal c;
    c.kind_ = Kind::Unit;
    c.group_ = g;
    return c;
}

ValueCutIdeal ValueCutIdeal::closed_at(const GroupElem& gamma) {
    require(gamma.nonneg(), errc::BadConstruction, "cut point must be nonnegative");
    if (gamma.is_zero()) return unit(gamma.group);
    ValueCutIdeal c;
    c.kind_ = Kind::ClosedAt;
    c.group_ = gamma.group;
    c.gamma_ = gamma;
    return c;
}

ValueCutIdeal ValueCutIdeal::open_at(const GroupElem& gamma) {
    require(gamma.nonneg(), errc::BadConstruction, "cut point must be nonnegative");
    return closed_at(group_add(gamma, GroupElem::min_positive(gamma.group)));
}

const GroupElem& ValueCutIdeal::gamma() const {
    require(kind_ == Kind::ClosedAt && gamma_.has_value(), errc::BadConstruction,
            "cut has no finite cut point");
    return *gamma_;
}

bool ValueCutIdeal::contains_value(const GroupElem& v) const {
    switch (kind_) {
        case Kind::Zero: return false;
        case Kind::Unit: return v.nonneg();
        case Kind::ClosedAt: return group_cmp(v, *gamma_) >= 0;
    }
    return false;
}

bool ValueCutIdeal::includes(const ValueCutIdeal& o) const {
    require(group_.same(o.group_), errc::DomainMismatch, "cuts over different groups");
    if (o.kind_ == Kind::Zero || kind_ == Kind::Unit) return true;
    if (kind_ == Kind::Zero) return false;
    if (o.kind_ == Kind::Unit) return false;
    return group_cmp(*gamma_, *o.gamma_) <= 0;
}

bool ValueCutIdeal::equals(const ValueCutIdeal& o) const {
    return includes(o) && o.includes(*this);
}

std::string ValueCutIdeal::str() const {
    switch (kind_) {
        case Kind::Zero: return "(0)";
        case Kind::Unit: return "(1)";
        case Kind::ClosedAt: return "(>= " + gamma_->str() + ")";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Extensions

ValuationExtension make_extension(ValSpecPtr base, ValSpecPtr target, GroupHom phi) {
    require(phi.dom().same(base->group), errc::BadConstruction,
            "phi's domain is not the base value group");
    require(phi.cod().same(target->group), errc::BadConstruction,
            "phi's codomain is not the target value group");
    require(coercible(base->residue, target->residue), errc::BadConstruction,
            "no residue inclusion from " + base->residue->describe() + " into " +
                target->residue->describe());
    return ValuationExtension{std::move(base), std::move(target), std::move(phi)};
}

bool is_content_extension(const ValuationExtension& e) {
    require(!e.base->group.trivial(), errc::TrivialValuation,
            "base valuation is trivial (a field); the criterion does not apply");
    return e.phi.is_order_iso();
}

ValueCutIdeal content_of_series(const GenSeries& g, const ValuationExtension& e) {
    require(g.spec()->group.same(e.target->group), errc::DomainMismatch,
            "series does not live in the target ring");
    require(is_content_extension(e), errc::NotContentExtension,
            "content formula requires a content extension");
    SeriesValue v = value_of(g);
    require(!v.below_precision, errc::PrecisionExhausted,
            "series value is below the precision cut; content undecidable");
    GroupElem pulled = e.phi.inverse().apply(v.at);
    // consistency: the pullback pushes forward onto the value, so g lies in
    // the extended cut
    require(group_cmp(e.phi.apply(pulled), v.at) == 0, errc::BadConstruction,
            "pullback failed to invert phi");
    return ValueCutIdeal::closed_at(pulled);
}

NthRootWitness noncontent_witness(const ValuationExtension& e) {
    require(!is_content_extension(e), errc::NoWitnessConstructed,
            "extension is a content extension; no defect to certify");
    const OrderedGroup& gv = e.base->group;
    const OrderedGroup& gs = e.target->group;

    BigInt index = 0;
    if (e.phi.kind() == GroupHom::Kind::Scale) {
        // phi(min positive of V) = index * (min positive of S)
        index = (e.phi.scale_num() * gs.denom) / (e.phi.scale_den() * gv.denom);
    } else if (gv.rank == 1) {
        index = e.phi.matrix()[0][0];
    } else {
        fail(errc::NoWitnessConstructed,
             "witness construction is limited to rank-one lattice defects");
    }
    require(index >= 2, errc::NoWitnessConstructed,
            "value-group defect is not a finite rank-one index");
    require(index.fits_slong_p(), errc::NoWitnessConstructed, "index too large to certify");
    long n = index.get_si();

    GroupElem minpos_s = GroupElem::min_positive(gs);
    GroupElem m_cut = e.phi.apply(GroupElem::min_positive(gv));
    GroupElem prec = group_scale(n + 1, minpos_s);
    GenSeries g = GenSeries::monomial(e.target, minpos_s, e.target->residue->one(), prec);

    // verify by series arithmetic: g^n reaches the extended maximal cut,
    // g itself does not
    GenSeries gn = g;
    for (long i = 1; i < n; ++i) gn = series_mul(gn, g);
    SeriesValue vg = value_of(g);
    SeriesValue vgn = value_of(gn);
    require(!vg.below_precision && !vgn.below_precision, errc::BadConstruction,
            "witness powers lost below precision");
    require(group_cmp(vgn.at, m_cut) >= 0, errc::BadConstruction, "g^n missed the extended cut");
    require(group_cmp(vg.at, m_cut) < 0, errc::BadConstruction, "g lies in the extended cut");

    NthRootWitness w{std::move(g), n, vg.at, vgn.at, m_cut, true};
    return w;
}

bool maximal_extension_check(const ValuationExtension& e) {
    require(is_content_extension(e), errc::NotContentExtension,
            "maximal-extension check requires a content extension");
    GroupElem extended = e.phi.apply(GroupElem::min_positive(e.base->group));
    GroupElem target_max = GroupElem::min_positive(e.target->group);
    return ValueCutIdeal::closed_at(extended).equals(ValueCutIdeal::closed_at(target_max));
}

GenSeries map_series(const ValuationExtension& e, const GenSeries& base_series) {
    require(base_series.spec()->group.same(e.base->group), errc::DomainMismatch,
            "series does not live in the base ring");
    GenSeries r(e.target, e.phi.apply(base_series.precision()));
    for (const auto& [exp, v] : base_series.terms())
        r = series_add(r, GenSeries::monomial(e.target, e.phi.apply(exp),
                                              coerce(v, e.target->residue), r.precision()));
    return r;
}

// ---------------------------------------------------------------------------
// Series text form

GenSeries parse_series(const std::string& text, const ValSpecPtr& spec) {
    // split into top-level pieces at + and - (depth 0)
    struct Piece {
        std::string body;
        bool negative;
    };
    std::vector<Piece> pieces;
    int depth = 0;
    std::string cur;
    bool cur_neg = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char ch = text[i];
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if (depth == 0 && (ch == '+' || ch == '-') && !cur.empty()) {
            pieces.push_back({cur, cur_neg});
            cur.clear();
            cur_neg = ch == '-';
            continue;
        }
        if (depth == 0 && ch == '-' && cur.empty() && pieces.empty()) {
            cur_neg = true;
            continue;
        }
        cur += ch;
    }
    if (!cur.empty()) pieces.push_back({cur, cur_neg});

    auto trim = [](std::string s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(0, 1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
        return s;
    };

    std::optional<GroupElem> precision;
    std::vector<std::pair<GroupElem, Value>> terms;
    for (auto& piece : pieces) {
        std::string p = trim(piece.body);
        require(!p.empty(), errc::ParseError, "empty series term in \"" + text + "\"");
        if (p.size() >= 2 && p[0] == 'O') {
            std::string inner = trim(p.substr(1));
            require(inner.size() >= 2 && inner.front() == '(' && inner.back() == ')',
                    errc::ParseError, "malformed precision term in \"" + text + "\"");
            inner = trim(inner.substr(1, inner.size() - 2));
            require(inner.size() >= 1 && inner[0] == 'x', errc::ParseError,
                    "precision term must be a power of x");
            std::string exp = trim(inner.substr(1));
            GroupElem e = GroupElem::zero(spec->group);
            if (exp.empty()) {
                // O(x) means exponent of value 1
                require(spec->group.kind == OrderedGroup::Kind::RatRank1 ||
                            spec->group.rank == 1,
                        errc::ParseError, "bare x is ambiguous over " + spec->group.describe());
                e = spec->group.kind == OrderedGroup::Kind::RatRank1
                        ? GroupElem::of(spec->group, {spec->group.denom})
                        : GroupElem::of(spec->group, {BigInt(1)});
            } else {
                require(exp[0] == '^', errc::ParseError, "expected '^' in precision term");
                e = parse_group_elem(trim(exp.substr(1)), spec->group);
            }
            require(!precision.has_value(), errc::ParseError, "two precision terms");
            precision = e;
            continue;
        }
        // locate a top-level bare 'x'
        std::size_t xpos = std::string::npos;
        int d = 0;
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (p[i] == '(') ++d;
            if (p[i] == ')') --d;
            bool left_ok = i == 0 || !std::isalnum(static_cast<unsigned char>(p[i - 1]));
            bool right_ok =
                i + 1 >= p.size() || !std::isalnum(static_cast<unsigned char>(p[i + 1]));
            if (d == 0 && p[i] == 'x' && left_ok && right_ok) {
                xpos = i;
                break;
            }
        }
        std::string coeff_text = "1";
        GroupElem exp = GroupElem::zero(spec->group);
        if (xpos == std::string::npos) {
            coeff_text = p;
        } else {
            std::string before = trim(p.substr(0, xpos));
            if (!before.empty()) {
                if (before.back() == '*') before.pop_back();
                before = trim(before);
            }
            if (!before.empty()) coeff_text = before;
            std::string after = trim(p.substr(xpos + 1));
            if (after.empty()) {
                exp = GroupElem::min_positive(spec->group);
                if (spec->group.kind == OrderedGroup::Kind::RatRank1)
                    exp = GroupElem::of(spec->group, {spec->group.denom});  // value 1
                else
                    require(spec->group.rank == 1, errc::ParseError,
                            "bare x is ambiguous over " + spec->group.describe());
            } else {
                require(after[0] == '^', errc::ParseError,
                        "expected '^' after x in \"" + text + "\"");
                exp = parse_group_elem(trim(after.substr(1)), spec->group);
            }
        }
        Value c = parse_value(coeff_text, spec->residue);
        if (piece.negative) c = c.neg();
        terms.emplace_back(exp, c);
    }
    require(precision.has_value(), errc::ParseError,
            "series needs an explicit O(x^...) precision term");
    return GenSeries::from_terms(spec, terms, *precision);
}

GenSeries sample_series(const ValSpecPtr& spec, const GroupElem& precision, Rng& rng,
                        int max_terms) {
    GenSeries s(spec, precision);
    int n = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_terms + 1)));
    std::vector<std::pair<GroupElem, Value>> terms;
    for (int t = 0; t < n; ++t) {
        // sample a nonnegative exponent below the precision cut
        for (int tries = 0; tries < 16; ++tries) {
            GroupElem e = sample_group_elem(spec->group, rng, 6);
            if (!e.nonneg()) e = group_neg(e);
            if (group_cmp(e, precision) < 0) {
                SampleOptions opt;
                opt.max_terms = 2;
                opt.max_degree = 1;
                terms.emplace_back(e, sample_value(spec->residue, rng, opt));
                break;
            }
        }
    }
    return GenSeries::from_terms(spec, terms, precision);
}

}  // namespace orc
