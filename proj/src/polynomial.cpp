#include "socle/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "socle/errors.hpp"

namespace socle {

namespace {

bool is_identifier(const std::string& s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

}  // namespace

RingPtr PolyRing::make(std::vector<std::string> variables, FieldSpec field, MonomialOrder order) {
    if (variables.empty()) throw PreconditionError("PolyRing", "at least one variable is required");
    if (variables.size() > kMaxVariables) throw PreconditionError("PolyRing", "too many variables");
    std::set<std::string> seen;
    for (const auto& v : variables) {
        if (!is_identifier(v)) throw PreconditionError("PolyRing", "invalid variable name '" + v + "'");
        if (!seen.insert(v).second) throw PreconditionError("PolyRing", "duplicate variable name '" + v + "'");
    }
    return RingPtr(new PolyRing(std::move(variables), field, order));
}

int PolyRing::index_of(const std::string& name) const {
    auto it = std::find(variables_.begin(), variables_.end(), name);
    return it == variables_.end() ? -1 : static_cast<int>(it - variables_.begin());
}

RingPtr PolyRing::with_order(MonomialOrder order) const { return make(variables_, field_, order); }

RingPtr PolyRing::with_extra_variable(const std::string& name, MonomialOrder order) const {
    auto vars = variables_;
    vars.push_back(name);
    return make(std::move(vars), field_, order);
}

bool PolyRing::same_as(const PolyRing& other) const noexcept {
    return variables_ == other.variables_ && field_ == other.field_ && order_ == other.order_;
}

std::string PolyRing::describe() const {
    std::string s = field_.to_string() + "[";
    for (std::size_t i = 0; i < variables_.size(); ++i) s += (i ? "," : "") + variables_[i];
    return s + "]/" + to_string(order_);
}

bool same_ring(const RingPtr& a, const RingPtr& b) noexcept {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->same_as(*b);
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
    const auto& field = ring->field();
    const std::size_t n = ring->nvars();
    for (auto& t : terms) {
        if (t.mono.size() != n) throw PreconditionError("Polynomial", "monomial length does not match the ring");
        t.coeff = field.normalize(t.coeff);
    }
    std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) { return ring->greater(a.mono, b.mono); });
    std::vector<Term> out;
    out.reserve(terms.size());
    for (auto& t : terms) {
        if (!out.empty() && out.back().mono == t.mono) {
            out.back().coeff = field.add(out.back().coeff, t.coeff);
        } else {
            if (!out.empty() && out.back().coeff == 0) out.pop_back();
            out.push_back(std::move(t));
        }
    }
    if (!out.empty() && out.back().coeff == 0) out.pop_back();
    Polynomial p(std::move(ring));
    p.terms_ = std::move(out);
    return p;
}

Polynomial Polynomial::from_sorted_terms(RingPtr ring, std::vector<Term> terms) {
    Polynomial p(std::move(ring));
    p.terms_ = std::move(terms);
    return p;
}

Polynomial Polynomial::constant(RingPtr ring, const Scalar& c) {
    const auto n = ring->nvars();
    return from_terms(std::move(ring), {Term{c, Monomial(n)}});
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
    const auto n = ring->nvars();
    return from_terms(std::move(ring), {Term{1, Monomial::variable(n, index)}});
}

Polynomial Polynomial::monomial(RingPtr ring, const Scalar& c, const Monomial& m) {
    return from_terms(std::move(ring), {Term{c, m}});
}

int Polynomial::degree() const noexcept {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono.degree()));
    return d;
}

bool Polynomial::is_homogeneous() const noexcept {
    return std::all_of(terms_.begin(), terms_.end(),
                       [&](const Term& t) { return t.mono.degree() == terms_.front().mono.degree(); });
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    const auto& field = ring_->field();
    if (leading_coeff() == 1) return *this;
    return scaled(field.inv(leading_coeff()));
}

Polynomial Polynomial::scaled(const Scalar& c) const {
    Polynomial r(ring_);
    if (c == 0) return r;
    const auto& field = ring_->field();
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({field.mul(t.coeff, c), t.mono});
    return r;
}

Polynomial Polynomial::mul_term(const Scalar& c, const Monomial& m) const {
    Polynomial r(ring_);
    if (c == 0) return r;
    const auto& field = ring_->field();
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({field.mul(t.coeff, c), t.mono * m});
    return r;
}

Polynomial Polynomial::pow(unsigned k) const {
    Polynomial result = constant(ring_, 1);
    Polynomial base = *this;
    while (k) {
        if (k & 1u) result = result * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return result;
}

Polynomial Polynomial::rebase(const RingPtr& target) const {
    if (!(target->field() == ring_->field())) throw RingMismatch("Polynomial::rebase (field)");
    const std::size_t n = target->nvars();
    const std::size_t m = ring_->nvars();
    for (std::size_t i = 0; i < std::min(n, m); ++i)
        if (target->variables()[i] != ring_->variables()[i]) throw RingMismatch("Polynomial::rebase (variables)");
    std::vector<Term> terms;
    terms.reserve(terms_.size());
    for (const auto& t : terms_) {
        for (std::size_t i = n; i < m; ++i)
            if (t.mono[i] != 0) throw PreconditionError("Polynomial::rebase", "dropped variable occurs");
        terms.push_back({t.coeff, t.mono.resized(n)});
    }
    return from_terms(target, std::move(terms));
}

Polynomial Polynomial::operator-() const {
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    const auto& field = ring_->field();
    for (const auto& t : terms_) r.terms_.push_back({field.neg(t.coeff), t.mono});
    return r;
}

namespace {

void check_same(const Polynomial& a, const Polynomial& b, const char* where) {
    if (!same_ring(a.ring(), b.ring())) throw RingMismatch(where);
}

// Merge of two sorted term lists, b scaled by `sign` (+1 or -1).
std::vector<Term> merge(const PolyRing& ring, const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
    const auto& field = ring.field();
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        const auto c = compare_unchecked(a[i].mono, b[j].mono, ring.order());
        if (c > 0) {
            out.push_back(a[i++]);
        } else if (c < 0) {
            out.push_back({subtract ? field.neg(b[j].coeff) : b[j].coeff, b[j].mono});
            ++j;
        } else {
            Scalar s = subtract ? field.sub(a[i].coeff, b[j].coeff) : field.add(a[i].coeff, b[j].coeff);
            if (s != 0) out.push_back({std::move(s), a[i].mono});
            ++i;
            ++j;
        }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j) out.push_back({subtract ? field.neg(b[j].coeff) : b[j].coeff, b[j].mono});
    return out;
}

}  // namespace

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    check_same(a, b, "polynomial addition");
    Polynomial r(a.ring() ? a.ring() : b.ring());
    r.terms_ = merge(*r.ring_, a.terms_, b.terms_, false);
    return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    check_same(a, b, "polynomial subtraction");
    Polynomial r(a.ring() ? a.ring() : b.ring());
    r.terms_ = merge(*r.ring_, a.terms_, b.terms_, true);
    return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    check_same(a, b, "polynomial multiplication");
    if (a.is_zero() || b.is_zero()) return Polynomial(a.ring());
    const auto& field = a.ring()->field();
    std::vector<Term> prod;
    prod.reserve(a.size() * b.size());
    for (const auto& s : a.terms_)
        for (const auto& t : b.terms_) prod.push_back({field.mul(s.coeff, t.coeff), s.mono * t.mono});
    return Polynomial::from_terms(a.ring(), std::move(prod));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() && b.is_zero()) return true;
    return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
}

void Polynomial::sub_mul_term(const Scalar& c, const Monomial& m, const Polynomial& g) {
    const auto& field = ring_->field();
    const auto& order = ring_->order();
    std::vector<Term> out;
    out.reserve(terms_.size() + g.terms_.size());
    std::size_t i = 0, j = 0;
    Monomial gm;
    bool have = false;
    while (i < terms_.size() || j < g.terms_.size()) {
        if (j < g.terms_.size() && !have) {
            gm = g.terms_[j].mono * m;
            have = true;
        }
        std::strong_ordering cmp = std::strong_ordering::greater;
        if (i < terms_.size() && j < g.terms_.size()) cmp = compare_unchecked(terms_[i].mono, gm, order);
        else if (i >= terms_.size()) cmp = std::strong_ordering::less;
        if (cmp > 0) {
            out.push_back(std::move(terms_[i++]));
        } else if (cmp < 0) {
            out.push_back({field.neg(field.mul(c, g.terms_[j].coeff)), gm});
            ++j;
            have = false;
        } else {
            Scalar s = field.sub(terms_[i].coeff, field.mul(c, g.terms_[j].coeff));
            if (s != 0) out.push_back({std::move(s), gm});
            ++i;
            ++j;
            have = false;
        }
    }
    terms_ = std::move(out);
}

std::optional<Polynomial> exact_quotient(const Polynomial& h, const Polynomial& g) {
    if (g.is_zero()) throw PreconditionError("exact_quotient", "division by zero");
    if (!h.is_zero() && !same_ring(h.ring(), g.ring())) throw RingMismatch("exact_quotient");
    const auto& field = g.ring()->field();
    const Scalar inv = field.inv(g.leading_coeff());
    Polynomial rest = h;
    std::vector<Term> quotient;
    while (!rest.is_zero()) {
        if (!g.leading_monomial().divides(rest.leading_monomial())) return std::nullopt;
        const Monomial m = g.leading_monomial().quotient_of(rest.leading_monomial());
        const Scalar c = field.mul(rest.leading_coeff(), inv);
        quotient.push_back({c, m});
        rest.sub_mul_term(c, m, g);
    }
    return Polynomial::from_sorted_terms(g.ring(), std::move(quotient));
}

Polynomial poly_arith(const Polynomial& f, const Polynomial& g, ArithOp op) {
    switch (op) {
        case ArithOp::add: return f + g;
        case ArithOp::sub: return f - g;
        case ArithOp::mul: return f * g;
    }
    throw PreconditionError("poly_arith", "unknown operation");
}

std::string to_string(const Monomial& m, const std::vector<std::string>& names) {
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (!m[i]) continue;
        if (!s.empty()) s += '*';
        s += names[i];
        if (m[i] > 1) s += '^' + std::to_string(m[i]);
    }
    return s.empty() ? "1" : s;
}

std::string to_string(const Polynomial& f) {
    if (f.is_zero()) return "0";
    const auto& names = f.ring()->variables();
    std::string out;
    bool first = true;
    for (const auto& t : f.terms()) {
        const bool negative = sgn(t.coeff) < 0;
        const Scalar mag = negative ? Scalar(-t.coeff) : t.coeff;
        if (first) out += negative ? "-" : "";
        else out += negative ? " - " : " + ";
        first = false;
        if (t.mono.is_one()) {
            out += mag.get_str();
        } else {
            if (mag != 1) out += mag.get_str() + "*";
            out += to_string(t.mono, names);
        }
    }
    return out;
}

}  // namespace socle
