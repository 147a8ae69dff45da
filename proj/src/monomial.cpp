#include "socle/monomial.hpp"

#include <algorithm>
#include <string>

#include "socle/errors.hpp"

namespace socle {

Monomial::Monomial(std::size_t nvars) {
    if (nvars > kMaxVariables) throw PreconditionError("Monomial", "too many variables");
    nvars_ = static_cast<std::uint8_t>(nvars);
}

Monomial::Monomial(std::span<const std::uint32_t> exponents) : Monomial(exponents.size()) {
    for (std::size_t i = 0; i < exponents.size(); ++i) set(i, exponents[i]);
}

Monomial::Monomial(std::initializer_list<std::uint32_t> exponents)
    : Monomial(std::span<const std::uint32_t>(exponents.begin(), exponents.size())) {}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, std::uint32_t power) {
    Monomial m(nvars);
    m.set(index, power);
    return m;
}

void Monomial::set(std::size_t i, std::uint32_t e) {
    if (e > 0xFFFFu) throw PreconditionError("Monomial", "exponent overflow");
    degree_ = degree_ - exps_[i] + e;
    exps_[i] = static_cast<Exponent>(e);
}

std::vector<std::uint32_t> Monomial::exponents() const {
    return {exps_.begin(), exps_.begin() + nvars_};
}

std::size_t Monomial::support_size() const noexcept {
    return static_cast<std::size_t>(std::count_if(exps_.begin(), exps_.begin() + nvars_, [](Exponent e) { return e > 0; }));
}

bool Monomial::divides(const Monomial& other) const noexcept {
    if (degree_ > other.degree_) return false;
    for (std::size_t i = 0; i < nvars_; ++i)
        if (exps_[i] > other.exps_[i]) return false;
    return true;
}

Monomial Monomial::quotient_of(const Monomial& numerator) const {
    Monomial q = numerator;
    for (std::size_t i = 0; i < nvars_; ++i) q.exps_[i] = static_cast<Exponent>(numerator.exps_[i] - exps_[i]);
    q.degree_ = numerator.degree_ - degree_;
    return q;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (std::size_t i = 0; i < a.nvars_; ++i) {
        const std::uint32_t e = std::uint32_t{a.exps_[i]} + b.exps_[i];
        if (e > 0xFFFFu) throw PreconditionError("Monomial", "exponent overflow");
        r.exps_[i] = static_cast<Monomial::Exponent>(e);
    }
    r.degree_ = a.degree_ + b.degree_;
    return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.nvars_);
    for (std::size_t i = 0; i < a.nvars_; ++i) r.set(i, std::max(a.exps_[i], b.exps_[i]));
    return r;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial r(a.nvars_);
    for (std::size_t i = 0; i < a.nvars_; ++i) r.set(i, std::min(a.exps_[i], b.exps_[i]));
    return r;
}

Monomial colon(const Monomial& a, const Monomial& b) {
    Monomial r(a.nvars_);
    for (std::size_t i = 0; i < a.nvars_; ++i) r.set(i, a.exps_[i] > b.exps_[i] ? a.exps_[i] - b.exps_[i] : 0);
    return r;
}

bool coprime(const Monomial& a, const Monomial& b) noexcept {
    for (std::size_t i = 0; i < a.nvars_; ++i)
        if (a.exps_[i] && b.exps_[i]) return false;
    return true;
}

Monomial Monomial::resized(std::size_t n) const {
    Monomial r(n);
    for (std::size_t i = 0; i < std::min<std::size_t>(n, nvars_); ++i) r.set(i, exps_[i]);
    return r;
}

std::size_t Monomial::hash() const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (std::size_t i = 0; i < nvars_; ++i) h = (h ^ exps_[i]) * 1099511628211ull;
    return h;
}

namespace {

// Reverse-lexicographic tie break on [lo, hi): the monomial with the smaller
// exponent in the last differing variable is the larger one.
std::strong_ordering revlex_tail(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) noexcept {
    for (std::size_t i = hi; i-- > lo;) {
        if (a[i] != b[i]) return a[i] < b[i] ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return std::strong_ordering::equal;
}

std::uint32_t partial_degree(const Monomial& a, std::size_t lo, std::size_t hi) noexcept {
    std::uint32_t s = 0;
    for (std::size_t i = lo; i < hi; ++i) s += a[i];
    return s;
}

}  // namespace

std::strong_ordering compare_unchecked(const Monomial& a, const Monomial& b, const MonomialOrder& order) noexcept {
    const std::size_t n = a.size();
    switch (order.kind) {
        case MonomialOrder::Kind::degrevlex:
            if (a.degree() != b.degree()) return a.degree() <=> b.degree();
            return revlex_tail(a, b, 0, n);
        case MonomialOrder::Kind::lex:
            for (std::size_t i = 0; i < n; ++i)
                if (a[i] != b[i]) return a[i] <=> b[i];
            return std::strong_ordering::equal;
        case MonomialOrder::Kind::block_elimination: {
            const std::size_t split = std::min(order.block_split, n);
            const auto da = partial_degree(a, split, n);
            const auto db = partial_degree(b, split, n);
            if (da != db) return da <=> db;
            if (auto c = revlex_tail(a, b, split, n); c != 0) return c;
            const auto ra = a.degree() - da;
            const auto rb = b.degree() - db;
            if (ra != rb) return ra <=> rb;
            return revlex_tail(a, b, 0, split);
        }
    }
    return std::strong_ordering::equal;
}

std::strong_ordering compare_monomials(const Monomial& a, const Monomial& b, const MonomialOrder& order) {
    if (a.size() != b.size()) throw PreconditionError("compare_monomials", "exponent vectors have different lengths");
    return compare_unchecked(a, b, order);
}

std::string to_string(const MonomialOrder& order) {
    switch (order.kind) {
        case MonomialOrder::Kind::degrevlex: return "degrevlex";
        case MonomialOrder::Kind::lex: return "lex";
        case MonomialOrder::Kind::block_elimination: return "elim:" + std::to_string(order.block_split);
    }
    return "?";
}

MonomialOrder parse_order(const std::string& text) {
    if (text == "degrevlex" || text == "grevlex") return MonomialOrder::degrevlex();
    if (text == "lex") return MonomialOrder::lex();
    if (text.rfind("elim:", 0) == 0) return MonomialOrder::eliminate_from(std::stoul(text.substr(5)));
    throw PreconditionError("parse_order", "unknown monomial order '" + text + "'");
}

}  // namespace socle
