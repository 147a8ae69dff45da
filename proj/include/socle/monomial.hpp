#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace socle {

/// Upper bound on the number of ring variables, including one hidden
/// elimination variable.
inline constexpr std::size_t kMaxVariables = 16;

/// Dense exponent vector with cached total degree.
class Monomial {
public:
    Monomial() = default;
    /// The monomial 1 in `nvars` variables.
    explicit Monomial(std::size_t nvars);
    Monomial(std::span<const std::uint32_t> exponents);
    Monomial(std::initializer_list<std::uint32_t> exponents);

    static Monomial variable(std::size_t nvars, std::size_t index, std::uint32_t power = 1);

    std::size_t size() const noexcept { return nvars_; }
    std::uint32_t degree() const noexcept { return degree_; }
    std::uint32_t operator[](std::size_t i) const noexcept { return exps_[i]; }
    std::vector<std::uint32_t> exponents() const;
    bool is_one() const noexcept { return degree_ == 0; }

    /// Number of variables with positive exponent.
    std::size_t support_size() const noexcept;

    bool divides(const Monomial& other) const noexcept;
    /// Precondition: divides(*this, numerator).
    Monomial quotient_of(const Monomial& numerator) const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend Monomial lcm(const Monomial& a, const Monomial& b);
    friend Monomial gcd(const Monomial& a, const Monomial& b);
    /// Exponent-wise max(a - b, 0), i.e. a / gcd(a, b).
    friend Monomial colon(const Monomial& a, const Monomial& b);
    friend bool coprime(const Monomial& a, const Monomial& b) noexcept;

    /// Same monomial with `extra` trailing zero exponents (or the first `n` exponents when shrinking).
    Monomial resized(std::size_t n) const;

    bool operator==(const Monomial& other) const noexcept {
        return nvars_ == other.nvars_ && exps_ == other.exps_;
    }

    std::size_t hash() const noexcept;

private:
    using Exponent = std::uint16_t;
    std::array<Exponent, kMaxVariables> exps_{};
    std::uint32_t degree_ = 0;
    std::uint8_t nvars_ = 0;

    void set(std::size_t i, std::uint32_t e);
};

/// Monomial orders. All orders are total, refine divisibility and are multiplicative.
struct MonomialOrder {
    enum class Kind { degrevlex, lex, block_elimination };

    Kind kind = Kind::degrevlex;
    /// For block_elimination: variables with index >= block_split form the
    /// eliminated block and are compared first (by degrevlex); ties are
    /// broken by degrevlex on the variables before block_split.
    std::size_t block_split = 0;

    static MonomialOrder degrevlex() { return {Kind::degrevlex, 0}; }
    static MonomialOrder lex() { return {Kind::lex, 0}; }
    static MonomialOrder eliminate_from(std::size_t split) { return {Kind::block_elimination, split}; }

    friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

/// Throws PreconditionError on mismatched lengths.
std::strong_ordering compare_monomials(const Monomial& a, const Monomial& b, const MonomialOrder& order);

/// Unchecked variant for inner loops; lengths must match.
std::strong_ordering compare_unchecked(const Monomial& a, const Monomial& b, const MonomialOrder& order) noexcept;

std::string to_string(const MonomialOrder& order);
MonomialOrder parse_order(const std::string& text);

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

}  // namespace socle
