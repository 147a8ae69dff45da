#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "socle/ring.hpp"

namespace socle {

/// Representatives of a k-basis of the socle (J : m)/J of P/J, graded by degree.
/// J must be homogeneous and m-primary in P. Computed degree by degree as the
/// common kernel of multiplication by the variables on standard monomials.
std::vector<Polynomial> socle_basis(const Ideal& J);

/// J : m for an m-primary homogeneous ideal of R. Throws PreconditionError otherwise.
RIdeal socle_ideal(const RIdeal& J);

/// N(J; M) = l([JM :_M m] / JM). Throws PreconditionError when M/JM has infinite length.
std::uint64_t index_of_reducibility(const RIdeal& J, const SubquotientModule& M);
std::uint64_t index_of_reducibility(const RIdeal& J);

/// Powers J, J^2, ... computed incrementally and kept, so their Groebner bases are reused.
class PowerChain {
public:
    explicit PowerChain(RIdeal base) : powers_{std::move(base)} {}

    const RIdeal& base() const noexcept { return powers_.front(); }
    /// J^k, k >= 1.
    const RIdeal& power(unsigned k);

private:
    std::vector<RIdeal> powers_;
};

/// l(M / J^{n+1} M) for n = 0..n_max.
std::vector<std::int64_t> hilbert_samuel_values(PowerChain& chain, const SubquotientModule& M, int n_max);
std::vector<std::int64_t> hilbert_samuel_values(const RIdeal& J, const SubquotientModule& M, int n_max);
/// N(J^{n+1}; M) for n = 0..n_max.
std::vector<std::int64_t> socle_function_values(PowerChain& chain, const SubquotientModule& M, int n_max);
std::vector<std::int64_t> socle_function_values(const RIdeal& J, const SubquotientModule& M, int n_max);

enum class FitBasis { hilbert_samuel, socle };

struct CoefficientFit {
    /// (n, value) samples.
    std::vector<std::pair<int, std::int64_t>> values;
    int degree_bound = 0;
    FitBasis basis = FitBasis::hilbert_samuel;
    /// e_0..e_d or f_0..f_{d-1}.
    std::vector<std::int64_t> coefficients;
    int stabilization_index = 0;
    int window_used = 0;

    /// The fitted polynomial at n.
    std::int64_t evaluate(int n) const;
};

/// Fits sum_i (-1)^i c_i binom(n + D - i, D - i), D = d (Hilbert-Samuel) or d - 1
/// (socle; D = 0 when d = 0), to the samples from the smallest index s that leaves at
/// least D + 2 samples, all matched exactly. Throws FitError when no such s exists.
CoefficientFit fit_binomial(const std::vector<std::pair<int, std::int64_t>>& values, int d, FitBasis basis);

inline constexpr int kDefaultInitialSamples = 6;
inline constexpr int kDefaultSampleCap = 12;

/// e_i(J; M) with the sample range doubled from `n_start` up to `n_cap` until a fit succeeds.
CoefficientFit hilbert_coefficients(PowerChain& chain, const SubquotientModule& M, int n_cap = kDefaultSampleCap,
                                    int n_start = kDefaultInitialSamples);
CoefficientFit hilbert_coefficients(const RIdeal& J, const SubquotientModule& M, int n_cap = kDefaultSampleCap);
/// f_i(J; M), same sampling policy.
CoefficientFit noetherian_coefficients(PowerChain& chain, const SubquotientModule& M, int n_cap = kDefaultSampleCap,
                                       int n_start = kDefaultInitialSamples);
CoefficientFit noetherian_coefficients(const RIdeal& J, const SubquotientModule& M, int n_cap = kDefaultSampleCap);

struct StabilityReport {
    bool holds = true;
    /// First n with q^{n+1} : m != q^n (q : m).
    std::optional<int> first_failure;
    int n_max = 0;
};

/// Tests q^{n+1} : m = q^n (q : m) for n = 1..n_max.
StabilityReport check_socle_stability(const RIdeal& q, int n_max);
StabilityReport check_socle_stability(PowerChain& chain, int n_max);

/// Tests I^2 = q I for I = q : m. Requires q m-primary with generators of degree >= 2.
bool check_stable_socle_square(const RIdeal& q);

}  // namespace socle
