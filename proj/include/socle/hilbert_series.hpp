#pragma once

#include <gmpxx.h>
#include <span>
#include <vector>

#include "socle/monomial.hpp"

namespace socle {

/// Univariate integer polynomial in t, coefficient of t^k at index k.
using SeriesPoly = std::vector<mpz_class>;

/// Numerator N(t) of the Hilbert series N(t)/(1-t)^n of P/(gens) in n variables,
/// for a monomial ideal with standard grading. Computed by pivot splitting
/// N(I) = N(I + (p)) + t^deg(p) N(I : p).
SeriesPoly hilbert_numerator(std::span<const Monomial> gens, std::size_t nvars);

/// Minimal generators of the monomial ideal spanned by `gens`, sorted.
std::vector<Monomial> minimalize(std::vector<Monomial> gens);

/// Divides p by (1 - t) repeatedly, at most `times` times. Returns the number of
/// exact divisions performed and replaces p by the quotient.
std::size_t divide_by_one_minus_t(SeriesPoly& p, std::size_t times);

}  // namespace socle
