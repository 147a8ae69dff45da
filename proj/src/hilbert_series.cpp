#include "socle/hilbert_series.hpp"

#include <algorithm>

namespace socle {

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a.exponents() < b.exponents();
    });
    std::vector<Monomial> out;
    for (const auto& g : gens) {
        if (std::none_of(out.begin(), out.end(), [&](const Monomial& h) { return h.divides(g); })) out.push_back(g);
    }
    return out;
}

namespace {

SeriesPoly multiply(const SeriesPoly& a, const SeriesPoly& b) {
    SeriesPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0)
            for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

void add_shifted(SeriesPoly& acc, const SeriesPoly& p, std::size_t shift) {
    if (acc.size() < p.size() + shift) acc.resize(p.size() + shift);
    for (std::size_t i = 0; i < p.size(); ++i) acc[i + shift] += p[i];
}

SeriesPoly numerator_of_minimal(const std::vector<Monomial>& G, std::size_t nvars) {
    if (G.empty()) return {1};
    if (G.front().is_one()) return {0};

    // Pairwise coprime generators form a regular sequence.
    std::vector<std::size_t> count(nvars, 0);
    for (const auto& g : G)
        for (std::size_t i = 0; i < nvars; ++i)
            if (g[i]) ++count[i];
    const auto pivot_var = static_cast<std::size_t>(std::max_element(count.begin(), count.end()) - count.begin());
    if (count[pivot_var] <= 1) {
        SeriesPoly r{1};
        for (const auto& g : G) {
            SeriesPoly f(g.degree() + 1);
            f[0] = 1;
            f[g.degree()] -= 1;
            r = multiply(r, f);
        }
        return r;
    }

    // Pivot p = x^e with e the least exponent of x among generators that are not pure powers.
    std::uint32_t e = 0;
    for (const auto& g : G)
        if (g[pivot_var] && g.support_size() > 1 && (e == 0 || g[pivot_var] < e)) e = g[pivot_var];
    const Monomial p = Monomial::variable(nvars, pivot_var, e);

    std::vector<Monomial> with_p = G;
    with_p.push_back(p);
    std::vector<Monomial> quotient;
    quotient.reserve(G.size());
    for (const auto& g : G) quotient.push_back(colon(g, p));

    SeriesPoly result = numerator_of_minimal(minimalize(std::move(with_p)), nvars);
    add_shifted(result, numerator_of_minimal(minimalize(std::move(quotient)), nvars), e);
    return result;
}

}  // namespace

SeriesPoly hilbert_numerator(std::span<const Monomial> gens, std::size_t nvars) {
    SeriesPoly r = numerator_of_minimal(minimalize({gens.begin(), gens.end()}), nvars);
    while (r.size() > 1 && r.back() == 0) r.pop_back();
    return r;
}

std::size_t divide_by_one_minus_t(SeriesPoly& p, std::size_t times) {
    std::size_t done = 0;
    while (done < times) {
        mpz_class total = 0;
        for (const auto& c : p) total += c;
        if (total != 0) break;
        SeriesPoly q(p.size() > 1 ? p.size() - 1 : 1);
        mpz_class running = 0;
        for (std::size_t k = 0; k + 1 < p.size(); ++k) {
            running += p[k];
            q[k] = running;
        }
        p = std::move(q);
        while (p.size() > 1 && p.back() == 0) p.pop_back();
        ++done;
    }
    return done;
}

}  // namespace socle
