#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "socle/filtration.hpp"
#include "socle/socle.hpp"

namespace socle {

struct CheckOptions {
    std::uint64_t seed = 0;
    int depth_trials = 6;
    std::vector<unsigned> depth_degrees{1, 2};
    /// Search range for the deep distinguished witness q with N(q) = sum_j r_j.
    unsigned deep_min_degree = 1;
    unsigned deep_max_degree = 5;
    int sops_per_degree = 3;
};

struct QuotientDetail {
    int index = 0;
    int dimension = 0;
    int depth = 0;
    bool is_cm = false;
    std::optional<int> type;
};

struct DeepWitness {
    std::vector<std::string> generators;
    unsigned degree = 0;
    std::uint64_t index_of_reducibility = 0;
};

struct PropertyReport {
    std::string ring_id;
    int dimension = 0;
    int depth = 0;
    bool is_regular = false;
    bool is_cm = false;
    bool is_gorenstein = false;
    /// Absent when no dimension filtration is available.
    std::optional<bool> is_seq_cm;
    std::optional<int> cm_type;
    /// r_j for 0 <= j <= d, present only for sequentially CM rings.
    std::optional<std::map<int, int>> socle_invariants;
    std::vector<int> lambda;
    std::vector<QuotientDetail> quotients;
    std::optional<DeepWitness> deep_witness;
    std::vector<std::string> notes;
};

/// HF(R, 1) equals dim R, i.e. the localization at m is regular.
bool is_regular(const RingHandle& ring);

struct CmResult {
    bool is_cm = false;
    DepthResult depth;
};
CmResult is_cohen_macaulay(const RingHandle& ring, std::uint64_t seed = 0);

/// N(q; R) for a parameter ideal q of a CM ring. Throws PreconditionError when R is not CM.
int cm_type(const RingHandle& ring, std::uint64_t seed = 0);
bool is_gorenstein(const RingHandle& ring, std::uint64_t seed = 0);

/// Full property decision, including the filtration quotients and, for
/// sequentially CM rings, the r_j and a deep distinguished witness.
PropertyReport is_sequentially_cm(const RingHandle& ring, const CheckOptions& options = {});

/// r_j(R) for sequentially CM R: type(C_i) at j = d_i, zero elsewhere in 0..d.
/// Throws PreconditionError otherwise.
std::map<int, int> socle_invariants_seqcm(const RingHandle& ring, std::uint64_t seed = 0);

/// Search for a distinguished q inside m^k with N(q; R) = sum_j r_j, escalating
/// k from `min_degree`. Returns nothing when the cap is reached.
std::optional<ParameterSystem> deep_distinguished_sop(const RingHandle& ring, int r_total, unsigned min_degree,
                                                      unsigned max_degree, int tries_per_degree, Rng& rng);

/// A random system of parameters made of forms of `degree`.
ParameterSystem random_sop(const RingHandle& ring, unsigned degree, Rng& rng, int max_attempts = 20);

enum class Verdict {
    confirmed,
    refuted_as_expected,
    inconclusive,
    /// Hypothesis holds but a witness violates the conclusion.
    contradicted,
    /// Hypothesis fails but every sampled witness satisfies the conclusion.
    not_witnessed,
    /// A standing assumption fails, or the needed invariants are unavailable.
    not_applicable,
};

std::string to_string(Verdict v);
Verdict parse_verdict(const std::string& s);

struct Comparison {
    std::string quantity;
    std::string predicted;
    std::string computed;
    bool holds = true;
};

struct VerificationReport {
    std::string theorem;
    std::string ring_id;
    std::map<std::string, std::string> parameters;
    bool hypothesis = false;
    std::vector<Comparison> comparisons;
    Verdict verdict = Verdict::inconclusive;
    std::vector<std::string> witnesses;
    std::vector<std::string> notes;
};

struct VerifyParams {
    std::uint64_t seed = 0;
    int sops_per_theorem = 5;
    int n_cap = kDefaultSampleCap;
    unsigned degree = 2;
    int lemma_n_max = 4;
    CheckOptions check;
};

/// Ids accepted by verify_theorem.
const std::vector<std::string>& theorem_ids();

/// Replays one characterization on `ring`. `properties` is the ring's report from
/// is_sequentially_cm (computed when absent). Throws PreconditionError for unknown ids.
VerificationReport verify_theorem(const std::string& theorem, const RingHandle& ring, const VerifyParams& params,
                                  const PropertyReport* properties = nullptr);

}  // namespace socle
