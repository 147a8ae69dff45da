#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "socle/checkers.hpp"
#include "socle/ideal.hpp"
#include "socle/ring.hpp"

namespace socle {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kCorpusSchemaVersion = 1;
inline constexpr int kReportSchemaVersion = 1;

using Json = nlohmann::ordered_json;

struct CorpusEntry {
    std::string id;
    FieldSpec field;
    std::vector<std::string> variables;
    std::vector<std::string> defining_generators;
    std::optional<std::vector<std::vector<std::string>>> supplied_decomposition;
    /// Property name to expected value, compared against check/verify output.
    Json expected = Json::object();
};

struct Corpus {
    std::string id;
    std::vector<CorpusEntry> entries;

    const CorpusEntry* find(const std::string& entry_id) const;
};

/// Throws PreconditionError on schema violations and ParseError on bad polynomials.
Corpus parse_corpus(const Json& doc);
Corpus load_corpus(const std::filesystem::path& path);
Json to_json(const Corpus& corpus);

/// Builds and validates the ring, including any supplied decomposition.
RingHandle build_ring(const CorpusEntry& entry);

struct Failure {
    std::string ring_id;
    /// "inconclusive", "contradicted", "expectation" or "error".
    std::string kind;
    std::string detail;
    friend bool operator==(const Failure&, const Failure&) = default;
};

struct RingRun {
    std::string ring_id;
    std::optional<PropertyReport> properties;
    std::vector<VerificationReport> verifications;
    /// Stage name to milliseconds; filled only when timings are requested.
    std::map<std::string, double> timings;
};

struct RunReport {
    std::string tool_version = kToolVersion;
    std::string corpus_id;
    std::string command;
    std::uint64_t seed = 0;
    std::vector<RingRun> rings;
    std::vector<Failure> failures;

    bool ok() const noexcept { return failures.empty(); }
};

Json to_json(const PropertyReport& r);
Json to_json(const VerificationReport& r);
Json to_json(const RunReport& r);
PropertyReport property_report_from_json(const Json& j);
VerificationReport verification_report_from_json(const Json& j);
/// Throws PreconditionError on an unknown schema version.
RunReport run_report_from_json(const Json& j);

struct RunOptions {
    VerifyParams verify;
    /// Empty runs every theorem.
    std::vector<std::string> theorems;
    /// Only these entries; empty runs all of them.
    std::vector<std::string> ring_ids;
    bool run_verify = false;
    bool timings = false;
    /// 0 picks the hardware concurrency.
    unsigned jobs = 0;
};

/// Runs check (and verify when requested) on every selected entry in parallel.
/// Rings appear in corpus order whatever the completion order.
RunReport run_corpus(const Corpus& corpus, const RunOptions& options);

/// One file per basis under `dir`, named by a hash of the canonical key; the key
/// is stored in the file and compared on load. Unreadable entries are ignored.
class DiskGroebnerStore : public GroebnerStore {
public:
    explicit DiskGroebnerStore(std::filesystem::path dir);

    std::optional<std::vector<Polynomial>> load(const RingPtr& ring, const std::vector<Polynomial>& gens) override;
    void save(const RingPtr& ring, const std::vector<Polynomial>& gens, const GroebnerBasis& gb) override;

    const std::filesystem::path& directory() const noexcept { return dir_; }
    std::filesystem::path path_for(const std::string& key) const;

    /// Canonical text of (field, variables, order, sorted monic generators).
    static std::string canonical_key(const RingPtr& ring, const std::vector<Polynomial>& gens);

private:
    std::filesystem::path dir_;
};

/// Environment variable naming the cache directory.
inline constexpr const char* kCacheEnv = "SOCLE_GB_CACHE";

/// Entry point of the ringtool binary. Returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace socle
