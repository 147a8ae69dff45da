#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "socle/cli.hpp"
#include "socle/errors.hpp"
#include "socle/parser.hpp"

using namespace socle;

namespace {

namespace fs = std::filesystem;

struct CliRun {
    int code;
    std::string out, err;
};

CliRun cli(std::vector<std::string> args) {
    args.insert(args.begin(), "ringtool");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch_dir(const std::string& name) {
    const auto dir = fs::temp_directory_path() / ("socle_test_" + name + "_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()));
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

const char* kSmallCorpus = R"({
  "schema_version": 1,
  "corpus_id": "small",
  "entries": [
    {"id": "R2", "variables": ["x", "y"], "defining": [],
     "expected": {"is_cm": true, "depth": 2, "verdicts": {"prop_coe": "confirmed"}}},
    {"id": "seqcm", "variables": ["x", "y", "z"], "defining": ["x*y", "x*z"],
     "expected": {"depth": 1, "is_seq_cm": true}}
  ]
})";

fs::path write_file(const fs::path& dir, const std::string& name, const std::string& text) {
    const auto p = dir / name;
    std::ofstream(p) << text;
    return p;
}

}  // namespace

TEST(Corpus, ParseAndSerialize) {
    const Corpus c = parse_corpus(Json::parse(kSmallCorpus));
    ASSERT_EQ(c.entries.size(), 2u);
    EXPECT_EQ(c.id, "small");
    EXPECT_EQ(c.entries[1].defining_generators, (std::vector<std::string>{"x*y", "x*z"}));
    EXPECT_TRUE(c.entries[0].field.is_rational());
    EXPECT_EQ(parse_corpus(to_json(c)).entries[1].expected, c.entries[1].expected);
    EXPECT_EQ(build_ring(c.entries[1])->dimension(), 2);
}

TEST(Corpus, Rejects) {
    EXPECT_THROW(parse_corpus(Json::parse(R"({"schema_version": 9, "entries": []})")), PreconditionError);
    EXPECT_THROW(parse_corpus(Json::parse(R"J({"schema_version": 1, "entries": [{"id": "a", "variables": ["x"], "field": "GF(4)"}]})J")),
                 PreconditionError);
    const Corpus bad = parse_corpus(Json::parse(R"({"schema_version": 1, "entries": [{"id": "a", "variables": ["x"], "defining": ["x^"]}]})"));
    EXPECT_THROW(build_ring(bad.entries[0]), ParseError);
    const Corpus dec = parse_corpus(Json::parse(
        R"({"schema_version": 1, "entries": [{"id": "a", "variables": ["x", "y"], "defining": ["x^2 + y^2"], "decomposition": [["x + y"]]}]})"));
    // A supplied decomposition that does not intersect to the defining ideal is refused on use.
    RunOptions o;
    const auto report = run_corpus(dec, o);
    ASSERT_EQ(report.failures.size(), 1u);
    EXPECT_EQ(report.failures[0].kind, "error");
}

TEST(Corpus, DefaultCorpusLoads) {
    const Corpus c = load_corpus(SOCLE_SOURCE_DIR "/corpus/default.json");
    EXPECT_GE(c.entries.size(), 6u);
    for (const auto& e : c.entries) EXPECT_NO_THROW(build_ring(e)) << e.id;
}

TEST(Report, RoundTripIsLossless) {
    const Corpus c = parse_corpus(Json::parse(kSmallCorpus));
    RunOptions o;
    o.run_verify = true;
    o.theorems = {"prop_coe", "thm_6_1", "lemma_3_700"};
    o.verify.seed = 5;
    const RunReport r = run_corpus(c, o);
    EXPECT_TRUE(r.ok());
    const Json j = to_json(r);
    const RunReport back = run_report_from_json(Json::parse(j.dump()));
    EXPECT_EQ(to_json(back), j);
    EXPECT_EQ(back.rings.size(), 2u);
    EXPECT_EQ(back.rings[1].properties->socle_invariants, r.rings[1].properties->socle_invariants);
    Json old = j;
    old["schema_version"] = 0;
    EXPECT_THROW(run_report_from_json(old), PreconditionError);
}

TEST(Report, DocumentedExampleParses) {
    std::ifstream in(SOCLE_SOURCE_DIR "/docs/report_example.json");
    ASSERT_TRUE(in.good());
    const Json j = Json::parse(in);
    EXPECT_EQ(j.at("schema_version"), kReportSchemaVersion);
    EXPECT_EQ(to_json(run_report_from_json(j)), j);
}

TEST(Report, ParallelMatchesSerial) {
    const Corpus c = parse_corpus(Json::parse(kSmallCorpus));
    RunOptions o;
    o.run_verify = true;
    o.theorems = {"prop_P2_7"};
    o.jobs = 1;
    const auto serial = to_json(run_corpus(c, o)).dump();
    o.jobs = 4;
    EXPECT_EQ(to_json(run_corpus(c, o)).dump(), serial);
}

TEST(Report, ExpectationMismatchFails) {
    Json doc = Json::parse(kSmallCorpus);
    doc["entries"][0]["expected"]["depth"] = 1;
    const auto r = run_corpus(parse_corpus(doc), {});
    ASSERT_EQ(r.failures.size(), 1u);
    EXPECT_EQ(r.failures[0].kind, "expectation");
    EXPECT_EQ(r.failures[0].ring_id, "R2");
}

TEST(Cache, KeyIsCanonical) {
    const auto P = PolyRing::make({"x", "y"});
    const auto a = parse_polynomial_list("x^2, 2*x*y + 2*y^2", P);
    const auto b = parse_polynomial_list("x*y + y^2, x^2, x^2", P);
    EXPECT_EQ(DiskGroebnerStore::canonical_key(P, a), DiskGroebnerStore::canonical_key(P, b));
    const auto Q = PolyRing::make({"x", "y"}, FieldSpec::prime(32003));
    EXPECT_NE(DiskGroebnerStore::canonical_key(P, a), DiskGroebnerStore::canonical_key(Q, parse_polynomial_list("x^2, x*y + y^2", Q)));
}

TEST(Cache, ColdWarmAndCorruptAgree) {
    const auto dir = scratch_dir("cache");
    const auto corpus = write_file(dir, "corpus.json", kSmallCorpus);
    const std::vector<std::string> args{"--cache-dir", (dir / "gb").string(), "verify", "--corpus", corpus.string(),
                                        "--theorems", "prop_P2_7,thm_6_7", "--seed", "2"};
    const CliRun none = cli({"--no-cache", "verify", "--corpus", corpus.string(), "--theorems", "prop_P2_7,thm_6_7", "--seed", "2"});
    const CliRun cold = cli(args);
    ASSERT_EQ(cold.code, 0) << cold.err;
    std::size_t files = 0;
    for (const auto& e : fs::directory_iterator(dir / "gb")) {
        ++files;
        EXPECT_EQ(e.path().extension(), ".json");
    }
    EXPECT_GT(files, 0u);
    const CliRun warm = cli(args);
    // Damage every entry: truncate half of them, point the rest at another key.
    std::size_t k = 0;
    for (const auto& e : fs::directory_iterator(dir / "gb")) {
        if (k++ % 2 == 0) {
            std::ofstream(e.path(), std::ios::trunc) << "{\"key\": ";
        } else {
            std::ofstream(e.path(), std::ios::trunc) << R"({"key": "other", "basis": ["1"]})";
        }
    }
    const CliRun corrupt = cli(args);
    EXPECT_EQ(none.out, cold.out);
    EXPECT_EQ(cold.out, warm.out);
    EXPECT_EQ(cold.out, corrupt.out);
    fs::remove_all(dir);
}

TEST(Cache, WrongBasisWithMatchingKeyIsIgnored) {
    const auto dir = scratch_dir("forged");
    DiskGroebnerStore store(dir);
    const auto P = PolyRing::make({"x", "y", "z"});
    std::vector<Polynomial> gens;
    for (const char* s : {"x^3 + y^3 + z^3 + x*y*z + x^2*y + y^2*z", "x^2*z + y*z^2 + x*y^2 + z^3 + x*z^2 + y^3",
                          "x*y*z + x^3 + y^2*z + z^2*x + y^3 + x^2*y", "x^3 - y^3 + z^3 - x*y*z + x*z^2 - y*z^2"})
        gens.push_back(parse_polynomial(s, P));
    const std::string key = DiskGroebnerStore::canonical_key(P, gens);
    std::ofstream(store.path_for(key)) << Json{{"key", key}, {"basis", {"x"}}}.dump();
    EXPECT_FALSE(store.load(P, gens).has_value());
    fs::remove_all(dir);
}

TEST(Cli, RingCommands) {
    auto r = cli({"ring", "gb", "--vars", "x,y", "--gens", "x^2, x*y+y^2"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "{x*y + y^2, x^2, y^3}\n");
    EXPECT_EQ(cli({"ring", "length", "--gens", "x^2,y^2"}).out, "4\n");
    EXPECT_EQ(cli({"ring", "dim", "--vars", "x,y,z", "--gens", "x*y,x*z"}).out, "2\n");
    EXPECT_EQ(cli({"ring", "hf", "--gens", "x^2,y^2", "--max-degree", "3"}).out, "1 2 1 0\n");
    EXPECT_EQ(cli({"ring", "intersect", "--gens", "x^2,y", "--other", "x"}).out, "{x*y, x^2}\n");
    EXPECT_EQ(cli({"ring", "power", "--gens", "x,y", "--k", "2"}).out, "{y^2, x*y, x^2}\n");
    EXPECT_EQ(cli({"ring", "saturate", "--vars", "x,y,z", "--gens", "x*z, y*z, z^2"}).out, "{z}\nexponent 1\n");
}

TEST(Cli, ErrorsAreReported) {
    auto r = cli({"ring", "gb", "--vars", "x,y", "--gens", "x^2 + "});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("position"), std::string::npos);
    r = cli({"ring", "length", "--gens", "x*y"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("artinian_length"), std::string::npos);
    EXPECT_EQ(cli({"bogus"}).code, 2);
}

TEST(Cli, SocleCommands) {
    EXPECT_EQ(cli({"socle", "noether-coeffs", "--ring", "R2", "--ideal", "x^2,y^2"}).out.rfind("f = (1, 0)", 0), 0u);
    EXPECT_EQ(cli({"socle", "index", "--ring", "R2", "--ideal", "x^2,x*y,y^2"}).out, "2\n");
    EXPECT_EQ(cli({"socle", "hilbert-coeffs", "--ring", "R2", "--ideal", "x^2,x*y,y^2"}).out.rfind("e = (4, 1, 0)", 0), 0u);
    EXPECT_EQ(cli({"socle", "socle-values", "--ring", "R2", "--ideal", "x^2,y^2", "--n-max", "3"}).out, "1 2 3 4\n");
    const auto j = Json::parse(cli({"socle", "socle", "--vars", "x,y,z", "--defining", "x*y,x*z", "--ideal", "x, y^2, z^2", "--json"}).out);
    EXPECT_TRUE(j.contains("socle"));
    auto r = cli({"socle", "index", "--ring", "R2", "--ideal", "x"});
    EXPECT_EQ(r.code, 2);
    r = cli({"socle", "noether-coeffs", "--ring", "R2", "--ideal", "x^2,y^2", "--n-cap", "1"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("--n-cap"), std::string::npos);
}

TEST(Cli, CheckAndVerifyExitCodes) {
    const auto dir = scratch_dir("exit");
    const auto corpus = write_file(dir, "corpus.json", kSmallCorpus);
    auto r = cli({"--no-cache", "check", "--corpus", corpus.string()});
    EXPECT_EQ(r.code, 0) << r.err;
    const Json rep = Json::parse(r.out);
    EXPECT_EQ(rep["rings"][1]["properties"]["depth"], 1);
    EXPECT_FALSE(rep["rings"][0].contains("timings_ms"));

    r = cli({"--no-cache", "verify", "--corpus", corpus.string(), "--theorems", "prop_coe", "--seed", "7", "--rings", "R2"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(Json::parse(r.out)["rings"][0]["verifications"][0]["verdict"], "confirmed");

    r = cli({"--no-cache", "check", "--corpus", corpus.string(), "--timings", "--rings", "R2"});
    EXPECT_TRUE(Json::parse(r.out)["rings"][0].contains("timings_ms"));

    Json doc = Json::parse(kSmallCorpus);
    doc["entries"][1]["expected"]["is_cm"] = true;
    const auto bad = write_file(dir, "bad.json", doc.dump());
    r = cli({"--no-cache", "check", "--corpus", bad.string(), "-o", (dir / "out.json").string()});
    EXPECT_EQ(r.code, 1);
    EXPECT_TRUE(r.out.empty());
    const Json failures = Json::parse(r.err);
    EXPECT_EQ(failures["failures"][0]["kind"], "expectation");
    EXPECT_TRUE(fs::exists(dir / "out.json"));
    EXPECT_EQ(cli({"verify", "--corpus", corpus.string(), "--theorems", "nope"}).code, 2);
    fs::remove_all(dir);
}
