#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "amalgam/corpus.hpp"
#include "amalgam/io.hpp"
#include "amalgam/verify.hpp"

#include <filesystem>
#include <fstream>

using namespace amalgam;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("amalgam-test-" + std::to_string(::getpid()) + "-" +
                std::to_string(counter()++));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    static int& counter() {
        static int c = 0;
        return c;
    }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

Vec vec(std::vector<long> v) { return Vec(v.begin(), v.end()); }

}  // namespace

TEST_CASE("rational json round trip") {
    CHECK(io::rational_from_json(io::rational_to_json(Rational(-7, 3))) == Rational(-7, 3));
    CHECK(io::rational_from_json(json(5)) == Rational(5));
    CHECK(io::rational_from_json(json("4/6")) == Rational(2, 3));
    CHECK_THROWS_AS(io::rational_from_json(json("1.5")), io::ParseError);
    CHECK_THROWS_AS(io::rational_from_json(json(1.5)), io::ParseError);
}

TEST_CASE("algebra file round trip is exact") {
    TempDir dir;
    for (const auto& entry : corpus::base_entries()) {
        CAPTURE(entry.name);
        std::string path = dir.file(entry.name + ".json");
        io::save_algebra(*entry.algebra, path);
        AlgebraPtr back = io::load_algebra(path);
        CHECK(back->dim() == entry.algebra->dim());
        CHECK(back->table() == entry.algebra->table());
        CHECK(back->labels() == entry.algebra->labels());
        CHECK(back->weights() == entry.algebra->weights());
    }
}

TEST_CASE("omitted weights default to one, omitted labels to e0..") {
    json j{{"dim", 2},
           {"table", json::array({json::array({json::array({"0", "0"}),
                                               json::array({"0", "0"})}),
                                  json::array({json::array({"0", "0"}),
                                               json::array({"0", "0"})})})}};
    AlgebraPtr a = io::algebra_from_json(j);
    CHECK(a->weights() == std::vector<Rational>{Rational(1), Rational(1)});
    CHECK(a->labels() == std::vector<std::string>{"e0", "e1"});
}

TEST_CASE("malformed JSON reports line and column") {
    TempDir dir;
    std::string path = dir.file("bad.json");
    {
        std::ofstream out(path);
        out << "{\n  \"dim\": 1,\n  oops\n}\n";
    }
    try {
        io::load_algebra(path);
        FAIL("expected ParseError");
    } catch (const io::ParseError& e) {
        std::string msg = e.what();
        CHECK(msg.find("line 3") != std::string::npos);
        CHECK(msg.find("column") != std::string::npos);
    }
}

TEST_CASE("a corrupted table surfaces the associativity witness") {
    json j = io::algebra_to_json(*corpus::q_times_q());
    j["table"][0][1][1] = "1";  // p q = q breaks associativity
    CHECK_THROWS_AS(io::algebra_from_json(j), AssociativityViolation);
    try {
        io::algebra_from_json(j);
    } catch (const AssociativityViolation& e) {
        // the witness re-verifies on the raw table
        CHECK(e.i < 2);
        CHECK(e.j < 2);
        CHECK(e.k < 2);
    }
}

TEST_CASE("construction descriptors build every kind") {
    TempDir dir;
    for (const auto& entry : corpus::base_entries())
        io::save_algebra(*entry.algebra, dir.file(entry.name + ".json"));

    // the named corpus descriptors reproduce the built-in instances
    auto builtin = corpus::amalgam_entries(12);
    auto find_builtin = [&](const std::string& name) -> const AmalgamResult& {
        for (const auto& e : builtin)
            if (e.name == name) return e.result;
        throw std::runtime_error("missing builtin " + name);
    };
    for (const auto& [name, desc] : corpus::named_amalgam_descriptors()) {
        CAPTURE(name);
        AmalgamResult r = io::construct_from_descriptor(desc, dir.path.string());
        CHECK(r.algebra->table() == find_builtin(name).algebra->table());
        CHECK(r.algebra->labels() == find_builtin(name).algebra->labels());
    }

    // unknown kind
    CHECK_THROWS_AS(
        io::construct_from_descriptor(json{{"kind", "mystery"}}, dir.path.string()),
        io::ParseError);

    // lau with a non-character phi names the violated pair
    json bad{{"kind", "lau"},
             {"a", "q-times-q.json"},
             {"b", "rationals.json"},
             {"phi", json::array({"1", "1"})}};
    CHECK_THROWS_WITH_AS(io::construct_from_descriptor(bad, dir.path.string()),
                         "not a character: multiplicativity fails at basis pair (0, 1)",
                         Error);
}

TEST_CASE("constructed output re-parses to the same table") {
    TempDir dir;
    io::save_algebra(*corpus::rationals(), dir.file("rationals.json"));
    json desc{{"kind", "amalgam"},
              {"a", "rationals.json"},
              {"b", "rationals.json"},
              {"theta", json::array({json::array({"1"})})},
              {"ideal", json::array({json::array({"1"})})}};
    AmalgamResult r = io::construct_from_descriptor(desc, dir.path.string());
    io::save_algebra(*r.algebra, dir.file("out.json"));
    CHECK(io::load_algebra(dir.file("out.json"))->table() == r.algebra->table());
}

TEST_CASE("spectrum and cohomology reports serialize") {
    SpectrumReport s = characters(corpus::adjoin_sqrt2());
    json js = io::spectrum_to_json(s);
    CHECK(js["complete"] == false);
    CHECK(js["obstruction"] == "x^2 - 2 irreducible");
    CHECK(js["characters"].empty());

    json jq = io::spectrum_to_json(characters(corpus::q_times_q()));
    CHECK(jq["complete"] == true);
    CHECK(jq["characters"].size() == 2);

    CohomologyReport rep = h1(corpus::dual_numbers(), dual_bimodule(corpus::dual_numbers()));
    json jc = io::cohomology_to_json(rep);
    CHECK(jc["z1_dim"] == 1);
    CHECK(jc["b1_dim"] == 0);
    CHECK(jc["h1_dim"] == 1);
    CHECK(jc["z1_basis"].size() == 1);
}

TEST_CASE("run_theorem statuses") {
    auto r = identity_amalgam(corpus::rationals());
    CHECK(run_theorem("prod-formula", "t", r).status == CheckStatus::Pass);
    CHECK(run_theorem("characters-EuF", "t", r).status == CheckStatus::Pass);

    // hypothesis-not-met: theta = 0 with I != 0
    auto cart = cartesian_product(corpus::rationals(), corpus::rationals());
    VerificationReport rep = run_theorem("characters-EuF", "t", cart);
    CHECK(rep.status == CheckStatus::HypothesisNotMet);
    CHECK(rep.details.find("span(theta(A)I") != std::string::npos);

    // h1-doubling on a non-square-dense algebra
    VerificationReport rep2 = run_theorem("h1-doubling", "t", corpus::zero_product_1d());
    CHECK(rep2.status == CheckStatus::HypothesisNotMet);

    CHECK_THROWS_AS(run_theorem("no-such-theorem", "t", r), UnknownTheoremId);
    CHECK(theorem_takes_algebra("h1-doubling"));
    CHECK_FALSE(theorem_takes_algebra("prod-formula"));
    CHECK_THROWS_AS(theorem_takes_algebra("bogus"), UnknownTheoremId);
}

TEST_CASE("corpus_run is deterministic and clean on the builtin corpus") {
    auto entries = corpus::base_entries();
    auto amalgams = corpus::amalgam_entries(6);
    CorpusRunSummary s1 = corpus_run(entries, amalgams);
    CorpusRunSummary s2 = corpus_run(entries, amalgams);
    CHECK(s1.failed == 0);
    CHECK(s1.input_errors == 0);
    CHECK(s1.passed > 0);
    CHECK(s1.hypothesis_not_met > 0);  // e.g. Lau checks on non-Lau instances
    CHECK(s1.exit_code() == 0);

    REQUIRE(s1.reports.size() == s2.reports.size());
    for (std::size_t i = 0; i < s1.reports.size(); ++i) {
        CHECK(s1.reports[i].theorem_id == s2.reports[i].theorem_id);
        CHECK(s1.reports[i].instance == s2.reports[i].instance);
        CHECK(s1.reports[i].status == s2.reports[i].status);
        CHECK(s1.reports[i].details == s2.reports[i].details);
    }
    // sorted by (theorem, instance)
    for (std::size_t i = 1; i < s1.reports.size(); ++i)
        CHECK(std::tie(s1.reports[i - 1].theorem_id, s1.reports[i - 1].instance) <=
              std::tie(s1.reports[i].theorem_id, s1.reports[i].instance));
}
