#include "ccomp/corpus.hpp"
#include "support.hpp"

#include <cstdlib>
#include <set>
#include <stdexcept>

using namespace ccomp;
using namespace ccomp::testing;

namespace {

std::string shipped_corpus() {
    const char* p = std::getenv("CCOMP_CORPUS");
    return p ? p : "data/identities.corpus";
}

}  // namespace

TEST_CASE("every shipped identity holds") {
    auto corpus = load_identity_corpus(shipped_corpus());
    REQUIRE(corpus.size() >= 20);
    std::set<std::string> ids, checks;
    for (const auto& r : corpus) {
        CHECK(ids.insert(r.id).second);
        checks.insert(r.check);
        CHECK(r.tol > 0.0);
        CHECK_FALSE(r.source.empty());
    }
    for (const char* c : {"nest", "limit", "szego", "nyblom", "servi", "hauser"}) CHECK(checks.count(c) == 1);
    auto report = run_identity_corpus(corpus);
    REQUIRE(report.results.size() == corpus.size());
    for (const auto& res : report.results) {
        INFO(res.id << ": " << res.message << " value " << res.value << " error " << res.error);
        CHECK(res.passed);
        CHECK(res.error <= res.tol);
    }
    CHECK(report.passed() == corpus.size());
}

TEST_CASE("parsing") {
    auto recs = parse_identity_corpus(
        "# comment\n"
        "\n"
        R"({"id": "golden", "kind": "sqrt", "terms": "const:a=1", "depth": 80, "rhs": "1.6180339887498948482", "tol": 1e-15, "source": "t"})"
        "\n");
    REQUIRE(recs.size() == 1);
    CHECK(recs[0].id == "golden");
    CHECK(recs[0].check == "nest");
    CHECK(recs[0].param("depth") == "80");
    CHECK(recs[0].param("seed", "none") == "none");
    CHECK_THROWS_AS(recs[0].param("seed"), std::invalid_argument);
    auto rep = run_identity_corpus(recs);
    CHECK(rep.results[0].passed);

    CHECK_THROWS_AS(parse_identity_corpus("{not json"), std::invalid_argument);
    CHECK_THROWS_AS(parse_identity_corpus(R"({"rhs": "1"})"), std::invalid_argument);
    CHECK_THROWS_AS(parse_identity_corpus(R"({"id": "a", "tol": 0})"), std::invalid_argument);
    CHECK_THROWS_AS(parse_identity_corpus(R"({"id": "a", "rhs": "inf", "tol": 1})"), std::invalid_argument);
    CHECK_THROWS_AS(parse_identity_corpus(R"({"id": "a", "rhs": "abc", "tol": 1})"), std::invalid_argument);
    CHECK_THROWS_AS(load_identity_corpus("/nonexistent/corpus"), std::invalid_argument);
}

TEST_CASE("failures are reported, not thrown") {
    auto recs = parse_identity_corpus(
        R"({"id": "wrong", "kind": "sqrt", "terms": "const:a=1", "depth": 80, "rhs": "1.7", "tol": 1e-6, "source": "t"})"
        "\n"
        R"({"id": "bad-check", "check": "nope", "rhs": "1", "tol": 1e-6})"
        "\n"
        R"({"id": "domain", "kind": "sqrt", "terms": "const:a=-4", "depth": 3, "rhs": "1", "tol": 1e-6})"
        "\n"
        R"({"id": "no-limit", "check": "limit", "kind": "power:2", "terms": "const:a=0.3", "max_depth": 50, "direction": "forward", "rhs": "0", "tol": 1e-12})"
        "\n");
    auto rep = run_identity_corpus(recs);
    REQUIRE(rep.results.size() == 4);
    CHECK(rep.passed() == 0);
    CHECK(rep.results[0].message == "error exceeds tolerance");
    CHECK(rep.results[0].error > 0.08);
    CHECK(rep.results[1].message.find("unknown check") != std::string::npos);
    CHECK_FALSE(rep.results[2].message.empty());
    CHECK_FALSE(rep.results[3].message.empty());
}
