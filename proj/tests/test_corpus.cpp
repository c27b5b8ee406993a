#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include "ryser/constructions.hpp"
#include "ryser/corpus.hpp"
#include "ryser/errors.hpp"

using namespace ryser;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

TEST_CASE("corpus size, name uniqueness, and membership") {
    const auto& corpus = verification_corpus();
    CHECK(corpus.size() >= 50);

    std::set<std::string> names;
    for (const CorpusEntry& e : corpus) names.insert(e.name);
    CHECK(names.size() == corpus.size());

    CHECK(names.count("f7") == 1);
    CHECK(names.count("f6") == 1);
    CHECK(names.count("f6linear") == 1);
    CHECK(names.count("tpp-2") == 1);
    CHECK(names.count("oval-3") == 1);
    CHECK(names.count("onefact-9") == 1);
    CHECK(names.count("biased-5") == 1);
    CHECK(names.count("expside-4") == 1);
}

TEST_CASE("every corpus entry is a valid intersecting instance") {
    for (const CorpusEntry& e : verification_corpus()) {
        INFO("entry ", e.name);
        CHECK_NOTHROW(validate(e.hypergraph));
        CHECK(is_intersecting(e.hypergraph));
        CHECK(parse_table_format(serialize_table(e.hypergraph)) == e.hypergraph);
    }
}

TEST_CASE("lookup by name") {
    CHECK(corpus_instance("f7") == example_f7());
    CHECK(corpus_instance("f6") == example_f6());
    CHECK(corpus_instance("f6linear") == example_f6_linear());
    CHECK(corpus_instance("tpp-3") == truncated_projective_plane(3));
    CHECK(corpus_instance("onefact-7") == one_factorization_instance(7));
    CHECK_THROWS_AS(corpus_instance("no-such-instance"), DomainError);
}

TEST_CASE("corpus is built once and reused") {
    const auto& a = verification_corpus();
    const auto& b = verification_corpus();
    CHECK(&a == &b);
}

TEST_CASE("bundled files match the generators byte for byte") {
    for (const CorpusEntry& e : verification_corpus()) {
        INFO("entry ", e.name);
        std::string path = std::string(RYSER_CORPUS_DIR) + "/" + e.name + ".rhg";
        CHECK(read_file(path) == serialize_table(e.hypergraph));
    }
}
