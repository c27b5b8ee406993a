#include "ryser/corpus.hpp"

#include <map>
#include <utility>

#include "ryser/constructions.hpp"
#include "ryser/errors.hpp"

namespace ryser {

namespace {

std::vector<CorpusEntry> build_corpus() {
    std::vector<CorpusEntry> out;
    auto add = [&out](std::string name, PartiteHypergraph h) {
        out.push_back({std::move(name), std::move(h)});
    };

    add("f7", example_f7());
    add("f6", example_f6());
    add("f6linear", example_f6_linear());

    for (int q : {2, 3, 4, 5, 7}) add("tpp-" + std::to_string(q), truncated_projective_plane(q));
    for (int q : {3, 5, 7}) add("oval-" + std::to_string(q), oval_secant_subplane(q));
    for (int r : {3, 5, 7, 9}) add("onefact-" + std::to_string(r), one_factorization_instance(r));
    for (int r : {4, 5}) add("biased-" + std::to_string(r), biased_counterexample(r));
    for (int r : {4, 5}) add("expside-" + std::to_string(r), exponential_counterexample(r));

    add("single-2", parse_digit_format("11", 2));
    add("single-3", parse_digit_format("111", 3));
    add("star-2", parse_digit_format("11 12 13", 2));
    add("sunflower-3", parse_digit_format("111 122 133", 3));
    add("triangle-3", parse_digit_format("112 121 211", 3));

    for (uint64_t seed = 101; seed <= 130; ++seed) {
        int k = static_cast<int>(seed - 101);
        int r = 2 + k % 5;
        int m = 3 + k % 7;
        int cap = 3 + k % 3;
        add("random-r" + std::to_string(r) + "-m" + std::to_string(m) + "-s" +
                std::to_string(seed),
            random_intersecting(r, m, cap, seed));
    }
    return out;
}

}  // namespace

const std::vector<CorpusEntry>& verification_corpus() {
    static const std::vector<CorpusEntry> corpus = build_corpus();
    return corpus;
}

const PartiteHypergraph& corpus_instance(const std::string& name) {
    static const std::map<std::string, const PartiteHypergraph*> index = [] {
        std::map<std::string, const PartiteHypergraph*> m;
        for (const CorpusEntry& e : verification_corpus()) m.emplace(e.name, &e.hypergraph);
        return m;
    }();
    auto it = index.find(name);
    if (it == index.end()) throw DomainError("unknown corpus instance: " + name);
    return *it->second;
}

}  // namespace ryser
