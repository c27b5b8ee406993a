#ifndef RYSER_CORPUS_HPP
#define RYSER_CORPUS_HPP

#include <string>
#include <vector>

#include "ryser/hypergraph.hpp"

namespace ryser {

struct CorpusEntry {
    // Stable unique slug, also the basename of the bundled .rhg file.
    std::string name;
    PartiteHypergraph hypergraph;
};

// The bundled verification instances: the three embedded examples, truncated
// projective planes, oval subplanes, one-factorization instances, both
// counterexample families, a few hand-written small cases, and a block of
// fixed-seed random intersecting instances. Every entry is intersecting. The
// list is deterministic, built on first use, and mirrored byte for byte by
// the .rhg files under data/corpus.
const std::vector<CorpusEntry>& verification_corpus();

// Lookup by name; throws DomainError for an unknown name.
const PartiteHypergraph& corpus_instance(const std::string& name);

}  // namespace ryser

#endif
