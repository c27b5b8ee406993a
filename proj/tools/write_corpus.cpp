// Regenerates the bundled .rhg corpus files. Usage: write_corpus <directory>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "ryser/corpus.hpp"

int main(int argc, char** argv) {
    if (argc != 2) {
        std::fprintf(stderr, "usage: write_corpus <directory>\n");
        return 2;
    }
    std::filesystem::path dir(argv[1]);
    std::filesystem::create_directories(dir);
    int written = 0;
    for (const ryser::CorpusEntry& e : ryser::verification_corpus()) {
        std::ofstream out(dir / (e.name + ".rhg"), std::ios::binary);
        out << ryser::serialize_table(e.hypergraph);
        if (!out) {
            std::fprintf(stderr, "failed to write %s\n", e.name.c_str());
            return 2;
        }
        ++written;
    }
    std::printf("wrote %d corpus files to %s\n", written, dir.string().c_str());
    return 0;
}
