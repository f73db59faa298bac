#ifndef FJUMP_CORPUS_HPP
#define FJUMP_CORPUS_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "fjump/expr_parser.hpp"

namespace fjump {

struct CorpusEntry {
    RingPtr ring;
    Polynomial f;
    unsigned line = 0;
};

// Line format: `p=<prime>; vars=<a,b,...>; f=<expression>`. Blank lines and
// `#` comments are skipped. Malformed lines raise an error naming the line.
std::vector<CorpusEntry> load_corpus(std::istream& in,
                                     const ResourceCaps& caps = default_caps());
std::vector<CorpusEntry> load_corpus_file(const std::string& path,
                                          const ResourceCaps& caps = default_caps());

} // namespace fjump

#endif // FJUMP_CORPUS_HPP
