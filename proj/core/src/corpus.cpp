#include "fjump/corpus.hpp"

#include <fstream>
#include <sstream>

namespace fjump {

namespace {

std::string strip(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(unsigned line, const std::string& what) {
    throw std::runtime_error("corpus line " + std::to_string(line) + ": " + what);
}

std::string expect_field(const std::string& piece, const std::string& key, unsigned line) {
    std::string t = strip(piece);
    if (t.rfind(key + "=", 0) != 0) fail(line, "expected '" + key + "=...', got '" + t + "'");
    std::string value = strip(t.substr(key.size() + 1));
    if (value.empty()) fail(line, "empty value for '" + key + "'");
    return value;
}

} // namespace

std::vector<CorpusEntry> load_corpus(std::istream& in, const ResourceCaps& caps) {
    std::vector<CorpusEntry> entries;
    std::string raw;
    unsigned line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string text = strip(raw);
        if (text.empty() || text[0] == '#') continue;

        std::vector<std::string> pieces;
        std::stringstream ss(text);
        std::string piece;
        while (std::getline(ss, piece, ';')) pieces.push_back(piece);
        if (pieces.size() != 3) fail(line, "expected 'p=...; vars=...; f=...'");

        std::string p_text = expect_field(pieces[0], "p", line);
        std::string vars_text = expect_field(pieces[1], "vars", line);
        std::string f_text = expect_field(pieces[2], "f", line);
        try {
            Prime p{Integer(p_text)};
            std::vector<std::string> vars;
            std::stringstream vs(vars_text);
            std::string v;
            while (std::getline(vs, v, ',')) vars.push_back(strip(v));
            RingPtr ring = PolyRing::fp(p, std::move(vars));
            Polynomial f = parse_polynomial(f_text, ring, caps);
            entries.push_back(CorpusEntry{ring, std::move(f), line});
        } catch (const std::exception& err) {
            fail(line, err.what());
        }
    }
    return entries;
}

std::vector<CorpusEntry> load_corpus_file(const std::string& path, const ResourceCaps& caps) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open corpus file: " + path);
    return load_corpus(in, caps);
}

} // namespace fjump
