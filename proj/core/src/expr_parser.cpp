/*
 * expr   := term (("+" | "-") term)*
 * term   := factor ("*" factor)*
 * factor := base ("^" natural)?
 * base   := natural | variable | "(" expr ")" | "-" factor
 *
 * Unary minus binds tighter than "+"/"-" but looser than "^", so -x^2
 * parses as -(x^2). Explicit "*" is required; xy is a single name.
 */
#include "fjump/expr_parser.hpp"

#include <cctype>
#include <ostream>

namespace fjump {

namespace {

class Parser {
public:
    Parser(std::string_view text, RingPtr ring, const ResourceCaps& caps)
        : text_(text), ring_(std::move(ring)), caps_(caps) {}

    Polynomial run() {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError("empty expression", pos_);
        Polynomial f = expr();
        skip_ws();
        if (pos_ < text_.size())
            throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
        return f;
    }

private:
    Polynomial expr() {
        Polynomial acc = term();
        for (;;) {
            skip_ws();
            if (accept('+')) acc = acc + term();
            else if (accept('-')) acc = acc - term();
            else return acc;
        }
    }

    Polynomial term() {
        Polynomial acc = factor();
        for (;;) {
            skip_ws();
            if (accept('*')) acc = mul(acc, factor(), caps_);
            else return acc;
        }
    }

    Polynomial factor() {
        Polynomial b = base();
        skip_ws();
        if (accept('^')) {
            std::uint64_t a = natural_u64("exponent");
            return power(b, a, caps_);
        }
        return b;
    }

    Polynomial base() {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError("expected operand", pos_);
        char c = text_[pos_];
        if (accept('-')) return -factor();
        if (accept('(')) {
            Polynomial inner = expr();
            skip_ws();
            if (!accept(')')) throw ParseError("expected ')'", pos_);
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return Polynomial::constant(ring_, natural_mpz());
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            std::string name(text_.substr(start, pos_ - start));
            auto idx = ring_->var_index(name);
            if (!idx) throw ParseError("unknown variable '" + name + "'", start);
            return Polynomial::variable(ring_, *idx);
        }
        throw ParseError(std::string("unexpected '") + c + "'", pos_);
    }

    Integer natural_mpz() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_) throw ParseError("expected number", pos_);
        return Integer(std::string(text_.substr(start, pos_ - start)));
    }

    std::uint64_t natural_u64(const char* what) {
        std::size_t at = pos_;
        Integer v = natural_mpz();
        if (v > Integer(caps_.max_exponent))
            throw ParseError(std::string(what) + " exceeds cap " +
                                 std::to_string(caps_.max_exponent),
                             at);
        return static_cast<std::uint64_t>(v.get_ui());
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    RingPtr ring_;
    const ResourceCaps& caps_;
};

} // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring, const ResourceCaps& caps) {
    return Parser(text, ring, caps).run();
}

std::vector<Polynomial> parse_polynomial_list(std::string_view text, const RingPtr& ring,
                                              const ResourceCaps& caps) {
    std::vector<Polynomial> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t sep = text.find(';', start);
        std::string_view piece =
            text.substr(start, sep == std::string_view::npos ? text.size() - start : sep - start);
        out.push_back(parse_polynomial(piece, ring, caps));
        if (sep == std::string_view::npos) break;
        start = sep + 1;
    }
    return out;
}

namespace {

void render_term(std::string& out, const Polynomial& f, const Term& t) {
    const auto& vars = f.ring()->vars();
    bool coeff_shown = false;
    Integer c = t.coeff;
    if (t.mono.is_one()) {
        out += c.get_str();
        return;
    }
    if (c != 1) {
        out += c.get_str();
        coeff_shown = true;
    }
    bool first = true;
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
        if (t.mono[i] == 0) continue;
        if (!first || coeff_shown) out += "*";
        out += vars[i];
        if (t.mono[i] != 1) out += "^" + std::to_string(t.mono[i]);
        first = false;
    }
}

} // namespace

std::string render_polynomial(const Polynomial& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : f.terms()) {
        if (!first) out += (t.coeff < 0) ? " - " : " + ";
        Term shown = t;
        if (!first && t.coeff < 0) shown.coeff = -t.coeff;
        render_term(out, f, shown);
        first = false;
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& f) {
    return os << render_polynomial(f);
}

} // namespace fjump
