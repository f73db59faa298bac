#ifndef FJUMP_EXPR_PARSER_HPP
#define FJUMP_EXPR_PARSER_HPP

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "fjump/polyring.hpp"

namespace fjump {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// Parses a polynomial expression in the ring. Whitespace insensitive, '*'
// required between factors, '^' takes a decimal natural.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring,
                            const ResourceCaps& caps = default_caps());

// Semicolon-separated list of polynomial expressions.
std::vector<Polynomial> parse_polynomial_list(std::string_view text, const RingPtr& ring,
                                              const ResourceCaps& caps = default_caps());

// Canonical rendering: terms grevlex descending, canonical coefficients,
// e.g. "x^2*y + 4*y^3 + 1". parse(render(f)) == f.
std::string render_polynomial(const Polynomial& f);

std::ostream& operator<<(std::ostream& os, const Polynomial& f);

} // namespace fjump

#endif // FJUMP_EXPR_PARSER_HPP
