#ifndef FJUMP_POLYRING_HPP
#define FJUMP_POLYRING_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fjump/arith.hpp"

namespace fjump {

enum class CoeffDomain { prime_field, integers };

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

// Context record fixing the coefficient domain and the ordered variable list.
class PolyRing {
public:
    static RingPtr fp(Prime p, std::vector<std::string> vars);
    static RingPtr integers(std::vector<std::string> vars);

    CoeffDomain domain() const { return domain_; }
    bool is_prime_field() const { return domain_ == CoeffDomain::prime_field; }
    const Prime& prime() const;
    std::size_t nvars() const { return vars_.size(); }
    const std::vector<std::string>& vars() const { return vars_; }
    std::optional<std::size_t> var_index(std::string_view name) const;
    std::string description() const; // e.g. "F_5[x,y]" or "ZZ[x,y]"

private:
    PolyRing(CoeffDomain domain, std::optional<Prime> p, std::vector<std::string> vars);
    CoeffDomain domain_;
    std::optional<Prime> p_;
    std::vector<std::string> vars_;
};

// Structural equality: same domain, same prime, same variable list.
bool same_ring(const PolyRing& a, const PolyRing& b);
bool same_ring(const RingPtr& a, const RingPtr& b);

// Exponent vector of fixed length n. Exponents are capped well below 2^63 so
// additions cannot wrap.
class Monomial {
public:
    explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
    explicit Monomial(std::vector<std::uint64_t> exps) : exps_(std::move(exps)) {}

    std::size_t size() const { return exps_.size(); }
    std::uint64_t operator[](std::size_t i) const { return exps_[i]; }
    const std::vector<std::uint64_t>& exps() const { return exps_; }
    std::uint64_t total_degree() const;
    bool is_one() const;

    Monomial with_exp(std::size_t i, std::uint64_t value) const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial& a, const Monomial& b) = default;

    static bool divides(const Monomial& a, const Monomial& b); // a | b
    static Monomial quotient(const Monomial& b, const Monomial& a); // b / a
    static Monomial lcm(const Monomial& a, const Monomial& b);

private:
    std::vector<std::uint64_t> exps_;
};

enum class MonomialOrderKind { lex, grevlex };

// Total multiplicative order with 1 minimal.
struct MonomialOrder {
    MonomialOrderKind kind = MonomialOrderKind::grevlex;
    bool less(const Monomial& a, const Monomial& b) const;
};

// Strict grevlex comparators usable as map keys.
struct GrevlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return MonomialOrder{MonomialOrderKind::grevlex}.less(a, b);
    }
};
struct GrevlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return MonomialOrder{MonomialOrderKind::grevlex}.less(b, a);
    }
};

struct Term {
    Monomial mono;
    Integer coeff;
    bool operator==(const Term&) const = default;
};

// Immutable sparse polynomial in canonical form: terms sorted grevlex
// descending, no zero coefficients, F_p coefficients reduced to 0..p-1.
class Polynomial {
public:
    static Polynomial zero(RingPtr ring);
    static Polynomial constant(RingPtr ring, const Integer& c);
    static Polynomial variable(RingPtr ring, std::size_t i);
    // Normalizes: combines duplicates, reduces mod p, drops zeros, sorts.
    static Polynomial make(RingPtr ring, std::vector<Term> terms);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
    bool is_one() const;
    bool is_unit() const;     // nonzero constant over F_p; +-1 over Z
    std::uint64_t total_degree() const; // 0 for the zero polynomial
    // Coefficient of the monomial with all exponents zero.
    Integer constant_coefficient() const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a);
    friend bool operator==(const Polynomial& a, const Polynomial& b);

    Polynomial scalar_mul(const Integer& c) const;

private:
    Polynomial(RingPtr ring, std::vector<Term> terms)
        : ring_(std::move(ring)), terms_(std::move(terms)) {}
    RingPtr ring_;
    std::vector<Term> terms_;
};

Polynomial mul(const Polynomial& a, const Polynomial& b,
               const ResourceCaps& caps = default_caps());
inline Polynomial operator*(const Polynomial& a, const Polynomial& b) { return mul(a, b); }

// f^a. Binary exponentiation; over F_p large exponents split along base-p
// digits so that f^a = prod_i (f^{d_i})^{p^i}.
Polynomial power(const Polynomial& f, std::uint64_t a,
                 const ResourceCaps& caps = default_caps());

// f^{p^e} by scaling exponents, valid over F_p where c^p = c.
Polynomial frobenius_power(const Polynomial& f, unsigned e,
                           const ResourceCaps& caps = default_caps());

// Coefficientwise reduction of an integer-domain polynomial into F_p.
Polynomial reduce_mod_p(const Polynomial& f, Prime p);

} // namespace fjump

#endif // FJUMP_POLYRING_HPP
