#ifndef FJUMP_ARITH_HPP
#define FJUMP_ARITH_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace fjump {

// Arbitrary-precision signed integer. Natural is the same carrier with a
// non-negativity contract enforced by the operations that consume it.
using Integer = mpz_class;
using Natural = mpz_class;

// Thrown when a computation would exceed a configured resource cap.
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// Caps that turn memory and time blowups into clean errors.
struct ResourceCaps {
    std::uint64_t max_pe = std::uint64_t{1} << 20;       // largest allowed p^e
    std::uint64_t max_terms = std::uint64_t{1} << 22;    // polynomial term count
    std::uint64_t max_pairs = 100000;                    // Buchberger pair budget
    std::uint64_t max_exponent = std::uint64_t{1} << 48; // single monomial exponent
    std::uint64_t max_colength_box = std::uint64_t{1} << 24; // standard-monomial enumeration
};

const ResourceCaps& default_caps();

// A small verified prime, the characteristic of the base field.
class Prime {
public:
    explicit Prime(std::uint64_t p);
    explicit Prime(const Integer& p);

    std::uint64_t value() const { return p_; }
    bool operator==(const Prime&) const = default;

private:
    std::uint64_t p_;
};

// Exact fraction in canonical form: den > 0, gcd(|num|, den) = 1.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}                  // NOLINT: implicit by intent
    explicit Rational(const Integer& n) : q_(n) {}
    Rational(const Integer& num, const Integer& den);

    // Accepts "a/b" or "a" with optional sign.
    static Rational parse(const std::string& text);

    Integer num() const { return q_.get_num(); }
    Integer den() const { return q_.get_den(); }
    bool is_negative() const { return sgn(q_) < 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    std::string str() const;

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.q_ + b.q_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.q_ - b.q_); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.q_ * b.q_); }
    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

private:
    explicit Rational(mpq_class q) : q_(std::move(q)) {}
    mpq_class q_;
};

// Base-p digits of a, least significant first. Empty iff a = 0; the last
// digit is nonzero otherwise.
std::vector<std::uint64_t> base_p_digits(const Natural& a, Prime p);
std::vector<std::uint64_t> base_p_digits(std::uint64_t a, Prime p);

// C(n, k) mod p by Lucas' theorem: the digitwise product of small binomials.
std::uint64_t binom_mod_p(const Natural& n, const Natural& k, Prime p);
std::uint64_t binom_mod_p(std::uint64_t n, std::uint64_t k, Prime p);

// Exact C(n, k) over the integers.
Integer binom_exact(const Natural& n, std::uint64_t k);

// p^e, guarded by caps.max_pe.
Natural prime_power(Prime p, unsigned e, const ResourceCaps& caps = default_caps());
std::uint64_t prime_power_u64(Prime p, unsigned e, const ResourceCaps& caps = default_caps());

// ceil(t * p^e) for t >= 0.
Natural ceil_scale(const Rational& t, Prime p, unsigned e, const ResourceCaps& caps = default_caps());

// Multiplicative inverse mod p for 0 < a < p.
std::uint64_t inv_mod_p(std::uint64_t a, Prime p);

// Minimal-denominator rational q with lo < q <= hi, found by Stern-Brocot
// descent. Returns nullopt if every such q has denominator > max_den.
std::optional<Rational> simplest_in_halfopen(const Rational& lo, const Rational& hi,
                                             std::uint64_t max_den);

} // namespace fjump

#endif // FJUMP_ARITH_HPP
