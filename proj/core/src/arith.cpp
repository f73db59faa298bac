#include "fjump/arith.hpp"

#include <utility>

namespace fjump {

const ResourceCaps& default_caps() {
    static const ResourceCaps caps{};
    return caps;
}

namespace {

bool is_prime_u64(std::uint64_t p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (std::uint64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

} // namespace

Prime::Prime(std::uint64_t p) : p_(p) {
    // Trial division keeps construction honest; inputs are small by contract.
    if (p > (std::uint64_t{1} << 32))
        throw std::invalid_argument("prime too large: " + std::to_string(p));
    if (!is_prime_u64(p))
        throw std::invalid_argument(std::to_string(p) + " is not prime");
}

Prime::Prime(const Integer& p) {
    if (p < 2 || !p.fits_ulong_p() || p.get_ui() > (std::uint64_t{1} << 32))
        throw std::invalid_argument("prime out of supported range: " + p.get_str());
    *this = Prime(static_cast<std::uint64_t>(p.get_ui()));
}

Rational::Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(text));
        Integer num(text.substr(0, slash));
        Integer den(text.substr(slash + 1));
        return Rational(num, den);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("malformed rational: '" + text + "'");
    }
}

std::string Rational::str() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::vector<std::uint64_t> base_p_digits(const Natural& a, Prime p) {
    if (a < 0) throw std::invalid_argument("base_p_digits of negative value");
    std::vector<std::uint64_t> digits;
    Natural rest = a;
    while (rest != 0) {
        digits.push_back(mpz_fdiv_q_ui(rest.get_mpz_t(), rest.get_mpz_t(),
                                       static_cast<unsigned long>(p.value())));
    }
    return digits;
}

std::vector<std::uint64_t> base_p_digits(std::uint64_t a, Prime p) {
    std::vector<std::uint64_t> digits;
    while (a != 0) {
        digits.push_back(a % p.value());
        a /= p.value();
    }
    return digits;
}

std::uint64_t inv_mod_p(std::uint64_t a, Prime p) {
    if (a % p.value() == 0) throw std::invalid_argument("inverse of zero mod p");
    // Extended Euclid on signed residues.
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p.value());
    std::int64_t new_r = static_cast<std::int64_t>(a % p.value());
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    if (t < 0) t += static_cast<std::int64_t>(p.value());
    return static_cast<std::uint64_t>(t);
}

namespace {

// C(n, k) mod p for single base-p digits n, k < p.
std::uint64_t small_binom_mod_p(std::uint64_t n, std::uint64_t k, Prime p) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t num = 1, den = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        num = (num * ((n + 1 - i) % p.value())) % p.value();
        den = (den * (i % p.value())) % p.value();
    }
    return (num * inv_mod_p(den, p)) % p.value();
}

} // namespace

std::uint64_t binom_mod_p(std::uint64_t n, std::uint64_t k, Prime p) {
    if (k > n) return 0;
    std::uint64_t result = 1;
    while (n != 0 || k != 0) {
        std::uint64_t nd = n % p.value(), kd = k % p.value();
        if (kd > nd) return 0;
        result = (result * small_binom_mod_p(nd, kd, p)) % p.value();
        n /= p.value();
        k /= p.value();
    }
    return result;
}

std::uint64_t binom_mod_p(const Natural& n, const Natural& k, Prime p) {
    if (n < 0 || k < 0) throw std::invalid_argument("binom_mod_p of negative value");
    if (k > n) return 0;
    auto nd = base_p_digits(n, p);
    auto kd = base_p_digits(k, p);
    std::uint64_t result = 1;
    for (std::size_t i = 0; i < kd.size(); ++i) {
        if (kd[i] > nd[i]) return 0;
        result = (result * small_binom_mod_p(nd[i], kd[i], p)) % p.value();
    }
    return result;
}

Integer binom_exact(const Natural& n, std::uint64_t k) {
    if (n < 0) throw std::invalid_argument("binom_exact of negative value");
    Integer out;
    mpz_bin_ui(out.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(k));
    return out;
}

Natural prime_power(Prime p, unsigned e, const ResourceCaps& caps) {
    Natural pe;
    mpz_ui_pow_ui(pe.get_mpz_t(), static_cast<unsigned long>(p.value()), e);
    if (pe > Natural(caps.max_pe))
        throw ResourceError("p^e = " + pe.get_str() + " exceeds cap " +
                            std::to_string(caps.max_pe));
    return pe;
}

std::uint64_t prime_power_u64(Prime p, unsigned e, const ResourceCaps& caps) {
    return prime_power(p, e, caps).get_ui();
}

Natural ceil_scale(const Rational& t, Prime p, unsigned e, const ResourceCaps& caps) {
    if (t.is_negative()) throw std::invalid_argument("ceil_scale requires t >= 0");
    Natural pe = prime_power(p, e, caps);
    Natural out;
    Integer scaled_num = t.num() * pe;
    mpz_cdiv_q(out.get_mpz_t(), scaled_num.get_mpz_t(), t.den().get_mpz_t());
    return out;
}

namespace {

Integer floor_q(const Rational& q) {
    Integer out;
    Integer n = q.num(), d = q.den();
    mpz_fdiv_q(out.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    return out;
}

Rational reciprocal(const Rational& q) { return Rational(q.den(), q.num()); }

// Minimal-denominator q in the interval between lo and hi, each bound open or
// closed. Continued-fraction descent of the Stern-Brocot tree.
Rational simplest_between(const Rational& lo, bool lo_open, const Rational& hi, bool hi_open) {
    // Smallest integer satisfying the lower bound.
    Integer n = floor_q(lo);
    if (Rational(n) < lo || (lo_open && Rational(n) == lo)) n += 1;
    if (Rational(n) < hi || (!hi_open && Rational(n) == hi)) return Rational(n);

    Integer k = floor_q(lo);
    Rational a = lo - Rational(k);
    Rational b = hi - Rational(k);
    // Here 0 <= a < b and no integer fits, so the answer is k + 1/y with
    // y ranging over the inverted interval.
    if (a == Rational(0)) {
        // y is only bounded below, by 1/b; an integer is simplest.
        Rational inv_b = reciprocal(b);
        Integer y = floor_q(inv_b);
        if (Rational(y) < inv_b || (hi_open && Rational(y) == inv_b)) y += 1;
        return Rational(k) + Rational(Integer(1), y);
    }
    Rational y = simplest_between(reciprocal(b), hi_open, reciprocal(a), lo_open);
    return Rational(k) + reciprocal(y);
}

} // namespace

std::optional<Rational> simplest_in_halfopen(const Rational& lo, const Rational& hi,
                                             std::uint64_t max_den) {
    if (!(lo < hi)) throw std::invalid_argument("empty interval");
    Rational q = simplest_between(lo, /*lo_open=*/true, hi, /*hi_open=*/false);
    if (q.den() > Integer(max_den)) return std::nullopt;
    return q;
}

} // namespace fjump
