#include "fjump/polyring.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace fjump {

namespace {

constexpr std::uint64_t kExponentHardCap = std::uint64_t{1} << 62;

std::uint64_t checked_exp_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t s = a + b;
    if (s < a || s > kExponentHardCap) throw ResourceError("monomial exponent overflow");
    return s;
}

std::uint64_t checked_exp_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > kExponentHardCap / a) throw ResourceError("monomial exponent overflow");
    return a * b;
}

} // namespace

PolyRing::PolyRing(CoeffDomain domain, std::optional<Prime> p, std::vector<std::string> vars)
    : domain_(domain), p_(p), vars_(std::move(vars)) {
    if (vars_.empty()) throw std::invalid_argument("ring needs at least one variable");
    std::set<std::string> seen;
    for (const auto& v : vars_) {
        if (v.empty()) throw std::invalid_argument("empty variable name");
        if (!seen.insert(v).second)
            throw std::invalid_argument("duplicate variable name: " + v);
    }
}

RingPtr PolyRing::fp(Prime p, std::vector<std::string> vars) {
    return RingPtr(new PolyRing(CoeffDomain::prime_field, p, std::move(vars)));
}

RingPtr PolyRing::integers(std::vector<std::string> vars) {
    return RingPtr(new PolyRing(CoeffDomain::integers, std::nullopt, std::move(vars)));
}

const Prime& PolyRing::prime() const {
    if (!p_) throw std::logic_error("integer-domain ring has no characteristic");
    return *p_;
}

std::optional<std::size_t> PolyRing::var_index(std::string_view name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return i;
    return std::nullopt;
}

std::string PolyRing::description() const {
    std::string out = is_prime_field() ? "F_" + std::to_string(prime().value()) : "ZZ";
    out += "[";
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (i) out += ",";
        out += vars_[i];
    }
    out += "]";
    return out;
}

bool same_ring(const PolyRing& a, const PolyRing& b) {
    if (a.domain() != b.domain() || a.vars() != b.vars()) return false;
    return !a.is_prime_field() || a.prime() == b.prime();
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return same_ring(*a, *b);
}

std::uint64_t Monomial::total_degree() const {
    std::uint64_t d = 0;
    for (auto e : exps_) d = checked_exp_add(d, e);
    return d;
}

bool Monomial::is_one() const {
    return std::all_of(exps_.begin(), exps_.end(), [](std::uint64_t e) { return e == 0; });
}

Monomial Monomial::with_exp(std::size_t i, std::uint64_t value) const {
    auto e = exps_;
    e.at(i) = value;
    return Monomial(std::move(e));
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    if (a.size() != b.size()) throw std::invalid_argument("monomial arity mismatch");
    std::vector<std::uint64_t> e(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) e[i] = checked_exp_add(a[i], b[i]);
    return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Monomial Monomial::quotient(const Monomial& b, const Monomial& a) {
    std::vector<std::uint64_t> e(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (a[i] > b[i]) throw std::invalid_argument("monomial quotient undefined");
        e[i] = b[i] - a[i];
    }
    return Monomial(std::move(e));
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    std::vector<std::uint64_t> e(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) e[i] = std::max(a[i], b[i]);
    return Monomial(std::move(e));
}

bool MonomialOrder::less(const Monomial& a, const Monomial& b) const {
    if (a.size() != b.size()) throw std::invalid_argument("monomial arity mismatch");
    if (kind == MonomialOrderKind::lex) {
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    }
    std::uint64_t da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    // Equal degree: smaller iff the rightmost difference is larger.
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] > b[i];
    return false;
}

namespace {

Integer canonical_coeff(const PolyRing& ring, const Integer& c) {
    if (!ring.is_prime_field()) return c;
    Integer out;
    Integer p(ring.prime().value());
    mpz_fdiv_r(out.get_mpz_t(), c.get_mpz_t(), p.get_mpz_t());
    return out;
}

} // namespace

Polynomial Polynomial::zero(RingPtr ring) { return Polynomial(std::move(ring), {}); }

Polynomial Polynomial::constant(RingPtr ring, const Integer& c) {
    std::size_t n = ring->nvars();
    return make(std::move(ring), {Term{Monomial(n), c}});
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t i) {
    if (i >= ring->nvars()) throw std::invalid_argument("variable index out of range");
    Monomial m(ring->nvars());
    return make(std::move(ring), {Term{m.with_exp(i, 1), Integer(1)}});
}

Polynomial Polynomial::make(RingPtr ring, std::vector<Term> terms) {
    if (!ring) throw std::invalid_argument("null ring");
    std::map<Monomial, Integer, GrevlexGreater> acc;
    for (auto& t : terms) {
        if (t.mono.size() != ring->nvars())
            throw std::invalid_argument("monomial arity does not match ring");
        auto [it, inserted] = acc.try_emplace(std::move(t.mono), std::move(t.coeff));
        if (!inserted) it->second += t.coeff;
    }
    std::vector<Term> canon;
    canon.reserve(acc.size());
    for (auto& [m, c] : acc) {
        Integer cc = canonical_coeff(*ring, c);
        if (cc != 0) canon.push_back(Term{m, std::move(cc)});
    }
    return Polynomial(std::move(ring), std::move(canon));
}

bool Polynomial::is_one() const {
    return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coeff == 1;
}

bool Polynomial::is_unit() const {
    if (!is_constant() || is_zero()) return false;
    if (ring_->is_prime_field()) return true;
    return terms_[0].coeff == 1 || terms_[0].coeff == -1;
}

std::uint64_t Polynomial::total_degree() const {
    std::uint64_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.total_degree());
    return d;
}

Integer Polynomial::constant_coefficient() const {
    if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
    return Integer(0);
}

namespace {

void require_same_ring(const Polynomial& a, const Polynomial& b) {
    if (!same_ring(a.ring(), b.ring()))
        throw std::invalid_argument("polynomials from different rings");
}

// Merge two canonical term lists with coefficient combiner sign.
Polynomial merge_add(const Polynomial& a, const Polynomial& b, bool subtract) {
    require_same_ring(a, b);
    std::vector<Term> out;
    out.reserve(a.term_count() + b.term_count());
    GrevlexGreater gt;
    std::size_t i = 0, j = 0;
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    while (i < ta.size() || j < tb.size()) {
        if (j == tb.size() || (i < ta.size() && gt(ta[i].mono, tb[j].mono))) {
            out.push_back(ta[i++]);
        } else if (i == ta.size() || gt(tb[j].mono, ta[i].mono)) {
            out.push_back(Term{tb[j].mono, subtract ? Integer(-tb[j].coeff) : tb[j].coeff});
            ++j;
        } else {
            Integer c = subtract ? Integer(ta[i].coeff - tb[j].coeff) : Integer(ta[i].coeff + tb[j].coeff);
            out.push_back(Term{ta[i].mono, std::move(c)});
            ++i;
            ++j;
        }
    }
    return Polynomial::make(a.ring(), std::move(out));
}

} // namespace

Polynomial operator+(const Polynomial& a, const Polynomial& b) { return merge_add(a, b, false); }
Polynomial operator-(const Polynomial& a, const Polynomial& b) { return merge_add(a, b, true); }

Polynomial operator-(const Polynomial& a) { return a.scalar_mul(Integer(-1)); }

bool operator==(const Polynomial& a, const Polynomial& b) {
    return same_ring(a.ring(), b.ring()) && a.terms() == b.terms();
}

Polynomial Polynomial::scalar_mul(const Integer& c) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.push_back(Term{t.mono, t.coeff * c});
    return make(ring_, std::move(out));
}

Polynomial mul(const Polynomial& a, const Polynomial& b, const ResourceCaps& caps) {
    require_same_ring(a, b);
    std::map<Monomial, Integer, GrevlexGreater> acc;
    for (const auto& ta : a.terms()) {
        for (const auto& tb : b.terms()) {
            Monomial m = ta.mono * tb.mono;
            Integer prod = ta.coeff * tb.coeff;
            auto [it, inserted] = acc.try_emplace(std::move(m), prod);
            if (!inserted) it->second += prod;
            if (acc.size() > caps.max_terms)
                throw ResourceError("product exceeds term cap " + std::to_string(caps.max_terms));
        }
    }
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto& [m, c] : acc) out.push_back(Term{m, std::move(c)});
    return Polynomial::make(a.ring(), std::move(out));
}

namespace {

Polynomial power_binary(const Polynomial& f, std::uint64_t a, const ResourceCaps& caps) {
    Polynomial acc = Polynomial::constant(f.ring(), Integer(1));
    Polynomial base = f;
    while (a != 0) {
        if (a & 1) acc = mul(acc, base, caps);
        a >>= 1;
        if (a != 0) base = mul(base, base, caps);
    }
    return acc;
}

} // namespace

Polynomial power(const Polynomial& f, std::uint64_t a, const ResourceCaps& caps) {
    if (a == 0) return Polynomial::constant(f.ring(), Integer(1));
    if (f.is_zero()) return f;
    if (!f.ring()->is_prime_field() || a < f.ring()->prime().value())
        return power_binary(f, a, caps);
    // Characteristic-p splitting: f^a = prod_i (f^{d_i})^{p^i}.
    Prime p = f.ring()->prime();
    auto digits = base_p_digits(a, p);
    // Horner over the digits, most significant first.
    Polynomial acc = Polynomial::constant(f.ring(), Integer(1));
    for (std::size_t i = digits.size(); i-- > 0;) {
        acc = frobenius_power(acc, 1, caps);
        if (digits[i] != 0)
            acc = mul(acc, power_binary(f, digits[i], caps), caps);
    }
    return acc;
}

Polynomial frobenius_power(const Polynomial& f, unsigned e, const ResourceCaps& caps) {
    if (!f.ring()->is_prime_field())
        throw std::invalid_argument("frobenius_power requires a prime-field ring");
    if (e == 0) return f;
    std::uint64_t pe = prime_power_u64(f.ring()->prime(), e, caps);
    std::vector<Term> out;
    out.reserve(f.term_count());
    for (const auto& t : f.terms()) {
        std::vector<std::uint64_t> exps(t.mono.size());
        for (std::size_t i = 0; i < t.mono.size(); ++i)
            exps[i] = checked_exp_mul(t.mono[i], pe);
        out.push_back(Term{Monomial(std::move(exps)), t.coeff});
    }
    // Exponent scaling preserves the grevlex order of terms, so the list is
    // already canonical; route through make for uniform validation anyway.
    return Polynomial::make(f.ring(), std::move(out));
}

Polynomial reduce_mod_p(const Polynomial& f, Prime p) {
    if (f.ring()->is_prime_field())
        throw std::invalid_argument("reduce_mod_p expects an integer-domain polynomial");
    RingPtr target = PolyRing::fp(p, f.ring()->vars());
    std::vector<Term> out;
    for (const auto& t : f.terms()) out.push_back(t);
    return Polynomial::make(std::move(target), std::move(out));
}

} // namespace fjump
