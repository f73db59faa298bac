#include "fjump/groebner.hpp"

#include <algorithm>
#include <set>

namespace fjump {

namespace {

struct OrderLess {
    MonomialOrder order;
    bool operator()(const Monomial& a, const Monomial& b) const { return order.less(a, b); }
};
struct OrderGreater {
    MonomialOrder order;
    bool operator()(const Monomial& a, const Monomial& b) const { return order.less(b, a); }
};

// Working form: terms keyed descending under the active order.
using WorkPoly = std::map<Monomial, Integer, OrderGreater>;

WorkPoly to_work(const Polynomial& f, MonomialOrder order) {
    WorkPoly w{OrderGreater{order}};
    for (const auto& t : f.terms()) w.emplace(t.mono, t.coeff);
    return w;
}

Polynomial from_work(const RingPtr& ring, const WorkPoly& w) {
    std::vector<Term> terms;
    terms.reserve(w.size());
    for (const auto& [m, c] : w) terms.push_back(Term{m, c});
    return Polynomial::make(ring, std::move(terms));
}

struct Reducer {
    Monomial lead;
    Integer lead_inv; // inverse of the leading coefficient mod p
    const Polynomial* poly;
};

Integer mod_p(const Integer& c, const Integer& p) {
    Integer out;
    mpz_fdiv_r(out.get_mpz_t(), c.get_mpz_t(), p.get_mpz_t());
    return out;
}

Integer invert_mod(const Integer& c, const Integer& p) {
    Integer out;
    if (mpz_invert(out.get_mpz_t(), c.get_mpz_t(), p.get_mpz_t()) == 0)
        throw std::logic_error("non-invertible leading coefficient");
    return out;
}

Monomial leading_monomial(const Polynomial& f, MonomialOrder order) {
    const auto& ts = f.terms();
    std::size_t best = 0;
    for (std::size_t i = 1; i < ts.size(); ++i)
        if (order.less(ts[best].mono, ts[i].mono)) best = i;
    return ts[best].mono;
}

const Term& leading_term_ref(const Polynomial& f, MonomialOrder order, std::size_t& index) {
    const auto& ts = f.terms();
    index = 0;
    for (std::size_t i = 1; i < ts.size(); ++i)
        if (order.less(ts[index].mono, ts[i].mono)) index = i;
    return ts[index];
}

std::vector<Reducer> make_reducers(const std::vector<Polynomial>& basis, MonomialOrder order,
                                   const Integer& p) {
    std::vector<Reducer> reducers;
    reducers.reserve(basis.size());
    for (const auto& b : basis) {
        if (b.is_zero()) throw std::invalid_argument("zero polynomial in division basis");
        std::size_t idx;
        const Term& lt = leading_term_ref(b, order, idx);
        reducers.push_back(Reducer{lt.mono, invert_mod(lt.coeff, p), &b});
    }
    return reducers;
}

// Subtracts factor * x^shift * g from w.
void axpy(WorkPoly& w, const Integer& factor, const Monomial& shift, const Polynomial& g,
          const Integer& p) {
    for (const auto& t : g.terms()) {
        Monomial m = t.mono * shift;
        auto it = w.find(m);
        Integer delta = mod_p(factor * t.coeff, p);
        if (delta == 0) continue;
        if (it == w.end()) {
            w.emplace(std::move(m), mod_p(-delta, p));
        } else {
            it->second = mod_p(it->second - delta, p);
            if (it->second == 0) w.erase(it);
        }
    }
}

Polynomial normal_form_impl(const Polynomial& f, const std::vector<Reducer>& reducers,
                            MonomialOrder order, const Integer& p) {
    WorkPoly work = to_work(f, order);
    WorkPoly remainder{OrderGreater{order}};
    while (!work.empty()) {
        auto lead_it = work.begin();
        const Monomial& m = lead_it->first;
        bool reduced = false;
        for (const auto& r : reducers) {
            if (!Monomial::divides(r.lead, m)) continue;
            Monomial shift = Monomial::quotient(m, r.lead);
            Integer factor = mod_p(lead_it->second * r.lead_inv, p);
            axpy(work, factor, shift, *r.poly, p); // cancels the lead exactly
            reduced = true;
            break;
        }
        if (!reduced) {
            remainder.insert(work.extract(lead_it));
        }
    }
    return from_work(f.ring(), remainder);
}

void require_prime_field(const RingPtr& ring) {
    if (!ring || !ring->is_prime_field())
        throw std::invalid_argument("ideal arithmetic requires a prime-field ring");
}

} // namespace

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       MonomialOrder order) {
    require_prime_field(f.ring());
    if (f.is_zero() || basis.empty()) return f;
    Integer p(f.ring()->prime().value());
    return normal_form_impl(f, make_reducers(basis, order, p), order, p);
}

std::vector<Polynomial> buchberger_reduced_gb(const RingPtr& ring,
                                              std::vector<Polynomial> generators,
                                              MonomialOrder order, const ResourceCaps& caps) {
    require_prime_field(ring);
    Integer p(ring->prime().value());

    std::vector<Polynomial> basis;
    std::vector<Monomial> leads;
    auto add_monic = [&](const Polynomial& g) {
        std::size_t idx;
        const Term& lt = leading_term_ref(g, order, idx);
        basis.push_back(g.scalar_mul(invert_mod(lt.coeff, p)));
        leads.push_back(lt.mono);
    };

    for (const auto& g : generators) {
        if (!same_ring(g.ring(), ring)) throw std::invalid_argument("generator from wrong ring");
        if (!g.is_zero()) add_monic(g);
    }
    if (basis.empty()) return {};

    // Pending S-pairs keyed by (lcm degree, i, j): the normal strategy.
    struct PairKey {
        std::uint64_t degree;
        std::size_t i, j;
        auto operator<=>(const PairKey&) const = default;
    };
    std::set<PairKey> pending;
    std::uint64_t pairs_seen = 0;
    auto push_pairs_for = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            pending.insert(PairKey{Monomial::lcm(leads[i], leads[j]).total_degree(), i, j});
            if (++pairs_seen > caps.max_pairs)
                throw ResourceError("Buchberger pair budget exceeded");
        }
    };
    for (std::size_t j = 1; j < basis.size(); ++j) push_pairs_for(j);

    auto is_pending = [&](std::size_t a, std::size_t b) {
        if (a > b) std::swap(a, b);
        PairKey k{Monomial::lcm(leads[a], leads[b]).total_degree(), a, b};
        return pending.count(k) > 0;
    };

    while (!pending.empty()) {
        auto [deg, i, j] = *pending.begin();
        pending.erase(pending.begin());
        Monomial lcm = Monomial::lcm(leads[i], leads[j]);

        // Coprime-lead criterion.
        if (lcm == leads[i] * leads[j]) continue;
        // Chain criterion: some k with lead dividing the lcm and both side
        // pairs already handled.
        bool skip = false;
        for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
            if (k == i || k == j) continue;
            if (Monomial::divides(leads[k], lcm) && !is_pending(i, k) && !is_pending(j, k))
                skip = true;
        }
        if (skip) continue;

        // Monic generators: the S-polynomial needs no coefficient scaling.
        WorkPoly s{OrderGreater{order}};
        axpy(s, Integer(p - 1), Monomial::quotient(lcm, leads[i]), basis[i], p);
        axpy(s, Integer(1), Monomial::quotient(lcm, leads[j]), basis[j], p);
        Polynomial spoly = from_work(ring, s);
        if (spoly.is_zero()) continue;
        Polynomial rem = normal_form_impl(spoly, make_reducers(basis, order, p), order, p);
        if (rem.is_zero()) continue;
        add_monic(rem);
        push_pairs_for(basis.size() - 1);
    }

    // Minimalize: drop elements whose lead is divisible by another kept lead.
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            if (!Monomial::divides(leads[j], leads[i])) continue;
            if (leads[j] == leads[i] && j > i) continue; // equal leads: keep first
            redundant = true;
        }
        if (!redundant) kept.push_back(i);
    }
    std::vector<Polynomial> minimal;
    minimal.reserve(kept.size());
    for (auto i : kept) minimal.push_back(basis[i]);

    // Tail-reduce each element against the others; leads are stable here.
    std::vector<Polynomial> reduced = minimal;
    for (std::size_t i = 0; i < reduced.size(); ++i) {
        std::vector<Polynomial> others;
        others.reserve(reduced.size() - 1);
        for (std::size_t j = 0; j < reduced.size(); ++j)
            if (j != i) others.push_back(reduced[j]);
        if (!others.empty())
            reduced[i] = normal_form_impl(reduced[i], make_reducers(others, order, p), order, p);
    }

    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
        return order.less(leading_monomial(a, order), leading_monomial(b, order));
    });
    return reduced;
}

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators) : ring_(std::move(ring)) {
    require_prime_field(ring_);
    for (auto& g : generators) {
        if (!same_ring(g.ring(), ring_))
            throw std::invalid_argument("generator from a different ring");
        if (!g.is_zero()) gens_.push_back(std::move(g));
    }
}

Ideal Ideal::unit(RingPtr ring) {
    Polynomial one = Polynomial::constant(ring, Integer(1));
    return Ideal(std::move(ring), {one});
}

Ideal::Ideal(const Ideal& other) : ring_(other.ring_), gens_(other.gens_) {
    std::lock_guard<std::mutex> lock(other.cache_mutex_);
    gb_cache_ = other.gb_cache_;
}

Ideal& Ideal::operator=(const Ideal& other) {
    if (this == &other) return *this;
    std::scoped_lock lock(cache_mutex_, other.cache_mutex_);
    ring_ = other.ring_;
    gens_ = other.gens_;
    gb_cache_ = other.gb_cache_;
    return *this;
}

const std::vector<Polynomial>& Ideal::groebner_basis(MonomialOrder order,
                                                     const ResourceCaps& caps) const {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto it = gb_cache_.find(order.kind);
    if (it == gb_cache_.end())
        it = gb_cache_.emplace(order.kind, buchberger_reduced_gb(ring_, gens_, order, caps)).first;
    return it->second;
}

bool ideal_contains_poly(const Ideal& I, const Polynomial& f, MonomialOrder order,
                         const ResourceCaps& caps) {
    if (!same_ring(f.ring(), I.ring())) throw std::invalid_argument("ring mismatch");
    if (f.is_zero()) return true;
    const auto& gb = I.groebner_basis(order, caps);
    if (gb.empty()) return false; // zero ideal
    return normal_form(f, gb, order).is_zero();
}

bool ideal_equal(const Ideal& I, const Ideal& J, const ResourceCaps& caps) {
    if (!same_ring(I.ring(), J.ring())) throw std::invalid_argument("ring mismatch");
    MonomialOrder order{MonomialOrderKind::grevlex};
    return I.groebner_basis(order, caps) == J.groebner_basis(order, caps);
}

bool ideal_subset(const Ideal& I, const Ideal& J, const ResourceCaps& caps) {
    for (const auto& g : I.generators())
        if (!ideal_contains_poly(J, g, MonomialOrder{MonomialOrderKind::grevlex}, caps))
            return false;
    return true;
}

Ideal ideal_sum(const Ideal& I, const Ideal& J) {
    if (!same_ring(I.ring(), J.ring())) throw std::invalid_argument("ring mismatch");
    std::vector<Polynomial> gens = I.generators();
    gens.insert(gens.end(), J.generators().begin(), J.generators().end());
    return Ideal(I.ring(), std::move(gens));
}

Ideal bracket_power(const Ideal& I, unsigned e, const ResourceCaps& caps) {
    std::vector<Polynomial> gens;
    gens.reserve(I.generators().size());
    for (const auto& g : I.generators()) gens.push_back(frobenius_power(g, e, caps));
    return Ideal(I.ring(), std::move(gens));
}

const Integer& Colength::value() const {
    if (!value_) throw std::logic_error("colength is infinite");
    return *value_;
}

std::string Colength::str() const { return value_ ? value_->get_str() : "infinite"; }

Colength colength(const Ideal& I, MonomialOrder order, const ResourceCaps& caps) {
    const auto& gb = I.groebner_basis(order, caps);
    if (gb.empty()) return Colength::infinite(); // zero ideal, n >= 1
    std::size_t n = I.ring()->nvars();
    std::vector<Monomial> leads;
    leads.reserve(gb.size());
    for (const auto& g : gb) leads.push_back(leading_monomial(g, order));
    for (const auto& m : leads)
        if (m.is_one()) return Colength::finite(Integer(0)); // unit ideal

    // Pure-power box bounds; unbounded in any variable means infinite.
    std::vector<std::uint64_t> box(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t best = 0;
        bool found = false;
        for (const auto& m : leads) {
            bool pure = m[i] > 0;
            for (std::size_t j = 0; j < n && pure; ++j)
                if (j != i && m[j] != 0) pure = false;
            if (pure && (!found || m[i] < best)) {
                best = m[i];
                found = true;
            }
        }
        if (!found) return Colength::infinite();
        box[i] = best;
    }

    Integer cells(1);
    for (auto b : box) cells *= Integer(b);
    if (cells > Integer(caps.max_colength_box))
        throw ResourceError("standard-monomial box exceeds cap");

    // Count box cells outside the lead-term staircase.
    Integer count(0);
    std::vector<std::uint64_t> idx(n, 0);
    for (;;) {
        Monomial m{std::vector<std::uint64_t>(idx)};
        bool divisible = false;
        for (const auto& l : leads)
            if (Monomial::divides(l, m)) {
                divisible = true;
                break;
            }
        if (!divisible) count += 1;
        std::size_t k = 0;
        while (k < n && ++idx[k] == box[k]) idx[k++] = 0;
        if (k == n) break;
    }
    return Colength::finite(count);
}

Ideal interreduced(const Ideal& I, const ResourceCaps& caps) {
    auto gb = I.groebner_basis(MonomialOrder{MonomialOrderKind::grevlex}, caps);
    return Ideal(I.ring(), std::move(gb));
}

} // namespace fjump
