#include "asg/oracle.hpp"

#include <algorithm>
#include <sstream>

#include "asg/semigroup.hpp"

namespace asg::oracle {

namespace {

std::uint64_t clamp_to(Wide v, std::uint64_t cap) {
    return v > Wide(cap) ? cap : v.as<std::uint64_t>();
}

template <typename T>
std::string join(std::vector<T> const& xs) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? ", " : "") << xs[i];
    os << ']';
    return os.str();
}

}  // namespace

bool OracleSemigroup::is_member(std::uint64_t n) const {
    if (n >= bound_) throw std::out_of_range("oracle: query beyond the materialized bound");
    return member_[n];
}

std::vector<std::uint64_t> OracleSemigroup::members() const {
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = 0; n < bound_; ++n)
        if (member_[n]) out.push_back(n);
    return out;
}

std::uint64_t default_bound(Params const& p) {
    validate(p);
    Wide s = 0;
    Wide t = p.c;
    while (s < p.c - 1) {
        s = s * p.a + 1;
        t = t * p.a + p.b;
    }
    Wide bound = t + p.c * 2;
    if (bound > Wide(kMaxBound))
        throw limit_exceeded("oracle bound " + bound.to_string() + " exceeds the materialization limit " +
                             std::to_string(kMaxBound));
    return bound.as<std::uint64_t>();
}

OracleSemigroup build_oracle(Params const& p, std::optional<std::uint64_t> bound_hint) {
    validate(p);
    OracleSemigroup o;
    o.params_ = p;
    o.bound_ = bound_hint ? *bound_hint : default_bound(p);
    if (o.bound_ > kMaxBound)
        throw limit_exceeded("oracle bound " + std::to_string(o.bound_) + " exceeds the materialization limit");
    if (p.c >= Wide(o.bound_))
        throw bound_too_small("oracle bound " + std::to_string(o.bound_) + " does not exceed c");

    std::uint64_t const bound = o.bound_;
    // Anything at or above the bound is irrelevant, so clamp huge coefficients.
    o.a_ = clamp_to(p.a, bound);
    o.b_ = clamp_to(p.b, bound);
    o.c_ = p.c.as<std::uint64_t>();
    o.member_.assign(bound, false);
    auto& member = o.member_;
    member[0] = true;

    std::vector<std::uint64_t> pending{o.c_};
    while (!pending.empty()) {
        // Close under addition with each new element: S + N*g.
        for (std::uint64_t g : pending) {
            if (member[g]) continue;
            for (std::uint64_t n = g; n < bound; ++n)
                if (member[n - g]) member[n] = true;
        }
        pending.clear();
        for (std::uint64_t x = 1; x < bound; ++x) {
            if (!member[x]) continue;
            unsigned __int128 y = static_cast<unsigned __int128>(o.a_) * x + o.b_;
            if (y < bound && !member[static_cast<std::uint64_t>(y)])
                pending.push_back(static_cast<std::uint64_t>(y));
        }
    }

    for (std::uint64_t n = bound - o.c_; n < bound; ++n)
        if (!member[n])
            throw bound_too_small("oracle bound " + std::to_string(bound) + " for " + to_string(p) +
                                  " does not reach past the conductor");
    std::uint64_t m = bound;
    while (m > 0 && member[m - 1]) --m;
    o.conductor_ = m;
    return o;
}

std::int64_t oracle_frobenius(OracleSemigroup const& o) {
    return static_cast<std::int64_t>(o.conductor_found()) - 1;
}

std::vector<std::uint64_t> oracle_apery(OracleSemigroup const& o) {
    std::uint64_t const c = o.seed();
    std::vector<std::uint64_t> least(c, 0);
    std::vector<bool> found(c, false);
    std::uint64_t missing = c;
    for (std::uint64_t n = 0; n < o.bound() && missing > 0; ++n) {
        if (o.is_member(n) && !found[n % c]) {
            found[n % c] = true;
            least[n % c] = n;
            --missing;
        }
    }
    if (missing > 0) throw bound_too_small("oracle: some residue class has no member below the bound");

    std::uint64_t const b_mod = (o.params().b % o.params().c).as<std::uint64_t>();
    std::vector<std::uint64_t> by_l(c);
    for (std::uint64_t l = 0; l < c; ++l)
        by_l[l] = least[static_cast<std::uint64_t>(static_cast<unsigned __int128>(b_mod) * l % c)];
    return by_l;
}

std::vector<std::uint64_t> oracle_minimal_generators(OracleSemigroup const& o) {
    std::uint64_t const c = o.seed();
    std::uint64_t const limit = std::min(o.bound(), o.conductor_found() + c);
    std::vector<std::uint64_t> gens;
    for (std::uint64_t m = 1; m < limit; ++m) {
        if (!o.is_member(m)) continue;
        // m - c being a nonzero member is the common witness; test it first.
        if (m > c && o.is_member(m - c)) continue;
        bool reducible = false;
        for (std::uint64_t y = 1; y <= m / 2 && !reducible; ++y)
            reducible = o.is_member(y) && o.is_member(m - y);
        if (!reducible) gens.push_back(m);
    }
    return gens;
}

std::vector<std::uint64_t> oracle_gaps(OracleSemigroup const& o) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = 1; n < o.bound(); ++n)
        if (!o.is_member(n)) out.push_back(n);
    return out;
}

bool representable(std::uint64_t target, std::vector<std::uint64_t> const& gens) {
    for (auto g : gens)
        if (g == 0) throw std::invalid_argument("representable: generators must be positive");
    if (target > kMaxBound) throw limit_exceeded("representable: target too large for the dynamic program");
    std::vector<bool> reach(target + 1, false);
    reach[0] = true;
    for (std::uint64_t n = 1; n <= target; ++n)
        for (auto g : gens)
            if (g <= n && reach[n - g]) {
                reach[n] = true;
                break;
            }
    return reach[target];
}

Agreement cross_check(Params const& p) {
    Agreement out;
    out.params = p;
    auto fail = [&out](std::string const& what) {
        if (out.ok) out.first_mismatch = to_string(out.params) + ": " + what;
        out.ok = false;
    };

    OracleSemigroup o = build_oracle(p);
    SemigroupProfile<Wide> prof = profile(p);

    if (Wide(oracle_frobenius(o)) != prof.frobenius)
        fail("frobenius " + prof.frobenius.to_string() + " vs oracle " + std::to_string(oracle_frobenius(o)));

    std::vector<std::uint64_t> apery = oracle_apery(o);
    std::vector<std::uint64_t> closed_apery;
    for (auto const& x : prof.apery) closed_apery.push_back(x.as<std::uint64_t>());
    if (apery != closed_apery) fail("apery " + join(closed_apery) + " vs oracle " + join(apery));

    std::vector<std::uint64_t> sieve_gaps = oracle_gaps(o);
    if (Wide(sieve_gaps.size()) != prof.genus)
        fail("genus " + prof.genus.to_string() + " vs oracle " + std::to_string(sieve_gaps.size()));

    std::vector<std::uint64_t> closed_gaps;
    for (auto const& g : gaps(prof)) closed_gaps.push_back(g.as<std::uint64_t>());
    if (closed_gaps != sieve_gaps) fail("gap lists differ");

    std::vector<std::uint64_t> gens = oracle_minimal_generators(o);
    std::vector<std::uint64_t> closed_gens;
    for (auto const& g : prof.min_generators) closed_gens.push_back(g.as<std::uint64_t>());
    if (gens != closed_gens) fail("minimal generators " + join(closed_gens) + " vs oracle " + join(gens));

    for (std::uint64_t n = 0; n < o.bound(); ++n) {
        if (prof.contains(Wide(n)) != o.is_member(n)) {
            fail("membership of " + std::to_string(n));
            break;
        }
        ++out.membership_checked;
    }
    return out;
}

}  // namespace asg::oracle
