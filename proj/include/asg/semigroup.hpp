#pragma once

/**
 * @file semigroup.hpp
 * @brief Closed-form invariants of G_{a,b}(c), the smallest numerical semigroup
 * containing c and closed under x -> a*x + b.
 *
 * With k~ = min{k : s_k(a) >= c}:
 *   - minimal generators are t_0, ..., t_{k~-1}, so the embedding dimension is k~;
 *   - for l in [1, c-1], write l = sum j_i * s_i(a) with {j_i} a-reduced, then
 *     x_l = sum j_i * t_i is the least element congruent to b*l (mod c);
 *   - the Apery set with respect to c is {x_0 = 0, x_1, ..., x_{c-1}};
 *   - F = x_{c-1} - c and g = (1/c) * sum x_l - (c-1)/2.
 *
 * Nothing here enumerates the semigroup except gaps(), which is O(F).
 */

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "asg/arith.hpp"
#include "asg/checked.hpp"
#include "asg/params.hpp"
#include "asg/reduced.hpp"

namespace asg {

inline constexpr long long kDefaultMaxFrobenius = 10'000'000;
inline constexpr long long kMaxMaterializedSeed = 100'000'000;

/// (x * y) mod m for 0 <= x, y < m, without forming x * y.
template <checked_integer I>
I mulmod(I x, I y, I m) {
    I result = 0;
    x %= m;
    while (y > 0) {
        if (y % 2 == 1) {
            result += x;
            if (result >= m) result -= m;
        }
        x += x;
        if (x >= m) x -= m;
        y /= 2;
    }
    return result;
}

/// Inverse of x modulo m by the extended Euclidean algorithm; requires gcd(x, m) = 1.
template <checked_integer I>
I inverse_mod(I x, I m) {
    I old_r = x % m, r = m;
    I old_s = 1, s = 0;
    while (r != 0) {
        I q = old_r / r;
        I tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    if (old_r != 1) throw std::domain_error("inverse_mod: arguments are not coprime");
    I inv = old_s % m;
    return inv < 0 ? inv + m : inv;
}

/// s_0..s_{k~-1} and t_0..t_{k~-1}, shared by every Apery computation for one triple.
template <checked_integer I>
class GeneratorTable {
public:
    explicit GeneratorTable(BasicParams<I> const& p) : params_(p) {
        validate(p);
        k_tilde_ = least_index_reaching(p.a, p.c);
        // Only indices below k~ are ever used: s_{k~} >= c exceeds every l.
        sums_.reserve(k_tilde_);
        gens_.reserve(k_tilde_);
        sums_.push_back(0);
        gens_.push_back(p.c);
        for (std::size_t k = 1; k < k_tilde_; ++k) {
            sums_.push_back(sums_.back() * p.a + 1);
            gens_.push_back(gens_.back() * p.a + p.b);
        }
    }

    [[nodiscard]] BasicParams<I> const& params() const noexcept { return params_; }
    [[nodiscard]] std::size_t k_tilde() const noexcept { return k_tilde_; }
    [[nodiscard]] I sum(std::size_t k) const { return sums_.at(k); }
    [[nodiscard]] I gen(std::size_t k) const { return gens_.at(k); }

    /// x_l for l in [0, c-1], by the greedy a-reduced decomposition of l.
    [[nodiscard]] I apery(I l) const {
        if (l < 0 || l >= params_.c) throw std::out_of_range("apery: l must lie in [0, c-1]");
        I x = 0;
        auto end = sums_.end();
        while (l > 0) {
            // Largest k < k~ with s_k <= l.
            auto it = std::upper_bound(sums_.begin() + 1, end, l) - 1;
            auto k = static_cast<std::size_t>(it - sums_.begin());
            I q = l / *it;
            x += q * gens_[k];
            l = l % *it;
            end = it;
        }
        return x;
    }

private:
    BasicParams<I> params_;
    std::size_t k_tilde_ = 0;
    std::vector<I> sums_;
    std::vector<I> gens_;
};

template <checked_integer I>
std::size_t k_tilde(BasicParams<I> const& p) {
    validate(p);
    return least_index_reaching(p.a, p.c);
}

template <checked_integer I>
std::size_t embedding_dimension(BasicParams<I> const& p) {
    return k_tilde(p);
}

template <checked_integer I>
std::vector<I> minimal_generators(BasicParams<I> const& p) {
    GeneratorTable<I> table(p);
    std::vector<I> gens;
    for (std::size_t k = 0; k < table.k_tilde(); ++k) gens.push_back(table.gen(k));
    return gens;
}

template <checked_integer I>
I apery_element(BasicParams<I> const& p, I l) {
    return GeneratorTable<I>(p).apery(l);
}

template <checked_integer I>
std::vector<I> apery_set(GeneratorTable<I> const& table) {
    I c = table.params().c;
    if (c > kMaxMaterializedSeed)
        throw limit_exceeded("c = " + c.to_string() + " is too large to materialize the Apery set (limit " +
                             std::to_string(kMaxMaterializedSeed) + ")");
    auto n = c.template as<std::size_t>();
    std::vector<I> xs;
    xs.reserve(n);
    for (std::size_t l = 0; l < n; ++l) xs.push_back(table.apery(I(l)));
    return xs;
}

template <checked_integer I>
std::vector<I> apery_set(BasicParams<I> const& p) {
    return apery_set(GeneratorTable<I>(p));
}

template <checked_integer I>
I frobenius(BasicParams<I> const& p) {
    GeneratorTable<I> table(p);
    return table.apery(p.c - 1) - p.c;
}

/// Selmer's formula, evaluated as floor(S/c) plus a parity correction so that
/// no intermediate exceeds S. Throws std::logic_error if the result is not integral.
template <checked_integer I>
I genus_from_apery_sum(I apery_sum, I c) {
    I q = apery_sum / c;
    I r = apery_sum % c;
    if (c % 2 == 1) {
        if (r != 0) throw std::logic_error("genus: sum of Apery elements is not divisible by c");
        return q - (c - 1) / 2;
    }
    if (r != c / 2) throw std::logic_error("genus: sum of Apery elements is not congruent to c/2 mod c");
    return q + 1 - c / 2;
}

template <checked_integer I>
I genus(BasicParams<I> const& p) {
    GeneratorTable<I> table(p);
    I sum = 0;
    for (I l = 1; l < p.c; ++l) sum += table.apery(l);
    return genus_from_apery_sum(sum, p.c);
}

/// The residue l with b*l = n (mod c).
template <checked_integer I>
I apery_index(BasicParams<I> const& p, I b_inverse, I n) {
    return mulmod(n % p.c, b_inverse, p.c);
}

template <checked_integer I>
bool contains(BasicParams<I> const& p, I n) {
    if (n < 0) return false;
    GeneratorTable<I> table(p);
    I l = apery_index(p, inverse_mod(p.b, p.c), n);
    return n >= table.apery(l);
}

template <checked_integer I>
struct SemigroupProfile {
    BasicParams<I> params;
    std::size_t k_tilde = 0;
    std::vector<I> min_generators;
    std::vector<I> apery;  // indexed by l; apery[l] = b*l (mod c)
    I frobenius;
    I genus;
    I conductor;
    I b_inverse;  // b^{-1} mod c, for O(1) membership

    [[nodiscard]] std::size_t embedding_dimension() const noexcept { return min_generators.size(); }

    [[nodiscard]] I apery_index(I n) const { return asg::apery_index(params, b_inverse, n); }

    [[nodiscard]] bool contains(I n) const {
        if (n < 0) return false;
        return n >= apery[apery_index(n).template as<std::size_t>()];
    }

    friend bool operator==(SemigroupProfile const&, SemigroupProfile const&) = default;
};

template <checked_integer I>
SemigroupProfile<I> profile(BasicParams<I> const& p) {
    GeneratorTable<I> table(p);
    SemigroupProfile<I> prof;
    prof.params = p;
    prof.k_tilde = table.k_tilde();
    for (std::size_t k = 0; k < prof.k_tilde; ++k) prof.min_generators.push_back(table.gen(k));
    prof.apery = apery_set(table);

    I sum = 0;
    for (I const& x : prof.apery) sum += x;
    I top = prof.apery.back();
    if (top <= 0 || *std::max_element(prof.apery.begin(), prof.apery.end()) != top)
        throw std::logic_error("profile: x_{c-1} is not the largest Apery element");
    prof.frobenius = top - p.c;
    prof.genus = genus_from_apery_sum(sum, p.c);
    prof.conductor = prof.frobenius + 1;
    prof.b_inverse = inverse_mod(p.b, p.c);
    return prof;
}

/// All gaps in increasing order. Refuses when F exceeds max_frobenius.
template <checked_integer I>
std::vector<I> gaps(SemigroupProfile<I> const& prof, I max_frobenius = I(kDefaultMaxFrobenius)) {
    if (prof.frobenius > max_frobenius)
        throw limit_exceeded("Frobenius number " + prof.frobenius.to_string() + " exceeds the gaps cap " +
                             max_frobenius.to_string());
    I c = prof.params.c;
    std::vector<I> by_residue(prof.apery.size());
    for (I const& x : prof.apery) by_residue[(x % c).template as<std::size_t>()] = x;
    std::vector<I> out;
    auto f = prof.frobenius.template as<std::size_t>();
    auto cs = c.template as<std::size_t>();
    for (std::size_t n = 1; n <= f; ++n)
        if (I(n) < by_residue[n % cs]) out.push_back(I(n));
    return out;
}

template <checked_integer I>
std::vector<I> gaps(BasicParams<I> const& p, I max_frobenius = I(kDefaultMaxFrobenius)) {
    I f = frobenius(p);
    if (f > max_frobenius)
        throw limit_exceeded("Frobenius number " + f.to_string() + " exceeds the gaps cap " +
                             max_frobenius.to_string());
    return gaps(profile(p), max_frobenius);
}

}  // namespace asg
