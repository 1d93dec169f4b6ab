#pragma once

/**
 * @file reduced.hpp
 * @brief a-reduced coefficient vectors.
 *
 * A coefficient vector (j_0, j_1, ..., j_k) is a-reduced when
 *   - j_i lies in [0, a] for every i >= 1,
 *   - the top positive index carries a nonzero coefficient,
 *   - j_k = a for some k >= 1 forces j_i = 0 for 1 <= i < k.
 * j_0 is unconstrained. Such vectors give unique representations
 *   l = sum_{i>=1} j_i * s_i(a)
 * and, read against t_i instead of s_i, canonical expressions of semigroup
 * elements. The ordering compare() is monotone in both weighted sums.
 */

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "asg/arith.hpp"
#include "asg/checked.hpp"
#include "asg/params.hpp"

namespace asg {

template <checked_integer I>
class AReducedRepr {
public:
    /// Validates and canonicalizes (trailing zeros above index 0 are dropped).
    AReducedRepr(std::vector<I> coeffs, I a) : coeffs_(std::move(coeffs)), a_(a) {
        canonicalize(coeffs_);
        if (!is_reduced(coeffs_, a_)) throw std::invalid_argument("coefficients are not a-reduced");
    }

    [[nodiscard]] std::vector<I> const& coeffs() const noexcept { return coeffs_; }
    [[nodiscard]] I ambient() const noexcept { return a_; }

    /// Coefficient at index i (zero beyond the stored range).
    [[nodiscard]] I operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : I{}; }

    /// Highest index >= 1 with a nonzero coefficient, or 0 when there is none.
    [[nodiscard]] std::size_t top() const noexcept { return coeffs_.size() - 1; }

    [[nodiscard]] I s_value() const {
        I sum = 0;
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) sum += coeffs_[i] * geometric_sum(a_, i);
        return sum;
    }

    /// sum_i j_i * t_i(p), including the index-0 term.
    [[nodiscard]] I t_value(BasicParams<I> const& p) const {
        I sum = 0;
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) sum += coeffs_[i] * generator(p, i);
        return sum;
    }

    friend bool operator==(AReducedRepr const&, AReducedRepr const&) = default;

    static void canonicalize(std::vector<I>& v) {
        if (v.empty()) v.push_back(0);
        while (v.size() > 1 && v.back() == 0) v.pop_back();
    }

    static bool is_reduced(std::vector<I> const& v, I a) {
        if (v.empty()) return false;
        if (v.size() > 1 && v.back() == 0) return false;
        if (v[0] < 0) return false;
        bool seen_nonzero_below = false;
        for (std::size_t i = 1; i < v.size(); ++i) {
            if (v[i] < 0 || v[i] > a) return false;
            if (v[i] == a && seen_nonzero_below) return false;
            if (v[i] != 0) seen_nonzero_below = true;
        }
        return true;
    }

private:
    std::vector<I> coeffs_;
    I a_;
};

/// The unique a-reduced vector with j_0 = 0 and sum_{i>=1} j_i * s_i(a) = l.
///
/// Greedy: pick k with s_k(a) <= l < s_{k+1}(a), take q = l / s_k(a) (at most
/// a), and continue with the remainder.
template <checked_integer I>
AReducedRepr<I> decompose(I a, I l) {
    if (a < 1) throw std::domain_error("decompose: a must be positive");
    if (l < 1) throw std::domain_error("decompose: l must be positive");

    // Tabulate s_1 .. s_k until s_{k+1} > l.
    std::vector<I> sums{0, 1};
    while (sums.back() <= l) sums.push_back(sums.back() * a + 1);
    std::size_t k = sums.size() - 2;

    std::vector<I> coeffs(k + 1, I{});
    I rest = l;
    while (rest > 0) {
        while (sums[k] > rest) --k;
        coeffs[k] = rest / sums[k];
        rest = rest % sums[k];
    }
    return AReducedRepr<I>(std::move(coeffs), a);
}

/// The order on a-reduced vectors: top positive index first, then the
/// coefficient at the highest index where they differ. Index 0 is ignored.
template <checked_integer I>
std::strong_ordering compare(AReducedRepr<I> const& lhs, AReducedRepr<I> const& rhs) {
    if (auto cmp = lhs.top() <=> rhs.top(); cmp != 0) return cmp;
    for (std::size_t i = lhs.top(); i >= 1; --i)
        if (lhs[i] != rhs[i]) return lhs[i] <=> rhs[i];
    return std::strong_ordering::equal;
}

template <checked_integer I>
struct ReductionStep {
    std::size_t high;  // M(l): largest index with coefficient >= a
    std::size_t low;   // m(l): smallest positive index with nonzero coefficient
    std::vector<I> coeffs;

    friend bool operator==(ReductionStep const&, ReductionStep const&) = default;
};

template <checked_integer I>
struct ReductionTrace {
    std::map<std::size_t, I> initial;
    std::vector<ReductionStep<I>> steps;
    AReducedRepr<I> final;
};

/// Rewrites sum_i raw[i] * t_i(p) into an a-reduced vector with the same value.
///
/// Each step applies the exchange
///   a * t_M + t_m = t_{M+1} + a * t_{m-1}     (1 <= m <= M)
/// at M = max{i : j_i >= a} and m = min{i >= 1 : j_i != 0}, until the vector
/// is a-reduced. Input that is already reduced yields a zero-step trace.
template <checked_integer I>
ReductionTrace<I> reduce(BasicParams<I> const& p, std::map<std::size_t, I> const& raw) {
    std::size_t width = raw.empty() ? 1 : raw.rbegin()->first + 1;
    std::vector<I> j(width, I{});
    for (auto const& [index, coeff] : raw) {
        if (coeff < 0) throw std::invalid_argument("reduce: coefficients must be non-negative");
        j[index] = coeff;
    }
    AReducedRepr<I>::canonicalize(j);

    std::vector<ReductionStep<I>> steps;
    while (!AReducedRepr<I>::is_reduced(j, p.a)) {
        std::size_t high = 0;
        for (std::size_t i = j.size(); i-- > 1;) {
            if (j[i] >= p.a) {
                high = i;
                break;
            }
        }
        std::size_t low = 1;
        while (j[low] == 0) ++low;
        if (high == 0) throw std::logic_error("reduce: unreduced vector without a coefficient >= a");

        if (high + 1 >= j.size()) j.resize(high + 2, I{});
        j[low - 1] += p.a;
        j[low] -= 1;
        j[high] -= p.a;
        j[high + 1] += 1;
        AReducedRepr<I>::canonicalize(j);
        steps.push_back({high, low, j});
    }
    return {raw, std::move(steps), AReducedRepr<I>(std::move(j), p.a)};
}

}  // namespace asg
