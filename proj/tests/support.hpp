#pragma once

// Test-only brute force helpers. Nothing here calls into the closed forms.

#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

#include "asg/checked.hpp"
#include "asg/params.hpp"

namespace asg::testing {

/// 1 + a + ... + a^(k-1) by summing explicit powers.
inline long long s_loop(long long a, int k) {
    long long sum = 0, power = 1;
    for (int i = 0; i < k; ++i) {
        sum += power;
        power *= a;
    }
    return sum;
}

/// a^k * c + b * s_k(a) by iterating x -> a*x + b k times from c.
inline long long t_loop(long long a, long long b, long long c, int k) {
    long long x = c;
    for (int i = 0; i < k; ++i) x = a * x + b;
    return x;
}

/// Every a-reduced vector (j_0 = 0, top index in [1, max_top]) whose s-weighted
/// sum does not exceed max_value, found by depth-first search over coefficients.
inline std::vector<std::vector<long long>> enumerate_reduced(long long a, int max_top, long long max_value) {
    std::vector<std::vector<long long>> out;
    for (int top = 1; top <= max_top; ++top) {
        if (s_loop(a, top) > max_value) break;
        std::vector<long long> j(top + 1, 0);
        std::function<void(int, long long, bool)> dfs = [&](int i, long long value, bool forced_zero) {
            if (i == 0) {
                out.push_back(j);
                return;
            }
            long long lo = (i == top) ? 1 : 0;
            long long hi = forced_zero ? 0 : a;
            for (long long v = lo; v <= hi; ++v) {
                long long next = value + v * s_loop(a, i);
                if (next > max_value) break;
                j[i] = v;
                dfs(i - 1, next, forced_zero || v == a);
            }
            j[i] = 0;
        };
        dfs(top, 0, false);
    }
    return out;
}

inline long long s_weighted(std::vector<long long> const& j, long long a) {
    long long sum = 0;
    for (std::size_t i = 1; i < j.size(); ++i) sum += j[i] * s_loop(a, static_cast<int>(i));
    return sum;
}

inline long long t_weighted(std::vector<long long> const& j, long long a, long long b, long long c) {
    long long sum = 0;
    for (std::size_t i = 0; i < j.size(); ++i) sum += j[i] * t_loop(a, b, c, static_cast<int>(i));
    return sum;
}

inline std::vector<Wide> widen(std::vector<long long> const& xs) {
    return {xs.begin(), xs.end()};
}

/// Valid triples of the standard sweep a in [1,4], b in [1,9], c in [2,40].
inline std::vector<Params> sweep_triples() {
    std::vector<Params> out;
    for (long long a = 1; a <= 4; ++a)
        for (long long b = 1; b <= 9; ++b)
            for (long long c = 2; c <= 40; ++c)
                if (std::gcd(b, c) == 1) out.push_back(Params{a, b, c});
    return out;
}

}  // namespace asg::testing
