#pragma once

/**
 * @file arith.hpp
 * @brief The geometric sums s_k(a) and the generator sequence t_k(a,b,c).
 *
 *   s_0(a) = 0,  s_k(a) = 1 + a + ... + a^(k-1)
 *   t_k(a,b,c) = a^k * c + b * s_k(a)
 *
 * t_0 = c and t_{k+1} = a * t_k + b, i.e. t_k is the k-fold image of c under
 * the affine map. All functions throw asg::overflow_error instead of wrapping.
 */

#include <cstddef>
#include <stdexcept>

#include "asg/checked.hpp"
#include "asg/params.hpp"

namespace asg {

template <checked_integer I>
I ipow(I base, std::size_t exp) {
    I result = 1;
    while (exp > 0) {
        if (exp & 1U) result *= base;
        exp >>= 1U;
        if (exp > 0) base *= base;
    }
    return result;
}

template <checked_integer I>
I geometric_sum(I a, std::size_t k) {
    if (a < 1) throw std::domain_error("geometric_sum: a must be positive");
    if (a == 1) return I(k);
    I sum = 0;
    I power = 1;
    for (std::size_t i = 0; i < k; ++i) {
        sum += power;
        if (i + 1 < k) power *= a;
    }
    return sum;
}

template <checked_integer I>
I generator(BasicParams<I> const& p, std::size_t k) {
    return ipow(p.a, k) * p.c + p.b * geometric_sum(p.a, k);
}

template <checked_integer I>
I theta(BasicParams<I> const& p, I x) {
    if (x < 1) throw std::domain_error("theta is only applied to positive elements");
    return p.a * x + p.b;
}

/// Least k with s_k(a) >= threshold.
template <checked_integer I>
std::size_t least_index_reaching(I a, I threshold) {
    std::size_t k = 0;
    I s = 0;
    I power = 1;
    while (s < threshold) {
        s += power;
        ++k;
        if (s < threshold) power *= a;
    }
    return k;
}

}  // namespace asg
