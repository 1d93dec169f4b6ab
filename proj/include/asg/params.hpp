#pragma once

#include <numeric>
#include <stdexcept>
#include <string>

#include "asg/checked.hpp"

namespace asg {

/// Reasons a triple (a, b, c) cannot identify a numerical semigroup.
enum class invalid_reason { seed_too_small, multiplier_not_positive, offset_not_positive, not_coprime };

class invalid_params : public std::invalid_argument {
public:
    invalid_params(invalid_reason reason, std::string const& what)
        : std::invalid_argument(what), reason_(reason) {}

    [[nodiscard]] invalid_reason reason() const noexcept { return reason_; }

private:
    invalid_reason reason_;
};

/// Raised when a request would materialize more data than the configured cap allows.
class limit_exceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

template <checked_integer I>
I gcd(I x, I y) {
    if (x < 0) x = -x;
    if (y < 0) y = -y;
    while (y != 0) {
        I r = x % y;
        x = y;
        y = r;
    }
    return x;
}

/// The affine map x -> a*x + b together with the seed c.
///
/// A valid triple has a >= 1, b >= 1, c >= 2 and gcd(b, c) = 1; under these
/// conditions the smallest semigroup containing c and closed under the map
/// is co-finite. Construct through make_params() to get the checks.
template <checked_integer I>
struct BasicParams {
    I a;
    I b;
    I c;

    friend bool operator==(BasicParams const&, BasicParams const&) = default;

    template <checked_integer J>
    [[nodiscard]] BasicParams<J> as() const {
        return {J::from(a), J::from(b), J::from(c)};
    }
};

using Params = BasicParams<Wide>;

/// Checks the validity invariants in a fixed order: seed first, then the map
/// coefficients, then coprimality.
template <checked_integer I>
void validate(BasicParams<I> const& p) {
    if (p.c < 2)
        throw invalid_params(invalid_reason::seed_too_small,
                             "c must be at least 2 (got " + p.c.to_string() + ")");
    if (p.a < 1)
        throw invalid_params(invalid_reason::multiplier_not_positive,
                             "a must be a positive integer (got " + p.a.to_string() + ")");
    if (p.b < 1)
        throw invalid_params(invalid_reason::offset_not_positive,
                             "b must be a positive integer (got " + p.b.to_string() + ")");
    I d = gcd(p.b, p.c);
    if (d != 1)
        throw invalid_params(invalid_reason::not_coprime,
                             "gcd(b, c) = " + d.to_string() +
                                 " != 1: every element would be divisible by it, so the closure is not co-finite");
}

template <checked_integer I = Wide>
BasicParams<I> make_params(I a, I b, I c) {
    BasicParams<I> p{a, b, c};
    validate(p);
    return p;
}

template <checked_integer I>
std::string to_string(BasicParams<I> const& p) {
    return "(" + p.a.to_string() + ", " + p.b.to_string() + ", " + p.c.to_string() + ")";
}

}  // namespace asg
