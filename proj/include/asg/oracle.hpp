#pragma once

/**
 * @file oracle.hpp
 * @brief Brute-force construction of G_{a,b}(c) by fixpoint closure.
 *
 * The oracle knows nothing about a-reduced representations or Apery formulas.
 * It starts from {0, c}, closes under addition and under x -> a*x + b for
 * nonzero x, and stops when a full pass adds nothing. Everything is
 * materialized in a membership array below an explicit bound.
 */

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "asg/params.hpp"

namespace asg::oracle {

inline constexpr std::uint64_t kMaxBound = 200'000'000;

class bound_too_small : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class OracleSemigroup {
public:
    [[nodiscard]] Params const& params() const noexcept { return params_; }
    [[nodiscard]] std::uint64_t bound() const noexcept { return bound_; }
    [[nodiscard]] std::uint64_t seed() const noexcept { return c_; }
    /// Least m with [m, bound) contained in the members.
    [[nodiscard]] std::uint64_t conductor_found() const noexcept { return conductor_; }

    [[nodiscard]] bool is_member(std::uint64_t n) const;
    [[nodiscard]] std::vector<std::uint64_t> members() const;

    friend OracleSemigroup build_oracle(Params const& p, std::optional<std::uint64_t> bound_hint);

private:
    Params params_;
    std::uint64_t a_ = 0, b_ = 0, c_ = 0;
    std::uint64_t bound_ = 0;
    std::uint64_t conductor_ = 0;
    std::vector<bool> member_;
};

/// t_k + 2c for the least k with s_k(a) >= c - 1, computed by iterating the map.
std::uint64_t default_bound(Params const& p);

OracleSemigroup build_oracle(Params const& p, std::optional<std::uint64_t> bound_hint = std::nullopt);

/// Largest non-member below the bound, or -1 when there is none.
std::int64_t oracle_frobenius(OracleSemigroup const& o);

/// Least member in the class of b*l (mod c), for l = 0..c-1.
std::vector<std::uint64_t> oracle_apery(OracleSemigroup const& o);

/// Nonzero members below conductor_found + c that are not the sum of two
/// smaller nonzero members.
std::vector<std::uint64_t> oracle_minimal_generators(OracleSemigroup const& o);

/// Gaps found by sieving the member array.
std::vector<std::uint64_t> oracle_gaps(OracleSemigroup const& o);

/// Whether target is a non-negative integer combination of gens (coin-problem DP).
bool representable(std::uint64_t target, std::vector<std::uint64_t> const& gens);

/// Outcome of comparing every closed-form invariant against the oracle.
struct Agreement {
    Params params;
    bool ok = true;
    std::string first_mismatch;
    std::size_t membership_checked = 0;
};

Agreement cross_check(Params const& p);

}  // namespace asg::oracle
