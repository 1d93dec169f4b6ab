#include <doctest.h>

#include <map>
#include <random>

#include "asg/reduced.hpp"
#include "support.hpp"

using namespace asg;
using namespace asg::testing;

namespace {

std::vector<Wide> coeffs(std::initializer_list<long long> xs) { return {xs.begin(), xs.end()}; }

std::vector<long long> narrow(std::vector<Wide> const& xs) {
    std::vector<long long> out;
    for (auto const& x : xs) out.push_back(x.as<long long>());
    return out;
}

}  // namespace

TEST_CASE("decompose: worked values") {
    CHECK(decompose(Wide(3), Wide(2)).coeffs() == coeffs({0, 2}));
    CHECK(decompose(Wide(3), Wide(4)).coeffs() == coeffs({0, 0, 1}));
    CHECK(decompose(Wide(2), Wide(3)).coeffs() == coeffs({0, 0, 1}));
    CHECK(decompose(Wide(1), Wide(5)).coeffs() == coeffs({0, 0, 0, 0, 0, 1}));
    CHECK_THROWS_AS(decompose(Wide(2), Wide(0)), std::domain_error);
    CHECK_THROWS_AS(decompose(Wide(0), Wide(3)), std::domain_error);
}

TEST_CASE("decompose: a = 1 yields a single unit coefficient, confirmed exhaustively") {
    auto all = enumerate_reduced(1, 12, 12);
    for (long long l = 1; l <= 12; ++l) {
        std::vector<std::vector<long long>> hits;
        for (auto const& j : all)
            if (s_weighted(j, 1) == l) hits.push_back(j);
        REQUIRE(hits.size() == 1);
        CHECK(narrow(decompose(Wide(1), Wide(l)).coeffs()) == hits.front());
        CHECK(decompose(Wide(1), Wide(l)).top() == static_cast<std::size_t>(l));
    }
}

TEST_CASE("decompose: round trip and uniqueness against exhaustive enumeration") {
    for (long long a = 1; a <= 6; ++a) {
        auto all = enumerate_reduced(a, 200, 200);
        std::map<long long, std::vector<std::vector<long long>>> by_value;
        for (auto const& j : all) by_value[s_weighted(j, a)].push_back(j);
        for (long long l = 1; l <= 200; ++l) {
            auto r = decompose(Wide(a), Wide(l));
            CHECK(AReducedRepr<Wide>::is_reduced(r.coeffs(), Wide(a)));
            CHECK(r[0] == 0);
            CHECK(r.s_value() == l);
            REQUIRE_MESSAGE(by_value[l].size() == 1, "a=" << a << " l=" << l);
            CHECK(narrow(r.coeffs()) == by_value[l].front());
        }
    }
}

TEST_CASE("a-reduced validity") {
    Wide a = 2;
    CHECK(AReducedRepr<Wide>::is_reduced(coeffs({4, 0, 2, 1, 1, 1}), a));
    CHECK_FALSE(AReducedRepr<Wide>::is_reduced(coeffs({0, 1, 2}), a));  // j_2 = a above a nonzero j_1
    CHECK_FALSE(AReducedRepr<Wide>::is_reduced(coeffs({0, 3}), a));
    CHECK_FALSE(AReducedRepr<Wide>::is_reduced(coeffs({0, 1, 0}), a));  // trailing zero
    CHECK(AReducedRepr<Wide>::is_reduced(coeffs({7}), a));
    CHECK_THROWS_AS(AReducedRepr<Wide>(coeffs({0, 1, 2}), a), std::invalid_argument);
    CHECK(AReducedRepr<Wide>(coeffs({0, 1, 0, 0}), a).top() == 1);
}

TEST_CASE("reduce: worked example with value 449") {
    Params p{2, 3, 4};
    std::map<std::size_t, Wide> raw{{1, 2}, {2, 4}, {4, 3}};
    auto trace = reduce(p, raw);
    REQUIRE(trace.steps.size() == 2);
    CHECK(trace.steps[0].high == 4);
    CHECK(trace.steps[0].low == 1);
    CHECK(trace.steps[0].coeffs == coeffs({2, 1, 4, 0, 1, 1}));
    CHECK(trace.steps[1].high == 2);
    CHECK(trace.steps[1].low == 1);
    CHECK(trace.steps[1].coeffs == coeffs({4, 0, 2, 1, 1, 1}));
    CHECK(trace.final.coeffs() == coeffs({4, 0, 2, 1, 1, 1}));
    CHECK(trace.initial == raw);
    for (auto const& step : trace.steps) {
        long long value = t_weighted(narrow(step.coeffs), 2, 3, 4);
        CHECK(value == 449);
    }
    CHECK(trace.final.t_value(p) == 449);
}

TEST_CASE("reduce: already reduced input takes zero steps") {
    Params p{3, 1, 5};
    auto trace = reduce(p, {{1, Wide(1)}});
    CHECK(trace.steps.empty());
    CHECK(trace.final.coeffs() == coeffs({0, 1}));

    auto only_zero = reduce(p, {{0, Wide(9)}});
    CHECK(only_zero.steps.empty());
    CHECK(only_zero.final.coeffs() == coeffs({9}));

    CHECK_THROWS_AS(reduce(p, {{2, Wide(-1)}}), std::invalid_argument);
}

TEST_CASE("reduce: result is one of the enumerated a-reduced forms of the value") {
    Params p{3, 1, 3};
    auto trace = reduce(p, {{1, Wide(4)}});
    CHECK(trace.final.t_value(p) == 40);
    CHECK(AReducedRepr<Wide>::is_reduced(trace.final.coeffs(), Wide(3)));

    // a-reduced vectors with any j_0 >= 0 whose t-weighted sum is 40.
    std::vector<std::vector<long long>> candidates;
    for (auto j : enumerate_reduced(3, 6, 40)) {
        long long positive = t_weighted(j, 3, 1, 3);
        if (positive <= 40 && (40 - positive) % 3 == 0) {
            j[0] = (40 - positive) / 3;
            candidates.push_back(j);
        }
    }
    CHECK(std::find(candidates.begin(), candidates.end(), narrow(trace.final.coeffs())) != candidates.end());
}

TEST_CASE("reduce: random inputs keep their value at every step") {
    std::mt19937 rng(7);
    for (int iter = 0; iter < 400; ++iter) {
        long long a = 1 + rng() % 4, b = 1 + rng() % 6, c = 2 + rng() % 9;
        Params p{a, b, c};
        std::map<std::size_t, Wide> raw;
        int terms = 1 + static_cast<int>(rng() % 4);
        for (int t = 0; t < terms; ++t) raw[1 + rng() % 5] = Wide(static_cast<long long>(rng() % 12));
        raw[1 + rng() % 5] = Wide(1 + static_cast<long long>(rng() % 12));

        long long value = 0;
        for (auto const& [i, j] : raw) value += j.as<long long>() * t_loop(a, b, c, static_cast<int>(i));
        auto trace = reduce(p, raw);
        for (auto const& step : trace.steps) {
            CHECK(t_weighted(narrow(step.coeffs), a, b, c) == value);
            CHECK(step.low >= 1);
            CHECK(step.low <= step.high);
        }
        CHECK(trace.final.t_value(p) == value);
        CHECK(AReducedRepr<Wide>::is_reduced(trace.final.coeffs(), p.a));
    }
}

TEST_CASE("compare: examples") {
    Wide a = 3;
    AReducedRepr<Wide> j1_2(coeffs({0, 2}), a), j2_1(coeffs({0, 0, 1}), a), j12(coeffs({0, 1, 1}), a),
        j2_2(coeffs({0, 0, 2}), a);
    CHECK(compare(j1_2, j2_1) == std::strong_ordering::less);
    CHECK(compare(j2_1, j2_1) == std::strong_ordering::equal);
    CHECK(compare(j12, j2_2) == std::strong_ordering::less);
    CHECK(compare(j2_2, j12) == std::strong_ordering::greater);
    CHECK(j12.s_value() == 5);
    CHECK(j2_2.s_value() == 8);
    // index 0 is not part of the order
    CHECK(compare(AReducedRepr<Wide>(coeffs({5, 1}), a), AReducedRepr<Wide>(coeffs({0, 1}), a)) ==
          std::strong_ordering::equal);
}

TEST_CASE("compare: monotone in both weighted sums over all pairs with top index <= 4") {
    for (long long a = 1; a <= 4; ++a) {
        auto all = enumerate_reduced(a, 4, 1'000'000);
        Params p{a, 3, 7};
        if (a == 3) p = Params{a, 2, 9};
        std::vector<AReducedRepr<Wide>> reprs;
        std::vector<long long> svals, tvals;
        for (auto const& j : all) {
            reprs.emplace_back(widen(j), Wide(a));
            svals.push_back(s_weighted(j, a));
            tvals.push_back(t_weighted(j, a, p.b.as<long long>(), p.c.as<long long>()));
        }
        for (std::size_t x = 0; x < reprs.size(); ++x)
            for (std::size_t y = 0; y < reprs.size(); ++y) {
                if (x == y) continue;
                bool less = compare(reprs[x], reprs[y]) == std::strong_ordering::less;
                if (less != (tvals[x] < tvals[y]) || less != (svals[x] < svals[y])) {
                    FAIL("order mismatch for a=" << a << " pair " << x << "," << y);
                }
            }
    }
}

TEST_CASE("boundedness: a-reduced sums stay below the next term") {
    for (long long a = 1; a <= 5; ++a)
        for (long long b = 1; b <= 4; ++b)
            for (long long c = 2; c <= 6; ++c) {
                if (std::gcd(b, c) != 1) continue;
                for (auto const& j : enumerate_reduced(a, 5, 1'000'000)) {
                    int k = static_cast<int>(j.size()) - 1;
                    CHECK(t_weighted(j, a, b, c) < t_loop(a, b, c, k + 1));
                    CHECK(s_weighted(j, a) < s_loop(a, k + 1));
                }
            }
}
