#include <doctest.h>

#include <random>

#include "asg/report.hpp"

using namespace asg;

TEST_CASE("integer encoding switches to strings past 64 bits") {
    CHECK(encode_integer(Wide(17)) == nlohmann::json(17));
    CHECK(encode_integer(Wide(-5)) == nlohmann::json(-5));
    Wide big = Wide::parse("36893488147419103232");  // 2^65
    CHECK(encode_integer(big) == nlohmann::json("36893488147419103232"));
    CHECK(decode_integer(encode_integer(big)) == big);
    CHECK(decode_integer(nlohmann::json(18446744073709551615ULL)) == Wide::parse("18446744073709551615"));
    CHECK_THROWS_AS(decode_integer(nlohmann::json(1.5)), std::invalid_argument);
    CHECK_THROWS_AS(decode_integer(nlohmann::json("x")), std::invalid_argument);
}

TEST_CASE("reports survive a JSON round trip") {
    std::mt19937 rng(5);
    for (int i = 0; i < 60; ++i) {
        long long a = 1 + rng() % 50, b = 1 + rng() % 30, c = 2 + rng() % 60;
        if (std::gcd(b, c) != 1) continue;
        Report r = make_report(profile(Params{a, b, c}));
        if (i % 2) r.gaps = gaps(r.profile);
        if (i % 3 == 0) {
            r.members_limit = Wide(40);
            r.members = members_below(r.profile, Wide(40));
        }
        if (i % 5 == 0) r.mode = computation_mode::verified_against_oracle;
        auto text = to_json(r).dump();
        CHECK(report_from_json(nlohmann::json::parse(text)) == r);
    }
    // values beyond 64 bits go through strings
    Report huge = make_report(profile(Params{Wide::parse("10000000000000000000"), 1, 3}));
    CHECK(to_json(huge)["frobenius"].is_string());
    CHECK(report_from_json(to_json(huge)) == huge);
}

TEST_CASE("report parsing rejects inconsistent documents") {
    auto j = to_json(make_report(profile(Params{3, 1, 5})));
    auto bad = j;
    bad["embedding_dimension"] = 4;
    CHECK_THROWS_AS(report_from_json(bad), std::invalid_argument);
    bad = j;
    bad["mode"] = "guess";
    CHECK_THROWS_AS(report_from_json(bad), std::invalid_argument);
    bad = j;
    bad["b"] = 5;
    CHECK_THROWS_AS(report_from_json(bad), invalid_params);
}

TEST_CASE("member tables") {
    auto prof = profile(Params{2, 3, 4});
    std::string expected =
        "  0  4*   8  12  16  20  24\n"
        "                        25*\n"
        "                     22  26\n"
        "        11*  15  19  23  27\n";
    CHECK(render_table(prof, Wide(28), false) == expected);
    auto bold = render_table(prof, Wide(28), true);
    CHECK(bold.find("\033[1m25*\033[0m") != std::string::npos);
    // rows with nothing below the limit are dropped
    CHECK(render_table(prof, Wide(12), false) == "  0  4*   8\n        11*\n");
}
