#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "asg/params.hpp"
#include "asg/semigroup.hpp"

namespace asg {

inline constexpr char const* kToolVersion = "0.1.0";

enum class computation_mode { closed_form, verified_against_oracle };

/// Everything one invocation reports about a single semigroup.
struct Report {
    Params params;
    SemigroupProfile<Wide> profile;
    std::optional<std::vector<Wide>> gaps;
    std::optional<Wide> members_limit;
    std::optional<std::vector<Wide>> members;  // members below members_limit
    std::string tool_version = kToolVersion;
    computation_mode mode = computation_mode::closed_form;

    friend bool operator==(Report const&, Report const&) = default;
};

Report make_report(SemigroupProfile<Wide> prof);

/// Integers that fit in 64 bits are JSON numbers; larger ones are decimal strings.
nlohmann::json encode_integer(Wide v);
Wide decode_integer(nlohmann::json const& j);

nlohmann::json to_json(Report const& r);
Report report_from_json(nlohmann::json const& j);

/// "key: value" lines carrying the same numbers as to_json().
std::string render_text(Report const& r);

/// Members below limit laid out as in a hand-drawn table: one row per residue
/// class mod c (rows without members are omitted), column q holding the entry
/// in [q*c, (q+1)*c). Minimal generators carry a trailing '*', and are also
/// set in bold when highlight is on.
std::string render_table(SemigroupProfile<Wide> const& prof, Wide limit, bool highlight);

std::vector<Wide> members_below(SemigroupProfile<Wide> const& prof, Wide limit);

}  // namespace asg
