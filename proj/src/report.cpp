#include "asg/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace asg {

namespace {

using nlohmann::json;

json encode_list(std::vector<Wide> const& xs) {
    json arr = json::array();
    for (auto const& x : xs) arr.push_back(encode_integer(x));
    return arr;
}

std::vector<Wide> decode_list(json const& j) {
    if (!j.is_array()) throw std::invalid_argument("expected a JSON array of integers");
    std::vector<Wide> out;
    for (auto const& e : j) out.push_back(decode_integer(e));
    return out;
}

std::string join(std::vector<Wide> const& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) s += ' ';
        s += xs[i].to_string();
    }
    return s;
}

}  // namespace

Report make_report(SemigroupProfile<Wide> prof) {
    Report r;
    r.params = prof.params;
    r.profile = std::move(prof);
    return r;
}

json encode_integer(Wide v) {
    if (v.fits<std::int64_t>()) return v.as<std::int64_t>();
    return v.to_string();
}

Wide decode_integer(json const& j) {
    if (j.is_number_unsigned()) return Wide(j.get<std::uint64_t>());
    if (j.is_number_integer()) return Wide(j.get<std::int64_t>());
    if (j.is_string()) return Wide::parse(j.get<std::string>());
    throw std::invalid_argument("expected an integer or a decimal string, got " + j.dump());
}

json to_json(Report const& r) {
    auto const& p = r.profile;
    json j;
    j["a"] = encode_integer(r.params.a);
    j["b"] = encode_integer(r.params.b);
    j["c"] = encode_integer(r.params.c);
    j["k_tilde"] = p.k_tilde;
    j["embedding_dimension"] = p.embedding_dimension();
    j["minimal_generators"] = encode_list(p.min_generators);
    j["apery_set"] = encode_list(p.apery);
    j["frobenius"] = encode_integer(p.frobenius);
    j["genus"] = encode_integer(p.genus);
    j["conductor"] = encode_integer(p.conductor);
    if (r.gaps) j["gaps"] = encode_list(*r.gaps);
    if (r.members) {
        j["members_limit"] = encode_integer(r.members_limit.value_or(Wide(0)));
        j["members"] = encode_list(*r.members);
    }
    j["tool_version"] = r.tool_version;
    j["mode"] = r.mode == computation_mode::closed_form ? "closed-form" : "verified-against-oracle";
    return j;
}

Report report_from_json(json const& j) {
    Report r;
    r.params = make_params(decode_integer(j.at("a")), decode_integer(j.at("b")), decode_integer(j.at("c")));
    auto& p = r.profile;
    p.params = r.params;
    p.k_tilde = j.at("k_tilde").get<std::size_t>();
    p.min_generators = decode_list(j.at("minimal_generators"));
    if (j.at("embedding_dimension").get<std::size_t>() != p.min_generators.size())
        throw std::invalid_argument("embedding_dimension disagrees with minimal_generators");
    p.apery = decode_list(j.at("apery_set"));
    p.frobenius = decode_integer(j.at("frobenius"));
    p.genus = decode_integer(j.at("genus"));
    p.conductor = decode_integer(j.at("conductor"));
    p.b_inverse = inverse_mod(r.params.b, r.params.c);
    if (j.contains("gaps")) r.gaps = decode_list(j.at("gaps"));
    if (j.contains("members")) {
        r.members_limit = decode_integer(j.at("members_limit"));
        r.members = decode_list(j.at("members"));
    }
    r.tool_version = j.at("tool_version").get<std::string>();
    auto mode = j.at("mode").get<std::string>();
    if (mode == "closed-form")
        r.mode = computation_mode::closed_form;
    else if (mode == "verified-against-oracle")
        r.mode = computation_mode::verified_against_oracle;
    else
        throw std::invalid_argument("unknown mode '" + mode + "'");
    return r;
}

std::string render_text(Report const& r) {
    auto const& p = r.profile;
    std::ostringstream os;
    os << "a: " << r.params.a << '\n'
       << "b: " << r.params.b << '\n'
       << "c: " << r.params.c << '\n'
       << "k_tilde: " << p.k_tilde << '\n'
       << "embedding_dimension: " << p.embedding_dimension() << '\n'
       << "minimal_generators: " << join(p.min_generators) << '\n'
       << "apery_set: " << join(p.apery) << '\n'
       << "frobenius: " << p.frobenius << '\n'
       << "genus: " << p.genus << '\n'
       << "conductor: " << p.conductor << '\n';
    if (r.gaps) os << "gaps: " << join(*r.gaps) << '\n';
    if (r.members) os << "members_below_" << r.members_limit.value_or(Wide(0)) << ": " << join(*r.members) << '\n';
    os << "mode: " << (r.mode == computation_mode::closed_form ? "closed-form" : "verified-against-oracle") << '\n';
    return os.str();
}

std::vector<Wide> members_below(SemigroupProfile<Wide> const& prof, Wide limit) {
    std::vector<Wide> out;
    for (Wide n = 0; n < limit; ++n)
        if (prof.contains(n)) out.push_back(n);
    return out;
}

std::string render_table(SemigroupProfile<Wide> const& prof, Wide limit, bool highlight) {
    Wide const c = prof.params.c;
    auto const cs = c.as<std::size_t>();
    auto const lim = limit.as<std::size_t>();
    std::size_t const columns = (lim + cs - 1) / cs;
    std::size_t const width = (limit > 0 ? (limit - 1).to_string().size() : 1) + 1;

    std::vector<Wide> least(cs);
    for (auto const& x : prof.apery) least[(x % c).as<std::size_t>()] = x;

    std::ostringstream os;
    for (std::size_t r = 0; r < cs; ++r) {
        if (least[r] >= limit) continue;
        std::string line;
        for (std::size_t q = 0; q < columns; ++q) {
            std::size_t n = q * cs + r;
            std::string cell;
            if (n < lim && Wide(n) >= least[r]) {
                bool gen = std::find(prof.min_generators.begin(), prof.min_generators.end(), Wide(n)) !=
                           prof.min_generators.end();
                cell = std::to_string(n) + (gen ? "*" : "");
                if (gen && highlight) {
                    std::string pad(width > cell.size() ? width - cell.size() : 0, ' ');
                    line += (q ? " " : "") + pad + "\033[1m" + cell + "\033[0m";
                    continue;
                }
            }
            std::string pad(width > cell.size() ? width - cell.size() : 0, ' ');
            line += (q ? " " : "") + pad + cell;
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        os << line << '\n';
    }
    return os.str();
}

}  // namespace asg
