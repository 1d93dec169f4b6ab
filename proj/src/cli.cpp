#include "asg/cli.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "asg/oracle.hpp"
#include "asg/report.hpp"
#include "asg/semigroup.hpp"

namespace asg::cli {

namespace {

using nlohmann::json;

enum class output_format { text, json };

struct Options {
    std::string a, b, c;
    std::string input;
    std::string format = "text";
    int width = 128;
    std::string limit;
    std::vector<std::string> queries;
    std::string max_frobenius = std::to_string(kDefaultMaxFrobenius);
    bool verify = false;
    std::string preset;
    std::string preset_n;
};

/// Thrown for malformed command lines that CLI11 itself accepted.
class usage_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

Wide parse_integer(std::string const& text, std::string const& flag) {
    try {
        return Wide::parse(text);
    } catch (std::invalid_argument const&) {
        throw usage_error(flag + ": expected an integer, got '" + text + "'");
    }
}

output_format format_of(Options const& o) {
    return o.format == "json" ? output_format::json : output_format::text;
}

Params params_from(std::string const& a, std::string const& b, std::string const& c) {
    if (a.empty() || b.empty() || c.empty()) throw usage_error("--a, --b and --c are all required");
    return make_params(parse_integer(a, "--a"), parse_integer(b, "--b"), parse_integer(c, "--c"));
}

template <checked_integer I>
SemigroupProfile<Wide> widen(SemigroupProfile<I> const& p) {
    SemigroupProfile<Wide> w;
    w.params = p.params.template as<Wide>();
    w.k_tilde = p.k_tilde;
    for (auto const& g : p.min_generators) w.min_generators.push_back(Wide::from(g));
    for (auto const& x : p.apery) w.apery.push_back(Wide::from(x));
    w.frobenius = Wide::from(p.frobenius);
    w.genus = Wide::from(p.genus);
    w.conductor = Wide::from(p.conductor);
    w.b_inverse = Wide::from(p.b_inverse);
    return w;
}

/// Computes in the requested arithmetic width and widens the result for reporting.
SemigroupProfile<Wide> compute_profile(Params const& p, int width) {
    if (width == 64) return widen(profile(p.as<Narrow>()));
    return profile(p);
}

struct CsvRow {
    std::size_t line = 0;
    std::string a, b, c;
};

std::string trim(std::string s) {
    auto not_space = [](unsigned char ch) { return !std::isspace(ch); };
    s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
    s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
    return s;
}

std::vector<std::string> split_commas(std::string const& line) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(trim(cell));
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    return cells;
}

std::vector<CsvRow> read_csv(std::string const& path) {
    std::ifstream in(path);
    if (!in) throw usage_error("cannot open input file '" + path + "'");
    std::string line;
    std::size_t lineno = 0;
    std::vector<CsvRow> rows;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty()) continue;
        auto cells = split_commas(line);
        if (!header_seen) {
            if (cells != std::vector<std::string>{"a", "b", "c"})
                throw usage_error(path + ": expected header 'a,b,c'");
            header_seen = true;
            continue;
        }
        CsvRow row;
        row.line = lineno;
        if (cells.size() == 3) {
            row.a = cells[0];
            row.b = cells[1];
            row.c = cells[2];
        }
        rows.push_back(row);
    }
    if (!header_seen) throw usage_error(path + ": empty input");
    return rows;
}

/// Inclusive integer range "lo..hi" or a single integer.
std::pair<Wide, Wide> parse_range(std::string const& text, std::string const& flag) {
    if (text.empty()) throw usage_error(flag + " is required");
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        Wide v = parse_integer(text, flag);
        return {v, v};
    }
    Wide lo = parse_integer(text.substr(0, dots), flag);
    Wide hi = parse_integer(text.substr(dots + 2), flag);
    if (hi < lo) throw usage_error(flag + ": empty range '" + text + "'");
    return {lo, hi};
}

void emit_reports(std::vector<Report> const& reports, bool as_array, output_format fmt, std::ostream& out) {
    if (fmt == output_format::json) {
        if (as_array) {
            json arr = json::array();
            for (auto const& r : reports) arr.push_back(to_json(r));
            out << arr.dump(2) << '\n';
        } else {
            out << to_json(reports.front()).dump(2) << '\n';
        }
        return;
    }
    for (std::size_t i = 0; i < reports.size(); ++i) {
        if (i) out << '\n';
        out << render_text(reports[i]);
    }
}

Report build_report(Params const& p, Options const& o, std::ostream& err, int& status) {
    Report r = make_report(compute_profile(p, o.width));
    if (o.verify) {
        auto agreement = oracle::cross_check(p);
        if (!agreement.ok) {
            err << "oracle disagreement: " << agreement.first_mismatch << '\n';
            status = negative;
        } else {
            r.mode = computation_mode::verified_against_oracle;
        }
    }
    return r;
}

int cmd_info(Options const& o, std::ostream& out, std::ostream& err) {
    int status = ok;
    std::vector<Report> reports;
    if (!o.input.empty()) {
        for (auto const& row : read_csv(o.input)) {
            try {
                reports.push_back(build_report(params_from(row.a, row.b, row.c), o, err, status));
            } catch (std::invalid_argument const& e) {
                err << o.input << ':' << row.line << ": skipped: " << e.what() << '\n';
                if (status == ok) status = invalid_input;
            }
        }
        emit_reports(reports, true, format_of(o), out);
        return status;
    }
    reports.push_back(build_report(params_from(o.a, o.b, o.c), o, err, status));
    emit_reports(reports, false, format_of(o), out);
    return status;
}

int cmd_table(Options const& o, std::ostream& out, Environment env) {
    Params p = params_from(o.a, o.b, o.c);
    auto prof = compute_profile(p, o.width);
    Wide limit = o.limit.empty() ? prof.conductor + p.c : parse_integer(o.limit, "--limit");
    if (limit < 1) throw usage_error("--limit must be positive");
    Wide cap = parse_integer(o.max_frobenius, "--max-frobenius");
    if (limit > cap + p.c)
        throw limit_exceeded("table limit " + limit.to_string() + " exceeds the output cap " + cap.to_string());
    if (format_of(o) == output_format::json) {
        Report r = make_report(prof);
        r.members_limit = limit;
        r.members = members_below(prof, limit);
        out << to_json(r).dump(2) << '\n';
        return ok;
    }
    out << render_table(prof, limit, env.color);
    return ok;
}

int cmd_member(Options const& o, std::ostream& out) {
    Params p = params_from(o.a, o.b, o.c);
    if (o.queries.empty()) throw usage_error("member: at least one --n is required");
    std::vector<Wide> ns;
    for (auto const& q : o.queries) {
        Wide n = parse_integer(q, "--n");
        if (n < 0) throw usage_error("--n must be non-negative (got " + q + ")");
        ns.push_back(n);
    }
    // Membership needs only x_l for each queried class, so the Apery set is not materialized.
    auto answer = [&](auto const& params) {
        using I = std::decay_t<decltype(params.a)>;
        GeneratorTable<I> table(params);
        I b_inverse = inverse_mod(params.b, params.c);
        std::vector<std::tuple<Wide, bool, Wide, Wide>> rows;
        for (auto const& n : ns) {
            I nn = I::from(n);
            I l = apery_index(params, b_inverse, nn);
            I x = table.apery(l);
            rows.emplace_back(n, nn >= x, Wide::from(l), Wide::from(x));
        }
        return rows;
    };
    auto rows = o.width == 64 ? answer(p.as<Narrow>()) : answer(p);

    bool all_in = true;
    if (format_of(o) == output_format::json) {
        json j;
        j["a"] = encode_integer(p.a);
        j["b"] = encode_integer(p.b);
        j["c"] = encode_integer(p.c);
        j["queries"] = json::array();
        for (auto const& [n, in, l, x] : rows) {
            j["queries"].push_back({{"n", encode_integer(n)}, {"member", in}, {"l", encode_integer(l)},
                                    {"x_l", encode_integer(x)}});
            all_in = all_in && in;
        }
        out << j.dump(2) << '\n';
    } else {
        for (auto const& [n, in, l, x] : rows) {
            out << n << ": " << (in ? "in" : "out") << " (l=" << l << ", x_l=" << x << ")\n";
            all_in = all_in && in;
        }
    }
    return all_in ? ok : negative;
}

int cmd_gaps(Options const& o, std::ostream& out) {
    Params p = params_from(o.a, o.b, o.c);
    Wide cap = parse_integer(o.max_frobenius, "--max-frobenius");
    // Check the cap before materializing anything of size c.
    Wide f = o.width == 64 ? Wide::from(frobenius(p.as<Narrow>())) : frobenius(p);
    if (f > cap)
        throw limit_exceeded("Frobenius number " + f.to_string() + " exceeds --max-frobenius " + cap.to_string());
    Report r = make_report(compute_profile(p, o.width));
    r.gaps = gaps(r.profile, cap);
    if (format_of(o) == output_format::json) {
        out << to_json(r).dump(2) << '\n';
    } else {
        out << "frobenius: " << r.profile.frobenius << '\n' << "genus: " << r.profile.genus << '\n' << "gaps:";
        for (auto const& g : *r.gaps) out << ' ' << g;
        out << '\n';
    }
    return ok;
}

Params preset_params(std::string const& name, std::string const& n_text) {
    if (n_text.empty()) throw usage_error("preset: --n is required");
    Wide n = parse_integer(n_text, "--n");
    if (n < 1) throw usage_error("preset " + name + ": --n must be a positive integer");
    auto exponent = n.as<std::size_t>();
    if (name == "thabit") return make_params(Wide(2), Wide(1), Wide(3) * ipow(Wide(2), exponent) - 1);
    if (name == "mersenne") {
        if (n < 2)
            throw usage_error("preset mersenne: --n must be at least 2 (n = 1 gives c = 2^1 - 1 = 1 < 2)");
        return make_params(Wide(2), Wide(1), ipow(Wide(2), exponent) - 1);
    }
    throw usage_error("unknown preset '" + name + "' (expected thabit or mersenne)");
}

int cmd_preset(Options const& o, std::ostream& out, std::ostream& err) {
    Params p = preset_params(o.preset, o.preset_n);
    int status = ok;
    std::vector<Report> reports{build_report(p, o, err, status)};
    emit_reports(reports, false, format_of(o), out);
    return status;
}

struct VerifyOutcome {
    enum kind { pass, fail, skipped_invalid } result = pass;
    Params params;
    std::string detail;
};

int cmd_verify(Options const& o, std::ostream& out, std::ostream& err) {
    std::vector<Params> triples;
    std::size_t skipped = 0;
    bool bad_rows = false;
    if (!o.input.empty()) {
        for (auto const& row : read_csv(o.input)) {
            try {
                triples.push_back(params_from(row.a, row.b, row.c));
            } catch (std::invalid_argument const& e) {
                err << o.input << ':' << row.line << ": skipped: " << e.what() << '\n';
                ++skipped;
                bad_rows = true;
            }
        }
    } else {
        auto [a_lo, a_hi] = parse_range(o.a, "--a");
        auto [b_lo, b_hi] = parse_range(o.b, "--b");
        auto [c_lo, c_hi] = parse_range(o.c, "--c");
        for (Wide a = a_lo; a <= a_hi; ++a)
            for (Wide b = b_lo; b <= b_hi; ++b)
                for (Wide c = c_lo; c <= c_hi; ++c) {
                    try {
                        triples.push_back(make_params(a, b, c));
                    } catch (invalid_params const&) {
                        ++skipped;
                    }
                }
    }

    std::vector<VerifyOutcome> outcomes(triples.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < triples.size(); i = next++) {
            auto& res = outcomes[i];
            res.params = triples[i];
            try {
                auto agreement = oracle::cross_check(triples[i]);
                if (!agreement.ok) {
                    res.result = VerifyOutcome::fail;
                    res.detail = agreement.first_mismatch;
                }
            } catch (std::exception const& e) {
                res.result = VerifyOutcome::fail;
                res.detail = to_string(triples[i]) + ": " + e.what();
            }
        }
    };
    unsigned threads = std::max(1U, std::min<unsigned>(std::thread::hardware_concurrency(),
                                                       static_cast<unsigned>(triples.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    std::size_t passed = 0, failed = 0;
    std::string first;
    for (auto const& r : outcomes) {
        if (r.result == VerifyOutcome::pass) ++passed;
        if (r.result == VerifyOutcome::fail) {
            if (failed == 0) first = r.detail;
            ++failed;
        }
    }

    if (format_of(o) == output_format::json) {
        json j{{"checked", triples.size()}, {"passed", passed}, {"failed", failed}, {"skipped_invalid", skipped}};
        j["first_counterexample"] = failed ? json(first) : json(nullptr);
        out << j.dump(2) << '\n';
    } else {
        if (triples.size() == 1 && skipped == 0)
            out << to_string(triples.front()) << ": " << (failed ? "fail" : "pass") << '\n';
        if (triples.empty() && skipped > 0) out << "skipped-invalid\n";
        out << "checked " << triples.size() << " triples: " << passed << " passed, " << failed << " failed, "
            << skipped << " skipped-invalid\n";
        if (failed) out << "first counterexample: " << first << '\n';
    }
    if (failed) return negative;
    if (bad_rows || (triples.empty() && skipped > 0)) return invalid_input;
    return ok;
}

void add_triple(CLI::App* cmd, Options& o, bool with_input) {
    cmd->add_option("--a", o.a, "affine multiplier a >= 1");
    cmd->add_option("--b", o.b, "affine offset b >= 1, coprime to c");
    cmd->add_option("--c", o.c, "seed c >= 2");
    if (with_input) cmd->add_option("--input", o.input, "CSV file with header a,b,c");
}

void add_common(CLI::App* cmd, Options& o) {
    cmd->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--width", o.width, "arithmetic width in bits")->check(CLI::IsMember({64, 128}));
}

}  // namespace

int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err, Environment env) {
    Options o;
    CLI::App app{"Invariants of the smallest numerical semigroup containing c and closed under x -> a*x + b",
                 "semigroup"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);

    auto* info = app.add_subcommand("info", "generators, Apery set, Frobenius number, genus");
    add_triple(info, o, true);
    add_common(info, o);
    info->add_flag("--verify", o.verify, "cross-check against the brute-force oracle");

    auto* table = app.add_subcommand("table", "members below a limit, one row per residue class mod c");
    add_triple(table, o, false);
    add_common(table, o);
    table->add_option("--limit", o.limit, "exclusive upper limit (default: conductor + c)");
    table->add_option("--max-frobenius", o.max_frobenius, "output cap");

    auto* member = app.add_subcommand("member", "membership queries");
    add_triple(member, o, false);
    add_common(member, o);
    member->add_option("--n", o.queries, "integer to test (repeatable)")->allow_extra_args(false);

    auto* gaps_cmd = app.add_subcommand("gaps", "list every gap");
    add_triple(gaps_cmd, o, false);
    add_common(gaps_cmd, o);
    gaps_cmd->add_option("--max-frobenius", o.max_frobenius, "refuse when the Frobenius number exceeds this");

    auto* preset = app.add_subcommand("preset", "Thabit or Mersenne numerical semigroups");
    preset->add_option("name", o.preset, "thabit | mersenne")->required();
    preset->add_option("--n", o.preset_n, "exponent n");
    add_common(preset, o);
    preset->add_flag("--verify", o.verify, "cross-check against the brute-force oracle");

    auto* verify = app.add_subcommand("verify", "compare closed forms against the oracle");
    verify->add_option("--a", o.a, "a or range lo..hi");
    verify->add_option("--b", o.b, "b or range lo..hi");
    verify->add_option("--c", o.c, "c or range lo..hi");
    verify->add_option("--input", o.input, "CSV file with header a,b,c");
    verify->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (CLI::CallForHelp const&) {
        out << app.help();
        return ok;
    } catch (CLI::CallForVersion const&) {
        out << kToolVersion << '\n';
        return ok;
    } catch (CLI::ParseError const& e) {
        err << "error: " << e.what() << '\n';
        return invalid_input;
    }

    try {
        if (info->parsed()) return cmd_info(o, out, err);
        if (table->parsed()) return cmd_table(o, out, env);
        if (member->parsed()) return cmd_member(o, out);
        if (gaps_cmd->parsed()) return cmd_gaps(o, out);
        if (preset->parsed()) return cmd_preset(o, out, err);
        if (verify->parsed()) return cmd_verify(o, out, err);
    } catch (overflow_error const& e) {
        err << "error: " << e.what() << '\n';
        return overflow;
    } catch (limit_exceeded const& e) {
        err << "error: " << e.what() << '\n';
        return invalid_input;
    } catch (std::invalid_argument const& e) {
        err << "error: " << e.what() << '\n';
        return invalid_input;
    } catch (std::exception const& e) {
        err << "internal error: " << e.what() << '\n';
        return negative;
    }
    return invalid_input;
}

}  // namespace asg::cli
