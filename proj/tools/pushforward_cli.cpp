// Command-line front end: single computations, verification campaigns and
// parameter scans, emitted as text, JSON or CSV.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pushforward/campaign.hpp"
#include "pushforward/genus0.hpp"
#include "pushforward/genus1.hpp"
#include "pushforward/hyperelliptic.hpp"
#include "pushforward/sampling.hpp"
#include "pushforward/stabilization.hpp"
#include "pushforward/verification.hpp"

namespace {

using pushforward::Int;
using Json = nlohmann::ordered_json;

enum class Format { kText, kJson, kCsv };

// ---------------------------------------------------------------- parsing

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream is(s);
    while (std::getline(is, item, sep)) out.push_back(trim(item));
    return out;
}

Int parse_int(const std::string& s, const std::string& what) {
    try {
        std::size_t used = 0;
        const long long v = std::stoll(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw pushforward::Error(pushforward::ErrorCode::kParse, what + ": '" + s + "' is not an integer");
    }
}

std::vector<Int> parse_int_list(const std::string& s, const std::string& what) {
    std::vector<Int> out;
    for (const auto& item : split(s, ',')) out.push_back(parse_int(item, what));
    return out;
}

/// "p=<prime>; f=<c_0>,...,<c_{2g+1}>"
pushforward::HyperellipticCurve parse_curve(const std::string& text) {
    std::optional<Int> p;
    std::optional<std::vector<Int>> coeffs;
    for (const auto& field : split(text, ';')) {
        if (field.empty()) continue;
        const auto eq = field.find('=');
        if (eq == std::string::npos)
            throw pushforward::Error(pushforward::ErrorCode::kParse, "curve field '" + field + "' lacks '='");
        const std::string key = trim(field.substr(0, eq));
        const std::string value = trim(field.substr(eq + 1));
        if (key == "p")
            p = parse_int(value, "curve prime");
        else if (key == "f")
            coeffs = parse_int_list(value, "curve coefficient");
        else
            throw pushforward::Error(pushforward::ErrorCode::kParse, "unknown curve field '" + key + "'");
    }
    if (!p || !coeffs) throw pushforward::Error(pushforward::ErrorCode::kParse, "curve needs both p= and f=");
    if (*p < 2) throw pushforward::Error(pushforward::ErrorCode::kInvalidCurve, "p must be a prime >= 3");
    return pushforward::HyperellipticCurve(static_cast<std::uint64_t>(*p), *coeffs);
}

/// "inf:<c>; pt:<x0>,<y0>:<mult>; ..."
pushforward::Divisor parse_divisor(const std::string& text, const pushforward::HyperellipticCurve& curve) {
    pushforward::Divisor d;
    for (const auto& term : split(text, ';')) {
        if (term.empty()) continue;
        const auto parts = split(term, ':');
        if (parts.size() == 2 && parts[0] == "inf") {
            d += pushforward::Divisor(parse_int(parts[1], "coefficient at inf"));
        } else if (parts.size() == 3 && parts[0] == "pt") {
            const auto xy = parse_int_list(parts[1], "point coordinate");
            if (xy.size() != 2)
                throw pushforward::Error(pushforward::ErrorCode::kParse, "point '" + parts[1] + "' needs x,y");
            const auto& field = curve.field();
            d.add_point({field.from_int(xy[0]), field.from_int(xy[1])}, parse_int(parts[2], "point multiplicity"));
        } else {
            throw pushforward::Error(pushforward::ErrorCode::kParse, "divisor term '" + term + "' is malformed");
        }
    }
    curve.validate(d);
    return d;
}

// ---------------------------------------------------------------- emission

std::string twists_field(const pushforward::SplittingType& b) {
    std::string out;
    for (Int t : b.twists()) out += (out.empty() ? "" : " ") + std::to_string(t);
    return out;
}

Json splitting_json(const pushforward::SplittingType& b) {
    Json runs = Json::array();
    for (const auto& run : b.runs()) runs.push_back({{"twist", run.twist}, {"mult", run.mult}});
    return Json{{"splitting", runs},        {"rank", b.rank()},           {"degree", b.degree()},
                {"h0", pushforward::h0(b)}, {"h1", pushforward::h1(b)}, {"spread", pushforward::spread(b)}};
}

// A flat record; nested JSON values are emitted compactly in text and CSV.
std::string scalar_text(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "";
    return v.dump();
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += (c == '"') ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

void emit_record(std::ostream& os, const Json& record, Format format) {
    switch (format) {
        case Format::kJson: os << record.dump() << '\n'; break;
        case Format::kText:
            for (const auto& [key, value] : record.items()) {
                if (key == "splitting" && value.is_array()) {
                    std::vector<Int> twists;
                    for (const auto& run : value)
                        for (Int k = 0; k < run["mult"].get<Int>(); ++k) twists.push_back(run["twist"].get<Int>());
                    os << "splitting: " << pushforward::SplittingType(twists).to_string() << '\n';
                } else {
                    os << key << ": " << (value.is_null() ? std::string("none") : scalar_text(value)) << '\n';
                }
            }
            break;
        case Format::kCsv: {
            std::vector<std::string> header;
            std::vector<std::string> row;
            for (const auto& [key, value] : record.items()) {
                header.push_back(key);
                std::string cell;
                if (key == "splitting" && value.is_array()) {
                    for (const auto& run : value)
                        for (Int k = 0; k < run["mult"].get<Int>(); ++k)
                            cell += (cell.empty() ? "" : " ") + std::to_string(run["twist"].get<Int>());
                } else {
                    cell = scalar_text(value);
                }
                row.push_back(csv_escape(cell));
            }
            for (std::size_t k = 0; k < header.size(); ++k) os << (k ? "," : "") << header[k];
            os << '\n';
            for (std::size_t k = 0; k < row.size(); ++k) os << (k ? "," : "") << row[k];
            os << '\n';
            break;
        }
    }
}

Json report_json(const pushforward::CampaignReport& r) {
    Json exemplars = Json::array();
    for (const auto& e : r.exemplars)
        exemplars.push_back({{"index", e.index}, {"input", e.input}, {"expected", e.expected}, {"actual", e.actual}});
    return Json{{"campaign", r.campaign}, {"seed", r.seed},     {"instances", r.instances}, {"passed", r.passed},
                {"failed", r.failed},     {"wall_ms", r.wall_ms}, {"exemplars", exemplars}};
}

void emit_report(std::ostream& os, const pushforward::CampaignReport& r, Format format) {
    if (format == Format::kJson) {
        os << report_json(r).dump() << '\n';
        return;
    }
    if (format == Format::kCsv) {
        os << "campaign,seed,instances,passed,failed,wall_ms\n"
           << r.campaign << ',' << r.seed << ',' << r.instances << ',' << r.passed << ',' << r.failed << ','
           << r.wall_ms << '\n';
        if (!r.exemplars.empty()) {
            os << "index,input,expected,actual\n";
            for (const auto& e : r.exemplars)
                os << e.index << ',' << csv_escape(e.input) << ',' << csv_escape(e.expected) << ','
                   << csv_escape(e.actual) << '\n';
        }
        return;
    }
    os << "campaign: " << r.campaign << "\nseed: " << r.seed << "\ninstances: " << r.instances
       << "\npassed: " << r.passed << "\nfailed: " << r.failed << "\nwall_ms: " << r.wall_ms << '\n';
    for (const auto& e : r.exemplars)
        os << "failure #" << e.index << ": " << e.input << "\n  expected: " << e.expected << "\n  actual:   " << e.actual
           << '\n';
}

// One row per sampled instance: p, g, curve, divisor, m, n, d, splitting, spread, bound, within_bound.
void emit_scan(std::ostream& os, const std::vector<Json>& rows, Format format) {
    if (format == Format::kJson) {
        os << Json(rows).dump() << '\n';
        return;
    }
    const char* columns[] = {"p", "g", "curve", "divisor", "m", "n", "d", "splitting", "spread", "bound", "within_bound"};
    const char sep = format == Format::kCsv ? ',' : '\t';
    for (std::size_t k = 0; k < std::size(columns); ++k) os << (k ? std::string(1, sep) : "") << columns[k];
    os << '\n';
    for (const auto& row : rows) {
        for (std::size_t k = 0; k < std::size(columns); ++k) {
            const std::string cell = scalar_text(row[columns[k]]);
            os << (k ? std::string(1, sep) : "") << (format == Format::kCsv ? csv_escape(cell) : cell);
        }
        os << '\n';
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Direct images of bundles under maps from curves to the projective line"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format_name = "text";
    std::string out_path;
    app.add_option("--format", format_name, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--out", out_path, "Write output to this file instead of stdout");

    Int n = 0, m = 0, r = 1, d = 0, g = 0, lo = 0, rank = 0, trials = 100, max_genus = 3, max_m = 3;
    std::uint64_t seed = 0;
    std::string exceptional, h0_list, mode = "any", curve_text, divisor_text, campaign_name;
    std::optional<Int> bounds_d;

    auto* g0 = app.add_subcommand("g0", "Direct image of O(m) under a degree-n map P^1 -> P^1");
    g0->add_option("--n", n, "Map degree")->required();
    g0->add_option("--m", m, "Degree of the line bundle")->required();

    auto* g1 = app.add_subcommand("g1", "Direct image of an indecomposable bundle on an elliptic curve");
    g1->add_option("--n", n, "Map degree")->required();
    g1->add_option("--r", r, "Rank")->required();
    g1->add_option("--d", d, "Degree")->required();
    g1->add_option("--exceptional", exceptional, "Whether E (x) f^*O(-q) is E_r")->check(CLI::IsMember({"yes", "no"}));

    auto* extract = app.add_subcommand("extract", "Recover a splitting type from its h^0 sequence");
    extract->add_option("--h0", h0_list, "Comma-separated a_lo, a_{lo+1}, ...")->required();
    extract->add_option("--lo", lo, "Index of the first value")->required();
    extract->add_option("--rank", rank, "Expected rank")->required();

    auto* bounds = app.add_subcommand("bounds", "Bound on the spread of a line-bundle direct image");
    bounds->add_option("--g", g, "Genus (>= 2)")->required();
    bounds->add_option("--n", n, "Map degree")->required();
    bounds->add_option("--d", bounds_d, "Degree of the line bundle");
    bounds->add_option("--mode", mode, "Bound family")->check(CLI::IsMember({"generic", "any", "degree"}));

    auto* hyper = app.add_subcommand("hyper", "Computations on hyperelliptic curves over F_p");
    hyper->require_subcommand(1);
    auto* push = hyper->add_subcommand("push", "Direct image of O(D) under x followed by z -> z^m");
    push->add_option("--curve", curve_text, "\"p=<prime>; f=<c_0>,...,<c_{2g+1}>\"")->required();
    push->add_option("--divisor", divisor_text, "\"inf:<c>; pt:<x>,<y>:<mult>; ...\"")->required();
    push->add_option("--m", m, "Second-stage degree; total map degree is 2m")->required();

    auto* verify = app.add_subcommand("verify", "Run a seeded verification campaign");
    verify->add_option("--campaign", campaign_name, "Campaign")
        ->required()
        ->check(CLI::IsMember({"genus0", "genus1", "duality", "stabilization", "composition", "riemann-roch"}));
    verify->add_option("--seed", seed, "Seed")->required();
    verify->add_option("--trials", trials, "Number of instances")->required();
    verify->add_option("--max-genus", max_genus, "Largest genus sampled");
    verify->add_option("--max-m", max_m, "Largest second-stage degree sampled");

    auto* scan = app.add_subcommand("scan", "Sample line bundles on random curves and tabulate spreads");
    scan->add_option("--g", g, "Genus (>= 1)")->required();
    scan->add_option("--m", m, "Second-stage degree; total map degree is 2m")->required();
    scan->add_option("--seed", seed, "Seed");
    scan->add_option("--trials", trials, "Number of instances");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }

    const Format format = format_name == "json" ? Format::kJson : format_name == "csv" ? Format::kCsv : Format::kText;
    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) {
            std::cerr << "error: cannot open " << out_path << " for writing\n";
            return 2;
        }
    }
    std::ostream& os = out_path.empty() ? std::cout : file;

    try {
        using namespace pushforward;
        if (*g0) {
            emit_record(os, splitting_json(direct_image_g0(n, m)), format);
        } else if (*g1) {
            AtiyahBundleSpec spec{r, d};
            if (exceptional == "yes") spec.exceptional = Exceptional::kYes;
            if (exceptional == "no") spec.exceptional = Exceptional::kNo;
            emit_record(os, splitting_json(direct_image_g1(n, spec)), format);
        } else if (*extract) {
            const CohSequence a(lo, parse_int_list(h0_list, "h0 value"), rank);
            emit_record(os, splitting_json(splitting_from_h0_sequence(a)), format);
        } else if (*bounds) {
            BoundMode bound_mode = BoundMode::kAnyLineBundle;
            if (mode == "generic") bound_mode = BoundMode::kGenericLineBundle;
            if (mode == "degree") {
                if (!bounds_d) throw Error(ErrorCode::kParse, "--mode degree needs --d");
                bound_mode = BoundMode::kDegreeSpecific;
            }
            const SpreadBound b = spread_bound({g, n, 1, bounds_d.value_or(0)}, bound_mode);
            Json record{{"g", g}, {"n", n}};
            if (bounds_d) record["d"] = *bounds_d;
            record["mode"] = mode;
            record["bound"] = to_string(b.bound);
            record["floor"] = floor(b.bound);
            record["case"] = to_string(b.case_tag);
            record["equality_condition"] = b.equality_condition ? Json(b.equality_condition->to_string()) : Json();
            emit_record(os, record, format);
        } else if (*push) {
            const HyperellipticCurve curve = parse_curve(curve_text);
            const Divisor l = parse_divisor(divisor_text, curve);
            const ComposedMap map(m);
            const CohSequence a = a_sequence(curve, l, map);
            Json record = splitting_json(splitting_from_h0_sequence(a));
            record["genus"] = curve.genus();
            record["n"] = map.degree();
            record["d"] = l.degree();
            record["a_lo"] = a.lo();
            record["a_values"] = a.values();
            emit_record(os, record, format);
        } else if (*verify) {
            const CampaignReport report =
                run_campaign(*parse_campaign(campaign_name), {seed, trials, max_genus, max_m});
            emit_report(os, report, format);
            return report.failed == 0 ? 0 : 1;
        } else if (*scan) {
            if (g < 1) throw Error(ErrorCode::kParse, "--g must be >= 1");
            if (trials < 0) throw Error(ErrorCode::kParse, "--trials must be nonnegative");
            const ComposedMap map(m);
            std::vector<Json> rows;
            bool all_within = true;
            for (Int i = 0; i < trials; ++i) {
                std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                                  static_cast<std::uint32_t>(i)};
                std::mt19937_64 rng(seq);
                const HyperellipticCurve curve = random_curve(rng, g);
                const Divisor l = random_divisor(rng, curve);
                const SplittingType push_l = pushforward::pushforward(curve, l, map);
                Json row{{"p", curve.prime()},        {"g", g},
                         {"curve", curve.to_string()}, {"divisor", l.to_string()},
                         {"m", m},                     {"n", map.degree()},
                         {"d", l.degree()},            {"splitting", twists_field(push_l)},
                         {"spread", spread(push_l)}};
                // Genus 1 has exact direct images with spread at most 2.
                const Rational bound = g >= 2 ? concrete_spread_bound(curve, l, map).bound : Rational(2);
                row["bound"] = to_string(bound);
                row["within_bound"] = spread(push_l) <= floor(bound);
                all_within = all_within && row["within_bound"].get<bool>();
                rows.push_back(std::move(row));
            }
            emit_scan(os, rows, format);
            return all_within ? 0 : 1;
        }
    } catch (const pushforward::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
