#include "twogon/io.hpp"

#include <charconv>
#include <cmath>
#include <ostream>
#include <vector>

#include "twogon/errors.hpp"

namespace twogon::io {

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json to_json(const coeffs::CoefficientTable& table) {
    Json j;
    j["alpha"] = table.alpha();
    j["method"] = std::string(coeffs::to_string(table.method()));
    j["values"] = Json::array();
    for (double v : table.values()) j["values"].push_back(v);
    return j;
}

void write_csv(std::ostream& out, const coeffs::CoefficientTable& table) {
    out << "n,g_n\n";
    for (std::size_t n = 0; n <= table.order(); ++n) out << n << ',' << format_double(table[n]) << '\n';
}

coeffs::CoefficientTable coefficient_table_from_json(const Json& j) {
    const std::string method = j.at("method").get<std::string>();
    coeffs::Method m;
    if (method == "recursive")
        m = coeffs::Method::Recursive;
    else if (method == "direct")
        m = coeffs::Method::Direct;
    else if (method == "alpha-zero-limit")
        m = coeffs::Method::AlphaZeroLimit;
    else
        throw ArgumentError("unknown coefficient method '" + method + "'");
    return coeffs::CoefficientTable(j.at("alpha").get<double>(), m, j.at("values").get<std::vector<double>>());
}

Json to_json(const conv::GrowthClass& growth) {
    Json j;
    j["kind"] = std::string(conv::to_string(growth.kind));
    if (growth.exponent) j["exponent"] = *growth.exponent;
    if (growth.constant) j["constant"] = *growth.constant;
    return j;
}

Json to_json(const conv::ProbabilityEstimate& est) {
    Json j;
    j["n"] = est.n;
    j["exact"] = std::to_string(est.exact.num) + "/" + std::to_string(est.exact.den);
    j["exact_value"] = est.exact.to_double();
    j["estimate"] = est.estimate;
    j["stderr"] = est.stderr_;
    j["samples"] = est.samples;
    j["seed"] = est.seed;
    j["stage_count"] = est.stage_count;
    j["final_count"] = est.final_count;
    return j;
}

Json to_json(const series::AsymptoticEstimate& est, std::optional<double> theory) {
    Json j;
    j["mode"] = std::string(series::to_string(est.mode.kind));
    if (est.mode.kind == series::ScaleKind::Power) j["gamma"] = est.mode.gamma;
    j["limit"] = est.extrapolated_limit;
    if (theory) j["theory"] = *theory;
    j["grid"] = Json::array();
    for (const auto& p : est.grid) j["grid"].push_back(Json{{"r", p.r}, {"scaled_value", p.scaled_value}});
    return j;
}

void write_csv(std::ostream& out, const series::AsymptoticEstimate& est) {
    out << "r,scaled_value\n";
    for (const auto& p : est.grid) out << format_double(p.r) << ',' << format_double(p.scaled_value) << '\n';
}

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_number(std::string_view s, std::string_view what) {
    s = trim(s);
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size() || s.empty())
        throw ArgumentError("malformed " + std::string(what) + " '" + std::string(s) + "'");
    return v;
}

conv::TailRule parse_rule(std::string_view item) {
    const auto colon = item.find(':');
    const std::string_view name = trim(item.substr(0, colon));
    const std::string_view args = item.substr(colon + 1);
    try {
        if (name == "const") return conv::const_rule(parse_number(args, "const value"));
        if (name == "fj") {
            const double j = parse_number(args, "fj index");
            if (j < 1 || j != std::floor(j) || j > 1e9) throw ArgumentError("fj index must be a positive integer");
            return conv::fj_rule(static_cast<unsigned>(j));
        }
        if (name == "geom") {
            const auto comma = args.find(',');
            if (comma == std::string_view::npos) throw ArgumentError("geom rule needs base,ratio");
            return conv::geom_rule(parse_number(args.substr(0, comma), "geom base"),
                                   parse_number(args.substr(comma + 1), "geom ratio"));
        }
    } catch (const DomainError& e) {
        throw ArgumentError(e.what());
    }
    throw ArgumentError("unknown rule '" + std::string(name) + "'");
}

series::AlphaParam parse_entry(std::string_view item) {
    const auto at = item.find('@');
    const double modulus = parse_number(item.substr(0, at), "modulus");
    const double phase = at == std::string_view::npos ? 0.0 : parse_number(item.substr(at + 1), "phase");
    try {
        return series::AlphaParam(modulus, phase);
    } catch (const DomainError& e) {
        throw ArgumentError(e.what());
    }
}

}  // namespace

conv::SequenceSpec parse_sequence_spec(std::string_view text) {
    // Items are separated by newlines and ';'; non-rule items also by ','.
    std::vector<std::string> items;
    auto add_piece = [&](std::string_view piece) {
        piece = trim(piece);
        if (piece.empty()) return;
        std::size_t p = 0;
        while (p <= piece.size()) {
            std::size_t q = piece.find(',', p);
            if (q == std::string_view::npos) q = piece.size();
            auto item = trim(piece.substr(p, q - p));
            if (item.find(':') != std::string_view::npos) {
                // A rule keeps its own commas and runs to the end of the piece.
                items.emplace_back(trim(piece.substr(p)));
                return;
            }
            if (item.empty()) throw ArgumentError("empty entry in sequence spec");
            items.emplace_back(item);
            p = q + 1;
        }
    };
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        std::string_view line = text.substr(pos, nl - pos);
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        std::size_t p = 0;
        while (p <= line.size()) {
            std::size_t q = line.find(';', p);
            if (q == std::string_view::npos) q = line.size();
            add_piece(line.substr(p, q - p));
            p = q + 1;
        }
        pos = nl + 1;
    }
    if (items.empty()) throw ArgumentError("empty sequence spec");

    std::vector<series::AlphaParam> head;
    std::optional<conv::TailRule> tail;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (items[i].find(':') != std::string::npos) {
            if (i + 1 != items.size()) throw ArgumentError("a rule entry must be the last entry of a sequence spec");
            tail = parse_rule(items[i]);
        } else {
            head.push_back(parse_entry(items[i]));
        }
    }
    return conv::SequenceSpec(std::move(head), std::move(tail));
}

}  // namespace twogon::io
