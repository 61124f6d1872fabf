#include "twogon/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <map>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "twogon/coeffs.hpp"
#include "twogon/conv_analysis.hpp"
#include "twogon/errors.hpp"
#include "twogon/io.hpp"
#include "twogon/series.hpp"

namespace twogon::cli {

namespace {

using io::Json;

enum class Format { Json, Csv };

const std::map<std::string, Format> kFormats{{"json", Format::Json}, {"csv", Format::Csv}};

void add_format(CLI::App* cmd, Format& format) {
    cmd->add_option("--format", format, "Output format (json|csv)")
        ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case))
        ->default_str("json");
}

std::string csv_field(const std::optional<double>& v) { return v ? io::format_double(*v) : std::string(); }

void check_alphas(const std::vector<double>& alphas) {
    for (double a : alphas)
        if (!(a > 0.0 && a <= 1.0)) throw DomainError("alpha values must lie in (0,1], got " + io::format_double(a));
}

// --- coeffs ---------------------------------------------------------------

struct CoeffsArgs {
    double alpha = 0.0;
    std::size_t n = 0;
    std::string method = "recursive";
    Format format = Format::Json;
};

void cmd_coeffs(const CoeffsArgs& a, std::ostream& out) {
    if (!(a.alpha >= 0.0 && a.alpha <= 1.0)) throw DomainError("--alpha must lie in [0,1]");
    if (a.n < 1) throw ArgumentError("--n must be >= 1");
    const coeffs::CoefficientTable table = [&] {
        if (a.alpha == 0.0) return coeffs::coeff_alpha_zero(a.n);
        if (a.method == "direct") return coeffs::coeff_table_direct(a.alpha, a.n);
        return coeffs::coeff_table_recursive(a.alpha, a.n);
    }();
    if (a.format == Format::Json)
        out << io::dump(io::to_json(table));
    else
        io::write_csv(out, table);
}

// --- classify -------------------------------------------------------------

struct ClassifyArgs {
    std::vector<double> alphas;
    Format format = Format::Json;
};

void cmd_classify(const ClassifyArgs& a, std::ostream& out) {
    if (a.alphas.size() < 2) throw ArgumentError("--alphas needs at least two values");
    check_alphas(a.alphas);
    conv::GrowthClass growth;
    std::optional<double> angle;
    if (a.alphas.size() == 2) {
        growth = conv::classify_pair(a.alphas[0], a.alphas[1]);
    } else {
        const conv::AngleFold fold = conv::angle_fold(a.alphas);
        growth = fold.growth;
        angle = fold.nominal_angle;
        std::vector<series::AlphaParam> head;
        for (double x : a.alphas) head.emplace_back(x);
        const conv::GrowthClass two_gon = conv::classify_sequence(conv::SequenceSpec(std::move(head)));
        if (two_gon.kind == growth.kind) growth.constant = two_gon.constant;
    }
    if (a.format == Format::Json) {
        Json j = io::to_json(growth);
        if (angle) j["nominal_angle"] = *angle;
        out << io::dump(j);
    } else {
        out << "kind,exponent,constant" << (angle ? ",nominal_angle" : "") << '\n';
        out << conv::to_string(growth.kind) << ',' << csv_field(growth.exponent) << ',' << csv_field(growth.constant);
        if (angle) out << ',' << io::format_double(*angle);
        out << '\n';
    }
}

// --- asymptotic -----------------------------------------------------------

struct AsymptoticArgs {
    std::vector<double> alphas;
    std::string mode = "auto";
    std::optional<double> gamma;
    int j_max = 20;
    Format format = Format::Json;
};

void cmd_asymptotic(const AsymptoticArgs& a, std::ostream& out) {
    if (a.alphas.empty()) throw ArgumentError("--alphas needs at least one value");
    check_alphas(a.alphas);

    std::vector<series::AlphaParam> head;
    std::vector<series::StreamFactory> factors;
    for (double x : a.alphas) {
        head.emplace_back(x);
        factors.push_back(series::two_gon_stream(series::AlphaParam(x)));
    }
    const conv::GrowthClass growth = conv::classify_sequence(conv::SequenceSpec(head));
    const double min_alpha = *std::min_element(a.alphas.begin(), a.alphas.end());
    const double correction = std::min(min_alpha, 0.5);

    series::RadialMode mode;
    std::optional<double> theory;
    std::string kind = a.mode;
    if (kind == "auto") kind = growth.kind == conv::GrowthKind::Logarithmic ? "log" : "power";
    if (kind == "log") {
        mode = series::RadialMode::log();
        if (growth.kind == conv::GrowthKind::Logarithmic) theory = growth.constant;
    } else {
        double gamma;
        if (a.gamma) {
            gamma = *a.gamma;
        } else if (growth.kind == conv::GrowthKind::PowerLaw) {
            gamma = *growth.exponent;
        } else if (a.mode == "auto") {
            gamma = 0.0;  // bounded: the limit is f(1)
        } else {
            throw ArgumentError("power mode for a non-power-law product needs --gamma");
        }
        if (growth.kind == conv::GrowthKind::PowerLaw && gamma == *growth.exponent) theory = growth.constant;
        double corr = correction;
        if (theory) {
            // Exact scaling: S(r) (1-r)^gamma = C + K (1-r)^gamma + O(1-r).
            corr = std::min(gamma, 1.0);
        } else if (growth.kind == conv::GrowthKind::Bounded) {
            const double B = conv::b_sum(conv::SequenceSpec(head)).lo;
            corr = std::clamp(B - 1.0, 0.05, 1.0);
        }
        mode = series::RadialMode::power(gamma, corr);
    }

    series::RadialSchedule schedule;
    schedule.j_max = a.j_max;
    if (schedule.j_max < schedule.j_min + static_cast<int>(schedule.fit_points) - 1)
        throw ArgumentError("--jmax too small for the fit window");
    const auto est = series::radial_asymptotic(series::hadamard_stream(std::move(factors)), mode, schedule);

    if (a.format == Format::Json) {
        out << io::dump(io::to_json(est, theory));
    } else {
        out << "# mode=" << series::to_string(mode.kind);
        if (mode.kind == series::ScaleKind::Power) out << " gamma=" << io::format_double(mode.gamma);
        out << " limit=" << io::format_double(est.extrapolated_limit);
        if (theory) out << " theory=" << io::format_double(*theory);
        out << '\n';
        io::write_csv(out, est);
    }
}

// --- probability ----------------------------------------------------------

struct ProbabilityArgs {
    unsigned n = 0;
    std::uint64_t samples = 1'000'000;
    std::uint64_t seed = conv::kDefaultSeed;
    Format format = Format::Json;
};

void cmd_probability(const ProbabilityArgs& a, std::ostream& out) {
    if (a.n < 1) throw ArgumentError("--n must be >= 1");
    if (a.n > 20) throw ArgumentError("--n must be <= 20 (exact volume overflow guard)");
    const auto est = conv::unbounded_probability_mc(a.n, a.samples, a.seed);
    if (a.format == Format::Json) {
        out << io::dump(io::to_json(est));
    } else {
        out << "n,exact,exact_value,estimate,stderr,samples,seed\n";
        out << est.n << ',' << est.exact.num << '/' << est.exact.den << ',' << io::format_double(est.exact.to_double())
            << ',' << io::format_double(est.estimate) << ',' << io::format_double(est.stderr_) << ',' << est.samples
            << ',' << est.seed << '\n';
    }
}

// --- infconv --------------------------------------------------------------

struct InfconvArgs {
    std::string spec;
    std::size_t kmax = 10;
    double tol = 1e-12;
    Format format = Format::Json;
};

std::string read_spec_text(const std::string& spec) {
    std::error_code ec;
    if (std::filesystem::is_regular_file(spec, ec)) {
        std::ifstream in(spec);
        if (!in) throw ArgumentError("cannot read spec file '" + spec + "'");
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    return spec;
}

void cmd_infconv(const InfconvArgs& a, std::ostream& out) {
    if (a.kmax < 1) throw ArgumentError("--kmax must be >= 1");
    if (!(a.tol > 0.0)) throw ArgumentError("--tol must be positive");
    const conv::SequenceSpec seq = io::parse_sequence_spec(read_spec_text(a.spec));
    const conv::NormalizedSequence norm = conv::normalize_sequence(seq);
    const conv::GrowthClass growth = conv::classify_sequence(norm.sequence);
    const conv::BSum b = conv::b_sum(norm.sequence);

    std::vector<conv::CoeffProduct> coeffs;
    for (std::size_t k = 1; k <= a.kmax; ++k) coeffs.push_back(conv::infinite_conv_coeff_detail(norm.sequence, k, a.tol));

    if (a.format == Format::Json) {
        Json j;
        j["lambda"] = Json{{"re", norm.lambda.real()}, {"im", norm.lambda.imag()}};
        j["input_normalized"] = seq.is_normalized();
        j["degenerate"] = norm.degenerate;
        j["B"] = b.infinite() ? Json(nullptr) : Json(b.lo);
        j["growth"] = io::to_json(growth);
        j["coefficients"] = Json::array();
        for (std::size_t k = 1; k <= coeffs.size(); ++k) {
            const auto& c = coeffs[k - 1];
            j["coefficients"].push_back(Json{{"k", k},
                                             {"re", c.value.real()},
                                             {"im", c.value.imag()},
                                             {"factors", c.factors},
                                             {"vanished", c.vanished}});
        }
        out << io::dump(j);
    } else {
        out << "# lambda=" << io::format_double(norm.lambda.real()) << ',' << io::format_double(norm.lambda.imag())
            << " input_normalized=" << (seq.is_normalized() ? "true" : "false")
            << " degenerate=" << (norm.degenerate ? "true" : "false")
            << " B=" << (b.infinite() ? std::string("inf") : io::format_double(b.lo))
            << " growth=" << conv::to_string(growth.kind) << '\n';
        out << "k,re,im,factors,vanished\n";
        for (std::size_t k = 1; k <= coeffs.size(); ++k) {
            const auto& c = coeffs[k - 1];
            out << k << ',' << io::format_double(c.value.real()) << ',' << io::format_double(c.value.imag()) << ','
                << c.factors << ',' << (c.vanished ? "true" : "false") << '\n';
        }
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Taylor coefficients, Hadamard products and boundary growth of 2-gon maps", "twogon"};
    app.require_subcommand(1);

    CoeffsArgs coeffs_args;
    auto* coeffs_cmd = app.add_subcommand("coeffs", "Taylor coefficients g_0..g_n of f_alpha");
    coeffs_cmd->add_option("--alpha", coeffs_args.alpha, "Parameter in [0,1]")->required();
    coeffs_cmd->add_option("--n", coeffs_args.n, "Truncation order")->required();
    coeffs_cmd->add_option("--method", coeffs_args.method, "recursive|direct")
        ->check(CLI::IsMember({"recursive", "direct"}))
        ->default_str("recursive");
    add_format(coeffs_cmd, coeffs_args.format);

    ClassifyArgs classify_args;
    auto* classify_cmd = app.add_subcommand("classify", "Growth class of a convolution");
    classify_cmd->add_option("--alphas", classify_args.alphas, "Comma-separated parameters in (0,1]")
        ->required()
        ->delimiter(',');
    add_format(classify_cmd, classify_args.format);

    AsymptoticArgs asym_args;
    auto* asym_cmd = app.add_subcommand("asymptotic", "Radial limit of the scaled convolution as r -> 1");
    asym_cmd->add_option("--alphas", asym_args.alphas, "Comma-separated parameters in (0,1]")
        ->required()
        ->delimiter(',');
    asym_cmd->add_option("--mode", asym_args.mode, "auto|power|log")
        ->check(CLI::IsMember({"auto", "power", "log"}))
        ->default_str("auto");
    asym_cmd->add_option("--gamma", asym_args.gamma, "Power-mode exponent override");
    asym_cmd->add_option("--jmax", asym_args.j_max, "Deepest radius 1 - 2^-jmax")->default_str("20");
    add_format(asym_cmd, asym_args.format);

    ProbabilityArgs prob_args;
    auto* prob_cmd = app.add_subcommand("probability", "Probability that n random convolution factors stay unbounded");
    prob_cmd->add_option("--n", prob_args.n, "Number of factors (1..20)")->required();
    prob_cmd->add_option("--samples", prob_args.samples, "Monte Carlo samples")->default_str("1000000");
    prob_cmd->add_option("--seed", prob_args.seed, "64-bit seed")->default_str("42");
    add_format(prob_cmd, prob_args.format);

    InfconvArgs inf_args;
    auto* inf_cmd = app.add_subcommand("infconv", "Coefficients and growth of an infinite convolution");
    inf_cmd->add_option("--spec", inf_args.spec, "Spec file or inline spec (e.g. const:0.5, fj:3, 0.5,0.5)")
        ->required();
    inf_cmd->add_option("--kmax", inf_args.kmax, "Highest coefficient index")->default_str("10");
    inf_cmd->add_option("--tol", inf_args.tol, "Tail tolerance")->default_str("1e-12");
    add_format(inf_cmd, inf_args.format);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    std::ostringstream buffer;
    try {
        if (coeffs_cmd->parsed()) cmd_coeffs(coeffs_args, buffer);
        if (classify_cmd->parsed()) cmd_classify(classify_args, buffer);
        if (asym_cmd->parsed()) cmd_asymptotic(asym_args, buffer);
        if (prob_cmd->parsed()) cmd_probability(prob_args, buffer);
        if (inf_cmd->parsed()) cmd_infconv(inf_args, buffer);
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ArgumentError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const PrecisionError& e) {
        err << "precision failure: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const NumericalError& e) {
        err << "numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const std::exception& e) {
        err << "failure: " << e.what() << '\n';
        return kExitNumerical;
    }
    out << buffer.str();
    return kExitOk;
}

}  // namespace twogon::cli
