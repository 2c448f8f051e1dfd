#include "renyi/cli.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "renyi/errors.hpp"
#include "renyi/exact_small.hpp"
#include "renyi/moments.hpp"
#include "renyi/montecarlo.hpp"
#include "renyi/sweep.hpp"

namespace renyi {

namespace {

// ln Z outside this window cannot be exponentiated into a normal double.
constexpr double kMinRepresentableLog = -708.0;
constexpr double kMaxRepresentableLog = 709.0;

std::vector<RenyiOrder> parse_alpha_list(const std::string& text) {
    std::vector<RenyiOrder> out;
    std::string item;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || text[i] == ',') {
            if (item.empty()) throw DomainError(fmt::format("empty entry in alpha list '{}'", text));
            out.push_back(RenyiOrder::parse(item));
            item.clear();
        } else if (text[i] != ' ') {
            item.push_back(text[i]);
        }
    }
    return out;
}

// Syntax only: "inf" or a plain decimal. Range problems are domain errors.
const CLI::Validator kAlphaSyntax(
    [](std::string& text) -> std::string {
        std::string lower = text;
        for (auto& c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        if (lower == "inf" || lower == "infinity" || text == "∞") return {};
        double value = 0.0;
        const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
            return "'" + text + "' is not a number or 'inf'";
        return {};
    },
    "ALPHA");

struct Options {
    int digits = 5;
    std::int64_t m = 0;
    std::int64_t n = 0;
    std::string alpha;
    bool alpha_inf = false;
    bool asymptotic = false;
    int mx = 0;
    int ny = 0;
    int order = kDefaultRuleOrder;
    std::int64_t mn = 0;
    std::string alphas = "1,10,100,1000,inf";
    std::string out_path;
    std::string format = "csv";
    double threshold = 0.1;
    std::int64_t samples = 100000;
    std::uint64_t seed = 1;
    std::string estimator = "moments";
    unsigned workers = 0;
};

RenyiOrder order_from(const Options& o) {
    if (o.alpha_inf) return RenyiOrder::infinite();
    return RenyiOrder::parse(o.alpha);
}

void cmd_entropy(const Options& o, std::ostream& out, std::ostream& err) {
    const SystemDims dims(o.m, o.n);
    const auto order = order_from(o);
    const auto result = renyi_tilde(dims, order);
    const double info = info_alpha(o.m, o.n, order);
    const int d = o.digits;
    out << fmt::format("S_tilde = {:.{}g}\n", result.entropy, d);
    out << fmt::format("I = {:.{}g}\n", info, d);
    out << fmt::format("method = {}\n", to_string(result.method));
    if (dims.swapped()) out << fmt::format("swapped = true (evaluated as m={}, n={})\n", dims.m(), dims.n());
    if (o.asymptotic && !order.is_infinite()) {
        if (!asymptotic_is_reliable(dims))
            err << fmt::format("warning: asymptotic form assumes n >= 10 m (m={}, n={})\n", dims.m(), dims.n());
        const auto asym = renyi_asymptotic(dims, order.value());
        out << fmt::format("S_asymptotic = {:.{}g}\n", asym.log_form, d);
        out << fmt::format("S_asymptotic_linear = {:.{}g}\n", asym.linear_form, d);
    }
}

void cmd_zalpha(const Options& o, std::ostream& out) {
    const SystemDims dims(o.m, o.n);
    const auto order = RenyiOrder::parse(o.alpha);
    if (order.is_infinite()) throw DomainError("zalpha: alpha must be finite");
    LogValue log_z;
    if (order.value() == 0.0)
        log_z = LogValue::from_value(static_cast<double>(dims.m()));
    else if (order.integer_fast_path())
        log_z = z_alpha_int(dims, order.as_int());
    else
        log_z = z_alpha_real(dims, order.value());
    const int d = o.digits;
    out << fmt::format("ln_Z = {:.{}g}\n", log_z.log_magnitude, d);
    if (log_z.log_magnitude > kMinRepresentableLog && log_z.log_magnitude < kMaxRepresentableLog)
        out << fmt::format("Z = {:.{}g}\n", log_z.value(), d);
    else
        out << "Z = not representable as a double\n";
}

void cmd_exact2(const Options& o, std::ostream& out) {
    if (o.n < 2 || o.n > INT32_MAX) throw DomainError("exact2: need n >= 2");
    const int n = static_cast<int>(o.n);
    const int d = o.digits;
    out << fmt::format("S_2 = {:.{}g}\n", renyi2_exact_2xn(n), d);
    out << fmt::format("S_tilde_2 = {:.{}g}\n", renyi2_tilde_2xn(n), d);
    out << fmt::format("S_von = {:.{}g}\n", page_von_neumann(SystemDims(2, n)), d);
}

void cmd_fmn(const Options& o, std::ostream& out) {
    out << fmt::format("{:.{}g}\n", f_mn(FArgs{o.mx, o.ny}, o.order), o.digits);
}

void cmd_page_curve(const Options& o, std::ostream& out) {
    SweepConfig config;
    config.product_mn = o.mn;
    config.alphas = parse_alpha_list(o.alphas);
    config.threshold = o.threshold;
    config.output_format = o.format == "json" ? OutputFormat::json : OutputFormat::csv;
    config.output_path = o.out_path;
    config.workers = o.workers;
    const auto points = page_curve(config);
    write_curve_file(config.output_path, config.output_format, points);
    out << fmt::format("wrote {} rows to {}\n", points.size(), config.output_path);
    for (const auto& order : config.alphas) {
        try {
            out << fmt::format("m_star(alpha={}) = {}\n", order.label(), m_star(o.mn, order, o.threshold));
        } catch (const NotFoundError&) {
            out << fmt::format("m_star(alpha={}) = none\n", order.label());
        }
    }
}

void cmd_mstar(const Options& o, std::ostream& out) {
    const auto order = order_from(o);
    const auto report = m_star_report(o.mn, order, o.threshold);
    const int d = o.digits;
    out << report.m_star << '\n';
    out << fmt::format("I(m={}) = {:.{}g}", report.m_star, report.info, d);
    if (report.previous_m) out << fmt::format(", I(m={}) = {:.{}g}", *report.previous_m, report.previous_info, d);
    out << '\n';
}

void cmd_montecarlo(const Options& o, std::ostream& out) {
    if (o.m < 1 || o.n < 1 || o.m > INT32_MAX || o.n > INT32_MAX) throw DomainError("montecarlo: bad dimensions");
    const int m = static_cast<int>(o.m);
    const int n = static_cast<int>(o.n);
    McOptions options;
    options.workers = o.workers;
    const SystemDims dims(m, n);
    Estimate est;
    std::string reference;
    if (o.estimator == "von-neumann") {
        est = mc_average_von_neumann(m, n, o.samples, o.seed, options);
        reference = fmt::format("page = {:.{}g}", page_von_neumann(dims), o.digits);
    } else {
        const auto order = RenyiOrder::parse(o.alpha);
        if (order.is_infinite()) throw DomainError("montecarlo: alpha must be finite");
        if (o.estimator == "moments") {
            est = mc_moment_sum(m, n, order.value(), o.samples, o.seed, options);
            const auto exact = order.integer_fast_path() ? z_alpha_int(dims, order.as_int())
                                                         : z_alpha_real(dims, order.value());
            reference = fmt::format("exact Z = {:.{}g}", exact.value(), o.digits);
        } else {
            est = mc_average_renyi(m, n, order.value(), o.samples, o.seed, options);
            reference = fmt::format("S_tilde = {:.{}g}", renyi_tilde(dims, order).entropy, o.digits);
        }
    }
    out << fmt::format("mean = {:.{}g}\n", est.mean, o.digits);
    out << fmt::format("std_error = {:.{}g}\n", est.std_error, o.digits);
    out << fmt::format("samples = {}\nseed = {}\n", est.samples, est.seed);
    out << reference << '\n';
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Average Renyi entropy of a subsystem of a Haar-random bipartite pure state"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--digits", o.digits, "Significant digits in printed values")->check(CLI::Range(1, 17));

    std::function<void()> action;

    auto* entropy = app.add_subcommand("entropy", "S_tilde and I for one (m, n, alpha)");
    entropy->add_option("--m", o.m)->required();
    entropy->add_option("--n", o.n)->required();
    auto* alpha_opt = entropy->add_option("--alpha", o.alpha, "Renyi order (number or 'inf')")->check(kAlphaSyntax);
    auto* inf_flag = entropy->add_flag("--alpha-inf", o.alpha_inf, "Use alpha = infinity");
    alpha_opt->excludes(inf_flag);
    entropy->add_flag("--asymptotic", o.asymptotic, "Also print the large-n forms");
    entropy->callback([&] {
        if (o.alpha.empty() && !o.alpha_inf) throw CLI::RequiredError("--alpha or --alpha-inf");
        action = [&] { cmd_entropy(o, out, err); };
    });

    auto* zalpha = app.add_subcommand("zalpha", "ln Z_alpha and Z_alpha");
    zalpha->add_option("--m", o.m)->required();
    zalpha->add_option("--n", o.n)->required();
    zalpha->add_option("--alpha", o.alpha)->required()->check(kAlphaSyntax);
    zalpha->callback([&] { action = [&] { cmd_zalpha(o, out); }; });

    auto* exact2 = app.add_subcommand("exact2", "Exact S_2(2, n) with S_tilde and S_von");
    exact2->add_option("--n", o.n)->required();
    exact2->callback([&] { action = [&] { cmd_exact2(o, out); }; });

    auto* fmn = app.add_subcommand("fmn", "F(mx, ny) = int int x^mx y^ny ln(x^2+y^2) e^(-x-y)");
    fmn->add_option("--mx", o.mx)->required();
    fmn->add_option("--ny", o.ny)->required();
    fmn->add_option("--order", o.order, "Initial quadrature order");
    fmn->callback([&] { action = [&] { cmd_fmn(o, out); }; });

    auto* curve = app.add_subcommand("page-curve", "Sweep m over the divisors of mn");
    curve->add_option("--mn", o.mn)->required();
    curve->add_option("--alphas", o.alphas, "Comma-separated Renyi orders")->capture_default_str();
    curve->add_option("--out", o.out_path)->required();
    curve->add_option("--format", o.format)->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    curve->add_option("--threshold", o.threshold)->capture_default_str();
    curve->add_option("--workers", o.workers);
    curve->callback([&] { action = [&] { cmd_page_curve(o, out); }; });

    auto* mstar = app.add_subcommand("mstar", "Smallest divisor m with I_alpha > threshold");
    mstar->add_option("--mn", o.mn)->required();
    auto* mstar_alpha = mstar->add_option("--alpha", o.alpha)->check(kAlphaSyntax);
    auto* mstar_inf = mstar->add_flag("--alpha-inf", o.alpha_inf);
    mstar_alpha->excludes(mstar_inf);
    mstar->add_option("--threshold", o.threshold)->capture_default_str();
    mstar->callback([&] {
        if (o.alpha.empty() && !o.alpha_inf) throw CLI::RequiredError("--alpha or --alpha-inf");
        action = [&] { cmd_mstar(o, out); };
    });

    auto* mc = app.add_subcommand("montecarlo", "Monte-Carlo estimate over Haar-random states");
    mc->add_option("--m", o.m)->required();
    mc->add_option("--n", o.n)->required();
    mc->add_option("--alpha", o.alpha)->check(kAlphaSyntax);
    mc->add_option("--samples", o.samples)->capture_default_str();
    mc->add_option("--seed", o.seed)->capture_default_str();
    mc->add_option("--estimator", o.estimator)
        ->check(CLI::IsMember({"moments", "renyi", "von-neumann"}))
        ->capture_default_str();
    mc->add_option("--workers", o.workers);
    mc->callback([&] {
        if (o.alpha.empty() && o.estimator != "von-neumann") throw CLI::RequiredError("--alpha");
        action = [&] { cmd_montecarlo(o, out); };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        action();
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const NotFoundError& e) {
        err << "not found: " << e.what() << '\n';
        return kExitDomain;
    } catch (const ConvergenceError& e) {
        err << "convergence error: " << e.what() << '\n';
        return kExitConvergence;
    } catch (const NumericError& e) {
        err << "numeric error: " << e.what() << '\n';
        return kExitConvergence;
    } catch (const IoError& e) {
        err << "i/o error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitOk;
}

}  // namespace renyi
