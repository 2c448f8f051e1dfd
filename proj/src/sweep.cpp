#include "renyi/sweep.hpp"

#include <fmt/format.h>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <thread>

#include "renyi/errors.hpp"

namespace renyi {

namespace {

bool alpha_less(const RenyiOrder& a, const RenyiOrder& b) {
    if (a.is_infinite()) return false;
    if (b.is_infinite()) return true;
    return a.value() < b.value();
}

CurvePoint evaluate_point(std::int64_t m, std::int64_t product_mn, const RenyiOrder& order) {
    const SystemDims dims(m, product_mn / m);
    const auto result = renyi_tilde(dims, order);
    CurvePoint p;
    p.m = m;
    p.ln_m = std::log(static_cast<double>(m));
    p.entropy = result.entropy;
    p.info = p.ln_m - p.entropy;
    p.alpha_label = order.label();
    p.method = std::string(to_string(result.method));
    return p;
}

template <class T>
T parse_number(std::string_view field, std::size_t line) {
    T value{};
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc() || ptr != field.data() + field.size())
        throw IoError(fmt::format("curve CSV line {}: malformed number '{}'", line, field));
    return value;
}

}  // namespace

std::vector<std::int64_t> divisors(std::int64_t n) {
    if (n < 1) throw DomainError(fmt::format("divisors: need n >= 1, got {}", n));
    std::vector<std::int64_t> low;
    std::vector<std::int64_t> high;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        low.push_back(d);
        if (d != n / d) high.push_back(n / d);
    }
    low.insert(low.end(), high.rbegin(), high.rend());
    return low;
}

std::vector<CurvePoint> page_curve(const SweepConfig& config) {
    if (config.product_mn < 2) throw DomainError("page_curve: product mn must be >= 2");
    if (!(config.threshold > 0.0)) throw DomainError("page_curve: threshold must be positive");
    if (config.alphas.empty()) throw DomainError("page_curve: no Renyi orders given");

    auto alphas = config.alphas;
    std::stable_sort(alphas.begin(), alphas.end(), alpha_less);
    const auto divs = divisors(config.product_mn);

    const std::size_t total = alphas.size() * divs.size();
    std::vector<CurvePoint> points(total);
    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        for (std::size_t i = next++; i < total; i = next++)
            points[i] = evaluate_point(divs[i % divs.size()], config.product_mn, alphas[i / divs.size()]);
    };

    unsigned workers = config.workers ? config.workers : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, total));
    if (workers <= 1) {
        worker();
        return points;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            try {
                worker();
            } catch (...) {
                errors[w] = std::current_exception();
                next = total;
            }
        });
    for (auto& t : pool) t.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    return points;
}

MStarReport m_star_report(std::int64_t product_mn, const RenyiOrder& order, double threshold) {
    if (!(threshold > 0.0)) throw DomainError("m_star: threshold must be positive");
    MStarReport report;
    for (const auto m : divisors(product_mn)) {
        const double info = info_alpha(m, product_mn / m, order);
        if (info > threshold) {
            report.m_star = m;
            report.info = info;
            return report;
        }
        report.previous_m = m;
        report.previous_info = info;
    }
    throw NotFoundError(fmt::format("m_star: no divisor of {} has I_alpha > {} at alpha = {}", product_mn, threshold,
                                    order.label()));
}

std::int64_t m_star(std::int64_t product_mn, const RenyiOrder& order, double threshold) {
    return m_star_report(product_mn, order, threshold).m_star;
}

void write_curve_csv(std::ostream& out, const std::vector<CurvePoint>& points) {
    out << "alpha,m,ln_m,entropy,info,method\n";
    for (const auto& p : points)
        out << fmt::format("{},{},{:.17g},{:.17g},{:.17g},{}\n", p.alpha_label, p.m, p.ln_m, p.entropy, p.info,
                           p.method);
}

void write_curve_json(std::ostream& out, const std::vector<CurvePoint>& points) {
    auto doc = nlohmann::json::array();
    for (const auto& p : points)
        doc.push_back({{"alpha", p.alpha_label},
                       {"m", p.m},
                       {"ln_m", p.ln_m},
                       {"entropy", p.entropy},
                       {"info", p.info},
                       {"method", p.method}});
    out << doc.dump(2) << '\n';
}

void write_curve_file(const std::string& path, OutputFormat format, const std::vector<CurvePoint>& points) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw IoError(fmt::format("cannot open '{}' for writing", path));
    if (format == OutputFormat::csv)
        write_curve_csv(file, points);
    else
        write_curve_json(file, points);
    file.flush();
    if (!file) throw IoError(fmt::format("failed writing '{}'", path));
}

std::vector<CurvePoint> read_curve_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != "alpha,m,ln_m,entropy,info,method")
        throw IoError("curve CSV: missing or unexpected header");
    std::vector<CurvePoint> points;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::vector<std::string_view> fields;
        std::string_view rest(line);
        for (auto comma = rest.find(','); comma != std::string_view::npos; comma = rest.find(',')) {
            fields.push_back(rest.substr(0, comma));
            rest.remove_prefix(comma + 1);
        }
        fields.push_back(rest);
        if (fields.size() != 6) throw IoError(fmt::format("curve CSV line {}: expected 6 fields", line_no));
        CurvePoint p;
        p.alpha_label = std::string(fields[0]);
        p.m = parse_number<std::int64_t>(fields[1], line_no);
        p.ln_m = parse_number<double>(fields[2], line_no);
        p.entropy = parse_number<double>(fields[3], line_no);
        p.info = parse_number<double>(fields[4], line_no);
        p.method = std::string(fields[5]);
        points.push_back(std::move(p));
    }
    return points;
}

}  // namespace renyi
