#pragma once

// Page-curve sweeps over the divisors of a fixed total dimension mn, the m_*
// threshold search, and the flat-file formats they are written in.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "renyi/moments.hpp"

namespace renyi {

struct CurvePoint {
    std::int64_t m = 0;
    double ln_m = 0.0;
    double entropy = 0.0;  // S̃_α of the (possibly swapped) pair
    double info = 0.0;     // ln m − entropy
    std::string alpha_label;
    std::string method;
};

enum class OutputFormat { csv, json };

struct SweepConfig {
    std::int64_t product_mn = 291600;
    std::vector<RenyiOrder> alphas;
    double threshold = 0.1;
    OutputFormat output_format = OutputFormat::csv;
    std::string output_path;
    /// 0 → hardware concurrency.
    unsigned workers = 0;
};

/// Positive divisors of n, ascending. Throws DomainError for n < 1.
std::vector<std::int64_t> divisors(std::int64_t n);

/// One row per (α, divisor m), with n = product_mn / m. Rows are ordered by
/// increasing α (∞ last) and then by m. Throws DomainError for
/// product_mn < 2, a non-positive threshold or an empty α list.
std::vector<CurvePoint> page_curve(const SweepConfig& config);

struct MStarReport {
    std::int64_t m_star = 0;
    double info = 0.0;  // I_α at m_star
    /// Largest divisor below m_star and its I_α, absent when m_star = 1.
    std::optional<std::int64_t> previous_m;
    double previous_info = 0.0;
};

/// Smallest divisor m of product_mn with I_α(m, product_mn/m) > threshold,
/// plus the values straddling the boundary. Throws NotFoundError if no
/// divisor qualifies and DomainError for threshold <= 0.
MStarReport m_star_report(std::int64_t product_mn, const RenyiOrder& order, double threshold = 0.1);

std::int64_t m_star(std::int64_t product_mn, const RenyiOrder& order, double threshold = 0.1);

/// Header `alpha,m,ln_m,entropy,info,method`, LF endings, 17 significant digits.
void write_curve_csv(std::ostream& out, const std::vector<CurvePoint>& points);
/// Array of objects with the same six fields.
void write_curve_json(std::ostream& out, const std::vector<CurvePoint>& points);
/// Writes to `path` in `format`. Throws IoError naming the path on failure.
void write_curve_file(const std::string& path, OutputFormat format, const std::vector<CurvePoint>& points);

/// Inverse of write_curve_csv. Throws IoError on malformed input.
std::vector<CurvePoint> read_curve_csv(std::istream& in);

}  // namespace renyi
