#pragma once

#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>

#include "free2/classifier.hpp"

namespace free2 {

enum class ReportFormat { json, csv };

std::optional<ReportFormat> parse_report_format(std::string_view name);

/// One compact JSON object, keys in schema order:
/// p, q, form, torus_params, slope, pi1_injective, tunnel_witness,
/// atoroidal_window, atoroidal_ok, one_one, surgery.
std::string to_json(const ClassificationReport& r);

/// CSV flattening of the same fields in the same order.
std::string csv_header();
std::string to_csv(const ClassificationReport& r);

/// Writes one row (plus the CSV header first when `first_row`).
void write_row(std::ostream& out, const ClassificationReport& r,
               ReportFormat format, bool first_row);

void write_rows(std::ostream& out, std::span<const ClassificationReport> rows,
                ReportFormat format);

}  // namespace free2
