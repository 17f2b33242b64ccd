#pragma once
// Text output helpers shared by the CSV emitters and reports.

#include <span>
#include <string>

namespace railbeam {

// Shortest decimal form that parses back to exactly the same double.
std::string format_double(double value);

// Quotes a cell when it contains a comma, quote, or newline.
std::string csv_escape(const std::string& cell);

// Joins escaped cells with commas and appends a newline.
std::string csv_row(std::span<const std::string> cells);

}  // namespace railbeam
