#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "effbayes/rational.hpp"

namespace effbayes {

/// Deterministic CSV: caller-supplied row order, no quoting (fields must not
/// contain commas or newlines), trailing newline, LF line endings.
void write_csv(const std::filesystem::path& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows);

/// Fixed rendering policy for report values: 12 significant digits.
std::string render_decimal(const Rational& r);

}  // namespace effbayes
