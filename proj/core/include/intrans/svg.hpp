#pragma once

#include <filesystem>
#include <string>

#include "intrans/csv.hpp"

namespace intrans {

/// Renders a standalone SVG scatter plot of two named columns. When
/// group_column is nonempty, points are styled per distinct value of that
/// column (ascending) and a legend is drawn. Non-finite points are skipped.
/// Output bytes depend only on the inputs. Unknown columns raise
/// std::invalid_argument.
void emit_svg_scatter(const CsvTable& data, const std::string& x_column,
                      const std::string& y_column, const std::string& group_column,
                      const std::filesystem::path& path);

}  // namespace intrans
