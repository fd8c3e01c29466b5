#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace seiffert::cli {

/// Named numeric columns, rendered either as CSV or JSON.
struct OutputRecord {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

/// Shortest decimal string that parses back to the same double.
std::string format_double(double v);

/// Header row, then one line per row; `,` separator, `.` decimal point.
void write_csv(const OutputRecord& record, std::ostream& os);

/// {"columns": [...], "rows": [[...], ...]}
nlohmann::json to_json(const OutputRecord& record);

}  // namespace seiffert::cli
