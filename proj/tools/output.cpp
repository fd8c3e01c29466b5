#include "output.hpp"

#include <array>
#include <charconv>

namespace seiffert::cli {

std::string format_double(double v) {
    std::array<char, 64> buf{};
    const auto result = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), result.ptr);
}

void write_csv(const OutputRecord& record, std::ostream& os) {
    for (std::size_t i = 0; i < record.columns.size(); ++i) {
        os << (i ? "," : "") << record.columns[i];
    }
    os << '\n';
    for (const auto& row : record.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            os << (i ? "," : "") << format_double(row[i]);
        }
        os << '\n';
    }
}

nlohmann::json to_json(const OutputRecord& record) {
    nlohmann::json j;
    j["columns"] = record.columns;
    j["rows"] = nlohmann::json::array();
    for (const auto& row : record.rows) {
        j["rows"].push_back(row);
    }
    return j;
}

}  // namespace seiffert::cli
