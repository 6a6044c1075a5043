#include "congestion/csv.hpp"

#include <sstream>

namespace congestion {

std::string format_double(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

std::vector<std::string> split_csv_line(std::string_view line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        out.emplace_back(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    if (!out.empty() && !out.back().empty() && out.back().back() == '\r') out.back().pop_back();
    return out;
}

std::string join_csv(const std::vector<std::string>& fields) {
    std::string s;
    for (std::size_t k = 0; k < fields.size(); ++k) {
        if (k) s += ',';
        s += fields[k];
    }
    return s;
}

}  // namespace congestion
