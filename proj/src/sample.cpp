#include "evi/sample.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "evi/errors.hpp"

namespace evi {

OrderedSample OrderedSample::from_raw(std::vector<double> data) {
    for (std::size_t i = 0; i < data.size(); ++i) {
        if (!std::isfinite(data[i])) {
            throw IngestionError("non-finite value at index " + std::to_string(i));
        }
    }
    if (data.size() < 2) {
        throw IngestionError("sample needs at least 2 finite values, got " +
                             std::to_string(data.size()));
    }
    std::stable_sort(data.begin(), data.end());
    return OrderedSample(std::move(data));
}

double OrderedSample::upper_order_stat(std::size_t i) const {
    if (i < 1 || i > values_.size()) {
        throw IndexError("upper order statistic index " + std::to_string(i) +
                         " out of range [1, " + std::to_string(values_.size()) + "]");
    }
    return values_[values_.size() - i];
}

namespace {

double parse_number(const std::string& token, std::size_t line_no) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(token, &pos);
    } catch (const std::exception&) {
        throw IngestionError("unparseable value '" + token + "' at line " +
                             std::to_string(line_no));
    }
    // Allow trailing whitespace only.
    for (std::size_t i = pos; i < token.size(); ++i) {
        if (!std::isspace(static_cast<unsigned char>(token[i]))) {
            throw IngestionError("unparseable value '" + token + "' at line " +
                                 std::to_string(line_no));
        }
    }
    return v;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) {
        fields.push_back(field);
    }
    if (!line.empty() && line.back() == ',') {
        fields.emplace_back();
    }
    return fields;
}

std::string strip(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace

OrderedSample load_sample(const std::string& path, SampleFormat format,
                          const std::string& column) {
    std::ifstream in(path);
    if (!in) {
        throw IngestionError("cannot open file: " + path);
    }
    std::vector<double> data;
    std::string line;
    std::size_t line_no = 0;

    if (format == SampleFormat::Plain) {
        while (std::getline(in, line)) {
            ++line_no;
            const std::string t = strip(line);
            if (t.empty() || t[0] == '#') continue;
            data.push_back(parse_number(t, line_no));
        }
    } else {
        if (!std::getline(in, line)) {
            throw IngestionError("empty CSV file: " + path);
        }
        ++line_no;
        const auto header = split_csv_line(strip(line));
        std::size_t col = header.size();
        for (std::size_t i = 0; i < header.size(); ++i) {
            if (strip(header[i]) == column) {
                col = i;
                break;
            }
        }
        if (col == header.size()) {
            throw IngestionError("column '" + column + "' not found in " + path);
        }
        while (std::getline(in, line)) {
            ++line_no;
            const std::string t = strip(line);
            if (t.empty()) continue;
            const auto fields = split_csv_line(t);
            if (col >= fields.size()) {
                throw IngestionError("missing column '" + column + "' at line " +
                                     std::to_string(line_no));
            }
            data.push_back(parse_number(strip(fields[col]), line_no));
        }
    }
    return OrderedSample::from_raw(std::move(data));
}

}  // namespace evi
