#include "ricci/csv.hpp"

#include <cstdio>
#include <stdexcept>

namespace ricci {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

CsvWriter::CsvWriter(const std::string& path, const std::vector<std::string>& columns)
    : out_(path), columns_(columns.size()) {
    if (!out_) throw std::runtime_error("csv: cannot open '" + path + "' for writing");
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (i) out_ << ',';
        out_ << columns[i];
    }
    out_ << '\n';
}

void CsvWriter::row(std::span<const double> values) {
    if (values.size() != columns_) throw std::logic_error("csv: row width mismatch");
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out_ << ',';
        out_ << format_double(values[i]);
    }
    out_ << '\n';
    if (!out_) throw std::runtime_error("csv: write failed");
}

}  // namespace ricci
