#pragma once

#include <fstream>
#include <span>
#include <string>
#include <vector>

namespace ricci {

/// Shortest exact decimal form would not round-trip reliably across tools;
/// 17 significant digits always does.
std::string format_double(double v);

/// Minimal CSV emitter with a fixed header; numbers at 17 significant digits.
class CsvWriter {
public:
    CsvWriter(const std::string& path, const std::vector<std::string>& columns);
    void row(std::span<const double> values);

private:
    std::ofstream out_;
    std::size_t columns_;
};

}  // namespace ricci
