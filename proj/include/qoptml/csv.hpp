#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

namespace qoptml {

/// Shortest-exact formatting for doubles (17 significant digits, '.' decimal
/// separator); values round-trip bit-exactly through text.
std::string csv_format(double value);

double csv_parse_double(const std::string& field);

/// Minimal CSV writer: one header row, then data rows. All formatting is
/// locale-independent so identical data produces byte-identical files.
class CsvWriter {
  public:
    CsvWriter(const std::filesystem::path& path, const std::vector<std::string>& header);

    void row(const std::vector<std::string>& cells);
    void row(const std::vector<double>& values);

  private:
    std::ofstream out_;
    std::size_t n_columns_;
};

/// Reads a CSV written by CsvWriter (or any simple comma-separated file with a
/// header row). Returns header + rows of raw fields.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

CsvTable read_csv(const std::filesystem::path& path);

}  // namespace qoptml
