#include "qoptml/records.hpp"

#include <stdexcept>

#include "qoptml/csv.hpp"

namespace qoptml {

void write_homodyne_csv(const std::filesystem::path& path,
                        std::span<const HomodyneRecord> records) {
    CsvWriter w(path, {"phase", "x"});
    for (const auto& rec : records) w.row(std::vector<double>{rec.phase, rec.x});
}

std::vector<HomodyneRecord> read_homodyne_csv(const std::filesystem::path& path) {
    const CsvTable table = read_csv(path);
    if (table.header != std::vector<std::string>{"phase", "x"})
        throw std::runtime_error("homodyne csv: expected header 'phase,x'");
    std::vector<HomodyneRecord> records;
    records.reserve(table.rows.size());
    for (const auto& row : table.rows) {
        if (row.size() != 2) throw std::runtime_error("homodyne csv: malformed row");
        records.push_back({csv_parse_double(row[0]), csv_parse_double(row[1])});
    }
    return records;
}

void write_heterodyne_csv(const std::filesystem::path& path,
                          std::span<const HeterodyneRecord> records) {
    CsvWriter w(path, {"alpha_re", "alpha_im"});
    for (const auto& rec : records) w.row(std::vector<double>{rec.alpha_re, rec.alpha_im});
}

std::vector<HeterodyneRecord> read_heterodyne_csv(const std::filesystem::path& path) {
    const CsvTable table = read_csv(path);
    if (table.header != std::vector<std::string>{"alpha_re", "alpha_im"})
        throw std::runtime_error("heterodyne csv: expected header 'alpha_re,alpha_im'");
    std::vector<HeterodyneRecord> records;
    records.reserve(table.rows.size());
    for (const auto& row : table.rows) {
        if (row.size() != 2) throw std::runtime_error("heterodyne csv: malformed row");
        records.push_back({csv_parse_double(row[0]), csv_parse_double(row[1])});
    }
    return records;
}

void write_click_csv(const std::filesystem::path& path, const ClickRecord& record) {
    CsvWriter w(path, {"n_total", "n_clicks"});
    w.row(std::vector<std::string>{std::to_string(record.n_total), std::to_string(record.n_clicks)});
}

ClickRecord read_click_csv(const std::filesystem::path& path) {
    const CsvTable table = read_csv(path);
    if (table.header != std::vector<std::string>{"n_total", "n_clicks"} || table.rows.size() != 1)
        throw std::runtime_error("click csv: expected header 'n_total,n_clicks' and one row");
    return {static_cast<std::int64_t>(csv_parse_double(table.rows[0][0])),
            static_cast<std::int64_t>(csv_parse_double(table.rows[0][1]))};
}

}  // namespace qoptml
