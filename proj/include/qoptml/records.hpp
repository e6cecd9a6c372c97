#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

namespace qoptml {

/// One homodyne outcome x at local-oscillator phase phi (phase in [0, 2pi)).
struct HomodyneRecord {
    double phase = 0.0;
    double x = 0.0;
    bool operator==(const HomodyneRecord&) const = default;
};

/// One heterodyne outcome alpha.
struct HeterodyneRecord {
    double alpha_re = 0.0;
    double alpha_im = 0.0;
    bool operator==(const HeterodyneRecord&) const = default;
};

/// Aggregate ON/OFF record: n_clicks clicks out of n_total measurements.
struct ClickRecord {
    std::int64_t n_total = 0;
    std::int64_t n_clicks = 0;
    bool operator==(const ClickRecord&) const = default;
};

// CSV persistence; columns are `phase,x`, `alpha_re,alpha_im`, `n_total,n_clicks`.
void write_homodyne_csv(const std::filesystem::path& path, std::span<const HomodyneRecord> records);
std::vector<HomodyneRecord> read_homodyne_csv(const std::filesystem::path& path);

void write_heterodyne_csv(const std::filesystem::path& path,
                          std::span<const HeterodyneRecord> records);
std::vector<HeterodyneRecord> read_heterodyne_csv(const std::filesystem::path& path);

void write_click_csv(const std::filesystem::path& path, const ClickRecord& record);
ClickRecord read_click_csv(const std::filesystem::path& path);

}  // namespace qoptml
