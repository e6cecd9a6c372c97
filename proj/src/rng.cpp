#include "qoptml/rng.hpp"

#include <cmath>
#include <numbers>

namespace qoptml {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix64(std::uint64_t z) {
    z += kGolden;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace

StreamRng::StreamRng(std::uint64_t master_seed, std::uint64_t stream_id)
    : state_(mix64(master_seed) ^ mix64(mix64(stream_id) + kGolden)) {}

std::uint64_t StreamRng::next_u64() {
    state_ += kGolden;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double StreamRng::uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double StreamRng::uniform(double a, double b) { return a + uniform() * (b - a); }

std::pair<double, double> StreamRng::normal_pair() {
    const double u1 = uniform();
    const double u2 = uniform();
    // 1 - u1 lies in (0, 1], keeping the log finite.
    const double radius = std::sqrt(-2.0 * std::log1p(-u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    return {radius * std::cos(angle), radius * std::sin(angle)};
}

double StreamRng::normal() { return normal_pair().first; }

}  // namespace qoptml
