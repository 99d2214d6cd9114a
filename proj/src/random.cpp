#include "rhm/random.hpp"

#include <cmath>
#include <numbers>

namespace rhm {

namespace {

constexpr std::uint32_t kMulA = 0xD2511F53u;
constexpr std::uint32_t kMulB = 0xCD9E8D57u;
constexpr std::uint32_t kWeylA = 0x9E3779B9u;
constexpr std::uint32_t kWeylB = 0xBB67AE85u;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& lo, std::uint32_t& hi) {
    const std::uint64_t p = static_cast<std::uint64_t>(a) * b;
    lo = static_cast<std::uint32_t>(p);
    hi = static_cast<std::uint32_t>(p >> 32);
}

inline PhiloxCounter round(const PhiloxCounter& c, const PhiloxKey& k) {
    std::uint32_t lo0, hi0, lo1, hi1;
    mulhilo(kMulA, c[0], lo0, hi0);
    mulhilo(kMulB, c[2], lo1, hi1);
    return {hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
}

}  // namespace

PhiloxCounter philox4x32(PhiloxCounter counter, PhiloxKey key) {
    for (int r = 0; r < 10; ++r) {
        if (r > 0) {
            key[0] += kWeylA;
            key[1] += kWeylB;
        }
        counter = round(counter, key);
    }
    return counter;
}

double to_open_unit(std::uint64_t bits) {
    // 52 bits plus half an ulp: every value is exact, and 0 and 1 are unreachable.
    return (static_cast<double>(bits >> 12) + 0.5) * 0x1.0p-52;
}

std::pair<double, double> normal_pair(std::uint64_t seed, Stream stream,
                                      std::uint64_t replication, std::uint64_t block) {
    const PhiloxCounter ctr{static_cast<std::uint32_t>(block),
                            static_cast<std::uint32_t>(stream),
                            static_cast<std::uint32_t>(replication),
                            static_cast<std::uint32_t>(replication >> 32)};
    const PhiloxKey key{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
    const PhiloxCounter out = philox4x32(ctr, key);
    const double u1 = to_open_unit((static_cast<std::uint64_t>(out[0]) << 32) | out[1]);
    const double u2 = to_open_unit((static_cast<std::uint64_t>(out[2]) << 32) | out[3]);
    // Box-Muller
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double phase = 2.0 * std::numbers::pi * u2;
    return {r * std::cos(phase), r * std::sin(phase)};
}

double normal_at(std::uint64_t seed, Stream stream, std::uint64_t replication, std::uint64_t k) {
    const auto [a, b] = normal_pair(seed, stream, replication, (k - 1) / 2);
    return (k - 1) % 2 == 0 ? a : b;
}

void fill_normals(std::uint64_t seed, Stream stream, std::uint64_t replication,
                  std::uint64_t first_k, std::span<double> out) {
    std::size_t i = 0;
    std::uint64_t k = first_k;
    if (!out.empty() && (k - 1) % 2 == 1) {
        out[i++] = normal_pair(seed, stream, replication, (k - 1) / 2).second;
        ++k;
    }
    for (; i + 1 < out.size(); i += 2, k += 2) {
        const auto [a, b] = normal_pair(seed, stream, replication, (k - 1) / 2);
        out[i] = a;
        out[i + 1] = b;
    }
    if (i < out.size()) {
        out[i] = normal_pair(seed, stream, replication, (k - 1) / 2).first;
    }
}

}  // namespace rhm
