#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <utility>

namespace rhm {

// Independent random streams. A stream tag is part of the generator counter,
// so the same user seed never correlates observation noise with hull samples.
enum class Stream : std::uint32_t {
    observation = 0x0b5e0001u,
    hull = 0x4a110002u,
};

// Philox4x32-10 (Salmon et al., SC'11). Stateless: the output is a pure
// function of (counter, key), which is what makes every draw addressable by
// (seed, stream, replication, index) and independent of scheduling.
using PhiloxCounter = std::array<std::uint32_t, 4>;
using PhiloxKey = std::array<std::uint32_t, 2>;

PhiloxCounter philox4x32(PhiloxCounter counter, PhiloxKey key);

/// Maps 64 random bits to a double strictly inside (0, 1).
double to_open_unit(std::uint64_t bits);

/// Two independent N(0, 1) deviates for block `block` of a replication.
/// Block b holds the 1-based indices 2b + 1 and 2b + 2.
std::pair<double, double> normal_pair(std::uint64_t seed, Stream stream,
                                      std::uint64_t replication, std::uint64_t block);

/// xi_k for a single 1-based index k.
double normal_at(std::uint64_t seed, Stream stream, std::uint64_t replication,
                 std::uint64_t k);

/// Writes xi_{first_k}, xi_{first_k + 1}, ... into `out`. Identical values to
/// normal_at for every index, whatever the alignment of first_k.
void fill_normals(std::uint64_t seed, Stream stream, std::uint64_t replication,
                  std::uint64_t first_k, std::span<double> out);

}  // namespace rhm
