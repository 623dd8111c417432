#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace tokennet {

/// SplitMix64 increment (the "golden gamma").
inline constexpr std::uint64_t kSeedGamma = 0x9E3779B97F4A7C15ULL;

/// SplitMix64 finalizer (Steele, Lea & Flood; same constants as
/// java.util.SplittableRandom). Used for all seed derivation so that seeds,
/// and therefore every simulated game, are reproducible across platforms and
/// library versions.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
}

/// Identifies one random substream: the pair (master_seed, replicate_index)
/// deterministically selects an independent generator state. Equal pairs give
/// bit-identical draws; distinct replicate indices give statistically
/// independent streams, so replicates may be generated in any order and on any
/// number of workers.
struct SeedSpec {
    std::uint64_t master_seed = 0;
    std::uint64_t replicate_index = 0;

    /// Element `replicate_index + 1` of the SplitMix64 sequence started at
    /// master_seed. This value seeds the stream's engine.
    constexpr std::uint64_t stream_seed() const noexcept {
        return mix64(master_seed + (replicate_index + 1) * kSeedGamma);
    }

    /// A second-level stream, e.g. (master, player) -> per-player master from
    /// which per-replicate streams are drawn.
    constexpr SeedSpec substream(std::uint64_t index) const noexcept {
        return SeedSpec{stream_seed(), index};
    }

    friend bool operator==(const SeedSpec&, const SeedSpec&) = default;
};

/// Random source with a pinned algorithm: std::mt19937_64 (whose output
/// sequence is fully specified by the C++ standard) seeded via SeedSpec, with
/// bounded draws by unbiased rejection sampling. Nothing here depends on
/// implementation-defined library behaviour, so logs regenerate bit-for-bit
/// anywhere.
class Rng {
public:
    explicit Rng(SeedSpec spec) : engine_(spec.stream_seed()) {}
    explicit Rng(std::uint64_t raw_engine_seed) : engine_(raw_engine_seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform draw from {0, 1, ..., n-1}. Rejection sampling: draws above the
    /// largest multiple of n are discarded, then reduced modulo n.
    int uniform_int(int n) {
        const std::uint64_t bound = static_cast<std::uint64_t>(n);
        const std::uint64_t residue = (std::numeric_limits<std::uint64_t>::max() % bound + 1) % bound;
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - residue;
        std::uint64_t draw = engine_();
        while (draw > limit) draw = engine_();
        return static_cast<int>(draw % bound);
    }

    /// Uniform in [0, 1): top 53 bits scaled by 2^-53.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 engine_;
};

}  // namespace tokennet
