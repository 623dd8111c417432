#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "tokennet/model.hpp"
#include "tokennet/types.hpp"

namespace tokennet {

struct ReportOptions {
    ModelVariant variant = ModelVariant::Additive;  // used for tests, bands and influence
    int replicates = 10000;
    std::uint64_t master_seed = 0;
    int threads = 0;  // 0 = hardware
    double influence_threshold = 2.0;
    int layout_iterations = 500;
};

struct ReportResult {
    std::filesystem::path manifest_path;
    std::vector<std::filesystem::path> outputs;
};

/// One-shot pipeline over a game: validation, exploratory exports, coefficient
/// trajectories for all four variants, null bands and significance tests,
/// influence scores, and the annotated graph; plus a manifest recording the
/// seed, config hash and output hashes. Every output is a pure function of
/// (config, log, options) -- independent of thread count -- so a bundle can be
/// reproduced byte for byte from its manifest.
ReportResult run_report(const GameConfig& config, const AllocationLog& log,
                        const std::filesystem::path& out_dir, const ReportOptions& options);

}  // namespace tokennet
