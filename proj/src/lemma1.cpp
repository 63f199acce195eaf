#include "ice/lemma1.hpp"

#include <algorithm>
#include <random>

#include "ice/error.hpp"

namespace ice {

std::vector<Lemma1Summary> lemma1_random_sweep(const RandomLemma1Config& config) {
    if (config.trials == 0) fail(ErrorCode::invalid_argument, "trials must be positive");
    if (config.trace_length == 0) fail(ErrorCode::invalid_argument, "trace length must be positive");
    if (config.cores.empty()) fail(ErrorCode::invalid_argument, "at least one core count is required");
    for (const auto c : config.cores) {
        if (c == 0) fail(ErrorCode::invalid_argument, "core counts must be positive");
    }
    config.geometry.validate();

    std::vector<Lemma1Summary> summaries;
    for (const auto c : config.cores) {
        const bool seen = std::any_of(summaries.begin(), summaries.end(), [&](const auto& s) { return s.cores == c; });
        if (!seen) summaries.push_back({.cores = c});
    }

    std::mt19937_64 rng(config.seed);
    for (std::uint64_t t = 0; t < config.trials; ++t) {
        const std::uint32_t cores = config.cores[t % config.cores.size()];
        const MemoryTrace trace = random_trace(rng, cores, config.trace_length, config.address_space);
        const Lemma1Report report = check_lemma1(trace, config.geometry);
        auto& s = *std::find_if(summaries.begin(), summaries.end(), [&](const auto& x) { return x.cores == cores; });
        ++s.trials;
        if (!report.holds) ++s.violations;
        s.max_ratio = std::max(s.max_ratio, report.ratio());
    }
    return summaries;
}

std::vector<KernelLemma1Result> lemma1_kernel_sweep(std::span<const std::uint64_t> sizes,
                                                    std::span<const std::uint32_t> cores,
                                                    const IoValidationConfig& config) {
    std::vector<KernelLemma1Result> out;
    for (const Kernel kernel : all_kernels()) {
        const CacheGeometry geom = oracle_geometry(kernel, config);
        for (const auto size : sizes) {
            for (const auto p : cores) {
                const MemoryTrace trace = oracle_trace(kernel, size, config, p);
                out.push_back({kernel, size, p, check_lemma1(trace, geom)});
            }
        }
    }
    return out;
}

}  // namespace ice
