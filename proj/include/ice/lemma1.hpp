#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ice/cachesim.hpp"
#include "ice/io_validation.hpp"

namespace ice {

struct RandomLemma1Config {
    std::uint64_t trials = 1000;
    std::vector<std::uint32_t> cores{2, 4, 8};  // trial t uses cores[t % size]
    std::size_t trace_length = 10000;
    std::uint64_t seed = 42;
    std::uint64_t address_space = 256;
    CacheGeometry geometry{8, 4};
};

struct Lemma1Summary {
    std::uint32_t cores = 0;
    std::uint64_t trials = 0;
    std::uint64_t violations = 0;
    double max_ratio = 0;  // max q_p / (P * q_1)
};

// One summary per distinct core count, in the order first listed.
std::vector<Lemma1Summary> lemma1_random_sweep(const RandomLemma1Config& config);

struct KernelLemma1Result {
    Kernel kernel = Kernel::csr;
    std::uint64_t size = 0;
    std::uint32_t cores = 0;
    Lemma1Report report;
};

// Every kernel at every size and core count, on the oracle geometry of that kernel.
std::vector<KernelLemma1Result> lemma1_kernel_sweep(std::span<const std::uint64_t> sizes,
                                                    std::span<const std::uint32_t> cores,
                                                    const IoValidationConfig& config);

}  // namespace ice
