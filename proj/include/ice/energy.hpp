#pragma once

#include <string_view>

#include "ice/complexity.hpp"
#include "ice/platform.hpp"

namespace ice {

enum class BoundMode { automatic, cpu, memory };

std::string_view to_string(BoundMode mode);
BoundMode parse_bound_mode(std::string_view text);

// All energies in nanojoules. The two time proxies are the static-energy
// candidates pi_op*Span (compute time) and pi_io*IO*Span/Work (memory time);
// both scale with the static power and therefore order the two times.
struct EnergyEstimate {
    Nanojoules static_energy = 0;
    Nanojoules compute_energy = 0;
    Nanojoules memory_energy = 0;
    Nanojoules total = 0;
    Boundedness boundedness = Boundedness::cpu_bound;
    Nanojoules compute_time_proxy = 0;
    Nanojoules memory_time_proxy = 0;
};

// Static term is the larger of the two proxies; ties classify as cpu-bound.
EnergyEstimate estimate(const ComplexityTriple& triple, const IceParameters& params);
EnergyEstimate estimate(const ComplexityTriple& triple, const PlatformProfile& profile);
EnergyEstimate estimate_cpu_bound(const ComplexityTriple& triple, const PlatformProfile& profile);
EnergyEstimate estimate_memory_bound(const ComplexityTriple& triple, const PlatformProfile& profile);
EnergyEstimate estimate(const ComplexityTriple& triple, const PlatformProfile& profile, BoundMode mode);

// Unreduced evaluation from static power, per-op power and cycle counts:
// P_sta * max(T_comp, T_mem) + P_op*F/Freq*Work + P_io*M/Freq*IO.
EnergyEstimate estimate_from_raw(const ComplexityTriple& triple, const RawPlatformConstants& raw);

struct AbstractEnergy {
    double value = 0;
};

// Work + IO + max(Span, IO*Span/Work), platform constants dropped.
AbstractEnergy estimate_platform_independent(const ComplexityTriple& triple);

struct Comparison {
    double ratio = 0;  // energy(a) / energy(b)
    ComplexityTriple triple_a;
    ComplexityTriple triple_b;
    EnergyEstimate a;
    EnergyEstimate b;
};

Comparison compare(const AlgorithmModel& model_a, const AlgorithmModel& model_b, const AlgorithmInput& input,
                   const PlatformProfile& profile, BoundMode mode);

}  // namespace ice
