#include "ice/energy.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "ice/error.hpp"

namespace ice {
namespace {

void check_triple(const ComplexityTriple& t) {
    if (t.work == 0) fail(ErrorCode::undefined_ratio, "work is zero; IO*Span/Work is undefined");
    t.validate();
}

EnergyEstimate evaluate(const ComplexityTriple& t, const IceParameters& p, BoundMode mode) {
    check_triple(t);
    const auto work = static_cast<double>(t.work);
    const auto span = static_cast<double>(t.span);
    const auto io = static_cast<double>(t.io);

    EnergyEstimate e;
    e.compute_energy = p.eps_op * work;
    e.memory_energy = p.eps_io * io;
    e.compute_time_proxy = p.pi_op * span;
    e.memory_time_proxy = p.pi_io * io * span / work;
    switch (mode) {
        case BoundMode::automatic:
            e.boundedness = e.compute_time_proxy >= e.memory_time_proxy ? Boundedness::cpu_bound
                                                                        : Boundedness::memory_bound;
            break;
        case BoundMode::cpu: e.boundedness = Boundedness::cpu_bound; break;
        case BoundMode::memory: e.boundedness = Boundedness::memory_bound; break;
    }
    e.static_energy = e.boundedness == Boundedness::cpu_bound ? e.compute_time_proxy : e.memory_time_proxy;
    e.total = e.static_energy + e.compute_energy + e.memory_energy;
    return e;
}

}  // namespace

std::string_view to_string(BoundMode mode) {
    switch (mode) {
        case BoundMode::automatic: return "auto";
        case BoundMode::cpu: return "cpu";
        case BoundMode::memory: return "memory";
    }
    return "auto";
}

BoundMode parse_bound_mode(std::string_view text) {
    if (text == "auto") return BoundMode::automatic;
    if (text == "cpu") return BoundMode::cpu;
    if (text == "memory") return BoundMode::memory;
    fail(ErrorCode::invalid_argument, fmt::format("bound mode '{}' is not one of auto, cpu, memory", text));
}

EnergyEstimate estimate(const ComplexityTriple& triple, const IceParameters& params) {
    return evaluate(triple, params, BoundMode::automatic);
}

EnergyEstimate estimate(const ComplexityTriple& triple, const PlatformProfile& profile) {
    return evaluate(triple, profile.parameters(), BoundMode::automatic);
}

EnergyEstimate estimate_cpu_bound(const ComplexityTriple& triple, const PlatformProfile& profile) {
    return evaluate(triple, profile.parameters(), BoundMode::cpu);
}

EnergyEstimate estimate_memory_bound(const ComplexityTriple& triple, const PlatformProfile& profile) {
    return evaluate(triple, profile.parameters(), BoundMode::memory);
}

EnergyEstimate estimate(const ComplexityTriple& triple, const PlatformProfile& profile, BoundMode mode) {
    return evaluate(triple, profile.parameters(), mode);
}

EnergyEstimate estimate_from_raw(const ComplexityTriple& t, const RawPlatformConstants& raw) {
    raw.validate();
    check_triple(t);
    constexpr double kNano = 1e9;
    const auto work = static_cast<double>(t.work);
    const auto span = static_cast<double>(t.span);
    const auto io = static_cast<double>(t.io);

    const double t_comp = span * raw.cycles_per_op / raw.frequency_hz;
    const double t_mem = io * span * raw.cycles_per_cacheline / (work * raw.frequency_hz);

    EnergyEstimate e;
    e.compute_energy = raw.dynamic_power_per_op_w * raw.cycles_per_op / raw.frequency_hz * work * kNano;
    e.memory_energy = raw.dynamic_power_per_io_w * raw.cycles_per_cacheline / raw.frequency_hz * io * kNano;
    e.compute_time_proxy = raw.static_power_w * t_comp * kNano;
    e.memory_time_proxy = raw.static_power_w * t_mem * kNano;
    e.boundedness = t_comp >= t_mem ? Boundedness::cpu_bound : Boundedness::memory_bound;
    e.static_energy = raw.static_power_w * std::max(t_comp, t_mem) * kNano;
    e.total = e.static_energy + e.compute_energy + e.memory_energy;
    return e;
}

AbstractEnergy estimate_platform_independent(const ComplexityTriple& t) {
    check_triple(t);
    const auto work = static_cast<double>(t.work);
    const auto span = static_cast<double>(t.span);
    const auto io = static_cast<double>(t.io);
    return {work + io + std::max(span, io * span / work)};
}

Comparison compare(const AlgorithmModel& model_a, const AlgorithmModel& model_b, const AlgorithmInput& input,
                   const PlatformProfile& profile, BoundMode mode) {
    const MachineShape shape = MachineShape::of(profile);
    Comparison c;
    c.triple_a = model_a.evaluate(input, shape);
    c.triple_b = model_b.evaluate(input, shape);
    c.a = estimate(c.triple_a, profile, mode);
    c.b = estimate(c.triple_b, profile, mode);
    if (c.b.total == 0) fail(ErrorCode::division_by_zero, "energy of the second algorithm is zero");
    c.ratio = c.a.total / c.b.total;
    return c;
}

}  // namespace ice
