// Licensed under the Apache License, Version 2.0. See LICENSE in the project root.
#include "zapsim/phase.hpp"

#include <cmath>
#include <stdexcept>

namespace zapsim {

const char* to_string(ShiftKind kind) {
    return kind == ShiftKind::laddered ? "laddered" : "randomized";
}

PhaseSchedule build_laddered(double gop_ms, int separation, int session_count) {
    if (separation < 2)
        throw std::invalid_argument("build_laddered: separation must be >= 2");
    if (!(gop_ms > 0.0))
        throw std::invalid_argument("build_laddered: gop_ms must be positive");
    if (session_count < 1)
        throw std::invalid_argument("build_laddered: session_count must be >= 1");

    PhaseSchedule schedule;
    schedule.gop_ms = gop_ms;
    schedule.separation = separation;
    schedule.kind = ShiftKind::laddered;
    schedule.shift_ms.resize(session_count);
    const double step = gop_ms / separation;
    for (int k = 0; k < session_count; ++k)
        schedule.shift_ms[k] = (k % separation) * step;
    return schedule;
}

PhaseSchedule build_randomized_shifts(double gop_ms, std::span<const double> uniforms) {
    if (!(gop_ms > 0.0))
        throw std::invalid_argument("build_randomized_shifts: gop_ms must be positive");
    if (uniforms.empty())
        throw std::invalid_argument("build_randomized_shifts: need at least one session");

    PhaseSchedule schedule;
    schedule.gop_ms = gop_ms;
    schedule.separation = 0;
    schedule.kind = ShiftKind::randomized;
    schedule.shift_ms.resize(uniforms.size());
    for (std::size_t k = 0; k < uniforms.size(); ++k)
        schedule.shift_ms[k] = uniforms[k] * gop_ms;
    return schedule;
}

double wait_until_keyframe(const PhaseSchedule& schedule, int position, double now_ms) {
    const double gop = schedule.gop_ms;
    double phase = std::fmod(now_ms, gop);
    if (phase < 0.0)
        phase += gop;
    double wait = schedule.shift_ms[position] - phase;
    if (wait < 0.0)
        wait += gop;
    if (wait >= gop) // fp rounding at the wrap boundary
        wait = 0.0;
    return wait;
}

} // namespace zapsim
