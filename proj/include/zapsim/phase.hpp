// Licensed under the Apache License, Version 2.0. See LICENSE in the project root.
#pragma once

#include <span>
#include <vector>

namespace zapsim {

enum class ShiftKind { laddered, randomized };

const char* to_string(ShiftKind kind);

// Per-channel key-frame start phases, indexed by circular grid position.
// A channel's key frame starts at shift_ms[pos] + k * gop_ms for integer k.
struct PhaseSchedule {
    double gop_ms = 0.0;
    int separation = 0; // S = T_GOP / dT; 0 when shifts are randomized
    std::vector<double> shift_ms;
    ShiftKind kind = ShiftKind::laddered;
};

// shift(position k) = (k mod S) * (gop_ms / S): adjacent positions are dT
// apart and positions k and k+S share a phase exactly.
// Throws std::invalid_argument if separation < 2, gop_ms <= 0 or
// session_count < 1.
PhaseSchedule build_laddered(double gop_ms, int separation, int session_count);

// shift(position k) = uniforms[k] * gop_ms; one uniform in [0,1) per position.
PhaseSchedule build_randomized_shifts(double gop_ms, std::span<const double> uniforms);

// Delay from now_ms until the next key-frame start of the channel at the
// given position. Always in [0, gop_ms); zero iff the request lands exactly
// on a key-frame start.
double wait_until_keyframe(const PhaseSchedule& schedule, int position, double now_ms);

} // namespace zapsim
