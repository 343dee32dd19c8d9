#pragma once

#include <cstdint>
#include <vector>

#include "mmqrl/motion/types.hpp"

namespace mmqrl {

struct GaitConfig {
    int minutes = 10;          // total duration across all clips
    double clip_seconds = 15;  // duration of each emitted clip
    double walk_speed_min = 0.5;
    double walk_speed_max = 1.8;
    double run_speed_min = 2.0;
    double run_speed_max = 3.5;
    double max_turn_rate_deg = 120.0;

    void validate() const;  // throws std::invalid_argument
};

// Deterministic substitute for a captured locomotion dataset. Emits a fixed
// coverage suite (standing, straight walks/runs, left/right turns) followed
// by random-profile wander clips until the requested duration is reached.
// Total frame count is exactly minutes * 60 * 30.
std::vector<MotionClip> generate_synthetic_locomotion(const GaitConfig& config, uint64_t seed);

}  // namespace mmqrl
