#pragma once

#include <string>
#include <vector>

#include "mmqrl/motion/types.hpp"

namespace mmqrl {

// Clip container ("MMC1"): magic, version, clip count, then per clip a header
// (id, frame count, declared 30 Hz rate, source tag) followed by frame rows of
// 13 little-endian f32 values: root pos (3), root quat wxyz (4), lfoot (3),
// rfoot (3). World axes: +Y up, +Z reference forward.
void save_clips(const std::string& path, const std::vector<MotionClip>& clips);
std::vector<MotionClip> load_clips(const std::string& path);

}  // namespace mmqrl
