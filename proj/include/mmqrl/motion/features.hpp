#pragma once

#include "mmqrl/motion/types.hpp"

namespace mmqrl {

// Horizontal frame of a pose. Throws DegenerateFacing when the rotated
// forward axis is within 1e-6 of vertical; callers keep the previous frame.
CharacterFrame compute_character_frame(const Pose& pose);

// Feet and velocities of frame i in the character frame of frame i.
// Velocities are backward finite differences at 30 Hz; requires i >= 1.
PoseFeature extract_pose_feature(const MotionClip& clip, int i);

// Future root positions/headings at +10/+20/+30 frames in the character
// frame of frame i; requires 1 <= i and i + 30 < clip length.
TrajectoryFeature extract_trajectory_feature(const MotionClip& clip, int i);

}  // namespace mmqrl
