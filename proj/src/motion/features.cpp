#include "mmqrl/motion/features.hpp"

#include <stdexcept>

namespace mmqrl {

CharacterFrame compute_character_frame(const Pose& pose) {
    const Vec3 fwd3 = pose.root_orient.rotate(kForwardAxis);
    const Vec2 fwd = fwd3.horizontal();
    const double n = fwd.norm();
    if (n < 1e-6) throw DegenerateFacing{};
    return {pose.root_pos.horizontal(), {fwd.x / n, fwd.z / n}};
}

static void check_range(const MotionClip& clip, int i, int lookahead) {
    if (i < 1 || i + lookahead >= clip.length()) {
        throw std::out_of_range("frame index " + std::to_string(i) + " out of range for clip of " +
                                std::to_string(clip.length()) + " frames");
    }
}

PoseFeature extract_pose_feature(const MotionClip& clip, int i) {
    check_range(clip, i, 0);
    const Pose& cur = clip.frames[i];
    const Pose& prev = clip.frames[i - 1];
    const CharacterFrame frame = compute_character_frame(cur);

    PoseFeature f;
    f.lfoot_pos = frame.to_local(cur.lfoot_pos);
    f.rfoot_pos = frame.to_local(cur.rfoot_pos);
    f.lfoot_vel = frame.rotate_to_local((cur.lfoot_pos - prev.lfoot_pos) * kFps);
    f.rfoot_vel = frame.rotate_to_local((cur.rfoot_pos - prev.rfoot_pos) * kFps);
    f.root_vel = frame.rotate_to_local((cur.root_pos - prev.root_pos) * kFps);
    return f;
}

TrajectoryFeature extract_trajectory_feature(const MotionClip& clip, int i) {
    check_range(clip, i, kTrajectoryOffsets[2]);
    const CharacterFrame frame = compute_character_frame(clip.frames[i]);

    TrajectoryFeature t;
    for (int k = 0; k < 3; ++k) {
        const Pose& future = clip.frames[i + kTrajectoryOffsets[k]];
        t.tau[k] = frame.to_local(future.root_pos.horizontal());
        t.dir[k] = frame.rotate_to_local(compute_character_frame(future).forward);
    }
    return t;
}

}  // namespace mmqrl
