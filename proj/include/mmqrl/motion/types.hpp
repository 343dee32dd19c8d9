#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "mmqrl/math.hpp"

namespace mmqrl {

inline constexpr int kFps = 30;
inline constexpr double kFrameDt = 1.0 / 30.0;
inline constexpr int kPoseFeatureDim = 15;
inline constexpr int kTrajectoryFeatureDim = 12;
inline constexpr int kFeatureDim = kPoseFeatureDim + kTrajectoryFeatureDim;  // 27
inline constexpr int kTrajectoryOffsets[3] = {10, 20, 30};
inline constexpr int kPlaybackFrames = 6;  // one RL step = 6 frames = 0.2 s
// Minimum clip length: 1 velocity lookback + 30 trajectory lookahead + 6 playback.
inline constexpr int kMinClipFrames = 37;

// World conventions: +Y is up, +Z is the reference forward axis.
inline constexpr Vec3 kUpAxis{0.0, 1.0, 0.0};
inline constexpr Vec3 kForwardAxis{0.0, 0.0, 1.0};

struct Pose {
    Vec3 root_pos;
    Quat root_orient;
    Vec3 lfoot_pos;
    Vec3 rfoot_pos;
};

struct MotionClip {
    uint32_t id = 0;
    std::string source_tag;
    std::vector<Pose> frames;  // uniform 30 Hz, index * (1/30) s

    int length() const { return static_cast<int>(frames.size()); }
};

struct DegenerateFacing : std::runtime_error {
    DegenerateFacing() : std::runtime_error("character facing is vertical; forward undefined") {}
};

// Egocentric horizontal frame: origin at the horizontal root position, local
// +Z along the root forward direction, local +X to the character's right.
struct CharacterFrame {
    Vec2 origin;
    Vec2 forward;  // unit

    Vec2 right() const { return {forward.z, -forward.x}; }

    Vec3 to_local(const Vec3& p) const {
        const Vec2 d{p.x - origin.x, p.z - origin.z};
        const Vec2 r = right();
        return {d.dot(r), p.y, d.dot(forward)};
    }
    Vec3 to_world(const Vec3& p) const {
        const Vec2 r = right();
        return {origin.x + r.x * p.x + forward.x * p.z, p.y,
                origin.z + r.z * p.x + forward.z * p.z};
    }
    Vec3 rotate_to_local(const Vec3& v) const {
        const Vec2 r = right();
        const Vec2 d{v.x, v.z};
        return {d.dot(r), v.y, d.dot(forward)};
    }
    Vec3 rotate_to_world(const Vec3& v) const {
        const Vec2 r = right();
        return {r.x * v.x + forward.x * v.z, v.y, r.z * v.x + forward.z * v.z};
    }
    Vec2 to_local(const Vec2& p) const {
        const Vec2 d{p.x - origin.x, p.z - origin.z};
        return {d.dot(right()), d.dot(forward)};
    }
    Vec2 to_world(const Vec2& p) const {
        const Vec2 r = right();
        return {origin.x + r.x * p.x + forward.x * p.z, origin.z + r.z * p.x + forward.z * p.z};
    }
    Vec2 rotate_to_local(const Vec2& v) const { return {v.dot(right()), v.dot(forward)}; }
    Vec2 rotate_to_world(const Vec2& v) const {
        const Vec2 r = right();
        return {r.x * v.x + forward.x * v.z, r.z * v.x + forward.z * v.z};
    }
};

// 15 scalars: foot positions, foot velocities and root velocity, all in the
// character frame of the sampled frame.
struct PoseFeature {
    Vec3 lfoot_pos, rfoot_pos;
    Vec3 lfoot_vel, rfoot_vel, root_vel;

    std::array<double, kPoseFeatureDim> flatten() const {
        return {lfoot_pos.x, lfoot_pos.y, lfoot_pos.z, rfoot_pos.x, rfoot_pos.y, rfoot_pos.z,
                lfoot_vel.x, lfoot_vel.y, lfoot_vel.z, rfoot_vel.x, rfoot_vel.y, rfoot_vel.z,
                root_vel.x,  root_vel.y,  root_vel.z};
    }
};

// 12 scalars: future horizontal root positions and headings at +10/+20/+30
// frames, in the character frame of the sampled frame.
struct TrajectoryFeature {
    std::array<Vec2, 3> tau;
    std::array<Vec2, 3> dir;  // unit

    std::array<double, kTrajectoryFeatureDim> flatten() const {
        return {tau[0].x, tau[0].z, dir[0].x, dir[0].z, tau[1].x, tau[1].z,
                dir[1].x, dir[1].z, tau[2].x, tau[2].z, dir[2].x, dir[2].z};
    }
};

struct FeatureVector {
    PoseFeature pose;
    TrajectoryFeature traj;

    std::array<double, kFeatureDim> flatten() const {
        std::array<double, kFeatureDim> out{};
        const auto p = pose.flatten();
        const auto t = traj.flatten();
        for (int i = 0; i < kPoseFeatureDim; ++i) out[i] = p[i];
        for (int i = 0; i < kTrajectoryFeatureDim; ++i) out[kPoseFeatureDim + i] = t[i];
        return out;
    }
};

}  // namespace mmqrl
