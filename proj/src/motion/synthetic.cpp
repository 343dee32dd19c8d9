#include "mmqrl/motion/synthetic.hpp"

#include <cmath>
#include <stdexcept>

#include "mmqrl/rng.hpp"

namespace mmqrl {

void GaitConfig::validate() const {
    auto bad = [](const std::string& msg) { throw std::invalid_argument(msg); };
    if (minutes < 1) bad("minutes must be >= 1");
    if (clip_seconds * kFps < kMinClipFrames) bad("clip_seconds too short");
    if (walk_speed_min < 0 || walk_speed_max > 4 || walk_speed_min > walk_speed_max)
        bad("walk speed range must lie in [0, 4]");
    if (run_speed_min < 0 || run_speed_max > 4 || run_speed_min > run_speed_max)
        bad("run speed range must lie in [0, 4]");
    if (max_turn_rate_deg < 0 || max_turn_rate_deg > 120) bad("turn rate must lie in [-120, 120]");
}

namespace {

struct GaitProfile {
    double speed = 0.0;          // m/s
    double turn_rate = 0.0;      // rad/s
};

// Integrates one clip of `frames` poses from a per-frame profile callback.
template <typename ProfileFn>
MotionClip integrate_clip(uint32_t id, const std::string& tag, int frames, ProfileFn&& profile) {
    MotionClip clip;
    clip.id = id;
    clip.source_tag = tag;
    clip.frames.resize(frames);

    double heading = 0.0;
    Vec2 pos{0.0, 0.0};
    double phase = 0.0;

    for (int i = 0; i < frames; ++i) {
        const GaitProfile g = profile(i);
        const Vec2 fwd{std::sin(heading), std::cos(heading)};
        const Vec2 right{fwd.z, -fwd.x};

        // Gait cycle: amplitude and cadence scale with speed so the foot
        // features discriminate gaits; a standing character has planted feet.
        const double cadence_hz = g.speed < 1e-9 ? 0.0 : 0.6 + 0.25 * g.speed;
        const double swing_amp = std::min(0.35, 0.22 * g.speed);
        const double lift_amp = std::min(0.08, 0.05 * g.speed);

        Pose& p = clip.frames[i];
        p.root_pos = {pos.x, 0.95 + 0.02 * std::min(1.0, g.speed) * std::sin(2.0 * phase), pos.z};
        p.root_orient = Quat::yaw(heading);

        const double lz = swing_amp * std::sin(phase);
        const double rz = swing_amp * std::sin(phase + M_PI);
        const double ly = lift_amp * std::max(0.0, std::sin(phase));
        const double ry = lift_amp * std::max(0.0, std::sin(phase + M_PI));
        p.lfoot_pos = {pos.x - 0.12 * right.x + lz * fwd.x, ly, pos.z - 0.12 * right.z + lz * fwd.z};
        p.rfoot_pos = {pos.x + 0.12 * right.x + rz * fwd.x, ry, pos.z + 0.12 * right.z + rz * fwd.z};

        pos += fwd * (g.speed * kFrameDt);
        heading += g.turn_rate * kFrameDt;
        phase += 2.0 * M_PI * cadence_hz * kFrameDt;
    }
    return clip;
}

}  // namespace

std::vector<MotionClip> generate_synthetic_locomotion(const GaitConfig& config, uint64_t seed) {
    config.validate();

    const int frames_per_clip = static_cast<int>(std::lround(config.clip_seconds * kFps));
    const long total_frames = static_cast<long>(config.minutes) * 60 * kFps;
    const int n_clips = static_cast<int>(total_frames / frames_per_clip);
    const int leftover = static_cast<int>(total_frames - static_cast<long>(n_clips) * frames_per_clip);

    // Constant-profile coverage clips spanning the gait space.
    struct Coverage {
        double speed, turn_deg;
        const char* tag;
    };
    const double t_lo = std::min(45.0, config.max_turn_rate_deg);
    const double t_mid = std::min(90.0, config.max_turn_rate_deg);
    const double t_hi = config.max_turn_rate_deg;
    const std::vector<Coverage> coverage = {
        {0.0, 0.0, "stand"},
        {config.walk_speed_min, 0.0, "walk"},
        {0.9, 0.0, "walk"},
        {1.4, 0.0, "walk"},
        {config.walk_speed_max, 0.0, "walk"},
        {config.run_speed_min, 0.0, "run"},
        {2.6, 0.0, "run"},
        {3.0, 0.0, "run"},
        {config.run_speed_max, 0.0, "run"},
        {0.9, t_lo, "turn"},
        {0.9, -t_lo, "turn"},
        {0.9, t_mid, "turn"},
        {0.9, -t_mid, "turn"},
        {1.8, t_mid, "turn"},
        {1.8, -t_mid, "turn"},
        {1.8, t_hi, "turn"},
        {1.8, -t_hi, "turn"},
        {2.6, t_lo, "turn"},
        {2.6, -t_lo, "turn"},
        {3.2, t_lo, "turn"},
        {3.2, -t_lo, "turn"},
    };

    Rng rng(seed);
    std::vector<MotionClip> clips;
    clips.reserve(n_clips);

    for (int c = 0; c < n_clips; ++c) {
        const int frames = frames_per_clip + (c == n_clips - 1 ? leftover : 0);
        if (c < static_cast<int>(coverage.size())) {
            const Coverage& cov = coverage[c];
            const GaitProfile g{cov.speed, deg_to_rad(cov.turn_deg)};
            clips.push_back(integrate_clip(c, cov.tag, frames, [&](int) { return g; }));
            continue;
        }

        // Wander clip: piecewise segments with 0.5 s linear ramps between them.
        struct Segment {
            int start;
            double speed, turn;
        };
        std::vector<Segment> segments;
        int at = 0;
        while (at < frames) {
            const double pick = rng.uniform();
            double speed;
            if (pick < 0.10) {
                speed = 0.0;
            } else if (pick < 0.60) {
                speed = rng.uniform(config.walk_speed_min, config.walk_speed_max);
            } else {
                speed = rng.uniform(config.run_speed_min, config.run_speed_max);
            }
            double turn = 0.0;
            if (rng.uniform() > 0.5) {
                turn = deg_to_rad(rng.uniform(-config.max_turn_rate_deg, config.max_turn_rate_deg));
            }
            segments.push_back({at, speed, turn});
            at += static_cast<int>(std::lround(rng.uniform(2.0, 4.0) * kFps));
        }

        const int ramp = kFps / 2;
        auto profile = [&](int i) {
            size_t s = segments.size() - 1;
            while (segments[s].start > i) --s;
            GaitProfile g{segments[s].speed, segments[s].turn};
            if (s > 0 && i - segments[s].start < ramp) {
                const double a = static_cast<double>(i - segments[s].start + 1) / ramp;
                g.speed = segments[s - 1].speed + a * (g.speed - segments[s - 1].speed);
                g.turn = segments[s - 1].turn + a * (g.turn - segments[s - 1].turn);
            }
            return g;
        };
        clips.push_back(integrate_clip(c, "wander", frames, profile));
    }
    return clips;
}

}  // namespace mmqrl
