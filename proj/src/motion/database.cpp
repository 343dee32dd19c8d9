#include "mmqrl/motion/database.hpp"

#include <cmath>
#include <stdexcept>

#include "mmqrl/motion/features.hpp"
#include "mmqrl/util/binio.hpp"

namespace mmqrl {

void FeatureDatabase::normalize(std::span<const double> raw, std::span<float> out) const {
    for (int d = 0; d < kFeatureDim; ++d) {
        out[d] = static_cast<float>((raw[d] - norm_mean[d]) / norm_std[d]);
    }
}

FeatureDatabase build_feature_database(const std::vector<MotionClip>& clips) {
    if (clips.empty()) throw std::invalid_argument("no clips");
    for (const MotionClip& c : clips) {
        if (c.length() < kMinClipFrames)
            throw std::invalid_argument("clip " + std::to_string(c.id) + " shorter than " +
                                        std::to_string(kMinClipFrames) + " frames");
    }

    FeatureDatabase db;
    for (const MotionClip& c : clips) db.n_rows += c.length();
    db.rows_raw.assign(db.n_rows * kFeatureDim, 0.0f);
    db.rows_norm.assign(db.n_rows * kFeatureDim, 0.0f);
    db.valid.assign(db.n_rows, 0);
    db.index_map.resize(db.n_rows);

    std::vector<std::array<double, kFeatureDim>> raw(db.n_rows);
    int64_t row = 0;
    for (int32_t ci = 0; ci < static_cast<int32_t>(clips.size()); ++ci) {
        const MotionClip& clip = clips[ci];
        for (int32_t i = 0; i < clip.length(); ++i, ++row) {
            db.index_map[row] = {ci, i};
            std::array<double, kFeatureDim> r{};
            if (i >= 1) {
                const auto pose = extract_pose_feature(clip, i).flatten();
                std::copy(pose.begin(), pose.end(), r.begin());
                if (i + kTrajectoryOffsets[2] < clip.length()) {
                    const auto traj = extract_trajectory_feature(clip, i).flatten();
                    std::copy(traj.begin(), traj.end(), r.begin() + kPoseFeatureDim);
                    if (i + kPlaybackFrames < clip.length()) {
                        db.valid[row] = 1;
                        db.valid_rows.push_back(row);
                    }
                }
            }
            raw[row] = r;
            for (int d = 0; d < kFeatureDim; ++d)
                db.rows_raw[row * kFeatureDim + d] = static_cast<float>(r[d]);
        }
    }
    if (db.valid_rows.empty()) throw std::invalid_argument("no valid rows");

    // z-score statistics over valid rows; sample std, constant columns clamped.
    const double n = static_cast<double>(db.valid_rows.size());
    for (int d = 0; d < kFeatureDim; ++d) {
        double sum = 0.0;
        for (int64_t r : db.valid_rows) sum += raw[r][d];
        const double mean = sum / n;
        double ss = 0.0;
        for (int64_t r : db.valid_rows) {
            const double dev = raw[r][d] - mean;
            ss += dev * dev;
        }
        const double var = n > 1 ? ss / (n - 1) : 0.0;
        const double sd = std::sqrt(var);
        db.norm_mean[d] = mean;
        db.norm_std[d] = sd > 1e-8 ? sd : 1.0;
    }

    for (int64_t r = 0; r < db.n_rows; ++r) {
        db.normalize(raw[r], {db.rows_norm.data() + r * kFeatureDim, kFeatureDim});
    }
    return db;
}

MotionDatabase MotionDatabase::build(std::vector<MotionClip> clips) {
    MotionDatabase db;
    db.features = build_feature_database(clips);
    db.clips = std::move(clips);
    db.clip_row_offset.resize(db.clips.size());
    int64_t off = 0;
    for (size_t i = 0; i < db.clips.size(); ++i) {
        db.clip_row_offset[i] = off;
        off += db.clips[i].length();
    }
    return db;
}

namespace {
constexpr char kMagic[4] = {'M', 'M', 'D', 'B'};
constexpr uint32_t kVersion = 1;
}  // namespace

void MotionDatabase::save(const std::string& path) const {
    BinWriter w(path);
    w.write_magic(kMagic);
    w.write<uint32_t>(kVersion);
    w.write<uint32_t>(static_cast<uint32_t>(clips.size()));
    w.write<int64_t>(features.n_rows);
    w.write_array(features.norm_mean.data(), kFeatureDim);
    w.write_array(features.norm_std.data(), kFeatureDim);
    w.write_array(features.valid.data(), features.valid.size());
    for (const auto& [ci, frame] : features.index_map) {
        w.write<int32_t>(ci);
        w.write<int32_t>(frame);
    }
    w.write_array(features.rows_norm.data(), features.rows_norm.size());
    w.write_array(features.rows_raw.data(), features.rows_raw.size());
    for (const MotionClip& clip : clips) {
        w.write<uint32_t>(clip.id);
        w.write<uint32_t>(static_cast<uint32_t>(clip.frames.size()));
        w.write_string(clip.source_tag);
        for (const Pose& p : clip.frames) {
            const double row[13] = {p.root_pos.x,    p.root_pos.y,    p.root_pos.z,
                                    p.root_orient.w, p.root_orient.x, p.root_orient.y,
                                    p.root_orient.z, p.lfoot_pos.x,   p.lfoot_pos.y,
                                    p.lfoot_pos.z,   p.rfoot_pos.x,   p.rfoot_pos.y,
                                    p.rfoot_pos.z};
            w.write_array(row, 13);
        }
    }
    w.finish();
}

MotionDatabase MotionDatabase::load(const std::string& path) {
    BinReader r(path);
    r.expect_magic(kMagic, "database");
    if (r.read<uint32_t>() != kVersion) throw std::runtime_error("unsupported database version");
    const auto n_clips = r.read<uint32_t>();

    MotionDatabase db;
    FeatureDatabase& f = db.features;
    f.n_rows = r.read<int64_t>();
    r.read_array(f.norm_mean.data(), kFeatureDim);
    r.read_array(f.norm_std.data(), kFeatureDim);
    f.valid.resize(f.n_rows);
    r.read_array(f.valid.data(), f.valid.size());
    f.index_map.resize(f.n_rows);
    for (auto& [ci, frame] : f.index_map) {
        ci = r.read<int32_t>();
        frame = r.read<int32_t>();
    }
    f.rows_norm.resize(f.n_rows * kFeatureDim);
    r.read_array(f.rows_norm.data(), f.rows_norm.size());
    f.rows_raw.resize(f.n_rows * kFeatureDim);
    r.read_array(f.rows_raw.data(), f.rows_raw.size());
    for (int64_t i = 0; i < f.n_rows; ++i) {
        if (f.valid[i]) f.valid_rows.push_back(i);
    }

    db.clips.resize(n_clips);
    db.clip_row_offset.resize(n_clips);
    int64_t off = 0;
    for (uint32_t i = 0; i < n_clips; ++i) {
        MotionClip& clip = db.clips[i];
        clip.id = r.read<uint32_t>();
        const auto frames = r.read<uint32_t>();
        clip.source_tag = r.read_string();
        clip.frames.resize(frames);
        for (Pose& p : clip.frames) {
            double row[13];
            r.read_array(row, 13);
            p.root_pos = {row[0], row[1], row[2]};
            p.root_orient = {row[3], row[4], row[5], row[6]};
            p.lfoot_pos = {row[7], row[8], row[9]};
            p.rfoot_pos = {row[10], row[11], row[12]};
        }
        db.clip_row_offset[i] = off;
        off += clip.length();
    }
    return db;
}

}  // namespace mmqrl
