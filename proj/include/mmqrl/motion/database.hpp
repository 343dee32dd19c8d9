#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mmqrl/motion/types.hpp"

namespace mmqrl {

// One feature row per frame of every clip, z-scored over the valid rows.
// A row for frame i of a clip is valid when i >= 1 (velocity lookback),
// i + 30 < length (trajectory lookahead) and i + 6 < length (playback
// headroom). Immutable after build; safe for concurrent reads.
struct FeatureDatabase {
    int64_t n_rows = 0;
    std::vector<float> rows_norm;  // n_rows x 27, (raw - mean) / std
    std::vector<float> rows_raw;   // n_rows x 27
    std::array<double, kFeatureDim> norm_mean{};
    std::array<double, kFeatureDim> norm_std{};  // > 0; constant columns clamped to 1
    std::vector<uint8_t> valid;
    std::vector<int64_t> valid_rows;               // ascending row indices
    std::vector<std::pair<int32_t, int32_t>> index_map;  // row -> (clip index, frame)

    std::span<const float> normalized_row(int64_t r) const {
        return {rows_norm.data() + r * kFeatureDim, kFeatureDim};
    }
    std::span<const float> raw_row(int64_t r) const {
        return {rows_raw.data() + r * kFeatureDim, kFeatureDim};
    }

    // (x - mean) / std, in the database's float arithmetic.
    void normalize(std::span<const double> raw, std::span<float> out) const;
};

FeatureDatabase build_feature_database(const std::vector<MotionClip>& clips);

// Clips plus their searchable features; the unit the environments consume.
struct MotionDatabase {
    std::vector<MotionClip> clips;
    FeatureDatabase features;
    std::vector<int64_t> clip_row_offset;  // clip index -> first row

    static MotionDatabase build(std::vector<MotionClip> clips);

    int64_t row_of(int32_t clip_index, int32_t frame) const {
        return clip_row_offset[clip_index] + frame;
    }
    uint32_t clip_id_of_row(int64_t row) const {
        return clips[index_of_row(row)].id;
    }
    int32_t index_of_row(int64_t row) const { return features.index_map[row].first; }

    void save(const std::string& path) const;
    static MotionDatabase load(const std::string& path);
};

}  // namespace mmqrl
