#include "mmqrl/motion/clip_io.hpp"

#include "mmqrl/util/binio.hpp"

namespace mmqrl {

namespace {
constexpr char kMagic[4] = {'M', 'M', 'C', '1'};
constexpr uint32_t kVersion = 1;
}  // namespace

void save_clips(const std::string& path, const std::vector<MotionClip>& clips) {
    BinWriter w(path);
    w.write_magic(kMagic);
    w.write<uint32_t>(kVersion);
    w.write<uint32_t>(static_cast<uint32_t>(clips.size()));
    for (const MotionClip& clip : clips) {
        w.write<uint32_t>(clip.id);
        w.write<uint32_t>(static_cast<uint32_t>(clip.frames.size()));
        w.write<float>(static_cast<float>(kFps));
        w.write_string(clip.source_tag);
        for (const Pose& p : clip.frames) {
            const float row[13] = {
                static_cast<float>(p.root_pos.x),    static_cast<float>(p.root_pos.y),
                static_cast<float>(p.root_pos.z),    static_cast<float>(p.root_orient.w),
                static_cast<float>(p.root_orient.x), static_cast<float>(p.root_orient.y),
                static_cast<float>(p.root_orient.z), static_cast<float>(p.lfoot_pos.x),
                static_cast<float>(p.lfoot_pos.y),   static_cast<float>(p.lfoot_pos.z),
                static_cast<float>(p.rfoot_pos.x),   static_cast<float>(p.rfoot_pos.y),
                static_cast<float>(p.rfoot_pos.z)};
            w.write_array(row, 13);
        }
    }
    w.finish();
}

std::vector<MotionClip> load_clips(const std::string& path) {
    BinReader r(path);
    r.expect_magic(kMagic, "clip");
    const auto version = r.read<uint32_t>();
    if (version != kVersion) throw std::runtime_error("unsupported clip file version");
    const auto count = r.read<uint32_t>();

    std::vector<MotionClip> clips(count);
    for (MotionClip& clip : clips) {
        clip.id = r.read<uint32_t>();
        const auto frames = r.read<uint32_t>();
        const auto fps = r.read<float>();
        if (fps != static_cast<float>(kFps))
            throw std::runtime_error("clip is not 30 Hz: " + path);
        clip.source_tag = r.read_string();
        if (frames < kMinClipFrames)
            throw std::runtime_error("clip shorter than " + std::to_string(kMinClipFrames) +
                                     " frames: " + path);
        clip.frames.resize(frames);
        for (Pose& p : clip.frames) {
            float row[13];
            r.read_array(row, 13);
            p.root_pos = {row[0], row[1], row[2]};
            p.root_orient = Quat{row[3], row[4], row[5], row[6]}.normalized();
            p.lfoot_pos = {row[7], row[8], row[9]};
            p.rfoot_pos = {row[10], row[11], row[12]};
        }
    }
    return clips;
}

}  // namespace mmqrl
