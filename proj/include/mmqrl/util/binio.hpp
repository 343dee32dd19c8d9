#pragma once

#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace mmqrl {

// Little-endian binary file helpers. All on-disk formats in this project are
// little-endian; these helpers assume a little-endian host.

class BinWriter {
public:
    explicit BinWriter(const std::string& path) : out_(path, std::ios::binary) {
        if (!out_) throw std::runtime_error("cannot open for write: " + path);
        path_ = path;
    }

    template <typename T>
    void write(const T& v) {
        static_assert(std::is_trivially_copyable_v<T>);
        out_.write(reinterpret_cast<const char*>(&v), sizeof(T));
    }

    template <typename T>
    void write_array(const T* data, size_t count) {
        static_assert(std::is_trivially_copyable_v<T>);
        out_.write(reinterpret_cast<const char*>(data), count * sizeof(T));
    }

    void write_magic(const char magic[4]) { out_.write(magic, 4); }

    void write_string(const std::string& s) {
        write<uint16_t>(static_cast<uint16_t>(s.size()));
        out_.write(s.data(), static_cast<std::streamsize>(s.size()));
    }

    void finish() {
        out_.flush();
        if (!out_) throw std::runtime_error("write failed: " + path_);
    }

private:
    std::ofstream out_;
    std::string path_;
};

class BinReader {
public:
    explicit BinReader(const std::string& path) : in_(path, std::ios::binary) {
        if (!in_) throw std::runtime_error("cannot open for read: " + path);
        path_ = path;
    }

    template <typename T>
    T read() {
        T v;
        in_.read(reinterpret_cast<char*>(&v), sizeof(T));
        check();
        return v;
    }

    template <typename T>
    void read_array(T* data, size_t count) {
        in_.read(reinterpret_cast<char*>(data), static_cast<std::streamsize>(count * sizeof(T)));
        check();
    }

    void expect_magic(const char magic[4], const std::string& what) {
        char got[4];
        in_.read(got, 4);
        check();
        if (std::memcmp(got, magic, 4) != 0)
            throw std::runtime_error(path_ + " is not a " + what + " file");
    }

    std::string read_string() {
        const auto len = read<uint16_t>();
        std::string s(len, '\0');
        in_.read(s.data(), len);
        check();
        return s;
    }

private:
    void check() {
        if (!in_) throw std::runtime_error("truncated or unreadable file: " + path_);
    }

    std::ifstream in_;
    std::string path_;
};

}  // namespace mmqrl
