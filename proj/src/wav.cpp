#include "semiq/audio/wav.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <vector>

#include "semiq/error.hpp"

namespace semiq::audio {

namespace {

constexpr std::uint16_t kFormatPcm = 1;
constexpr std::uint16_t kFormatFloat = 3;

std::uint32_t read_u32(const unsigned char* p) {
    return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
           (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

std::uint16_t read_u16(const unsigned char* p) {
    return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

void put_u32(std::vector<unsigned char>& v, std::uint32_t x) {
    v.push_back(static_cast<unsigned char>(x & 0xff));
    v.push_back(static_cast<unsigned char>((x >> 8) & 0xff));
    v.push_back(static_cast<unsigned char>((x >> 16) & 0xff));
    v.push_back(static_cast<unsigned char>((x >> 24) & 0xff));
}

void put_u16(std::vector<unsigned char>& v, std::uint16_t x) {
    v.push_back(static_cast<unsigned char>(x & 0xff));
    v.push_back(static_cast<unsigned char>((x >> 8) & 0xff));
}

void put_tag(std::vector<unsigned char>& v, const char* tag) {
    v.insert(v.end(), tag, tag + 4);
}

double decode_sample(const unsigned char* p, std::uint16_t format, std::uint16_t bits) {
    if (format == kFormatFloat) {
        float f;
        std::memcpy(&f, p, 4);
        return static_cast<double>(f);
    }
    if (bits == 16) {
        const auto s = static_cast<std::int16_t>(p[0] | (p[1] << 8));
        return s / 32768.0;
    }
    // 24-bit signed little-endian
    std::int32_t s = p[0] | (p[1] << 8) | (p[2] << 16);
    if (s & 0x800000) s |= ~0xffffff;
    return s / 8388608.0;
}

}  // namespace

AudioBuffer read_wav(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw invalid_input_error("read_wav: cannot open " + path.string());

    std::vector<unsigned char> data((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    if (data.size() < 12 || std::memcmp(data.data(), "RIFF", 4) != 0 ||
        std::memcmp(data.data() + 8, "WAVE", 4) != 0) {
        throw format_error("read_wav: not a RIFF/WAVE file: " + path.string());
    }

    std::uint16_t format = 0, channels = 0, bits = 0;
    std::uint32_t rate = 0;
    const unsigned char* pcm = nullptr;
    std::size_t pcm_size = 0;

    std::size_t off = 12;
    while (off + 8 <= data.size()) {
        const unsigned char* hdr = data.data() + off;
        const std::uint32_t chunk_size = read_u32(hdr + 4);
        const std::size_t body = off + 8;
        if (body + chunk_size > data.size()) throw format_error("read_wav: truncated chunk");

        if (std::memcmp(hdr, "fmt ", 4) == 0) {
            if (chunk_size < 16) throw format_error("read_wav: short fmt chunk");
            format = read_u16(data.data() + body);
            channels = read_u16(data.data() + body + 2);
            rate = read_u32(data.data() + body + 4);
            bits = read_u16(data.data() + body + 14);
        } else if (std::memcmp(hdr, "data", 4) == 0) {
            pcm = data.data() + body;
            pcm_size = chunk_size;
        }
        off = body + chunk_size + (chunk_size & 1);  // chunks are word-aligned
    }

    if (format == 0 || pcm == nullptr) throw format_error("read_wav: missing fmt or data chunk");
    if (rate == 0) throw format_error("read_wav: zero sample rate");
    if (channels < 1 || channels > 2) {
        throw unsupported_error("read_wav: unsupported channel count " + std::to_string(channels));
    }

    const bool ok = (format == kFormatPcm && (bits == 16 || bits == 24)) ||
                    (format == kFormatFloat && bits == 32);
    if (!ok) {
        throw unsupported_error("read_wav: unsupported encoding (format=" + std::to_string(format) +
                                ", bits=" + std::to_string(bits) + ")");
    }

    const std::size_t bytes_per_sample = bits / 8;
    const std::size_t frame_bytes = bytes_per_sample * channels;
    const std::size_t n_frames = pcm_size / frame_bytes;

    AudioBuffer buf;
    buf.sample_rate = static_cast<int>(rate);
    buf.samples.resize(n_frames);
    for (std::size_t i = 0; i < n_frames; ++i) {
        double acc = 0.0;
        for (std::uint16_t c = 0; c < channels; ++c) {
            acc += decode_sample(pcm + i * frame_bytes + c * bytes_per_sample, format, bits);
        }
        const double v = acc / channels;
        if (!std::isfinite(v)) throw format_error("read_wav: non-finite sample in " + path.string());
        buf.samples[i] = v;
    }
    return buf;
}

void write_wav(const std::filesystem::path& path, const AudioBuffer& buf, WavBitDepth depth) {
    if (buf.sample_rate <= 0) throw invalid_input_error("write_wav: sample_rate must be > 0");
    if (path.has_parent_path() && !std::filesystem::exists(path.parent_path())) {
        throw invalid_input_error("write_wav: parent directory missing: " +
                                  path.parent_path().string());
    }

    const std::uint16_t bits = depth == WavBitDepth::pcm16 ? 16
                               : depth == WavBitDepth::pcm24 ? 24
                                                             : 32;
    const std::uint16_t format = depth == WavBitDepth::float32 ? kFormatFloat : kFormatPcm;
    const std::uint32_t bytes_per_sample = bits / 8;
    const std::uint32_t data_size = static_cast<std::uint32_t>(buf.size() * bytes_per_sample);

    std::vector<unsigned char> out;
    out.reserve(44 + data_size);
    put_tag(out, "RIFF");
    put_u32(out, 36 + data_size);
    put_tag(out, "WAVE");
    put_tag(out, "fmt ");
    put_u32(out, 16);
    put_u16(out, format);
    put_u16(out, 1);  // mono
    put_u32(out, static_cast<std::uint32_t>(buf.sample_rate));
    put_u32(out, static_cast<std::uint32_t>(buf.sample_rate) * bytes_per_sample);
    put_u16(out, static_cast<std::uint16_t>(bytes_per_sample));
    put_u16(out, bits);
    put_tag(out, "data");
    put_u32(out, data_size);

    for (double x : buf.samples) {
        if (depth == WavBitDepth::float32) {
            const float f = static_cast<float>(x);
            unsigned char b[4];
            std::memcpy(b, &f, 4);
            out.insert(out.end(), b, b + 4);
        } else {
            const double clamped = std::clamp(x, -1.0, 1.0);
            if (depth == WavBitDepth::pcm16) {
                const auto s = static_cast<std::int16_t>(
                    std::clamp<long>(std::lround(clamped * 32767.0), -32768, 32767));
                put_u16(out, static_cast<std::uint16_t>(s));
            } else {
                const auto s = static_cast<std::int32_t>(
                    std::clamp<long>(std::lround(clamped * 8388607.0), -8388608, 8388607));
                out.push_back(static_cast<unsigned char>(s & 0xff));
                out.push_back(static_cast<unsigned char>((s >> 8) & 0xff));
                out.push_back(static_cast<unsigned char>((s >> 16) & 0xff));
            }
        }
    }

    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw invalid_input_error("write_wav: cannot open " + path.string());
    f.write(reinterpret_cast<const char*>(out.data()), static_cast<std::streamsize>(out.size()));
    if (!f) throw invalid_input_error("write_wav: write failed: " + path.string());
}

}  // namespace semiq::audio
