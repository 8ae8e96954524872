#pragma once

#include <filesystem>

#include "semiq/audio/buffer.hpp"

namespace semiq::audio {

enum class WavBitDepth {
    pcm16,
    pcm24,
    float32,
};

/// Reads a RIFF/WAVE file (PCM 16/24-bit or IEEE float32, 1-2 channels).
/// Multichannel input is downmixed to mono by channel averaging.
AudioBuffer read_wav(const std::filesystem::path& path);

/// Writes a mono WAV file. float32 round-trips bit-exactly for samples
/// already representable in single precision; integer depths clamp to
/// [-1, 1] and round to the nearest step.
void write_wav(const std::filesystem::path& path, const AudioBuffer& buf, WavBitDepth depth);

}  // namespace semiq::audio
