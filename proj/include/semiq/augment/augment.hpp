#pragma once

#include <cstdint>
#include <string>

#include "semiq/audio/buffer.hpp"

namespace semiq::augment {

enum class AugmentationKind {
    mu_law,
    lowpass,
    external_codec,
};

/// One sampled distortion instance. Exactly the fields for its kind are
/// meaningful: mu_law -> levels, lowpass -> cutoff_hz,
/// external_codec -> command_template + param.
struct AugmentationSpec {
    AugmentationKind kind = AugmentationKind::mu_law;
    int levels = 0;
    double cutoff_hz = 0.0;
    std::string command_template;
    std::string param;
    std::uint64_t seed = 0;

    std::string kind_name() const;
    std::string describe() const;
};

/// mu-law companding (mu = 255) followed by a symmetric mid-tread uniform
/// quantizer with step 2/levels in the companded domain, then expansion.
/// Zero is always a reconstruction level; companded error is at most half a
/// step.
audio::AudioBuffer mu_law_distort(const audio::AudioBuffer& buf, int levels);

/// Linear-phase FIR low-pass (513-tap Kaiser windowed sinc). The stop band
/// reaches >= 60 dB attenuation one octave above the cutoff for the
/// supported [1000, 6000] Hz range at typical rates.
audio::AudioBuffer lowpass(const audio::AudioBuffer& buf, double cutoff_hz);

/// Cutoff draw for the lowpass augmentation: uniform in mel between
/// mel(1000) and mel(6000), mapped back to Hz.
double sample_lowpass_cutoff(std::uint64_t seed);

/// Runs `command_template` with {in}, {out}, {param} placeholders over temp
/// WAV files, then reads the degraded result back, trimmed/padded to the
/// input length.
audio::AudioBuffer external_codec(const audio::AudioBuffer& buf, const std::string& command_template,
                                  const std::string& param);

/// Dispatch on spec.kind.
audio::AudioBuffer apply(const AugmentationSpec& spec, const audio::AudioBuffer& buf);

constexpr double kLowpassMinHz = 1000.0;
constexpr double kLowpassMaxHz = 6000.0;

}  // namespace semiq::augment
