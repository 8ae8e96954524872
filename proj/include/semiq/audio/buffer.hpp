#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace semiq::audio {

/// Mono audio signal. Amplitudes are nominally in [-1, 1]; sample_rate in Hz.
struct AudioBuffer {
    std::vector<double> samples;
    int sample_rate = 0;

    std::size_t size() const { return samples.size(); }
    bool empty() const { return samples.empty(); }
    double duration_seconds() const {
        return sample_rate > 0 ? static_cast<double>(samples.size()) / sample_rate : 0.0;
    }
};

/// sqrt(mean(x^2)); rejects empty input.
double rms(const AudioBuffer& buf);

/// 20*log10(rms), floored at -200 dB so silence stays finite.
double power_db(const AudioBuffer& buf);

double peak_abs(const AudioBuffer& buf);

enum class LengthPolicy {
    random_pad_or_crop,  // intact signal at a seeded uniform offset / seeded crop start
    head,                // signal at offset 0 / crop from sample 0
};

/// Shape to exactly round(seconds * sample_rate) samples by zero-padding or
/// cropping. The padded signal is never split; it is placed whole at one
/// offset.
AudioBuffer fix_length(const AudioBuffer& buf, double seconds, LengthPolicy policy,
                       std::uint64_t seed = 0);

}  // namespace semiq::audio
