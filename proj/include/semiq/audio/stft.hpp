#pragma once

#include <complex>
#include <vector>

#include "semiq/audio/buffer.hpp"

namespace semiq::audio {

/// In-place iterative radix-2 FFT; size must be a power of two.
void fft_radix2(std::vector<std::complex<double>>& a);

std::size_t next_pow2(std::size_t n);

/// One-sided power spectra of Hann-windowed frames. Frame count is
/// floor((len - win) / hop) + 1; each row has n_fft/2 + 1 bins where n_fft is
/// the next power of two >= win_samples.
struct StftPower {
    std::vector<std::vector<double>> frames;
    int n_fft = 0;
};

StftPower stft_power_frames(const AudioBuffer& buf, int win_samples, int hop_samples);

int window_samples(int sample_rate, double seconds);

}  // namespace semiq::audio
