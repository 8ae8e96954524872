#pragma once

#include <vector>

#include "semiq/audio/buffer.hpp"

namespace semiq::audio {

/// HTK mel scale: m = 2595 * log10(1 + f / 700).
double mel_hz(double f_hz);

/// Inverse of mel_hz: f = 700 * (10^(m / 2595) - 1).
double hz_mel(double mel);

/// Log mel energies, row-major [n_frames x n_mels]. Values are
/// 10 * log10(band power) with the power floored at 1e-10, so silence sits at
/// exactly -100.
struct MelSpectrogram {
    int n_frames = 0;
    int n_mels = 0;
    double hop_seconds = 0.0;
    double win_seconds = 0.0;
    std::vector<double> values;

    double at(int frame, int band) const { return values[static_cast<std::size_t>(frame) * n_mels + band]; }
};

struct MelConfig {
    int n_mels = 64;
    double win_seconds = 0.032;
    double hop_seconds = 0.010;
};

/// Hann-windowed power STFT pushed through a triangular HTK filterbank
/// (unity-peak filters; overlapping ramps sum to one between the first and
/// last centers).
MelSpectrogram mel_spectrogram(const AudioBuffer& buf, const MelConfig& cfg = {});

/// Center frequencies (Hz) of the triangular filters, mel-uniform between 0
/// and sample_rate / 2.
std::vector<double> mel_band_centers_hz(int n_mels, int sample_rate);

/// Per-band weights over one-sided FFT bins, [n_mels x (n_fft/2 + 1)].
std::vector<std::vector<double>> mel_filterbank(int n_mels, int n_fft, int sample_rate);

constexpr double kLogPowerFloor = 1e-10;

}  // namespace semiq::audio
