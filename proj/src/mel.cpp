#include "semiq/audio/mel.hpp"

#include <algorithm>
#include <cmath>

#include "semiq/audio/stft.hpp"
#include "semiq/error.hpp"

namespace semiq::audio {

double mel_hz(double f_hz) {
    if (f_hz < 0.0) throw invalid_input_error("mel_hz: negative frequency");
    return 2595.0 * std::log10(1.0 + f_hz / 700.0);
}

double hz_mel(double mel) {
    if (mel < 0.0) throw invalid_input_error("hz_mel: negative mel value");
    return 700.0 * (std::pow(10.0, mel / 2595.0) - 1.0);
}

std::vector<double> mel_band_centers_hz(int n_mels, int sample_rate) {
    // n_mels + 2 edge points, mel-uniform on [0, nyquist]; centers are the
    // interior points.
    const double mel_max = mel_hz(sample_rate / 2.0);
    std::vector<double> centers(n_mels);
    for (int m = 1; m <= n_mels; ++m) {
        centers[m - 1] = hz_mel(mel_max * m / (n_mels + 1));
    }
    return centers;
}

std::vector<std::vector<double>> mel_filterbank(int n_mels, int n_fft, int sample_rate) {
    const double mel_max = mel_hz(sample_rate / 2.0);
    std::vector<double> edges(n_mels + 2);
    for (int m = 0; m < n_mels + 2; ++m) edges[m] = hz_mel(mel_max * m / (n_mels + 1));

    const int n_bins = n_fft / 2 + 1;
    const double bin_hz = static_cast<double>(sample_rate) / n_fft;

    std::vector<std::vector<double>> bank(n_mels, std::vector<double>(n_bins, 0.0));
    for (int m = 0; m < n_mels; ++m) {
        const double lo = edges[m], mid = edges[m + 1], hi = edges[m + 2];
        for (int k = 0; k < n_bins; ++k) {
            const double f = k * bin_hz;
            double w = 0.0;
            if (f > lo && f < mid) {
                w = (f - lo) / (mid - lo);
            } else if (f == mid) {
                w = 1.0;
            } else if (f > mid && f < hi) {
                w = (hi - f) / (hi - mid);
            }
            bank[m][k] = w;
        }
    }
    return bank;
}

MelSpectrogram mel_spectrogram(const AudioBuffer& buf, const MelConfig& cfg) {
    if (cfg.n_mels <= 0) throw invalid_parameter_error("mel_spectrogram: n_mels must be > 0");
    const int win = window_samples(buf.sample_rate, cfg.win_seconds);
    const int hop = window_samples(buf.sample_rate, cfg.hop_seconds);
    if (buf.size() < static_cast<std::size_t>(win)) {
        throw invalid_input_error("mel_spectrogram: buffer shorter than one window");
    }

    const StftPower stft = stft_power_frames(buf, win, hop);
    const auto bank = mel_filterbank(cfg.n_mels, stft.n_fft, buf.sample_rate);

    MelSpectrogram out;
    out.n_frames = static_cast<int>(stft.frames.size());
    out.n_mels = cfg.n_mels;
    out.hop_seconds = cfg.hop_seconds;
    out.win_seconds = cfg.win_seconds;
    out.values.resize(static_cast<std::size_t>(out.n_frames) * cfg.n_mels);

    for (int f = 0; f < out.n_frames; ++f) {
        const auto& spec = stft.frames[f];
        for (int m = 0; m < cfg.n_mels; ++m) {
            double acc = 0.0;
            const auto& w = bank[m];
            for (std::size_t k = 0; k < spec.size(); ++k) acc += w[k] * spec[k];
            out.values[static_cast<std::size_t>(f) * cfg.n_mels + m] =
                10.0 * std::log10(std::max(acc, kLogPowerFloor));
        }
    }
    return out;
}

}  // namespace semiq::audio
