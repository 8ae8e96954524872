#include "semiq/audio/stft.hpp"

#include <cmath>
#include <numbers>

#include "semiq/error.hpp"

namespace semiq::audio {

std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

void fft_radix2(std::vector<std::complex<double>>& a) {
    const std::size_t n = a.size();
    if (n == 0 || (n & (n - 1)) != 0) throw invalid_input_error("fft_radix2: size not a power of two");

    // bit-reversal permutation
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }

    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = -2.0 * std::numbers::pi / static_cast<double>(len);
        const std::complex<double> wlen(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            std::complex<double> w(1.0, 0.0);
            for (std::size_t j = 0; j < len / 2; ++j) {
                const std::complex<double> u = a[i + j];
                const std::complex<double> v = a[i + j + len / 2] * w;
                a[i + j] = u + v;
                a[i + j + len / 2] = u - v;
                w *= wlen;
            }
        }
    }
}

int window_samples(int sample_rate, double seconds) {
    return static_cast<int>(std::llround(seconds * sample_rate));
}

StftPower stft_power_frames(const AudioBuffer& buf, int win_samples, int hop_samples) {
    if (buf.sample_rate <= 0) throw invalid_input_error("stft: sample_rate must be > 0");
    if (win_samples <= 0 || hop_samples <= 0) throw invalid_parameter_error("stft: bad framing");
    if (buf.size() < static_cast<std::size_t>(win_samples)) {
        throw invalid_input_error("stft: buffer shorter than one window");
    }

    const std::size_t n_fft = next_pow2(static_cast<std::size_t>(win_samples));
    const std::size_t n_bins = n_fft / 2 + 1;
    const std::size_t n_frames = (buf.size() - win_samples) / hop_samples + 1;

    std::vector<double> hann(static_cast<std::size_t>(win_samples));
    for (int i = 0; i < win_samples; ++i) {
        hann[i] = 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * i / (win_samples - 1));
    }

    StftPower out;
    out.n_fft = static_cast<int>(n_fft);
    out.frames.resize(n_frames);

    std::vector<std::complex<double>> work(n_fft);
    for (std::size_t f = 0; f < n_frames; ++f) {
        const std::size_t start = f * hop_samples;
        for (std::size_t i = 0; i < n_fft; ++i) {
            const double x = i < static_cast<std::size_t>(win_samples)
                                 ? buf.samples[start + i] * hann[i]
                                 : 0.0;
            work[i] = {x, 0.0};
        }
        fft_radix2(work);
        auto& row = out.frames[f];
        row.resize(n_bins);
        for (std::size_t k = 0; k < n_bins; ++k) row[k] = std::norm(work[k]);
    }
    return out;
}

}  // namespace semiq::audio
