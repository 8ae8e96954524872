#include "semiq/audio/resample.hpp"

#include <cmath>
#include <numbers>

#include "semiq/error.hpp"

namespace semiq::audio {

namespace {

constexpr double kKaiserBeta = 8.0;
constexpr int kKernelTaps = 64;
constexpr double kRolloff = 0.945;

// Modified Bessel function of the first kind, order zero (series form).
double bessel_i0(double x) {
    double sum = 1.0, term = 1.0;
    const double half_sq = x * x / 4.0;
    for (int k = 1; k < 64; ++k) {
        term *= half_sq / (static_cast<double>(k) * k);
        sum += term;
        if (term < sum * 1e-16) break;
    }
    return sum;
}

double kaiser(double x) {  // x in [-1, 1]
    const double t = 1.0 - x * x;
    if (t <= 0.0) return 0.0;
    return bessel_i0(kKaiserBeta * std::sqrt(t)) / bessel_i0(kKaiserBeta);
}

double sinc(double x) {
    if (std::abs(x) < 1e-12) return 1.0;
    const double px = std::numbers::pi * x;
    return std::sin(px) / px;
}

}  // namespace

AudioBuffer resample(const AudioBuffer& buf, int target_rate) {
    if (target_rate <= 0) throw invalid_parameter_error("resample: target_rate must be > 0");
    if (buf.sample_rate <= 0) throw invalid_input_error("resample: source rate must be > 0");
    if (buf.empty()) throw invalid_input_error("resample: empty buffer");

    if (target_rate == buf.sample_rate) return buf;

    const double ratio = static_cast<double>(target_rate) / buf.sample_rate;
    const auto in_len = static_cast<long long>(buf.size());
    const auto out_len = std::llround(static_cast<double>(in_len) * ratio);

    // Kernel designed at the lower of the two rates so downsampling
    // band-limits before decimation. Support measured in input samples.
    const double scale = std::min(1.0, ratio);
    const double cutoff = 0.5 * scale * kRolloff;  // cycles per input sample
    const double half_support = (kKernelTaps / 2.0) / scale;

    AudioBuffer out;
    out.sample_rate = target_rate;
    out.samples.resize(static_cast<std::size_t>(out_len));

    for (long long m = 0; m < out_len; ++m) {
        const double t = static_cast<double>(m) / ratio;  // position in input samples
        const auto n_lo = static_cast<long long>(std::ceil(t - half_support));
        const auto n_hi = static_cast<long long>(std::floor(t + half_support));
        double acc = 0.0, wsum = 0.0;
        for (long long n = n_lo; n <= n_hi; ++n) {
            const double tau = static_cast<double>(n) - t;
            const double w = sinc(2.0 * cutoff * tau) * kaiser(tau / half_support);
            wsum += w;
            if (n >= 0 && n < in_len) acc += w * buf.samples[static_cast<std::size_t>(n)];
        }
        // Normalizing by the full kernel weight keeps DC gain exactly one.
        out.samples[static_cast<std::size_t>(m)] = wsum != 0.0 ? acc / wsum : 0.0;
    }
    return out;
}

}  // namespace semiq::audio
