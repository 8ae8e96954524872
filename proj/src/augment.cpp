#include "semiq/augment/augment.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "semiq/audio/mel.hpp"
#include "semiq/audio/wav.hpp"
#include "semiq/error.hpp"
#include "semiq/rng.hpp"
#include "semiq/util/subprocess.hpp"

namespace semiq::augment {

namespace {

constexpr double kMu = 255.0;

double compand(double x) {
    return std::copysign(std::log1p(kMu * std::abs(x)) / std::log1p(kMu), x);
}

double expand(double y) {
    return std::copysign(std::expm1(std::abs(y) * std::log1p(kMu)) / kMu, y);
}

void clamp_unit(std::vector<double>& samples) {
    for (double& s : samples) s = std::clamp(s, -1.0, 1.0);
}

// FIR low-pass design: 513-tap windowed sinc, Kaiser shaped for ~70 dB of
// stop-band rejection. The sinc cutoff sits half a transition width above
// the nominal cutoff so the nominal frequency stays in the pass band and the
// stop band is fully formed well before one octave up.
std::vector<double> design_lowpass_taps(double cutoff_hz, int sample_rate) {
    constexpr int kTaps = 513;
    constexpr double kAttenuationDb = 70.0;
    const double beta = 0.1102 * (kAttenuationDb - 8.7);

    const double nyquist = sample_rate / 2.0;
    const double transition_hz =
        (kAttenuationDb - 7.95) / (2.285 * 2.0 * std::numbers::pi * (kTaps - 1)) * sample_rate;
    double fc = cutoff_hz + 0.5 * transition_hz;
    fc = std::min(fc, nyquist * 0.995);
    const double fcn = fc / sample_rate;  // cycles per sample

    auto bessel_i0 = [](double x) {
        double sum = 1.0, term = 1.0;
        const double half_sq = x * x / 4.0;
        for (int k = 1; k < 64; ++k) {
            term *= half_sq / (static_cast<double>(k) * k);
            sum += term;
            if (term < sum * 1e-16) break;
        }
        return sum;
    };

    const int half = kTaps / 2;
    std::vector<double> taps(kTaps);
    double sum = 0.0;
    for (int i = 0; i < kTaps; ++i) {
        const double m = i - half;
        const double x = 2.0 * fcn * m;
        const double s = std::abs(x) < 1e-12 ? 1.0 : std::sin(std::numbers::pi * x) / (std::numbers::pi * x);
        const double r = m / half;
        const double w = bessel_i0(beta * std::sqrt(std::max(0.0, 1.0 - r * r))) / bessel_i0(beta);
        taps[i] = 2.0 * fcn * s * w;
        sum += taps[i];
    }
    for (double& t : taps) t /= sum;  // unity DC gain
    return taps;
}

}  // namespace

std::string AugmentationSpec::kind_name() const {
    switch (kind) {
        case AugmentationKind::mu_law: return "mu_law";
        case AugmentationKind::lowpass: return "lowpass";
        case AugmentationKind::external_codec: return "external_codec";
    }
    return "unknown";
}

std::string AugmentationSpec::describe() const {
    std::ostringstream s;
    s << kind_name();
    switch (kind) {
        case AugmentationKind::mu_law: s << " levels=" << levels; break;
        case AugmentationKind::lowpass: s << " cutoff_hz=" << cutoff_hz; break;
        case AugmentationKind::external_codec: s << " param=" << param; break;
    }
    return s.str();
}

audio::AudioBuffer mu_law_distort(const audio::AudioBuffer& buf, int levels) {
    if (levels < 2) throw invalid_parameter_error("mu_law_distort: levels must be >= 2");
    if (buf.empty()) throw invalid_input_error("mu_law_distort: empty buffer");

    const double step = 2.0 / levels;
    const long max_index = levels / 2;

    audio::AudioBuffer out;
    out.sample_rate = buf.sample_rate;
    out.samples.resize(buf.size());
    for (std::size_t i = 0; i < buf.size(); ++i) {
        const double y = compand(buf.samples[i]);
        const long k = std::clamp(std::lround(y / step), -max_index, max_index);
        out.samples[i] = expand(static_cast<double>(k) * step);
    }
    clamp_unit(out.samples);
    return out;
}

audio::AudioBuffer lowpass(const audio::AudioBuffer& buf, double cutoff_hz) {
    if (buf.empty()) throw invalid_input_error("lowpass: empty buffer");
    if (cutoff_hz <= 0.0 || cutoff_hz >= buf.sample_rate / 2.0) {
        throw invalid_parameter_error("lowpass: cutoff out of (0, nyquist)");
    }

    const auto taps = design_lowpass_taps(cutoff_hz, buf.sample_rate);
    const int half = static_cast<int>(taps.size()) / 2;
    const auto n = static_cast<long long>(buf.size());

    audio::AudioBuffer out;
    out.sample_rate = buf.sample_rate;
    out.samples.assign(buf.size(), 0.0);
    for (long long i = 0; i < n; ++i) {
        double acc = 0.0;
        for (std::size_t t = 0; t < taps.size(); ++t) {
            const long long j = i + half - static_cast<long long>(t);
            if (j >= 0 && j < n) acc += taps[t] * buf.samples[static_cast<std::size_t>(j)];
        }
        out.samples[static_cast<std::size_t>(i)] = acc;
    }
    clamp_unit(out.samples);
    return out;
}

double sample_lowpass_cutoff(std::uint64_t seed) {
    Rng rng(seed);
    const double lo = audio::mel_hz(kLowpassMinHz);
    const double hi = audio::mel_hz(kLowpassMaxHz);
    return audio::hz_mel(rng.uniform(lo, hi));
}

audio::AudioBuffer external_codec(const audio::AudioBuffer& buf,
                                  const std::string& command_template, const std::string& param) {
    if (buf.empty()) throw invalid_input_error("external_codec: empty buffer");

    util::ScopedTempDir tmp("semiq-codec");
    const auto in_path = tmp.path() / "in.wav";
    const auto out_path = tmp.path() / "out.wav";
    audio::write_wav(in_path, buf, audio::WavBitDepth::float32);

    const std::string cmd = util::substitute_template(
        command_template,
        {{"in", in_path.string()}, {"out", out_path.string()}, {"param", param}});
    const auto result = util::run_command(cmd, tmp.path());
    if (result.exit_code != 0) {
        throw external_tool_error("external_codec: command failed (exit " +
                                      std::to_string(result.exit_code) + "): " + cmd,
                                  result.out + result.err);
    }
    if (!std::filesystem::exists(out_path)) {
        throw external_tool_error("external_codec: tool produced no output: " + cmd,
                                  result.out + result.err);
    }

    auto degraded = audio::read_wav(out_path);
    if (degraded.sample_rate != buf.sample_rate) {
        throw adapter_error("external_codec: tool changed the sample rate");
    }

    const double len_ratio =
        static_cast<double>(degraded.size()) / static_cast<double>(buf.size());
    if (len_ratio < 0.9 || len_ratio > 1.1) {
        throw adapter_error("external_codec: output length off by more than 10%");
    }

    degraded.samples.resize(buf.size(), 0.0);  // trim or zero-pad tail
    clamp_unit(degraded.samples);
    return degraded;
}

audio::AudioBuffer apply(const AugmentationSpec& spec, const audio::AudioBuffer& buf) {
    switch (spec.kind) {
        case AugmentationKind::mu_law: return mu_law_distort(buf, spec.levels);
        case AugmentationKind::lowpass: return lowpass(buf, spec.cutoff_hz);
        case AugmentationKind::external_codec:
            return external_codec(buf, spec.command_template, spec.param);
    }
    throw invalid_parameter_error("apply: unknown augmentation kind");
}

}  // namespace semiq::augment
