#include "semiq/audio/buffer.hpp"

#include <algorithm>
#include <cmath>

#include "semiq/error.hpp"
#include "semiq/rng.hpp"

namespace semiq::audio {

double rms(const AudioBuffer& buf) {
    if (buf.empty()) throw invalid_input_error("rms: empty buffer");
    double acc = 0.0;
    for (double x : buf.samples) acc += x * x;
    return std::sqrt(acc / static_cast<double>(buf.size()));
}

double power_db(const AudioBuffer& buf) {
    const double r = rms(buf);
    if (r <= 0.0) return -200.0;
    return std::max(-200.0, 20.0 * std::log10(r));
}

double peak_abs(const AudioBuffer& buf) {
    double p = 0.0;
    for (double x : buf.samples) p = std::max(p, std::abs(x));
    return p;
}

AudioBuffer fix_length(const AudioBuffer& buf, double seconds, LengthPolicy policy,
                       std::uint64_t seed) {
    if (buf.empty()) throw invalid_input_error("fix_length: empty buffer");
    if (seconds <= 0.0) throw invalid_parameter_error("fix_length: seconds must be > 0");
    if (buf.sample_rate <= 0) throw invalid_input_error("fix_length: sample_rate must be > 0");

    const auto target = static_cast<std::size_t>(std::llround(seconds * buf.sample_rate));
    const std::size_t len = buf.size();

    AudioBuffer out;
    out.sample_rate = buf.sample_rate;

    if (len == target) {
        out.samples = buf.samples;
        return out;
    }

    Rng rng(seed);
    if (len < target) {
        const std::size_t slack = target - len;
        const std::size_t offset =
            policy == LengthPolicy::head ? 0 : static_cast<std::size_t>(rng.uniform_int(slack + 1));
        out.samples.assign(target, 0.0);
        std::copy(buf.samples.begin(), buf.samples.end(), out.samples.begin() + offset);
    } else {
        const std::size_t slack = len - target;
        const std::size_t start =
            policy == LengthPolicy::head ? 0 : static_cast<std::size_t>(rng.uniform_int(slack + 1));
        out.samples.assign(buf.samples.begin() + start, buf.samples.begin() + start + target);
    }
    return out;
}

}  // namespace semiq::audio
