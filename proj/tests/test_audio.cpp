#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "semiq/audio/buffer.hpp"
#include "semiq/audio/mel.hpp"
#include "semiq/audio/resample.hpp"
#include "semiq/audio/stft.hpp"
#include "semiq/audio/wav.hpp"
#include "semiq/error.hpp"
#include "semiq/rng.hpp"
#include "support/oracles.hpp"

using namespace semiq;
using namespace semiq::audio;

namespace {

AudioBuffer make_sine(double freq, int rate, double seconds, double amp = 0.5) {
    AudioBuffer buf;
    buf.sample_rate = rate;
    const auto n = static_cast<std::size_t>(std::llround(seconds * rate));
    buf.samples.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        buf.samples[i] = amp * std::sin(2.0 * std::numbers::pi * freq * i / rate);
    }
    return buf;
}

std::filesystem::path temp_wav(const char* name) {
    auto dir = std::filesystem::temp_directory_path() / "semiq_audio_tests";
    std::filesystem::create_directories(dir);
    return dir / name;
}

}  // namespace

TEST_CASE("rms and power_db") {
    AudioBuffer half;
    half.sample_rate = 8000;
    half.samples.assign(1000, 0.5);
    CHECK(rms(half) == doctest::Approx(0.5).epsilon(1e-12));

    // unit-amplitude sine -> rms 1/sqrt(2)
    auto sine = make_sine(100.0, 8000, 1.0, 1.0);
    CHECK(rms(sine) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-5));

    AudioBuffer zero;
    zero.sample_rate = 8000;
    zero.samples.assign(100, 0.0);
    CHECK(power_db(zero) == -200.0);

    AudioBuffer empty;
    empty.sample_rate = 8000;
    CHECK_THROWS_AS(rms(empty), invalid_input_error);
    CHECK_THROWS_AS(power_db(empty), invalid_input_error);
}

TEST_CASE("wav float32 round-trip is bit-exact") {
    auto buf = make_sine(1000.0, 44100, 0.25);
    // store at float precision so the file round-trip is exact
    for (auto& s : buf.samples) s = static_cast<double>(static_cast<float>(s));

    const auto path = temp_wav("roundtrip_f32.wav");
    write_wav(path, buf, WavBitDepth::float32);
    const auto back = read_wav(path);

    REQUIRE(back.size() == buf.size());
    CHECK(back.sample_rate == 44100);
    for (std::size_t i = 0; i < buf.size(); ++i) REQUIRE(back.samples[i] == buf.samples[i]);
}

TEST_CASE("wav 16-bit quantization bound") {
    auto buf = make_sine(440.0, 16000, 0.5, 0.9);
    const auto path = temp_wav("roundtrip_16.wav");
    write_wav(path, buf, WavBitDepth::pcm16);
    const auto back = read_wav(path);

    REQUIRE(back.size() == buf.size());
    const double bound = std::pow(2.0, -15) + 0.5 / 32768.0;
    double max_dev = 0.0;
    for (std::size_t i = 0; i < buf.size(); ++i) {
        max_dev = std::max(max_dev, std::abs(back.samples[i] - buf.samples[i]));
    }
    CHECK(max_dev <= bound);
}

TEST_CASE("wav 24-bit round-trip accuracy") {
    auto buf = make_sine(440.0, 16000, 0.1, 0.7);
    const auto path = temp_wav("roundtrip_24.wav");
    write_wav(path, buf, WavBitDepth::pcm24);
    const auto back = read_wav(path);
    double max_dev = 0.0;
    for (std::size_t i = 0; i < buf.size(); ++i) {
        max_dev = std::max(max_dev, std::abs(back.samples[i] - buf.samples[i]));
    }
    CHECK(max_dev <= std::pow(2.0, -23) + 0.5 / 8388608.0);
}

TEST_CASE("stereo averaging: x and -x cancel") {
    // hand-built stereo file: ch0 = x, ch1 = -x
    const auto path = temp_wav("stereo_cancel.wav");
    const int n = 64;
    std::vector<unsigned char> bytes;
    auto put32 = [&](std::uint32_t v) {
        for (int i = 0; i < 4; ++i) bytes.push_back(static_cast<unsigned char>((v >> (8 * i)) & 0xff));
    };
    auto put16 = [&](std::uint16_t v) {
        bytes.push_back(static_cast<unsigned char>(v & 0xff));
        bytes.push_back(static_cast<unsigned char>((v >> 8) & 0xff));
    };
    auto tag = [&](const char* t) { bytes.insert(bytes.end(), t, t + 4); };
    tag("RIFF");
    put32(36 + n * 4);
    tag("WAVE");
    tag("fmt ");
    put32(16);
    put16(1);
    put16(2);
    put32(8000);
    put32(8000 * 4);
    put16(4);
    put16(16);
    tag("data");
    put32(n * 4);
    for (int i = 0; i < n; ++i) {
        const auto v = static_cast<std::int16_t>(1000 + 13 * i);
        put16(static_cast<std::uint16_t>(v));
        put16(static_cast<std::uint16_t>(static_cast<std::int16_t>(-v)));
    }
    {
        std::FILE* f = std::fopen(path.string().c_str(), "wb");
        REQUIRE(f != nullptr);
        std::fwrite(bytes.data(), 1, bytes.size(), f);
        std::fclose(f);
    }

    const auto buf = read_wav(path);
    REQUIRE(buf.size() == static_cast<std::size_t>(n));
    for (double s : buf.samples) CHECK(s == 0.0);
}

TEST_CASE("wav error paths") {
    const auto path = temp_wav("bad.wav");
    {
        std::FILE* f = std::fopen(path.string().c_str(), "wb");
        std::fputs("definitely not a riff file", f);
        std::fclose(f);
    }
    CHECK_THROWS_AS(read_wav(path), format_error);
    CHECK_THROWS_AS(read_wav(temp_wav("missing_file.wav")), invalid_input_error);

    // unsupported: 8-bit PCM
    const auto upath = temp_wav("unsupported.wav");
    std::vector<unsigned char> bytes;
    auto put32 = [&](std::uint32_t v) {
        for (int i = 0; i < 4; ++i) bytes.push_back(static_cast<unsigned char>((v >> (8 * i)) & 0xff));
    };
    auto put16 = [&](std::uint16_t v) {
        bytes.push_back(static_cast<unsigned char>(v & 0xff));
        bytes.push_back(static_cast<unsigned char>((v >> 8) & 0xff));
    };
    auto tag = [&](const char* t) { bytes.insert(bytes.end(), t, t + 4); };
    tag("RIFF");
    put32(36 + 8);
    tag("WAVE");
    tag("fmt ");
    put32(16);
    put16(1);
    put16(1);
    put32(8000);
    put32(8000);
    put16(1);
    put16(8);
    tag("data");
    put32(8);
    for (int i = 0; i < 8; ++i) bytes.push_back(128);
    {
        std::FILE* f = std::fopen(upath.string().c_str(), "wb");
        std::fwrite(bytes.data(), 1, bytes.size(), f);
        std::fclose(f);
    }
    CHECK_THROWS_AS(read_wav(upath), unsupported_error);
}

TEST_CASE("resample identity at equal rates") {
    auto buf = make_sine(1000.0, 44100, 0.1);
    const auto out = resample(buf, 44100);
    REQUIRE(out.size() == buf.size());
    for (std::size_t i = 0; i < buf.size(); ++i) CHECK(out.samples[i] == buf.samples[i]);
}

TEST_CASE("resample preserves DC") {
    AudioBuffer buf;
    buf.sample_rate = 16000;
    buf.samples.assign(16000, 0.5);
    const auto out = resample(buf, 44100);
    CHECK(out.sample_rate == 44100);
    CHECK(out.size() == static_cast<std::size_t>(std::llround(16000 * 44100.0 / 16000.0)));
    // away from edges
    for (std::size_t i = 2000; i + 2000 < out.size(); ++i) {
        REQUIRE(std::abs(out.samples[i] - 0.5) < 1e-3);
    }
}

TEST_CASE("resample keeps a 1 kHz tone at 1 kHz") {
    auto buf = make_sine(1000.0, 16000, 0.3);
    const auto out = resample(buf, 44100);

    // oracle: dominant naive-DFT bin over a centered power-of-two slice
    const std::size_t n = 8192;
    const std::size_t start = (out.size() - n) / 2;
    std::vector<double> slice(out.samples.begin() + start, out.samples.begin() + start + n);
    const std::size_t bin = oracle::dominant_dft_bin(slice);
    const double bin_hz = 44100.0 / static_cast<double>(n);
    CHECK(std::abs(bin * bin_hz - 1000.0) <= bin_hz + 1e-9);
}

TEST_CASE("resample round-trip preserves tone frequency") {
    // property from the module contract: down then up keeps the peak within a bin
    for (double freq : {440.0, 2500.0, 6000.0}) {
        auto buf = make_sine(freq, 44100, 0.4);
        const auto down = resample(buf, 16000);
        const auto up = resample(down, 44100);
        const std::size_t n = 8192;
        const std::size_t start = (up.size() - n) / 2;
        std::vector<double> slice(up.samples.begin() + start, up.samples.begin() + start + n);
        const std::size_t bin = oracle::dominant_dft_bin(slice);
        const double bin_hz = 44100.0 / static_cast<double>(n);
        CHECK(std::abs(bin * bin_hz - freq) <= bin_hz + 1e-9);
    }
}

TEST_CASE("fix_length identity and head policy") {
    auto buf = make_sine(500.0, 8000, 7.0);
    const auto same = fix_length(buf, 7.0, LengthPolicy::head);
    REQUIRE(same.size() == buf.size());
    CHECK(same.samples == buf.samples);

    auto short_buf = make_sine(500.0, 8000, 3.0);
    const auto padded = fix_length(short_buf, 7.0, LengthPolicy::head);
    REQUIRE(padded.size() == static_cast<std::size_t>(7 * 8000));
    for (std::size_t i = 0; i < short_buf.size(); ++i) {
        REQUIRE(padded.samples[i] == short_buf.samples[i]);
    }
    for (std::size_t i = short_buf.size(); i < padded.size(); ++i) {
        REQUIRE(padded.samples[i] == 0.0);
    }
}

TEST_CASE("fix_length random policy is seed-deterministic") {
    auto buf = make_sine(500.0, 8000, 10.0);
    const auto a = fix_length(buf, 7.0, LengthPolicy::random_pad_or_crop, 1234);
    const auto b = fix_length(buf, 7.0, LengthPolicy::random_pad_or_crop, 1234);
    CHECK(a.samples == b.samples);

    // head policy is idempotent at the target length
    const auto once = fix_length(buf, 7.0, LengthPolicy::head);
    const auto twice = fix_length(once, 7.0, LengthPolicy::head);
    CHECK(once.samples == twice.samples);

    AudioBuffer empty;
    empty.sample_rate = 8000;
    CHECK_THROWS_AS(fix_length(empty, 7.0, LengthPolicy::head), invalid_input_error);
}

TEST_CASE("fix_length random pad keeps signal intact at one offset") {
    auto buf = make_sine(500.0, 8000, 2.0, 0.4);
    for (std::uint64_t seed : {1ULL, 2ULL, 3ULL, 99ULL}) {
        const auto padded = fix_length(buf, 5.0, LengthPolicy::random_pad_or_crop, seed);
        REQUIRE(padded.size() == static_cast<std::size_t>(5 * 8000));
        // locate first/last nonzero; the slice between must equal the input
        std::size_t first = padded.size(), last = 0;
        for (std::size_t i = 0; i < padded.size(); ++i) {
            if (padded.samples[i] != 0.0) {
                first = std::min(first, i);
                last = i;
            }
        }
        REQUIRE(first < padded.size());
        // sine starts at 0.0 which is a zero sample; widen the window
        const std::size_t offset = first > 0 ? first - 1 : 0;
        bool match = false;
        for (std::size_t cand = (first >= 2 ? first - 2 : 0); cand <= first && !match; ++cand) {
            if (cand + buf.size() > padded.size()) continue;
            match = std::equal(buf.samples.begin(), buf.samples.end(), padded.samples.begin() + cand);
        }
        CHECK(match);
        (void)offset;
        (void)last;
    }
}

TEST_CASE("mel scale formulas") {
    CHECK(mel_hz(0.0) == 0.0);
    CHECK(mel_hz(700.0) == doctest::Approx(2595.0 * std::log10(2.0)).epsilon(1e-12));
    CHECK(hz_mel(mel_hz(3500.0)) == doctest::Approx(3500.0).epsilon(1e-9));
    CHECK_THROWS_AS(mel_hz(-1.0), invalid_input_error);
    CHECK_THROWS_AS(hz_mel(-1.0), invalid_input_error);

    // strictly increasing + inverse round-trip over [0, 22050]
    double prev = -1.0;
    for (int f = 0; f <= 22050; f += 50) {
        const double m = mel_hz(f);
        REQUIRE(m > prev);
        prev = m;
        if (f > 0) REQUIRE(std::abs(hz_mel(m) - f) / f < 1e-9);
    }
}

TEST_CASE("mel spectrogram of silence sits at the floor") {
    AudioBuffer buf;
    buf.sample_rate = 44100;
    buf.samples.assign(44100, 0.0);
    const auto mel = mel_spectrogram(buf);
    CHECK(mel.n_mels == 64);
    const int win = window_samples(44100, 0.032);
    const int hop = window_samples(44100, 0.010);
    CHECK(mel.n_frames == static_cast<int>((buf.size() - win) / hop + 1));
    for (double v : mel.values) REQUIRE(v == doctest::Approx(10.0 * std::log10(1e-10)));
}

TEST_CASE("mel spectrogram tone lands in the nearest band") {
    const double freq = 1000.0;
    auto buf = make_sine(freq, 44100, 1.0);
    const auto mel = mel_spectrogram(buf);

    // oracle: band whose center frequency is nearest 1 kHz
    const auto centers = mel_band_centers_hz(64, 44100);
    int nearest = 0;
    for (int m = 1; m < 64; ++m) {
        if (std::abs(centers[m] - freq) < std::abs(centers[nearest] - freq)) nearest = m;
    }

    for (int f = 0; f < mel.n_frames; ++f) {
        int argmax = 0;
        for (int m = 1; m < 64; ++m) {
            if (mel.at(f, m) > mel.at(f, argmax)) argmax = m;
        }
        REQUIRE(argmax == nearest);
    }
}

TEST_CASE("mel band power never exceeds total frame power") {
    Rng rng(7);
    AudioBuffer buf;
    buf.sample_rate = 44100;
    buf.samples.resize(22050);
    for (auto& s : buf.samples) s = rng.uniform(-0.8, 0.8);

    const int win = window_samples(44100, 0.032);
    const int hop = window_samples(44100, 0.010);
    const auto stft = stft_power_frames(buf, win, hop);
    const auto mel = mel_spectrogram(buf);

    REQUIRE(static_cast<int>(stft.frames.size()) == mel.n_frames);
    for (int f = 0; f < mel.n_frames; ++f) {
        double mel_lin = 0.0;
        for (int m = 0; m < mel.n_mels; ++m) mel_lin += std::pow(10.0, mel.at(f, m) / 10.0);
        double total = 0.0;
        for (double p : stft.frames[f]) total += p;
        REQUIRE(mel_lin <= total * (1.0 + 1e-9) + 64 * 1e-10);
    }
}

TEST_CASE("mel spectrogram rejects too-short input") {
    AudioBuffer buf;
    buf.sample_rate = 44100;
    buf.samples.assign(100, 0.1);
    CHECK_THROWS_AS(mel_spectrogram(buf), invalid_input_error);
}

TEST_CASE("time-reversed tone bursts reverse the band-argmax pattern") {
    // one low burst then one high burst; reversal swaps the order
    AudioBuffer buf;
    buf.sample_rate = 44100;
    const int n = 44100;
    buf.samples.assign(n, 0.0);
    for (int i = 0; i < n / 2; ++i) {
        buf.samples[i] = 0.5 * std::sin(2.0 * std::numbers::pi * 500.0 * i / 44100.0);
    }
    for (int i = n / 2; i < n; ++i) {
        buf.samples[i] = 0.5 * std::sin(2.0 * std::numbers::pi * 4000.0 * i / 44100.0);
    }
    AudioBuffer rev = buf;
    std::reverse(rev.samples.begin(), rev.samples.end());

    const auto mel_fwd = mel_spectrogram(buf);
    const auto mel_rev = mel_spectrogram(rev);
    REQUIRE(mel_fwd.n_frames == mel_rev.n_frames);

    auto argmax_at = [](const MelSpectrogram& mel, int f) {
        int a = 0;
        for (int m = 1; m < mel.n_mels; ++m) {
            if (mel.at(f, m) > mel.at(f, a)) a = m;
        }
        return a;
    };
    // compare frames away from the burst boundary and signal edges
    int matches = 0, total = 0;
    for (int f = 5; f + 5 < mel_fwd.n_frames; ++f) {
        const int g = mel_fwd.n_frames - 1 - f;
        if (std::abs(f - mel_fwd.n_frames / 2) < 6 || std::abs(g - mel_fwd.n_frames / 2) < 6) continue;
        ++total;
        if (argmax_at(mel_fwd, f) == argmax_at(mel_rev, g)) ++matches;
    }
    CHECK(matches >= total * 9 / 10);
}
