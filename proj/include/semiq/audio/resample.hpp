#pragma once

#include "semiq/audio/buffer.hpp"

namespace semiq::audio {

/// Band-limited sample-rate conversion: windowed-sinc interpolation with a
/// Kaiser window (beta 8, 64-tap kernel per output sample). Output length is
/// round(len * target_rate / source_rate). Equal rates return a copy.
AudioBuffer resample(const AudioBuffer& buf, int target_rate);

}  // namespace semiq::audio
