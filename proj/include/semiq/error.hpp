#pragma once

#include <stdexcept>
#include <string>

namespace semiq {

// Base class for all toolkit errors.
class error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Malformed container/file structure (e.g. broken RIFF header).
class format_error : public error {
  public:
    using error::error;
};

// Structurally valid input the toolkit does not handle (e.g. ADPCM WAV).
class unsupported_error : public error {
  public:
    using error::error;
};

// Input violates an operation precondition (empty buffer, short signal, ...).
class invalid_input_error : public error {
  public:
    using error::error;
};

// Parameter outside its documented domain (levels < 2, bad calibration, ...).
class invalid_parameter_error : public error {
  public:
    using error::error;
};

// Input is well-formed but degenerate for the operation (silent signal,
// constant vector for a correlation).
class degenerate_input_error : public error {
  public:
    using error::error;
};

// A requested plan cannot be satisfied (e.g. a split with < 2 classes).
class infeasible_error : public error {
  public:
    using error::error;
};

// Paired inputs whose lengths/rates do not line up.
class alignment_error : public error {
  public:
    using error::error;
};

// Text that does not contain a recoverable value.
class parse_error : public error {
  public:
    using error::error;
};

// Value outside a closed numeric range (MOS, MUSHRA, ...).
class range_error : public error {
  public:
    using error::error;
};

// Word outside the model vocabulary.
class tokenize_error : public error {
  public:
    using error::error;
};

// Tensor dimension mismatch in the toy model.
class shape_error : public error {
  public:
    using error::error;
};

// Non-finite loss/gradients during training.
class divergence_error : public error {
  public:
    using error::error;
};

// Evaluation join produced no usable pairs.
class no_data_error : public error {
  public:
    using error::error;
};

// Bad or unknown configuration key/value.
class config_error : public error {
  public:
    using error::error;
};

// Subprocess adapter failure; carries whatever the tool printed.
class external_tool_error : public error {
  public:
    external_tool_error(const std::string& msg, std::string diag = {})
        : error(msg), diagnostics(std::move(diag)) {}

    std::string diagnostics;
};

// Adapter-level contract violation (e.g. decoded length far off).
class adapter_error : public error {
  public:
    using error::error;
};

}  // namespace semiq
