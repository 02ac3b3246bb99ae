#pragma once

#include <stdexcept>
#include <string>

namespace mibids {

enum class Errc {
  MissingColumn,
  UnknownClass,
  NonNumeric,
  NegativeCounter,
  EmptyDataset,
  EmptySubset,
  UnknownFeature,
  UnknownGroup,
  BinCountTooSmall,
  InvalidCount,
  SingleClass,
  NOutOfRange,
  InvalidGaConfig,
  ThresholdOutOfRange,
  UnknownPreset,
  InvalidSmoothing,
  DimensionMismatch,
  NoConvergence,
  LengthMismatch,
  EmptyMatrix,
  KOutOfRange,
  UnknownMethod,
  InvalidConfig,
  IoError,
  BadModelFile,
};

const char* errc_name(Errc code);

/// Library-wide exception. code() identifies the condition for callers that
/// branch on failures (CLI exit codes, per-cell isolation in the experiment
/// runner); what() carries the human-readable detail.
class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace mibids
