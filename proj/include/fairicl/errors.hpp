#pragma once

#include <stdexcept>
#include <string>

namespace fairicl {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Tabular input could not be parsed (wrong column count, bad integer, ...).
struct ParseError : Error {
  using Error::Error;
};

// A label string is not one of the recognized income labels.
struct LabelError : Error {
  using Error::Error;
};

// A (group x income) stratum has too few records to sample from.
struct InsufficientStratumError : Error {
  using Error::Error;
};

// Prediction/gold/group sequences are not the same length.
struct AlignmentError : Error {
  using Error::Error;
};

// Prompt parts violate the composition contract (e.g. too many demos).
struct CompositionError : Error {
  using Error::Error;
};

// An index file is inconsistent with the provider that is reading it.
struct IndexCorruptionError : Error {
  using Error::Error;
};

// Provider transport failed after exhausting retries.
struct TransportError : Error {
  using Error::Error;
};

// Credential missing or rejected; never retried.
struct CredentialError : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

// Report inputs are incomplete (missing cell, empty cell, ...).
struct ReportError : Error {
  using Error::Error;
};

// External prediction fixtures do not conform to the documented schema.
struct IngestionError : Error {
  using Error::Error;
};

}  // namespace fairicl
