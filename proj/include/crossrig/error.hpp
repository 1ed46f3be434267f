#pragma once

#include <stdexcept>
#include <string>

namespace crossrig {

// Base class for all crossrig errors. Subclasses pick the CLI exit code:
// ConfigError -> 2, IoError -> 3, everything else (data/contract) -> 1.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Bad or missing configuration (unknown keys, absent input files, invalid
// thresholds). Maps to exit code 2.
class ConfigError : public Error {
public:
  using Error::Error;
};

// Filesystem and serialization failures while reading or writing artifacts.
// Maps to exit code 3.
class IoError : public Error {
public:
  using Error::Error;
};

// A domain invariant or operation precondition was violated by the data.
class ValidationError : public Error {
public:
  using Error::Error;
};

// project_point called with a point at or behind the camera plane.
class PointBehindCameraError : public ValidationError {
public:
  using ValidationError::ValidationError;
};

// Track queried outside its keyframe range beyond the clamp tolerance.
class OutOfTrackRangeError : public ValidationError {
public:
  using ValidationError::ValidationError;
};

// Polyline too short to resample.
class DegenerateElementError : public ValidationError {
public:
  using ValidationError::ValidationError;
};

}  // namespace crossrig
