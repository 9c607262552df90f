#pragma once

#include <stdexcept>
#include <string>

namespace optchan {

// Physics-domain failures, as opposed to usage errors. The CLI maps these
// to exit code 2.
class PhysicsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when the mode-sum truncation cap is reached before the Parseval
// criterion is met.
class TruncationError : public PhysicsError {
 public:
  using PhysicsError::PhysicsError;
};

// Raised when an inversion step would push a node past the photon cap.
class PhotonCapError : public PhysicsError {
 public:
  using PhysicsError::PhysicsError;
};

// Raised when a reflectivity spectrum never reaches the stop-band threshold.
class NoStopBandError : public PhysicsError {
 public:
  using PhysicsError::PhysicsError;
};

// Raised when a field grid cannot resolve the highest retained mode.
class GridUndersampledError : public PhysicsError {
 public:
  using PhysicsError::PhysicsError;
};

}  // namespace optchan
