#pragma once

#include <stdexcept>
#include <string>

namespace a2e {

// Base for all library errors so callers can catch the whole family.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// signal-dsp
struct InvalidBand : Error { using Error::Error; };
struct DesignUnstable : Error { using Error::Error; };

// feature extraction
struct SignalTooShort : Error { using Error::Error; };

// shapes and data layout
struct ShapeMismatch : Error { using Error::Error; };
struct DimMismatch : Error { using Error::Error; };
struct LengthMismatch : Error { using Error::Error; };

// serialization
struct CorruptFile : Error { using Error::Error; };
struct IoFailure : Error { using Error::Error; };

// datasets and training
struct EmptySplit : Error { using Error::Error; };
struct TooFewUtterances : Error { using Error::Error; };
struct NonFiniteLoss : Error { using Error::Error; };
struct TopologyMismatch : Error { using Error::Error; };
struct GraphNotRecorded : Error { using Error::Error; };

// evaluation
struct DegenerateRange : Error { using Error::Error; };

}  // namespace a2e
