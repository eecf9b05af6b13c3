#pragma once

#include <stdexcept>
#include <string>

namespace handshape {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed or inconsistent external data.
class ParseError : public Error {
 public:
  using Error::Error;
};

class FileError : public Error {
 public:
  using Error::Error;
};

#define HANDSHAPE_DEFINE_ERROR(Name, Base) \
  class Name : public Base {               \
   public:                                 \
    using Base::Base;                      \
  }

// landmark_io
HANDSHAPE_DEFINE_ERROR(MalformedRow, ParseError);
HANDSHAPE_DEFINE_ERROR(IncompleteFrame, ParseError);
HANDSHAPE_DEFINE_ERROR(NonMonotonicFrames, ParseError);
HANDSHAPE_DEFINE_ERROR(EmptySet, ParseError);
HANDSHAPE_DEFINE_ERROR(MalformedLandmarks, ParseError);
HANDSHAPE_DEFINE_ERROR(UnknownLexicalClass, ParseError);
HANDSHAPE_DEFINE_ERROR(MissingPhrase, ParseError);

// kinematics / effort
HANDSHAPE_DEFINE_ERROR(DegenerateBone, Error);
HANDSHAPE_DEFINE_ERROR(EmptyRestingSet, Error);

// segmentation
HANDSHAPE_DEFINE_ERROR(TooFewFrames, Error);
HANDSHAPE_DEFINE_ERROR(NotEnoughMinima, Error);
HANDSHAPE_DEFINE_ERROR(NonMonotonicAfterCorrection, Error);
HANDSHAPE_DEFINE_ERROR(PositionOutOfRange, Error);
HANDSHAPE_DEFINE_ERROR(FrameNotInSequence, Error);

// usage_stats
HANDSHAPE_DEFINE_ERROR(NoPairMass, Error);

// stats
HANDSHAPE_DEFINE_ERROR(MissingLetter, Error);
HANDSHAPE_DEFINE_ERROR(ZeroVariance, Error);
HANDSHAPE_DEFINE_ERROR(TooFewPoints, Error);
HANDSHAPE_DEFINE_ERROR(DegenerateControl, Error);

#undef HANDSHAPE_DEFINE_ERROR

}  // namespace handshape
