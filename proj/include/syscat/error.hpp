#pragma once

#include <stdexcept>
#include <string>

namespace syscat {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define SYSCAT_DEFINE_ERROR(Name)                    \
  class Name : public Error {                        \
   public:                                           \
    explicit Name(const std::string& what)           \
        : Error(std::string(#Name ": ") + what) {}   \
  }

// Text input that does not follow a file grammar.
SYSCAT_DEFINE_ERROR(ParseError);

// mesh-geometry
SYSCAT_DEFINE_ERROR(NotClosedSurface);
SYSCAT_DEFINE_ERROR(TriangleInequalityViolated);
SYSCAT_DEFINE_ERROR(Disconnected);
SYSCAT_DEFINE_ERROR(NoNontrivialClass);
SYSCAT_DEFINE_ERROR(CoverTooLarge);
SYSCAT_DEFINE_ERROR(StepTooLarge);

// lattice-tori
SYSCAT_DEFINE_ERROR(NotPositiveDefinite);
SYSCAT_DEFINE_ERROR(UnsupportedRank);

// cdga-engine
SYSCAT_DEFINE_ERROR(DegreeMismatch);
SYSCAT_DEFINE_ERROR(NotSquareZero);
SYSCAT_DEFINE_ERROR(CapExceeded);
SYSCAT_DEFINE_ERROR(ProductsNotZero);
SYSCAT_DEFINE_ERROR(NoFundamentalClass);

// category-bounds
SYSCAT_DEFINE_ERROR(InconsistentDescriptor);
SYSCAT_DEFINE_ERROR(InvalidPartition);
SYSCAT_DEFINE_ERROR(UnknownName);

// cli-reporting
SYSCAT_DEFINE_ERROR(ConfigError);
SYSCAT_DEFINE_ERROR(IoError);

#undef SYSCAT_DEFINE_ERROR

}  // namespace syscat
