#pragma once

#include <stdexcept>
#include <string>

namespace polyidp {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define POLYIDP_DEFINE_ERROR(Name)                                   \
    class Name : public Error {                                      \
    public:                                                          \
        explicit Name(const std::string& what) : Error(what) {}      \
    }

POLYIDP_DEFINE_ERROR(InvalidPartition);
POLYIDP_DEFINE_ERROR(SizeMismatch);
POLYIDP_DEFINE_ERROR(EmptyInput);
POLYIDP_DEFINE_ERROR(LengthExceedsAmbient);
POLYIDP_DEFINE_ERROR(ShapeMismatch);
POLYIDP_DEFINE_ERROR(LetterOutOfRange);
POLYIDP_DEFINE_ERROR(ShapeSumMismatch);
POLYIDP_DEFINE_ERROR(PreconditionViolated);
POLYIDP_DEFINE_ERROR(SingularMatrix);
POLYIDP_DEFINE_ERROR(OutOfEnvelope);
POLYIDP_DEFINE_ERROR(ParseError);

#undef POLYIDP_DEFINE_ERROR

} // namespace polyidp
