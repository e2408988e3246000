#pragma once

#include <stdexcept>
#include <string>

namespace tcna {

// Base for all toolkit errors so callers can catch one type at the CLI
// boundary while tests can assert on the specific category.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    virtual const char* kind() const noexcept { return "error"; }
};

#define TCNA_DEFINE_ERROR(Name, Kind)                            \
    class Name : public Error {                                  \
    public:                                                      \
        using Error::Error;                                      \
        const char* kind() const noexcept override { return Kind; } \
    }

TCNA_DEFINE_ERROR(ParseError, "parse");
TCNA_DEFINE_ERROR(ValidationError, "validation");
TCNA_DEFINE_ERROR(ArgumentError, "argument");
TCNA_DEFINE_ERROR(ShapeError, "shape");
TCNA_DEFINE_ERROR(NumericError, "numeric");
TCNA_DEFINE_ERROR(InsufficientDataError, "insufficient_data");
TCNA_DEFINE_ERROR(UndefinedMetricError, "undefined_metric");
TCNA_DEFINE_ERROR(IoError, "io");

#undef TCNA_DEFINE_ERROR

} // namespace tcna
