#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dialg {

enum class ErrorKind {
    MixedFields,
    FieldMismatch,
    ShapeMismatch,
    CapExceeded,
    IndexOutOfRange,
    OrderTooLow,
    OrderMismatch,
    InvalidDeformation,
    BaseMismatch,
    NonIdentityConstantTerm,
    NotACoboundary,
    DivisionByZero,
    ParseError,
    UnknownReference,
    BadScalar,
};

std::string_view to_string(ErrorKind kind);

// Single exception type for the library; `kind()` identifies the failure.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind)
    {
    }

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace dialg
