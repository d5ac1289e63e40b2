#pragma once

#include <stdexcept>
#include <string>

namespace baranski {

enum class Errc {
    Parse,
    DuplicateDigit,
    OutOfRange,
    RatioCountMismatch,
    RatioSum,
    InvalidArgument,
    CapExceeded,
    DiagonalStatePresent,
    InvalidCrossAutomaton,
    NotClass2,
    InvalidContext,
    NotInDomain,
    PreservationFailure,
    IntransitivitySample,
    Internal,
};

const char* errc_name(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above so the
/// CLI can map it to an exit status without string matching.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace baranski
