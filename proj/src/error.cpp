#include "baranski/error.hpp"

namespace baranski {

const char* errc_name(Errc code) noexcept {
    switch (code) {
    case Errc::Parse: return "parse-error";
    case Errc::DuplicateDigit: return "duplicate-digit";
    case Errc::OutOfRange: return "out-of-range";
    case Errc::RatioCountMismatch: return "ratio-count-mismatch";
    case Errc::RatioSum: return "ratio-sum";
    case Errc::InvalidArgument: return "invalid-argument";
    case Errc::CapExceeded: return "cap-exceeded";
    case Errc::DiagonalStatePresent: return "diagonal-state-present";
    case Errc::InvalidCrossAutomaton: return "invalid-cross-automaton";
    case Errc::NotClass2: return "not-class-2";
    case Errc::InvalidContext: return "invalid-context";
    case Errc::NotInDomain: return "not-in-domain";
    case Errc::PreservationFailure: return "preservation-failure";
    case Errc::IntransitivitySample: return "intransitivity-sample";
    case Errc::Internal: return "internal";
    }
    return "unknown";
}

}  // namespace baranski
