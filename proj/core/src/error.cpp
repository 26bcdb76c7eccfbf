#include "fcart/error.hpp"

namespace fcart {

const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::SyntaxError: return "SyntaxError";
        case ErrorKind::UnknownVariable: return "UnknownVariable";
        case ErrorKind::NegativeExponent: return "NegativeExponent";
        case ErrorKind::NotPrime: return "NotPrime";
        case ErrorKind::InvalidQ: return "InvalidQ";
        case ErrorKind::RingMismatch: return "RingMismatch";
        case ErrorKind::OrderMismatch: return "OrderMismatch";
        case ErrorKind::ExponentCapExceeded: return "ExponentCapExceeded";
        case ErrorKind::IterationCapExceeded: return "IterationCapExceeded";
        case ErrorKind::PairCapExceeded: return "PairCapExceeded";
        case ErrorKind::NotCartierSubmodule: return "NotCartierSubmodule";
        case ErrorKind::NotFPure: return "NotFPure";
        case ErrorKind::ZeroDivisorInput: return "ZeroDivisorInput";
        case ErrorKind::DenominatorNotInvertible: return "DenominatorNotInvertible";
        case ErrorKind::EmptyPeriod: return "EmptyPeriod";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::InternalMismatch: return "InternalMismatch";
        case ErrorKind::UnsupportedRegime: return "UnsupportedRegime";
        case ErrorKind::Overflow: return "Overflow";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

} // namespace fcart
