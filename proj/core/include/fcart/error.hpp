#ifndef FCART_ERROR_HPP
#define FCART_ERROR_HPP

#include <stdexcept>
#include <string>

namespace fcart {

enum class ErrorKind {
    SyntaxError,           // malformed polynomial text, carries byte offset
    UnknownVariable,
    NegativeExponent,
    NotPrime,
    InvalidQ,              // q is not a power of the ring characteristic
    RingMismatch,
    OrderMismatch,
    ExponentCapExceeded,   // q^m over FCART_EXP_CAP
    IterationCapExceeded,  // stabilization ran past FCART_ITER_CAP
    PairCapExceeded,       // Buchberger pair budget exhausted
    NotCartierSubmodule,
    NotFPure,
    ZeroDivisorInput,
    DenominatorNotInvertible,
    EmptyPeriod,
    IndexOutOfRange,
    InternalMismatch,      // two internal computation paths disagreed
    UnsupportedRegime,
    Overflow,
    InvalidArgument,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string message, long byte_offset = -1)
        : std::runtime_error(std::move(message)), kind_(kind), byte_offset_(byte_offset) {}

    ErrorKind kind() const { return kind_; }
    // byte offset into the source text for parse errors, -1 otherwise
    long byte_offset() const { return byte_offset_; }

private:
    ErrorKind kind_;
    long byte_offset_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& message, long offset = -1) {
    throw Error(kind, message, offset);
}

} // namespace fcart

#endif
