#ifndef CYCOVER_ERROR_HPP
#define CYCOVER_ERROR_HPP

#include <optional>
#include <stdexcept>
#include <string>

namespace cycover {

// Every domain failure carries one of these codes so callers (and the CLI
// exit-code contract) can distinguish malformed input from genuine
// mathematical verdicts, which are returned as values, never thrown.
enum class ErrorCode {
    // lattice
    NonSymmetric,
    LabelMismatch,
    UnknownName,
    MissingParam,
    InvalidParam,
    IndexOutOfRange,
    EmptyInput,
    AmbientMismatch,
    NonIntegral,
    B2TooSmall,
    // zariski
    NotContractible,
    NegativeCoefficient,
    // orders
    NonPositive,
    // monodromy
    NotPrime,
    PExceedsN,
    DegreeTooSmall,
    Indeterminate,
    // betti
    InvalidRho,
    // cli
    UnknownCommand,
    ParseError,
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}
    Error(ErrorCode code, const std::string& message, std::size_t index)
        : std::runtime_error(message), code_(code), index_(index) {}

    ErrorCode code() const { return code_; }
    std::optional<std::size_t> index() const { return index_; }

private:
    ErrorCode code_;
    std::optional<std::size_t> index_;
};

}  // namespace cycover

#endif
