#include "cycover/numeric.hpp"

#include <cctype>

#include "cycover/error.hpp"

namespace cycover {

const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::NonSymmetric: return "NonSymmetric";
        case ErrorCode::LabelMismatch: return "LabelMismatch";
        case ErrorCode::UnknownName: return "UnknownName";
        case ErrorCode::MissingParam: return "MissingParam";
        case ErrorCode::InvalidParam: return "InvalidParam";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::EmptyInput: return "EmptyInput";
        case ErrorCode::AmbientMismatch: return "AmbientMismatch";
        case ErrorCode::NonIntegral: return "NonIntegral";
        case ErrorCode::B2TooSmall: return "B2TooSmall";
        case ErrorCode::NotContractible: return "NotContractible";
        case ErrorCode::NegativeCoefficient: return "NegativeCoefficient";
        case ErrorCode::NonPositive: return "NonPositive";
        case ErrorCode::NotPrime: return "NotPrime";
        case ErrorCode::PExceedsN: return "PExceedsN";
        case ErrorCode::DegreeTooSmall: return "DegreeTooSmall";
        case ErrorCode::Indeterminate: return "Indeterminate";
        case ErrorCode::InvalidRho: return "InvalidRho";
        case ErrorCode::UnknownCommand: return "UnknownCommand";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

std::string rational_to_string(const Rat& q) {
    Rat c = q;
    c.canonicalize();
    return c.get_str();
}

Rat parse_rational(const std::string& s) {
    if (s.empty())
        throw Error(ErrorCode::ParseError, "empty rational literal");
    // mpq set_str is permissive about whitespace and leading junk in ways we
    // do not want in a wire format, so validate the shape by hand first.
    std::size_t i = 0;
    auto digits = [&](std::size_t from) {
        std::size_t j = from;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        return j;
    };
    if (s[i] == '-' || s[i] == '+') ++i;
    std::size_t num_end = digits(i);
    if (num_end == i)
        throw Error(ErrorCode::ParseError, "bad rational literal '" + s + "'");
    if (num_end != s.size()) {
        if (s[num_end] != '/')
            throw Error(ErrorCode::ParseError, "bad rational literal '" + s + "'");
        std::size_t den_end = digits(num_end + 1);
        if (den_end == num_end + 1 || den_end != s.size())
            throw Error(ErrorCode::ParseError, "bad rational literal '" + s + "'");
    }
    Rat q;
    if (q.set_str(s, 10) != 0)
        throw Error(ErrorCode::ParseError, "bad rational literal '" + s + "'");
    if (q.get_den() == 0)
        throw Error(ErrorCode::ParseError, "zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

int sign(const Rat& q) { return sgn(q); }

}  // namespace cycover
