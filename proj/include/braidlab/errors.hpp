#ifndef BRAIDLAB_ERRORS_HPP
#define BRAIDLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace braidlab {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero scalar") {}
};

struct UnboundVariable : Error {
    explicit UnboundVariable(const std::string& sym)
        : Error("unbound variable: " + sym), symbol(sym) {}
    std::string symbol;
};

struct DenominatorVanishes : Error {
    explicit DenominatorVanishes(const std::string& at)
        : Error("denominator vanishes at " + at) {}
};

struct NonGenericQ : Error {
    explicit NonGenericQ(const std::string& value)
        : Error("q = " + value + " is not generic (root of a small cyclotomic)") {}
};

struct NotSkewInvertible : Error {
    NotSkewInvertible() : Error("braiding is not skew-invertible (singular trace system)") {}
};

struct DegreeOverflow : Error {
    explicit DegreeOverflow(int cap)
        : Error("rewriting exceeded degree cap " + std::to_string(cap)), cap(cap) {}
    int cap;
};

struct DegreeTooHigh : Error {
    explicit DegreeTooHigh(const std::string& op)
        : Error(op + ": input degree too high") {}
};

struct NonOrientable : Error {
    explicit NonOrientable(const std::string& detail)
        : Error("relation not orientable: " + detail) {}
};

struct EqualSuperDims : Error {
    EqualSuperDims() : Error("traceless quotient requires m != n") {}
};

struct GeneratorMismatch : Error {
    GeneratorMismatch() : Error("brackets are defined on different generator lists") {}
};

struct DegenerateSpectrum : Error {
    explicit DegenerateSpectrum(const std::string& pair)
        : Error("degenerate spectrum: " + pair + " vanishes") {}
};

struct SizeMismatch : Error {
    explicit SizeMismatch(const std::string& what) : Error("size mismatch: " + what) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error("parse error: " + what) {}
};

} // namespace braidlab

#endif
