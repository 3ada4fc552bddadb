#pragma once

#include <stdexcept>
#include <string>

namespace agd {

// Every failure mode callers are expected to handle gets its own type so that
// the CLI can map them onto stable exit codes.

struct HorizonExhausted : std::runtime_error {
    explicit HorizonExhausted(const std::string& what) : std::runtime_error(what) {}
};

struct PoleAtEvaluation : std::runtime_error {
    explicit PoleAtEvaluation(const std::string& what) : std::runtime_error(what) {}
};

struct NonIntegralShift : std::runtime_error {
    explicit NonIntegralShift(const std::string& what) : std::runtime_error(what) {}
};

struct NonMonic : std::runtime_error {
    explicit NonMonic(const std::string& what) : std::runtime_error(what) {}
};

struct ShiftMismatch : std::runtime_error {
    explicit ShiftMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct WordMismatch : std::runtime_error {
    explicit WordMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct NotEvaluated : std::runtime_error {
    explicit NotEvaluated(const std::string& what) : std::runtime_error(what) {}
};

struct NotWeightZero : std::runtime_error {
    explicit NotWeightZero(const std::string& what) : std::runtime_error(what) {}
};

struct InconsistentConstraint : std::runtime_error {
    explicit InconsistentConstraint(const std::string& what) : std::runtime_error(what) {}
};

struct OddM : std::runtime_error {
    explicit OddM(const std::string& what) : std::runtime_error(what) {}
};

struct UnknownGenerator : std::runtime_error {
    explicit UnknownGenerator(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace agd
