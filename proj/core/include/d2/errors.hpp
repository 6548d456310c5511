#pragma once

#include <stdexcept>
#include <string>

namespace d2 {

// Caller handed us arguments outside an operation's contract. CLI exit 2.
class PreconditionError : public std::runtime_error {
public:
    explicit PreconditionError(const std::string& msg) : std::runtime_error(msg) {}
};

// A lemma hypothesis measured on the input fails (e.g. the pair densities a
// certificate assumes). Carries the measured quantities in the message.
class HypothesisViolationError : public std::runtime_error {
public:
    explicit HypothesisViolationError(const std::string& msg) : std::runtime_error(msg) {}
};

// A machine-checked postcondition failed; indicates a bug or an input outside
// the regime a construction can serve. CLI exit 3.
class VerificationError : public std::runtime_error {
public:
    explicit VerificationError(const std::string& msg) : std::runtime_error(msg) {}
};

// A structural claim of the decomposition pipeline failed on an edited or
// reduced object (e.g. the class-level reduced graph is not a cograph after
// heuristic editing). Reported, not treated as a crash.
class StructuralAnomalyError : public std::runtime_error {
public:
    explicit StructuralAnomalyError(const std::string& msg) : std::runtime_error(msg) {}
};

// Density of an induced part escaped the [beta, 1-beta] window. The iterated
// partition consumes this and extracts a homogeneous set directly instead.
class DensityEscapeSignal : public std::runtime_error {
public:
    DensityEscapeSignal(const std::string& msg, bool dense_side)
        : std::runtime_error(msg), dense(dense_side) {}
    bool dense;
};

}  // namespace d2
