#pragma once

#include <stdexcept>
#include <string>

namespace entail {

struct AtomLimitExceeded : std::runtime_error {
    explicit AtomLimitExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct ModeViolation : std::runtime_error {
    explicit ModeViolation(const std::string& what) : std::runtime_error(what) {}
};

struct CarrierTooLarge : std::runtime_error {
    explicit CarrierTooLarge(const std::string& what) : std::runtime_error(what) {}
};

struct NotANucleus : std::runtime_error {
    explicit NotANucleus(const std::string& what) : std::runtime_error(what) {}
};

struct NotALattice : std::runtime_error {
    explicit NotALattice(const std::string& what) : std::runtime_error(what) {}
};

struct PairMismatch : std::runtime_error {
    explicit PairMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct StepBudgetExceeded : std::runtime_error {
    explicit StepBudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace entail
