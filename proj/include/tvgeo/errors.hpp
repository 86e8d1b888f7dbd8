#pragma once

#include <stdexcept>
#include <string>

namespace tvgeo {

struct NonFiniteInput : std::runtime_error {
    explicit NonFiniteInput(const std::string& what) : std::runtime_error(what) {}
};

struct StepTooLarge : std::runtime_error {
    explicit StepTooLarge(const std::string& what) : std::runtime_error(what) {}
};

struct InfeasibleDual : std::runtime_error {
    explicit InfeasibleDual(const std::string& what) : std::runtime_error(what) {}
};

struct EmptyOpening : std::runtime_error {
    explicit EmptyOpening(const std::string& what) : std::runtime_error(what) {}
};

struct NotBracketed : std::runtime_error {
    explicit NotBracketed(const std::string& what) : std::runtime_error(what) {}
};

struct LambdaTooLarge : std::runtime_error {
    explicit LambdaTooLarge(const std::string& what) : std::runtime_error(what) {}
};

struct AlphaTooLarge : std::runtime_error {
    explicit AlphaTooLarge(const std::string& what) : std::runtime_error(what) {}
};

struct EmptyContour : std::runtime_error {
    explicit EmptyContour(const std::string& what) : std::runtime_error(what) {}
};

struct RadiusTooSmall : std::runtime_error {
    explicit RadiusTooSmall(const std::string& what) : std::runtime_error(what) {}
};

struct NoOracle : std::runtime_error {
    explicit NoOracle(const std::string& what) : std::runtime_error(what) {}
};

struct BadShapeSpec : std::runtime_error {
    explicit BadShapeSpec(const std::string& what) : std::runtime_error(what) {}
};

} // namespace tvgeo
