#pragma once

#include <stdexcept>
#include <string>

namespace isodens {

struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ConvergenceFailure : std::runtime_error {
    explicit ConvergenceFailure(const std::string& msg) : std::runtime_error(msg) {}
};

struct PointNotOnInterface : std::runtime_error {
    explicit PointNotOnInterface(const std::string& msg) : std::runtime_error(msg) {}
};

struct InvalidSpec : std::runtime_error {
    explicit InvalidSpec(const std::string& msg) : std::runtime_error(msg) {}
};

struct InsufficientPoints : std::runtime_error {
    explicit InsufficientPoints(const std::string& msg) : std::runtime_error(msg) {}
};

struct QuadratureFailure : std::runtime_error {
    explicit QuadratureFailure(const std::string& msg) : std::runtime_error(msg) {}
};

struct SingularPointInWindow : std::runtime_error {
    explicit SingularPointInWindow(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace isodens
