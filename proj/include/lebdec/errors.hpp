#pragma once

#include <stdexcept>
#include <string>

namespace lebdec {

struct NonHermitian : std::runtime_error {
    explicit NonHermitian(const std::string& m) : std::runtime_error(m) {}
};

struct DimensionMismatch : std::runtime_error {
    explicit DimensionMismatch(const std::string& m) : std::runtime_error(m) {}
};

struct NotPsd : std::runtime_error {
    explicit NotPsd(const std::string& m) : std::runtime_error(m) {}
};

struct AlgebraMismatch : std::runtime_error {
    explicit AlgebraMismatch(const std::string& m) : std::runtime_error(m) {}
};

struct IndexOutOfRange : std::out_of_range {
    explicit IndexOutOfRange(const std::string& m) : std::out_of_range(m) {}
};

struct NotAGroup : std::runtime_error {
    explicit NotAGroup(const std::string& m) : std::runtime_error(m) {}
};

struct NoConvergence : std::runtime_error {
    explicit NoConvergence(const std::string& m) : std::runtime_error(m) {}
};

struct NotAbsolutelyContinuous : std::runtime_error {
    explicit NotAbsolutelyContinuous(const std::string& m)
        : std::runtime_error(m) {}
};

struct ZeroFunctional : std::runtime_error {
    explicit ZeroFunctional(const std::string& m) : std::runtime_error(m) {}
};

struct NotAProjection : std::runtime_error {
    explicit NotAProjection(const std::string& m) : std::runtime_error(m) {}
};

struct InvalidLevel : std::runtime_error {
    explicit InvalidLevel(const std::string& m) : std::runtime_error(m) {}
};

struct UnderflowRisk : std::runtime_error {
    explicit UnderflowRisk(const std::string& m) : std::runtime_error(m) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& m) : std::runtime_error(m) {}
};

}  // namespace lebdec
