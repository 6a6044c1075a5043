#pragma once

#include <stdexcept>
#include <string>

namespace congestion {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A constitutive law was evaluated outside its domain.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Invalid grid, solver, step or run configuration.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Zero-mean Poisson right-hand side with a non-negligible mean.
class CompatibilityError : public Error {
public:
    using Error::Error;
};

class SweepDegenerate : public Error {
public:
    using Error::Error;
};

class FitDegenerate : public Error {
public:
    using Error::Error;
};

class Unclassifiable : public Error {
public:
    using Error::Error;
};

/// An explicit transport step would have produced a cell with rho >= 1
/// under the untruncated laws.
class CongestionOverflow : public Error {
public:
    explicit CongestionOverflow(double new_max_rho);
    [[nodiscard]] double new_max_rho() const noexcept { return new_max_rho_; }

private:
    double new_max_rho_;
};

}  // namespace congestion
