#pragma once

#include <stdexcept>
#include <string>

namespace staotto {

/// Argument outside the documented parameter domain.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An effective squared frequency went non-positive: the confining trap
/// would turn repulsive. Carries the offending protocol time.
class TrapInversionError : public std::runtime_error {
public:
    TrapInversionError(const std::string& what, double t)
        : std::runtime_error(what), t_(t) {}
    double time() const { return t_; }

private:
    double t_;
};

/// The Ermakov scaling function crossed zero during integration.
class TrapCollapseError : public std::runtime_error {
public:
    TrapCollapseError(const std::string& what, double t)
        : std::runtime_error(what), t_(t) {}
    double time() const { return t_; }

private:
    double t_;
};

/// Panel-doubling quadrature did not converge; keeps the last two estimates.
class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& what, double previous, double last)
        : std::runtime_error(what), previous_(previous), last_(last) {}
    double previous_estimate() const { return previous_; }
    double last_estimate() const { return last_; }

private:
    double previous_;
    double last_;
};

/// A fixed-step ODE result failed its step-doubling consistency check.
class OdeError : public std::runtime_error {
public:
    OdeError(const std::string& what, double coarse, double fine)
        : std::runtime_error(what), coarse_(coarse), fine_(fine) {}
    double coarse_estimate() const { return coarse_; }
    double fine_estimate() const { return fine_; }

private:
    double coarse_;
    double fine_;
};

}  // namespace staotto
