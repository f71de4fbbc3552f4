#ifndef CHLIM_CORE_COMMON_HPP
#define CHLIM_CORE_COMMON_HPP

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace chlim {

using Field = std::vector<double>;

// Invalid configuration or invalid argument; maps to exit code 1.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Any numerical failure; maps to exit code 2.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

// Banded factorization hit a pivot that is zero to working precision.
class SolverError : public NumericalError {
public:
    explicit SolverError(const std::string& msg) : NumericalError(msg) {}
};

// Newton did not converge within the iteration budget.  Catchable: the
// stability scanner treats this as "unstable", not as a crash.
class NewtonError : public NumericalError {
public:
    NewtonError(const std::string& msg, double residual, int iters)
        : NumericalError(msg), last_residual(residual), iterations(iters) {}
    double last_residual;
    int iterations;
};

// A time step produced a non-finite or absurdly large iterate.
class InstabilityError : public NumericalError {
public:
    InstabilityError(const std::string& msg, long step_index)
        : NumericalError(msg), step_index(step_index) {}
    long step_index;
};

inline bool all_finite(const Field& v) {
    for (double x : v)
        if (!std::isfinite(x)) return false;
    return true;
}

inline void require_finite(const Field& v, const char* what) {
    if (!all_finite(v))
        throw NumericalError(std::string(what) + ": field contains non-finite entries");
}

inline double max_abs(const Field& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

inline double norm2(const Field& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

} // namespace chlim

#endif
