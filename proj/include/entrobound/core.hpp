#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace entrobound {

using cdouble = std::complex<double>;

// Input or state-invariant violations (CLI exit code 2).
class ValidationError : public std::invalid_argument {
  public:
    explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

// Numerical breakdown: singular conditioning blocks, corrupt spectra (CLI exit code 3).
class NumericalError : public std::runtime_error {
  public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

namespace tol {
inline constexpr double hermitian = 1e-12;
inline constexpr double trace_one = 1e-12;
inline constexpr double unit_norm = 1e-12;
inline constexpr double eigenvalue_floor = -1e-10;  // below this, the state is corrupt
inline constexpr double prob_floor = 1e-15;         // probabilities below this count as zero
}  // namespace tol

// x * log2(x) with the 0*log(0) := 0 convention.
inline double xlog2x(double x) {
    if (x < tol::prob_floor) return 0.0;
    return x * std::log2(x);
}

}  // namespace entrobound
