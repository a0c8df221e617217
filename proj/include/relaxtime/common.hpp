#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace relaxtime {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kSqrtPi = 1.77245385090551602729816748334114518;
inline constexpr double kSqrt2 = 1.41421356237309504880168872420969808;
inline constexpr double kSqrt2Pi = 2.50662827463100050241576528481104525;
inline constexpr cplx kI{0.0, 1.0};

inline constexpr const char* kVersion = "0.1.0";

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define RELAXTIME_ERROR(Name)            \
  class Name : public Error {            \
   public:                               \
    using Error::Error;                  \
  };

RELAXTIME_ERROR(DomainError)
RELAXTIME_ERROR(ConvergenceError)
RELAXTIME_ERROR(RangeError)
RELAXTIME_ERROR(SectorError)
RELAXTIME_ERROR(PoleError)
RELAXTIME_ERROR(PathError)
RELAXTIME_ERROR(ContourError)
RELAXTIME_ERROR(PrecisionError)
RELAXTIME_ERROR(NearSingularError)
RELAXTIME_ERROR(GridError)

#undef RELAXTIME_ERROR

}  // namespace relaxtime
