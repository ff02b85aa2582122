#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <stdexcept>
#include <string>
#include <vector>

namespace bsg {

// Expression templates are disabled so the scalars behave like plain values
// inside Eigen expressions.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <typename Scalar>
using Vector2 = Eigen::Matrix<Scalar, 2, 1>;
template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using Point2 = Vector2<Rational>;
using IntegerMatrix = MatrixX<Integer>;
/// One row per vertex, one column per target coordinate.
using ValueMatrix = MatrixX<Rational>;

using Vertex = int;
/// Strictly increasing vertex indices.
using Simplex = std::vector<Vertex>;

enum class ErrorCode {
  EmptyInput,
  NonPureComplex,
  DuplicateVertexInFacet,
  VertexOutOfRange,
  NotPseudoManifold,
  UnsupportedDimension,
  ResolutionTooSmall,
  DimensionMismatch,
  ClosedSummand,
  KindMismatch,
  PerturbationFailed,
  ClosedDomain,
  NotGeneric,
  DimensionUnsupported,
  DegenerateQueryPoint,
  NotBoundarySpecialGeneric,
  NerveUnstable,
  Disconnected,
  InvalidInput,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

enum class Ring { Z, Z2 };
enum class Variant { Homology, Cohomology };

}  // namespace bsg
