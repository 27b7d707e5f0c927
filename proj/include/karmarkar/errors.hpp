#pragma once

#include <stdexcept>
#include <string>

namespace karmarkar {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Vector/matrix shapes disagree with each other or with the declared n, m.
class DimensionMismatch : public Error {
public:
  using Error::Error;
};

/// A scalar argument lies outside the mathematical domain of the operation.
class DomainError : public Error {
public:
  using Error::Error;
};

/// A factorization pivot fell below the relative threshold: the rows are
/// (numerically) linearly dependent. The caller must remove redundant rows;
/// nothing is eliminated silently.
class RankDeficient : public Error {
public:
  using Error::Error;
};

/// Point is not on the expected simplex (coordinate sum or sign violated).
class NotOnSimplex : public Error {
public:
  using Error::Error;
};

/// The transform denominator sum(a_j x_j) is not strictly positive.
class ZeroDenominator : public Error {
public:
  using Error::Error;
};

/// A point expected to be strictly interior has a coordinate at (or below)
/// the boundary tolerance.
class NotInterior : public Error {
public:
  using Error::Error;
};

/// A point violates the equality constraints beyond tolerance.
class NotFeasible : public Error {
public:
  using Error::Error;
};

/// c^T x <= 0 where the potential requires a positive objective. During a
/// solve this means optimal cost has been reached or crossed; it is treated
/// as convergence there, not as failure.
class NonpositiveObjective : public Error {
public:
  using Error::Error;
};

/// An analytic precondition (norm identity, argument range) does not hold.
class PreconditionViolated : public Error {
public:
  using Error::Error;
};

/// Instance exceeds the combinatorial guard of the enumeration oracle.
class TooLarge : public Error {
public:
  using Error::Error;
};

/// No basis yields a feasible point. Cannot happen for a valid instance
/// (the centre is feasible), so this signals an internal inconsistency.
class EmptyFeasibleSet : public Error {
public:
  using Error::Error;
};

/// Severe ill-conditioning inside the iteration: the stacked constraint
/// matrix lost rank under scaling, or a denominator that is positive in
/// exact arithmetic came out nonpositive.
class NumericalBreakdown : public Error {
public:
  using Error::Error;
};

/// Problem file cannot be parsed; the message identifies the offending field.
class ParseError : public Error {
public:
  using Error::Error;
};

} // namespace karmarkar
