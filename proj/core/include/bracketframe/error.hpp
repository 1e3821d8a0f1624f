// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bracketframe {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two operands live on different lattice grids.
class GridMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Dilation factor does not map the grid onto an integer-density grid.
class IncompatibleDilation : public Error {
 public:
  using Error::Error;
};

class NotRealValued : public Error {
 public:
  using Error::Error;
};

/// Gram-Schmidt input member `index` lies (numerically) in the modulation
/// span of the members before it.
class ADependent : public Error {
 public:
  ADependent(std::size_t index, const std::string& what)
      : Error(what), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

class ZeroWindow : public Error {
 public:
  using Error::Error;
};

class NotFactorable : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

/// Completeness analysis requires ab = 1 exactly.
class LatticeNotCritical : public Error {
 public:
  using Error::Error;
};

class NotConverged : public Error {
 public:
  NotConverged(int iterations, const std::string& what)
      : Error(what), iterations_(iterations) {}
  int iterations() const noexcept { return iterations_; }

 private:
  int iterations_;
};

/// Conjugate gradients met a direction of non-positive curvature.
class NotPositiveDefinite : public Error {
 public:
  using Error::Error;
};

class SingularFrameOperator : public Error {
 public:
  using Error::Error;
};

class EmptyProbeSet : public Error {
 public:
  using Error::Error;
};

/// Malformed JSON or a JSON document missing a required field.
class MalformedInput : public Error {
 public:
  using Error::Error;
};

}  // namespace bracketframe
