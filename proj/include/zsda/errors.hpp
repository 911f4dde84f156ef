// zsda/errors.hpp
//
// Copyright 2026 The zsda authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or
// implied.  See the License for the specific language governing
// permissions and limitations under the License.

#ifndef ZSDA_ERRORS_HPP_
#define ZSDA_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace zsda {

// Root of the library's exception hierarchy.  Callers that only care about
// process exit codes can catch the two direct subtrees:
//   InvalidInput   -> exit code 2 (bad arguments, malformed files, contract
//                     violations detectable before any numerics run)
//   NumericalError -> exit code 3 (well-formed input on which the numerics
//                     could not produce a usable result)
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string &msg) : std::runtime_error(msg) {}
};

class InvalidInput : public Error {
 public:
  explicit InvalidInput(const std::string &msg) : Error(msg) {}
};

class NumericalError : public Error {
 public:
  explicit NumericalError(const std::string &msg) : Error(msg) {}
};

// ---- InvalidInput subtree ------------------------------------------------

// Two operands live on different Grassmannians (D or K differ), or matrix
// shapes passed to a kernel/classifier do not line up.
class DimensionMismatch : public InvalidInput {
 public:
  explicit DimensionMismatch(const std::string &msg) : InvalidInput(msg) {}
};

// A raw basis matrix has numerical rank below its column count.
class RankDeficient : public InvalidInput {
 public:
  explicit RankDeficient(const std::string &msg) : InvalidInput(msg) {}
};

// A normalizer or regression was fitted on an empty descriptor list.
class EmptyTrainingSet : public InvalidInput {
 public:
  explicit EmptyTrainingSet(const std::string &msg) : InvalidInput(msg) {}
};

// Fewer samples than subspace learning needs (K > min(D, n - 1)).
class InsufficientSamples : public InvalidInput {
 public:
  explicit InsufficientSamples(const std::string &msg) : InvalidInput(msg) {}
};

// The data's K-th singular value is numerically zero: the requested number
// of principal directions does not exist.
class DegenerateVariance : public InvalidInput {
 public:
  explicit DegenerateVariance(const std::string &msg) : InvalidInput(msg) {}
};

// The geodesic-flow kernel needs an orthogonal complement of the source
// basis of dimension >= K, i.e. 2K <= D.
class ComplementUnavailable : public InvalidInput {
 public:
  explicit ComplementUnavailable(const std::string &msg) : InvalidInput(msg) {}
};

// Evaluation was asked for a target id the manifest does not contain.
class UnknownTargetId : public InvalidInput {
 public:
  explicit UnknownTargetId(const std::string &msg) : InvalidInput(msg) {}
};

// A scoring or training step needs labels the domain does not provide.
class MissingLabels : public InvalidInput {
 public:
  explicit MissingLabels(const std::string &msg) : InvalidInput(msg) {}
};

// A structurally invalid configuration (bad grid, non-positive counts, ...).
class InvalidConfig : public InvalidInput {
 public:
  explicit InvalidConfig(const std::string &msg) : InvalidInput(msg) {}
};

// File could not be read, written, or parsed.
class IoError : public InvalidInput {
 public:
  explicit IoError(const std::string &msg) : InvalidInput(msg) {}
};

// ---- NumericalError subtree ----------------------------------------------

// The Cayley update's linear system was numerically singular.
class SingularUpdate : public NumericalError {
 public:
  explicit SingularUpdate(const std::string &msg) : NumericalError(msg) {}
};

// Backtracking exhausted its budget without finding a decreasing step.
class StalledLineSearch : public NumericalError {
 public:
  explicit StalledLineSearch(const std::string &msg) : NumericalError(msg) {}
};

// Every kernel value underflowed to zero: the query is too far from the
// training descriptors at this bandwidth.
class DegenerateKernel : public NumericalError {
 public:
  explicit DegenerateKernel(const std::string &msg) : NumericalError(msg) {}
};

}  // namespace zsda

#endif  // ZSDA_ERRORS_HPP_
