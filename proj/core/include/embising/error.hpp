// Copyright 2026 The embising Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace embising {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unknown vertex ids, mismatched assignment domains, malformed graphs.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An exhaustive routine was asked to enumerate beyond its size guard.
class SizeError : public Error {
 public:
  using Error::Error;
};

/// A graph that must be connected is not.
class ConnectivityError : public Error {
 public:
  using Error::Error;
};

/// A graph that must be a tree is not.
class StructureError : public Error {
 public:
  using Error::Error;
};

/// An embedding failed validation where a valid one was required.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A subproblem violates lambda < sigma(V); the original vertex can be
/// fixed by preprocessing instead.
class PreprocessableVertexError : public Error {
 public:
  PreprocessableVertexError(std::string vertex, const std::string& what)
      : Error(what), vertex_(std::move(vertex)) {}
  const std::string& vertex() const noexcept { return vertex_; }

 private:
  std::string vertex_;
};

/// Invalid parameters of a subproblem instance (gamma <= 0, negative sigma).
class InstanceError : public Error {
 public:
  using Error::Error;
};

/// Something that must not happen for valid input did happen (LP reported
/// infeasible, post-solve verification failed).
class InternalError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its contract, such as de-embedding an
/// unsynchronized sample.
class ContractError : public Error {
 public:
  using Error::Error;
};

/// Malformed input file. The message carries the JSON path.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace embising
