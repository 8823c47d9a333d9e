// Copyright 2026 The zdgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ZDGAME_ERROR_HPP_
#define ZDGAME_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace zdgame {

// Every failure raised by the library carries one of these codes. The values
// are part of the C ABI (see zdgame.h) and must not be renumbered.
enum class ErrorCode : int {
  kDomain = 1,
  kInfeasibleStrategy = 2,
  kDegenerateEqualizer = 3,
  kSingularSystem = 4,
  kNonUniqueStationary = 5,
  kDegenerateGame = 6,
  kDegenerateCloud = 7,
  kIo = 8,
  kInvalidArgument = 9,
  kInternal = 10,
};

const char* ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Parameter outside its mathematical domain (m outside (0,1], r <= c, ...).
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what)
      : Error(ErrorCode::kDomain, what) {}
};

// Names the constraint that a strategy constructor could not satisfy.
enum class Constraint {
  kComponentRange,       // some p_i outside [0, 1]
  kExtortionFactorRange, // s outside [(r - 2c) / r, 1)
  kPhiUpperBound,        // phi above 1 / (s (c - r/2) + r/2)
  kPhiPositive,          // phi <= 0
};

const char* ConstraintName(Constraint c);

class InfeasibleStrategy : public Error {
 public:
  // component is 1-based (p1..p4), or 0 when the violation is not tied to a
  // single component.
  InfeasibleStrategy(Constraint constraint, int component, double value,
                     const std::string& what)
      : Error(ErrorCode::kInfeasibleStrategy, what),
        constraint_(constraint),
        component_(component),
        value_(value) {}

  Constraint constraint() const { return constraint_; }
  int component() const { return component_; }
  double value() const { return value_; }

 private:
  Constraint constraint_;
  int component_;
  double value_;
};

class DegenerateEqualizer : public Error {
 public:
  explicit DegenerateEqualizer(const std::string& what)
      : Error(ErrorCode::kDegenerateEqualizer, what) {}
};

class SingularSystem : public Error {
 public:
  explicit SingularSystem(const std::string& what)
      : Error(ErrorCode::kSingularSystem, what) {}
};

class NonUniqueStationary : public Error {
 public:
  explicit NonUniqueStationary(const std::string& what)
      : Error(ErrorCode::kNonUniqueStationary, what) {}
};

class DegenerateGame : public Error {
 public:
  explicit DegenerateGame(const std::string& what)
      : Error(ErrorCode::kDegenerateGame, what) {}
};

class DegenerateCloud : public Error {
 public:
  explicit DegenerateCloud(const std::string& what)
      : Error(ErrorCode::kDegenerateCloud, what) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(ErrorCode::kIo, what) {}
};

}  // namespace zdgame

#endif  // ZDGAME_ERROR_HPP_
