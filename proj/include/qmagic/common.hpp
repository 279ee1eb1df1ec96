// Copyright 2026 The qmagic Authors
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

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qmagic {

using i64 = std::int64_t;

enum class ErrorKind {
    InvalidModulus,
    InvalidPrime,
    RingMismatch,
    NotAUnit,
    NotABasis,
    ShapeMismatch,
    DenseLimit,
    NoncommutingPair,
    InconsistentPhase,
    NotIndependent,
    BudgetExceeded,
    InvalidRegion,
    OutOfRange,
    Parse,
    Internal,
};

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string &what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

  private:
    ErrorKind kind_;
};

const char *error_kind_name(ErrorKind kind);

// Largest q^n handled by dense routines.
constexpr i64 kDenseLimit = 20000;

// Global logarithm base for all entropic quantities. Base 0 means natural log.
double log_base();
void set_log_base(double base);
// Converts a value in nats to the configured base.
double from_nats(double nats);
double log_b(double x);

inline i64 mod(i64 a, i64 m) {
    i64 r = a % m;
    return r < 0 ? r + m : r;
}

i64 gcd(i64 a, i64 b);
i64 lcm(i64 a, i64 b);
i64 ipow(i64 base, int exp);

}  // namespace qmagic
