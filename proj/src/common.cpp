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

#include "qmagic/common.hpp"

#include <cmath>
#include <numeric>

namespace qmagic {

namespace {
double g_log_base = 2.0;
}

const char *error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidModulus: return "invalid-modulus";
        case ErrorKind::InvalidPrime: return "invalid-prime";
        case ErrorKind::RingMismatch: return "ring-mismatch";
        case ErrorKind::NotAUnit: return "not-a-unit";
        case ErrorKind::NotABasis: return "not-a-basis";
        case ErrorKind::ShapeMismatch: return "shape-mismatch";
        case ErrorKind::DenseLimit: return "dense-limit";
        case ErrorKind::NoncommutingPair: return "noncommuting-pair";
        case ErrorKind::InconsistentPhase: return "inconsistent-phase";
        case ErrorKind::NotIndependent: return "not-independent";
        case ErrorKind::BudgetExceeded: return "budget-exceeded";
        case ErrorKind::InvalidRegion: return "invalid-region";
        case ErrorKind::OutOfRange: return "out-of-range";
        case ErrorKind::Parse: return "parse-error";
        case ErrorKind::Internal: return "internal-error";
    }
    return "unknown";
}

double log_base() { return g_log_base; }

void set_log_base(double base) {
    if (!(base == 0.0 || (base > 0.0 && base != 1.0))) {
        throw Error(ErrorKind::OutOfRange, "log base must be positive and not 1");
    }
    g_log_base = base;
}

double from_nats(double nats) {
    if (g_log_base == 0.0) return nats;
    return nats / std::log(g_log_base);
}

double log_b(double x) { return from_nats(std::log(x)); }

i64 gcd(i64 a, i64 b) { return std::gcd(a, b); }

i64 lcm(i64 a, i64 b) { return std::lcm(a, b); }

i64 ipow(i64 base, int exp) {
    i64 r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

}  // namespace qmagic
