// Copyright 2026 The qtel Authors
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

#ifndef QTEL_ERRORS_H
#define QTEL_ERRORS_H

#include <stdexcept>
#include <string>

namespace qtel {

/// Incompatible dimensions (matrix product, qubit counts, ...).
struct ShapeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Argument outside its mathematical domain (index out of range, bad digit).
struct DomainError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

/// Input data fails a validity check (unnormalized state, commuting pair).
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// An operation's precondition does not hold. Carries the measured deviation.
struct PreconditionError : std::runtime_error {
    PreconditionError(const std::string &what, double deviation)
        : std::runtime_error(what), deviation(deviation) {}
    double deviation;
};

/// A computed result failed its own post-check.
struct InternalConsistencyError : std::logic_error {
    using std::logic_error::logic_error;
};

/// Request exceeds the exhaustive-computation bound.
struct ResourceError : std::length_error {
    using std::length_error::length_error;
};

}  // namespace qtel

#endif  // QTEL_ERRORS_H
