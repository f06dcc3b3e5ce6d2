// Copyright 2026 The symgm Authors
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

#ifndef SYMGM_ERRORS_H
#define SYMGM_ERRORS_H

#include <stdexcept>
#include <string>

namespace symgm {

/// Malformed input: bad state file, inconsistent dimensions, invalid parameters.
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// An iterative routine failed to reach its stopping criterion.
struct NonConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A structural check failed (e.g. the kets handed to a SIC routine are not a SIC).
struct VerificationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace symgm

#endif
