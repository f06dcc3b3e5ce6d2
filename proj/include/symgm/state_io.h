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

#ifndef SYMGM_STATE_IO_H
#define SYMGM_STATE_IO_H

#include <optional>
#include <string>

#include "symgm/linalg.h"
#include "symgm/multiset.h"
#include "symgm/permanent.h"

namespace symgm {

/// A state file holds exactly one of
///   {"dim": d, "kets": [[[re, im], ...], ...], "mults": [n_j, ...]}
///   {"dicke_counts": [n00, n01, n10, n11], "theta": t}
///   {"dicke": [[re, im], ...]}   (amplitudes on |N,0>, ..., |N,N>)
/// "mults" may be omitted, meaning all ones.
struct StateSpec {
    std::optional<KetMultiset> multiset;
    std::optional<DickeCounts> counts;
    std::optional<CVec> dicke_amplitudes;
};

/// Throws InputError with a readable message on malformed input.
StateSpec parse_state(const std::string &text);
StateSpec load_state(const std::string &path);

/// The ket multiset behind any of the three forms. Dicke amplitudes go
/// through Majorana extraction.
KetMultiset resolve_multiset(const StateSpec &spec, std::uint64_t seed = 1);

}  // namespace symgm

#endif
