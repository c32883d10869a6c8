// Copyright 2026 The jpfs Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <random>

namespace jpfs {

// Independent labeled streams derived from one master seed.
enum class Stream : std::uint32_t {
  kDrop = 1,
  kShadowing = 2,
  kBlockage = 3,
  kInstance = 4,  // test and benchmark instance generation
};

inline std::mt19937_64 make_stream(std::uint64_t master_seed, Stream label) {
  std::seed_seq seq{static_cast<std::uint32_t>(master_seed & 0xffffffffu),
                    static_cast<std::uint32_t>(master_seed >> 32),
                    static_cast<std::uint32_t>(label), 0x6a706673u};
  return std::mt19937_64(seq);
}

}  // namespace jpfs
