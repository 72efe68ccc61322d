/*
 * Copyright 2026 the isomon authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef ISOMON_LIMITS_HPP
#define ISOMON_LIMITS_HPP

#include <cstddef>

namespace isomon {

/// Budgets for the bounded searches. max_word_length = 0 means "length of the
/// longest input word plus 4", which is enough slack for the derivations the
/// relation families require: commutations are length-preserving and the
/// longest detour inserts a single squared involution.
struct SearchLimits {
  int max_word_length = 0;
  std::size_t max_states = 1'000'000;
  int max_depth = 64;

  int effective_word_length(std::size_t input_length) const {
    if (max_word_length > 0) {
      return max_word_length;
    }
    return static_cast<int>(input_length) + 4;
  }
};

}  // namespace isomon

#endif  // ISOMON_LIMITS_HPP
