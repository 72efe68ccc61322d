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

#ifndef ISOMON_CLI_HPP
#define ISOMON_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace isomon {

/// Dispatches one command line. Exit codes: 0 all checks pass, 1 a check is
/// refuted or fails, 2 inconclusive (limits), 3 usage error.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace isomon

#endif  // ISOMON_CLI_HPP
