// Copyright 2026 The SC-MAD Authors.
//
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

#ifndef SCMAD_UTIL_HPP
#define SCMAD_UTIL_HPP

#include <cstdint>
#include <functional>
#include <string>

namespace scmad {

inline constexpr const char* kVersion = "0.1.0";

std::uint64_t fnv1a64(const std::string& bytes);
std::string to_hex(std::uint64_t value);

std::string read_text_file(const std::string& path);

// Writes via a temporary file and renames, so failed runs leave no
// partial outputs behind.
void write_text_file(const std::string& path, const std::string& content);

// Runs fn(i) for i in [0, count) across up to `threads` workers. Results
// must be written to per-index slots; output is independent of the
// thread count.
void parallel_for(int count, int threads, const std::function<void(int)>& fn);

}  // namespace scmad

#endif  // SCMAD_UTIL_HPP
