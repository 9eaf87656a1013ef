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

#ifndef SCMAD_CONFIG_HPP
#define SCMAD_CONFIG_HPP

#include <cstdint>
#include <map>
#include <string>

namespace scmad {

// Flat key=value configuration. Lines starting with '#' and blank lines
// are ignored. Explicit set() calls (CLI flags) override file values.
class Config {
 public:
  void load_file(const std::string& path);
  void load_text(const std::string& text);
  void set(const std::string& key, const std::string& value);

  bool has(const std::string& key) const;
  std::string get(const std::string& key, const std::string& fallback) const;
  double get_double(const std::string& key, double fallback) const;
  int get_int(const std::string& key, int fallback) const;
  std::uint64_t get_u64(const std::string& key, std::uint64_t fallback) const;

  const std::map<std::string, std::string>& entries() const {
    return entries_;
  }

 private:
  std::map<std::string, std::string> entries_;
};

}  // namespace scmad

#endif  // SCMAD_CONFIG_HPP
