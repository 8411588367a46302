// Copyright 2026 The qinv Authors
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

#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "qinv/reflection/group.hpp"

namespace qinv {

enum class OutputFormat { kText, kStructured };

struct JobConfig {
  std::string group;  ///< family tag, group file, fixture-deconing or an .arr path
  int rank = 0;
  int k = 0;
  std::string mult = "1";  ///< one value, one per orbit, or the BC triple
  std::optional<int> cutoff;
  std::string module = "Dm";
  OutputFormat format = OutputFormat::kText;
  int threads = 0;  ///< 0 keeps the OpenMP default
  uint64_t seed = 1;
  int cases = 200;
  bool isotypic = false;
  bool vector = false;
  bool trig = false;
  bool bc = false;
  std::string cache_dir;  ///< group reports are reused from here when set
};

struct CommandResult {
  int exit_code = 0;
  std::string output;
};

/// Builds the group named by cfg.group (tag or group file).
ReflectionGroup resolve_group(const JobConfig& cfg);

CommandResult cmd_group(const JobConfig& cfg);
CommandResult cmd_quasi(const JobConfig& cfg);
CommandResult cmd_free(const JobConfig& cfg);
CommandResult cmd_primitive(const JobConfig& cfg);
/// id is an example id or "all".
CommandResult cmd_reproduce(const std::string& id, const JobConfig& cfg);
/// Seeded property suites; name "all" runs every suite.
CommandResult cmd_check(const std::string& name, const JobConfig& cfg);

}  // namespace qinv
