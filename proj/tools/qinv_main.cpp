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

#include <cstdlib>
#include <exception>
#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "qinv/cli/commands.hpp"
#include "qinv/exact/kernels.hpp"

namespace {

/// Options shared by the subcommands that work on a group.
void add_common(CLI::App* cmd, qinv::JobConfig& cfg, bool with_group) {
  if (with_group) {
    cmd->add_option("group", cfg.group, "group tag (A2, B3, I2(6), G3_1_2, S4, ...) or group file")->required();
    cmd->add_option("--rank", cfg.rank, "rank for tags without one (A, B, D, S)");
    cmd->add_option("--k", cfg.k, "order parameter for I2 without one");
  }
  cmd->add_option("--m", cfg.mult, "multiplicity: one value, one per orbit, or m1,m2,m3 for BC");
  cmd->add_option("--cutoff", cfg.cutoff, "degree cutoff")->check(CLI::PositiveNumber);
  cmd->add_option("--format", cfg.format, "text or structured")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, qinv::OutputFormat>{{"text", qinv::OutputFormat::kText},
                                                    {"structured", qinv::OutputFormat::kStructured}},
          CLI::ignore_case));
  cmd->add_option("--threads", cfg.threads, "worker threads (0 keeps the default)")->check(CLI::NonNegativeNumber);
  cmd->add_option("--seed", cfg.seed, "seed for randomized checks");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quasi-invariants, logarithmic derivations and freeness certificates over cyclotomic fields"};
  app.require_subcommand(1);
  qinv::JobConfig cfg;
  if (const char* dir = std::getenv("QINV_CACHE_DIR")) cfg.cache_dir = dir;

  auto* group = app.add_subcommand("group", "order, hyperplanes, n_H and orbits");
  add_common(group, cfg, true);

  auto* quasi = app.add_subcommand("quasi", "dimension tables and bases of quasi-invariant spaces");
  add_common(quasi, cfg, true);
  auto* iso = quasi->add_flag("--isotypic", cfg.isotypic, "V*-isotypic component");
  auto* vec = quasi->add_flag("--vector", cfg.vector, "vector-valued quasi-invariants");
  auto* trig = quasi->add_flag("--trig", cfg.trig, "trigonometric (filtered) quasi-invariants");
  auto* bc = quasi->add_flag("--bc", cfg.bc, "BC_N trigonometric quasi-invariants; --m takes m1,m2,m3");
  iso->excludes(vec)->excludes(trig)->excludes(bc);
  vec->excludes(trig)->excludes(bc);
  trig->excludes(bc);

  auto* free = app.add_subcommand("free", "freeness certificate via Saito's criterion");
  add_common(free, cfg, true);
  free->add_option("--module", cfg.module, "Dm, Dtilde, Cat, cCat, BCCat, cBCCat, cone or affine")
      ->check(CLI::IsMember({"Dm", "Dtilde", "Cat", "cCat", "BCCat", "cBCCat", "cone", "affine"}));

  auto* prim = app.add_subcommand("primitive", "basic invariants and the primitive derivation on quasi-invariants");
  add_common(prim, cfg, true);

  std::string example;
  auto* repro = app.add_subcommand("reproduce", "re-derive a worked example and report PASS/FAIL per row");
  repro->add_option("example", example, "ex-g312, ex-i26, ex-bc2 or all")
      ->required()
      ->check(CLI::IsMember({"ex-g312", "ex-i26", "ex-bc2", "all"}));
  add_common(repro, cfg, false);

  std::string suite = "all";
  auto* check = app.add_subcommand("check", "seeded randomized property suites");
  check->add_option("suite", suite, "suite name or all");
  check->add_option("--cases", cfg.cases, "cases per suite")->check(CLI::PositiveNumber);
  add_common(check, cfg, false);

  CLI11_PARSE(app, argc, argv);
  if (cfg.threads > 0) qinv::set_thread_count(cfg.threads);

  try {
    qinv::CommandResult res;
    if (*group) res = qinv::cmd_group(cfg);
    else if (*quasi) res = qinv::cmd_quasi(cfg);
    else if (*free) res = qinv::cmd_free(cfg);
    else if (*prim) res = qinv::cmd_primitive(cfg);
    else if (*repro) res = qinv::cmd_reproduce(example, cfg);
    else res = qinv::cmd_check(suite, cfg);
    std::cout << res.output;
    return res.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
