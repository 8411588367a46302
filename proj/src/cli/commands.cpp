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

#include "qinv/cli/commands.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "qinv/cli/checks.hpp"
#include "qinv/cli/reproduce.hpp"
#include "qinv/exact/parse.hpp"
#include "qinv/logder/transport.hpp"
#include "qinv/primitive/primitive.hpp"
#include "qinv/quasi/quasi.hpp"

namespace qinv {

namespace {

bool structured(const JobConfig& cfg) { return cfg.format == OutputFormat::kStructured; }

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const int v = std::stoi(item);
    if (v < 0) throw std::invalid_argument("multiplicities must be nonnegative");
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty multiplicity list");
  return out;
}

struct BcTriple {
  int m1, m2, m3;
};

BcTriple parse_bc(const std::string& text) {
  auto v = parse_int_list(text);
  if (v.size() == 1) return {v[0], v[0], v[0]};
  if (v.size() != 3) throw std::invalid_argument("BC multiplicities take three values m1,m2,m3");
  return {v[0], v[1], v[2]};
}

int cutoff_or(const JobConfig& cfg, int fallback) {
  const int c = cfg.cutoff.value_or(fallback);
  if (c < 1) throw std::invalid_argument("cutoff must be at least 1");
  return c;
}

void require_type_b(const ReflectionGroup& g) {
  if (g.spec().family != Family::kB) throw std::invalid_argument("BC computations need a group of type B");
}

/// Multiplicity on B_N whose homogeneous quasi-invariants are the leading terms of the BC ones.
MultFn bc_leading_mult(const ReflectionGroup& g, const BcTriple& t) {
  return mult_on_orbit_of(g, g.var(0), t.m1 + t.m2, t.m3);
}

std::string vec_text(const std::vector<int>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

std::string group_report(const ReflectionGroup& g, bool keyed) {
  std::ostringstream os;
  const auto& hs = g.hyperplanes();
  if (keyed) {
    os << "group " << g.label() << "\n";
    os << "order " << g.order() << "\n";
    os << "rank " << g.rank() << "\n";
    os << "conductor " << g.field()->conductor() << "\n";
    os << "hyperplanes " << hs.size() << "\n";
    for (size_t i = 0; i < hs.size(); ++i)
      os << "hyperplane." << (i + 1) << " " << hs[i].alpha.to_string() << " n_H=" << hs[i].order
         << " orbit=" << (hs[i].orbit + 1) << "\n";
    os << "orbits " << g.num_orbits() << "\n";
    for (int o = 0; o < g.num_orbits(); ++o)
      os << "orbit." << (o + 1) << " size=" << g.orbits()[o].size() << " n_H=" << hs[g.orbits()[o][0]].order
         << "\n";
    return os.str();
  }
  os << g.label() << ": order " << g.order() << ", rank " << g.rank() << ", coefficients in Q(zeta_"
     << g.field()->conductor() << ")\n";
  os << hs.size() << " reflection hyperplanes in " << g.num_orbits() << " orbit(s)\n";
  for (int o = 0; o < g.num_orbits(); ++o) {
    os << "  orbit " << (o + 1) << " (n_H = " << hs[g.orbits()[o][0]].order << ", " << g.orbits()[o].size()
       << " hyperplanes):";
    for (int h : g.orbits()[o]) os << "  " << hs[h].alpha.to_string();
    os << "\n";
  }
  os << "multiplicities are given per orbit in this order\n";
  return os.str();
}

std::string cache_file(const JobConfig& cfg, const std::string& label) {
  std::string safe;
  for (char c : label) safe += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
  return cfg.cache_dir + "/group-" + safe + (structured(cfg) ? ".kv" : ".txt");
}

std::string certificate_text(const FreenessCertificate& cert) {
  std::ostringstream os;
  os << cert.label << "\n";
  os << "  verdict:    " << (cert.pass ? "PASS" : "FAIL") << " (" << cert.reason << ")\n";
  os << "  exponents:  " << vec_text(cert.exponents) << "  (sum " << cert.exponent_sum() << ", target "
     << cert.target_degree << ")\n";
  if (cert.pass) os << "  det / prod alpha^r = " << cert.scalar.to_string() << "\n";
  if (!cert.pass && !cert.residual.is_zero()) os << "  residual:   " << cert.residual.to_string() << "\n";
  for (size_t i = 0; i < cert.basis.size(); ++i) os << "  theta_" << (i + 1) << " = " << cert.basis[i].to_string() << "\n";
  return os.str();
}

CommandResult certificate_result(const JobConfig& cfg, const FreenessCertificate& cert) {
  return {cert.pass ? 0 : 1, structured(cfg) ? serialize_certificate(cert) : certificate_text(cert)};
}

}  // namespace

ReflectionGroup resolve_group(const JobConfig& cfg) {
  if (cfg.group.empty()) throw std::invalid_argument("no group given");
  if (std::filesystem::is_regular_file(cfg.group)) return ReflectionGroup::build(read_group_file(cfg.group));
  return ReflectionGroup::build(parse_group_tag(cfg.group, cfg.rank, cfg.k));
}

CommandResult cmd_group(const JobConfig& cfg) {
  if (!cfg.cache_dir.empty()) {
    GroupSpec spec = std::filesystem::is_regular_file(cfg.group) ? read_group_file(cfg.group)
                                                                 : parse_group_tag(cfg.group, cfg.rank, cfg.k);
    const std::string path = cache_file(cfg, spec.label);
    if (std::ifstream in(path); in) {
      std::stringstream ss;
      ss << in.rdbuf();
      return {0, ss.str()};
    }
    std::string text = group_report(resolve_group(cfg), structured(cfg));
    std::filesystem::create_directories(cfg.cache_dir);
    std::ofstream(path) << text;
    return {0, text};
  }
  return {0, group_report(resolve_group(cfg), structured(cfg))};
}

CommandResult cmd_quasi(const JobConfig& cfg) {
  const ReflectionGroup g = resolve_group(cfg);
  const int cutoff = cutoff_or(cfg, 8);
  std::ostringstream os;
  const bool keyed = structured(cfg);
  std::vector<int> dims;
  std::vector<std::vector<std::string>> bases(cutoff + 1);
  std::vector<int> gr_dims;
  std::string kind = "quasi";

  if (cfg.bc || cfg.trig) {
    GradedSubspace space;
    if (cfg.bc) {
      require_type_b(g);
      BcTriple t = parse_bc(cfg.mult);
      space = bc_trig_quasi_space(g.rank(), t.m1, t.m2, t.m3, cutoff);
      kind = "bc_trig(" + std::to_string(t.m1) + "," + std::to_string(t.m2) + "," + std::to_string(t.m3) + ")";
    } else {
      space = trig_quasi_space(g, parse_mult(g, cfg.mult), cutoff);
      kind = "trig";
    }
    GradedSubspace gr = leading_term_space(space);
    for (int d = 0; d <= cutoff; ++d) {
      dims.push_back(space.dim(d));
      gr_dims.push_back(gr.dim(d));
      for (const auto& p : space.new_at(d)) bases[d].push_back(p.to_string());
    }
  } else {
    MultFn m = parse_mult(g, cfg.mult);
    for (int d = 0; d <= cutoff; ++d) {
      if (cfg.vector) {
        kind = "vector";
        for (const auto& t : vector_quasi_space(g, m, d)) bases[d].push_back(Derivation(t).to_string());
      } else if (cfg.isotypic) {
        kind = "isotypic_Vstar";
        for (const auto& p : quasi_isotypic(g, m, d, vstar_character(g), g.rank())) bases[d].push_back(p.to_string());
      } else {
        for (const auto& p : quasi_space(g, m, d)) bases[d].push_back(p.to_string());
      }
      dims.push_back(static_cast<int>(bases[d].size()));
    }
  }

  bool any_positive = false;
  for (int d = 1; d <= cutoff; ++d) any_positive = any_positive || dims[d] > 0;
  if (keyed) {
    os << "group " << g.label() << "\n";
    os << "space " << kind << "\n";
    os << "multiplicity " << cfg.mult << "\n";
    os << "cutoff " << cutoff << "\n";
    for (int d = 0; d <= cutoff; ++d) {
      os << "dim." << d << " " << dims[d] << "\n";
      if (!gr_dims.empty()) os << "gr_dim." << d << " " << gr_dims[d] << "\n";
    }
    for (int d = 0; d <= cutoff; ++d)
      for (size_t i = 0; i < bases[d].size(); ++i) os << "basis." << d << "." << (i + 1) << " " << bases[d][i] << "\n";
  } else {
    os << g.label() << ", " << kind << " space, m = " << cfg.mult << "\n";
    os << (gr_dims.empty() ? "degree  dim\n" : "degree  dim(filtered)  dim(gr)\n");
    for (int d = 0; d <= cutoff; ++d) {
      os << std::setw(6) << d << "  " << std::setw(3) << dims[d];
      if (!gr_dims.empty()) os << "            " << std::setw(3) << gr_dims[d];
      os << "\n";
    }
    for (int d = 0; d <= cutoff; ++d)
      for (const auto& b : bases[d]) os << "  [" << d << "] " << b << "\n";
  }
  if (!any_positive) os << "warning: no nonzero element in positive degree up to cutoff " << cutoff << "\n";
  return {0, os.str()};
}

CommandResult cmd_free(const JobConfig& cfg) {
  const std::string& mod = cfg.module;
  if (mod == "cone" || mod == "affine") {
    ArrangementFixture fx = cfg.group == "fixture-deconing"
                                ? parse_arrangement_fixture(deconing_fixture_text(), bc_field())
                                : read_arrangement_fixture(cfg.group, bc_field());
    return certificate_result(cfg, mod == "cone" ? coned_free_check(fx.arrangement, fx.derivations)
                                                 : affine_free_check(fx.arrangement, fx.derivations));
  }
  const ReflectionGroup g = resolve_group(cfg);
  if (mod == "BCCat" || mod == "cBCCat") {
    require_type_b(g);
    BcTriple t = parse_bc(cfg.mult);
    int cutoff = cfg.cutoff.value_or(0);
    if (cutoff == 0) cutoff = certify_dm(g, bc_leading_mult(g, t)).exponents.back();
    auto basis = bc_catalan_basis(g, t.m1, t.m2, t.m3, cutoff_or(cfg, cutoff));
    MultiArrangement arr = bc_catalan(g.rank(), t.m1, t.m2, t.m3);
    return certificate_result(cfg, mod == "cBCCat" ? coned_free_check(arr, basis) : affine_free_check(arr, basis));
  }
  MultFn m = parse_mult(g, cfg.mult);
  if (mod == "Dm") return certificate_result(cfg, certify_dm(g, m));
  if (mod == "Dtilde") return certificate_result(cfg, certify_dtilde(g, m));
  if (mod == "Cat" || mod == "cCat") {
    int cutoff = cfg.cutoff.value_or(0);
    if (cutoff == 0) cutoff = certify_dm(g, m).exponents.back();
    auto basis = catalan_basis(g, m, cutoff_or(cfg, cutoff));
    MultiArrangement arr = catalan_arrangement(g, m);
    return certificate_result(cfg, mod == "cCat" ? coned_free_check(arr, basis) : affine_free_check(arr, basis));
  }
  throw std::invalid_argument("unknown module '" + mod + "' (Dm, Dtilde, Cat, cCat, BCCat, cBCCat, cone, affine)");
}

CommandResult cmd_primitive(const JobConfig& cfg) {
  const ReflectionGroup g = resolve_group(cfg);
  MultFn m = parse_mult(g, cfg.mult);
  const int cutoff = cutoff_or(cfg, 12);
  BasicInvariants bi = basic_invariants(g);
  std::ostringstream os;
  os << (structured(cfg) ? "group " : "") << g.label() << "\n";
  os << bi.report();
  if (!bi.top_unique) {
    os << "verdict FAIL primitive derivation not unique up to scalar\n";
    return {1, os.str()};
  }
  auto rows = primitive_rank_table(g, bi, m, cutoff);
  bool ok = true;
  if (!structured(cfg)) os << "degree  dim Q_m^V*  dim Q_{m-1}^V*  rank  lands\n";
  for (const auto& r : rows) {
    const bool row_ok = r.source_dim == r.target_dim && r.rank == r.source_dim && r.lands_in_target;
    ok = ok && row_ok;
    if (structured(cfg)) {
      os << "row." << r.degree << " source=" << r.source_dim << " target=" << r.target_dim << " rank=" << r.rank
         << " lands=" << (r.lands_in_target ? 1 : 0) << "\n";
    } else {
      os << std::setw(6) << r.degree << "  " << std::setw(11) << r.source_dim << "  " << std::setw(14) << r.target_dim
         << "  " << std::setw(4) << r.rank << "  " << (r.lands_in_target ? "yes" : "no") << "\n";
    }
  }
  os << "verdict " << (ok ? "PASS" : "FAIL") << "\n";
  return {ok ? 0 : 1, os.str()};
}

CommandResult cmd_reproduce(const std::string& id, const JobConfig&) {
  std::vector<std::string> ids = id == "all" ? example_ids() : std::vector<std::string>{id};
  CommandResult res;
  for (const auto& e : ids) {
    Reproduction rep = reproduce_example(e);
    res.output += rep.to_text();
    if (!rep.pass()) res.exit_code = 1;
  }
  return res;
}

CommandResult cmd_check(const std::string& name, const JobConfig& cfg) {
  std::vector<std::string> names = name == "all" ? suite_names() : std::vector<std::string>{name};
  CommandResult res;
  for (const auto& n : names) {
    SuiteResult r = run_suite(n, cfg.seed, cfg.cases);
    res.output += "suite " + r.name + " seed " + std::to_string(cfg.seed) + " cases " + std::to_string(r.cases) +
                  " failures " + std::to_string(r.failures) + " " + (r.pass() ? "PASS" : "FAIL");
    if (!r.first_failure.empty()) res.output += " first: " + r.first_failure;
    res.output += "\n";
    if (!r.pass()) res.exit_code = 1;
  }
  return res;
}

}  // namespace qinv
