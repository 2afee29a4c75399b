// Copyright 2026 The gradedringlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>

#include "gradedringlab/errors.hpp"
#include "gradedringlab/harness.hpp"
#include "gradedringlab/limits.hpp"
#include "gradedringlab/report.hpp"
#include "gradedringlab/spec_format.hpp"

namespace {

using grl::Json;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitInput = 2;
constexpr int kExitCap = 3;

struct Options {
  std::vector<std::string> specs;
  std::string catalog;
  std::string checks = "all";
  std::string group = "cyclic(2)";
  std::string element;
  bool table = false;
  bool no_timestamp = false;
  unsigned threads = 0;
  grl::Limits limits;
};

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) out.push_back(item);
  return out;
}

void emit(const Json& report, const Options& o) {
  if (o.table)
    std::cout << grl::render_table(report);
  else
    std::cout << report.dump(2) << "\n";
}

std::vector<grl::Subject> subjects(const Options& o) {
  std::vector<grl::Subject> out;
  if (!o.catalog.empty()) {
    if (o.catalog == "all") {
      for (const auto& f : grl::catalog()) out.push_back(grl::subject_from_fixture(f));
    } else {
      for (const auto& name : split(o.catalog)) {
        const grl::Fixture* f = grl::find_fixture(name);
        if (!f) throw grl::Error(grl::ErrorKind::kInvalidArgument, "unknown fixture " + name);
        out.push_back(grl::subject_from_fixture(*f));
      }
    }
  }
  for (const auto& path : o.specs) out.push_back(grl::subject_from_spec(grl::load_spec(path)));
  if (out.empty()) throw grl::Error(grl::ErrorKind::kInvalidArgument, "give --spec FILE or --catalog NAME");
  return out;
}

grl::Subject single_subject(const Options& o) {
  auto all = subjects(o);
  if (all.size() != 1) throw grl::Error(grl::ErrorKind::kInvalidArgument, "this command takes exactly one ring");
  return std::move(all.front());
}

grl::ReportOptions report_options(const Options& o) { return {!o.no_timestamp}; }

int cmd_build(const Options& o) {
  const grl::Subject s = single_subject(o);
  Json report = grl::report_header("build", report_options(o));
  report["build"] = grl::build_section(s.graded);
  emit(report, o);
  return kExitOk;
}

int cmd_analyze(const Options& o) {
  const grl::Subject s = single_subject(o);
  Json report = grl::report_header("analyze", report_options(o));
  report["build"] = grl::build_section(s.graded);
  if (!o.element.empty()) {
    Json lit;
    try {
      lit = Json::parse(o.element);
    } catch (const Json::parse_error& e) {
      throw grl::Error(grl::ErrorKind::kInvalidArgument, std::string("--element is not valid JSON: ") + e.what());
    }
    report["element"] = grl::element_section(s.graded, s.graded.ring().from_literal(lit));
  } else {
    report["analyze"] = grl::analyze_section(s.graded);
  }
  emit(report, o);
  return kExitOk;
}

int cmd_check(const Options& o) {
  const auto subs = subjects(o);
  const auto results = grl::run_checks(subs, split(o.checks), o.threads);
  Json report = grl::report_header("check", report_options(o));
  report["check"] = grl::check_section(subs, results);
  emit(report, o);
  return grl::tally(results).failed == 0 ? kExitOk : kExitFailure;
}

int cmd_search(const Options& o) {
  const grl::Subject s = single_subject(o);
  const grl::FiniteGroup g = grl::parse_group(o.group);
  const grl::Ring& r = s.graded.ring();
  Json report = grl::report_header("search-gradings", report_options(o));
  report["search"] = grl::search_section(r, g, grl::grading_search(r, g));
  emit(report, o);
  return kExitOk;
}

int cmd_catalog(const Options& o) {
  Json report = grl::report_header("catalog", report_options(o));
  report["catalog"] = grl::catalog_section();
  Json checks = Json::array();
  for (const auto& c : grl::check_registry()) checks.push_back({{"id", c.id}, {"statement", c.statement}});
  report["catalog"]["checks"] = checks;
  emit(report, o);
  return kExitOk;
}

int exit_code(grl::ErrorKind k) {
  switch (k) {
    case grl::ErrorKind::kCapExceeded: return kExitCap;
    case grl::ErrorKind::kParse:
    case grl::ErrorKind::kInvalidArgument: return kExitInput;
    default: return kExitFailure;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graded ring laboratory: build, classify and check finite graded rings"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub, bool ring_input) {
    if (ring_input) {
      sub->add_option("--spec", o.specs, "Ring spec file")->check(CLI::ExistingFile);
      sub->add_option("--catalog", o.catalog, "Fixture name, comma list, or 'all'");
    }
    auto* json = sub->add_flag("--json", "Emit JSON (default)");
    sub->add_flag("--table", o.table, "Emit a human-readable table")->excludes(json);
    sub->add_flag("--no-timestamp", o.no_timestamp, "Omit the timestamp field");
    sub->add_option("--max-elements", o.limits.max_elements, "Largest ring enumerated");
    sub->add_option("--max-homogeneous", o.limits.max_homogeneous, "Largest homogeneous part for radical searches");
    sub->add_option("--max-ideals", o.limits.max_ideals, "Most homogeneous right ideals enumerated");
    sub->add_option("--max-search", o.limits.max_search, "Largest ring for grading search");
  };

  auto* build = app.add_subcommand("build", "Construct a graded ring and verify its grading");
  common(build, true);
  auto* analyze = app.add_subcommand("analyze", "Classify elements and decide cleanness properties");
  common(analyze, true);
  analyze->add_option("--element", o.element, "Analyze one element given as a JSON literal");
  auto* check = app.add_subcommand("check", "Run theorem checks");
  common(check, true);
  check->add_option("--checks", o.checks, "Comma list of check ids, or 'all'");
  check->add_option("--threads", o.threads, "Worker threads (0 = hardware concurrency)");
  auto* search = app.add_subcommand("search-gradings", "Enumerate all gradings of a ring by a group");
  common(search, true);
  search->add_option("--group", o.group, "Group expression, e.g. cyclic(2)");
  auto* cat = app.add_subcommand("catalog", "List fixtures and checks");
  common(cat, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInput;
  }

  const grl::ScopedLimits scoped(o.limits);
  try {
    if (build->parsed()) return cmd_build(o);
    if (analyze->parsed()) return cmd_analyze(o);
    if (check->parsed()) return cmd_check(o);
    if (search->parsed()) return cmd_search(o);
    return cmd_catalog(o);
  } catch (const grl::Error& e) {
    std::cerr << "grl: " << grl::error_kind_name(e.kind()) << ": " << e.what() << "\n";
    Json report = grl::report_header(app.get_subcommands().front()->get_name(), report_options(o));
    report["error"] = {{"kind", grl::error_kind_name(e.kind())}, {"message", e.what()}, {"witness", e.witness()}};
    emit(report, o);
    return exit_code(e.kind());
  }
}
