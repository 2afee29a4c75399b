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

#include "gradedringlab/report.hpp"

#include <chrono>
#include <ctime>
#include <iomanip>
#include <sstream>

#include "gradedringlab/cleanness.hpp"
#include "gradedringlab/ideal.hpp"
#include "gradedringlab/radicals.hpp"

namespace grl {
namespace {

std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

Json degree_json(const GradedRing& gr, Elem x) {
  const Degree d = gr.degree(x);
  switch (d.kind) {
    case DegreeKind::kZero: return "zero";
    case DegreeKind::kMixed: return "mixed";
    case DegreeKind::kHomogeneous: return gr.labels().name(d.label);
  }
  return nullptr;
}

Json verdict_json(const GradedRing& gr, const Verdict& v) {
  const Ring& r = gr.ring();
  Json out{{"holds", v.holds}, {"checked", v.checked}};
  if (v.witness) {
    const Elem w = *v.witness;
    out["witness"] = {{"element", r.literal(w)},
                      {"degree", degree_json(gr, w)},
                      {"idempotent", r.is_idempotent(w)},
                      {"nilpotent", r.is_nilpotent(w)},
                      {"unit", r.is_unit(w)}};
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

std::string yes_no(const Json& b) { return b.get<bool>() ? "yes" : "no"; }

std::string literal_list(const Json& arr) {
  std::string s;
  for (const auto& x : arr) s += (s.empty() ? "" : " ") + x.dump();
  return s.empty() ? "-" : s;
}

void render_build(std::ostringstream& os, const Json& b) {
  os << "ring " << b["name"].get<std::string>() << ": " << b["ring"]["describe"].get<std::string>() << ", "
     << b["ring"]["size"] << " elements\n";
  os << "grading: " << b["grading"]["kind"].get<std::string>() << " over " << b["grading"]["labels"].size()
     << " labels, homogeneous part " << b["homogeneous_size"] << " elements\n";
  for (const auto& c : b["grading"]["components"])
    os << "  R_" << c["label"].get<std::string>() << ": " << c["size"] << " elements, generators "
       << literal_list(c["generators"]) << "\n";
}

void render_analyze(std::ostringstream& os, const Json& a) {
  for (const auto& c : a["components"]) {
    os << "component " << c["label"].get<std::string>() << "\n";
    os << "  idempotents: " << literal_list(c["idempotents"]) << "\n";
    os << "  nilpotents:  " << literal_list(c["nilpotents"]) << "\n";
    os << "  units:       " << literal_list(c["units"]) << "\n";
  }
  for (const auto& [k, v] : a["verdicts"].items()) {
    if (v.is_boolean()) {
      os << k << ": " << yes_no(v) << "\n";
      continue;
    }
    os << k << ": " << yes_no(v["holds"]);
    if (!v["witness"].is_null()) {
      const Json& w = v["witness"];
      os << "; witness: " << w["element"].dump() << " (degree " << w["degree"].get<std::string>();
      if (w["unit"].get<bool>()) os << ", unit";
      if (w["nilpotent"].get<bool>()) os << ", nilpotent";
      if (w["idempotent"].get<bool>()) os << ", idempotent";
      os << ")";
    }
    os << "\n";
  }
  if (a.contains("radicals")) {
    os << "J = " << literal_list(a["radicals"]["J"]) << "\n";
    if (a["radicals"].contains("Jg")) os << "J^g = " << literal_list(a["radicals"]["Jg"]) << "\n";
  }
}

void render_element(std::ostringstream& os, const Json& e) {
  os << "element " << e["element"].dump() << ": degree " << e["degree"].get<std::string>() << ", square "
     << e["square"].dump() << "\n";
  os << "  idempotent " << yes_no(e["idempotent"]) << ", nilpotency index " << e["nilpotency_index"] << ", inverse "
     << e["inverse"].dump() << "\n";
  for (const char* key : {"nil_clean_decompositions", "graded_nil_clean_decompositions", "graded_clean_decompositions",
                          "gspr_decompositions"}) {
    if (!e.contains(key)) continue;
    os << "  " << key << ": " << e[key].size() << "\n";
    for (const auto& d : e[key]) os << "    " << d.dump() << "\n";
  }
  if (e.contains("nilpotency_criterion")) os << "  nilpotency_criterion: " << e["nilpotency_criterion"].dump() << "\n";
}

void render_check(std::ostringstream& os, const Json& c) {
  std::size_t wf = 7, wc = 5, ws = 6;
  for (const auto& r : c["results"]) {
    wf = std::max(wf, r["fixture"].get<std::string>().size());
    wc = std::max(wc, r["check"].get<std::string>().size());
    ws = std::max(ws, r["status"].get<std::string>().size());
  }
  os << std::left << std::setw(wf + 2) << "fixture" << std::setw(wc + 2) << "check" << std::setw(ws + 2) << "status"
     << "detail\n";
  for (const auto& r : c["results"]) {
    os << std::setw(wf + 2) << r["fixture"].get<std::string>() << std::setw(wc + 2) << r["check"].get<std::string>()
       << std::setw(ws + 2) << r["status"].get<std::string>() << r["detail"].get<std::string>();
    if (!r["witness"].is_null()) os << " " << r["witness"].dump();
    os << "\n";
  }
  const Json& s = c["summary"];
  os << "\nsubjects " << s["subjects"] << ", results " << s["executed"] << ": holds " << s["holds"] << ", vacuous "
     << s["vacuous"] << ", failed-expected " << s["failed-expected"] << ", FAILED " << s["FAILED"] << "\n";
}

void render_search(std::ostringstream& os, const Json& s) {
  os << "ring " << s["ring"].get<std::string>() << " (" << s["size"] << " elements) over group of order "
     << s["group"].size() << "\n";
  os << "additive subgroups " << s["additive_subgroups"] << ", direct-sum families " << s["candidate_families"]
     << ", gradings " << s["gradings"].size() << "\n";
  for (const auto& [k, v] : s["counts"].items()) os << "  " << k << ": " << v << "\n";
  os << "counterexamples to implication-1: " << s["counterexamples"].size() << "\n";
  for (const auto& g : s["counterexamples"]) {
    os << "  grading " << g["index"] << "\n";
    for (const auto& [label, elems] : g["components"].items()) os << "    R_" << label << ": " << literal_list(elems) << "\n";
  }
}

void render_catalog(std::ostringstream& os, const Json& c) {
  for (const auto& f : c["fixtures"]) {
    os << f["name"].get<std::string>() << ": " << f["description"].get<std::string>() << "\n";
    for (const auto& [k, v] : f["expected"].items()) os << "    " << k << " = " << (v.get<bool>() ? "true" : "false") << "\n";
  }
}

}  // namespace

Json report_header(const std::string& command, const ReportOptions& opts) {
  Json out{{"schema", kReportSchema}, {"tool", {{"name", "gradedringlab"}, {"version", kVersion}}}, {"command", command}};
  if (opts.timestamp) out["timestamp"] = utc_now();
  return out;
}

Json element_list_json(const Ring& r, const std::vector<Elem>& elems) {
  Json out = Json::array();
  for (Elem x : elems) out.push_back(r.literal(x));
  return out;
}

Json build_section(const GradedRing& gr) {
  const Ring& r = gr.ring();
  Json comps = Json::array();
  for (Label l = 0; l < gr.num_labels(); ++l)
    comps.push_back({{"label", gr.labels().name(l)},
                     {"size", gr.component(l).size()},
                     {"generators", element_list_json(r, gr.component_generators(l))}});
  return {{"name", gr.name()},
          {"ring", {{"backend", r.backend()}, {"describe", r.describe()}, {"size", r.size()}}},
          {"grading",
           {{"kind", gr.is_group_graded() ? "group" : "s-grading"},
            {"labels", gr.labels().names()},
            {"components", comps}}},
          {"homogeneous_size", gr.homogeneous().size()}};
}

Json analyze_section(const GradedRing& gr) {
  const Ring& r = gr.ring();
  Json comps = Json::array();
  for (Label l = 0; l < gr.num_labels(); ++l) {
    std::vector<Elem> idem, nil, unit;
    for (Elem x : gr.component(l).sorted()) {
      if (r.is_idempotent(x)) idem.push_back(x);
      if (r.is_nilpotent(x)) nil.push_back(x);
      if (r.is_unit(x)) unit.push_back(x);
    }
    comps.push_back({{"label", gr.labels().name(l)},
                     {"idempotents", element_list_json(r, idem)},
                     {"nilpotents", element_list_json(r, nil)},
                     {"units", element_list_json(r, unit)}});
  }
  Json verdicts;
  verdicts["graded-nil-clean"] = verdict_json(gr, is_graded_nil_clean(gr));
  verdicts["graded-strongly-nil-clean"] = verdict_json(gr, is_graded_strongly_nil_clean(gr));
  verdicts["graded-clean"] = verdict_json(gr, is_graded_clean(gr));
  verdicts["graded-2-nil-clean"] = verdict_json(gr, is_graded_2_nil_clean(gr));
  verdicts["nil-clean"] = is_nil_clean_ring(r);
  verdicts["graded-nil"] = is_graded_nil(gr);
  Json radicals{{"J", element_list_json(r, jacobson_radical(r).members.sorted())}};
  if (gr.is_group_graded()) {
    verdicts["identity-nil-clean"] = is_nil_clean_ring(identity_component_ring(gr));
    verdicts["graded-division"] = is_graded_division(gr);
    verdicts["graded-local"] = is_graded_local(gr);
    const GradedRadical jg = graded_jacobson_radical(gr);
    radicals["Jg"] = element_list_json(r, jg.ideal.members.sorted());
    radicals["maximal_homogeneous_right_ideals"] = jg.maximal_count;
    radicals["Jg_cap_Re_equals_J_Re"] = jg.e_component_matches;
  }
  return {{"components", comps}, {"verdicts", verdicts}, {"radicals", radicals}};
}

Json element_section(const GradedRing& gr, Elem x) {
  const Ring& r = gr.ring();
  const auto inv = r.inverse(x);
  Json out{{"element", r.literal(x)},
           {"degree", degree_json(gr, x)},
           {"square", r.literal(r.mul(x, x))},
           {"idempotent", r.is_idempotent(x)},
           {"nilpotency_index", r.nilpotency_index(x)},
           {"inverse", inv ? r.literal(*inv) : Json(nullptr)}};
  Json plain = Json::array();
  for (const auto& d : nil_clean_decompositions(r, x))
    plain.push_back({{"idempotent", r.literal(d.f)}, {"nilpotent", r.literal(d.b)}, {"commuting", d.commuting}});
  out["nil_clean_decompositions"] = plain;
  if (!gr.is_homogeneous(x)) return out;
  Json gnc = Json::array();
  for (const auto& d : graded_nil_clean_element(gr, x))
    gnc.push_back({{"idempotent", r.literal(d.f)}, {"nilpotent", r.literal(d.b)}, {"commuting", d.commuting}});
  Json gclean = Json::array();
  for (const auto& d : graded_clean_element(gr, x))
    gclean.push_back({{"idempotent", r.literal(d.f)}, {"unit", r.literal(d.u)}});
  out["graded_nil_clean_decompositions"] = gnc;
  out["graded_clean_decompositions"] = gclean;
  if (gr.is_group_graded()) {
    const GsprResult g = gspr_decompositions(gr, x);
    Json gspr = Json::array();
    for (const auto& d : g.decompositions) gspr.push_back({{"idempotent", r.literal(d.f)}, {"unit", r.literal(d.u)}});
    out["gspr_decompositions"] = gspr;
    out["nilpotency_criterion"] = g.decompositions.empty() ? Json(nullptr) : Json(check_nilpotency_criterion(gr, x));
  }
  return out;
}

CheckTally tally(const std::vector<CheckResult>& results) {
  CheckTally t;
  for (const auto& r : results) {
    switch (r.status) {
      case CheckStatus::kHolds: ++t.holds; break;
      case CheckStatus::kVacuous: ++t.vacuous; break;
      case CheckStatus::kFailedExpected: ++t.failed_expected; break;
      case CheckStatus::kFailed: ++t.failed; break;
    }
  }
  return t;
}

Json check_section(const std::vector<Subject>& subjects, const std::vector<CheckResult>& results) {
  Json names = Json::array();
  for (const auto& s : subjects) names.push_back(s.name);
  Json rows = Json::array();
  for (const auto& r : results)
    rows.push_back({{"fixture", r.fixture},
                    {"check", r.check},
                    {"status", check_status_name(r.status)},
                    {"detail", r.detail},
                    {"witness", r.witness}});
  const CheckTally t = tally(results);
  return {{"subjects", names},
          {"results", rows},
          {"summary",
           {{"subjects", subjects.size()},
            {"executed", t.total()},
            {"holds", t.holds},
            {"vacuous", t.vacuous},
            {"failed-expected", t.failed_expected},
            {"FAILED", t.failed}}}};
}

Json search_section(const Ring& r, const FiniteGroup& g, const SearchResult& result) {
  Json gradings = Json::array();
  Json counterexamples = Json::array();
  std::size_t gnc = 0, gsnc = 0, gclean = 0, idnc = 0;
  for (std::size_t i = 0; i < result.gradings.size(); ++i) {
    const SearchedGrading& sg = result.gradings[i];
    Json comps;
    for (Label l = 0; l < g.order(); ++l) comps[g.name(l)] = element_list_json(r, sg.components[l]);
    Json entry{{"index", i},
               {"components", comps},
               {"identity-nil-clean", sg.identity_nil_clean},
               {"graded-nil-clean", sg.graded_nil_clean},
               {"graded-strongly-nil-clean", sg.graded_strongly_nil_clean},
               {"graded-clean", sg.graded_clean},
               {"counterexample", sg.counterexample}};
    gnc += sg.graded_nil_clean;
    gsnc += sg.graded_strongly_nil_clean;
    gclean += sg.graded_clean;
    idnc += sg.identity_nil_clean;
    if (sg.counterexample) counterexamples.push_back({{"index", i}, {"components", comps}});
    gradings.push_back(std::move(entry));
  }
  return {{"ring", r.describe()},
          {"size", r.size()},
          {"group", g.names()},
          {"additive_subgroups", result.additive_subgroups},
          {"candidate_families", result.candidate_families},
          {"counts",
           {{"identity-nil-clean", idnc},
            {"graded-nil-clean", gnc},
            {"graded-strongly-nil-clean", gsnc},
            {"graded-clean", gclean}}},
          {"gradings", gradings},
          {"counterexamples", counterexamples}};
}

Json catalog_section() {
  Json fixtures = Json::array();
  for (const auto& f : catalog()) {
    Json expected = Json::object();
    for (const auto& e : f.expected) expected[e.flag] = e.value;
    fixtures.push_back({{"name", f.name},
                        {"description", f.description},
                        {"expected", expected},
                        {"implication_counterexample", f.implication_counterexample}});
  }
  return {{"fixtures", fixtures}};
}

std::string render_table(const Json& report) {
  std::ostringstream os;
  os << "gradedringlab " << report["tool"]["version"].get<std::string>() << " " << report["command"].get<std::string>();
  if (report.contains("timestamp")) os << " " << report["timestamp"].get<std::string>();
  os << "\n";
  if (report.contains("build")) render_build(os, report["build"]);
  if (report.contains("analyze")) render_analyze(os, report["analyze"]);
  if (report.contains("element")) render_element(os, report["element"]);
  if (report.contains("search")) render_search(os, report["search"]);
  if (report.contains("catalog")) render_catalog(os, report["catalog"]);
  if (report.contains("check")) render_check(os, report["check"]);
  if (report.contains("error"))
    os << "error (" << report["error"]["kind"].get<std::string>() << "): " << report["error"]["message"].get<std::string>()
       << "\n";
  return os.str();
}

}  // namespace grl
