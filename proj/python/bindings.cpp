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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gradedringlab/cleanness.hpp"
#include "gradedringlab/errors.hpp"
#include "gradedringlab/harness.hpp"
#include "gradedringlab/limits.hpp"
#include "gradedringlab/report.hpp"
#include "gradedringlab/spec_format.hpp"

namespace py = pybind11;

namespace {

// Reports cross the boundary as JSON text; the Python package decodes them.
std::string dump(const grl::Json& j) { return j.dump(); }

grl::Subject subject(const std::string& fixture, const std::string& spec_text) {
  if (!spec_text.empty()) return grl::subject_from_spec(grl::parse_spec(spec_text));
  const grl::Fixture* f = grl::find_fixture(fixture);
  if (!f) throw grl::Error(grl::ErrorKind::kInvalidArgument, "unknown fixture " + fixture);
  return grl::subject_from_fixture(*f);
}

std::string verdict(const grl::GradedRing& gr, const grl::Verdict& v) {
  grl::Json out{{"holds", v.holds}, {"checked", v.checked}, {"witness", nullptr}};
  if (v.witness) out["witness"] = gr.ring().literal(*v.witness);
  return out.dump();
}

}  // namespace

PYBIND11_MODULE(_gradedringlab, m) {
  m.doc() = "Finite graded rings: construction, cleanness decisions, theorem checks";
  m.attr("__version__") = grl::kVersion;

  static py::exception<grl::Error> error(m, "GradedRingError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const grl::Error& e) {
      PyErr_SetString(error.ptr(), (std::string(grl::error_kind_name(e.kind())) + ": " + e.what()).c_str());
    }
  });

  py::class_<grl::GradedRing>(m, "GradedRing")
      .def_property_readonly("name", &grl::GradedRing::name)
      .def_property_readonly("size", [](const grl::GradedRing& g) { return g.ring().size(); })
      .def_property_readonly("labels", [](const grl::GradedRing& g) { return g.labels().names(); })
      .def_property_readonly("is_group_graded", &grl::GradedRing::is_group_graded)
      .def("build_json", [](const grl::GradedRing& g) { return dump(grl::build_section(g)); })
      .def("analyze_json", [](const grl::GradedRing& g) { return dump(grl::analyze_section(g)); })
      .def("element_json",
           [](const grl::GradedRing& g, const std::string& literal) {
             return dump(grl::element_section(g, g.ring().from_literal(grl::Json::parse(literal))));
           })
      .def("graded_nil_clean_json", [](const grl::GradedRing& g) { return verdict(g, grl::is_graded_nil_clean(g)); })
      .def("graded_strongly_nil_clean_json",
           [](const grl::GradedRing& g) { return verdict(g, grl::is_graded_strongly_nil_clean(g)); })
      .def("graded_clean_json", [](const grl::GradedRing& g) { return verdict(g, grl::is_graded_clean(g)); })
      .def("flag", &grl::compute_flag, py::arg("flag"));

  m.def("fixture_names", [] {
    std::vector<std::string> out;
    for (const auto& f : grl::catalog()) out.push_back(f.name);
    return out;
  });
  m.def("flag_names", &grl::flag_names);
  m.def("check_ids", [] {
    std::vector<std::string> out;
    for (const auto& c : grl::check_registry()) out.push_back(c.id);
    return out;
  });
  m.def("fixture", [](const std::string& name) { return subject(name, "").graded; }, py::arg("name"));
  m.def("parse_spec", [](const std::string& text) { return grl::parse_spec(text).graded; }, py::arg("text"));
  m.def(
      "check_json",
      [](const std::vector<std::string>& fixtures, const std::vector<std::string>& specs,
         const std::vector<std::string>& checks, unsigned threads) {
        std::vector<grl::Subject> subs;
        for (const auto& f : fixtures) subs.push_back(subject(f, ""));
        for (const auto& s : specs) subs.push_back(subject("", s));
        std::vector<grl::CheckResult> results;
        {
          py::gil_scoped_release release;
          results = grl::run_checks(subs, checks, threads);
        }
        return dump(grl::check_section(subs, results));
      },
      py::arg("fixtures"), py::arg("specs"), py::arg("checks"), py::arg("threads") = 0);
  m.def(
      "search_json",
      [](const grl::GradedRing& g, const std::string& group) {
        const grl::FiniteGroup grp = grl::parse_group(group);
        return dump(grl::search_section(g.ring(), grp, grl::grading_search(g.ring(), grp)));
      },
      py::arg("ring"), py::arg("group"));
}
