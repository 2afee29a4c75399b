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

#include <gtest/gtest.h>

#include <filesystem>

#include "gradedringlab/cleanness.hpp"
#include "gradedringlab/spec_format.hpp"

namespace grl {
namespace {

const std::filesystem::path kSpecs = GRL_SPECS_DIR;

std::vector<std::vector<Elem>> components(const GradedRing& gr) { return gr.component_lists(); }

ParseError parse_error(const std::string& text) {
  try {
    parse_spec(text);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "accepted: " << text;
  return ParseError("", 0, 0);
}

TEST(SpecFormat, CheckerboardMatchesCatalog) {
  const ParsedSpec s = load_spec(kSpecs / "checkerboard.grl");
  EXPECT_EQ(s.name, "M2-F2-checkerboard");
  EXPECT_TRUE(s.implication_counterexample);
  ASSERT_EQ(s.expected.size(), 2u);
  EXPECT_EQ(s.expected[1].flag, "graded-nil-clean");
  EXPECT_FALSE(s.expected[1].value);
  const GradedRing cat = find_fixture("M2-F2-checkerboard")->build();
  EXPECT_EQ(components(s.graded), components(cat));
  EXPECT_FALSE(is_graded_nil_clean(s.graded).holds);
}

TEST(SpecFormat, EveryShippedSpecLoads) {
  std::size_t n = 0;
  for (const auto& entry : std::filesystem::directory_iterator(kSpecs)) {
    if (entry.path().extension() != ".grl") continue;
    ++n;
    if (entry.path().filename() == "bad-direct-sum.grl") {
      try {
        load_spec(entry.path());
        ADD_FAILURE() << "bad-direct-sum accepted";
      } catch (const GradingError& e) {
        EXPECT_EQ(e.kind(), ErrorKind::kNotDirectSum);
      }
      continue;
    }
    const ParsedSpec s = load_spec(entry.path());
    const Subject subj = subject_from_spec(s);
    for (const auto& e : s.expected) EXPECT_EQ(compute_flag(s.graded, e.flag), e.value) << entry.path() << e.flag;
    EXPECT_EQ(subj.name, s.name);
  }
  EXPECT_GE(n, 5u);
}

TEST(SpecFormat, Defaults) {
  const ParsedSpec s = parse_spec("gradedringlab-spec v1\nring = zmod(4)\n");
  EXPECT_EQ(s.name, "spec");
  EXPECT_EQ(s.graded.ring().size(), 4u);
  EXPECT_EQ(s.graded.group().order(), 1);
  EXPECT_TRUE(s.expected.empty());
}

TEST(SpecFormat, ExplicitComponentsAndGroupRing) {
  const ParsedSpec t = parse_spec(R"(gradedringlab-spec v1
group C2 = cyclic(2)
ring = triangular(zmod(2), 2)
grading = components(C2, {
  e: [[[0,0],[0,0]], [[1,0],[0,0]], [[0,0],[0,1]], [[1,0],[0,1]]],
  g: [[[0,0],[0,0]], [[0,1],[0,0]]]
})
)");
  EXPECT_EQ(t.graded.component(1).size(), 2u);
  // Components are complete member lists, not generators.
  EXPECT_THROW(parse_spec(R"(gradedringlab-spec v1
group C2 = cyclic(2)
ring = triangular(zmod(2), 2)
grading = components(C2, {
  e: [[[1,0],[0,0]], [[0,0],[0,1]]],
  g: [[[0,1],[0,0]]]
})
)"),
               GradingError);
  EXPECT_TRUE(is_graded_nil_clean(t.graded).holds);

  const ParsedSpec gr = parse_spec(R"(gradedringlab-spec v1
group C2 = cyclic(2)
ring = groupring(zmod(2), C2)
grading = groupring-canonical
)");
  EXPECT_EQ(gr.graded.ring().size(), 4u);
  EXPECT_FALSE(is_graded_nil_clean(gr.graded).holds);
  EXPECT_TRUE(is_graded_clean(gr.graded).holds);
}

TEST(SpecFormat, ErrorPositions) {
  {
    const ParseError e = parse_error("gradedringlab-spec v2\n");
    EXPECT_EQ(e.line(), 1);
  }
  {
    const ParseError e = parse_error("gradedringlab-spec v1\nring = zmod(4)\nexpect graded-nil-clean = maybe\n");
    EXPECT_EQ(e.line(), 3);
    EXPECT_EQ(e.column(), 27);
  }
  {
    const ParseError e = parse_error("gradedringlab-spec v1\nring = matrix(zmod(2), 2)\ngrading = trivial(G)\n");
    EXPECT_EQ(e.line(), 3);
    EXPECT_EQ(e.column(), 19);
  }
  {
    const ParseError e = parse_error("gradedringlab-spec v1\nring = zmod(4\n");
    EXPECT_EQ(e.line(), 3);
  }
  EXPECT_EQ(parse_error("gradedringlab-spec v1\nring = nosuch(2)\n").kind(), ErrorKind::kParse);
  EXPECT_EQ(parse_error("gradedringlab-spec v1\nring = zmod(4)\nexpect no-such-flag = true\n").line(), 3);
}

TEST(SpecFormat, GroupExpressions) {
  EXPECT_EQ(parse_group("cyclic(3)").order(), 3);
  EXPECT_EQ(parse_group("table([e, a], [[e, a], [a, e]])").order(), 2);
  EXPECT_THROW(parse_group("table([e, a], [[e, a], [e, e]])"), Error);
  EXPECT_THROW(parse_group("cyclic("), ParseError);
  EXPECT_GE(parse_group("window(3)").order(), 3);
}

}  // namespace
}  // namespace grl
