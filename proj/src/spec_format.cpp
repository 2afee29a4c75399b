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

#include "gradedringlab/spec_format.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "gradedringlab/constructions.hpp"
#include "gradedringlab/ideal.hpp"
#include "gradedringlab/rings.hpp"

namespace grl {
namespace {

enum class Tok { kName, kInt, kString, kPunct, kEnd };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

std::vector<Token> tokenize(std::string_view src, int first_line) {
  std::vector<Token> out;
  int line = first_line, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    const char c = src[i];
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    const int l = line, k = col;
    std::size_t j = i;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_' || src[j] == '-')) ++j;
      out.push_back({Tok::kName, std::string(src.substr(i, j - i)), l, k});
    } else if (std::isdigit(static_cast<unsigned char>(c)) ||
               (c == '-' && j + 1 < src.size() && std::isdigit(static_cast<unsigned char>(src[j + 1])))) {
      ++j;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Tok::kInt, std::string(src.substr(i, j - i)), l, k});
    } else if (c == '"') {
      ++j;
      while (j < src.size() && src[j] != '"' && src[j] != '\n') ++j;
      if (j == src.size() || src[j] != '"') throw ParseError("unterminated string", l, k);
      ++j;
      out.push_back({Tok::kString, std::string(src.substr(i + 1, j - i - 2)), l, k});
    } else if (std::string_view("()[]{},=:-").find(c) != std::string_view::npos) {
      ++j;
      out.push_back({Tok::kPunct, std::string(1, c), l, k});
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", l, k);
    }
    advance(j - i);
  }
  out.push_back({Tok::kEnd, "", line, col});
  return out;
}

struct RingValue {
  Ring ring;
  std::optional<GradedRing> canonical;
};

class Parser {
 public:
  Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  ParsedSpec parse_file() {
    std::string name;
    std::vector<ExpectedFlag> expected;
    bool refutes = false;
    std::optional<RingValue> ring;
    std::optional<GradedRing> graded;
    while (peek().kind != Tok::kEnd) {
      const Token& kw = expect_name();
      if (kw.text == "name") {
        expect("=");
        const Token& s = next();
        if (s.kind != Tok::kString) fail("expected a quoted name", s);
        name = s.text;
      } else if (kw.text == "group") {
        const Token& id = expect_name();
        expect("=");
        if (groups_.count(id.text) || groupoids_.count(id.text)) fail("duplicate name " + id.text, id);
        groups_.emplace(id.text, group());
      } else if (kw.text == "groupoid") {
        const Token& id = expect_name();
        expect("=");
        if (groups_.count(id.text) || groupoids_.count(id.text)) fail("duplicate name " + id.text, id);
        groupoids_.emplace(id.text, groupoid());
      } else if (kw.text == "ring") {
        if (ring) fail("ring declared twice", kw);
        expect("=");
        ring = ring_expr();
      } else if (kw.text == "grading") {
        if (graded) fail("grading declared twice", kw);
        if (!ring) fail("grading before ring", kw);
        expect("=");
        graded = grading_expr(*ring);
      } else if (kw.text == "expect") {
        const Token& flag = expect_name();
        const auto& names = flag_names();
        if (std::find(names.begin(), names.end(), flag.text) == names.end())
          fail("unknown flag " + flag.text, flag);
        expect("=");
        const Token& v = expect_name();
        if (v.text != "true" && v.text != "false") fail("expected true or false", v);
        expected.push_back({flag.text, v.text == "true"});
      } else if (kw.text == "refutes") {
        const Token& what = expect_name();
        if (what.text != "implication-1") fail("only implication-1 can be marked as refuted", what);
        refutes = true;
      } else {
        fail("unknown statement " + kw.text, kw);
      }
    }
    if (!ring) fail("missing ring statement", peek());
    if (!graded) graded = trivial_grading(ring->ring, cyclic_group(1));
    if (name.empty()) name = "spec";
    return ParsedSpec{name, graded->with_name(name), std::move(expected), refutes, {}};
  }

  FiniteGroup group() {
    const Token& t = expect_name();
    if (t.text == "cyclic") {
      expect("(");
      const int n = integer(1, 1 << 12);
      expect(")");
      return cyclic_group(n);
    }
    if (t.text == "window") {
      expect("(");
      const int r = integer(0, 1 << 11);
      expect(")");
      return integer_window(r);
    }
    if (t.text == "table") {
      auto [names, rows] = table();
      std::vector<std::vector<Label>> tab;
      for (const auto& row : rows) {
        std::vector<Label> r;
        for (const auto& [cell, tok] : row) {
          if (!cell) fail("group tables cannot have undefined entries", tok);
          r.push_back(*cell);
        }
        tab.push_back(std::move(r));
      }
      return guarded(t, [&] { return FiniteGroup(std::move(tab), names); });
    }
    auto it = groups_.find(t.text);
    if (it == groups_.end()) fail("unknown group " + t.text, t);
    return it->second;
  }

  void expect_end() {
    if (peek().kind != Tok::kEnd) fail("unexpected trailing input", peek());
  }

 private:
  using Cell = std::pair<std::optional<Label>, Token>;

  [[noreturn]] void fail(const std::string& what, const Token& at) {
    throw ParseError(what, at.line, at.column);
  }

  const Token& peek() const { return toks_[pos_]; }
  const Token& next() {
    const Token& t = toks_[pos_];
    if (t.kind != Tok::kEnd) ++pos_;
    return t;
  }
  bool accept(std::string_view p) {
    if (peek().kind == Tok::kPunct && peek().text == p) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(std::string_view p) {
    if (!accept(p)) fail("expected '" + std::string(p) + "'", peek());
  }
  const Token& expect_name() {
    const Token& t = next();
    if (t.kind != Tok::kName) fail("expected a name", t);
    return t;
  }
  int integer(long long lo, long long hi) {
    const Token& t = next();
    if (t.kind != Tok::kInt) fail("expected an integer", t);
    long long v = 0;
    try {
      v = std::stoll(t.text);
    } catch (const std::exception&) {
      fail("integer out of range", t);
    }
    if (v < lo || v > hi) fail("integer out of range [" + std::to_string(lo) + ", " + std::to_string(hi) + "]", t);
    return static_cast<int>(v);
  }
  // Group element names may be words or integers (window groups use -r..r).
  const Token& label_token() {
    const Token& t = next();
    if (t.kind != Tok::kName && t.kind != Tok::kInt) fail("expected an element name", t);
    return t;
  }

  // Invalid constructions are input errors reported at the offending token.
  template <typename F>
  auto guarded(const Token& at, F&& f) -> decltype(f()) {
    try {
      return f();
    } catch (const GradingError&) {
      throw;
    } catch (const ParseError&) {
      throw;
    } catch (const CapExceeded&) {
      throw;
    } catch (const Error& e) {
      fail(e.what(), at);
    }
  }

  std::pair<std::vector<std::string>, std::vector<std::vector<Cell>>> table() {
    expect("(");
    expect("[");
    std::vector<std::string> names;
    std::map<std::string, Label> index;
    do {
      const Token& n = label_token();
      if (!index.emplace(n.text, static_cast<Label>(names.size())).second) fail("duplicate element " + n.text, n);
      names.push_back(n.text);
    } while (accept(","));
    expect("]");
    expect(",");
    expect("[");
    std::vector<std::vector<Cell>> rows;
    do {
      const Token& open = peek();
      expect("[");
      std::vector<Cell> row;
      do {
        if (peek().kind == Tok::kPunct && peek().text == "-") {
          row.emplace_back(std::nullopt, next());
          continue;
        }
        const Token& n = label_token();
        auto it = index.find(n.text);
        if (it == index.end()) fail("unknown element " + n.text, n);
        row.emplace_back(it->second, n);
      } while (accept(","));
      expect("]");
      if (row.size() != names.size()) fail("row length differs from the number of elements", open);
      rows.push_back(std::move(row));
    } while (accept(","));
    expect("]");
    expect(")");
    if (rows.size() != names.size()) fail("table must have one row per element", peek());
    return {std::move(names), std::move(rows)};
  }

  PartialGroupoid groupoid() {
    const Token& t = peek();
    if (t.kind == Tok::kName && t.text == "brandt") {
      next();
      expect("(");
      const int n = integer(1, 16);
      expect(")");
      return brandt_groupoid(n);
    }
    if (t.kind == Tok::kName && t.text == "table") {
      next();
      auto [names, rows] = table();
      std::vector<std::vector<std::optional<Label>>> tab;
      for (const auto& row : rows) {
        std::vector<std::optional<Label>> r;
        for (const auto& cell : row) r.push_back(cell.first);
        tab.push_back(std::move(r));
      }
      return guarded(t, [&] { return PartialGroupoid(std::move(tab), names); });
    }
    if (t.kind == Tok::kName) {
      if (auto it = groupoids_.find(t.text); it != groupoids_.end()) {
        next();
        return it->second;
      }
    }
    return PartialGroupoid::from_group(group());
  }

  Json literal() {
    const Token& t = next();
    if (t.kind == Tok::kInt) {
      try {
        return std::stoll(t.text);
      } catch (const std::exception&) {
        fail("integer out of range", t);
      }
    }
    if (t.kind != Tok::kPunct || t.text != "[") fail("expected an element literal", t);
    Json arr = Json::array();
    if (accept("]")) return arr;
    do arr.push_back(literal());
    while (accept(","));
    expect("]");
    return arr;
  }

  Elem element(const Ring& r) {
    const Token at = peek();
    const Json lit = literal();
    return guarded(at, [&] { return r.from_literal(lit); });
  }

  std::vector<Elem> element_list(const Ring& r) {
    expect("[");
    std::vector<Elem> out;
    if (accept("]")) return out;
    do out.push_back(element(r));
    while (accept(","));
    expect("]");
    return out;
  }

  std::vector<Label> label_list(const std::function<std::optional<Label>(const std::string&)>& find) {
    expect("[");
    std::vector<Label> out;
    if (accept("]")) return out;
    do {
      const Token& n = label_token();
      auto l = find(n.text);
      if (!l) fail("unknown element " + n.text, n);
      out.push_back(*l);
    } while (accept(","));
    expect("]");
    return out;
  }

  bool at_group_start() const {
    const Token& t = peek();
    if (t.kind != Tok::kName) return false;
    return t.text == "cyclic" || t.text == "window" || t.text == "table" || groups_.count(t.text);
  }

  // A base grading argument: either a group (trivial grading) or a grading.
  GradedRing base_grading(const RingValue& r) {
    if (at_group_start()) return trivial_grading(r.ring, group());
    return grading_expr(r);
  }

  RingValue ring_expr() {
    const Token& t = expect_name();
    const std::string& k = t.text;
    if (k == "zmod" || k == "boolean") {
      expect("(");
      const int n = integer(1, k == "zmod" ? (1 << 20) : 20);
      expect(")");
      return {guarded(t, [&] { return k == "zmod" ? ring_zmod(n) : ring_boolean(n); }), std::nullopt};
    }
    if (k == "zero") {
      expect("(");
      expect(")");
      return {zero_ring(), std::nullopt};
    }
    if (k == "matrix" || k == "triangular" || k == "truncpoly") {
      expect("(");
      RingValue base = ring_expr();
      expect(",");
      const int n = integer(1, 64);
      expect(")");
      return {guarded(t, [&] {
                if (k == "matrix") return matrix_ring(base.ring, n);
                if (k == "triangular") return triangular_ring(base.ring, n);
                return truncated_polynomial_ring(base.ring, n);
              }),
              std::nullopt};
    }
    if (k == "product") {
      expect("(");
      std::vector<Ring> factors;
      do factors.push_back(ring_expr().ring);
      while (accept(","));
      expect(")");
      return {guarded(t, [&] { return product_ring(factors); }), std::nullopt};
    }
    if (k == "quotient") {
      expect("(");
      RingValue base = ring_expr();
      expect(",");
      const std::vector<Elem> gens = element_list(base.ring);
      expect(")");
      return {guarded(t, [&] {
                return quotient_ring(ideal_generated(base.ring, gens, IdealKind::kTwoSided)).ring;
              }),
              std::nullopt};
    }
    if (k == "groupring" || k == "subgroupring") {
      expect("(");
      RingValue base = ring_expr();
      expect(",");
      const GradedRing gr = base_grading(base);
      std::vector<Label> h;
      if (k == "subgroupring") {
        expect(",");
        h = label_list([&](const std::string& n) { return gr.group().find(n); });
      } else {
        for (Label l = 0; l < gr.group().order(); ++l) h.push_back(l);
      }
      expect(")");
      GradedRing g = guarded(t, [&] { return graded_subgroup_ring(gr, h); });
      return {g.ring(), g};
    }
    fail("unknown ring constructor " + k, t);
  }

  GradedRing grading_expr(const RingValue& r) {
    const Token& t = expect_name();
    const std::string& k = t.text;
    if (k == "trivial") {
      expect("(");
      FiniteGroup g = group();
      expect(")");
      return trivial_grading(r.ring, g);
    }
    if (k == "groupring-canonical") {
      if (!r.canonical) fail("groupring-canonical needs a groupring or subgroupring", t);
      return *r.canonical;
    }
    if (k == "matrix-sigma") {
      auto shape = matrix_shape(r.ring);
      if (!shape) fail("matrix-sigma needs a matrix or triangular ring", t);
      expect("(");
      const GradedRing base = base_grading(RingValue{shape->base, std::nullopt});
      expect(",");
      const Sigma sigma = label_list([&](const std::string& n) { return base.group().find(n); });
      expect(")");
      if (sigma.size() != shape->n) fail("sigma length must equal the matrix size", t);
      return guarded(t, [&] {
        return shape->triangular ? graded_triangular_ring(base, shape->n, sigma).graded
                                 : graded_matrix_ring(base, shape->n, sigma);
      });
    }
    if (k == "components" || k == "s-grading") {
      expect("(");
      std::optional<FiniteGroup> g;
      std::optional<PartialGroupoid> s;
      if (k == "components") {
        g = group();
        s = PartialGroupoid::from_group(*g);
      } else {
        s = groupoid();
      }
      expect(",");
      expect("{");
      std::vector<std::vector<Elem>> comps(s->order(), std::vector<Elem>{r.ring.zero()});
      std::vector<bool> given(s->order(), false);
      if (!accept("}")) {
        do {
          const Token& n = label_token();
          auto l = s->find(n.text);
          if (!l) fail("unknown element " + n.text, n);
          if (given[*l]) fail("component " + n.text + " given twice", n);
          given[*l] = true;
          expect(":");
          comps[*l] = element_list(r.ring);
        } while (accept(","));
        expect("}");
      }
      expect(")");
      return g ? verify_grading(r.ring, *g, comps) : verify_s_grading(r.ring, *s, comps);
    }
    fail("unknown grading " + k, t);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::map<std::string, FiniteGroup> groups_;
  std::map<std::string, PartialGroupoid> groupoids_;
};

}  // namespace

ParsedSpec parse_spec(std::string_view text) {
  // The header must be the first line that is neither blank nor a comment.
  std::size_t start = 0;
  int line = 1;
  bool found = false;
  while (start < text.size() && !found) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view l = text.substr(start, end - start);
    while (!l.empty() && std::isspace(static_cast<unsigned char>(l.back()))) l.remove_suffix(1);
    while (!l.empty() && std::isspace(static_cast<unsigned char>(l.front()))) l.remove_prefix(1);
    if (!l.empty() && l[0] != '#') {
      if (l != kSpecHeader) throw ParseError("expected header '" + std::string(kSpecHeader) + "'", line, 1);
      found = true;
    }
    start = end;
    if (!found) {
      ++start;
      ++line;
    }
  }
  if (!found) throw ParseError("expected header '" + std::string(kSpecHeader) + "'", line, 1);
  Parser p(tokenize(text.substr(std::min(start, text.size())), line));
  ParsedSpec spec = p.parse_file();
  spec.source = std::string(text);
  return spec;
}

ParsedSpec load_spec(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kInvalidArgument, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_spec(buf.str());
}

FiniteGroup parse_group(std::string_view text) {
  Parser p(tokenize(text, 1));
  FiniteGroup g = p.group();
  p.expect_end();
  return g;
}

Subject subject_from_spec(const ParsedSpec& spec) {
  return Subject{spec.name, spec.graded, spec.expected, spec.implication_counterexample};
}

}  // namespace grl
