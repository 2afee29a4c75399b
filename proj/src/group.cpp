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

#include "gradedringlab/group.hpp"

#include <algorithm>
#include <set>

#include "gradedringlab/errors.hpp"

namespace grl {

using Json = nlohmann::ordered_json;
namespace {

void require(bool cond, const std::string& what) {
  if (!cond) throw Error(ErrorKind::kInvalidArgument, what);
}

}  // namespace

FiniteGroup::FiniteGroup(std::vector<std::vector<Label>> table,
                         std::vector<std::string> names)
    : table_(std::move(table)), names_(std::move(names)) {
  const int n = order();
  require(n >= 1, "a group needs at least one element");
  require(static_cast<int>(names_.size()) == n,
          "group element names do not match the table order");
  for (const auto& row : table_) {
    require(static_cast<int>(row.size()) == n, "group table is not square");
    for (Label x : row) require(x >= 0 && x < n, "group table entry out of range");
  }
  identity_ = -1;
  for (Label e = 0; e < n && identity_ < 0; ++e) {
    bool ok = true;
    for (Label a = 0; a < n && ok; ++a) ok = op(e, a) == a && op(a, e) == a;
    if (ok) identity_ = e;
  }
  require(identity_ >= 0, "group table has no identity");
  inverse_.assign(n, -1);
  for (Label a = 0; a < n; ++a) {
    for (Label b = 0; b < n; ++b) {
      if (op(a, b) == identity_ && op(b, a) == identity_) {
        inverse_[a] = b;
        break;
      }
    }
    require(inverse_[a] >= 0, "group element " + names_[a] + " has no inverse");
  }
  for (Label a = 0; a < n; ++a)
    for (Label b = 0; b < n; ++b)
      for (Label c = 0; c < n; ++c)
        require(op(op(a, b), c) == op(a, op(b, c)),
                "group table is not associative at (" + names_[a] + ", " +
                    names_[b] + ", " + names_[c] + ")");
  std::set<std::string> seen(names_.begin(), names_.end());
  require(seen.size() == names_.size(), "group element names are not distinct");
}

Label FiniteGroup::power(Label a, int k) const {
  Label base = k >= 0 ? a : inverse(a);
  Label out = identity_;
  for (int i = 0; i < (k >= 0 ? k : -k); ++i) out = op(out, base);
  return out;
}

int FiniteGroup::element_order(Label a) const {
  int k = 1;
  for (Label p = a; p != identity_; p = op(p, a)) ++k;
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (Label a = 0; a < order(); ++a)
    for (Label b = 0; b < order(); ++b)
      if (op(a, b) != op(b, a)) return false;
  return true;
}

std::optional<Label> FiniteGroup::find(std::string_view name) const {
  for (Label a = 0; a < order(); ++a)
    if (names_[a] == name) return a;
  return std::nullopt;
}

bool FiniteGroup::is_subgroup(std::span<const Label> h) const {
  if (h.empty()) return false;
  std::vector<char> in(order(), 0);
  for (Label x : h) {
    if (x < 0 || x >= order()) return false;
    in[x] = 1;
  }
  for (Label a : h)
    for (Label b : h)
      if (!in[op(a, inverse(b))]) return false;
  return true;
}

bool FiniteGroup::is_normal_subgroup(std::span<const Label> h) const {
  if (!is_subgroup(h)) return false;
  std::vector<char> in(order(), 0);
  for (Label x : h) in[x] = 1;
  for (Label g = 0; g < order(); ++g)
    for (Label x : h)
      if (!in[op(op(g, x), inverse(g))]) return false;
  return true;
}

bool FiniteGroup::is_two_group() const {
  int n = order();
  while (n % 2 == 0) n /= 2;
  return n == 1;
}

std::vector<std::vector<Label>> FiniteGroup::normal_subgroups() const {
  auto close = [&](const std::vector<Label>& gens) {
    std::vector<char> in(order(), 0);
    std::vector<Label> members{identity_};
    in[identity_] = 1;
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (Label g : gens) {
        Label y = op(members[i], g);
        if (!in[y]) {
          in[y] = 1;
          members.push_back(y);
        }
      }
    }
    std::sort(members.begin(), members.end());
    return members;
  };
  // Every subgroup is a join of cyclic subgroups; close under pairwise joins.
  std::set<std::vector<Label>> found;
  for (Label a = 0; a < order(); ++a) found.insert(close({a}));
  std::vector<std::vector<Label>> work(found.begin(), found.end());
  for (std::size_t i = 0; i < work.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      std::vector<Label> gens = work[i];
      gens.insert(gens.end(), work[j].begin(), work[j].end());
      auto joined = close(gens);
      if (found.insert(joined).second) work.push_back(joined);
    }
  }
  std::vector<std::vector<Label>> out;
  for (const auto& h : found)
    if (is_normal_subgroup(h)) out.push_back(h);
  std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return x.size() < y.size();
  });
  return out;
}

FiniteGroup cyclic_group(int n) {
  require(n >= 1, "cyclic group order must be positive");
  std::vector<std::vector<Label>> table(n, std::vector<Label>(n));
  std::vector<std::string> names(n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) table[a][b] = (a + b) % n;
    names[a] = a == 0 ? "e" : a == 1 ? "g" : "g" + std::to_string(a);
  }
  return FiniteGroup(std::move(table), std::move(names));
}

FiniteGroup integer_window(int radius) {
  require(radius >= 0, "window radius must be non-negative");
  const int n = 2 * radius + 1;
  // Label k carries the integer k for k <= radius and k - n above.
  auto value = [&](int k) { return k <= radius ? k : k - n; };
  std::vector<std::vector<Label>> table(n, std::vector<Label>(n));
  std::vector<std::string> names(n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) table[a][b] = (a + b) % n;
    names[a] = std::to_string(value(a));
  }
  return FiniteGroup(std::move(table), std::move(names));
}

QuotientGroup quotient_group(const FiniteGroup& g, std::span<const Label> h) {
  if (!g.is_subgroup(h))
    throw Error(ErrorKind::kInvalidArgument, "not a subgroup");
  if (!g.is_normal_subgroup(h)) {
    Json witness = Json::array();
    for (Label x = 0; x < g.order() && witness.empty(); ++x) {
      std::vector<char> in(g.order(), 0);
      for (Label y : h) in[y] = 1;
      for (Label y : h) {
        if (!in[g.op(g.op(x, y), g.inverse(x))]) {
          witness = Json::array({g.name(x), g.name(y)});
          break;
        }
      }
    }
    throw Error(ErrorKind::kNotNormal, "subgroup is not normal", witness);
  }
  const int n = g.order();
  std::vector<Label> coset_of(n, -1);
  std::vector<Label> rep;
  for (Label x = 0; x < n; ++x) {
    if (coset_of[x] >= 0) continue;
    const Label c = static_cast<Label>(rep.size());
    rep.push_back(x);
    for (Label y : h) coset_of[g.op(x, y)] = c;
  }
  const int m = static_cast<int>(rep.size());
  std::vector<std::vector<Label>> table(m, std::vector<Label>(m));
  std::vector<std::string> names(m);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) table[a][b] = coset_of[g.op(rep[a], rep[b])];
    names[a] = "[" + g.name(rep[a]) + "]";
  }
  return QuotientGroup{FiniteGroup(std::move(table), std::move(names)),
                       std::move(coset_of), std::move(rep)};
}

PartialGroupoid::PartialGroupoid(
    std::vector<std::vector<std::optional<Label>>> table,
    std::vector<std::string> names)
    : table_(std::move(table)), names_(std::move(names)) {
  const int n = order();
  require(static_cast<int>(names_.size()) == n,
          "groupoid names do not match the table order");
  for (const auto& row : table_) {
    require(static_cast<int>(row.size()) == n, "groupoid table is not square");
    for (const auto& x : row)
      require(!x || (*x >= 0 && *x < n), "groupoid table entry out of range");
  }
}

PartialGroupoid PartialGroupoid::from_group(const FiniteGroup& g) {
  const int n = g.order();
  std::vector<std::vector<std::optional<Label>>> table(
      n, std::vector<std::optional<Label>>(n));
  for (Label a = 0; a < n; ++a)
    for (Label b = 0; b < n; ++b) table[a][b] = g.op(a, b);
  return PartialGroupoid(std::move(table), g.names());
}

std::optional<Label> PartialGroupoid::find(std::string_view name) const {
  for (Label a = 0; a < order(); ++a)
    if (names_[a] == name) return a;
  return std::nullopt;
}

bool PartialGroupoid::is_cancellative() const {
  const int n = order();
  for (Label s = 0; s < n; ++s) {
    for (Label t = 0; t < n; ++t) {
      for (Label u = t + 1; u < n; ++u) {
        if (op(s, t) && op(s, u) && *op(s, t) == *op(s, u)) return false;
        if (op(t, s) && op(u, s) && *op(t, s) == *op(u, s)) return false;
      }
    }
  }
  return true;
}

std::vector<Label> PartialGroupoid::idempotents() const {
  std::vector<Label> out;
  for (Label s = 0; s < order(); ++s)
    if (op(s, s) && *op(s, s) == s) out.push_back(s);
  return out;
}

PartialGroupoid brandt_groupoid(int n) {
  require(n >= 1, "Brandt groupoid needs at least one object");
  const int m = n * n;
  std::vector<std::vector<std::optional<Label>>> table(
      m, std::vector<std::optional<Label>>(m));
  std::vector<std::string> names(m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      names[i * n + j] = "e" + std::to_string(i + 1) + std::to_string(j + 1);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (a % n == b / n) table[a][b] = (a / n) * n + (b % n);
  return PartialGroupoid(std::move(table), std::move(names));
}

}  // namespace grl
