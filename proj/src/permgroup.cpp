#include "prym/permgroup.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace prym {

MarkedPermutation::MarkedPermutation(std::vector<int> v) : img(std::move(v)) {
  std::vector<int> s = img;
  std::sort(s.begin(), s.end());
  for (int i = 0; i < static_cast<int>(s.size()); ++i)
    if (s[i] != i) throw std::invalid_argument("not a bijection");
}

MarkedPermutation MarkedPermutation::identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  return MarkedPermutation(v);
}

MarkedPermutation MarkedPermutation::transposition(int a, int b, int n) {
  auto p = identity(n);
  std::swap(p.img[a - 1], p.img[b - 1]);
  return p;
}

bool MarkedPermutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img[i] != i) return false;
  return true;
}

MarkedPermutation MarkedPermutation::inverse() const {
  std::vector<int> v(degree());
  for (int i = 0; i < degree(); ++i) v[img[i]] = i;
  return MarkedPermutation(v);
}

std::string MarkedPermutation::cycles() const {
  std::string out;
  std::vector<bool> seen(degree(), false);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i] || img[i] == i) continue;
    out += "(";
    int j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      out += (first ? "" : " ") + std::to_string(j + 1);
      first = false;
      j = img[j];
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

MarkedPermutation operator*(const MarkedPermutation& a, const MarkedPermutation& b) {
  std::vector<int> v(a.degree());
  for (int i = 0; i < a.degree(); ++i) v[i] = a.img[b.img[i]];
  return MarkedPermutation(v);
}

std::vector<MarkedPermutation> closure(const std::vector<MarkedPermutation>& gens, int degree) {
  std::set<MarkedPermutation> seen{MarkedPermutation::identity(degree)};
  std::deque<MarkedPermutation> work{MarkedPermutation::identity(degree)};
  while (!work.empty()) {
    auto x = work.front();
    work.pop_front();
    for (const auto& g : gens) {
      auto y = g * x;
      if (seen.insert(y).second) work.push_back(y);
    }
  }
  return {seen.begin(), seen.end()};
}

bool is_subgroup(const std::vector<MarkedPermutation>& H) {
  if (H.empty()) return false;
  std::set<MarkedPermutation> s(H.begin(), H.end());
  if (!s.count(MarkedPermutation::identity(H.front().degree()))) return false;
  for (const auto& a : H)
    for (const auto& b : H)
      if (!s.count(a * b.inverse())) return false;
  return true;
}

bool contained_in(const std::vector<MarkedPermutation>& A, const std::vector<MarkedPermutation>& B) {
  std::set<MarkedPermutation> s(B.begin(), B.end());
  return std::all_of(A.begin(), A.end(), [&](const auto& a) { return s.count(a) > 0; });
}

SubgroupClass classify(const std::vector<MarkedPermutation>& H) {
  if (!is_subgroup(H)) throw NotASubgroup("set is not closed");
  if (H.front().degree() != 3) throw NotASubgroup("classification is for degree 3");
  std::set<MarkedPermutation> s(H.begin(), H.end());
  SubgroupClass c;
  switch (s.size()) {
    case 1: c.tag = SubgroupClass::Tag::trivial; break;
    case 2: {
      c.tag = SubgroupClass::Tag::sym2;
      for (const auto& p : s)
        if (!p.is_identity()) {
          std::vector<int> moved;
          for (int i = 0; i < 3; ++i)
            if (p.img[i] != i) moved.push_back(i + 1);
          c.pair = {moved[0], moved[1]};
        }
      break;
    }
    case 3: c.tag = SubgroupClass::Tag::alt3; break;
    case 6: c.tag = SubgroupClass::Tag::sym3; break;
    default: throw NotASubgroup("order " + std::to_string(s.size()));
  }
  return c;
}

std::string SubgroupClass::str() const {
  switch (tag) {
    case Tag::trivial: return "trivial";
    case Tag::sym2: return "sym2({" + std::to_string(pair.first) + "," + std::to_string(pair.second) + "})";
    case Tag::alt3: return "alt3";
    case Tag::sym3: return "sym3";
  }
  return "?";
}

std::vector<MarkedPermutation> stabilizer_of_partition(const std::vector<std::string>& cls) {
  int n = static_cast<int>(cls.size());
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  std::vector<MarkedPermutation> out;
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) ok = cls[v[i]] == cls[i];
    if (ok) out.push_back(MarkedPermutation(v));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace prym
