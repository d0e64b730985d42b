#pragma once

#include <string>
#include <utility>
#include <vector>

#include "prym/errors.hpp"

namespace prym {

// permutation of labels 1..n stored 0-based
struct MarkedPermutation {
  std::vector<int> img;

  MarkedPermutation() : img{0, 1, 2} {}
  explicit MarkedPermutation(std::vector<int> v);
  static MarkedPermutation identity(int n = 3);
  // labels are 1-based
  static MarkedPermutation transposition(int a, int b, int n = 3);

  int degree() const { return static_cast<int>(img.size()); }
  int operator()(int i) const { return img[i]; }
  bool is_identity() const;
  MarkedPermutation inverse() const;
  std::string cycles() const;  // "(1 2)", "()" for identity

  friend bool operator==(const MarkedPermutation& a, const MarkedPermutation& b) { return a.img == b.img; }
  friend bool operator<(const MarkedPermutation& a, const MarkedPermutation& b) { return a.img < b.img; }
};

// (a * b)(i) = a(b(i))
MarkedPermutation operator*(const MarkedPermutation& a, const MarkedPermutation& b);

std::vector<MarkedPermutation> closure(const std::vector<MarkedPermutation>& gens, int degree = 3);

struct SubgroupClass {
  enum class Tag { trivial, sym2, alt3, sym3 } tag = Tag::trivial;
  std::pair<int, int> pair{0, 0};  // swapped labels (1-based) for sym2
  std::string str() const;
  friend bool operator==(const SubgroupClass& a, const SubgroupClass& b) {
    return a.tag == b.tag && (a.tag != Tag::sym2 || a.pair == b.pair);
  }
};

SubgroupClass classify(const std::vector<MarkedPermutation>& H);
bool is_subgroup(const std::vector<MarkedPermutation>& H);
bool contained_in(const std::vector<MarkedPermutation>& A, const std::vector<MarkedPermutation>& B);

// permutations preserving a labelling of the points
std::vector<MarkedPermutation> stabilizer_of_partition(const std::vector<std::string>& cls);

}  // namespace prym
