#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace fncalc {

// A strictly increasing index tuple (i1 < ... < ip) stored as a bit mask.
using IndexMask = std::uint32_t;

inline int mask_degree(IndexMask m) { return std::popcount(m); }

inline std::vector<int> mask_indices(IndexMask m) {
  std::vector<int> out;
  while (m != 0) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

// Sign of the shuffle dx^I ∧ dx^J = sign · dx^(I∪J) for disjoint I, J.
inline int merge_sign(IndexMask a, IndexMask b) {
  int inversions = 0;
  while (b != 0) {
    int j = std::countr_zero(b);
    inversions += std::popcount(a >> (j + 1));
    b &= b - 1;
  }
  return (inversions % 2 == 0) ? 1 : -1;
}

// Lexicographic order on the underlying index tuples (used for rendering).
inline bool tuple_less(IndexMask a, IndexMask b) {
  while (a != 0 && b != 0) {
    int ia = std::countr_zero(a);
    int ib = std::countr_zero(b);
    if (ia != ib) return ia < ib;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

}  // namespace fncalc
