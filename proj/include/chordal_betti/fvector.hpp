#pragma once

#include <vector>

#include "chordal_betti/arith.hpp"
#include "chordal_betti/polynomial.hpp"

namespace chordal_betti {

// Face-count vector of a simplicial complex, indexed from the empty face:
// entries[s] = f_{s-1} = number of faces with s vertices.  For a nonvoid
// complex entries[0] == 1 and the last entry is nonzero.
struct FVector {
  std::vector<Int> entries;

  FVector() = default;
  explicit FVector(std::vector<Int> e) : entries(std::move(e)) { trim(); }

  // Faces of dimension d; zero outside the stored range.
  Int f(int d) const {
    int s = d + 1;
    if (s < 0 || s >= static_cast<int>(entries.size())) return 0;
    return entries[static_cast<std::size_t>(s)];
  }

  int dim() const { return static_cast<int>(entries.size()) - 2; }

  bool operator==(const FVector& o) const { return entries == o.entries; }
  bool operator!=(const FVector& o) const { return !(*this == o); }

  // Truncation to the k-skeleton.
  FVector truncated(int k) const {
    int keep = k + 2;
    if (keep >= static_cast<int>(entries.size())) return *this;
    if (keep < 0) keep = 0;
    return FVector(std::vector<Int>(entries.begin(), entries.begin() + keep));
  }

  // Sum of f_{s-1} t^s, the generating polynomial of face counts.
  IntPolynomial face_polynomial() const { return IntPolynomial(entries); }

  // Reduced Euler characteristic: alternating sum starting at the empty face.
  Int reduced_euler() const {
    Int acc = 0;
    int sign = -1;
    for (const Int& v : entries) {
      acc += sign * v;
      sign = -sign;
    }
    return acc;
  }

 private:
  void trim() {
    while (!entries.empty() && entries.back() == 0) entries.pop_back();
  }
};

}  // namespace chordal_betti
