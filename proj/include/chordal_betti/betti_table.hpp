#pragma once

#include <map>
#include <utility>

#include "chordal_betti/arith.hpp"
#include "chordal_betti/errors.hpp"
#include "chordal_betti/polynomial.hpp"

namespace chordal_betti {

// Graded Betti numbers beta_{i,j} of a quotient ring, stored sparsely.
// Only nonzero entries are kept; beta_{0,0} = 1 for any nonzero quotient.
class BettiTable {
 public:
  using Key = std::pair<int, int>;
  using Map = std::map<Key, Int>;

  Int get(int i, int j) const {
    auto it = e_.find({i, j});
    return it == e_.end() ? Int(0) : it->second;
  }

  void set(int i, int j, Int v) {
    if (i < 0 || j < 0) throw BadRowRequest("negative betti table index");
    if (v < 0) throw NegativeBetti("negative graded Betti number");
    if (v == 0)
      e_.erase({i, j});
    else
      e_[{i, j}] = std::move(v);
  }

  void add(int i, int j, const Int& v) { set(i, j, get(i, j) + v); }

  const Map& entries() const { return e_; }
  bool empty() const { return e_.empty(); }

  // Largest homological degree with a nonzero entry.
  int proj_dim() const {
    int m = 0;
    for (const auto& [k, v] : e_) m = std::max(m, k.first);
    return m;
  }

  // Largest j - i over nonzero entries.
  int regularity() const {
    int m = 0;
    for (const auto& [k, v] : e_) m = std::max(m, k.second - k.first);
    return m;
  }

  // Column sum over internal degrees.
  Int total(int i) const {
    Int acc = 0;
    for (const auto& [k, v] : e_)
      if (k.first == i) acc += v;
    return acc;
  }

  // Sum_{i,j} (-1)^i beta_{i,j} t^j, which must reproduce the numerator of
  // the Hilbert series for any table coming from a free resolution.
  IntPolynomial alternating_polynomial() const {
    IntPolynomial acc;
    for (const auto& [k, v] : e_) {
      Int c = (k.first % 2 == 0) ? v : Int(-v);
      acc += IntPolynomial::monomial(k.second, c);
    }
    return acc;
  }

  bool operator==(const BettiTable& o) const { return e_ == o.e_; }
  bool operator!=(const BettiTable& o) const { return !(*this == o); }

 private:
  Map e_;
};

struct TableInvariants {
  int regularity = 0;
  int proj_dim = 0;
  int depth = 0;
};

// Regularity and projective dimension read off a Betti table; depth via
// Auslander-Buchsbaum over a polynomial ring in n_vars variables.
inline TableInvariants invariants_from_betti(const BettiTable& t, int n_vars) {
  TableInvariants out;
  out.regularity = t.regularity();
  out.proj_dim = t.proj_dim();
  if (out.proj_dim > n_vars)
    throw InternalMismatch("projective dimension exceeds variable count");
  out.depth = n_vars - out.proj_dim;
  return out;
}

}  // namespace chordal_betti
