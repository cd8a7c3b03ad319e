#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "chordal_betti/arith.hpp"
#include "chordal_betti/errors.hpp"
#include "chordal_betti/gluing_spec.hpp"

namespace chordal_betti {

// The binomial identity families obtained by evaluating the Hilbert series
// of a glued complex two ways, then specializing the parameters.  All sides
// are evaluated with the polynomially extended binomial (binomial_any): the
// identities are polynomial in their parameters, so negative upper indices
// (e.g. C(r-n, j) in the Chu-Vandermonde variant) must follow upper
// negation, not the subset convention.
enum class IdentityFamily {
  ConvolutionLemma,
  GeneralHilbert,
  EqualN,
  EqualR,
  EqualNR,
  Reduced,
  ChuVandermonde,
  SingleClique,
};

// Parameter layouts, in order:
//   ConvolutionLemma  {n, A, s}
//   GeneralHilbert    {e, j, n_1..n_e, r_1..r_{e-1}}
//   EqualN            {e, j, n, r_1..r_{e-1}}
//   EqualR            {e, j, r, n_1..n_e}
//   EqualNR           {e, j, n, r}
//   Reduced           {e, j, n, r}
//   ChuVandermonde    {n, r, j}
//   SingleClique      {n, j}
struct IdentityCase {
  IdentityFamily family = IdentityFamily::ConvolutionLemma;
  std::vector<long long> params;
};

struct IdentityResult {
  Int lhs;
  Int rhs;
  bool equal = false;
};

inline std::string family_name(IdentityFamily f) {
  switch (f) {
    case IdentityFamily::ConvolutionLemma: return "convolution-lemma";
    case IdentityFamily::GeneralHilbert: return "general-hilbert";
    case IdentityFamily::EqualN: return "equal-n";
    case IdentityFamily::EqualR: return "equal-r";
    case IdentityFamily::EqualNR: return "equal-nr";
    case IdentityFamily::Reduced: return "reduced";
    case IdentityFamily::ChuVandermonde: return "chu-vandermonde";
    case IdentityFamily::SingleClique: return "single-clique";
  }
  throw UnknownIdentity("unhandled identity family");
}

inline IdentityFamily family_from_name(const std::string& name) {
  for (IdentityFamily f :
       {IdentityFamily::ConvolutionLemma, IdentityFamily::GeneralHilbert,
        IdentityFamily::EqualN, IdentityFamily::EqualR, IdentityFamily::EqualNR,
        IdentityFamily::Reduced, IdentityFamily::ChuVandermonde,
        IdentityFamily::SingleClique})
    if (family_name(f) == name) return f;
  throw UnknownIdentity("no identity family named '" + name + "'");
}

namespace detail {

inline IdentityResult finish(Int lhs, Int rhs) {
  IdentityResult out;
  out.equal = lhs == rhs;
  out.lhs = std::move(lhs);
  out.rhs = std::move(rhs);
  return out;
}

// Both sides of the two-way Hilbert numerator expansion for arbitrary
// integer size vectors; no feasibility constraints apply here.
inline IdentityResult general_identity(const std::vector<long long>& n,
                                       const std::vector<long long>& r,
                                       long long j) {
  long long N = 0;
  for (long long v : n) N += v;
  for (long long v : r) N -= v;
  Int lhs = 0;
  for (long long v : n) lhs += binomial_any(N - v, j);
  for (long long v : r) lhs -= binomial_any(N - v, j);
  Int rhs = 0;
  for (long long i = 0; i <= j; ++i) {
    Int face = 0;
    for (long long v : n) face += binomial_any(v, i);
    for (long long v : r) face -= binomial_any(v, i);
    rhs += sign_pow(i) * face * binomial_any(N - i, j - i);
  }
  return finish(std::move(lhs), std::move(rhs));
}

}  // namespace detail

// Alternating convolution: sum_t (-1)^t C(A,t) C(n-t, s-t) telescopes to
// C(n-A, s).
inline IdentityResult check_convolution_lemma(long long n, long long A,
                                              long long s) {
  if (n < 0 || A < 0 || s < 0)
    throw RangeError("convolution lemma needs non-negative arguments");
  Int lhs = 0;
  for (long long t = 0; t <= s; ++t)
    lhs += sign_pow(t) * binomial_any(A, t) * binomial_any(n - t, s - t);
  return detail::finish(std::move(lhs), binomial_any(n - A, s));
}

// The general identity instantiated on a feasible gluing specification.
inline IdentityResult check_hilbert_identity(const GluingSpec& s, long long j) {
  validate_spec(s);
  if (j < 1) throw RangeError("identity degree must be at least 1");
  std::vector<long long> n(s.n.begin(), s.n.end());
  std::vector<long long> r(s.r.begin(), s.r.end());
  return detail::general_identity(n, r, j);
}

inline IdentityResult check_specializations(const IdentityCase& c) {
  const auto& p = c.params;
  const auto need = [&](std::size_t count) {
    if (p.size() != count)
      throw UnknownIdentity(family_name(c.family) + " expects " +
                            std::to_string(count) + " parameters, got " +
                            std::to_string(p.size()));
  };
  switch (c.family) {
    case IdentityFamily::ConvolutionLemma: {
      need(3);
      return check_convolution_lemma(p[0], p[1], p[2]);
    }
    case IdentityFamily::GeneralHilbert: {
      if (p.size() < 2)
        throw UnknownIdentity("general-hilbert expects {e, j, n..., r...}");
      const auto e = static_cast<std::size_t>(p[0]);
      need(2 + e + (e - 1));
      std::vector<long long> n(p.begin() + 2, p.begin() + 2 + static_cast<long>(e));
      std::vector<long long> r(p.begin() + 2 + static_cast<long>(e), p.end());
      return detail::general_identity(n, r, p[1]);
    }
    case IdentityFamily::EqualN: {
      if (p.size() < 3) throw UnknownIdentity("equal-n expects {e, j, n, r...}");
      const long long e = p[0], j = p[1], n = p[2];
      need(static_cast<std::size_t>(2 + e));
      std::vector<long long> r(p.begin() + 3, p.end());
      long long N = e * n;
      for (long long v : r) N -= v;
      Int lhs = Int(e) * binomial_any(N - n, j);
      Int rhs = 0;
      for (long long v : r) rhs += binomial_any(N - v, j);
      for (long long i = 0; i <= j; ++i) {
        Int face = Int(e) * binomial_any(n, i);
        for (long long v : r) face -= binomial_any(v, i);
        rhs += sign_pow(i) * face * binomial_any(N - i, j - i);
      }
      return detail::finish(std::move(lhs), std::move(rhs));
    }
    case IdentityFamily::EqualR: {
      if (p.size() < 3) throw UnknownIdentity("equal-r expects {e, j, r, n...}");
      const long long e = p[0], j = p[1], r = p[2];
      need(static_cast<std::size_t>(3 + e));
      std::vector<long long> n(p.begin() + 3, p.end());
      long long N = -(e - 1) * r;
      for (long long v : n) N += v;
      Int lhs = Int(e - 1) * binomial_any(N - r, j);
      Int rhs = 0;
      for (long long v : n) rhs += binomial_any(N - v, j);
      for (long long i = 0; i <= j; ++i) {
        Int face = Int(-(e - 1)) * binomial_any(r, i);
        for (long long v : n) face += binomial_any(v, i);
        rhs -= sign_pow(i) * face * binomial_any(N - i, j - i);
      }
      return detail::finish(std::move(lhs), std::move(rhs));
    }
    case IdentityFamily::EqualNR: {
      need(4);
      const long long e = p[0], j = p[1], n = p[2], r = p[3];
      const long long N = e * n - (e - 1) * r;
      Int lhs = Int(e) * binomial_any(N - n, j) -
                Int(e - 1) * binomial_any(N - r, j);
      Int rhs = 0;
      for (long long i = 0; i <= j; ++i)
        rhs += sign_pow(i) *
               (Int(e) * binomial_any(n, i) - Int(e - 1) * binomial_any(r, i)) *
               binomial_any(N - i, j - i);
      return detail::finish(std::move(lhs), std::move(rhs));
    }
    case IdentityFamily::Reduced: {
      need(4);
      const long long e = p[0], j = p[1], n = p[2], r = p[3];
      Int lhs = Int(e - 1) * binomial_any(n - r, j);
      Int rhs = 0;
      for (long long i = 0; i <= j; ++i)
        rhs += sign_pow(i + 1) *
               (Int(e) * binomial_any(n, i) - Int(e - 1) * binomial_any(r, i)) *
               binomial_any(n - i, j - i);
      return detail::finish(std::move(lhs), std::move(rhs));
    }
    case IdentityFamily::ChuVandermonde: {
      need(3);
      const long long n = p[0], r = p[1], j = p[2];
      Int rhs = 0;
      for (long long i = 0; i <= j; ++i)
        rhs += sign_pow(i) * binomial_any(n, i) * binomial_any(r - i, j - i);
      return detail::finish(binomial_any(r - n, j), std::move(rhs));
    }
    case IdentityFamily::SingleClique: {
      need(2);
      const long long n = p[0], j = p[1];
      Int rhs = 0;
      for (long long i = 0; i <= j; ++i)
        rhs += sign_pow(i + 1) * binomial_any(n, i) * binomial_any(n - i, j - i);
      return detail::finish(0, std::move(rhs));
    }
  }
  throw UnknownIdentity("unhandled identity family");
}

struct SweepLimits {
  int max_param = 12;
  int max_e = 4;
};

struct SweepOutcome {
  IdentityFamily family = IdentityFamily::ConvolutionLemma;
  long long cases = 0;
  std::vector<IdentityCase> counterexamples;  // first few only

  bool pass() const { return counterexamples.empty(); }
};

namespace detail {

inline void record(SweepOutcome& out, const IdentityCase& c) {
  ++out.cases;
  if (!check_specializations(c).equal && out.counterexamples.size() < 5)
    out.counterexamples.push_back(c);
}

// Enumerates non-decreasing tuples t of the given length with
// lo <= t[i] <= min(hi, cap[i]); cap may be empty (no per-slot cap).
inline void sorted_tuples(int length, int lo, int hi,
                          const std::vector<long long>& cap,
                          std::vector<long long>& tuple,
                          const std::function<void()>& emit) {
  if (static_cast<int>(tuple.size()) == length) {
    emit();
    return;
  }
  const std::size_t pos = tuple.size();
  long long from = tuple.empty() ? lo : std::max<long long>(lo, tuple.back());
  long long to = hi;
  if (!cap.empty()) to = std::min<long long>(to, cap[pos]);
  for (long long v = from; v <= to; ++v) {
    tuple.push_back(v);
    sorted_tuples(length, lo, hi, cap, tuple, emit);
    tuple.pop_back();
  }
}

}  // namespace detail

// Deterministic nested-range sweeps; every visited tuple is checked for
// exact equality.  The identities only depend on the multisets of
// parameters, so tuples are enumerated in sorted order.
inline SweepOutcome run_sweep(IdentityFamily family,
                              const SweepLimits& lim = {}) {
  SweepOutcome out;
  out.family = family;
  const long long P = lim.max_param;
  switch (family) {
    case IdentityFamily::ConvolutionLemma: {
      for (long long n = 0; n <= P; ++n)
        for (long long A = 0; A <= P; ++A)
          for (long long s = 0; s <= P; ++s)
            detail::record(out, {family, {n, A, s}});
      break;
    }
    case IdentityFamily::GeneralHilbert: {
      for (int e = 1; e <= lim.max_e; ++e) {
        std::vector<long long> n;
        detail::sorted_tuples(e, 1, P, {}, n, [&] {
          std::vector<long long> r;
          // pair each overlap below a clique size: r_i <= n_i, both sorted
          std::vector<long long> cap(n.begin(), n.end() - 1);
          detail::sorted_tuples(e - 1, 1, P, cap, r, [&] {
            for (long long j = 1; j <= P; ++j) {
              std::vector<long long> params{e, j};
              params.insert(params.end(), n.begin(), n.end());
              params.insert(params.end(), r.begin(), r.end());
              detail::record(out, {family, params});
            }
          });
        });
      }
      break;
    }
    case IdentityFamily::EqualN: {
      for (long long e = 1; e <= lim.max_e; ++e)
        for (long long n = 1; n <= P; ++n) {
          std::vector<long long> r;
          detail::sorted_tuples(static_cast<int>(e) - 1, 1,
                                static_cast<int>(std::min(n, P)), {}, r, [&] {
            for (long long j = 1; j <= P; ++j) {
              std::vector<long long> params{e, j, n};
              params.insert(params.end(), r.begin(), r.end());
              detail::record(out, {family, params});
            }
          });
        }
      break;
    }
    case IdentityFamily::EqualR: {
      for (long long e = 1; e <= lim.max_e; ++e)
        for (long long r = 1; r <= P; ++r) {
          std::vector<long long> n;
          detail::sorted_tuples(static_cast<int>(e), static_cast<int>(r),
                                static_cast<int>(P), {}, n, [&] {
            for (long long j = 1; j <= P; ++j) {
              std::vector<long long> params{e, j, r};
              params.insert(params.end(), n.begin(), n.end());
              detail::record(out, {family, params});
            }
          });
        }
      break;
    }
    case IdentityFamily::EqualNR:
    case IdentityFamily::Reduced: {
      for (long long e = 1; e <= lim.max_e; ++e)
        for (long long n = 1; n <= P; ++n)
          for (long long r = 1; r <= n; ++r)
            for (long long j = 1; j <= P; ++j)
              detail::record(out, {family, {e, j, n, r}});
      break;
    }
    case IdentityFamily::ChuVandermonde: {
      // swept over the full rectangle: the identity is polynomial in both
      // parameters, and the r > n side exercises nothing special
      for (long long n = 1; n <= P; ++n)
        for (long long r = 1; r <= P; ++r)
          for (long long j = 1; j <= P; ++j)
            detail::record(out, {family, {n, r, j}});
      break;
    }
    case IdentityFamily::SingleClique: {
      for (long long n = 1; n <= P; ++n)
        for (long long j = 1; j <= P; ++j)
          detail::record(out, {family, {n, j}});
      break;
    }
  }
  return out;
}

inline std::vector<SweepOutcome> run_all_sweeps(const SweepLimits& lim = {}) {
  std::vector<SweepOutcome> out;
  for (IdentityFamily f :
       {IdentityFamily::ConvolutionLemma, IdentityFamily::GeneralHilbert,
        IdentityFamily::EqualN, IdentityFamily::EqualR, IdentityFamily::EqualNR,
        IdentityFamily::Reduced, IdentityFamily::ChuVandermonde,
        IdentityFamily::SingleClique})
    out.push_back(run_sweep(f, lim));
  return out;
}

}  // namespace chordal_betti
