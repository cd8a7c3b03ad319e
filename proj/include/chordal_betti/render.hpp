#pragma once

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "chordal_betti/betti_table.hpp"
#include "chordal_betti/closed_form.hpp"
#include "chordal_betti/dual_closed_form.hpp"
#include "chordal_betti/gluing_spec.hpp"

namespace chordal_betti {

using ordered_json = nlohmann::ordered_json;

// "x4*x5*x6" for the mask {4,5,6}; the empty product renders as 1.
inline std::string monomial_string(std::uint64_t vars) {
  if (vars == 0) return "1";
  std::string out;
  for (int v = 0; v < 64; ++v) {
    if (!(vars >> v & 1)) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(v + 1);
  }
  return out;
}

inline std::string signed_monomial_string(const SignedMonomial& m) {
  if (m.is_zero()) return "0";
  return (m.sign < 0 ? "-" : "") + monomial_string(m.vars);
}

namespace detail {

inline std::string pad_left(const std::string& s, std::size_t width) {
  return std::string(width > s.size() ? width - s.size() : 0, ' ') + s;
}

}  // namespace detail

// Text layout mirrors Macaulay2: columns are homological degrees i, rows are
// shifts j-i, "." marks a zero, with a header row and a total row.
inline std::string render_betti_table(const BettiTable& t) {
  const int cols = t.empty() ? 0 : t.proj_dim();
  const int rows = t.empty() ? 0 : t.regularity();
  std::vector<std::vector<std::string>> grid;
  std::vector<std::string> labels;

  std::vector<std::string> header;
  for (int i = 0; i <= cols; ++i) header.push_back(std::to_string(i));
  labels.push_back("");
  grid.push_back(std::move(header));

  std::vector<std::string> total;
  for (int i = 0; i <= cols; ++i) total.push_back(to_string(t.total(i)));
  labels.push_back("total:");
  grid.push_back(std::move(total));

  for (int r = 0; r <= rows; ++r) {
    std::vector<std::string> row;
    for (int i = 0; i <= cols; ++i) {
      const Int v = t.get(i, i + r);
      row.push_back(v == 0 ? "." : to_string(v));
    }
    labels.push_back(std::to_string(r) + ":");
    grid.push_back(std::move(row));
  }

  std::size_t label_w = 0;
  for (const auto& l : labels) label_w = std::max(label_w, l.size());
  std::vector<std::size_t> col_w(static_cast<std::size_t>(cols) + 1, 0);
  for (const auto& row : grid)
    for (std::size_t i = 0; i < row.size(); ++i)
      col_w[i] = std::max(col_w[i], row[i].size());

  std::ostringstream os;
  for (std::size_t r = 0; r < grid.size(); ++r) {
    os << detail::pad_left(labels[r], label_w);
    for (std::size_t i = 0; i < grid[r].size(); ++i)
      os << ' ' << detail::pad_left(grid[r][i], col_w[i]);
    os << '\n';
    if (r == 1) {
      // rule between the total row and the table body
      std::size_t width = label_w;
      for (std::size_t w : col_w) width += w + 1;
      os << std::string(width, '-') << '\n';
    }
  }
  return os.str();
}

namespace detail {

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

inline std::string block(const std::vector<std::pair<std::string, std::string>>& kv) {
  std::size_t w = 0;
  for (const auto& [k, v] : kv) w = std::max(w, k.size());
  std::ostringstream os;
  for (const auto& [k, v] : kv)
    os << k << std::string(w - k.size() + 2, ' ') << v << '\n';
  return os.str();
}

}  // namespace detail

inline std::string render_invariants(const SkeletonInvariants& inv) {
  return detail::block({
      {"regularity", std::to_string(inv.regularity)},
      {"projective dimension", std::to_string(inv.proj_dim)},
      {"depth", std::to_string(inv.depth)},
      {"Krull dimension", std::to_string(inv.krull_dim)},
      {"multiplicity", to_string(inv.multiplicity)},
      {"h-polynomial", inv.h_poly.str()},
      {"deg h", std::to_string(inv.h_degree)},
      {"a-invariant", std::to_string(inv.a_invariant)},
      {"reduced Euler characteristic", to_string(inv.euler)},
      {"Cohen-Macaulay", detail::yes_no(inv.cohen_macaulay)},
      {"initially Cohen-Macaulay", detail::yes_no(inv.initially_cm)},
      {"sequentially Cohen-Macaulay", detail::yes_no(inv.sequentially_cm)},
  });
}

inline std::string render_dual_profile(const DualProfile& p) {
  return detail::block({
      {"regularity", std::to_string(p.regularity)},
      {"projective dimension", std::to_string(p.proj_dim)},
      {"depth", std::to_string(p.depth)},
      {"Krull dimension", std::to_string(p.krull_dim)},
      {"multiplicity", to_string(p.multiplicity)},
      {"a-invariant", std::to_string(p.a_invariant)},
      {"Cohen-Macaulay type", std::to_string(p.cm_type)},
      {"Gorenstein", detail::yes_no(p.gorenstein)},
      {"pure resolution", detail::yes_no(p.pure)},
      {"linear resolution", detail::yes_no(p.linear_resolution)},
      {"homology",
       p.sphere_count == 0
           ? std::string("acyclic")
           : "wedge of " + to_string(p.sphere_count) + " spheres of dimension " +
                 std::to_string(p.sphere_dim)},
  });
}

inline std::string render_dual_skeleton_profile(const DualSkeletonProfile& p) {
  return detail::block({
      {"projective dimension", std::to_string(p.proj_dim)},
      {"Cohen-Macaulay", detail::yes_no(p.cohen_macaulay)},
      {"Cohen-Macaulay type", to_string(p.cm_type)},
      {"ideal regularity", std::to_string(p.ideal_regularity)},
      {"multiplicity", to_string(p.multiplicity)},
      {"deg h", std::to_string(p.h_degree)},
      {"reduced Euler characteristic", to_string(p.euler)},
      {"homology",
       p.sphere_count == 0
           ? std::string("acyclic")
           : "wedge of " + to_string(p.sphere_count) + " spheres of dimension " +
                 std::to_string(p.sphere_dim)},
      {"simplex skeleton", detail::yes_no(p.simplex_skeleton)},
  });
}

inline std::string render_resolution(const GradedResolution& res) {
  std::ostringstream os;
  os << "0 -> F1 -> F0 -> I -> 0\n";
  std::string f0, f1;
  for (int d : res.generator_shifts)
    f0 += (f0.empty() ? "" : " ++ ") + ("R(-" + std::to_string(d) + ")");
  for (int d : res.relation_shifts)
    f1 += (f1.empty() ? "" : " ++ ") + ("R(-" + std::to_string(d) + ")");
  os << "F0 = " << f0 << '\n' << "F1 = " << f1 << '\n';

  os << "d1 = [";
  for (std::size_t m = 0; m < res.d1.size(); ++m)
    os << (m ? "  " : "") << signed_monomial_string(res.d1[m]);
  os << "]\n";

  std::vector<std::vector<std::string>> cells;
  std::vector<std::size_t> w(res.d2.empty() ? 0 : res.d2[0].size(), 0);
  for (const auto& row : res.d2) {
    cells.emplace_back();
    for (std::size_t c = 0; c < row.size(); ++c) {
      cells.back().push_back(signed_monomial_string(row[c]));
      w[c] = std::max(w[c], cells.back()[c].size());
    }
  }
  for (std::size_t r = 0; r < cells.size(); ++r) {
    os << (r == 0 ? "d2 = [" : "     [");
    for (std::size_t c = 0; c < cells[r].size(); ++c) {
      os << cells[r][c] << std::string(w[c] - cells[r][c].size(), ' ');
      if (c + 1 < cells[r].size()) os << "  ";
    }
    os << "]\n";
  }
  return os.str();
}

// Multiplicity, h-polynomial degree, and reduced Euler characteristic for
// every skeleton, on both sides of the duality when the dual exists.
inline std::string render_summary_table(const GluingSpec& s) {
  validate_spec(s);
  const int N = n_vertices(s);
  const int dim = complex_dim(s);
  const bool has_dual = max_clique(s) < N;
  const int dual_dim = has_dual ? N - 3 : -2;

  std::vector<std::vector<std::string>> rows;
  rows.push_back({"k", "mult", "deg h", "euler", "mult", "deg h", "euler"});
  for (int k = 0; k <= std::max(dim, dual_dim); ++k) {
    std::vector<std::string> row{std::to_string(k)};
    if (k <= dim) {
      const SkeletonInvariants inv = skeleton_invariants(s, k);
      row.push_back(to_string(inv.multiplicity));
      row.push_back(std::to_string(inv.h_degree));
      row.push_back(to_string(inv.euler));
    } else {
      row.insert(row.end(), {"-", "-", "-"});
    }
    if (has_dual && k <= dual_dim) {
      const DualSkeletonProfile p = dual_skeleton_profile(s, k);
      row.push_back(to_string(p.multiplicity));
      row.push_back(std::to_string(p.h_degree));
      row.push_back(to_string(p.euler));
    } else {
      row.insert(row.end(), {"-", "-", "-"});
    }
    rows.push_back(std::move(row));
  }

  std::vector<std::size_t> w(7, 0);
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c)
      w[c] = std::max(w[c], row[c].size());
  std::ostringstream os;
  const std::string p1 = "primal", d1 = "dual";
  os << detail::pad_left("", w[0]);
  std::size_t pw = w[1] + w[2] + w[3] + 2, dw = w[4] + w[5] + w[6] + 2;
  os << "  " << p1 << std::string(pw > p1.size() ? pw - p1.size() : 0, ' ');
  os << "  " << d1 << '\n';
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c)
      os << (c ? "  " : "") << detail::pad_left(row[c], w[c]);
    os << '\n';
  }
  return os.str();
}

// json with arbitrary-precision values carried as decimal strings.
inline ordered_json table_to_json(const BettiTable& t, int n_vars) {
  ordered_json j;
  j["n_vars"] = n_vars;
  ordered_json entries = ordered_json::array();
  for (const auto& [key, v] : t.entries())
    entries.push_back({key.first, key.second, to_string(v)});
  j["entries"] = std::move(entries);
  return j;
}

inline ordered_json invariants_to_json(const SkeletonInvariants& inv) {
  ordered_json j;
  j["k"] = inv.k;
  j["regularity"] = inv.regularity;
  j["proj_dim"] = inv.proj_dim;
  j["depth"] = inv.depth;
  j["krull_dim"] = inv.krull_dim;
  j["multiplicity"] = to_string(inv.multiplicity);
  j["h_polynomial"] = inv.h_poly.str();
  j["h_degree"] = inv.h_degree;
  j["a_invariant"] = inv.a_invariant;
  j["euler"] = to_string(inv.euler);
  j["cohen_macaulay"] = inv.cohen_macaulay;
  j["initially_cm"] = inv.initially_cm;
  j["sequentially_cm"] = inv.sequentially_cm;
  return j;
}

inline ordered_json dual_profile_to_json(const DualProfile& p) {
  ordered_json j;
  j["regularity"] = p.regularity;
  j["proj_dim"] = p.proj_dim;
  j["depth"] = p.depth;
  j["krull_dim"] = p.krull_dim;
  j["multiplicity"] = to_string(p.multiplicity);
  j["a_invariant"] = p.a_invariant;
  j["cm_type"] = p.cm_type;
  j["gorenstein"] = p.gorenstein;
  j["pure"] = p.pure;
  j["linear_resolution"] = p.linear_resolution;
  j["sphere_count"] = to_string(p.sphere_count);
  j["sphere_dim"] = p.sphere_dim;
  return j;
}

inline ordered_json dual_skeleton_profile_to_json(const DualSkeletonProfile& p) {
  ordered_json j;
  j["k"] = p.k;
  j["proj_dim"] = p.proj_dim;
  j["cohen_macaulay"] = p.cohen_macaulay;
  j["cm_type"] = to_string(p.cm_type);
  j["ideal_regularity"] = p.ideal_regularity;
  j["multiplicity"] = to_string(p.multiplicity);
  j["h_degree"] = p.h_degree;
  j["euler"] = to_string(p.euler);
  j["sphere_count"] = to_string(p.sphere_count);
  j["sphere_dim"] = p.sphere_dim;
  j["simplex_skeleton"] = p.simplex_skeleton;
  return j;
}

inline ordered_json resolution_to_json(const GradedResolution& res) {
  ordered_json j;
  j["n_vars"] = res.n_vars;
  j["generator_shifts"] = res.generator_shifts;
  j["relation_shifts"] = res.relation_shifts;
  ordered_json d1 = ordered_json::array();
  for (const auto& m : res.d1) d1.push_back(signed_monomial_string(m));
  j["d1"] = std::move(d1);
  ordered_json d2 = ordered_json::array();
  for (const auto& row : res.d2) {
    ordered_json r = ordered_json::array();
    for (const auto& m : row) r.push_back(signed_monomial_string(m));
    d2.push_back(std::move(r));
  }
  j["d2"] = std::move(d2);
  return j;
}

}  // namespace chordal_betti
