#ifndef BRUHAT_SL2_SERIALIZE_HPP
#define BRUHAT_SL2_SERIALIZE_HPP

#include <json.hpp>

#include <sstream>
#include <string>

#include "bruhat_sl2/diagnostics.hpp"
#include "bruhat_sl2/interval.hpp"
#include "bruhat_sl2/permutation.hpp"
#include "bruhat_sl2/polynomial.hpp"
#include "bruhat_sl2/schubert.hpp"
#include "bruhat_sl2/sl2.hpp"
#include "bruhat_sl2/sperner.hpp"

namespace bruhat_sl2 {

// Field order in every schema is fixed, hence ordered_json throughout.
using Json = nlohmann::ordered_json;

inline Json hasse_json(const WeakInterval& I, OrderKind order) {
  Json doc;
  doc["pi"] = to_string(I.top());
  doc["n"] = I.n();
  Json elems = Json::array();
  for (const auto& e : I.elements()) elems.push_back(to_string(e));
  doc["elements"] = std::move(elems);
  doc["rank_sizes"] = I.rank_sizes();
  Json edges = Json::array();
  for (int src = 0; src < I.size(); ++src) {
    if (order == OrderKind::weak) {
      for (const auto& cov : I.weak_up_covers()[static_cast<std::size_t>(src)])
        edges.push_back({{"src", src}, {"dst", cov.target}, {"label", {{"i", cov.i}}}});
    } else {
      for (const auto& cov : I.strong_up_covers()[static_cast<std::size_t>(src)])
        edges.push_back(
            {{"src", src}, {"dst", cov.target}, {"label", {{"i", cov.i}, {"j", cov.j}}}});
    }
  }
  doc["edges"] = std::move(edges);
  return doc;
}

inline std::string hasse_dot(const WeakInterval& I, OrderKind order) {
  std::ostringstream out;
  out << "digraph " << (order == OrderKind::weak ? "weak" : "strong") << "_hasse {\n";
  out << "  rankdir=BT;\n";
  for (int idx = 0; idx < I.size(); ++idx)
    out << "  n" << idx << " [label=\"" << to_string(I.element(idx)) << "\"];\n";
  for (int src = 0; src < I.size(); ++src) {
    if (order == OrderKind::weak) {
      for (const auto& cov : I.weak_up_covers()[static_cast<std::size_t>(src)])
        out << "  n" << src << " -> n" << cov.target << " [label=\"" << cov.i << "\"];\n";
    } else {
      for (const auto& cov : I.strong_up_covers()[static_cast<std::size_t>(src)])
        out << "  n" << src << " -> n" << cov.target << " [label=\"(" << cov.i << "," << cov.j
            << ")\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

enum class HasseFormat { dot, json };

inline std::string hasse_export(const WeakInterval& I, OrderKind order, HasseFormat format) {
  if (format == HasseFormat::dot) return hasse_dot(I, order);
  return hasse_json(I, order).dump(2) + "\n";
}

inline Json to_json(const Sl2Report& report) {
  Json doc;
  doc["pi"] = to_string(report.pi);
  doc["relations"] = {{"HE", report.he_ok ? "pass" : "fail"},
                      {"HF", report.hf_ok ? "pass" : "fail"},
                      {"EF", report.ef_ok ? "pass" : "fail"}};
  Json violations = Json::array();
  for (const auto& v : report.violations) {
    violations.push_back({{"relation", v.relation},
                          {"row", to_string(v.row)},
                          {"col", to_string(v.col)},
                          {"expected", to_string(v.expected)},
                          {"actual", to_string(v.actual)}});
  }
  doc["violations"] = std::move(violations);
  doc["interval_size"] = report.interval_size;
  return doc;
}

inline Json to_json(const SpernerCertificate& cert) {
  Json doc;
  doc["pi"] = to_string(cert.pi);
  doc["verdict"] = to_string(cert.verdict);
  doc["rank_sizes"] = cert.rank_sizes;
  doc["fpower_full_rank"] = cert.fpower_full_rank;
  doc["fpower_ranks"] = cert.fpower_ranks;
  if (!cert.note.empty()) doc["note"] = cert.note;
  return doc;
}

inline Json to_json(const SpernerOracleResults& oracle) {
  Json doc;
  doc["max_antichain_weak"] = oracle.max_antichain_weak;
  doc["max_antichain_strong"] = oracle.max_antichain_strong;
  doc["max_rank_size"] = oracle.max_rank_size;
  doc["antichain_agrees"] = oracle.antichain_agrees;
  doc["k_union_sizes"] = oracle.k_union_sizes;
  doc["top_rank_sums"] = oracle.top_rank_sums;
  doc["k_sperner_agrees"] = oracle.k_sperner_agrees;
  return doc;
}

/// Terms sorted lexicographically by exponent vector; coefficients as
/// decimal strings so any consumer's integer width suffices.
inline Json to_json(const MultiPolynomial& poly) {
  Json doc;
  doc["nvars"] = poly.nvars();
  Json terms = Json::array();
  for (const auto& [exp, coeff] : poly.terms())
    terms.push_back({{"exp", exp}, {"coeff", to_string(coeff)}});
  doc["terms"] = std::move(terms);
  return doc;
}

inline Json to_json(const SignGrid& grid, const Permutation& sigma, const Permutation& pi) {
  Json doc;
  doc["pi"] = to_string(pi);
  doc["sigma"] = to_string(sigma);
  Json rows = Json::array();
  for (int i = 1; i < grid.n(); ++i) rows.push_back(i);
  Json cols = Json::array();
  for (int j = 0; j <= grid.n(); ++j) cols.push_back(j);
  doc["row_labels"] = std::move(rows);
  doc["col_labels"] = std::move(cols);
  Json cells = Json::array();
  for (int i = 1; i < grid.n(); ++i) {
    Json row = Json::array();
    for (int j = 0; j <= grid.n(); ++j) row.push_back(grid.at(i, j));
    cells.push_back(std::move(row));
  }
  doc["grid"] = std::move(cells);
  doc["weighted_sum"] = grid.weighted_sum();
  return doc;
}

inline std::string render_table(const SignGrid& grid) {
  std::ostringstream out;
  out << "      ";
  for (int j = 0; j <= grid.n(); ++j) out << (j < 10 ? "  " : " ") << j;
  out << "\n";
  for (int i = 1; i < grid.n(); ++i) {
    out << (i < 10 ? " " : "") << i << " |";
    for (int j = 0; j <= grid.n(); ++j) {
      const int v = grid.at(i, j);
      if (v == 0)
        out << "  .";
      else
        out << (v > 0 ? " +1" : " -1");
    }
    out << "\n";
  }
  return out.str();
}

inline Json to_json(const PermutationPath& path, const Permutation& sigma,
                    const Permutation& pi) {
  Json doc;
  doc["pi"] = to_string(pi);
  doc["sigma"] = to_string(sigma);
  doc["column"] = path.column_value;
  doc["pivot_position"] = path.pivot_position;
  doc["pivot"] = {{"x", path.pivot_x}, {"y", path.pivot_y}};
  Json points = Json::array();
  for (const auto& p : path.points)
    points.push_back({{"x", p.x}, {"y", p.y}, {"quadrant", quadrant_name(p.quadrant)}});
  doc["points"] = std::move(points);
  return doc;
}

inline std::string render_table(const PermutationPath& path) {
  std::ostringstream out;
  out << "column " << path.column_value << " (pivot position " << path.pivot_position
      << ", lines x=" << path.pivot_x << ", y=" << path.pivot_y << ")\n";
  for (const auto& p : path.points)
    out << "  (" << p.x << "," << p.y << ")  quadrant " << quadrant_name(p.quadrant) << "\n";
  return out.str();
}

inline Json diamond_json(const Permutation& sigma, const Permutation& tau, const Permutation& pi,
                         const std::optional<DiamondPair>& pair) {
  Json doc;
  doc["pi"] = to_string(pi);
  doc["sigma"] = to_string(sigma);
  doc["tau"] = to_string(tau);
  doc["exists"] = pair.has_value();
  if (pair) {
    doc["alpha"] = to_string(pair->alpha);
    doc["beta"] = to_string(pair->beta);
    doc["m"] = pair->m;
  }
  return doc;
}

}  // namespace bruhat_sl2

#endif  // BRUHAT_SL2_SERIALIZE_HPP
