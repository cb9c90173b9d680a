#include "spinline/serialize.hpp"

#include <fstream>
#include <sstream>

namespace spinline {

Json matrix_json(const Matrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows; ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols; ++j) row.push_back(scalar_string(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array()) bad_arg("matrix: expected an array of rows");
  std::vector<Vec> rows;
  for (const auto& jr : j) {
    if (!jr.is_array()) bad_arg("matrix: expected an array of scalar strings per row");
    Vec row;
    for (const auto& v : jr) row.push_back(parse_scalar(v.get<std::string>()));
    rows.push_back(std::move(row));
  }
  return Matrix::from_rows(rows);
}

Json poly_json(const Poly& p) {
  Json out = Json::array();
  for (const auto& c : p.c) out.push_back(scalar_string(c));
  return out;
}

Json subspace_json(const Subspace& s) {
  Json out;
  out["ambient"] = s.ambient;
  out["dim"] = s.dim();
  out["basis"] = matrix_json(s.basis);
  return out;
}

Json rep_export_json(const CliffordRep& rep) {
  Json out;
  out["signature"] = Json::array({rep.sig.r, rep.sig.s});
  out["dim"] = rep.dim;
  Json gens = Json::array();
  for (const auto& g : rep.gen) gens.push_back(matrix_json(g));
  out["generators"] = std::move(gens);
  if (rep.sig.n() % 2 == 1) {
    out["metadata"] = Json{{"odd_generator",
                            std::string(rep.odd_branch > 0 ? "+" : "-") +
                                "i*tau_n*T^(" + std::to_string(rep.sig.n() / 2) + ")"}};
  }
  return out;
}

Json algebra_json(const LieAlgebraRep& g) {
  Json out;
  out["signature"] = Json::array({g.sig.r, g.sig.s});
  out["name"] = g.name;
  Json gens = Json::array();
  for (const auto& e : g.gen) gens.push_back(matrix_json(e.mat));
  out["generators"] = std::move(gens);
  if (!g.metadata.empty()) {
    Json meta;
    for (const auto& [k, v] : g.metadata) meta[k] = v;
    out["metadata"] = std::move(meta);
  }
  return out;
}

LieAlgebraRep algebra_from_json(const Json& j) {
  if (!j.contains("signature") || !j["signature"].is_array() || j["signature"].size() != 2)
    bad_arg("algebra import: missing signature [r, s]");
  Signature sig{j["signature"][0].get<int>(), j["signature"][1].get<int>()};
  LieAlgebraRep g;
  g.sig = sig;
  g.name = j.value("name", std::string("import"));
  if (!j.contains("generators") || !j["generators"].is_array())
    bad_arg("algebra import: missing generators array");
  for (const auto& jm : j["generators"]) g.gen.push_back(so_from_matrix(sig, matrix_from_json(jm)));

  // imported generators must be independent to serve as a basis
  if (!g.gen.empty()) {
    std::vector<Vec> rows;
    for (const auto& e : g.gen) {
      Vec v;
      for (const auto& q : e.biv.c) v.emplace_back(q);
      rows.push_back(std::move(v));
    }
    if (rref(Matrix::from_rows(rows)).rank != g.dim())
      bad_arg("algebra import: generators are linearly dependent");
  }
  return g;
}

LieAlgebraRep algebra_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad_arg("algebra import: cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    bad_arg("algebra import: invalid JSON in " + path + ": " + e.what());
  }
  return algebra_from_json(j);
}

Vec spinor_from_json(const Json& j) {
  if (!j.is_array()) bad_arg("spinor: expected an array of scalar strings");
  Vec v;
  for (const auto& e : j) v.push_back(parse_scalar(e.get<std::string>()));
  return v;
}

Vec spinor_from_file(const std::string& path, int expected_dim) {
  std::ifstream in(path);
  if (!in) bad_arg("spinor import: cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    bad_arg("spinor import: invalid JSON in " + path + ": " + e.what());
  }
  Vec v = spinor_from_json(j);
  if (expected_dim >= 0 && static_cast<int>(v.size()) != expected_dim)
    bad_arg("spinor import: expected dimension " + std::to_string(expected_dim) + ", got " +
            std::to_string(v.size()));
  return v;
}

Json line_report_json(const LineReport& report) {
  Json out;
  Json comps = Json::array();
  for (const auto& c : report.components) {
    Json jc;
    jc["basis"] = matrix_json(c.subspace.basis);
    Json chi = Json::array();
    for (const auto& x : c.character) chi.push_back(scalar_string(x));
    jc["character"] = std::move(chi);
    jc["annihilated"] = c.annihilated;
    jc["isolated"] = c.isolated;
    comps.push_back(std::move(jc));
  }
  out["components"] = std::move(comps);
  out["isolated_count"] = report.isolated_count;
  out["family_count"] = report.family_count;
  Json res = Json::array();
  for (const auto& p : report.residual_factors) res.push_back(poly_json(p));
  out["residual_factors"] = std::move(res);
  return out;
}

std::string line_report_text(const LineReport& report) {
  std::ostringstream os;
  os << report.components.size() << " invariant component(s): " << report.isolated_count
     << " isolated line(s), " << report.family_count << " projective family(ies)\n";
  int idx = 0;
  for (const auto& c : report.components) {
    os << "component " << idx++ << ": dim " << c.subspace.dim()
       << (c.isolated ? " (isolated line)" : " (projective family)")
       << (c.annihilated ? ", annihilated" : "") << "\n";
    for (int i = 0; i < c.subspace.dim(); ++i) {
      os << "  basis ";
      for (int j = 0; j < c.subspace.ambient; ++j)
        os << scalar_string(c.subspace.basis.at(i, j)) << (j + 1 < c.subspace.ambient ? " " : "");
      os << "\n";
    }
    os << "  character ";
    for (std::size_t j = 0; j < c.character.size(); ++j)
      os << scalar_string(c.character[j]) << (j + 1 < c.character.size() ? " " : "");
    os << "\n";
  }
  if (!report.residual_factors.empty()) {
    os << "residual factors without Q(i) roots:\n";
    for (const auto& p : report.residual_factors) os << "  " << p.pretty() << "\n";
  }
  return os.str();
}

}  // namespace spinline
