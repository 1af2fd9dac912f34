#include "qdef/json.hpp"

namespace qdef {

using nlohmann::json;

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

json vector_to_json(const Vector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i)
    out.push_back(v(i));
  return out;
}

Matrix matrix_from_json(const json& j) {
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = rows == 0 ? 0 : static_cast<Eigen::Index>(j.at(0).size());
  Matrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    if (static_cast<Eigen::Index>(j.at(i).size()) != cols)
      throw InvalidArgument("matrix_from_json: ragged rows");
    for (Eigen::Index c = 0; c < cols; ++c)
      m(i, c) = j.at(i).at(c).get<double>();
  }
  return m;
}

json algebra_to_json(const AlgebraSpec& spec) {
  if (!spec.serializable())
    throw InvalidArgument("algebra '" + spec.name() +
                          "' is user-supplied and cannot be serialized");
  json j{{"name", spec.name()},
         {"kind", std::string(to_string(spec.kind()))},
         {"q", spec.ctx().q()}};
  if (spec.ctx().p())
    j["p"] = *spec.ctx().p();
  else
    j["p"] = nullptr;
  return j;
}

AlgebraSpec algebra_from_json(const json& j) {
  std::optional<double> p;
  if (j.contains("p") && !j.at("p").is_null())
    p = j.at("p").get<double>();
  const QContext ctx(j.at("q").get<double>(), p);
  AlgebraSpec spec =
      make_catalog_algebra(j.at("name").get<std::string>(), ctx);
  if (j.contains("kind") && j.at("kind").get<std::string>() !=
                                to_string(spec.kind()))
    throw InvalidArgument("algebra_from_json: kind does not match catalog "
                          "entry '" + spec.name() + "'");
  return spec;
}

json unirrep_to_json(const Unirrep& rep) {
  return json{{"algebra", algebra_to_json(rep.algebra)},
              {"N", rep.N},
              {"delta", rep.delta.value()},
              {"q", rep.ctx().q()},
              {"j0", vector_to_json(rep.j0)},
              {"labels", vector_to_json(rep.labels)},
              {"Jplus", matrix_to_json(rep.Jp)},
              {"Jminus", matrix_to_json(rep.Jm)},
              {"casimir", rep.casimir}};
}

json wigner_to_json(const WignerTable& table) {
  json blocks = json::array();
  for (const auto& b : table.blocks)
    blocks.push_back(json{{"N", b.N}, {"coeffs", matrix_to_json(b.coeffs)}});
  return json{{"N1", table.N1},
              {"N2", table.N2},
              {"colours",
               {table.zeta.value(), table.eta.value(), table.delta.value()}},
              {"q", table.q},
              {"blocks", std::move(blocks)}};
}

json rmatrix_to_json(const Unirrep& rep1, const Unirrep& rep2,
                     const Matrix& R) {
  return json{{"N1", rep1.N},
              {"N2", rep2.N},
              {"colours", {rep1.delta.value(), rep2.delta.value()}},
              {"q", rep1.ctx().q()},
              {"R", matrix_to_json(R)}};
}

} // namespace qdef
