#include "inpp/matrix_json.hpp"

#include "inpp/error.hpp"

namespace inpp {

nlohmann::json to_json(const RationalSymMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < m.order(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < m.order(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return {{"n", m.order()}, {"entries", std::move(rows)}};
}

nlohmann::json to_json(const RationalMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

RationalSymMatrix rational_matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("entries")) {
    throw DomainError("matrix JSON needs fields \"n\" and \"entries\"");
  }
  if (!j["n"].is_number_integer()) throw DomainError("matrix JSON: \"n\" must be an integer");
  const int n = j["n"].get<int>();
  const auto& entries = j["entries"];
  if (n < 0 || !entries.is_array() || static_cast<int>(entries.size()) != n) {
    throw DomainError("matrix JSON: \"entries\" must have n rows");
  }
  RationalMatrix m(n, n);
  for (int r = 0; r < n; ++r) {
    const auto& row = entries[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<int>(row.size()) != n) {
      throw DomainError("matrix JSON: row " + std::to_string(r + 1) + " must have n entries");
    }
    for (int c = 0; c < n; ++c) {
      const auto& cell = row[static_cast<std::size_t>(c)];
      if (cell.is_string()) {
        m(r, c) = parse_rational(cell.get<std::string>());
      } else if (cell.is_number_integer()) {
        m(r, c) = Rational(cell.get<long>());
      } else {
        throw DomainError("matrix JSON: entries must be rational strings");
      }
    }
  }
  return RationalSymMatrix::from_matrix(m);
}

}  // namespace inpp
