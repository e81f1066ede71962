#include "hcl/matrix_io.hpp"

#include <fstream>

namespace hcl {

nlohmann::json matrix_to_json(const HermitianMatrix& a) {
  const int n = a.dim();
  nlohmann::json re = nlohmann::json::array();
  nlohmann::json im = nlohmann::json::array();
  for (int i = 0; i < n; ++i) {
    nlohmann::json re_row = nlohmann::json::array();
    nlohmann::json im_row = nlohmann::json::array();
    for (int j = 0; j < n; ++j) {
      re_row.push_back(a(i, j).real());
      im_row.push_back(a(i, j).imag());
    }
    re.push_back(re_row);
    im.push_back(im_row);
  }
  return nlohmann::json{{"n", n}, {"re", re}, {"im", im}};
}

HermitianMatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("re") || !j.contains("im"))
    throw std::invalid_argument("matrix_from_json: expected keys n, re, im");
  const int n = j.at("n").get<int>();
  if (n < 1) throw std::invalid_argument("matrix_from_json: n must be >= 1");
  const auto& re = j.at("re");
  const auto& im = j.at("im");
  if (!re.is_array() || !im.is_array() || static_cast<int>(re.size()) != n ||
      static_cast<int>(im.size()) != n)
    throw std::invalid_argument("matrix_from_json: re/im must be n x n arrays");
  std::vector<cplx> entries(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(re[i].size()) != n || static_cast<int>(im[i].size()) != n)
      throw std::invalid_argument("matrix_from_json: re/im must be n x n arrays");
    for (int jj = 0; jj < n; ++jj)
      entries[static_cast<std::size_t>(i) * n + jj] =
          cplx(re[i][jj].get<double>(), im[i][jj].get<double>());
  }
  return HermitianMatrix::from_entries(n, entries);
}

HermitianMatrix load_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("load_matrix: cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("load_matrix: parse error in " + path + ": " + e.what());
  }
  return matrix_from_json(j);
}

void save_matrix(const HermitianMatrix& a, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("save_matrix: cannot open " + path);
  out << matrix_to_json(a).dump(2) << "\n";
}

}  // namespace hcl
