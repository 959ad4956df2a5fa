#include "nilproj/matrix_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace nilproj {

namespace {

using ordered_json = nlohmann::ordered_json;

double finite_number(const nlohmann::json& j, const char* what) {
  if (!j.is_number()) throw ParseError(std::string("expected a number for ") + what);
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw ParseError(std::string("non-finite value for ") + what);
  return v;
}

ComplexMatrix matrix_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("m") || !doc.contains("data"))
    throw ParseError("matrix document must contain n, m and data");
  if (!doc["n"].is_number_integer() || !doc["m"].is_number_integer())
    throw ParseError("n and m must be integers");
  const int n = doc["n"].get<int>();
  const int m = doc["m"].get<int>();
  if (n < 1 || m < 1) throw ParseError("n and m must be positive");
  const auto& data = doc["data"];
  if (!data.is_array() || static_cast<int>(data.size()) != n)
    throw DimensionMismatch("data row count differs from n");
  ComplexMatrix mat(n, m);
  for (int i = 0; i < n; ++i) {
    const auto& row = data[static_cast<size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != m)
      throw DimensionMismatch("data column count differs from m");
    for (int j = 0; j < m; ++j) {
      const auto& pair = row[static_cast<size_t>(j)];
      if (!pair.is_array() || pair.size() != 2)
        throw ParseError("each entry must be a [re, im] pair");
      mat(i, j) = cplx(finite_number(pair[0], "re"), finite_number(pair[1], "im"));
    }
  }
  return mat;
}

ordered_json matrix_to_json(const ComplexMatrix& m) {
  ordered_json doc;
  doc["n"] = m.rows();
  doc["m"] = m.cols();
  ordered_json data = ordered_json::array();
  for (int i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < m.cols(); ++j)
      row.push_back(ordered_json::array({m(i, j).real(), m(i, j).imag()}));
    data.push_back(std::move(row));
  }
  doc["data"] = std::move(data);
  return doc;
}

nlohmann::json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace

ComplexMatrix read_matrix(const std::string& path) {
  try {
    return matrix_from_json(parse_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_matrix(const ComplexMatrix& m, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open " + path + " for writing");
  out << matrix_to_json(m).dump(1) << "\n";
}

void write_matrix_csv(const ComplexMatrix& m, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open " + path + " for writing");
  for (int j = 0; j < m.cols(); ++j)
    out << (j == 0 ? "" : ",") << "re_" << (j + 1) << ",im_" << (j + 1);
  out << "\n";
  char buf[64];
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      std::snprintf(buf, sizeof(buf), "%.17g,%.17g", m(i, j).real(), m(i, j).imag());
      out << (j == 0 ? "" : ",") << buf;
    }
    out << "\n";
  }
}

std::string matrix_to_json_string(const ComplexMatrix& m) {
  return matrix_to_json(m).dump(1);
}

ComplexMatrix matrix_from_json_string(const std::string& text) {
  try {
    return matrix_from_json(nlohmann::json::parse(text));
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what());
  }
}

std::vector<cplx> read_phases(const std::string& path) {
  const nlohmann::json doc = parse_file(path);
  if (!doc.is_array()) throw ParseError(path + ": phases must be an array of [re, im] pairs");
  std::vector<cplx> phases;
  for (const auto& pair : doc) {
    if (!pair.is_array() || pair.size() != 2)
      throw ParseError(path + ": each phase must be a [re, im] pair");
    phases.emplace_back(finite_number(pair[0], "re"), finite_number(pair[1], "im"));
  }
  return phases;
}

}  // namespace nilproj
