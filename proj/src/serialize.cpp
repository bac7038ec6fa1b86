#include "synclab/serialize.hpp"

#include <openssl/sha.h>

#include <cmath>
#include <cstdio>

#include "synclab/error.hpp"

namespace synclab {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json to_json(const Eigen::VectorXd& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

json to_json(const Eigen::MatrixXd& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) r.push_back(m(i, j));
    rows.push_back(std::move(r));
  }
  return rows;
}

json to_json(const Eigen::MatrixXcd& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) r.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(std::move(r));
  }
  return rows;
}

namespace {

json finite_or_string(double v) {
  if (std::isfinite(v)) return v;
  return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
}

}  // namespace

json to_json(const DriftReport& r) {
  return {{"name", r.name},
          {"kind", to_string(r.kind)},
          {"v0", finite_or_string(r.v0)},
          {"max_abs_dev", finite_or_string(r.max_abs_dev)},
          {"max_rel_dev", finite_or_string(r.max_rel_dev)},
          {"tolerance", r.tolerance},
          {"verdict", r.verdict()}};
}

json to_json(const std::vector<DriftReport>& rs) {
  json a = json::array();
  for (const auto& r : rs) a.push_back(to_json(r));
  return a;
}

json to_json(const FiniteGroupRep& rep) {
  json mats = json::array();
  for (const auto& m : rep.rho) mats.push_back(to_json(m));
  return {{"group", rep.name()},
          {"dim", rep.dim()},
          {"irreducible", rep.irreducible},
          {"elements", rep.elements},
          {"rho", std::move(mats)}};
}

namespace {

[[noreturn]] void schema_error(const std::string& ptr, const std::string& what) {
  throw Error(ErrorCode::Schema, "at " + (ptr.empty() ? std::string("/") : ptr) + ": " + what);
}

}  // namespace

double number_at(const json& j, const std::string& ptr) {
  if (!j.is_number()) schema_error(ptr, "expected a number");
  return j.get<double>();
}

Eigen::VectorXd vector_from_json(const json& j, const std::string& ptr) {
  if (!j.is_array()) schema_error(ptr, "expected an array of numbers");
  Eigen::VectorXd v(static_cast<Eigen::Index>(j.size()));
  for (size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = number_at(j[i], ptr + "/" + std::to_string(i));
  return v;
}

Eigen::MatrixXd real_matrix_from_json(const json& j, const std::string& ptr) {
  if (!j.is_array() || j.empty()) schema_error(ptr, "expected a non-empty array of rows");
  const size_t cols = j[0].is_array() ? j[0].size() : 0;
  Eigen::MatrixXd m(static_cast<Eigen::Index>(j.size()), static_cast<Eigen::Index>(cols));
  for (size_t r = 0; r < j.size(); ++r) {
    const std::string rp = ptr + "/" + std::to_string(r);
    if (!j[r].is_array() || j[r].size() != cols) schema_error(rp, "rows must be arrays of equal length");
    for (size_t c = 0; c < cols; ++c)
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = number_at(j[r][c], rp + "/" + std::to_string(c));
  }
  return m;
}

Eigen::MatrixXcd complex_matrix_from_json(const json& j, const std::string& ptr) {
  if (!j.is_array() || j.empty()) schema_error(ptr, "expected a non-empty array of rows");
  const size_t cols = j[0].is_array() ? j[0].size() : 0;
  Eigen::MatrixXcd m(static_cast<Eigen::Index>(j.size()), static_cast<Eigen::Index>(cols));
  for (size_t r = 0; r < j.size(); ++r) {
    const std::string rp = ptr + "/" + std::to_string(r);
    if (!j[r].is_array() || j[r].size() != cols) schema_error(rp, "rows must be arrays of equal length");
    for (size_t c = 0; c < cols; ++c) {
      const std::string cp = rp + "/" + std::to_string(c);
      const json& e = j[r][c];
      cplx z;
      if (e.is_number()) {
        z = e.get<double>();
      } else if (e.is_array() && e.size() == 2) {
        z = cplx(number_at(e[0], cp + "/0"), number_at(e[1], cp + "/1"));
      } else {
        schema_error(cp, "expected a number or a [re, im] pair");
      }
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = z;
    }
  }
  return m;
}

std::string git_blob_sha1(const std::string& content) {
  const std::string data = "blob " + std::to_string(content.size()) + std::string(1, '\0') + content;
  unsigned char md[SHA_DIGEST_LENGTH];
  SHA1(reinterpret_cast<const unsigned char*>(data.data()), data.size(), md);
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned char b : md) {
    out.push_back(hex[b >> 4]);
    out.push_back(hex[b & 15]);
  }
  return out;
}

}  // namespace synclab
