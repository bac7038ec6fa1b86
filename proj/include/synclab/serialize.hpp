#pragma once

#include <Eigen/Dense>
#include <json.hpp>
#include <string>
#include <vector>

#include "synclab/equilibria.hpp"
#include "synclab/invariants.hpp"

namespace synclab {

using json = nlohmann::json;

// Shortest "%.17g" rendering; round-trips every double.
std::string format_double(double v);

json to_json(const Eigen::VectorXd& v);
json to_json(const Eigen::MatrixXd& m);   // nested row-major arrays
json to_json(const Eigen::MatrixXcd& m);  // nested row-major arrays of [re, im]
json to_json(const DriftReport& r);
json to_json(const std::vector<DriftReport>& rs);
json to_json(const FiniteGroupRep& rep);

// Parsers report failures as ErrorCode::Schema with the JSON pointer of the offending node.
double number_at(const json& j, const std::string& ptr);
Eigen::VectorXd vector_from_json(const json& j, const std::string& ptr);
Eigen::MatrixXd real_matrix_from_json(const json& j, const std::string& ptr);
Eigen::MatrixXcd complex_matrix_from_json(const json& j, const std::string& ptr);

// Git blob id: SHA-1 of "blob <len>\0" + content, lowercase hex.
std::string git_blob_sha1(const std::string& content);

}  // namespace synclab
