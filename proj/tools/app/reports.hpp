#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "evenfix/bifurcation.hpp"
#include "evenfix/equivariants.hpp"
#include "evenfix/matgroup.hpp"
#include "evenfix/repanalysis.hpp"
#include "evenfix/wordgroup.hpp"

namespace evenfix::app {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

// Non-finite values become strings so the document stays valid JSON.
json number(double x);
json vector_json(const Eigen::VectorXd& v);
json matrix_json(const Eigen::MatrixXd& m);  // row-major list of rows

json group_summary(const FiniteMatrixGroup& G);

// {dim, order, family, parameters, elements}, entries with 17 significant digits.
std::string group_document(const FiniteMatrixGroup& G, int root);
FiniteMatrixGroup read_group_document(const std::string& text);

json to_json(const RankDecision& d);
json to_json(const RelationReport& r);
json to_json(const IsotropyType& t);
json to_json(const IsotropyAnalysis& a);
json to_json(const OmegaReport& o);
json to_json(const NormalizerReport& n);
json to_json(const EquivariantBasis& b);
json to_json(const BranchZero& z);
json to_json(const BranchReport& r);
json to_json(const std::vector<BranchReport>& reports);
json to_json(const TableRow& row);
json to_json(const AbstractRelationReport& r);
json to_json(const NormalizerKReport& r);

// %.17g with a fixed "C" representation
std::string format_double(double x);

}  // namespace evenfix::app
