#include "app/reports.hpp"

#include <cmath>
#include <cstdio>

#include "evenfix/errors.hpp"

namespace evenfix::app {

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

json number(double x) {
  if (std::isfinite(x)) return x;
  if (std::isnan(x)) return "nan";
  return x > 0 ? "inf" : "-inf";
}

json vector_json(const Eigen::VectorXd& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(number(v(i)));
  return out;
}

json matrix_json(const Eigen::MatrixXd& m) {
  json out = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) out.push_back(vector_json(m.row(r).transpose()));
  return out;
}

namespace {

json parameters_of(const FiniteMatrixGroup& G) {
  switch (G.family()) {
    case Family::g3: return {{"m", G.parameter()}};
    case Family::g8: return {{"l", G.parameter()}, {"k", G.k()}, {"tau", G.tau()}};
    case Family::custom: break;
  }
  return json::object();
}

}  // namespace

json group_summary(const FiniteMatrixGroup& G) {
  return {{"family", to_string(G.family())},
          {"parameters", parameters_of(G)},
          {"dim", G.dim()},
          {"order", G.order()}};
}

std::string group_document(const FiniteMatrixGroup& G, int root) {
  json params = parameters_of(G);
  if (G.family() != Family::custom) params["root"] = root;
  std::string out = "{\n  \"schemaVersion\": " + std::to_string(kSchemaVersion) + ",\n  \"dim\": " +
                    std::to_string(G.dim()) + ",\n  \"order\": " + std::to_string(G.order()) +
                    ",\n  \"family\": \"" + to_string(G.family()) + "\",\n  \"parameters\": " + params.dump() +
                    ",\n  \"elements\": [";
  for (std::size_t i = 0; i < G.order(); ++i) {
    const Eigen::MatrixXd& m = G.matrix(i);
    out += i == 0 ? "\n    [" : ",\n    [";
    for (Eigen::Index r = 0; r < m.rows(); ++r)
      for (Eigen::Index c = 0; c < m.cols(); ++c) {
        if (r + c > 0) out += ", ";
        out += format_double(m(r, c));
      }
    out += "]";
  }
  out += "\n  ]\n}\n";
  return out;
}

FiniteMatrixGroup read_group_document(const std::string& text) {
  const json doc = json::parse(text);
  const int dim = doc.at("dim").get<int>();
  const auto order = doc.at("order").get<std::size_t>();
  const std::string family = doc.value("family", "custom");
  const json params = doc.value("parameters", json::object());
  if (dim < 1) throw ParameterError("group document has dim < 1");

  std::vector<Eigen::MatrixXd> mats;
  for (const auto& row : doc.at("elements")) {
    const auto entries = row.get<std::vector<double>>();
    if (entries.size() != static_cast<std::size_t>(dim * dim))
      throw ParameterError("group element has " + std::to_string(entries.size()) + " entries, expected " +
                           std::to_string(dim * dim));
    Eigen::MatrixXd m(dim, dim);
    for (int r = 0; r < dim; ++r)
      for (int c = 0; c < dim; ++c) m(r, c) = entries[static_cast<std::size_t>(r * dim + c)];
    mats.push_back(std::move(m));
  }
  if (mats.size() != order) throw ParameterError("group document lists a different number of elements than its order");

  const int root = params.value("root", 1);
  FiniteMatrixGroup G = family == "g3"   ? close_group(build_g3_generators(params.at("m").get<int>(), root))
                        : family == "g8" ? close_group(build_g8_generators(params.at("l").get<int>(), root))
                                         : close_group(custom_generators(mats));
  if (G.order() != order || G.dim() != dim) throw StructuralFault("group document does not describe a closed group of the stated order");
  for (const auto& m : mats)
    if (!G.find(m)) throw StructuralFault("group document contains an element outside the " + family + " group it names");
  return G;
}

json to_json(const RankDecision& d) {
  return {{"rank", d.rank},
          {"smallestKept", number(d.smallest_kept)},
          {"largestDropped", number(d.largest_dropped)},
          {"gap", number(d.gap())}};
}

json to_json(const RelationReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"holds", c.holds}, {"deviation", number(c.deviation)}});
  return {{"l", r.l},          {"k", r.k},
          {"tau", r.tau},      {"orderA", r.order_A},
          {"orderR1", r.order_R1}, {"allHold", r.all_hold()},
          {"checks", checks}};
}

json to_json(const IsotropyType& t) {
  return {{"fixedDim", t.fixed_dim},
          {"subgroupOrder", t.subgroup_order},
          {"conjugates", t.conjugates},
          {"witness", vector_json(t.witness)}};
}

json to_json(const IsotropyAnalysis& a) {
  json types = json::array();
  for (const auto& t : a.types) types.push_back(to_json(t));
  return {{"types", types}, {"fixDimOfGroup", a.fix_of_group_dim}, {"latticeSize", a.lattice_size}};
}

json to_json(const OmegaReport& o) {
  auto arr = [](const auto& a) {
    json out = json::array();
    for (const auto& x : a) out.push_back(x);
    return out;
  };
  json sdev = json::array(), rdev = json::array();
  for (double d : o.strict_deviation) sdev.push_back(number(d));
  for (double d : o.reconciled_deviation) rdev.push_back(number(d));
  return {{"tau", o.tau},
          {"q1", o.q1},
          {"q2", o.q2},
          {"q3", o.q3},
          {"c", o.c},
          {"inNormalizer", arr(o.in_normalizer)},
          {"strict", {{"pass", o.strict_pass}, {"passForSomeRoot", o.strict_pass_any_root}, {"deviation", sdev}}},
          {"reconciled", {{"pass", o.reconciled_pass}, {"root", o.reconciled_root}, {"deviation", rdev}}}};
}

json to_json(const NormalizerReport& n) {
  json gens = json::array();
  for (const auto& g : n.weyl_generators) gens.push_back(matrix_json(g));
  return {{"l", n.l},
          {"tau", n.tau},
          {"orderH", n.H.size()},
          {"orderHPrime", n.H_prime.size()},
          {"normalizerOrder", n.normalizer.size()},
          {"normalizersCoincide", n.normalizer == n.normalizer_prime},
          {"indexInG", n.index_in_G},
          {"weylOrder", n.weyl_order},
          {"fixDimH", n.fix_dim_H},
          {"fixDimHPrime", n.fix_dim_H_prime},
          {"directSumRank", n.direct_sum_rank},
          {"antidiagonal", n.antidiagonal},
          {"weylCommutantDim", n.weyl_commutant_dim},
          {"weylGenerators", gens},
          {"omega", to_json(n.omega)}};
}

json to_json(const EquivariantBasis& b) {
  json maps = json::array();
  for (const auto& p : b.maps) {
    json terms = json::array();
    for (std::size_t c = 0; c < p.components.size(); ++c)
      for (const auto& [e, coef] : p.components[c].terms())
        terms.push_back({{"component", c}, {"exponents", e}, {"coefficient", number(coef)}});
    maps.push_back(terms);
  }
  return {{"degree", b.degree}, {"rank", to_json(b.decision)}, {"maps", maps}};
}

json to_json(const BranchZero& z) {
  json out = {{"angle", number(z.angle)},
              {"point", vector_json(z.point)},
              {"scalarDerivative", number(z.derivative)},
              {"residual", number(z.residual)},
              {"regular", z.regular}};
  if (z.isotropy_fixed_dim >= 0) out["isotropyFixedDim"] = z.isotropy_fixed_dim;
  return out;
}

json to_json(const BranchReport& r) {
  json zeros = json::array();
  for (const auto& z : r.zeros) zeros.push_back(to_json(z));
  return {{"label", r.label},
          {"a", number(r.a)},
          {"lifted", r.lifted},
          {"degenerate", r.degenerate},
          {"degenerateParameter", r.degenerate_parameter ? number(*r.degenerate_parameter) : json(nullptr)},
          {"allRegular", r.all_regular()},
          {"zeroCount", r.zeros.size()},
          {"zeros", zeros}};
}

json to_json(const std::vector<BranchReport>& reports) {
  json out = json::array();
  for (const auto& r : reports) out.push_back(to_json(r));
  return out;
}

json to_json(const TableRow& row) {
  return {{"inputs", row.inputs},
          {"word", row.word},
          {"expected", to_string(row.expected)},
          {"computed", to_string(row.computed)},
          {"match", row.match()}};
}

json to_json(const AbstractRelationReport& r) {
  auto list = [](const std::vector<IdentityCheck>& v) {
    json out = json::array();
    for (const auto& c : v) out.push_back({{"name", c.name}, {"holds", c.holds}});
    return out;
  };
  return {{"hypotheses", list(r.hypotheses)},
          {"conclusions", list(r.conclusions)},
          {"cosetsDisjoint", r.cosets_disjoint},
          {"partition", r.partition},
          {"allHold", r.all_hold()}};
}

json to_json(const NormalizerKReport& r) {
  json pieces = json::array();
  static constexpr const char* parity[8] = {"even", "odd", "even", "odd", "odd", "even", "odd", "even"};
  for (std::size_t i = 0; i < 8; ++i)
    pieces.push_back({{"coset", to_string(kCosetLabels[i])}, {"powers", parity[i]}, {"size", r.piece_sizes[i]}});
  return {{"groupOrder", r.group_order},
          {"orderK", r.K_order},
          {"index", r.index},
          {"matchesUnion", r.matches_union},
          {"pieces", pieces},
          {"generatorsCommuteWithH", r.generators_commute_h},
          {"generatorsCommuteWithHPrime", r.generators_commute_h_prime},
          {"normalizerOfHIsK", r.normalizer_of_h_is_K}};
}

}  // namespace evenfix::app
