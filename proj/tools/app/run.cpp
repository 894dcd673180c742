#include "app/run.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "app/reports.hpp"
#include "evenfix/errors.hpp"
#include "evenfix/parallel.hpp"

namespace evenfix::app {
namespace {

struct Outcome {
  std::string body;
  int code = exit_pass;
};

std::string render(json doc) { return doc.dump(2) + "\n"; }

json header(const RunConfig& c) {
  return {{"schemaVersion", kSchemaVersion}, {"command", to_string(c.command)}, {"seed", c.seed}};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParameterError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

FiniteMatrixGroup load_group(const RunConfig& c) {
  if (c.group_path) return read_group_document(read_file(*c.group_path));
  if (c.family == "g3") return close_group(build_g3_generators(c.m.value_or(3), c.root));
  if (c.family == "g8") return close_group(build_g8_generators(c.l.value_or(1), c.root));
  throw ParameterError("unknown family '" + c.family + "'");
}

Outcome cmd_build(const RunConfig& c) {
  const FiniteMatrixGroup G = load_group(c);
  return {group_document(G, c.root), exit_pass};
}

Outcome cmd_analyze(const RunConfig& c) {
  const FiniteMatrixGroup G = load_group(c);
  json doc = header(c);
  doc["group"] = group_summary(G);
  const CommutantReport comm = commutant(G);
  doc["commutant"] = {{"dimension", comm.dimension}, {"rank", to_json(comm.decision)}};
  doc["isotropy"] = to_json(analyze_isotropy(G, c.seed));
  if (G.family() == Family::g8) {
    doc["relations"] = to_json(verify_matrix_relations(G.parameter()));
    doc["normalizer"] = to_json(normalizer_report(G));
  }
  return {render(doc), exit_pass};
}

Outcome cmd_molien(const RunConfig& c) {
  if (c.degree < 1 || c.degree > kMaxCharacterDegree)
    throw ParameterError("degree must lie in 1.." + std::to_string(kMaxCharacterDegree));
  const FiniteMatrixGroup G = load_group(c);
  json doc = header(c);
  doc["group"] = group_summary(G);
  json rows = json::array();
  for (int d = 1; d <= c.degree; ++d) {
    const CharacterCount cc = equivariant_character(G, d);
    rows.push_back({{"degree", d}, {"dimension", cc.dimension}, {"raw", number(cc.raw)}});
  }
  doc["dimensions"] = rows;
  if (c.basis) doc["basis"] = to_json(reynolds_equivariant_basis(G, c.degree));
  return {render(doc), exit_pass};
}

Outcome cmd_cosets(const RunConfig& c) {
  const Presentation p = make_presentation(c.k.value_or(12), c.commuting, c.s);
  const WordGroup W(p);
  json doc = header(c);
  doc["presentation"] = {{"k", p.k}, {"tau", p.tau()}, {"commuting", p.commuting}};
  if (p.commuting) doc["presentation"]["s"] = p.s;
  doc["order"] = W.order();

  json rmul = json::array();
  for (CosetLabel L : kCosetLabels)
    for (int q = 0; q < 4; ++q)
      rmul.push_back({{"coset", to_string(L)}, {"power", q}, {"timesR", to_string(W.r_table(L, q))}});
  doc["rightMultiplicationByR"] = rmul;

  const AbstractRelationReport rel = verify_abstract_relations(p);
  doc["relations"] = to_json(rel);
  bool ok = rel.all_hold();
  if (!p.commuting) {
    const NormalizerKReport nk = abstract_normalizer_K(p);
    doc["normalizerK"] = to_json(nk);
    ok = ok && nk.index == 2 && nk.matches_union && nk.generators_commute_h && nk.generators_commute_h_prime;
  }
  if (c.check_tables) {
    if (p.commuting) throw ParameterError("--check-tables applies to the non-commuting case");
    const CosetTableReport t = coset_table(p);
    auto rows = [](const std::vector<TableRow>& v) {
      json out = json::array();
      for (const auto& r : v) out.push_back(to_json(r));
      return out;
    };
    auto mismatches = [](const std::vector<TableRow>& v) {
      json out = json::array();
      for (const auto& r : v)
        if (!r.match()) out.push_back(to_json(r));
      return out;
    };
    const std::size_t total = t.tail_rows.size() + t.carry_rows.size();
    const std::size_t matched = t.tail_matches() + t.carry_matches();
    doc["tables"] = {{"matched", matched},
                     {"total", total},
                     {"tail", {{"matched", t.tail_matches()}, {"rows", rows(t.tail_rows)}, {"mismatches", mismatches(t.tail_rows)}}},
                     {"carry", {{"matched", t.carry_matches()}, {"rows", rows(t.carry_rows)}, {"mismatches", mismatches(t.carry_rows)}}},
                     {"carryAlternativeSuffix", {{"suffix", "a r^2"}, {"matched", t.carry_alt_matches()}, {"rows", rows(t.carry_alt_rows)}}}};
    ok = ok && matched == total;
  }
  doc["pass"] = ok;
  return {render(doc), ok ? exit_pass : exit_claim_failure};
}

std::vector<BranchReport> branches_for(const RunConfig& c, double a) {
  if (c.family == "g3") return g3_branches(c.m.value_or(3), a);
  return lift_branches_g8(c.l.value_or(1), a);
}

Outcome cmd_bifurcate(const RunConfig& c) {
  if (c.group_path) throw ParameterError("bifurcate builds its group from --family");
  if (c.sweep) {
    const Sweep& s = *c.sweep;
    std::string csv = "a,fixed_space,zeros,degenerate,all_regular\n";
    for (int i = 0; i < s.steps; ++i) {
      const double a = s.steps == 1 ? s.a0 : s.a0 + (s.a1 - s.a0) * i / (s.steps - 1);
      for (const auto& r : branches_for(c, a))
        csv += format_double(a) + "," + r.label + "," + std::to_string(r.zeros.size()) + "," +
               (r.degenerate ? "1" : "0") + "," + (r.all_regular() ? "1" : "0") + "\n";
    }
    return {csv, exit_pass};
  }
  json doc = header(c);
  doc["family"] = c.family;
  if (c.family == "g3")
    doc["m"] = c.m.value_or(3);
  else
    doc["l"] = c.l.value_or(1);
  doc["a"] = number(c.a);
  doc["reports"] = to_json(branches_for(c, c.a));
  return {render(doc), exit_pass};
}

struct Checklist {
  json items = json::array();
  bool all = true;
  void add(std::string name, bool pass, json detail = json::object()) {
    all = all && pass;
    items.push_back({{"name", std::move(name)}, {"pass", pass}, {"detail", std::move(detail)}});
  }
};

bool branches_regular(const std::vector<BranchReport>& reports) {
  return reports.size() == 3 && std::all_of(reports.begin(), reports.end(), [](const BranchReport& r) {
           return !r.degenerate && !r.zeros.empty() && r.all_regular();
         });
}

void certify_g3(const RunConfig& c, const FiniteMatrixGroup& G, Checklist& out) {
  const int m = G.parameter();
  out.add("order", G.order() == static_cast<std::size_t>(16 * m), {{"order", G.order()}, {"expected", 16 * m}});

  const CommutantReport comm = commutant(G);
  out.add("absolutely irreducible", comm.dimension == 1, {{"commutantDim", comm.dimension}, {"rank", to_json(comm.decision)}});

  const IsotropyAnalysis iso = analyze_isotropy(G, c.seed);
  const bool three_planes = iso.types.size() == 3 && std::all_of(iso.types.begin(), iso.types.end(),
                                                                  [](const IsotropyType& t) { return t.fixed_dim == 2; });
  out.add("three isotropy types with 2-dimensional fixed spaces", three_planes, to_json(iso));

  const int d2 = equivariant_dimension(G, 2), d3 = equivariant_dimension(G, 3);
  const EquivariantBasis basis = reynolds_equivariant_basis(G, 3);
  out.add("equivariant dimensions", d2 == 0 && d3 == 3 && static_cast<int>(basis.maps.size()) == d3,
          {{"degree2", d2}, {"degree3", d3}, {"reynoldsRank3", basis.maps.size()}});

  const auto [e1, e2] = g3_cubic_basis();
  const auto [i1, i2] = g3_quartic_invariants();
  const GradientCheck g1 = check_gradient(i1, e1, c.seed), g2 = check_gradient(i2, e2, c.seed);
  const double def1 = equivariance_defect(G, e1, 50, c.seed), def2 = equivariance_defect(G, e2, 50, c.seed);
  out.add("cubic equivariants are invariant gradients",
          g1.holds() && g2.holds() && def1 < tol::equivariance && def2 < tol::equivariance,
          {{"scale1", number(g1.scale)}, {"scale2", number(g2.scale)}, {"defect1", number(def1)}, {"defect2", number(def2)}});

  json branches = json::object();
  bool ok = true;
  for (double a : {-2.0, 0.0, 0.7, 3.0}) {
    const auto reports = g3_branches(m, a);
    ok = ok && branches_regular(reports);
    branches[format_double(a)] = to_json(reports);
  }
  out.add("regular branches on every fixed plane", ok, branches);
}

void certify_g8(const RunConfig& c, const FiniteMatrixGroup& G, Checklist& out) {
  const int l = G.parameter(), k = G.k(), tau = G.tau();
  out.add("order", G.order() == static_cast<std::size_t>(64 + 128 * l), {{"order", G.order()}, {"expected", 64 + 128 * l}});

  const RelationReport rel = verify_matrix_relations(l);
  out.add("matrix relations", rel.all_hold(), to_json(rel));

  const CommutantReport comm = commutant(G);
  out.add("absolutely irreducible", comm.dimension == 1, {{"commutantDim", comm.dimension}, {"rank", to_json(comm.decision)}});

  const IsotropyAnalysis iso = analyze_isotropy(G, c.seed);
  const bool even = iso.fix_of_group_dim % 2 == 0 &&
                    std::all_of(iso.types.begin(), iso.types.end(), [](const IsotropyType& t) { return t.fixed_dim % 2 == 0; });
  out.add("all fixed spaces even-dimensional", even, to_json(iso));

  const NormalizerReport nr = normalizer_report(G);
  const bool structure = nr.fix_dim_H == 4 && nr.fix_dim_H_prime == 4 && nr.normalizer == nr.normalizer_prime &&
                         nr.index_in_G == 2 && nr.direct_sum_rank == 8 &&
                         nr.weyl_order == static_cast<std::size_t>(16 * tau);
  json nj = to_json(nr);
  out.add("normalizer of <R2^2>", structure, nj);
  out.add("normalizer generators", nr.omega.reconciled_pass, nj["omega"]);

  const WeylCheck weyl = verify_weyl_is_g3(G, nr.H, tau);
  out.add("Weyl group isomorphic to G3(tau)", weyl.holds(),
          {{"weylOrder", weyl.weyl_order},
           {"referenceOrder", weyl.reference_order},
           {"histogramMatch", weyl.histogram_match},
           {"status", to_string(weyl.isomorphism.status)},
           {"nodes", weyl.isomorphism.nodes}});

  const int d2 = equivariant_dimension(G, 2), d3 = equivariant_dimension(G, 3);
  const RestrictionRank rr = restriction_rank(G, nr.H, 3);
  out.add("equivariant dimensions", d2 == 0 && rr.domain_dim == d3, {{"degree2", d2}, {"degree3", d3}, {"reynoldsRank3", rr.domain_dim}});
  out.add("restriction of cubic equivariants is surjective", rr.surjective(),
          {{"domainDim", rr.domain_dim}, {"imageRank", rr.image_rank}, {"targetDim", rr.target_dim}});

  const auto lifted = lift_branches_g8(l, 0.0);
  bool lifted_even = true;
  for (const auto& r : lifted)
    for (const auto& z : r.zeros) lifted_even = lifted_even && z.isotropy_fixed_dim >= 0 && z.isotropy_fixed_dim % 2 == 0;
  out.add("lifted branches regular with even isotropy", branches_regular(lifted) && lifted_even, to_json(lifted));

  const std::size_t abstract = abstract_order(make_presentation(k));
  out.add("abstract presentation order", abstract == G.order(), {{"k", k}, {"abstractOrder", abstract}});
}

Outcome cmd_certify(const RunConfig& c) {
  const FiniteMatrixGroup G = load_group(c);
  Checklist list;
  if (G.family() == Family::g3)
    certify_g3(c, G, list);
  else
    certify_g8(c, G, list);
  json doc = header(c);
  doc["group"] = group_summary(G);
  doc["checks"] = list.items;
  doc["pass"] = list.all;
  return {render(doc), list.all ? exit_pass : exit_claim_failure};
}

Outcome dispatch(const RunConfig& c) {
  switch (c.command) {
    case Command::build: return cmd_build(c);
    case Command::analyze: return cmd_analyze(c);
    case Command::molien: return cmd_molien(c);
    case Command::cosets: return cmd_cosets(c);
    case Command::bifurcate: return cmd_bifurcate(c);
    case Command::certify: return cmd_certify(c);
  }
  throw InternalFault("unknown command");
}

void write_error(std::ostream& err, const std::string& kind, const std::string& message) {
  const json doc = {{"schemaVersion", kSchemaVersion}, {"error", {{"kind", kind}, {"message", message}}}};
  err << doc.dump() << '\n';
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.threads) set_thread_count(*config.threads);
    const Outcome o = dispatch(config);
    if (config.output) {
      std::ofstream f(*config.output, std::ios::binary);
      if (!f) throw ParameterError("cannot write " + *config.output);
      f << o.body;
    } else {
      out << o.body;
    }
    return o.code;
  } catch (const ParameterError& e) {
    write_error(err, to_string(e.kind()), e.what());
    return exit_usage;
  } catch (const Error& e) {
    write_error(err, to_string(e.kind()), e.what());
    return exit_internal;
  } catch (const json::exception& e) {
    write_error(err, "input", e.what());
    return exit_usage;
  } catch (const std::exception& e) {
    write_error(err, "internal", e.what());
    return exit_internal;
  }
}

}  // namespace evenfix::app
