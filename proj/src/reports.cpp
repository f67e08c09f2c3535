#include "lle/reports.hpp"

#include "lle/operator_io.hpp"

namespace lle {

namespace {

Json expansion_json(const std::vector<std::pair<std::string, Scalar>>& expansion) {
  Json arr = Json::array();
  for (const auto& [name, coeff] : expansion) arr.push_back({name, to_string(coeff)});
  return arr;
}

std::string expansion_flat(const std::vector<std::pair<std::string, Scalar>>& expansion) {
  std::string out;
  for (const auto& [name, coeff] : expansion) {
    if (!out.empty()) out += ";";
    out += name + ":" + to_string(coeff);
  }
  return out.empty() ? "0" : out;
}

}  // namespace

Json clifford_json(const GammaRep& rep) {
  Json relations = Json::array();
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = mu; nu < 4; ++nu) {
      Mat4 anti = mat_mul_sparse(rep.gamma(mu), rep.gamma(nu)) +
                  mat_mul_sparse(rep.gamma(nu), rep.gamma(mu));
      bool ok = exact_equal(anti, Mat4(Scalar(2 * GammaRep::metric(mu, nu)) * mat_identity()));
      relations.push_back({{"mu", mu}, {"nu", nu}, {"ok", ok}});
    }
  Json derived = Json::array();
  bool all = true;
  for (const auto& check : derived_identities(rep)) {
    derived.push_back({{"name", check.name}, {"ok", check.ok}});
    all = all && check.ok;
  }
  for (const auto& rel : relations) all = all && rel["ok"].get<bool>();
  return Json{{"command", "verify-clifford"},
              {"rep", rep.name()},
              {"relations", relations},
              {"derived", derived},
              {"pass", all}};
}

Json verdict_json(const std::string& name, const SymmetryVerdict& verdict, const GammaRep& rep) {
  return Json{{"generator", name},
              {"kind", kind_name(verdict.kind)},
              {"multiplier", render_operator(verdict.multiplier, rep)},
              {"certified", verdict.certified},
              {"ambiguous", verdict.ambiguous}};
}

Json second_order_json(const std::vector<SecondOrderEntry>& entries, const GammaRep& rep) {
  Json arr = Json::array();
  bool all = true;
  for (const auto& e : entries) {
    arr.push_back(verdict_json(e.name, e.verdict, rep));
    all = all && e.verdict.certified;
  }
  return Json{{"command", "verify-second-order"}, {"rep", rep.name()}, {"verdicts", arr},
              {"pass", all}};
}

Json table_json(const StructureConstants& table, const GammaRep* rep) {
  Json entries = Json::array();
  for (const auto& e : table.entries) {
    Json entry{{"left", e.left},
               {"right", e.right},
               {"kind", kind_name(e.kind)},
               {"expansion", expansion_json(e.expansion)},
               {"closed", e.closed}};
    if (!e.closed && rep) entry["residual"] = render_operator(e.residual, *rep);
    entries.push_back(std::move(entry));
  }
  return Json{{"command", "table"},
              {"algebra", table.algebra},
              {"entries", entries},
              {"all_closed", table.all_closed}};
}

std::string table_csv(const StructureConstants& table) {
  std::string out = "left,right,kind,closed,expansion\n";
  for (const auto& e : table.entries) {
    out += e.left + "," + e.right + "," + kind_name(e.kind) + "," +
           (e.closed ? "true" : "false") + "," + expansion_flat(e.expansion) + "\n";
  }
  return out;
}

std::string table_markdown(const StructureConstants& table) {
  std::string out = "| left | right | kind | bracket |\n|---|---|---|---|\n";
  for (const auto& e : table.entries) {
    out += "| " + e.left + " | " + e.right + " | " + kind_name(e.kind) + " | " +
           (e.closed ? expansion_flat(e.expansion) : std::string("NOT CLOSED")) + " |\n";
  }
  return out;
}

Json jacobi_json(const std::string& algebra, std::size_t triples,
                 const std::vector<JacobiViolation>& violations) {
  Json v = Json::array();
  for (const auto& viol : violations) v.push_back({viol.a, viol.b, viol.c});
  return Json{{"command", "jacobi"},
              {"algebra", algebra},
              {"triples", triples},
              {"violations", v},
              {"pass", violations.empty()}};
}

Json compare_json(const std::vector<Divergence>& divergences) {
  Json arr = Json::array();
  for (const auto& d : divergences) {
    arr.push_back({{"left", d.left},
                   {"right", d.right},
                   {"super", {{"kind", kind_name(d.super_kind)},
                              {"expansion", expansion_json(d.super_expansion)}}},
                   {"z2z2", {{"kind", kind_name(d.z2z2_kind)},
                             {"expansion", expansion_json(d.z2z2_expansion)}}}});
  }
  return Json{{"command", "compare"}, {"divergences", arr}, {"pass", !arr.empty()}};
}

Json rank_json(const RankReport& report) {
  Json comps = Json::object();
  for (const auto& [label, rank] : report.by_component)
    comps[label] = {{"members", report.members.at(label)}, {"rank", rank}};
  return Json{{"command", "rank"},
              {"components", comps},
              {"total", report.total_z2z2},
              {"total_with_M", report.total_with_m},
              {"pass", true}};
}

Json solver_json(const AnsatzSolution& solution, const GeneratorCatalog& catalog) {
  Json basis = Json::array();
  for (const auto& op : solution.basis) basis.push_back(render_operator(op, catalog.rep()));
  return Json{{"command", "solve"},
              {"kind", kind_name(solution.kind)},
              {"bounds",
               {{"order", solution.bounds.derivative_order},
                {"degree", solution.bounds.coord_degree},
                {"multiplier_degree", solution.bounds.multiplier_degree}}},
              {"dimension", solution.dimension},
              {"basis", basis}};
}

Json uniqueness_json(const UniquenessVerdict& verdict, const GammaRep& rep) {
  Json stages = Json::array();
  for (const auto& s : verdict.stages) stages.push_back({{"stage", s.name}, {"dimension", s.dimension}});
  Json solutions = Json::array();
  for (const auto& op : verdict.solutions) solutions.push_back(render_operator(op, rep));
  return Json{{"command", "unique-supercharge"},
              {"bounds",
               {{"order", verdict.bounds.derivative_order},
                {"degree", verdict.bounds.coord_degree},
                {"multiplier_degree", verdict.bounds.multiplier_degree}}},
              {"stages", stages},
              {"exists", verdict.exists},
              {"conclusive", verdict.conclusive},
              {"solutions", solutions},
              {"note", verdict.note},
              {"pass", verdict.conclusive && !verdict.exists}};
}

Json catalog_json(const GeneratorCatalog& catalog) {
  AlgebraSpec z22 = z2z2_spec();
  AlgebraSpec sup = super_spec();
  Json arr = Json::array();
  for (const auto& name : catalog.names()) {
    Json item{{"name", name}, {"rendering", render_operator(catalog.at(name), catalog.rep())}};
    if (z22.degree.count(name)) {
      GradedDegree d = z22.degree_of(name);
      item["z2z2_degree"] = {d.a, d.b};
    }
    if (sup.degree.count(name))
      item["super_parity"] = sup.degree_of(name).a ? "odd" : "even";
    arr.push_back(std::move(item));
  }
  return Json{{"command", "catalog"},
              {"rep", catalog.rep().name()},
              {"omega", render_operator(catalog.omega(), catalog.rep())},
              {"generators", arr},
              {"pass", true}};
}

Json planewave_json(const std::string& name, bool valid) {
  return Json{{"command", "planewave"}, {"operator", name}, {"valid", valid}, {"pass", valid}};
}

}  // namespace lle
