#include "homnlie/report.hpp"

#include <sstream>

namespace homnlie {

static std::string key_string(const MultiIndex& idx) {
  std::string s;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(idx[i]);
  }
  return s;
}

ReportJson vector_json(const RVector& v) {
  ReportJson arr = ReportJson::array();
  for (const auto& x : v) arr.push_back(x.str());
  return arr;
}

ReportJson subspace_json(const Subspace& s) {
  ReportJson j;
  j["ambient_dim"] = s.ambient_dim();
  j["dim"] = s.dim();
  ReportJson basis = ReportJson::array();
  for (const auto& v : s.basis()) basis.push_back(vector_json(v));
  j["basis"] = std::move(basis);
  return j;
}

ReportJson bracket_json(const VectorTensor& t) {
  ReportJson j = ReportJson::object();
  for (const auto& [key, val] : t.entries()) {
    ReportJson rec = ReportJson::object();
    for (std::size_t i = 0; i < val.size(); ++i)
      if (!val[i].is_zero()) rec[std::to_string(i + 1)] = val[i].str();
    j[key_string(key)] = std::move(rec);
  }
  return j;
}

ReportJson scalar_tensor_json(const ScalarTensor& t) {
  ReportJson j = ReportJson::object();
  for (const auto& [key, val] : t.entries()) j[key_string(key)] = val.str();
  return j;
}

ReportJson series_json(const SeriesReport& s) {
  ReportJson j;
  j["kind"] = s.kind == SeriesKind::derived ? "derived" : "central";
  ReportJson dims = ReportJson::array();
  ReportJson terms = ReportJson::array();
  for (const auto& t : s.terms) {
    dims.push_back(t.dim());
    terms.push_back(subspace_json(t));
  }
  j["dims"] = std::move(dims);
  j["stabilized"] = s.stabilized;
  if (s.class_index)
    j["class_index"] = *s.class_index;
  else
    j["class_index"] = nullptr;
  j["terms"] = std::move(terms);
  return j;
}

ReportJson validation_report(const HomNLieAlgebra& alg) {
  ReportJson j;
  j["name"] = alg.name();
  j["dimension"] = alg.dim();
  j["arity"] = alg.arity();
  j["multiplicative_declared"] = alg.multiplicative_declared();
  auto defects = hom_nambu_defect(alg);
  j["hom_nambu_defects"] = defects.size();
  if (!defects.empty()) {
    ReportJson w;
    w["x_tuple"] = key_string(defects[0].x_tuple);
    w["y_tuple"] = key_string(defects[0].y_tuple);
    w["residual"] = vector_json(defects[0].residual);
    j["first_defect"] = std::move(w);
  }
  if (alg.uniform_twists()) {
    auto mc = is_multiplicative(alg);
    j["multiplicative"] = mc.ok;
    if (!mc.ok) j["multiplicativity_witness"] = key_string(*mc.witness);
  }
  j["valid"] = defects.empty() &&
               (!alg.multiplicative_declared() || is_multiplicative(alg).ok);
  return j;
}

ReportJson structure_report(const HomNLieAlgebra& alg) {
  ReportJson j;
  Subspace whole = Subspace::full(alg.dim());
  j["center"] = subspace_json(center(alg));
  j["derived_series"] = series_json(derived_series(alg, whole));
  j["central_series"] = series_json(central_series(alg, whole));
  auto sc = solvability_class(alg);
  auto nc = nilpotency_class(alg);
  j["solvability_class"] = sc ? ReportJson(*sc) : ReportJson(nullptr);
  j["nilpotency_class"] = nc ? ReportJson(*nc) : ReportJson(nullptr);
  return j;
}

ReportJson cohomology_report(const HomNLieAlgebra& alg, bool adjoint) {
  ReportJson j;
  if (adjoint) {
    Subspace z = adjoint_z2(alg);
    j["coefficients"] = "adjoint";
    j["z2"] = subspace_json(z);
    j["z2_dim"] = z.dim();
  } else {
    auto coh = scalar_cohomology2(alg);
    j["coefficients"] = "scalar";
    ReportJson basis = ReportJson::array();
    for (const auto& k : coh.form_basis) basis.push_back(key_string(k));
    j["form_basis"] = std::move(basis);
    j["z2_dim"] = coh.z2.dim();
    j["b2_dim"] = coh.b2.dim();
    j["h2_dim"] = coh.h2_dim;
    j["z2"] = subspace_json(coh.z2);
    j["b2"] = subspace_json(coh.b2);
  }
  return j;
}

ReportJson derivations_report(const HomNLieAlgebra& alg, int k) {
  ReportJson j;
  j["power"] = k;
  Subspace der = derivation_space(alg, k);
  InnerDerivations inn = inner_derivations(alg, k);
  j["der_dim"] = der.dim();
  j["der_basis"] = subspace_json(der)["basis"];
  j["inn_dim"] = inn.span.dim();
  j["inn_basis"] = subspace_json(inn.span)["basis"];
  ReportJson gens = ReportJson::array();
  for (const auto& g : inn.generators) {
    ReportJson gj;
    gj["fix_tuple"] = key_string(g.fix_tuple);
    gj["reading"] = g.alpha_power_reading ? "alpha_power_argument" : "plain_argument";
    gj["verified"] = g.verified;
    gens.push_back(std::move(gj));
  }
  j["generators"] = std::move(gens);
  return j;
}

ReportJson traces_report(const HomNLieAlgebra& alg, bool hom_compatible) {
  ReportJson j;
  j["hom_compatible"] = hom_compatible;
  j["space"] = subspace_json(solve_trace_space(alg, hom_compatible));
  return j;
}

ReportJson full_report(const HomNLieAlgebra& alg, const std::optional<TraceForm>& tau) {
  ReportJson j;
  j["validation"] = validation_report(alg);
  j["traces"] = traces_report(alg, false);
  if (alg.multiplicative_declared()) {
    j["traces_hom_compatible"] = traces_report(alg, true);
    j["structure"] = structure_report(alg);
    j["cohomology_scalar"] = cohomology_report(alg, false);
    j["cohomology_adjoint"] = cohomology_report(alg, true);
    ReportJson ders = ReportJson::object();
    for (int k = 0; k <= 2; ++k) ders[std::to_string(k)] = derivations_report(alg, k);
    j["derivations"] = std::move(ders);
  }
  if (!tau) return j;

  auto induced = induce_auto(alg, *tau, std::nullopt);
  ReportJson ij;
  ij["theorem"] = induced.licensed_by == InductionTheorem::multiplicative
                      ? "multiplicative_trace_compatible"
                      : "general_conditions";
  ij["arity"] = induced.algebra.arity();
  ij["bracket"] = bracket_json(induced.algebra.bracket());
  j["induced"] = std::move(ij);

  auto cmp = compare_structures(alg, *tau);
  ReportJson cj;
  cj["central_series_contained"] = cmp.central_series_contained;
  cj["unit_exists"] = cmp.unit_exists;
  cj["central_series_equal_when_unit"] = cmp.central_series_equal_when_unit;
  cj["center_transfer"] = cmp.center_transfer;
  cj["nonabelian_transfer"] = cmp.nonabelian_transfer;
  cj["nilpotency_bound"] = cmp.nilpotency_bound;
  cj["all_verdicts"] = cmp.all();
  j["structure_comparison"] = std::move(cj);

  j["induced_structure"] = structure_report(induced.algebra);
  j["induced_cohomology_scalar"] = cohomology_report(induced.algebra, false);

  ReportJson tj;
  tj["one_cocycles_are_traces"] = one_cocycles_are_traces(alg);
  bool cob = true;
  for (int i = 1; i <= alg.dim(); ++i)
    cob = cob && coboundary_transfer_check(alg, *tau, unit_vector(alg.dim(), i));
  tj["coboundary_transfer_full_basis"] = cob;

  auto coh = scalar_cohomology2(alg);
  bool induced_in_z2 = true;
  for (const auto& zv : coh.z2.basis()) {
    ScalarTensor phi =
        scalar_tensor_from_coords(alg.arity(), alg.dim(), coh.form_basis, zv);
    try {
      induced_scalar_cocycle(alg, *tau, phi);
    } catch (const std::exception&) {
      induced_in_z2 = false;
    }
  }
  tj["induced_scalar_cocycles_in_z2"] = induced_in_z2;

  ReportJson dt = ReportJson::object();
  for (int k = 0; k <= 1; ++k) {
    ReportJson per = ReportJson::array();
    Subspace der = derivation_space(alg, k);
    for (const auto& fv : der.basis()) {
      RMatrix f = matrix_from_coords(alg.dim(), fv);
      ReportJson e;
      e["trace_from_derivation"] = trace_from_derivation(alg, f, k, *tau);
      auto rep = derivation_transfers(alg, *tau, f, k);
      e["transfers"] = rep.direct;
      per.push_back(std::move(e));
    }
    dt[std::to_string(k)] = std::move(per);
  }
  tj["derivations"] = std::move(dt);
  j["transfers"] = std::move(tj);
  return j;
}

static void render_node(std::ostream& os, const ReportJson& j, const std::string& key,
                        int indent) {
  std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  if (j.is_object()) {
    if (!key.empty()) os << pad << key << ":\n";
    for (auto it = j.begin(); it != j.end(); ++it)
      render_node(os, it.value(), it.key(), key.empty() ? indent : indent + 1);
  } else if (j.is_array()) {
    bool scalars_only = true;
    for (const auto& e : j)
      if (e.is_object() || e.is_array()) scalars_only = false;
    if (scalars_only) {
      os << pad << key << ": [";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) os << ", ";
        os << (j[i].is_string() ? j[i].get<std::string>() : j[i].dump());
      }
      os << "]\n";
    } else {
      os << pad << key << ":\n";
      for (std::size_t i = 0; i < j.size(); ++i)
        render_node(os, j[i], "- " + std::to_string(i), indent + 1);
    }
  } else {
    os << pad << key << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

std::string render_text(const ReportJson& j) {
  std::ostringstream os;
  render_node(os, j, "", 0);
  return os.str();
}

}  // namespace homnlie
