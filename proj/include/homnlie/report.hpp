#pragma once

#include <json.hpp>

#include "homnlie/cohomology.hpp"
#include "homnlie/structure.hpp"

namespace homnlie {

/// Reports are built as JSON trees and rendered to text from the same tree,
/// so the machine-readable form carries everything the text form does.
using ReportJson = nlohmann::ordered_json;

ReportJson subspace_json(const Subspace& s);
ReportJson vector_json(const RVector& v);
ReportJson bracket_json(const VectorTensor& t);
ReportJson scalar_tensor_json(const ScalarTensor& t);
ReportJson series_json(const SeriesReport& s);

ReportJson validation_report(const HomNLieAlgebra& alg);
ReportJson structure_report(const HomNLieAlgebra& alg);
ReportJson cohomology_report(const HomNLieAlgebra& alg, bool adjoint);
ReportJson derivations_report(const HomNLieAlgebra& alg, int k);
ReportJson traces_report(const HomNLieAlgebra& alg, bool hom_compatible);

/// Full dossier; with tau, adds every A-versus-A_tau comparison verdict.
ReportJson full_report(const HomNLieAlgebra& alg, const std::optional<TraceForm>& tau);

std::string render_text(const ReportJson& j);

}  // namespace homnlie
