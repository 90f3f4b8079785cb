#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "lebdec/functionals.hpp"
#include "lebdec/lebesgue.hpp"
#include "lebdec/staralg.hpp"

namespace lebdec {

using Json = nlohmann::json;

// Matrix JSON: {"dim": n, "re": [[...]], "im": [[...]]}, row-major doubles.
Json matrix_to_json(const CMatrix& m);
CMatrix matrix_from_json(const Json& j);

// Algebra JSON: {"blocks": [n1, ...]}.
Json algebra_to_json(const BlockAlgebra& a);
BlockAlgebra algebra_from_json(const Json& j);

// Element JSON: {"algebra": ..., "blocks": [Matrix, ...]}.
Json element_to_json(const AlgebraElement& x);
AlgebraElement element_from_json(const Json& j);

// Functional JSON: {"algebra": ..., "density": Element}.
Json functional_to_json(const PositiveFunctional& f);
PositiveFunctional functional_from_json(const Json& j,
                                        const Tolerances& tol = {});

// Cayley table JSON: {"order": m, "table": [[...]]}.
std::vector<std::vector<int>> cayley_from_json(const Json& j);

// Generator presentation JSON: {"ambient_dim": d, "generators": [Matrix,...]}.
Json generators_to_json(const GeneratorPresentation& p);
GeneratorPresentation generators_from_json(const Json& j);

Json decomposition_to_json(const Decomposition& d);
Json report_to_json(const VerificationReport& r);
Json gns_to_json(const GnsData& g);

Json load_json_file(const std::string& path);  // "-" reads stdin

}  // namespace lebdec
