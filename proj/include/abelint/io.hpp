#pragma once

#include <json.hpp>

#include <string>

#include "abelint/bound.hpp"
#include "abelint/form.hpp"
#include "abelint/petrov.hpp"
#include "abelint/picard_fuchs.hpp"

namespace abelint {

/// Form document: {"p": [[i, j, "num/den"], ...], "q": [...]}.
/// Exponents must be non-negative integers, coefficients exact fraction
/// strings; duplicate (i, j) entries are summed.  Throws FormParseError with
/// a location diagnostic on malformed input.
PolynomialForm parse_form_document(const std::string& text);
PolynomialForm load_form_file(const std::string& path);
nlohmann::json form_to_json(const PolynomialForm& omega);

/// Polynomials cross the boundary as ascending arrays of fraction strings;
/// the zero polynomial is the empty array.
nlohmann::json poly_to_json(const Poly& p);
nlohmann::json petrov_to_json(const PetrovVector& v);
nlohmann::json matrix_to_json(const PolyMatrix& m); ///< rows of entry arrays

nlohmann::json pf_matrices_json(const PFSystem& pf);  ///< A, B (constants)
nlohmann::json pf_ode_json(const PFSystem& pf);       ///< Q, D
nlohmann::json riccati_w_json(const RiccatiW& rw);

nlohmann::json degree_profile_json(const DegreeProfile& dp);
nlohmann::json certificate_json(const BoundCertificate& cert);

} // namespace abelint
