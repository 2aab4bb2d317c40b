#include "abelint/io.hpp"

#include <fstream>
#include <sstream>

#include "abelint/errors.hpp"

namespace abelint {

using nlohmann::json;

namespace {

Poly2 parse_coeff_array(const json& arr, const char* which) {
    Poly2 out;
    if (!arr.is_array()) throw FormParseError(std::string("\"") + which + "\" must be an array");
    size_t idx = 0;
    for (const auto& triple : arr) {
        std::ostringstream where;
        where << "\"" << which << "\"[" << idx << "]";
        if (!triple.is_array() || triple.size() != 3)
            throw FormParseError(where.str() + " must be a triple [i, j, \"num/den\"]");
        const auto &ji = triple[0], &jj = triple[1], &jc = triple[2];
        if (!ji.is_number_integer() || !jj.is_number_integer())
            throw FormParseError(where.str() + " exponents must be integers");
        int i = ji.get<int>(), j = jj.get<int>();
        if (i < 0 || j < 0) throw FormParseError(where.str() + " exponents must be >= 0");
        if (!jc.is_string())
            throw FormParseError(where.str() + " coefficient must be a fraction string");
        try {
            out.add(i, j, Rational::parse(jc.get<std::string>()));
        } catch (const FormParseError& e) {
            throw FormParseError(where.str() + ": " + e.what());
        }
        ++idx;
    }
    return out;
}

} // namespace

PolynomialForm parse_form_document(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw FormParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw FormParseError("form document must be a JSON object");
    for (const auto& [key, value] : doc.items())
        if (key != "p" && key != "q")
            throw FormParseError("unexpected key \"" + key + "\" in form document");

    PolynomialForm omega;
    if (doc.contains("p")) omega.p = parse_coeff_array(doc["p"], "p");
    if (doc.contains("q")) omega.q = parse_coeff_array(doc["q"], "q");
    return omega;
}

PolynomialForm load_form_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormParseError("cannot open form file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_form_document(buf.str());
}

json form_to_json(const PolynomialForm& omega) {
    auto dump = [](const Poly2& part) {
        json arr = json::array();
        for (const auto& [ij, c] : part.terms())
            arr.push_back(json::array({ij.first, ij.second, c.str()}));
        return arr;
    };
    return json{{"p", dump(omega.p)}, {"q", dump(omega.q)}};
}

json poly_to_json(const Poly& p) {
    json arr = json::array();
    for (const Rational& c : p.coeffs()) arr.push_back(c.str());
    return arr;
}

json petrov_to_json(const PetrovVector& v) {
    return json{{"p1", poly_to_json(v.p1)}, {"p2", poly_to_json(v.p2)},
                {"p3", poly_to_json(v.p3)}};
}

json matrix_to_json(const PolyMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(poly_to_json(m.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

json pf_matrices_json(const PFSystem& pf) {
    // A and B are constant; emit scalar fraction strings for readability.
    auto constants = [](const PolyMatrix& m) {
        json rows = json::array();
        for (int i = 0; i < m.rows(); ++i) {
            json row = json::array();
            for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j)[0].str());
            rows.push_back(row);
        }
        return rows;
    };
    return json{{"A", constants(pf.A)}, {"B", constants(pf.B)}};
}

json pf_ode_json(const PFSystem& pf) {
    return json{{"Q", matrix_to_json(pf.Q)}, {"D", poly_to_json(pf.D)}};
}

json riccati_w_json(const RiccatiW& rw) {
    return json{{"a2", poly_to_json(rw.a2)}, {"a1", poly_to_json(rw.a1)},
                {"a0", poly_to_json(rw.a0)}};
}

json degree_profile_json(const DegreeProfile& dp) {
    auto deg = [](const std::optional<int>& d) {
        return d ? json(*d) : json(nullptr);
    };
    return json{{"n", dp.form_degree},
                {"deg_p1", deg(dp.deg_p1)},
                {"deg_p2", deg(dp.deg_p2)},
                {"deg_p3", deg(dp.deg_p3)},
                {"degree_bound", dp.degree_bound}};
}

json certificate_json(const BoundCertificate& cert) {
    json doc{{"n", cert.n},
             {"chain", cert.chain()},
             {"petrov", petrov_to_json(cert.petrov)},
             {"zero_integral", cert.zero_integral},
             {"worst_s_bound", cert.worst_s_bound},
             {"worst_case_bound", cert.worst_case_bound},
             {"generic_bound", cert.generic_bound.str()}};
    if (!cert.zero_integral) {
        doc["tilde"] = json{{"tp1", poly_to_json(cert.tilde.tp1)},
                            {"tp2", poly_to_json(cert.tilde.tp2)},
                            {"direct", cert.tilde.direct}};
        if (!cert.tp1_zero)
            doc["riccati_s"] = json{{"A", poly_to_json(cert.riccati.A)},
                                    {"B", poly_to_json(cert.riccati.B)},
                                    {"C", poly_to_json(cert.riccati.C)}};
        doc["k_intervals"] = cert.k_intervals;
        doc["lambda_total"] = cert.lambda_total;
        doc["s_zero_bound"] = cert.s_zero_bound;
        doc["l_intervals"] = cert.l_intervals;
        doc["instance_bound"] = cert.instance_bound;
        doc["instance_le_generic"] =
            Rational(cert.instance_bound) <= cert.generic_bound;
        doc["degenerate_c"] = cert.c_zero;
    }
    return doc;
}

} // namespace abelint
