#include "pbq/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace pbq {

namespace {

using json = nlohmann::ordered_json;

json scalar_to_json(const Scalar& s) {
    json out;
    if (s.is_exact()) {
        const CyclotomicNumber& x = s.exact();
        out["order"] = x.order();
        json coeffs = json::array();
        for (const Rational& c : x.coeffs()) coeffs.push_back(to_string(c));
        out["coeffs"] = std::move(coeffs);
    } else {
        const ApproxComplex& z = s.approx();
        out["re"] = decimal_string(z.re, z.digits);
        out["im"] = decimal_string(z.im, z.digits);
        out["digits"] = z.digits;
    }
    return out;
}

Scalar scalar_from_json(const json& j) {
    if (j.contains("coeffs")) {
        long order = j.at("order").get<long>();
        CyclotomicNumber acc(order);
        long exponent = 0;
        for (const auto& item : j.at("coeffs")) {
            Rational c = rational_from_string(item.get<std::string>());
            if (c != 0)
                acc = acc + CyclotomicNumber::from_rational(c) * CyclotomicNumber::zeta(order, exponent);
            ++exponent;
        }
        return Scalar(acc);
    }
    unsigned digits = j.at("digits").get<unsigned>();
    return Scalar(approx_from_strings(j.at("re").get<std::string>(),
                                      j.at("im").get<std::string>(), digits));
}

json matrix_to_json(const Matrix& mat) {
    json rows = json::array();
    for (std::size_t r = 0; r < mat.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < mat.cols(); ++c) row.push_back(scalar_to_json(mat.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const json& j) {
    auto nrows = static_cast<std::size_t>(j.size());
    if (nrows == 0) throw Error("empty matrix in JSON input");
    auto ncols = static_cast<std::size_t>(j.at(0).size());
    Matrix out(nrows, ncols, scalar_from_json(j.at(0).at(0)).zero_like());
    for (std::size_t r = 0; r < nrows; ++r) {
        if (j.at(r).size() != ncols) throw Error("ragged matrix in JSON input");
        for (std::size_t c = 0; c < ncols; ++c) out.at(r, c) = scalar_from_json(j.at(r).at(c));
    }
    return out;
}

json weight_to_json(const Weight& p) {
    if (p.is_exact()) return to_string(p.rational());
    const ApproxComplex& z = p.approx();
    json out;
    out["re"] = decimal_string(z.re, z.digits);
    out["im"] = decimal_string(z.im, z.digits);
    out["digits"] = z.digits;
    return out;
}

Weight weight_from_json(const json& j) {
    if (j.is_string()) return Weight::from_rational(rational_from_string(j.get<std::string>()));
    unsigned digits = j.at("digits").get<unsigned>();
    return Weight::from_approx(approx_from_strings(j.at("re").get<std::string>(),
                                                   j.at("im").get<std::string>(), digits));
}

}  // namespace

Weight weight_from_string(const std::string& text, unsigned digits) {
    if (text.find_first_of(".eE") == std::string::npos)
        return Weight::from_rational(rational_from_string(text));
    try {
        Real re(text, digits + kGuardDigits);
        return Weight::from_approx(approx_from_parts(re, real_from_long(0, digits), digits));
    } catch (const std::exception&) {
        throw Error("invalid decimal weight '" + text + "'");
    }
}

std::vector<Rational> parse_weight_grid(const std::string& text) {
    std::vector<Rational> out;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        if (item.empty()) continue;
        auto c1 = item.find(':');
        if (c1 == std::string::npos) {
            out.push_back(rational_from_string(item));
            continue;
        }
        auto c2 = item.find(':', c1 + 1);
        if (c2 == std::string::npos)
            throw Error("range '" + item + "' must have the form start:step:end");
        Rational start = rational_from_string(item.substr(0, c1));
        Rational step = rational_from_string(item.substr(c1 + 1, c2 - c1 - 1));
        Rational end = rational_from_string(item.substr(c2 + 1));
        if (step <= 0) throw Error("range step must be positive in '" + item + "'");
        long count = 0;
        for (Rational v = start; v <= end; v += step) {
            out.push_back(v);
            if (++count > 100000) throw Error("range '" + item + "' produces too many points");
        }
    }
    return out;
}

std::string scalar_brief(const Scalar& s, unsigned digits) {
    if (s.is_rational()) return to_string(s.rational_value());
    ApproxComplex z = s.to_complex(std::max(digits, kMinDigits));
    std::string re = decimal_string(z.re, digits);
    if (abs(z.im) < approx_zero_tolerance()) return re;
    std::string im = decimal_string(abs(z.im), digits);
    return re + (z.im < 0 ? " - " : " + ") + im + "i";
}

std::string rep_to_json_string(const RepMatrices& rep) {
    json out;
    out["m"] = rep.spec.m;
    out["k"] = rep.spec.k;
    out["p"] = weight_to_json(rep.spec.p);
    out["n_lo"] = rep.spec.n_lo;
    if (rep.spec.n_hi) out["n_hi"] = *rep.spec.n_hi;
    out["basis"] = rep.basis_kind == BasisKind::orthonormal ? "orthonormal" : "verma";
    out["basis_labels"] = rep.basis_labels;
    out["A_plus"] = matrix_to_json(rep.A_plus);
    out["A_minus"] = matrix_to_json(rep.A_minus);
    out["K"] = matrix_to_json(rep.Kmat);
    out["Kinv"] = matrix_to_json(rep.Kinv);
    return out.dump(1) + "\n";
}

RepMatrices rep_from_json_string(const std::string& text) {
    json j = json::parse(text);
    RepMatrices rep;
    rep.spec.m = j.at("m").get<long>();
    rep.spec.k = j.at("k").get<long>();
    rep.spec.p = weight_from_json(j.at("p"));
    rep.spec.n_lo = j.at("n_lo").get<long>();
    if (j.contains("n_hi")) rep.spec.n_hi = j.at("n_hi").get<long>();
    rep.basis_kind =
        j.at("basis").get<std::string>() == "orthonormal" ? BasisKind::orthonormal : BasisKind::verma;
    rep.basis_labels = j.at("basis_labels").get<std::vector<long>>();
    rep.A_plus = matrix_from_json(j.at("A_plus"));
    rep.A_minus = matrix_from_json(j.at("A_minus"));
    rep.Kmat = matrix_from_json(j.at("K"));
    rep.Kinv = matrix_from_json(j.at("Kinv"));
    return rep;
}

std::string element_to_json_string(const AlgebraElement& e) {
    json out;
    out["m"] = e.context().m;
    out["k"] = e.context().k;
    json terms = json::array();
    for (const auto& [key, coeff] : e.terms()) {
        json term;
        term["i"] = key.i;
        term["j"] = key.j;
        term["s"] = key.s;
        term["coeff"] = scalar_to_json(coeff);
        terms.push_back(std::move(term));
    }
    out["terms"] = std::move(terms);
    return out.dump(1) + "\n";
}

std::string matrix_to_json_string(const Matrix& mat) {
    return matrix_to_json(mat).dump(1) + "\n";
}

std::string descriptors_csv(const std::vector<IrrepDescriptor>& list, unsigned digits) {
    std::string out = "m,k,case,p,L,dim,casimir_re,casimir_im,unitarizable\n";
    for (const IrrepDescriptor& d : list) {
        ApproxComplex cas = d.casimir.to_complex(digits);
        out += std::to_string(d.params.m) + ",";
        out += std::to_string(d.params.k) + ",";
        out += case_tag_name(d.params.tag) + ",";
        out += d.p.to_string() + ",";
        out += std::to_string(d.L) + ",";
        out += std::to_string(d.dimension()) + ",";
        out += decimal_string(cas.re, digits) + ",";
        out += decimal_string(cas.im, digits) + ",";
        out += (d.unitarizable ? unitary_status_name(*d.unitarizable) : "") + "\n";
    }
    return out;
}

std::string descriptors_json_string(const std::vector<IrrepDescriptor>& list) {
    json arr = json::array();
    for (const IrrepDescriptor& d : list) {
        json item;
        item["m"] = d.params.m;
        item["k"] = d.params.k;
        item["case"] = case_tag_name(d.params.tag);
        item["p"] = weight_to_json(d.p);
        item["L"] = d.L;
        item["dim"] = d.dimension();
        json spectrum = json::array();
        for (const Scalar& s : d.K_spectrum) spectrum.push_back(scalar_to_json(s));
        item["K_spectrum"] = std::move(spectrum);
        item["casimir"] = scalar_to_json(d.casimir);
        if (d.unitarizable) item["unitarizable"] = unitary_status_name(*d.unitarizable);
        arr.push_back(std::move(item));
    }
    return arr.dump(1) + "\n";
}

std::string census_csv(const AlgebraParams& params, const std::vector<CensusRow>& rows) {
    std::string out = "m,k,case,p,L,dim,status\n";
    for (const CensusRow& row : rows) {
        out += std::to_string(params.m) + ",";
        out += std::to_string(params.k) + ",";
        out += case_tag_name(params.tag) + ",";
        out += to_string(row.p) + ",";
        out += std::to_string(row.L) + ",";
        out += std::to_string(row.L + 1) + ",";
        out += unitary_status_name(row.status) + "\n";
    }
    return out;
}

std::string census_json_string(const AlgebraParams& params, const std::vector<CensusRow>& rows) {
    json arr = json::array();
    for (const CensusRow& row : rows) {
        json item;
        item["m"] = params.m;
        item["k"] = params.k;
        item["case"] = case_tag_name(params.tag);
        item["p"] = to_string(row.p);
        item["L"] = row.L;
        item["dim"] = row.L + 1;
        item["status"] = unitary_status_name(row.status);
        arr.push_back(std::move(item));
    }
    return arr.dump(1) + "\n";
}

Real rep_max_deviation(const RepMatrices& a, const RepMatrices& b, unsigned digits) {
    Real best = real_from_long(0, digits);
    auto scan = [&](const Matrix& x, const Matrix& y) {
        if (x.rows() != y.rows() || x.cols() != y.cols())
            throw MismatchError("matrix shapes differ between representations");
        for (std::size_t r = 0; r < x.rows(); ++r)
            for (std::size_t c = 0; c < x.cols(); ++c) {
                Real d = abs(x.at(r, c).to_complex(digits) - y.at(r, c).to_complex(digits));
                if (d > best) best = d;
            }
    };
    scan(a.A_plus, b.A_plus);
    scan(a.A_minus, b.A_minus);
    scan(a.Kmat, b.Kmat);
    scan(a.Kinv, b.Kinv);
    return best;
}

std::string fixture_filename(long m, long k, long L) {
    return "orthonormal_dim" + std::to_string(L + 1) + "_m" + std::to_string(m) + "_k" +
           std::to_string(k) + ".json";
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "' for reading");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open '" + path + "' for writing");
    out << content;
    if (!out) throw Error("failed writing '" + path + "'");
}

}  // namespace pbq
