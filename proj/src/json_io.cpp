#include "mdsconv/json_io.hpp"

#include <sstream>

namespace mdsconv {

namespace {

Json poly_json(const std::optional<Poly>& p) {
    if (!p) return nullptr;
    Json a = Json::array();
    for (Elem c : *p) a.push_back(c);
    return a;
}

const Json& need(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) fail(ErrorCode::ParseError, std::string("missing key '") + key + "'");
    return j.at(key);
}

std::size_t need_size(const Json& j, const char* key) {
    const Json& v = need(j, key);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
        fail(ErrorCode::ParseError, std::string("key '") + key + "' is not a nonnegative integer");
    return v.get<std::size_t>();
}

}  // namespace

Json matrix_json(const Matrix& m) {
    Json out = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
        out.push_back(std::move(row));
    }
    return out;
}

Matrix matrix_from_json(const Json& j, std::size_t cols_if_empty) {
    if (!j.is_array()) fail(ErrorCode::ParseError, "matrix is not an array");
    std::vector<Vec> rows;
    for (const auto& row : j) {
        if (!row.is_array()) fail(ErrorCode::ParseError, "matrix row is not an array");
        Vec v;
        for (const auto& x : row) {
            if (!x.is_number_integer() || x.get<long long>() < 0)
                fail(ErrorCode::ParseError, "matrix entry is not a nonnegative integer");
            v.push_back(x.get<Elem>());
        }
        if (!rows.empty() && v.size() != rows.front().size()) fail(ErrorCode::ParseError, "ragged matrix");
        rows.push_back(std::move(v));
    }
    return Matrix::from_rows(rows, cols_if_empty);
}

Json poly_matrix_json(const PolyMatrix& p) {
    Json coeffs = Json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(matrix_json(c));
    return Json{{"rows", p.rows()}, {"cols", p.cols()}, {"coeffs", coeffs}};
}

PolyMatrix poly_matrix_from_json(const Json& j) {
    const std::size_t rows = need_size(j, "rows");
    const std::size_t cols = need_size(j, "cols");
    const Json& cj = need(j, "coeffs");
    if (!cj.is_array()) fail(ErrorCode::ParseError, "coeffs is not an array");
    std::vector<Matrix> coeffs;
    for (const auto& m : cj) {
        Matrix c = matrix_from_json(m, cols);
        if (c.rows() != rows || c.cols() != cols)
            fail(ErrorCode::ParseError, "coefficient matrix is not " + std::to_string(rows) + "x" + std::to_string(cols));
        coeffs.push_back(std::move(c));
    }
    return PolyMatrix(rows, cols, std::move(coeffs));
}

Json field_json(const Field& f, const ExtField* ext) {
    Json out{{"p", f.p()}, {"m", f.m()}, {"modulus", f.modulus()}, {"theta", f.theta()}};
    if (ext) {
        const auto m = ext->modulus();
        out["ext_modulus"] = {m[0], m[1]};
        out["theta_ext"] = ext->theta();
        out["beta"] = ext->beta();
    }
    return out;
}

Json block_code_json(const BlockCode& c) {
    return Json{{"q", c.field->q()},
                {"n", c.n},
                {"k", c.k},
                {"d", c.d},
                {"is_mds", c.is_mds},
                {"parity", matrix_json(c.parity)},
                {"generator_poly", poly_json(c.generator_poly)},
                {"modulus_poly", poly_json(c.modulus_poly)}};
}

Json expected_json(const ExpectedFlags& e) { return Json{{"mds", e.mds}, {"smds", e.smds}, {"mdp", e.mdp}}; }

Json bundle_json(const Bundle& b) {
    const FamilySpec& s = b.spec;
    const bool c2 = s.family == Family::Sec5ConstructionTwo;
    const bool has_tau = s.family != Family::Sec3 && s.family != Family::Sec4;
    Json out{{"family", to_string(s.family)},
             {"q", s.q},
             {"n", s.n},
             {"k", s.k},
             {"delta", s.delta},
             {"gamma", c2 ? Json(nullptr) : Json(s.gamma)},
             {"tau", has_tau ? Json(s.tau) : Json(nullptr)}};
    if (c2) {
        out["r"] = s.r;
        out["s"] = s.s;
    }
    out["field"] = field_json(*b.field, b.ext.get());
    out["block"] = block_code_json(b.block);
    out["H0"] = matrix_json(b.h0);
    out["H1"] = matrix_json(b.h1);
    out["parity"] = poly_matrix_json(b.parity);
    out["conv"] = Json{{"n", b.desc.n}, {"k", b.desc.k}, {"delta", b.desc.delta}, {"nu", b.desc.nu}};
    out["expected"] = expected_json(b.expected);
    return out;
}

Json report_json(const ConvReport& r) {
    Json cds = Json::object();
    Json exact = Json::object();
    for (const auto& [j, cd] : r.column_distances) {
        cds[std::to_string(j)] = cd.value;
        exact[std::to_string(j)] = cd.exact;
    }
    Json certs = Json::array();
    for (const auto& c : r.certificates)
        certs.push_back(Json{{"route", c.route}, {"lower", c.lower}, {"upper", c.upper}, {"detail", c.detail}});
    return Json{{"n", r.n},
                {"k", r.k},
                {"delta", r.delta},
                {"nu", r.nu},
                {"singleton_bound", r.indices.bound},
                {"M", r.indices.M},
                {"L", r.indices.L},
                {"column_distances", cds},
                {"column_distances_exact", exact},
                {"dfree", {r.dfree_lower, r.dfree_upper}},
                {"verdicts", {{"mds", to_string(r.mds)}, {"smds", to_string(r.smds)}, {"mdp", to_string(r.mdp)}}},
                {"certificates", certs},
                {"budget_exhausted", r.budget_exhausted},
                {"cascade_counterexamples", r.cascade_counterexamples}};
}

VerifyInput verify_input_from_json(const Json& j) {
    if (!j.is_object()) fail(ErrorCode::ParseError, "document is not an object");
    VerifyInput in;
    try {
        if (j.contains("field")) {
            const Json& f = j.at("field");
            std::optional<std::vector<unsigned>> modulus;
            if (f.contains("modulus")) modulus = f.at("modulus").get<std::vector<unsigned>>();
            in.field = make_field(f.at("p").get<unsigned>(), f.at("m").get<unsigned>(), modulus);
        } else {
            in.field = make_field_of_order(static_cast<unsigned>(need_size(j, "q")));
        }
        in.parity = poly_matrix_from_json(need(j, "parity"));
        if (j.contains("expected")) {
            const Json& e = j.at("expected");
            in.expected = ExpectedFlags{e.at("mds").get<bool>(), e.at("smds").get<bool>(), e.at("mdp").get<bool>()};
        }
        if (j.contains("family")) {
            const Family fam = parse_family(j.at("family").get<std::string>());
            const auto get = [&](const char* key) {
                return j.contains(key) && !j.at(key).is_null() ? j.at(key).get<std::size_t>() : std::size_t{0};
            };
            in.spec = make_spec(fam, in.field->q(), get("n"), get("k"), get("delta"), get("tau"));
        }
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorCode::ParseError, e.what());
    }
    for (const auto& c : in.parity.coeffs())
        for (std::size_t r = 0; r < c.rows(); ++r)
            for (Elem x : c.row(r))
                require(in.field->contains(x), ErrorCode::ParseError,
                        "entry " + std::to_string(x) + " outside F_" + std::to_string(in.field->q()));
    return in;
}

std::string render_entry(const Field& f, const Poly& p) {
    std::string out;
    for (std::size_t t = 0; t < p.size(); ++t) {
        if (p[t] == 0) continue;
        if (!out.empty()) out += "+";
        const std::string c = f.render(p[t]);
        const std::string power = t == 1 ? "D" : "D^" + std::to_string(t);
        if (t == 0)
            out += c;
        else if (p[t] == 1)
            out += power;
        else if (c.find_first_of("+-") == std::string::npos)
            out += c + power;
        else
            out += "(" + c + ")" + power;
    }
    return out.empty() ? "0" : out;
}

std::string render_matrix(const Field& f, const Matrix& m) {
    std::ostringstream os;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " | " : "") << f.render(m(r, c));
        os << "\n";
    }
    return os.str();
}

std::string render_poly_matrix(const Field& f, const PolyMatrix& p) {
    std::ostringstream os;
    for (std::size_t r = 0; r < p.rows(); ++r) {
        for (std::size_t c = 0; c < p.cols(); ++c) os << (c ? " | " : "") << render_entry(f, p.entry(r, c));
        os << "\n";
    }
    return os.str();
}

std::string render_bundle(const Bundle& b) {
    const FamilySpec& s = b.spec;
    const Field& f = *b.field;
    std::ostringstream os;
    os << "family " << to_string(s.family) << "  q=" << s.q << " n=" << s.n << " k=" << s.k << " delta=" << s.delta;
    if (s.family == Family::Sec5ConstructionTwo)
        os << " tau=" << s.tau << " r=" << s.r << " s=" << s.s;
    else if (s.family != Family::Sec3 && s.family != Family::Sec4)
        os << " gamma=" << s.gamma << " tau=" << s.tau;
    else
        os << " gamma=" << s.gamma;
    os << "\n";
    os << "block code [" << b.block.n << "," << b.block.k << "," << b.block.d << "]"
       << (b.block.is_mds ? " MDS" : " not MDS") << "\n";
    os << "convolutional code (" << b.desc.n << "," << b.desc.k << "," << b.desc.delta << "), memory " << b.desc.nu
       << "\n";
    os << "expected: mds=" << b.expected.mds << " smds=" << b.expected.smds << " mdp=" << b.expected.mdp << "\n";
    os << "G(D):\n" << render_poly_matrix(f, b.parity);
    return os.str();
}

std::string render_report(const ConvReport& r) {
    std::ostringstream os;
    os << "(" << r.n << "," << r.k << "," << r.delta << ") memory " << r.nu << "  bound " << r.indices.bound
       << "  M=" << r.indices.M << " L=" << r.indices.L << "\n";
    os << "column distances:";
    for (const auto& [j, cd] : r.column_distances) os << " d" << j << "=" << cd.value << (cd.exact ? "" : "+");
    os << "\n";
    os << "dfree in [" << r.dfree_lower << ", " << r.dfree_upper << "]\n";
    os << "mds " << to_string(r.mds) << "  smds " << to_string(r.smds) << "  mdp " << to_string(r.mdp) << "\n";
    for (const auto& c : r.certificates)
        os << "  " << c.route << ": [" << c.lower << ", " << c.upper << "] " << c.detail << "\n";
    if (r.budget_exhausted) os << "budget exhausted; values marked + are lower bounds\n";
    return os.str();
}

}  // namespace mdsconv
