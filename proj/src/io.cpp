#include "homhopf/io.hpp"

#include <set>

#include <json.hpp>

#include "homhopf/errors.hpp"
#include "homhopf/linalg.hpp"

namespace homhopf {

namespace {

using json = nlohmann::json;

[[noreturn]] void bad(const std::string& where, const std::string& why) {
    throw InputError("parse error at " + where + ": " + why);
}

json parse_json(const std::string& bytes) {
    json j = json::parse(bytes, nullptr, false);
    if (j.is_discarded()) throw InputError("parse error: malformed JSON");
    return j;
}

void reject_unknown_keys(const json& obj, const std::string& where,
                         const std::set<std::string>& allowed) {
    if (!obj.is_object()) bad(where, "expected an object");
    for (const auto& item : obj.items())
        if (!allowed.count(item.key())) bad(where, "unknown key \"" + item.key() + "\"");
}

std::size_t parse_index(const json& j, const std::string& where, std::size_t bound) {
    if (!j.is_number_unsigned()) bad(where, "expected a non-negative integer index");
    std::size_t v = j.get<std::size_t>();
    if (v >= bound)
        bad(where, "index " + std::to_string(v) + " out of range [0, " + std::to_string(bound) + ")");
    return v;
}

Scalar parse_scalar(const json& j, const std::string& where, const FieldSpec& f) {
    if (!j.is_string()) bad(where, "scalars are canonical strings");
    try {
        return Scalar::parse(f, j.get<std::string>());
    } catch (const InputError& e) {
        bad(where, e.what());
    }
}

Vec parse_vector(const json& j, const std::string& where, const FieldSpec& f, std::size_t n) {
    if (!j.is_array() || j.size() != n)
        bad(where, "expected an array of " + std::to_string(n) + " scalars");
    Vec out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        out.push_back(parse_scalar(j[i], where + "[" + std::to_string(i) + "]", f));
    return out;
}

Matrix parse_matrix(const json& j, const std::string& where, const FieldSpec& f,
                    std::size_t rows, std::size_t cols) {
    if (!j.is_array() || j.size() != rows)
        bad(where, "expected " + std::to_string(rows) + " rows");
    Matrix m(f, rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        Vec row = parse_vector(j[r], where + "[" + std::to_string(r) + "]", f, cols);
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = row[c];
    }
    return m;
}

// keys: the three index names in storage order of the tensor legs
Tensor3 parse_triples(const json& j, const std::string& where, const FieldSpec& f,
                      const char* k0, const char* k1, const char* k2, std::size_t d0,
                      std::size_t d1, std::size_t d2) {
    if (!j.is_array()) bad(where, "expected an array of entries");
    Tensor3 t(f, d0, d1, d2);
    for (std::size_t n = 0; n < j.size(); ++n) {
        const std::string here = where + "[" + std::to_string(n) + "]";
        reject_unknown_keys(j[n], here, {"c", k0, k1, k2});
        for (const char* k : {k0, k1, k2})
            if (!j[n].contains(k)) bad(here, std::string("missing key \"") + k + "\"");
        if (!j[n].contains("c")) bad(here, "missing coefficient \"c\"");
        std::size_t i0 = parse_index(j[n][k0], here + "." + k0, d0);
        std::size_t i1 = parse_index(j[n][k1], here + "." + k1, d1);
        std::size_t i2 = parse_index(j[n][k2], here + "." + k2, d2);
        Scalar c = parse_scalar(j[n]["c"], here + ".c", f);
        if (c.is_zero()) bad(here, "zero entries must be omitted");
        if (!t.at(i0, i1, i2).is_zero()) bad(here, "duplicate entry");
        t.at(i0, i1, i2) = c;
    }
    return t;
}

json vector_json(const Vec& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(x.str());
    return out;
}

json matrix_json(const Matrix& m) {
    json out = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
        out.push_back(row);
    }
    return out;
}

json triples_json(const Tensor3& t, const char* k0, const char* k1, const char* k2) {
    json out = json::array();
    for (std::size_t i = 0; i < t.dim0(); ++i)
        for (std::size_t j = 0; j < t.dim1(); ++j)
            for (std::size_t k = 0; k < t.dim2(); ++k) {
                if (t.at(i, j, k).is_zero()) continue;
                json e;
                e[k0] = i;
                e[k1] = j;
                e[k2] = k;
                e["c"] = t.at(i, j, k).str();
                out.push_back(e);
            }
    return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

void check_format(const json& j, const std::string& where) {
    if (!j.contains("format") || !j["format"].is_number_unsigned() || j["format"] != 1)
        bad(where, "missing or unsupported \"format\" (expected 1)");
}

FieldSpec parse_field(const json& j, const std::string& where) {
    if (!j.contains("field") || !j["field"].is_string()) bad(where, "missing \"field\" string");
    try {
        return FieldSpec::parse(j["field"].get<std::string>());
    } catch (const InputError& e) {
        bad(where, e.what());
    }
}

StructureFile parse_structure_json(const json& j, const std::string& where) {
    reject_unknown_keys(j, where,
                        {"alpha", "antipode", "basis", "coaction", "comult", "convention",
                         "counit", "dim", "field", "format", "mult", "unit"});
    check_format(j, where);
    FieldSpec f = parse_field(j, where);
    if (!j.contains("dim") || !j["dim"].is_number_unsigned() || j["dim"] == 0)
        bad(where, "missing or invalid \"dim\"");
    const std::size_t dim = j["dim"].get<std::size_t>();

    StructureFile s;
    s.hopf.dim = dim;
    if (!j.contains("basis") || !j["basis"].is_array() || j["basis"].size() != dim)
        bad(where, "\"basis\" must list one name per dimension");
    for (const auto& b : j["basis"]) {
        if (!b.is_string()) bad(where + ".basis", "names are strings");
        s.hopf.basis.push_back(b.get<std::string>());
    }
    for (const char* key : {"alpha", "antipode", "mult", "unit", "comult", "counit"})
        if (!j.contains(key)) bad(where, std::string("missing \"") + key + "\"");

    s.hopf.alpha = parse_matrix(j["alpha"], where + ".alpha", f, dim, dim);
    try {
        s.hopf.alpha_inv = invert_matrix(s.hopf.alpha);
    } catch (const NotInvertible&) {
        bad(where + ".alpha", "structure map must be invertible");
    }
    s.hopf.antipode = parse_matrix(j["antipode"], where + ".antipode", f, dim, dim);
    s.hopf.mult = parse_triples(j["mult"], where + ".mult", f, "i", "j", "k", dim, dim, dim);
    s.hopf.comult = parse_triples(j["comult"], where + ".comult", f, "k", "i", "j", dim, dim, dim);
    s.hopf.unit = parse_vector(j["unit"], where + ".unit", f, dim);
    s.hopf.counit = parse_vector(j["counit"], where + ".counit", f, dim);

    if (j.contains("coaction"))
        s.coaction =
            parse_triples(j["coaction"], where + ".coaction", f, "m", "n", "h", dim, dim, dim);
    if (j.contains("convention")) {
        if (!j["convention"].is_string()) bad(where + ".convention", "expected a string");
        std::string c = j["convention"].get<std::string>();
        if (c == "categorical")
            s.convention = Convention::categorical;
        else if (c == "printed")
            s.convention = Convention::printed;
        else
            bad(where + ".convention", "expected \"categorical\" or \"printed\"");
    }
    return s;
}

json structure_json(const StructureFile& s) {
    json j;
    j["format"] = 1;
    j["field"] = s.hopf.field().str();
    j["dim"] = s.hopf.dim;
    j["basis"] = s.hopf.basis;
    j["alpha"] = matrix_json(s.hopf.alpha);
    j["antipode"] = matrix_json(s.hopf.antipode);
    j["mult"] = triples_json(s.hopf.mult, "i", "j", "k");
    j["comult"] = triples_json(s.hopf.comult, "k", "i", "j");
    j["unit"] = vector_json(s.hopf.unit);
    j["counit"] = vector_json(s.hopf.counit);
    if (s.coaction) j["coaction"] = triples_json(*s.coaction, "m", "n", "h");
    if (s.convention == Convention::printed) j["convention"] = "printed";
    return j;
}

// module blocks: {"dim", "mu", "action"?, "coaction"?}
RelativeHopfModule parse_module_block(const json& j, const std::string& where,
                                      const FieldSpec& f, std::size_t da, std::size_t dh,
                                      bool need_action, bool need_coaction) {
    std::set<std::string> allowed = {"dim", "mu"};
    if (need_action) allowed.insert("action");
    if (need_coaction) allowed.insert("coaction");
    reject_unknown_keys(j, where, allowed);
    if (!j.contains("dim") || !j["dim"].is_number_unsigned() || j["dim"] == 0)
        bad(where, "missing or invalid \"dim\"");
    const std::size_t dm = j["dim"].get<std::size_t>();

    RelativeHopfModule m;
    m.dim = dm;
    if (!j.contains("mu")) bad(where, "missing \"mu\"");
    m.mu = parse_matrix(j["mu"], where + ".mu", f, dm, dm);
    try {
        m.mu_inv = invert_matrix(m.mu);
    } catch (const NotInvertible&) {
        bad(where + ".mu", "structure map must be invertible");
    }
    if (need_action) {
        if (!j.contains("action")) bad(where, "missing \"action\"");
        m.action = parse_triples(j["action"], where + ".action", f, "m", "i", "k", dm, da, dm);
    }
    if (need_coaction) {
        if (!j.contains("coaction")) bad(where, "missing \"coaction\"");
        m.coaction =
            parse_triples(j["coaction"], where + ".coaction", f, "m", "n", "h", dm, dm, dh);
    }
    return m;
}

json module_block_json(const RelativeHopfModule& m) {
    json j;
    j["dim"] = m.dim;
    j["mu"] = matrix_json(m.mu);
    j["action"] = triples_json(m.action, "m", "i", "k");
    j["coaction"] = triples_json(m.coaction, "m", "n", "h");
    return j;
}

} // namespace

ComoduleAlgebra StructureFile::comodule_algebra() const {
    if (!coaction) throw InputError("structure file carries no coaction block");
    return ComoduleAlgebra{hopf.algebra(), *coaction};
}

StructureFile parse_structure_file(const std::string& bytes) {
    return parse_structure_json(parse_json(bytes), "$");
}

std::string serialize_structure_file(const StructureFile& s) { return dump(structure_json(s)); }

MaschkeBundleFile parse_maschke_bundle(const std::string& bytes) {
    json j = parse_json(bytes);
    reject_unknown_keys(j, "$",
                        {"a_retraction", "a_section", "algebra", "f", "format", "g", "modules",
                         "phi"});
    check_format(j, "$");
    if (!j.contains("algebra")) bad("$", "missing \"algebra\"");
    MaschkeBundleFile b;
    b.algebra = parse_structure_json(j["algebra"], "$.algebra");
    if (!b.algebra.coaction) bad("$.algebra", "bundle algebra needs a coaction block");
    const FieldSpec f = b.algebra.hopf.field();
    const std::size_t d = b.algebra.hopf.dim;

    if (!j.contains("modules")) bad("$", "missing \"modules\"");
    reject_unknown_keys(j["modules"], "$.modules", {"M", "N", "P"});
    for (const char* k : {"M", "N", "P"})
        if (!j["modules"].contains(k)) bad("$.modules", std::string("missing \"") + k + "\"");
    b.sequence.m = parse_module_block(j["modules"]["M"], "$.modules.M", f, d, d, true, true);
    b.sequence.n = parse_module_block(j["modules"]["N"], "$.modules.N", f, d, d, true, true);
    b.sequence.p = parse_module_block(j["modules"]["P"], "$.modules.P", f, d, d, true, true);

    if (!j.contains("f") || !j.contains("g")) bad("$", "missing \"f\" or \"g\"");
    b.sequence.f = parse_matrix(j["f"], "$.f", f, b.sequence.n.dim, b.sequence.m.dim);
    b.sequence.g = parse_matrix(j["g"], "$.g", f, b.sequence.p.dim, b.sequence.n.dim);
    if (j.contains("a_section"))
        b.sequence.a_section =
            parse_matrix(j["a_section"], "$.a_section", f, b.sequence.n.dim, b.sequence.p.dim);
    if (j.contains("a_retraction"))
        b.sequence.a_retraction = parse_matrix(j["a_retraction"], "$.a_retraction", f,
                                               b.sequence.m.dim, b.sequence.n.dim);
    if (!j.contains("phi")) bad("$", "missing \"phi\"");
    b.phi = parse_matrix(j["phi"], "$.phi", f, d, d);
    return b;
}

std::string serialize_maschke_bundle(const MaschkeBundleFile& b) {
    json j;
    j["format"] = 1;
    j["algebra"] = structure_json(b.algebra);
    j["modules"]["M"] = module_block_json(b.sequence.m);
    j["modules"]["N"] = module_block_json(b.sequence.n);
    j["modules"]["P"] = module_block_json(b.sequence.p);
    j["f"] = matrix_json(b.sequence.f);
    j["g"] = matrix_json(b.sequence.g);
    if (b.sequence.a_section) j["a_section"] = matrix_json(*b.sequence.a_section);
    if (b.sequence.a_retraction) j["a_retraction"] = matrix_json(*b.sequence.a_retraction);
    j["phi"] = matrix_json(b.phi);
    return dump(j);
}

ExtendBundleFile parse_extend_bundle(const std::string& bytes) {
    json j = parse_json(bytes);
    reject_unknown_keys(j, "$", {"algebra", "f", "format", "incl", "module", "phi", "v", "w"});
    check_format(j, "$");
    for (const char* k : {"algebra", "module", "v", "w", "incl", "f", "phi"})
        if (!j.contains(k)) bad("$", std::string("missing \"") + k + "\"");
    ExtendBundleFile b;
    b.algebra = parse_structure_json(j["algebra"], "$.algebra");
    if (!b.algebra.coaction) bad("$.algebra", "bundle algebra needs a coaction block");
    const FieldSpec f = b.algebra.hopf.field();
    const std::size_t d = b.algebra.hopf.dim;
    b.m = parse_module_block(j["module"], "$.module", f, d, d, true, true);
    RelativeHopfModule v = parse_module_block(j["v"], "$.v", f, d, d, false, true);
    RelativeHopfModule w = parse_module_block(j["w"], "$.w", f, d, d, false, true);
    b.v = v.comodule_part();
    b.w = w.comodule_part();
    b.incl = parse_matrix(j["incl"], "$.incl", f, b.w.dim, b.v.dim);
    b.f = parse_matrix(j["f"], "$.f", f, b.m.dim, b.v.dim);
    b.phi = parse_matrix(j["phi"], "$.phi", f, d, d);
    return b;
}

std::string serialize_integral(const Matrix& phi) {
    json j;
    j["format"] = 1;
    j["kind"] = "total-integral";
    j["phi"] = matrix_json(phi);
    return dump(j);
}

namespace {

Matrix parse_matrix_envelope(const std::string& bytes, const FieldSpec& field,
                             const char* kind, const char* key) {
    json j = parse_json(bytes);
    reject_unknown_keys(j, "$", {"format", "kind", key});
    check_format(j, "$");
    if (!j.contains("kind") || j["kind"] != kind)
        bad("$", std::string("expected kind \"") + kind + "\"");
    if (!j.contains(key) || !j[key].is_array() || j[key].empty())
        bad("$", std::string("missing \"") + key + "\" matrix");
    const std::size_t rows = j[key].size();
    if (!j[key][0].is_array() || j[key][0].empty())
        bad(std::string("$.") + key, "expected matrix rows");
    return parse_matrix(j[key], std::string("$.") + key, field, rows, j[key][0].size());
}

} // namespace

Matrix parse_integral(const std::string& bytes, const FieldSpec& field) {
    return parse_matrix_envelope(bytes, field, "total-integral", "phi");
}

std::string serialize_matrix_file(const Matrix& m) {
    json j;
    j["format"] = 1;
    j["kind"] = "matrix";
    j["matrix"] = matrix_json(m);
    return dump(j);
}

Matrix parse_matrix_file(const std::string& bytes, const FieldSpec& field) {
    return parse_matrix_envelope(bytes, field, "matrix", "matrix");
}

std::string serialize_normalized(const Tensor3& theta) {
    json rows = json::array();
    for (std::size_t g = 0; g < theta.dim0(); ++g) {
        json slab = json::array();
        for (std::size_t h = 0; h < theta.dim1(); ++h) {
            json cell = json::array();
            for (std::size_t a = 0; a < theta.dim2(); ++a) cell.push_back(theta.at(g, h, a).str());
            slab.push_back(cell);
        }
        rows.push_back(slab);
    }
    json j;
    j["format"] = 1;
    j["kind"] = "normalized-integral";
    j["theta"] = rows;
    return dump(j);
}

Tensor3 parse_normalized(const std::string& bytes, const FieldSpec& field) {
    json j = parse_json(bytes);
    reject_unknown_keys(j, "$", {"format", "kind", "theta"});
    check_format(j, "$");
    if (!j.contains("kind") || j["kind"] != "normalized-integral")
        bad("$", "expected kind \"normalized-integral\"");
    const json& t = j["theta"];
    if (!t.is_array() || t.empty() || !t[0].is_array() || t[0].empty() || !t[0][0].is_array() ||
        t[0][0].empty())
        bad("$.theta", "expected a rank-3 array");
    const std::size_t d0 = t.size(), d1 = t[0].size(), d2 = t[0][0].size();
    Tensor3 out(field, d0, d1, d2);
    for (std::size_t g = 0; g < d0; ++g) {
        if (!t[g].is_array() || t[g].size() != d1) bad("$.theta", "ragged array");
        for (std::size_t h = 0; h < d1; ++h) {
            if (!t[g][h].is_array() || t[g][h].size() != d2) bad("$.theta", "ragged array");
            for (std::size_t a = 0; a < d2; ++a)
                out.at(g, h, a) = parse_scalar(t[g][h][a], "$.theta", field);
        }
    }
    return out;
}

namespace {

Matrix vec_as_matrix(const Vec& v, std::size_t rows, std::size_t cols) {
    Matrix m(v.empty() ? FieldSpec::rationals() : v[0].field(), rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = v[i * cols + j];
    return m;
}

json theta_vec_json(const Vec& v, std::size_t dh, std::size_t da) {
    json rows = json::array();
    for (std::size_t g = 0; g < dh; ++g) {
        json slab = json::array();
        for (std::size_t h = 0; h < dh; ++h) {
            json cell = json::array();
            for (std::size_t a = 0; a < da; ++a) cell.push_back(v[(g * dh + h) * da + a].str());
            slab.push_back(cell);
        }
        rows.push_back(slab);
    }
    return rows;
}

} // namespace

std::string serialize_integral_solutions(const AffineSolutionSet& s, std::size_t rows,
                                         std::size_t cols) {
    json j;
    j["format"] = 1;
    j["kind"] = "total-integral-solutions";
    j["particular"] =
        s.particular ? matrix_json(vec_as_matrix(*s.particular, rows, cols)) : json(nullptr);
    json ns = json::array();
    for (const auto& v : s.nullspace) ns.push_back(matrix_json(vec_as_matrix(v, rows, cols)));
    j["nullspace"] = ns;
    return dump(j);
}

std::string serialize_normalized_solutions(const AffineSolutionSet& s, std::size_t dh,
                                           std::size_t da) {
    json j;
    j["format"] = 1;
    j["kind"] = "normalized-integral-solutions";
    j["particular"] = s.particular ? theta_vec_json(*s.particular, dh, da) : json(nullptr);
    json ns = json::array();
    for (const auto& v : s.nullspace) ns.push_back(theta_vec_json(v, dh, da));
    j["nullspace"] = ns;
    return dump(j);
}

std::string serialize_splitting(const MaschkeSplitting& s) {
    json j;
    j["format"] = 1;
    j["kind"] = "maschke-splitting";
    j["section"] = matrix_json(s.section);
    j["retraction"] = matrix_json(s.retraction);
    return dump(j);
}

std::string report_to_json(const AxiomReport& r) {
    json j;
    j["overall"] = r.pass() ? "pass" : "fail";
    json vs = json::array();
    for (const auto& v : r.violations) {
        json e;
        e["axiom"] = v.axiom;
        e["indices"] = v.indices;
        e["lhs"] = v.lhs;
        e["rhs"] = v.rhs;
        vs.push_back(e);
    }
    j["violations"] = vs;
    return dump(j);
}

std::string report_to_text(const AxiomReport& r) { return r.str(); }

} // namespace homhopf
