#include "intamp/json_io.hpp"

namespace intamp::jsonio {
namespace {

const json& need(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw InputError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

long int_field(const json& j, const char* key) {
    const json& v = need(j, key);
    if (!v.is_number_integer()) throw InputError(std::string("field \"") + key + "\" must be an integer");
    return v.get<long>();
}

}  // namespace

Rat rat_from_json(const json& j) {
    if (j.is_string()) return parse_rat(j.get<std::string>());
    if (j.is_number_integer()) return Rat(j.get<long long>());
    throw InputError("rational values must be strings like \"p/q\"");
}

std::vector<Rat> vector_from_json(const json& j) {
    if (!j.is_array()) throw InputError("expected an array of rationals");
    std::vector<Rat> v;
    v.reserve(j.size());
    for (const auto& e : j) v.push_back(rat_from_json(e));
    return v;
}

RatMatrix matrix_from_json(const json& j) {
    long rows = int_field(j, "rows"), cols = int_field(j, "cols");
    if (rows <= 0 || cols <= 0) throw InputError("matrix dimensions must be positive");
    const json& ent = need(j, "entries");
    if (!ent.is_array() || static_cast<long>(ent.size()) != rows * cols)
        throw InputError("entries must hold rows*cols rationals (row major)");
    std::vector<Rat> e;
    e.reserve(ent.size());
    for (const auto& x : ent) e.push_back(rat_from_json(x));
    return {rows, cols, std::move(e)};
}

QuadElem quad_from_json(const json& j, long d) {
    if (!j.is_object()) throw InputError("order elements must be objects {\"a\":..,\"b\":..}");
    if (j.contains("d") && j.at("d").get<long>() != d)
        throw InputError("entry ring tag disagrees with the ambient d");
    return {rat_from_json(need(j, "a")), rat_from_json(need(j, "b")), d};
}

CMEndo cmendo_from_json(const json& j) {
    long d = int_field(j, "d");
    if (!valid_discriminant(d)) throw InputError("d must be negative and squarefree");
    const json& cm = need(j, "cm");
    if (!cm.is_boolean()) throw InputError("cm must be a boolean");
    const json& rows = need(j, "matrix");
    if (!rows.is_array() || rows.empty()) throw InputError("matrix must be a nonempty array of rows");
    const long n = static_cast<long>(rows.size());
    QuadMatrix M(n, d);
    for (long i = 0; i < n; ++i) {
        const json& row = rows.at(static_cast<size_t>(i));
        if (!row.is_array() || static_cast<long>(row.size()) != n)
            throw InputError("matrix must be square");
        for (long k = 0; k < n; ++k) M.at(i, k) = quad_from_json(row.at(static_cast<size_t>(k)), d);
    }
    return {std::move(M), cm.get<bool>()};
}

EndoAction endo_action_from_json(const json& j) {
    if (j.is_object() && j.contains("matrix") && j.contains("d")) return ns_pullback(cmendo_from_json(j));
    EndoAction a;
    if (j.is_object() && j.contains("mat")) {
        a.mat = matrix_from_json(j.at("mat"));
        if (j.contains("degree") && !j.at("degree").is_null() && j.at("degree") != "Unknown") {
            Rat deg = rat_from_json(j.at("degree"));
            if (!is_integer(deg) || deg <= 0) throw InputError("degree must be a positive integer");
            a.degree = num(deg);
        }
        if (j.contains("provenance")) a.provenance = j.at("provenance").get<std::string>();
    } else {
        a.mat = matrix_from_json(j);
    }
    if (!a.mat.square()) throw InputError("pullback action must be a square matrix");
    return a;
}

PolyCone cone_from_json(const json& j) {
    long dim = int_field(j, "dim");
    const json& gens = need(j, "generators");
    if (!gens.is_array()) throw InputError("generators must be an array of vectors");
    std::vector<std::vector<Rat>> g;
    for (const auto& row : gens) {
        auto v = vector_from_json(row);
        if (static_cast<long>(v.size()) != dim) throw InputError("generator dimension mismatch");
        g.push_back(std::move(v));
    }
    try {
        return {dim, std::move(g)};
    } catch (const MathError& e) {
        throw InputError(e.what());
    }
}

json matrix_to_json(const RatMatrix& m) {
    json ent = json::array();
    for (const Rat& x : m.entries()) ent.push_back(rat_str(x));
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(ent)}};
}

json profile_to_json(const CircleProfile& p) {
    return {{"inside", p.inside}, {"on", p.on}, {"outside", p.outside}, {"radius_sq", rat_str(p.radius_sq)}};
}

json classification_to_json(const ClassificationReport& r) {
    json j;
    j["unit_profile"] = profile_to_json(r.unit_profile);
    j["int_amplified"] = r.int_amplified;
    j["amplified_sufficient"] =
        r.amplified_sufficient == ClassificationReport::Sufficient::Yes ? "Yes" : "NoEvidence";
    switch (r.polarized_profile) {
        case ClassificationReport::Polarized::Yes:
            j["polarized_profile"] = "Yes";
            j["q_sq"] = rat_str(r.q_sq);
            break;
        case ClassificationReport::Polarized::No:
            j["polarized_profile"] = "No";
            break;
        default:
            j["polarized_profile"] = "Unknown";
            break;
    }
    j["diagonalizable"] = r.diagonalizable;
    j["degree"] = r.degree ? json(r.degree->str()) : json("Unknown");
    j["notes"] = r.notes;
    return j;
}

json composition_to_json(const CompositionReport& r) {
    return {{"i_norm_bound", r.i_norm_bound},
            {"passing_below_bound", r.passing_below_bound},
            {"direction", r.direction}};
}

namespace {
json rat_vec(const std::vector<Rat>& v) {
    json a = json::array();
    for (const Rat& x : v) a.push_back(rat_str(x));
    return a;
}
}  // namespace

json membership_to_json(const MembershipResult& r) {
    json j;
    j["member"] = r.member;
    if (r.member)
        j["combination"] = rat_vec(r.combination);
    else
        j["separator"] = rat_vec(r.separator);
    return j;
}

json witness_to_json(const ConeWitnessReport& r) {
    json j;
    j["premise_ok"] = r.premise_ok;
    j["spectral_ok"] = r.spectral_ok;
    if (!r.ell.empty()) j["ell"] = rat_vec(r.ell);
    if (!r.h.empty()) j["h"] = rat_vec(r.h);
    j["least_m"] = r.least_m ? json(*r.least_m) : json("Unknown");
    json trace = json::array();
    for (const auto& [m, strict] : r.partial_sum_trace) trace.push_back({{"m", m}, {"strict", strict}});
    j["partial_sum_trace"] = std::move(trace);
    if (!r.certificate.empty()) j["certificate"] = rat_vec(r.certificate);
    return j;
}

json degree_bound_to_json(const DegreeBoundReport& r) {
    return {{"ok", r.ok},
            {"degree", r.degree.str()},
            {"profile", profile_to_json(r.profile)},
            {"notes", r.notes}};
}

json endo_action_to_json(const EndoAction& a) {
    json j;
    j["mat"] = matrix_to_json(a.mat);
    j["degree"] = a.degree ? json(a.degree->str()) : json("Unknown");
    j["provenance"] = a.provenance;
    return j;
}

}  // namespace intamp::jsonio
