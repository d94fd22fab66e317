#include "redpair/io.hpp"

#include <fstream>
#include <limits>

#include "redpair/errors.hpp"

namespace redpair {

namespace {

constexpr const char* kEngineBanner = "redpair 1.0.0";

Rat json_rat(const OJson& j) {
    if (j.is_number_integer()) return Rat((long long)j.get<int64_t>());
    if (j.is_string()) return parse_rat(j.get<std::string>());
    throw input_error("expected a rational (\"p/q\" string or integer), got " + j.dump());
}

Int json_int(const OJson& j) {
    if (j.is_number_integer()) return Int((long long)j.get<int64_t>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw input_error("expected an integer, got " + j.dump());
}

int64_t int_to_i64(const Int& v) {
    if (v > Int(std::numeric_limits<int64_t>::max()) ||
        v < Int(std::numeric_limits<int64_t>::min()))
        throw input_error("integer too large for JSON output: " + v.str());
    return v.convert_to<int64_t>();
}

}  // namespace

const SpaceModel& Document::space(const std::string& name) const {
    auto it = spaces.find(name);
    if (it == spaces.end()) throw input_error("no space named '" + name + "'");
    return it->second;
}

const EquivariantClass& Document::cls(const std::string& name) const {
    auto it = classes.find(name);
    if (it == classes.end()) throw input_error("no class named '" + name + "'");
    return it->second;
}

VecQ parse_vec(const OJson& j, size_t rank) {
    if (!j.is_array() || j.size() != rank)
        throw input_error("expected a vector of length " + std::to_string(rank) + ", got " +
                          j.dump());
    VecQ v;
    for (const auto& e : j) v.push_back(json_rat(e));
    return v;
}

MPoly parse_mpoly(const OJson& j, size_t rank) {
    if (!j.is_array()) throw input_error("expected a polynomial term array, got " + j.dump());
    MPoly p(rank);
    for (const auto& term : j) {
        if (!term.contains("exps") || !term.contains("coeff"))
            throw input_error("polynomial term needs 'exps' and 'coeff': " + term.dump());
        const auto& ej = term["exps"];
        if (!ej.is_array() || ej.size() != rank)
            throw input_error("term exponents must have length " + std::to_string(rank));
        MPoly::Exps e;
        for (const auto& x : ej) {
            if (!x.is_number_integer()) throw input_error("exponents must be integers");
            int v = x.get<int>();
            if (v < 0) throw input_error("negative exponent in polynomial");
            e.push_back(v);
        }
        p.add_term(e, json_rat(term["coeff"]));
    }
    return p;
}

Document parse_document(const OJson& j) {
    Document doc;
    if (!j.contains("schema") || !j["schema"].is_number_integer() || j["schema"] != 1)
        throw input_error("input document must declare schema: 1");
    if (!j.contains("rank") || !j["rank"].is_number_integer())
        throw input_error("input document must declare an integer rank");
    doc.rank = j["rank"].get<size_t>();
    if (doc.rank == 0) throw input_error("rank must be positive");

    if (!j.contains("spaces") || !j["spaces"].is_array())
        throw input_error("input document needs a 'spaces' array");
    for (const auto& sj : j["spaces"]) {
        std::string name = sj.at("name").get<std::string>();
        std::string kind_s = sj.at("kind").get<std::string>();
        SpaceKind kind;
        if (kind_s == "compact")
            kind = SpaceKind::compact;
        else if (kind_s == "linear")
            kind = SpaceKind::linear;
        else
            throw input_error("space '" + name + "': kind must be 'compact' or 'linear'");
        std::vector<FixedPoint> pts;
        for (const auto& pj : sj.at("points")) {
            FixedPoint f;
            f.id = pj.at("id").get<std::string>();
            f.moment = parse_vec(pj.at("moment"), doc.rank);
            for (const auto& wj : pj.at("weights")) {
                if (!wj.is_array() || wj.size() != doc.rank)
                    throw input_error("space '" + name + "' point '" + f.id +
                                      "': weight must be an integer array of length rank");
                std::vector<Int> c;
                for (const auto& x : wj) c.push_back(json_int(x));
                f.weights.emplace_back(std::move(c));
            }
            pts.push_back(std::move(f));
        }
        auto model = SpaceModel::validate(name, kind, doc.rank, std::move(pts));
        doc.spaces.emplace(name, std::move(model));
    }

    if (j.contains("classes")) {
        for (const auto& cj : j["classes"]) {
            std::string name = cj.at("name").get<std::string>();
            std::string space_name = cj.at("space").get<std::string>();
            const SpaceModel& sp = doc.space(space_name);
            EquivariantClass cls;
            cls.space = space_name;
            for (const auto& [id, pj] : cj.at("restrictions").items())
                cls.restrictions[id] = parse_mpoly(pj, doc.rank);
            validate_class(sp, cls);
            doc.classes.emplace(name, std::move(cls));
        }
    }
    return doc;
}

Document load_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open input file: " + path);
    OJson j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw input_error("JSON parse error in " + path + ": " + e.what());
    }
    return parse_document(j);
}

OJson rat_json(const Rat& x) { return rat_str(x); }

OJson vec_json(const VecQ& v) {
    OJson a = OJson::array();
    for (const auto& x : v) a.push_back(rat_str(x));
    return a;
}

OJson xi_json(const std::vector<Int>& xi) {
    OJson a = OJson::array();
    for (const auto& x : xi) a.push_back(int_to_i64(x));
    return a;
}

OJson linform_json(const LinForm& f) {
    OJson a = OJson::array();
    for (size_t i = 0; i < f.rank(); ++i) a.push_back(int_to_i64(f[i]));
    return a;
}

OJson mpoly_json(const MPoly& p) {
    OJson a = OJson::array();
    for (const auto& [e, c] : p.terms()) {
        OJson t;
        t["exps"] = e;
        t["coeff"] = rat_str(c);
        a.push_back(std::move(t));
    }
    return a;
}

OJson pairing_json(const PairingResult& r) {
    OJson j;
    j["regular"] = r.regular;
    j["t"] = vec_json(r.t);
    if (r.regular) {
        j["value"] = rat_str(*r.value);
        OJson pp;
        for (const auto& [id, v] : r.per_point) pp[id] = rat_str(v);
        j["per_point"] = std::move(pp);
    } else {
        j["wall"] = r.wall_witness;
    }
    return j;
}

OJson chamber_json(const ChamberPolynomial& cp) {
    OJson j;
    j["base_point"] = vec_json(cp.base_point);
    j["degree_bound"] = cp.degree_bound;
    j["poly"] = mpoly_json(cp.poly);
    j["pretty"] = cp.poly.pretty("t");
    return j;
}

OJson local_terms_json(const std::vector<LocalTerm>& terms) {
    OJson a = OJson::array();
    for (const auto& t : terms) {
        OJson j;
        j["point"] = t.point_id;
        j["sign"] = t.sign;
        j["apex"] = vec_json(t.apex);
        j["numerator"] = mpoly_json(t.numerator);
        OJson den = OJson::array();
        for (const auto& f : t.denominator) den.push_back(linform_json(f));
        j["denominator"] = std::move(den);
        j["pretty_denominator"] = [&] {
            std::string s;
            for (const auto& f : t.denominator) {
                if (!s.empty()) s += " * ";
                s += "(" + f.pretty() + ")";
            }
            return s;
        }();
        a.push_back(std::move(j));
    }
    return a;
}

std::vector<LocalTerm> parse_local_terms(const OJson& j, size_t rank) {
    std::vector<LocalTerm> out;
    for (const auto& tj : j) {
        LocalTerm t;
        t.point_id = tj.at("point").get<std::string>();
        t.sign = tj.at("sign").get<int>();
        t.apex = parse_vec(tj.at("apex"), rank);
        t.numerator = parse_mpoly(tj.at("numerator"), rank);
        for (const auto& fj : tj.at("denominator")) {
            std::vector<Int> c;
            for (const auto& x : fj) c.push_back(json_int(x));
            t.denominator.emplace_back(std::move(c));
        }
        out.push_back(std::move(t));
    }
    return out;
}

OJson spline_json(const SplineRepr& repr) {
    OJson j;
    OJson terms = OJson::array();
    for (const auto& t : repr.terms) {
        OJson tj;
        tj["coeff"] = rat_str(t.coeff);
        tj["apex"] = vec_json(t.apex);
        OJson basis = OJson::array();
        for (const auto& f : t.basis) basis.push_back(linform_json(f));
        tj["basis"] = std::move(basis);
        tj["mults"] = t.mults;
        terms.push_back(std::move(tj));
    }
    j["terms"] = std::move(terms);
    j["discarded_lower_dim"] = repr.discarded_lower_dim;
    j["discarded_point_supported"] = repr.discarded_point_supported;
    return j;
}

OJson oracle_json(const OracleReport& rep) {
    OJson j;
    j["method"] = rep.method;
    j["engine_value"] = rat_str(rep.engine_value);
    if (rep.method == "grid_convolution") {
        j["oracle_value"] = rep.oracle_float;
        j["tolerance"] = rep.tolerance;
    } else {
        j["oracle_value"] = rat_str(rep.oracle_exact);
    }
    j["pass"] = rep.pass;
    return j;
}

OJson cobordism_json(const CobordismReport& rep) {
    OJson j;
    OJson models = OJson::array();
    for (const auto& m : rep.models) {
        OJson mj;
        mj["point"] = m.point_id;
        mj["sign"] = m.sign;
        mj["value"] = rat_str(m.value);
        mj["obviously_empty"] = m.obviously_empty;
        models.push_back(std::move(mj));
    }
    j["models"] = std::move(models);
    j["linear_total"] = rat_str(rep.linear_total);
    j["compact_value"] = rat_str(rep.compact_value);
    j["pass"] = rep.pass;
    return j;
}

OJson derivative_json(const DerivativeReport& rep) {
    OJson j;
    j["poly_derivative"] = rat_str(rep.poly_derivative);
    j["u_class_pairing"] = rat_str(rep.u_class_pairing);
    j["sigma"] = rep.sigma;
    j["pass"] = rep.pass;
    return j;
}

OJson regularity_json(const RegularityReport& rep) {
    OJson j;
    j["regular"] = rep.regular;
    if (!rep.regular)
        j["wall"] = rep.witness;
    else if (!rep.nearest_wall.empty())
        j["nearest_wall"] = rep.nearest_wall;
    return j;
}

OJson output_document(const std::string& query, const OJson& result,
                      const std::vector<Int>* xi) {
    OJson j;
    j["schema"] = 1;
    j["engine"] = kEngineBanner;
    j["query"] = query;
    if (xi) j["xi"] = xi_json(*xi);
    j["result"] = result;
    return j;
}

}  // namespace redpair
