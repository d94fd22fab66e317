// Command-line front end: exact cohomology pairings, chamber volume
// polynomials, pushforward dumps, property checks, and oracle runs on
// fixed-point models given as JSON documents.
//
// Exit codes: 0 ok, 1 input error, 2 non-regular value, 3 check failure.

#include <CLI11.hpp>
#include <iostream>
#include <optional>

#include "redpair/errors.hpp"
#include "redpair/io.hpp"
#include "redpair/oracle.hpp"

using namespace redpair;

namespace {

VecQ parse_point(const std::string& s, size_t rank) {
    VecQ v;
    size_t pos = 0;
    while (pos <= s.size()) {
        size_t comma = s.find(',', pos);
        std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos
                                                                   : comma - pos);
        if (tok.empty()) throw input_error("bad point literal: '" + s + "'");
        v.push_back(parse_rat(tok));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (v.size() != rank)
        throw input_error("point '" + s + "' has " + std::to_string(v.size()) +
                          " coordinates, expected " + std::to_string(rank));
    return v;
}

std::vector<Int> parse_xi(const std::string& s, size_t rank) {
    std::vector<Int> xi;
    size_t pos = 0;
    while (pos <= s.size()) {
        size_t comma = s.find(',', pos);
        std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos
                                                                   : comma - pos);
        if (tok.empty()) throw input_error("bad xi literal: '" + s + "'");
        xi.emplace_back(tok);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (xi.size() != rank) throw input_error("xi must have rank " + std::to_string(rank));
    return xi;
}

void emit(const OJson& j) { std::cout << j.dump(2) << "\n"; }

struct QueryTarget {
    const SpaceModel* space = nullptr;
    std::optional<EquivariantClass> cls;
    // Keeps a product model alive when --product-of is used.
    std::optional<SpaceModel> owned_space;
};

QueryTarget resolve_target(const Document& doc, const std::string& space_name,
                           const std::string& class_name,
                           const std::vector<std::string>& product_of,
                           const std::vector<std::string>& product_classes) {
    QueryTarget t;
    if (!product_of.empty()) {
        if (product_of.size() != 2)
            throw input_error("--product-of needs exactly two space names");
        const SpaceModel& x = doc.space(product_of[0]);
        const SpaceModel& y = doc.space(product_of[1]);
        t.owned_space = product_space(x, y);
        t.space = &*t.owned_space;
        if (!product_classes.empty()) {
            if (product_classes.size() != 2)
                throw input_error("--classes needs exactly two class names");
            t.cls = product_class(x, y, doc.cls(product_classes[0]), doc.cls(product_classes[1]));
            t.cls->space = t.space->name();
        }
        return t;
    }
    if (space_name.empty()) throw input_error("--space is required");
    t.space = &doc.space(space_name);
    if (!class_name.empty()) t.cls = doc.cls(class_name);
    return t;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact pairings on symplectic quotients from fixed-point data"};
    app.require_subcommand(1);

    std::string file, space_name, class_name, at_str, near_str, xi_str, what, method;
    std::string space2_name, class2_name, step_str = "1/1000";
    std::vector<std::string> product_of, product_classes;
    double tolerance = 1e-2;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("file", file, "input document (JSON)")->required();
        sub->add_option("--space", space_name, "space name in the document");
        sub->add_option("--xi", xi_str, "polarization vector, e.g. '1,2'");
    };

    CLI::App* cmd_pair = app.add_subcommand("pair", "exact pairing at a regular value");
    add_common(cmd_pair);
    cmd_pair->add_option("--class", class_name, "class name");
    cmd_pair->add_option("--at", at_str, "evaluation point, e.g. '0,0'")->required();
    cmd_pair->add_option("--product-of", product_of, "two spaces; pair on their product");
    cmd_pair->add_option("--classes", product_classes, "two classes for --product-of");

    CLI::App* cmd_volume = app.add_subcommand("volume", "chamber volume polynomial");
    add_common(cmd_volume);
    cmd_volume->add_option("--near", near_str, "regular base point of the chamber")->required();

    CLI::App* cmd_push = app.add_subcommand("pushforward", "polarized local term dump");
    add_common(cmd_push);
    cmd_push->add_option("--class", class_name, "class name")->required();

    CLI::App* cmd_check =
        app.add_subcommand("check", "engine property checks (nonzero exit on failure)");
    add_common(cmd_check);
    cmd_check->add_option("--what", what, "polarization | convolution | cobordism | derivative")
        ->required();
    cmd_check->add_option("--class", class_name, "class name");
    cmd_check->add_option("--at", at_str, "evaluation point");
    cmd_check->add_option("--space2", space2_name, "second factor for convolution");
    cmd_check->add_option("--class2", class2_name, "second class for convolution");

    CLI::App* cmd_oracle = app.add_subcommand("oracle", "independent brute-force cross-checks");
    add_common(cmd_oracle);
    cmd_oracle->add_option("--method", method, "triangulation | enumeration | grid_convolution")
        ->required();
    cmd_oracle->add_option("--class", class_name, "class name (enumeration)");
    cmd_oracle->add_option("--at", at_str, "evaluation point")->required();
    cmd_oracle->add_option("--space2", space2_name, "second factor (grid_convolution)");
    cmd_oracle->add_option("--step", step_str, "grid step (grid_convolution)");
    cmd_oracle->add_option("--tolerance", tolerance, "float tolerance (grid_convolution)");

    CLI11_PARSE(app, argc, argv);

    try {
        Document doc = load_document(file);
        std::optional<std::vector<Int>> xi;
        if (!xi_str.empty()) xi = parse_xi(xi_str, doc.rank);

        if (*cmd_pair) {
            QueryTarget t =
                resolve_target(doc, space_name, class_name, product_of, product_classes);
            if (!t.cls) throw input_error("pair: a class is required");
            VecQ at = parse_point(at_str, doc.rank);
            PairingResult r = pair(*t.space, *t.cls, at, xi);
            emit(output_document("pair", pairing_json(r), &r.xi));
            return r.regular ? 0 : 2;
        }

        if (*cmd_volume) {
            const SpaceModel& sp = doc.space(space_name);
            VecQ t0 = parse_point(near_str, doc.rank);
            ChamberPolynomial cp = dh_polynomial(sp, t0);
            emit(output_document("volume", chamber_json(cp)));
            return 0;
        }

        if (*cmd_push) {
            const SpaceModel& sp = doc.space(space_name);
            Polarization pol = xi ? polarize(sp, *xi) : choose_generic_xi(sp);
            auto terms = pushforward_terms(sp, doc.cls(class_name), pol);
            emit(output_document("pushforward", local_terms_json(terms), &pol.xi));
            return 0;
        }

        if (*cmd_check) {
            const SpaceModel& sp = doc.space(space_name);
            if (what == "polarization") {
                // Values at t must agree across generic polarizations.
                VecQ at = parse_point(at_str, doc.rank);
                const EquivariantClass cls =
                    class_name.empty() ? class_unit(sp) : doc.cls(class_name);
                PairingResult base = pair(sp, cls, at);
                OJson tried = OJson::array();
                bool ok = base.regular;
                long candidates[][2] = {{1, 2}, {2, 1}, {-3, 1}, {5, 3}, {-1, -4}, {7, 2}};
                int used = 0;
                for (auto& c : candidates) {
                    if (used >= 3) break;
                    std::vector<Int> cand;
                    for (size_t i = 0; i < sp.rank(); ++i) cand.emplace_back(c[i % 2]);
                    try {
                        PairingResult r = pair(sp, cls, at, cand);
                        ++used;
                        bool same = r.regular == base.regular &&
                                    (!r.regular || *r.value == *base.value);
                        ok = ok && same;
                        OJson e;
                        e["xi"] = xi_json(cand);
                        e["value"] = r.regular ? rat_str(*r.value) : "non-regular";
                        e["match"] = same;
                        tried.push_back(std::move(e));
                    } catch (const input_error&) {
                        continue;  // xi not generic for this space
                    }
                }
                OJson res;
                res["base_value"] = base.regular ? rat_str(*base.value) : "non-regular";
                res["alternatives"] = std::move(tried);
                res["pass"] = ok;
                emit(output_document("check.polarization", res, &base.xi));
                if (!ok) throw check_failure("polarization dependence detected");
                return 0;
            }
            if (what == "convolution") {
                if (space2_name.empty() || class_name.empty() || class2_name.empty())
                    throw input_error("convolution check needs --space, --space2, --class, --class2");
                const SpaceModel& sp2 = doc.space(space2_name);
                VecQ at = parse_point(at_str, doc.rank);
                const EquivariantClass &a = doc.cls(class_name), &b = doc.cls(class2_name);
                SpaceModel prod = product_space(sp, sp2);
                EquivariantClass ab = product_class(sp, sp2, a, b);
                PairingResult direct = pair(prod, ab, at, xi);
                // Convolution route: polarize the product, reuse for
                // the factors, convolve the factor terms.
                Polarization pol = xi ? polarize(prod, *xi) : choose_generic_xi(prod);
                Polarization pa = polarize(sp, pol.xi), pb = polarize(sp2, pol.xi);
                auto terms = convolve(pushforward_terms(sp, a, pa), pushforward_terms(sp2, b, pb));
                Rat conv_total = 0;
                bool regular = true;
                for (const auto& term : terms) {
                    EvalResult e = eval(decompose(term, doc.rank), at);
                    regular = regular && e.regular;
                    if (e.regular) conv_total += e.value;
                }
                bool ok = direct.regular && regular && *direct.value == conv_total;
                OJson res;
                res["direct"] = direct.regular ? rat_str(*direct.value) : "non-regular";
                res["convolved"] = regular ? rat_str(conv_total) : "non-regular";
                res["pass"] = ok;
                emit(output_document("check.convolution", res, &pol.xi));
                if (!ok) throw check_failure("convolution identity failed");
                return 0;
            }
            if (what == "cobordism") {
                VecQ at = parse_point(at_str, doc.rank);
                const EquivariantClass cls =
                    class_name.empty() ? class_unit(sp) : doc.cls(class_name);
                CobordismReport rep = cobordism_check(sp, cls, at, xi);
                emit(output_document("check.cobordism", cobordism_json(rep)));
                if (!rep.pass) throw check_failure("cobordism sum mismatch");
                return 0;
            }
            if (what == "derivative") {
                VecQ t0 = parse_point(at_str, doc.rank);
                OJson dirs = OJson::array();
                bool ok = true;
                for (size_t beta = 0; beta < sp.rank(); ++beta) {
                    DerivativeReport rep = dh_derivative_check(sp, t0, beta);
                    ok = ok && rep.pass;
                    dirs.push_back(derivative_json(rep));
                }
                OJson res;
                res["directions"] = std::move(dirs);
                res["pass"] = ok;
                emit(output_document("check.derivative", res));
                if (!ok) throw check_failure("derivative calibration failed");
                return 0;
            }
            throw input_error("unknown check: " + what);
        }

        if (*cmd_oracle) {
            const SpaceModel& sp = doc.space(space_name);
            VecQ at = parse_point(at_str, doc.rank);
            if (method == "triangulation") {
                if (sp.kind() != SpaceKind::linear)
                    throw input_error("triangulation oracle runs on linear spaces");
                PairingResult r = pair(sp, class_unit(sp), at, xi);
                if (!r.regular) throw nonregular_error("oracle: t not regular", r.wall_witness);
                OracleReport rep;
                rep.engine_value = *r.value;
                rep.oracle_exact = fiber_volume(sp.points()[0].weights, at);
                rep.method = "triangulation";
                rep.pass = rep.engine_value == rep.oracle_exact;
                emit(output_document("oracle", oracle_json(rep)));
                return rep.pass ? 0 : 3;
            }
            if (method == "enumeration") {
                if (class_name.empty()) throw input_error("enumeration oracle needs --class");
                const EquivariantClass& cls = doc.cls(class_name);
                PairingResult r = pair(sp, cls, at, xi);
                if (!r.regular) throw nonregular_error("oracle: t not regular", r.wall_witness);
                OracleReport rep;
                rep.engine_value = *r.value;
                rep.oracle_exact = fixed_point_enumeration(sp, cls, at[0]);
                rep.method = "enumeration";
                rep.pass = rep.engine_value == rep.oracle_exact;
                emit(output_document("oracle", oracle_json(rep)));
                return rep.pass ? 0 : 3;
            }
            if (method == "grid_convolution") {
                if (doc.rank != 1) throw input_error("grid convolution oracle is rank-one only");
                if (space2_name.empty()) throw input_error("grid_convolution needs --space2");
                const SpaceModel& sp2 = doc.space(space2_name);
                Rat step = parse_rat(step_str);
                SpaceModel prod = product_space(sp, sp2);
                PairingResult direct = pair(prod, class_unit(prod), at, xi);
                if (!direct.regular)
                    throw nonregular_error("oracle: t not regular", direct.wall_witness);
                DecomposedPairing da = build_pairing(sp, class_unit(sp));
                DecomposedPairing db = build_pairing(sp2, class_unit(sp2));
                auto density = [](const DecomposedPairing& d) {
                    return [&d](const Rat& x) -> std::optional<Rat> {
                        PairingResult r = evaluate_pairing(d, {x});
                        if (!r.regular) return std::nullopt;
                        return *r.value;
                    };
                };
                Rat lo = sp.points().front().moment[0], hi = lo;
                for (const auto& p : sp.points()) {
                    lo = std::min(lo, p.moment[0]);
                    hi = std::max(hi, p.moment[0]);
                }
                OracleReport rep = grid_convolution_check(density(da), lo, hi, density(db), at[0],
                                                          step, *direct.value, tolerance);
                emit(output_document("oracle", oracle_json(rep)));
                return rep.pass ? 0 : 3;
            }
            throw input_error("unknown oracle method: " + method);
        }
    } catch (const nonregular_error& e) {
        OJson j;
        j["error"] = e.what();
        j["wall"] = e.witness();
        emit(output_document("error", j));
        return 2;
    } catch (const check_failure& e) {
        std::cerr << "check failed: " << e.what() << "\n";
        return 3;
    } catch (const input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
