#ifndef REDPAIR_IO_HPP
#define REDPAIR_IO_HPP

#include <json.hpp>
#include <map>
#include <string>

#include "redpair/oracle.hpp"
#include "redpair/pairing.hpp"

namespace redpair {

using OJson = nlohmann::ordered_json;

/// A parsed and validated input file: rank, named spaces, named
/// classes. Rationals are "p/q" strings or plain integers; weights
/// are integer arrays.
struct Document {
    int schema = 1;
    size_t rank = 0;
    std::map<std::string, SpaceModel> spaces;
    std::map<std::string, EquivariantClass> classes;

    const SpaceModel& space(const std::string& name) const;
    const EquivariantClass& cls(const std::string& name) const;
};

Document parse_document(const OJson& j);
Document load_document(const std::string& path);

// Serialization. All rationals render as canonical "p/q" strings; key
// order is fixed so identical inputs give byte-identical output.
OJson rat_json(const Rat& x);
OJson vec_json(const VecQ& v);
OJson xi_json(const std::vector<Int>& xi);
OJson mpoly_json(const MPoly& p);
OJson linform_json(const LinForm& f);
OJson pairing_json(const PairingResult& r);
OJson chamber_json(const ChamberPolynomial& cp);
OJson local_terms_json(const std::vector<LocalTerm>& terms);
OJson spline_json(const SplineRepr& repr);
OJson oracle_json(const OracleReport& rep);
OJson cobordism_json(const CobordismReport& rep);
OJson derivative_json(const DerivativeReport& rep);
OJson regularity_json(const RegularityReport& rep);

/// Parses a term dump produced by local_terms_json back into terms.
std::vector<LocalTerm> parse_local_terms(const OJson& j, size_t rank);

/// Wraps a query result with the engine banner and the xi used.
OJson output_document(const std::string& query, const OJson& result,
                      const std::vector<Int>* xi = nullptr);

MPoly parse_mpoly(const OJson& j, size_t rank);
VecQ parse_vec(const OJson& j, size_t rank);

}  // namespace redpair

#endif
