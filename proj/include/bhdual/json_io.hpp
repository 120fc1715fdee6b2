#pragma once

#include <json.hpp>

#include "bhdual/duality.hpp"

namespace bhdual {

// numbers are emitted as JSON integers while they fit in 64 bits,
// as decimal strings beyond that
nlohmann::json json_int(const Int& v);
nlohmann::json json_rat(const Rat& v);

nlohmann::json to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const nlohmann::json& j); // {"n": int, "E": [[int,...],...]}

nlohmann::json to_json(const InvertiblePolynomial& f);
nlohmann::json to_json(const WeightVector& w);
nlohmann::json to_json(const GroupElement& e);
nlohmann::json to_json(const SymmetryGroup& g); // {d, invariant_factors, generators}
nlohmann::json to_json(const Subgroup& s);      // list of elements
nlohmann::json to_json(const StratumReport& s, std::size_t n);
nlohmann::json to_json(const OrbifoldEulerReport& r, std::size_t n);
nlohmann::json to_json(const VerificationReport& r);
nlohmann::json to_json(const AtomicDecomposition& d);

} // namespace bhdual
