#pragma once

#include "json.hpp"
#include "ncreal/ideal.hpp"
#include "ncreal/polymatrix.hpp"
#include "ncreal/psdfeas.hpp"
#include "ncreal/realrad.hpp"

namespace ncreal {

// Key order is kept as written so reports diff cleanly run to run.
using Json = nlohmann::ordered_json;

// Rationals render as exact "num/den" strings (plain "num" for integers);
// polynomials and matrices over Q[x] render in the text grammars, so every
// JSON field feeds back through the corresponding parser unchanged.
Json to_json(const Rational& r);
Json to_json(const NcPoly& p);
Json to_json(const QMatrix& m);
Json to_json(const UniPoly& p);
Json to_json(const UniPolyMatrix& m);

Json to_json(const ExactLdl& f);
Json to_json(const FeasibleCert& c);
Json to_json(const InfeasibleCert& c);
Json to_json(const PsdCertificate& c);

Json to_json(const RealRadicalRound& r);
Json to_json(const RealRadicalTrace& t);
Json to_json(const NormalizedIdeal& n);

Json to_json(const SmithForm& f);

// Generating set listed by reports and bindings: the degree-d pivots followed
// by the low-degree basis elements.
std::vector<NcPoly> ideal_generators(const NormalizedIdeal& n);

} // namespace ncreal
