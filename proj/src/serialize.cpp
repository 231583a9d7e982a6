#include "ncreal/serialize.hpp"

#include "ncreal/parse.hpp"

namespace ncreal {

Json to_json(const Rational& r) { return rational_to_string(r); }

Json to_json(const NcPoly& p) { return print_poly(p); }

Json to_json(const QMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols; ++j) row.push_back(to_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const UniPoly& p) {
  Json j;
  j["text"] = print_unipoly(p);
  Json coeffs = Json::array();
  for (const Rational& c : p.coeffs()) coeffs.push_back(to_json(c));
  j["coeffs"] = std::move(coeffs);
  return j;
}

Json to_json(const UniPolyMatrix& m) {
  Json j;
  j["text"] = print_unipoly_matrix(m);
  j["rows"] = m.rows;
  j["cols"] = m.cols;
  return j;
}

Json to_json(const ExactLdl& f) {
  Json j;
  j["psd"] = f.psd;
  j["pd"] = f.pd;
  j["perm"] = f.perm;
  Json d = Json::array();
  for (const Rational& x : f.d) d.push_back(to_json(x));
  j["d"] = std::move(d);
  j["l"] = to_json(f.l);
  return j;
}

Json to_json(const FeasibleCert& c) {
  Json j;
  Json alpha = Json::array();
  for (const Rational& x : c.alpha) alpha.push_back(to_json(x));
  j["alpha"] = std::move(alpha);
  j["b"] = to_json(c.b);
  j["ldl"] = to_json(c.ldl);
  return j;
}

Json to_json(const InfeasibleCert& c) {
  Json j;
  j["w"] = to_json(c.w);
  j["ldl"] = to_json(c.ldl);
  Json orth = Json::array();
  for (const Rational& x : c.orthogonality) orth.push_back(to_json(x));
  j["orthogonality"] = std::move(orth);
  return j;
}

Json to_json(const PsdCertificate& c) {
  Json j;
  if (c.kind == PsdCertificate::Kind::Feasible) {
    j["kind"] = "feasible";
    j["feasible"] = to_json(c.feasible);
  } else {
    j["kind"] = "infeasible";
    j["infeasible"] = to_json(c.infeasible);
  }
  return j;
}

Json to_json(const RealRadicalRound& r) {
  Json j;
  j["k"] = r.k;
  j["degree_bound"] = r.degree_bound;
  j["low_dim"] = r.low_dim;
  Json gens = Json::array();
  for (const NcPoly& p : r.generators) gens.push_back(to_json(p));
  j["generators"] = std::move(gens);
  j["fast_path"] = r.fast_path;
  j["gram_empty"] = r.gram_empty;
  if (r.has_certificate) j["certificate"] = to_json(r.certificate);
  Json ex = Json::array();
  for (const NcPoly& q : r.extracted) ex.push_back(to_json(q));
  j["extracted"] = std::move(ex);
  return j;
}

Json to_json(const RealRadicalTrace& t) {
  Json rounds = Json::array();
  for (const RealRadicalRound& r : t.rounds) rounds.push_back(to_json(r));
  return rounds;
}

std::vector<NcPoly> ideal_generators(const NormalizedIdeal& n) {
  std::vector<NcPoly> gens = n.pivots;
  for (const NcPoly& p : n.low.elements()) gens.push_back(p);
  return gens;
}

Json to_json(const NormalizedIdeal& n) {
  Json j;
  j["g"] = n.g;
  j["degree_bound"] = n.d;
  j["unit"] = n.unit_flag;
  Json gens = Json::array();
  for (const NcPoly& p : ideal_generators(n)) gens.push_back(to_json(p));
  j["generators"] = std::move(gens);
  return j;
}

Json to_json(const SmithForm& f) {
  Json j;
  j["u"] = to_json(f.U);
  j["d"] = to_json(f.D);
  j["v"] = to_json(f.V);
  Json diag = Json::array();
  for (const UniPoly& p : f.diag) diag.push_back(to_json(p));
  j["diagonal"] = std::move(diag);
  return j;
}

} // namespace ncreal
