#include "polyspace/json_io.hpp"

#include "polyspace/errors.hpp"
#include "polyspace/format.hpp"

namespace polyspace {

using nlohmann::json;

json weights_json(const WeightVector& m) {
  json arr = json::array();
  for (int i = 0; i < m.n(); ++i) arr.push_back(format_rat(m.entry(i)));
  return arr;
}

std::vector<Rat> weights_from_json(const json& j) {
  if (!j.is_array()) throw Error(errc::parse_error, "weights: expected array");
  std::vector<Rat> out;
  for (const auto& entry : j) {
    if (!entry.is_string())
      throw Error(errc::parse_error, "weights: expected decimal strings");
    out.push_back(parse_rat(entry.get<std::string>()));
  }
  return out;
}

json polynomial_json(const IntPolynomial& P) {
  json arr = json::array();
  for (int d = 0; d <= P.degree(); ++d) arr.push_back(P.coeff(d).str());
  return arr;
}

IntPolynomial polynomial_from_json(const json& j) {
  if (!j.is_array())
    throw Error(errc::parse_error, "polynomial: expected array");
  std::vector<Int> coeffs;
  for (const auto& entry : j) {
    if (!entry.is_string())
      throw Error(errc::parse_error, "polynomial: expected decimal strings");
    coeffs.emplace_back(entry.get<std::string>());
  }
  return IntPolynomial(std::move(coeffs));
}

json ring_element_json(const RingElement& e) {
  json arr = json::array();
  for (const auto& [mono, coeff] : e.terms()) {
    json l = json::array();
    for (int i : bit_indices(mono.lSet)) l.push_back(i + 1);
    arr.push_back(
        json{{"coeff", format_rat(coeff)}, {"l", l}, {"p", mono.pPow}});
  }
  return arr;
}

RingElement ring_element_from_json(const json& j) {
  if (!j.is_array()) throw Error(errc::parse_error, "element: expected array");
  RingElement e;
  for (const auto& term : j) {
    Rat coeff = parse_rat(term.at("coeff").get<std::string>());
    Subset J(0);
    for (const auto& idx : term.at("l")) J = J.with(idx.get<int>() - 1);
    e.add_term(Monomial{J, term.at("p").get<int>()}, coeff);
  }
  return e;
}

json subset_json(Subset I) {
  json arr = json::array();
  for (int i : bit_indices(I)) arr.push_back(i + 1);
  return arr;
}

json partition_json(const Partition& P) {
  json arr = json::array();
  for (Subset part : P.parts()) arr.push_back(subset_json(part));
  return arr;
}

json quadrangle_json(const Quadrangle& Q) {
  json out;
  out["kind"] = Q.kind == QuadrangleKind::Star ? "star" : "triangle";
  out[Q.kind == QuadrangleKind::Star ? "center" : "distinguished"] =
      subset_json(Q.parts.part(Q.special));
  out["parts"] = partition_json(Q.parts);
  return out;
}

json maximal_degeneration_json(const MaximalDegeneration& d) {
  return json{{"I", subset_json(d.I)}, {"dimension", d.dimension}};
}

json fano_json(const FanoReport& r) {
  json witnesses = json::array();
  if (r.star_witness) {
    json w = quadrangle_json(*r.star_witness);
    w["type"] = "quadrangle";
    witnesses.push_back(w);
  }
  if (r.maximal_witness) {
    json w = maximal_degeneration_json(*r.maximal_witness);
    w["type"] = "maximal";
    witnesses.push_back(w);
  }
  return json{{"fano", r.fano},
              {"method_quadrangle", r.method_quadrangle},
              {"method_maximal", r.method_maximal},
              {"witnesses", witnesses}};
}

}  // namespace polyspace
