#include "strata/json_io.hpp"

namespace strata {

Json to_json(const ParamPoly& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(c.get_str());
  return a;
}

ParamPoly param_poly_from_json(const Json& j) {
  if (!j.is_array()) throw Error("polynomial must be a JSON array of decimal strings");
  std::vector<std::string> s;
  for (const auto& c : j) {
    if (c.is_string()) s.push_back(c.get<std::string>());
    else if (c.is_number_integer()) s.push_back(std::to_string(c.get<long long>()));
    else throw Error("polynomial coefficients must be strings or integers");
  }
  return parse_param_poly(s);
}

Json to_json(const RatPoly& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(c.get_str());
  return a;
}

Json to_json(const VarSpec& v) {
  Json a = Json::array();
  for (const auto& g : v.generators()) a.push_back({{"name", g.name}, {"truncation", g.truncation}});
  return a;
}

VarSpec var_spec_from_json(const Json& j) {
  std::vector<Generator> gens;
  for (const auto& g : j) gens.push_back({g.at("name").get<std::string>(), g.value("truncation", 3)});
  return VarSpec(std::move(gens));
}

Json to_json(const CohClass& c) {
  Json terms = Json::array();
  for (const auto& [m, coeff] : c.terms()) {
    Json exps = Json::object();
    for (std::size_t i = 0; i < c.ambient().size(); ++i)
      if (m[i]) exps[c.ambient()[i].name] = m[i];
    terms.push_back({{"exps", exps}, {"coeff", to_json(coeff)}});
  }
  return {{"ambient", to_json(c.ambient())}, {"total_degree", c.total_degree()}, {"terms", terms}};
}

CohClass coh_class_from_json(const Json& j) {
  VarSpec amb = var_spec_from_json(j.at("ambient"));
  CohClass c(amb, j.at("total_degree").get<int>());
  for (const auto& t : j.at("terms")) {
    Exponents m{};
    for (const auto& [name, e] : t.at("exps").items()) {
      int k = e.get<int>();
      std::size_t i = amb.index(name);
      if (k < 0 || k >= amb[i].truncation) throw Error("exponent of " + name + " outside the truncation");
      m[i] = static_cast<std::uint8_t>(k);
    }
    c.add_term(m, param_poly_from_json(t.at("coeff")));
  }
  return c;
}

Json to_json(const StratumClass& s) {
  Json j = {{"route", s.route}, {"class", to_json(s.cls)}};
  if (!(s.incidence == CohClass::one(s.ambient()))) j["incidence"] = to_json(s.incidence);
  j["aut"] = s.aut_order;
  j["valid_from_d"] = s.valid_from_d;
  return j;
}

Json to_json(const DegreeResult& r) {
  return {{"route", r.route},
          {"degree", to_json(r.numerator)},
          {"denominator", r.denominator.get_str()},
          {"aut", r.aut_applied},
          {"valid_from_d", r.valid_from_d}};
}

Json to_json(const NewtonDiagram& n) {
  Json v = Json::array();
  for (const auto& p : n.vertices()) v.push_back({p.a, p.b});
  return v;
}

}  // namespace strata
