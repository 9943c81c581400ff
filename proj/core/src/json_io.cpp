#include "csamot/json_io.hpp"

#include "csamot/error.hpp"

namespace csamot {

Json to_json(const Integer& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

Json to_json(const LabelMap& terms) {
  Json out = Json::object();
  for (const auto& [lambda, coeff] : terms) out[lambda.to_string()] = to_json(coeff);
  return out;
}

Json to_json(const GrChowClass& c) { return Json{{"codim", c.codim()}, {"terms", to_json(c.terms())}}; }

Json to_json(const XClass& c) { return Json{{"codim", c.codim()}, {"terms", to_json(c.terms())}}; }

Json to_json(const PXClass& c) {
  Json out{{"codim", c.total_codim}};
  for (int h = 0; h < 3; ++h) out["h^" + std::to_string(h)] = to_json(c.at(h));
  return out;
}

Json to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

Json to_json(const TatePattern& p) {
  Json out = Json::object();
  for (const auto& [key, m] : p.entries())
    out["(" + std::to_string(key.first) + "," + std::to_string(key.second) + ")"] = m;
  return out;
}

Json to_json(const D2Matrix& d) {
  Json rows = Json::array();
  Json cols = Json::array();
  for (const auto& i : d.rows) rows.push_back(i.to_string());
  for (const auto& j : d.cols) cols.push_back(j.to_string());
  Json entries = Json::array();
  for (std::size_t r = 0; r < d.rows.size(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < d.cols.size(); ++c) row.push_back(d.at(r, c));
    entries.push_back(std::move(row));
  }
  return Json{{"n", d.n}, {"q", d.q}, {"rows", rows}, {"cols", cols}, {"entries", entries}};
}

Json to_json(const GroupExpr& g) { return Json(g.to_string()); }

Json to_json(const std::map<int, GroupExpr>& table) {
  Json out = Json::object();
  for (const auto& [degree, g] : table) out[std::to_string(degree)] = to_json(g);
  return out;
}

XClass xclass_from_json(const Json& j) {
  try {
    const int codim = j.at("codim").get<int>();
    LabelMap terms;
    for (const auto& [label, coeff] : j.at("terms").items()) {
      Integer c = coeff.is_string() ? Integer(coeff.get<std::string>()) : Integer(coeff.get<long>());
      terms[parse_partition(label)] += c;
    }
    return XClass::from_terms(codim, terms);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("malformed class JSON: ") + e.what());
  }
}

}  // namespace csamot
