#include "kzres/serialize.hpp"

namespace kzres {

using json = nlohmann::ordered_json;

json to_json(const SparsePolynomial& p) {
  json terms = json::array();
  const auto ts = p.terms();
  for (auto it = ts.rbegin(); it != ts.rend(); ++it) {
    json exp = json::array();
    for (int k = 0; k < p.nvars(); ++k) exp.push_back(it->first.exp[k]);
    terms.push_back({{"exp", exp}, {"num", it->second.get_num().get_str()}, {"den", it->second.get_den().get_str()}});
  }
  return {{"vars", p.nvars()}, {"terms", terms}};
}

SparsePolynomial polynomial_from_json(const json& j) {
  const int n = j.at("vars").get<int>();
  std::vector<SparsePolynomial::Term> terms;
  for (const auto& t : j.at("terms")) {
    Monomial mono;
    const auto& exp = t.at("exp");
    if (static_cast<int>(exp.size()) != n) throw std::invalid_argument("exponent vector length differs from vars");
    for (int k = 0; k < n; ++k) mono.exp[k] = exp[k].get<std::uint16_t>();
    Coefficient c(mpz_class(t.at("num").get<std::string>()), mpz_class(t.at("den").get<std::string>()));
    c.canonicalize();
    terms.emplace_back(mono, c);
  }
  return SparsePolynomial(n, std::move(terms));
}

json to_json(const Tabloid& u) { return u.rows; }

json to_json(const PolyFraction& f) { return {{"num", to_json(f.numerator())}, {"den", to_json(f.denominator())}}; }

namespace {

json table_header(const Partition& shape, int m) {
  return {{"lambda", shape.parts()}, {"m", m}, {"degree", diagram_stats(shape, m).solution_degree}};
}

void fill_tables(json& out, const std::vector<SolutionTable>& tables) {
  json cycles = json::array();
  json forms = json::array();
  json components = json::array();
  if (!tables.empty())
    for (const auto& [u, p] : tables.front().components) forms.push_back(to_json(u));
  for (const auto& t : tables) {
    cycles.push_back(to_json(t.cycle));
    json row = json::array();
    for (const auto& [u, p] : t.components) row.push_back(to_json(p));
    components.push_back(std::move(row));
  }
  out["cycles"] = std::move(cycles);
  out["forms"] = std::move(forms);
  out["components"] = std::move(components);
}

}  // namespace

json to_json(const SolutionTable& table) {
  json out = table_header(table.shape, table.m);
  fill_tables(out, {table});
  return out;
}

json to_json(const FundamentalMatrix& f) {
  json out = table_header(f.shape, f.m);
  fill_tables(out, f.solutions);
  json tableaux = json::array();
  for (const auto& t : f.tableaux) tableaux.push_back(t.labels());
  out["tableaux"] = std::move(tableaux);
  json matrix = json::array();
  for (std::size_t r = 0; r < f.matrix.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < f.matrix.cols(); ++c) row.push_back(to_json(f.matrix.at(r, c)));
    matrix.push_back(std::move(row));
  }
  out["matrix"] = std::move(matrix);
  return out;
}

json to_json(const DiagramStats& s, const Partition& shape, int m) {
  return {{"lambda", shape.parts()},
          {"m", m},
          {"f2", s.f2},
          {"specht_dim", s.specht_dim},
          {"d_plus", s.d_plus},
          {"transpose", s.transpose.parts()},
          {"m_profile", s.levels.sizes},
          {"config_dim", s.levels.config_dim},
          {"solution_degree", s.solution_degree}};
}

json to_json(const CheckReport& r) {
  json out = {{"check", r.check}, {"lambda", r.lambda}, {"m", r.m}, {"verdict", r.pass ? "pass" : "fail"}};
  if (r.pass) {
    out["witness"] = nullptr;
  } else {
    json w = {{"location", r.witness}};
    if (r.residual) w["residual"] = to_json(*r.residual);
    out["witness"] = std::move(w);
  }
  if (!r.detail.empty()) out["detail"] = r.detail;
  return out;
}

}  // namespace kzres
