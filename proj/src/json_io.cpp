#include "iet/json_io.hpp"

namespace iet {

CombinatorialData combo_from_json(const json& j) {
  std::vector<std::string> alphabet =
      j.at("alphabet").get<std::vector<std::string>>();
  const std::size_t d = alphabet.size();
  std::vector<int> pos0(d), pos1(d);
  for (std::size_t i = 0; i < d; ++i) {
    pos0[i] = j.at("pi0").at(alphabet[i]).get<int>() - 1;
    pos1[i] = j.at("pi1").at(alphabet[i]).get<int>() - 1;
  }
  return CombinatorialData(std::move(alphabet), std::move(pos0),
                           std::move(pos1));
}

json combo_to_json(const CombinatorialData& c) {
  json j;
  j["alphabet"] = c.alphabet();
  json p0, p1;
  for (std::size_t i = 0; i < c.dim(); ++i) {
    p0[c.symbol(static_cast<int>(i))] = c.pos(0, static_cast<int>(i)) + 1;
    p1[c.symbol(static_cast<int>(i))] = c.pos(1, static_cast<int>(i)) + 1;
  }
  j["pi0"] = p0;
  j["pi1"] = p1;
  return j;
}

Iem iem_from_json(const json& j) {
  CombinatorialData c = combo_from_json(j);
  std::vector<Rational> lens(c.dim());
  for (std::size_t i = 0; i < c.dim(); ++i)
    lens[i] = parse_rational(
        j.at("lengths").at(c.symbol(static_cast<int>(i))).get<std::string>());
  bool indep = j.value("rationally_independent", false);
  return Iem(std::move(c), std::move(lens), indep);
}

json iem_to_json(const Iem& t) {
  json j = combo_to_json(t.combo());
  json lens;
  for (std::size_t i = 0; i < t.dim(); ++i)
    lens[t.combo().symbol(static_cast<int>(i))] =
        to_string(t.length(static_cast<int>(i)));
  j["lengths"] = lens;
  return j;
}

std::vector<Rational> tau_from_json(const json& j,
                                    const CombinatorialData& c) {
  std::vector<Rational> tau(c.dim());
  for (std::size_t i = 0; i < c.dim(); ++i)
    tau[i] =
        parse_rational(j.at(c.symbol(static_cast<int>(i))).get<std::string>());
  return tau;
}

PiecewiseFunc phi_from_json(const json& j, const Iem& t) {
  Layout lay = Layout::of(t);
  PiecewiseFunc f(lay);
  for (std::size_t id = 0; id < lay.dim(); ++id) {
    const std::string& sym = t.combo().symbol(static_cast<int>(id));
    const Rational& left = lay.left[id];
    for (const auto& pj : j.at(sym)) {
      Rational from = parse_rational(pj.at("from").get<std::string>());
      Rational to = parse_rational(pj.at("to").get<std::string>());
      std::vector<Rational> local;
      for (const auto& cj : pj.at("poly"))
        local.push_back(parse_rational(cj.get<std::string>()));
      // rebase from interval-local u = x - left to the absolute coordinate
      Poly p(std::move(local));
      f.append(static_cast<int>(id),
               Piece{left + from, left + to, p.shifted(-left)});
    }
  }
  f.check_tiling();
  return f;
}

json diagram_to_json(const RauzyDiagram& dia) {
  json j;
  json verts = json::array();
  for (const auto& v : dia.vertices) verts.push_back(v.rows_string());
  j["vertices"] = verts;
  json arrows = json::array();
  for (const auto& a : dia.arrows) {
    const auto& src = dia.vertices[a.src];
    arrows.push_back({{"src", a.src},
                      {"dst", a.dst},
                      {"type", a.type},
                      {"name", src.symbol(a.winner)},
                      {"secondary", src.symbol(a.loser)}});
  }
  j["arrows"] = arrows;
  return j;
}

json reduced_to_json(const ReducedDiagram& red) {
  json j;
  json verts = json::array();
  for (const auto& key : red.vertices) {
    json k = json::array();
    for (int p : key) k.push_back(p + 1);
    verts.push_back(k);
  }
  j["vertices"] = verts;
  json arrows = json::array();
  for (const auto& a : red.arrows)
    arrows.push_back({{"src", a.src}, {"dst", a.dst}, {"type", a.type}});
  j["arrows"] = arrows;
  return j;
}

json roth_to_json(const RothReport& rep) {
  json j;
  j["a"] = {{"ratio", rep.a.ratio},
            {"tail_sup", rep.a.tail_sup},
            {"consistent", rep.a.consistent}};
  j["theta"] = {{"theta_hat", rep.b.theta_hat},
                {"tail_inf", rep.b.tail_inf},
                {"consistent", rep.b.consistent}};
  json rows = json::array();
  for (const auto& r : rep.c.rows)
    rows.push_back({{"k", r.k},
                    {"l", r.l},
                    {"log_inv_quotient", r.log_inv_quotient},
                    {"log_restricted", r.log_restricted},
                    {"log_q", r.log_q},
                    {"ill_conditioned", r.ill_conditioned}});
  j["c"] = {{"rows", rows},
            {"exp_inv_quotient", rep.c.exp_inv_quotient},
            {"exp_restricted", rep.c.exp_restricted},
            {"consistent", rep.c.consistent}};
  j["verdicts"] = {{"a", rep.a.consistent},
                   {"b", rep.b.consistent},
                   {"c", rep.c.consistent}};
  j["stable"] = {{"dimension", rep.stable.basis.cols()},
                 {"level", rep.stable.level},
                 {"delta_angle", rep.stable.delta_angle},
                 {"log_singular", rep.stable.log_singular}};
  if (!rep.balance_ratio.empty()) j["balance_ratio"] = rep.balance_ratio;
  return j;
}

json solve_to_json(const SolveReport& rep) {
  json j;
  j["chi"] = rep.chi;
  j["chi_uncertainty"] = rep.chi_uncertainty;
  j["term_norms"] = rep.term_norms;
  j["decay"] = rep.decay;
  j["decay_raw"] = rep.decay_raw;
  j["log_q"] = rep.log_q;
  j["omega_hat"] = rep.omega_hat;
  j["sup_bound"] = rep.sup_bound;
  j["base_point"] = to_string(rep.base_point);
  j["chi_minmax"] = rep.chi_minmax;
  j["cross_distance"] = rep.cross_distance;
  j["ill_conditioned"] = rep.ill_conditioned;
  j["depth_used"] = rep.depth_used;
  json psi = json::array();
  for (auto [n, v] : rep.psi) psi.push_back({{"n", n}, {"psi", v}});
  j["psi"] = psi;
  return j;
}

json surface_to_json(const SurfaceSummary& s) {
  return json{{"d", s.d},
              {"genus", s.genus},
              {"nu", s.nu},
              {"singularities", s.singularity_orders},
              {"cycle_half_lengths", s.cycle_half_lengths}};
}

json matrix_to_json(const IMat& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.dim(); ++k) row.push_back(to_string(m(i, k)));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace iet
