#include "bps/report.hpp"

#include <sstream>

#include "json.hpp"

namespace bps {

namespace {

using nlohmann::json;

json report_to_json(const ChamberReport& r) {
  json syz = json::object();
  for (auto& [b, s] : r.syzord_by_b) syz[std::to_string(b)] = s;
  return json{{"chamber_id", r.chamber_id},
              {"representative", r.representative},
              {"r", r.r},
              {"mu", r.mu},
              {"syzord", std::move(syz)},
              {"conjecture_ok", r.conjecture_ok},
              {"poincare_X", r.poincare_x},
              {"betti_sum_E", r.betti_sum_e},
              {"pairing_perfect", r.pairing_perfect},
              {"millis", r.millis},
              {"error", r.error}};
}

ChamberReport report_from_json(const json& j) {
  ChamberReport r;
  r.chamber_id = j.at("chamber_id").get<std::string>();
  r.representative = j.at("representative").get<std::string>();
  r.r = j.at("r").get<int>();
  r.mu = j.at("mu").get<int>();
  for (auto& [key, val] : j.at("syzord").items())
    r.syzord_by_b[std::stoi(key)] = val.get<int>();
  r.conjecture_ok = j.at("conjecture_ok").get<bool>();
  r.poincare_x = j.at("poincare_X").get<std::string>();
  r.betti_sum_e = j.at("betti_sum_E").get<long long>();
  r.pairing_perfect = j.at("pairing_perfect").get<bool>();
  r.millis = j.at("millis").get<long long>();
  r.error = j.at("error").get<std::string>();
  return r;
}

json matrix_to_json(const GradedPresentation& p) {
  json entries = json::array();
  for (int i = 0; i < p.num_generators(); ++i) {
    json row = json::array();
    for (int j = 0; j < p.num_relations(); ++j)
      row.push_back(poly_str(presentation_entry(p, i, j)));
    entries.push_back(std::move(row));
  }
  return json{{"rows", p.num_generators()},
              {"cols", p.num_relations()},
              {"vars", p.ring.n},
              {"order",
               p.ring.order == MonoOrder::DegRevLex ? "degrevlex" : "lex"},
              {"row_degrees", p.target.shifts},
              {"col_degrees", p.rel_degrees},
              {"entries", std::move(entries)}};
}

int chamber_mu(const Chamber& c) {
  std::vector<Rational> entries;
  for (const Integer& e : c.representative) entries.emplace_back(e);
  return LengthVector(std::move(entries)).mu();
}

}  // namespace

std::string emit_report_json(const ChamberReport& rep) {
  return report_to_json(rep).dump(2);
}

ChamberReport parse_report_json(const std::string& text) {
  return report_from_json(json::parse(text));
}

std::string emit_reports_json(const std::vector<ChamberReport>& reps) {
  json arr = json::array();
  for (const ChamberReport& r : reps) arr.push_back(report_to_json(r));
  return arr.dump(2);
}

std::vector<ChamberReport> parse_reports_json(const std::string& text) {
  std::vector<ChamberReport> out;
  for (const json& j : json::parse(text)) out.push_back(report_from_json(j));
  return out;
}

std::string chamber_db_csv(const ChamberEnumeration& e, int r) {
  std::ostringstream os;
  os << "r,chamber_id,representative,num_short,mu\n";
  for (const Chamber& c : e.chambers)
    os << r << ',' << c.id() << ',' << '"' << c.representative_str() << '"'
       << ',' << c.short_family.size() << ',' << chamber_mu(c) << '\n';
  return os.str();
}

std::string chamber_db_json(const ChamberEnumeration& e, int r) {
  json arr = json::array();
  for (const Chamber& c : e.chambers) {
    json rep = json::array();
    for (const Integer& v : c.representative)
      rep.push_back(v.convert_to<long long>());
    arr.push_back(json{{"chamber_id", c.id()},
                       {"representative", std::move(rep)},
                       {"min_long", c.min_long},
                       {"short_family", c.short_family},
                       {"num_short", c.short_family.size()},
                       {"mu", chamber_mu(c)}});
  }
  return json{{"r", r},
              {"entry_bound", e.entry_bound},
              {"stabilized", e.stabilized},
              {"chambers", std::move(arr)}}
      .dump(2);
}

std::string matrix_json(const GradedPresentation& p) {
  return matrix_to_json(p).dump(2);
}

std::string resolution_json(const FreeResolution& res) {
  json mods = json::array();
  for (const FreeModule& f : res.modules) mods.push_back(f.shifts);
  json mats = json::array();
  for (std::size_t k = 0; k < res.mats.size(); ++k) {
    GradedPresentation step;
    step.ring = res.ring;
    step.target = res.modules[k];
    for (const Vec& c : res.mats[k]) {
      step.relations.push_back(c);
      step.rel_degrees.push_back(vec_degree_homog(c, res.modules[k]));
    }
    mats.push_back(matrix_to_json(step));
  }
  return json{{"length", res.length()},
              {"minimal", res.minimal},
              {"complete", res.complete},
              {"modules", std::move(mods)},
              {"matrices", std::move(mats)}}
      .dump(2);
}

std::string KoszulReport::text() const {
  std::ostringstream os;
  os << "K_" << k << " (r=" << r << ", b=" << b << ")\n"
     << "syzygy order: " << syzord << "\n"
     << "hilbert series: " << hilbert << "\n"
     << "betti table:\n"
     << betti.csv();
  return os.str();
}

std::string emit_koszul_json(const KoszulReport& rep) {
  json betti = json::array();
  for (std::size_t i = 0; i < rep.betti.ranks.size(); ++i)
    for (auto& [deg, rank] : rep.betti.ranks[i])
      betti.push_back(json{{"homological_degree", i},
                           {"internal_degree", deg},
                           {"rank", rank}});
  return json{{"r", rep.r},
              {"b", rep.b},
              {"k", rep.k},
              {"syzord", rep.syzord},
              {"hilbert", rep.hilbert},
              {"betti", std::move(betti)}}
      .dump(2);
}

}  // namespace bps
