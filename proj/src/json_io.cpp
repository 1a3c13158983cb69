#include "scnr/json_io.hpp"

#include "scnr/error.hpp"

namespace scnr {

namespace {

int require_int(const Json& j, const char* key, const std::string& context) {
  if (!j.is_object() || !j.contains(key)) {
    throw InputError(context + ": missing \"" + std::string(key) + "\"");
  }
  const Json& v = j.at(key);
  if (!v.is_number_integer()) {
    throw InputError(context + ": \"" + std::string(key) + "\" must be an integer");
  }
  return v.get<int>();
}

mpz_class parse_integer(const Json& v, const std::string& context) {
  if (v.is_number_integer()) return mpz_class(v.dump());
  if (v.is_string()) {
    mpz_class out;
    const auto& s = v.get_ref<const std::string&>();
    if (s.empty() || out.set_str(s, 10) != 0) {
      throw InputError(context + ": \"" + s + "\" is not a decimal integer");
    }
    return out;
  }
  throw InputError(context + ": expected a decimal string");
}

}  // namespace

Json coefficient_strings(const std::vector<mpz_class>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(v.get_str());
  return out;
}

Json to_json(const Digraph& g) {
  Json arcs = Json::array();
  for (const Arc& a : g.arcs()) arcs.push_back({a.from, a.to});
  return Json{{"n", g.order()}, {"arcs", std::move(arcs)}};
}

Digraph parse_digraph(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  return digraph_from_json(j);
}

Digraph digraph_from_json(const Json& j) {
  const int n = require_int(j, "n", "digraph");
  if (!j.contains("arcs") || !j.at("arcs").is_array()) {
    throw InputError("digraph: \"arcs\" must be an array");
  }
  std::vector<Arc> arcs;
  const Json& list = j.at("arcs");
  for (std::size_t i = 0; i < list.size(); ++i) {
    const Json& a = list[i];
    if (!a.is_array() || a.size() != 2 || !a[0].is_number_integer() || !a[1].is_number_integer()) {
      throw InputError("arc #" + std::to_string(i) + " must be a pair [u, v] of integers, got " +
                       a.dump());
    }
    arcs.push_back({a[0].get<int>(), a[1].get<int>()});
  }
  return Digraph(n, std::move(arcs));
}

Json to_json(const ReliabilityPolynomial& rp) {
  return Json{{"n", rp.order()}, {"F", coefficient_strings(rp.f_form())}};
}

ReliabilityPolynomial polynomial_from_json(const Json& j) {
  const int n = require_int(j, "n", "polynomial");
  if (!j.contains("F") || !j.at("F").is_array()) {
    throw InputError("polynomial: \"F\" must be an array");
  }
  std::vector<mpz_class> f;
  const Json& list = j.at("F");
  for (std::size_t i = 0; i < list.size(); ++i) {
    f.push_back(parse_integer(list[i], "F_" + std::to_string(i)));
  }
  return ReliabilityPolynomial(n, std::move(f));
}

Json to_json(const CirculantSpec& spec) {
  return Json{{"n", spec.order()}, {"S", {spec.a(), spec.b()}}};
}

CirculantSpec circulant_from_json(const Json& j) {
  const int n = require_int(j, "n", "circulant");
  if (!j.contains("S") || !j.at("S").is_array() || j.at("S").size() != 2 ||
      !j.at("S")[0].is_number_integer() || !j.at("S")[1].is_number_integer()) {
    throw InputError("circulant: \"S\" must be a pair [a, b] of integers");
  }
  return CirculantSpec(n, j.at("S")[0].get<int>(), j.at("S")[1].get<int>());
}

Json to_json(const RootInterval& r) {
  return Json{{"lo", rational_string(r.lo)}, {"hi", rational_string(r.hi)},
              {"sign_change", r.sign_change}};
}

Json to_json(const SignProfile& profile) {
  Json roots = Json::array();
  for (const auto& r : profile.roots) roots.push_back(to_json(r));
  return Json{{"status", to_string(profile.status)},
              {"sign_changes", profile.sign_changes()},
              {"roots", std::move(roots)}};
}

Json to_json(const ComparisonVerdict& v) {
  auto index = [](const std::optional<int>& i) { return i ? Json(*i) : Json(nullptr); };
  return Json{{"near_zero", to_string(v.near_zero)},
              {"near_one", to_string(v.near_one)},
              {"first_divergence", {{"N", index(v.near_zero_index)}, {"F", index(v.near_one_index)}}},
              {"dominance", to_json(v.dominance)}};
}

Json to_json(const SearchReport& report) {
  Json members = Json::array();
  for (const auto& m : report.members) {
    members.push_back({{"label", m.label}, {"F", coefficient_strings(m.poly.f_form())}});
  }
  auto labels = [&](const std::vector<std::size_t>& idx) {
    Json out = Json::array();
    for (std::size_t i : idx) out.push_back(report.members[i].label);
    return out;
  };
  Json out{{"family", report.family},
           {"n", report.order},
           {"members", std::move(members)},
           {"near_zero_ranking", labels(report.near_zero_ranking)},
           {"near_one_ranking", labels(report.near_one_ranking)}};
  if (report.winners.empty()) {
    out["winner"] = "none";
  } else {
    out["winner"] = labels(report.winners);
  }
  if (report.witness) {
    const auto& w = *report.witness;
    Json crossings = Json::array();
    for (const auto& r : w.crossings) crossings.push_back(to_json(r));
    out["witness"] = {{"first", report.members[w.first].label},
                      {"second", report.members[w.second].label},
                      {"status", to_string(w.status)},
                      {"crossings", std::move(crossings)}};
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

Json to_json(const VerificationReport& report) {
  Json claims = Json::array();
  for (const auto& c : report.claims) {
    claims.push_back({{"claim", c.claim},
                      {"n", c.order},
                      {"status", to_string(c.status)},
                      {"detail", c.detail},
                      {"differences_checked", c.differences_checked},
                      {"sampling_disagreements", c.sampling_disagreements}});
  }
  return Json{{"orders", report.orders},
              {"all_passed", report.all_passed()},
              {"claims", std::move(claims)}};
}

Json to_json(const McEstimate& e) {
  return Json{{"kind", "estimate"},  {"p", e.p},
              {"samples", e.samples}, {"hits", e.hits},
              {"estimate", e.estimate}, {"std_error", e.std_error},
              {"seed", e.seed}};
}

}  // namespace scnr
