#include "scnr/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "scnr/circulant.hpp"
#include "scnr/error.hpp"
#include "scnr/families.hpp"
#include "scnr/json_io.hpp"
#include "scnr/optimality.hpp"

namespace scnr {

namespace {

enum class Format { json, csv, text };

struct Common {
  std::string format = "text";
  int workers = 0;
};

Format format_of(const Common& c) {
  if (c.format == "json") return Format::json;
  if (c.format == "csv") return Format::csv;
  return Format::text;
}

EngineOptions engine_options(const Common& c) {
  EngineOptions options;
  options.workers = c.workers;
  if (const char* env = std::getenv("SCNR_MAX_N"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (*end != '\0' || cap < 1) {
      throw InputError("SCNR_MAX_N must be a positive integer, got \"" + std::string(env) + "\"");
    }
    options.max_order = static_cast<int>(std::min<long>(cap, kMaxExactOrder));
  }
  return options;
}

void add_common(CLI::App* app, Common& c) {
  app->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app->add_option("--workers", c.workers, "Worker threads (0: all cores)")
      ->check(CLI::NonNegativeNumber);
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Digraph load_digraph(const std::string& path) {
  try {
    return parse_digraph(read_input(path));
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string join(const std::vector<mpz_class>& v, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += v[i].get_str();
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string interval_text(const RootInterval& r) {
  return "(" + rational_string(r.lo) + ", " + rational_string(r.hi) + ")";
}

// compute ------------------------------------------------------------------

struct ComputeArgs {
  Common common;
  std::string input;
  std::string eval;
  bool nform = false;
  bool power = false;
};

int cmd_compute(const ComputeArgs& a, std::ostream& out, std::ostream& err) {
  const Digraph g = load_digraph(a.input);
  std::optional<mpq_class> p;
  if (!a.eval.empty()) {
    p = parse_rational(a.eval);
    if (!p || *p < 0 || *p > 1) throw InputError("--eval expects a rational in [0, 1]");
  }
  const ReliabilityPolynomial rp = exact_scnr(g, engine_options(a.common));
  if (rp.F(0) == 0) {
    err << "warning: input is not strongly connected (F_0 = 0)\n";
  }
  const PowerPoly power = to_power_basis(rp);
  const auto n_form = rp.n_form();
  std::optional<mpq_class> value;
  if (p) value = evaluate(rp, *p);

  switch (format_of(a.common)) {
    case Format::json: {
      Json j = to_json(rp);
      if (a.nform) j["N"] = coefficient_strings(n_form);
      if (a.power) {
        std::vector<mpz_class> c(rp.order() + 1, 0);
        for (int i = 0; i <= rp.order(); ++i) c[i] = power.coeff(i);
        j["power"] = coefficient_strings(c);
      }
      if (value) j["eval"] = {{"p", rational_string(*p)}, {"value", rational_string(*value)}};
      out << j.dump() << "\n";
      break;
    }
    case Format::csv: {
      out << "i,F" << (a.nform ? ",N" : "") << (a.power ? ",power" : "") << "\n";
      for (int i = 0; i <= rp.order(); ++i) {
        out << i << "," << rp.F(i).get_str();
        if (a.nform) out << "," << n_form[i].get_str();
        if (a.power) out << "," << power.coeff(i).get_str();
        out << "\n";
      }
      if (value) out << "\np,value\n" << rational_string(*p) << "," << rational_string(*value) << "\n";
      break;
    }
    case Format::text: {
      out << "n = " << rp.order() << "\n";
      out << "F = " << join(rp.f_form(), " ") << "\n";
      if (a.nform) out << "N = " << join(n_form, " ") << "\n";
      if (a.power) out << "Rel(p) = " << power.to_string() << "\n";
      if (value) out << "Rel(" << rational_string(*p) << ") = " << rational_string(*value) << "\n";
      break;
    }
  }
  return kExitOk;
}

// family -------------------------------------------------------------------

struct FamilyArgs {
  Common common;
  std::string type;
  int n = 0;
  int k = 0;
  std::vector<int> s;
};

Digraph build_family(const FamilyArgs& a) {
  auto need_k = [&] {
    if (a.k == 0) throw InputError("--type " + a.type + " needs --k");
  };
  if (a.type == "cycle") return families::directed_cycle(a.n);
  if (a.type == "star") return families::bundled_star(a.n);
  if (a.type == "star-plus-arc") return families::star_plus_arc(a.n);
  if (a.type == "g") {
    need_k();
    return families::g_family(a.n, a.k);
  }
  if (a.type == "h") {
    need_k();
    return families::h_family(a.n, a.k);
  }
  if (a.type == "circulant") {
    if (a.s.size() != 2) throw InputError("--type circulant needs --s a,b");
    return CirculantSpec(a.n, a.s[0], a.s[1]).to_digraph();
  }
  throw InputError("unknown family " + a.type);
}

int cmd_family(const FamilyArgs& a, std::ostream& out) {
  const Digraph g = build_family(a);
  switch (format_of(a.common)) {
    case Format::json:
      out << to_json(g).dump() << "\n";
      break;
    case Format::csv:
      out << "from,to\n";
      for (const Arc& arc : g.arcs()) out << arc.from << "," << arc.to << "\n";
      break;
    case Format::text:
      out << "n = " << g.order() << ", " << g.size() << " arcs, " << count_bundles(g)
          << " bundles\n";
      for (const Arc& arc : g.arcs()) out << arc.from << " -> " << arc.to << "\n";
      break;
  }
  return kExitOk;
}

// compare ------------------------------------------------------------------

struct CompareArgs {
  Common common;
  std::string first;
  std::string second;
};

int cmd_compare(const CompareArgs& a, std::ostream& out) {
  const Digraph g = load_digraph(a.first);
  const Digraph h = load_digraph(a.second);
  if (g.order() != h.order()) {
    throw InputError("cannot compare digraphs of order " + std::to_string(g.order()) + " and " +
                     std::to_string(h.order()));
  }
  const EngineOptions options = engine_options(a.common);
  const auto pg = exact_scnr(g, options);
  const auto ph = exact_scnr(h, options);
  const ComparisonVerdict v = compare(pg, ph);
  auto index = [](const std::optional<int>& i) { return i ? std::to_string(*i) : std::string("-"); };

  switch (format_of(a.common)) {
    case Format::json: {
      Json j{{"G", to_json(pg)}, {"H", to_json(ph)}, {"verdict", to_json(v)}};
      out << j.dump() << "\n";
      break;
    }
    case Format::csv:
      out << "field,value\n";
      out << "F_G," << csv_field(join(pg.f_form(), " ")) << "\n";
      out << "F_H," << csv_field(join(ph.f_form(), " ")) << "\n";
      out << "near_zero," << to_string(v.near_zero) << "\n";
      out << "near_one," << to_string(v.near_one) << "\n";
      out << "divergence_N," << index(v.near_zero_index) << "\n";
      out << "divergence_F," << index(v.near_one_index) << "\n";
      out << "dominance," << to_string(v.dominance.status) << "\n";
      out << "\nroot_lo,root_hi,sign_change\n";
      for (const auto& r : v.dominance.roots) {
        out << rational_string(r.lo) << "," << rational_string(r.hi) << ","
            << (r.sign_change ? "true" : "false") << "\n";
      }
      break;
    case Format::text:
      out << "F(G) = " << join(pg.f_form(), " ") << "\n";
      out << "F(H) = " << join(ph.f_form(), " ") << "\n";
      out << "near 0: " << to_string(v.near_zero) << " (N index " << index(v.near_zero_index)
          << ")\n";
      out << "near 1: " << to_string(v.near_one) << " (F index " << index(v.near_one_index)
          << ")\n";
      out << "Rel(G) - Rel(H) on (0,1): " << to_string(v.dominance.status) << "\n";
      for (const auto& r : v.dominance.roots) {
        out << "  root in " << interval_text(r) << (r.sign_change ? " (crossing)" : " (touch)")
            << "\n";
      }
      break;
  }
  return kExitOk;
}

// search -------------------------------------------------------------------

struct SearchArgs {
  Common common;
  std::string family = "circulant";
  int n = 0;
};

int cmd_search(const SearchArgs& a, std::ostream& out) {
  const SearchReport report = search_circulants(a.n, engine_options(a.common));
  switch (format_of(a.common)) {
    case Format::json:
      out << to_json(report).dump() << "\n";
      break;
    case Format::csv: {
      out << "label";
      for (int i = 0; i <= report.order; ++i) out << ",F_" << i;
      out << ",near_zero_rank,near_one_rank\n";
      for (std::size_t m = 0; m < report.members.size(); ++m) {
        const auto rank = [&](const std::vector<std::size_t>& r) {
          return std::find(r.begin(), r.end(), m) - r.begin() + 1;
        };
        out << csv_field(report.members[m].label) << ","
            << join(report.members[m].poly.f_form(), ",") << ","
            << rank(report.near_zero_ranking) << "," << rank(report.near_one_ranking) << "\n";
      }
      break;
    }
    case Format::text: {
      out << "circulant classes of order " << report.order << ": " << report.members.size()
          << "\n";
      for (const auto& m : report.members) {
        out << "  " << m.label << "  F = " << join(m.poly.f_form(), " ") << "\n";
      }
      out << "near 0 leader: " << report.members[report.near_zero_ranking.front()].label << "\n";
      out << "near 1 leader: " << report.members[report.near_one_ranking.front()].label << "\n";
      if (report.winners.empty()) {
        out << "winner: none\n";
      } else {
        out << "winner:";
        for (std::size_t w : report.winners) out << " " << report.members[w].label;
        out << "\n";
      }
      if (report.witness) {
        const auto& w = *report.witness;
        out << "witness: " << report.members[w.first].label << " vs "
            << report.members[w.second].label << " (" << to_string(w.status) << ")\n";
        for (const auto& r : w.crossings) out << "  crossing in " << interval_text(r) << "\n";
      }
      break;
    }
  }
  return kExitOk;
}

// verify -------------------------------------------------------------------

struct VerifyArgs {
  Common common;
  std::string orders;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out, const CliHooks& hooks) {
  VerifyOptions options;
  options.engine = engine_options(a.common);
  options.tamper = hooks.tamper;
  const std::vector<int> orders =
      a.orders.empty() ? default_verification_orders() : parse_order_list(a.orders);
  const VerificationReport report = run_verification_suite(orders, options);

  switch (format_of(a.common)) {
    case Format::json:
      out << to_json(report).dump() << "\n";
      break;
    case Format::csv:
      out << "claim,n,status,differences_checked,sampling_disagreements,detail\n";
      for (const auto& c : report.claims) {
        out << c.claim << "," << c.order << "," << to_string(c.status) << ","
            << c.differences_checked << "," << c.sampling_disagreements << ","
            << csv_field(c.detail) << "\n";
      }
      break;
    case Format::text: {
      int passed = 0, failed = 0, skipped = 0;
      for (const auto& c : report.claims) {
        out << (c.status == ClaimStatus::pass     ? "PASS "
                : c.status == ClaimStatus::fail   ? "FAIL "
                                                  : "SKIP ")
            << c.claim << " n=" << c.order << ": " << c.detail << "\n";
        passed += c.status == ClaimStatus::pass;
        failed += c.status == ClaimStatus::fail;
        skipped += c.status == ClaimStatus::skipped;
      }
      out << passed << " passed, " << failed << " failed, " << skipped << " skipped\n";
      break;
    }
  }
  return report.all_passed() ? kExitOk : kExitClaimFailed;
}

// mc -----------------------------------------------------------------------

struct McArgs {
  Common common;
  std::string input;
  std::string eval;
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 1;
};

int cmd_mc(const McArgs& a, std::ostream& out) {
  const Digraph g = load_digraph(a.input);
  const auto p = parse_rational(a.eval);
  if (!p || *p < 0 || *p > 1) throw InputError("--eval expects a probability in [0, 1]");
  const McEstimate e = mc_scnr(g, p->get_d(), a.samples, a.seed, engine_options(a.common));
  switch (format_of(a.common)) {
    case Format::json:
      out << to_json(e).dump() << "\n";
      break;
    case Format::csv:
      out << "kind,p,samples,hits,estimate,std_error,seed\n";
      out << "estimate," << e.p << "," << e.samples << "," << e.hits << "," << e.estimate << ","
          << e.std_error << "," << e.seed << "\n";
      break;
    case Format::text:
      out << "Rel(" << e.p << ") ~ " << e.estimate << " +/- " << e.std_error << " (estimate, "
          << e.samples << " samples, seed " << e.seed << ")\n";
      break;
  }
  return kExitOk;
}

}  // namespace

std::vector<int> parse_order_list(const std::string& text) {
  std::vector<int> orders;
  auto to_int = [&](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) throw InputError("bad order \"" + s + "\" in " + text);
    return v;
  };
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (const auto dots = part.find(".."); dots != std::string::npos) {
      const int lo = to_int(part.substr(0, dots));
      const int hi = to_int(part.substr(dots + 2));
      if (lo > hi) throw InputError("empty range " + part);
      for (int n = lo; n <= hi; ++n) orders.push_back(n);
    } else {
      orders.push_back(to_int(part));
    }
  }
  if (orders.empty()) throw InputError("no orders given");
  return orders;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const CliHooks& hooks) {
  CLI::App app{"Exact strongly connected node reliability of digraphs", "scnr"};
  app.require_subcommand(1);

  ComputeArgs compute;
  auto* c = app.add_subcommand("compute", "Exact reliability polynomial of a digraph file");
  add_common(c, compute.common);
  c->add_option("graph", compute.input, "Digraph JSON file, or - for stdin")->required();
  c->add_option("--eval", compute.eval, "Evaluate at a rational p, e.g. 1/2");
  c->add_flag("--nform", compute.nform, "Also emit N_i = F_(n-i)");
  c->add_flag("--power", compute.power, "Also emit power-basis coefficients");

  FamilyArgs family;
  auto* f = app.add_subcommand("family", "Emit a built-in digraph as JSON");
  add_common(f, family.common);
  family.common.format = "json";
  f->add_option("--type", family.type, "cycle, star, star-plus-arc, g, h or circulant")
      ->required()
      ->check(CLI::IsMember({"cycle", "star", "star-plus-arc", "g", "h", "circulant"}));
  f->add_option("--n", family.n, "Vertex count")->required();
  f->add_option("--k", family.k, "Cycle length for g and h");
  f->add_option("--s", family.s, "Connection set a,b")->delimiter(',')->expected(2);

  CompareArgs cmp;
  auto* k = app.add_subcommand("compare", "Compare two digraphs near 0, near 1 and on (0,1)");
  add_common(k, cmp.common);
  k->add_option("first", cmp.first, "Digraph G")->required();
  k->add_option("second", cmp.second, "Digraph H")->required();

  SearchArgs search;
  auto* s = app.add_subcommand("search", "Tournament over every connected circulant class");
  add_common(s, search.common);
  s->add_option("--n", search.n, "Order, 4..25")->required()->check(CLI::Range(4, 25));
  s->add_option("--family", search.family, "Family to search")->check(CLI::IsMember({"circulant"}));

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Run the verification claims");
  add_common(v, verify.common);
  v->add_option("--n", verify.orders, "Orders, e.g. 5..15,21");

  McArgs mc;
  auto* m = app.add_subcommand("mc", "Monte Carlo estimate of Rel(G, p)");
  add_common(m, mc.common);
  m->add_option("graph", mc.input, "Digraph JSON file, or - for stdin")->required();
  m->add_option("--eval", mc.eval, "Probability p")->required();
  m->add_option("--samples", mc.samples, "Sample count")->check(CLI::PositiveNumber);
  m->add_option("--seed", mc.seed, "Seed");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  }

  try {
    if (c->parsed()) return cmd_compute(compute, out, err);
    if (f->parsed()) return cmd_family(family, out);
    if (k->parsed()) return cmd_compare(cmp, out);
    if (s->parsed()) return cmd_search(search, out);
    if (v->parsed()) return cmd_verify(verify, out, hooks);
    if (m->parsed()) return cmd_mc(mc, out);
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitBadInput;
}

}  // namespace scnr
