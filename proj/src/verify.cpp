#include "scnr/verify.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "scnr/circulant.hpp"
#include "scnr/combinations.hpp"
#include "scnr/error.hpp"
#include "scnr/families.hpp"
#include "scnr/optimality.hpp"

namespace scnr {

const char* to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::pass: return "pass";
    case ClaimStatus::fail: return "fail";
    case ClaimStatus::skipped: return "skipped";
  }
  return "?";
}

bool VerificationReport::all_passed() const {
  return std::none_of(claims.begin(), claims.end(),
                      [](const ClaimResult& c) { return c.status == ClaimStatus::fail; });
}

std::vector<int> default_verification_orders() {
  std::vector<int> orders;
  for (int n = 5; n <= 15; ++n) orders.push_back(n);
  orders.push_back(21);
  return orders;
}

namespace {

std::string join(const std::vector<mpz_class>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += v[i].get_str();
  }
  return out + "]";
}

/// Accumulates sub-check failures for one claim.
class Claim {
 public:
  Claim(std::string name, int n, const VerifyOptions& options)
      : options_(options) {
    result_.claim = std::move(name);
    result_.order = n;
  }

  const std::string& name() const { return result_.claim; }
  int order() const { return result_.order; }

  void expect(bool ok, const std::string& failure) {
    if (ok) return;
    result_.status = ClaimStatus::fail;
    failures_.push_back(failure);
  }
  void note(const std::string& text) { notes_.push_back(text); }

  std::vector<mpz_class> tampered(std::vector<mpz_class> f) const {
    if (options_.tamper) options_.tamper(result_.claim, result_.order, f);
    return f;
  }

  bool full_allowed() const {
    return result_.order <= std::min(options_.full_enumeration_limit, exact_capacity(options_.engine));
  }

  ReliabilityPolynomial full(const Digraph& g) const {
    const auto rp = exact_scnr(g, options_.engine);
    if (!options_.tamper) return rp;
    return ReliabilityPolynomial(g.order(), tampered(rp.f_form()));
  }

  std::vector<mpz_class> low(const Digraph& g, int max_failures) const {
    return tampered(low_order_coefficients(g, max_failures, options_.engine));
  }

  /// Sturm count against 10,001-point sampling.
  void cross_check(const PowerPoly& d, const SignProfile& profile, const std::string& what) {
    ++result_.differences_checked;
    const int sampled = sampled_sign_changes(d);
    if (sampled != profile.sign_changes()) {
      ++result_.sampling_disagreements;
      expect(false, what + ": Sturm count " + std::to_string(profile.sign_changes()) +
                        " vs sampled " + std::to_string(sampled));
    }
  }

  ClaimResult finish() {
    std::string detail;
    const auto& parts = failures_.empty() ? notes_ : failures_;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) detail += "; ";
      detail += parts[i];
    }
    result_.detail = std::move(detail);
    return std::move(result_);
  }

  ClaimResult skip(const std::string& why) {
    result_.status = ClaimStatus::skipped;
    result_.detail = why;
    return std::move(result_);
  }

  ClaimResult full_limit_skip() {
    return skip("n=" + std::to_string(result_.order) + " exceeds the full-enumeration limit " +
                std::to_string(std::min(options_.full_enumeration_limit,
                                        exact_capacity(options_.engine))));
  }

 private:
  const VerifyOptions& options_;
  ClaimResult result_;
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

template <class Body>
ClaimResult guarded(Claim& claim, Body&& body) {
  try {
    return body();
  } catch (const CapacityError& e) {
    return claim.skip(e.what());
  } catch (const std::exception& e) {
    claim.expect(false, std::string("error: ") + e.what());
    return claim.finish();
  }
}

PowerPoly one_minus_p_pow(int e) {
  std::vector<mpz_class> c(e + 1);
  for (int j = 0; j <= e; ++j) c[j] = (j % 2 ? -1 : 1) * binomial(e, j);
  return PowerPoly(std::move(c));
}

const PowerPoly kP(std::vector<mpz_class>{0, 1});
const PowerPoly kOneMinusP(std::vector<mpz_class>{1, -1});

/// Serial F-vector for tiny digraphs given as masks.
std::vector<std::uint64_t> small_f_counts(int n, std::span<const std::uint64_t> out,
                                          std::span<const std::uint64_t> in) {
  std::vector<std::uint64_t> counts(n + 1, 0);
  for (std::uint64_t alive = 1; alive < (std::uint64_t{1} << n); ++alive) {
    if (induces_strongly_connected(out, in, alive)) ++counts[n - std::popcount(alive)];
  }
  return counts;
}

struct ClassCoefficients {
  std::string label;
  std::vector<mpz_class> f;
};

std::vector<ClassCoefficients> class_coefficients(const Claim& claim, int n, int max_failures) {
  std::vector<ClassCoefficients> out;
  for (const auto& cls : enumerate_circulants(n)) {
    out.push_back({cls.canonical.label(), claim.low(cls.canonical.to_digraph(), max_failures)});
  }
  return out;
}

}  // namespace

ClaimResult check_directed_cycle_formula(int n, const VerifyOptions& options) {
  Claim claim("directed-cycle-formula", n, options);
  return guarded(claim, [&] {
    if (!claim.full_allowed()) return claim.full_limit_skip();
    const auto f = claim.full(families::directed_cycle(n)).f_form();
    std::vector<mpz_class> expected(n + 1, 0);
    expected[0] = 1;
    expected[n - 1] = n;
    claim.expect(f == expected, "F=" + join(f) + " expected " + join(expected));
    claim.note("F=" + join(f));
    return claim.finish();
  });
}

ClaimResult check_bundle_coefficient_families(int n, const VerifyOptions& options) {
  Claim claim("bundle-coefficient", n, options);
  return guarded(claim, [&] {
    if (!claim.full_allowed()) return claim.full_limit_skip();
    std::vector<std::pair<std::string, Digraph>> members;
    members.emplace_back("C_n", families::directed_cycle(n));
    members.emplace_back("S_n", families::bundled_star(n));
    if (n >= 3) {
      members.emplace_back("D_n", families::star_plus_arc(n));
      members.emplace_back("bundled-cycle", near_zero_optimal_spec(n).to_digraph());
    }
    if (n >= 4) {
      members.emplace_back("G_3", families::g_family(n, 3));
      members.emplace_back("H_3", families::h_family(n, 3));
      members.emplace_back("near-one", near_one_optimal_spec(n).to_digraph());
    }
    for (const auto& [name, g] : members) {
      const auto rp = claim.full(g);
      const mpz_class n2 = rp.n_form()[2];
      claim.expect(n2 == count_bundles(g), name + ": N_2=" + n2.get_str() + " but " +
                                               std::to_string(count_bundles(g)) + " bundles");
    }
    claim.note(std::to_string(members.size()) + " digraphs");
    return claim.finish();
  });
}

ClaimResult check_bundle_coefficient_random(int samples, int max_order, std::uint64_t seed,
                                            const VerifyOptions& options) {
  Claim claim("bundle-coefficient-random", max_order, options);
  return guarded(claim, [&] {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> order_dist(2, max_order);
    std::uniform_real_distribution<double> density_dist(0.15, 0.85);
    int accepted = 0;
    long long drawn = 0;
    while (accepted < samples) {
      ++drawn;
      const int n = order_dist(rng);
      const double density = density_dist(rng);
      std::bernoulli_distribution keep(density);
      std::vector<Arc> arcs;
      for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
          if (u != v && keep(rng)) arcs.push_back({u, v});
        }
      }
      const Digraph g(n, std::move(arcs));
      if (!is_strongly_connected(g)) continue;
      ++accepted;
      const auto rp = claim.full(g);
      const mpz_class n2 = n >= 2 ? rp.n_form()[2] : mpz_class(0);
      claim.expect(n2 == count_bundles(g), "sample " + std::to_string(accepted) + " (n=" +
                                               std::to_string(n) + "): N_2=" + n2.get_str() +
                                               " but " + std::to_string(count_bundles(g)) +
                                               " bundles");
    }
    claim.note(std::to_string(accepted) + " strongly connected samples from " +
               std::to_string(drawn) + " draws");
    return claim.finish();
  });
}

ClaimResult check_star_recursion(int n, const VerifyOptions& options) {
  Claim claim("star-recursion", n, options);
  return guarded(claim, [&] {
    if (!claim.full_allowed()) return claim.full_limit_skip();
    const PowerPoly star = to_power_basis(claim.full(families::bundled_star(n)));
    const PowerPoly smaller = to_power_basis(claim.full(families::bundled_star(n - 1)));
    const PowerPoly rhs =
        kOneMinusP * smaller + kP * (one_minus_p_pow(n - 1) + kP);
    claim.expect(star == rhs, "Rel(S_n) = " + star.to_string() + " but recursion gives " +
                                  rhs.to_string());
    claim.note("Rel(S_n) = " + star.to_string());
    return claim.finish();
  });
}

ClaimResult check_star_dominance(int n, const VerifyOptions& options) {
  Claim claim("star-dominance", n, options);
  return guarded(claim, [&] {
    if (n > 6) return claim.skip("exhaustive arc-set enumeration is limited to n <= 6");
    const auto star_poly = claim.full(families::bundled_star(n));
    const PowerPoly star = to_power_basis(star_poly);

    std::vector<Arc> slots;
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        if (u != v) slots.push_back({u, v});
      }
    }
    const int m = 2 * n - 2;
    std::set<std::vector<std::uint64_t>> distinct;
    long long strongly_connected = 0;
    std::vector<std::uint64_t> out(n), in(n);
    for_each_subset(static_cast<int>(slots.size()), m, [&](VertexSet chosen) {
      std::fill(out.begin(), out.end(), 0);
      std::fill(in.begin(), in.end(), 0);
      for (std::uint64_t rest = chosen.bits(); rest != 0; rest &= rest - 1) {
        const Arc a = slots[std::countr_zero(rest)];
        out[a.from] |= std::uint64_t{1} << a.to;
        in[a.to] |= std::uint64_t{1} << a.from;
      }
      if (!induces_strongly_connected(out, in, VertexSet::full(n).bits())) return;
      ++strongly_connected;
      distinct.insert(small_f_counts(n, out, in));
    });

    for (const auto& counts : distinct) {
      std::vector<mpz_class> f(counts.begin(), counts.end());
      const ReliabilityPolynomial other(n, std::move(f));
      const PowerPoly diff = star - to_power_basis(other);
      const SignProfile profile = sign_profile(diff);
      claim.cross_check(diff, profile, "F=" + join(other.f_form()));
      claim.expect(profile.non_negative(), "Rel(S_n) - Rel(G) is " +
                                               std::string(to_string(profile.status)) +
                                               " for F=" + join(other.f_form()));
    }
    claim.note(std::to_string(strongly_connected) + " strongly connected digraphs, " +
               std::to_string(distinct.size()) + " distinct polynomials, all dominated");
    return claim.finish();
  });
}

ClaimResult check_star_plus_arc(int n, const VerifyOptions& options) {
  Claim claim("star-plus-arc-redundant", n, options);
  return guarded(claim, [&] {
    if (!claim.full_allowed()) return claim.full_limit_skip();
    const auto d = claim.full(families::star_plus_arc(n));
    const auto s = claim.full(families::bundled_star(n));
    claim.expect(d == s, "F(D_n)=" + join(d.f_form()) + " but F(S_n)=" + join(s.f_form()));
    claim.note("F=" + join(s.f_form()));
    return claim.finish();
  });
}

ClaimResult check_sparse_nonexistence(int n, const VerifyOptions& options) {
  Claim claim("sparse-nonexistence", n, options);
  return guarded(claim, [&] {
    if (!claim.full_allowed()) return claim.full_limit_skip();
    std::ostringstream summary;
    for (int k = 3; k <= n - 1; ++k) {
      const std::string tag = "k=" + std::to_string(k);
      const auto g = claim.full(families::g_family(n, k));
      const auto h = claim.full(families::h_family(n, k));
      claim.expect(h.F(1) == n - k + 1, tag + ": F_1(H_k)=" + h.F(1).get_str());
      claim.expect(g.F(1) == n - k, tag + ": F_1(G_k)=" + g.F(1).get_str());
      const ComparisonVerdict v = compare(g, h);
      claim.expect(v.near_zero == Leader::first,
                   tag + ": near-0 leader is " + std::string(to_string(v.near_zero)));
      claim.expect(v.near_one == Leader::second,
                   tag + ": near-1 leader is " + std::string(to_string(v.near_one)));
      const int crossings = v.dominance.sign_changes();
      claim.expect(crossings >= 1, tag + ": no crossing in (0,1)");
      claim.cross_check(to_power_basis(g) - to_power_basis(h), v.dominance, tag);
      if (k > 3) summary << " ";
      summary << tag << ":N" << v.near_zero_index.value_or(-1) << "/F"
              << v.near_one_index.value_or(-1) << "/x" << crossings;
    }
    claim.note(summary.str());
    return claim.finish();
  });
}

ClaimResult check_even_circulant(int n, const VerifyOptions& options) {
  Claim claim("even-circulant", n, options);
  return guarded(claim, [&] {
    if (n % 2 != 0 || n < 4) return claim.skip("needs even n >= 4");
    const int k = n / 2;
    const CirculantSpec target = canonical_class(near_one_optimal_spec(n)).canonical;
    const auto classes = class_coefficients(claim, n, 2);
    const auto it = std::find_if(classes.begin(), classes.end(),
                                 [&](const auto& c) { return c.label == target.label(); });
    const auto& f = it->f;
    claim.expect(f[1] == n, "F_1=" + f[1].get_str() + " expected " + std::to_string(n));
    claim.expect(f[2] == k * (2 * k - 2),
                 "F_2=" + f[2].get_str() + " expected k(2k-2)=" + std::to_string(k * (2 * k - 2)));
    for (const auto& other : classes) {
      if (other.label == target.label()) continue;
      claim.expect(f[2] > other.f[2], "F_2=" + f[2].get_str() + " not above " + other.label +
                                          " (" + other.f[2].get_str() + ")");
    }
    claim.note(target.label() + " F_1=" + f[1].get_str() + " F_2=" + f[2].get_str() + " over " +
               std::to_string(classes.size()) + " classes");
    return claim.finish();
  });
}

ClaimResult check_odd_circulant(int n, const VerifyOptions& options) {
  Claim claim("odd-circulant", n, options);
  return guarded(claim, [&] {
    if (n % 2 == 0 || n < 5) return claim.skip("needs odd n >= 5");
    const CirculantSpec target = canonical_class(near_one_optimal_spec(n)).canonical;
    const auto classes = class_coefficients(claim, n, 5);
    const auto it = std::find_if(classes.begin(), classes.end(),
                                 [&](const auto& c) { return c.label == target.label(); });
    const auto& f = it->f;

    auto maximal = [&](int i, bool strict) {
      for (const auto& other : classes) {
        if (other.label == target.label()) continue;
        const bool ok = strict ? f[i] > other.f[i] : f[i] >= other.f[i];
        claim.expect(ok, "F_" + std::to_string(i) + "=" + f[i].get_str() + " not " +
                             (strict ? "strictly above " : "at least ") + other.label + " (" +
                             other.f[i].get_str() + ")");
      }
    };

    if (n % 3 != 0) {
      const mpz_class f2 = mpz_class(n) * (n - 3) / 2;
      const mpz_class f3 = binomial(n, 3) - mpz_class(n) * (n - 4);
      claim.expect(f[2] == f2, "F_2=" + f[2].get_str() + " expected n(n-3)/2=" + f2.get_str());
      claim.expect(f[3] == f3,
                   "F_3=" + f[3].get_str() + " expected C(n,3)-n(n-4)=" + f3.get_str());
      maximal(4, false);
    } else {
      for (int i = 1; i <= 4; ++i) maximal(i, false);
    }
    maximal(5, true);
    claim.note(target.label() + " F_0..F_5=" + join(f) + " over " +
               std::to_string(classes.size()) + " classes");
    return claim.finish();
  });
}

ClaimResult check_trivial_failure_lemma(int n, const VerifyOptions& options) {
  Claim claim("trivial-failure-lemma", n, options);
  return guarded(claim, [&] {
    if (n < 4) return claim.skip("needs n >= 4");
    const CirculantSpec spec = near_one_optimal_spec(n);
    const Digraph g = spec.to_digraph();
    const int max_failures = std::min(n % 2 == 0 ? 2 : 5, n - 2);
    const std::uint64_t all = g.vertices().bits();
    long long broken = 0;
    std::vector<std::string> counterexamples;
    for (int s = 1; s <= max_failures; ++s) {
      for_each_subset(n, s, [&](VertexSet failed) {
        if (induces_strongly_connected(g.out_masks(), g.in_masks(), all & ~failed.bits())) return;
        ++broken;
        if (has_trivial_failure(g, failed)) return;
        if (counterexamples.size() < 5) {
          std::string text = "{";
          for (int v : failed.members()) text += (text.size() > 1 ? "," : "") + std::to_string(v);
          counterexamples.push_back(text + "}");
        }
      });
    }
    for (const auto& c : counterexamples) {
      claim.expect(false, "failing " + c + " is not a trivial subdigraph of " + spec.label());
    }
    claim.note(spec.label() + ": " + std::to_string(broken) + " breaking sets of size <= " +
               std::to_string(max_failures) + ", all trivial");
    return claim.finish();
  });
}

ClaimResult check_no_optimal_circulant(int n, const VerifyOptions& options) {
  Claim claim("no-optimal-circulant", n, options);
  return guarded(claim, [&] {
    if (!claim.full_allowed()) return claim.full_limit_skip();
    std::vector<RankedMember> members;
    for (const auto& cls : enumerate_circulants(n)) {
      members.push_back({cls.canonical.label(), claim.full(cls.canonical.to_digraph())});
    }
    const std::string zero_label = canonical_class(near_zero_optimal_spec(n)).canonical.label();
    const std::string one_label = canonical_class(near_one_optimal_spec(n)).canonical.label();
    auto poly_of = [&](const std::string& label) -> const ReliabilityPolynomial& {
      return std::find_if(members.begin(), members.end(),
                          [&](const auto& m) { return m.label == label; })
          ->poly;
    };
    const ReliabilityPolynomial zero_poly = poly_of(zero_label);
    const ReliabilityPolynomial one_poly = poly_of(one_label);

    const SearchReport report = tournament("circulant", members, options.engine);
    const auto& zero_leader = report.members[report.near_zero_ranking.front()];
    const auto& one_leader = report.members[report.near_one_ranking.front()];

    if (!report.winners.empty()) {
      claim.expect(false, "tournament found a winner: " + report.members[report.winners.front()].label);
    }
    claim.expect(zero_leader.poly == zero_poly,
                 "near-0 leader is " + zero_leader.label + ", not " + zero_label);
    claim.expect(one_leader.poly == one_poly,
                 "near-1 leader is " + one_leader.label + ", not " + one_label);

    const PowerPoly diff = to_power_basis(zero_poly) - to_power_basis(one_poly);
    const SignProfile profile = sign_profile(diff);
    claim.cross_check(diff, profile, zero_label + " vs " + one_label);
    claim.expect(profile.sign_changes() >= 1,
                 "no crossing between " + zero_label + " and " + one_label);
    if (report.witness) {
      const auto& w = *report.witness;
      const PowerPoly wd = to_power_basis(report.members[w.first].poly) -
                           to_power_basis(report.members[w.second].poly);
      if (!(wd == diff)) claim.cross_check(wd, sign_profile(wd), "witness");
    }
    claim.note(std::to_string(members.size()) + " classes; near-0 " + zero_leader.label +
               ", near-1 " + one_leader.label + ", " + std::to_string(profile.sign_changes()) +
               " crossing(s)");
    return claim.finish();
  });
}

VerificationReport run_verification_suite(std::span<const int> orders, const VerifyOptions& options) {
  VerificationReport report;
  std::set<int> unique(orders.begin(), orders.end());
  report.orders.assign(unique.begin(), unique.end());
  for (int n : report.orders) {
    if (n < 2 || n > kMaxVertices) {
      ClaimResult bad;
      bad.claim = "order";
      bad.order = n;
      bad.status = ClaimStatus::skipped;
      bad.detail = "order outside 2..64";
      report.claims.push_back(std::move(bad));
      continue;
    }
    auto add = [&](ClaimResult r) { report.claims.push_back(std::move(r)); };
    add(check_directed_cycle_formula(n, options));
    if (n >= 3) {
      add(check_bundle_coefficient_families(n, options));
      add(check_star_recursion(n, options));
      add(check_star_plus_arc(n, options));
    }
    if (n >= 3 && n <= 5) add(check_star_dominance(n, options));
    if (n >= 5) add(check_sparse_nonexistence(n, options));
    if (n % 2 == 0 && n >= 6) add(check_even_circulant(n, options));
    if (n % 2 == 1 && n >= 7) add(check_odd_circulant(n, options));
    if (n >= 6) add(check_trivial_failure_lemma(n, options));
    if (n >= 5) add(check_no_optimal_circulant(n, options));
  }
  return report;
}

}  // namespace scnr
