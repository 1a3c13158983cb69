#include "scnr/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "scnr/error.hpp"

namespace scnr {

mpz_class binomial(int n, int k) {
  mpz_class out;
  if (k < 0 || k > n) return out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

ReliabilityPolynomial::ReliabilityPolynomial(int n, std::vector<mpz_class> f)
    : n_(n), f_(std::move(f)) {
  if (n < 1) throw InputError("polynomial order must be at least 1");
  if (f_.size() != static_cast<std::size_t>(n) + 1) {
    throw InputError("expected " + std::to_string(n + 1) + " F coefficients, got " +
                     std::to_string(f_.size()));
  }
  for (int i = 0; i <= n; ++i) {
    if (f_[i] < 0 || f_[i] > binomial(n, i)) {
      throw InputError("F_" + std::to_string(i) + " = " + f_[i].get_str() +
                       " outside [0, C(" + std::to_string(n) + "," + std::to_string(i) + ")]");
    }
  }
  if (f_[n] != 0) throw InputError("F_n must be 0: the empty subdigraph never works");
}

std::vector<mpz_class> ReliabilityPolynomial::n_form() const {
  return {f_.rbegin(), f_.rend()};
}

ReliabilityPolynomial ReliabilityPolynomial::from_n_form(int n, std::vector<mpz_class> counts) {
  std::reverse(counts.begin(), counts.end());
  return ReliabilityPolynomial(n, std::move(counts));
}

// ---------------------------------------------------------------------------
// Power basis

PowerPoly::PowerPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

mpq_class PowerPoly::operator()(const mpq_class& p) const {
  mpq_class acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * p + mpq_class(*it);
  return acc;
}

PowerPoly operator+(const PowerPoly& a, const PowerPoly& b) {
  std::vector<mpz_class> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t j = 0; j < c.size(); ++j) c[j] = a.coeff(static_cast<int>(j)) + b.coeff(static_cast<int>(j));
  return PowerPoly(std::move(c));
}

PowerPoly operator-(const PowerPoly& a, const PowerPoly& b) {
  std::vector<mpz_class> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t j = 0; j < c.size(); ++j) c[j] = a.coeff(static_cast<int>(j)) - b.coeff(static_cast<int>(j));
  return PowerPoly(std::move(c));
}

PowerPoly operator*(const PowerPoly& a, const PowerPoly& b) {
  if (a.is_zero() || b.is_zero()) return PowerPoly();
  std::vector<mpz_class> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return PowerPoly(std::move(c));
}

std::string PowerPoly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (c_[j] == 0) continue;
    mpz_class mag = abs(c_[j]);
    if (first) {
      if (c_[j] < 0) os << "-";
    } else {
      os << (c_[j] < 0 ? " - " : " + ");
    }
    first = false;
    if (j == 0 || mag != 1) os << mag.get_str();
    if (j >= 1) os << "p";
    if (j >= 2) os << "^" << j;
  }
  return os.str();
}

mpq_class evaluate(const ReliabilityPolynomial& rp, const mpq_class& p) {
  if (p < 0 || p > 1) throw InputError("p = " + rational_string(p) + " outside [0, 1]");
  const int n = rp.order();
  const mpq_class q = 1 - p;
  std::vector<mpq_class> p_pow(n + 1), q_pow(n + 1);
  p_pow[0] = q_pow[0] = 1;
  for (int i = 1; i <= n; ++i) {
    p_pow[i] = p_pow[i - 1] * p;
    q_pow[i] = q_pow[i - 1] * q;
  }
  mpq_class total = 0;
  for (int i = 0; i <= n; ++i) {
    if (rp.F(i) != 0) total += mpq_class(rp.F(i)) * p_pow[n - i] * q_pow[i];
  }
  return total;
}

PowerPoly to_power_basis(const ReliabilityPolynomial& rp) {
  const int n = rp.order();
  std::vector<mpz_class> c(n + 1);
  for (int i = 0; i <= n; ++i) {
    if (rp.F(i) == 0) continue;
    // F_i p^(n-i) (1-p)^i = F_i sum_j C(i,j) (-1)^j p^(n-i+j)
    for (int j = 0; j <= i; ++j) {
      mpz_class term = rp.F(i) * binomial(i, j);
      if (j % 2 == 1) term = -term;
      c[n - i + j] += term;
    }
  }
  return PowerPoly(std::move(c));
}

// ---------------------------------------------------------------------------
// Sign analysis on (0, 1)

const char* to_string(SignStatus s) {
  switch (s) {
    case SignStatus::identically_zero: return "identically-zero";
    case SignStatus::positive: return "positive-on-(0,1)";
    case SignStatus::negative: return "negative-on-(0,1)";
    case SignStatus::mixed: return "mixed";
  }
  return "?";
}

int SignProfile::sign_changes() const {
  return static_cast<int>(
      std::count_if(roots.begin(), roots.end(), [](const RootInterval& r) { return r.sign_change; }));
}

mpq_class root_width_bound() {
  static const mpq_class bound(mpz_class(1), mpz_class(1'000'000'000));
  return bound;
}

namespace {

using IntPoly = std::vector<mpz_class>;  // low -> high, trimmed

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int deg(const IntPoly& p) { return static_cast<int>(p.size()) - 1; }

IntPoly derivative(const IntPoly& p) {
  IntPoly d;
  for (std::size_t j = 1; j < p.size(); ++j) d.push_back(p[j] * static_cast<unsigned long>(j));
  trim(d);
  return d;
}

void make_primitive(IntPoly& p) {
  mpz_class g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) return;
  }
  if (g > 1) {
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
}

/// Sign of p(num/den) for den > 0, via den^deg * p(num/den) in integers.
int sign_at(const IntPoly& p, const mpz_class& num, const mpz_class& den) {
  if (p.empty()) return 0;
  mpz_class acc = p.back();
  mpz_class den_pow = den;
  for (int j = deg(p) - 1; j >= 0; --j) {
    acc = acc * num + p[j] * den_pow;
    den_pow *= den;
  }
  return sgn(acc);
}

int sign_at(const IntPoly& p, const mpq_class& x) {
  return sign_at(p, x.get_num(), x.get_den());
}

/// Pseudo-remainder r with lc(b)^k a = q b + r; `positive_multiplier` reports
/// whether lc(b)^k > 0.
IntPoly pseudo_remainder(IntPoly a, const IntPoly& b, bool& positive_multiplier) {
  positive_multiplier = true;
  const mpz_class& lb = b.back();
  while (!a.empty() && deg(a) >= deg(b)) {
    const mpz_class la = a.back();
    const int shift = deg(a) - deg(b);
    for (auto& c : a) c *= lb;
    for (int j = 0; j <= deg(b); ++j) a[j + shift] -= la * b[j];
    trim(a);
    if (lb < 0) positive_multiplier = !positive_multiplier;
  }
  return a;
}

IntPoly poly_gcd(IntPoly a, IntPoly b) {
  make_primitive(a);
  make_primitive(b);
  while (!b.empty()) {
    bool ignored;
    IntPoly r = pseudo_remainder(a, b, ignored);
    make_primitive(r);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty() && a.back() < 0) {
    for (auto& c : a) c = -c;
  }
  return a;
}

/// a / b where b divides a exactly over Q; the result is rescaled to a
/// primitive integer polynomial by a positive factor.
IntPoly exact_quotient(const IntPoly& a, const IntPoly& b) {
  std::vector<mpq_class> rem(a.begin(), a.end());
  std::vector<mpq_class> quot(a.size() - b.size() + 1);
  const mpq_class lb(b.back());
  for (int k = deg(a) - deg(b); k >= 0; --k) {
    const mpq_class t = rem[k + deg(b)] / lb;
    quot[k] = t;
    for (int j = 0; j <= deg(b); ++j) rem[k + j] -= t * mpq_class(b[j]);
  }
  mpz_class lcm = 1;
  for (const auto& q : quot) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
  IntPoly out;
  out.reserve(quot.size());
  for (const auto& q : quot) out.push_back(q.get_num() * (lcm / q.get_den()));
  trim(out);
  make_primitive(out);
  return out;
}

/// Sturm chain s0 = p, s1 = p', s_{k+1} = -rem(s_{k-1}, s_k), each term
/// rescaled by a positive constant.
std::vector<IntPoly> sturm_chain(const IntPoly& p) {
  std::vector<IntPoly> chain{p, derivative(p)};
  make_primitive(chain[1]);
  while (!chain.back().empty()) {
    bool positive;
    IntPoly r = pseudo_remainder(chain[chain.size() - 2], chain.back(), positive);
    if (r.empty()) break;
    if (positive) {
      for (auto& c : r) c = -c;
    }
    make_primitive(r);
    chain.push_back(std::move(r));
  }
  if (chain.back().empty()) chain.pop_back();
  return chain;
}

int variations(const std::vector<IntPoly>& chain, const mpq_class& x) {
  int changes = 0;
  int last = 0;
  for (const auto& s : chain) {
    const int sg = sign_at(s, x);
    if (sg == 0) continue;
    if (last != 0 && sg != last) ++changes;
    last = sg;
  }
  return changes;
}

/// A point strictly inside (lo, hi) that is not a root of p.
mpq_class split_point(const IntPoly& p, const mpq_class& lo, const mpq_class& hi) {
  const mpq_class width = hi - lo;
  mpq_class mid = lo + width / 2;
  for (int j = 0; sign_at(p, mid) == 0; ++j) {
    mpq_class offset(1, j + 3);
    if (j % 2 == 1) offset = -offset;
    mid = lo + width * (mpq_class(1, 2) + offset);
    mid.canonicalize();
  }
  return mid;
}

void isolate(const std::vector<IntPoly>& chain, const mpq_class& lo, const mpq_class& hi, int v_lo,
             int v_hi, std::vector<std::pair<mpq_class, mpq_class>>& out) {
  const int count = v_lo - v_hi;
  if (count <= 0) return;
  if (count == 1 && hi - lo <= root_width_bound()) {
    out.emplace_back(lo, hi);
    return;
  }
  const mpq_class mid = split_point(chain.front(), lo, hi);
  const int v_mid = variations(chain, mid);
  isolate(chain, lo, mid, v_lo, v_mid, out);
  isolate(chain, mid, hi, v_mid, v_hi, out);
}

}  // namespace

SignProfile sign_profile(const PowerPoly& d) {
  SignProfile profile;
  if (d.is_zero()) return profile;

  // Strip the factors p^k and (1-p)^k; both are positive on (0, 1).
  IntPoly q(d.coeffs().begin(), d.coeffs().end());
  while (q.front() == 0) q.erase(q.begin());
  for (;;) {
    mpz_class at_one = 0;
    for (const auto& c : q) at_one += c;
    if (at_one != 0) break;
    // Synthetic division by (p - 1), then negate to divide by (1 - p).
    IntPoly quotient(q.size() - 1);
    mpz_class carry = 0;
    for (int j = deg(q); j >= 1; --j) {
      carry += q[j];
      quotient[j - 1] = -carry;
    }
    q = std::move(quotient);
  }
  make_primitive(q);

  const mpq_class zero(0), one(1);
  const int sign_near_zero = sgn(q.front());
  if (deg(q) >= 1) {
    IntPoly square_free = q;
    const IntPoly g = poly_gcd(q, derivative(q));
    if (deg(g) >= 1) square_free = exact_quotient(q, g);
    const auto chain = sturm_chain(square_free);
    std::vector<std::pair<mpq_class, mpq_class>> intervals;
    isolate(chain, zero, one, variations(chain, zero), variations(chain, one), intervals);
    for (auto& [lo, hi] : intervals) {
      RootInterval root;
      root.sign_change = sign_at(q, lo) != sign_at(q, hi);
      root.lo = std::move(lo);
      root.hi = std::move(hi);
      profile.roots.push_back(std::move(root));
    }
  }
  if (profile.sign_changes() > 0) {
    profile.status = SignStatus::mixed;
  } else {
    profile.status = sign_near_zero > 0 ? SignStatus::positive : SignStatus::negative;
  }
  return profile;
}

int sampled_sign_changes(const PowerPoly& d, int points) {
  if (d.is_zero() || points < 2) return 0;
  const IntPoly p(d.coeffs().begin(), d.coeffs().end());
  const mpz_class den(points - 1);
  int changes = 0;
  int last = 0;
  for (int i = 0; i < points; ++i) {
    const int sg = sign_at(p, mpz_class(i), den);
    if (sg == 0) continue;
    if (last != 0 && sg != last) ++changes;
    last = sg;
  }
  return changes;
}

std::optional<mpq_class> parse_rational(const std::string& text) {
  if (text.empty()) return std::nullopt;
  if (text.find('/') != std::string::npos) {
    mpq_class q;
    if (q.set_str(text, 10) != 0) return std::nullopt;
    if (q.get_den() == 0) return std::nullopt;
    q.canonicalize();
    return q;
  }
  std::size_t pos = 0;
  bool negative = false;
  if (text[pos] == '-' || text[pos] == '+') negative = text[pos++] == '-';
  std::string digits;
  int scale = 0;
  bool seen_point = false;
  for (; pos < text.size(); ++pos) {
    const char ch = text[pos];
    if (ch == '.' && !seen_point) {
      seen_point = true;
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      digits.push_back(ch);
      if (seen_point) ++scale;
    } else {
      return std::nullopt;
    }
  }
  if (digits.empty()) return std::nullopt;
  mpz_class num(digits, 10);
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, static_cast<unsigned long>(scale));
  mpq_class q(negative ? mpz_class(-num) : num, den);
  q.canonicalize();
  return q;
}

std::string rational_string(const mpq_class& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace scnr
