#pragma once

#include <gmpxx.h>

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace scnr {

/// Exact SCNR polynomial in F-form:
///   Rel(p) = sum_i F_i p^(n-i) (1-p)^i,
/// where F_i counts the i-subsets of vertices whose failure leaves a strongly
/// connected induced subdigraph.
class ReliabilityPolynomial {
 public:
  ReliabilityPolynomial() = default;

  /// Requires f.size() == n + 1, 0 <= F_i <= C(n, i) and F_n = 0.
  ReliabilityPolynomial(int n, std::vector<mpz_class> f);

  int order() const { return n_; }
  const mpz_class& F(int i) const { return f_[i]; }
  const std::vector<mpz_class>& f_form() const { return f_; }

  /// N_i = F_(n-i): number of operational i-sets that work.
  std::vector<mpz_class> n_form() const;

  static ReliabilityPolynomial from_n_form(int n, std::vector<mpz_class> counts);

  bool operator==(const ReliabilityPolynomial& o) const { return n_ == o.n_ && f_ == o.f_; }

 private:
  int n_ = 0;
  std::vector<mpz_class> f_;
};

/// Integer polynomial sum_j c_j p^j in the power basis.
class PowerPoly {
 public:
  PowerPoly() = default;
  explicit PowerPoly(std::vector<mpz_class> coeffs);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<mpz_class>& coeffs() const { return c_; }
  mpz_class coeff(int j) const { return j <= degree() ? c_[j] : mpz_class(0); }

  mpq_class operator()(const mpq_class& p) const;

  friend PowerPoly operator-(const PowerPoly& a, const PowerPoly& b);
  friend PowerPoly operator+(const PowerPoly& a, const PowerPoly& b);
  friend PowerPoly operator*(const PowerPoly& a, const PowerPoly& b);
  bool operator==(const PowerPoly&) const = default;

  std::string to_string() const;

 private:
  std::vector<mpz_class> c_;  // trailing zeros trimmed
};

/// Exact value of the F-form sum. Throws InputError unless 0 <= p <= 1.
mpq_class evaluate(const ReliabilityPolynomial& rp, const mpq_class& p);

/// Binomial expansion of every p^(n-i)(1-p)^i term.
PowerPoly to_power_basis(const ReliabilityPolynomial& rp);

enum class SignStatus { identically_zero, positive, negative, mixed };

const char* to_string(SignStatus s);

/// One real root isolated in the open interval (lo, hi) ⊂ (0, 1); neither
/// endpoint is a root.
struct RootInterval {
  mpq_class lo;
  mpq_class hi;
  bool sign_change = false;  // odd multiplicity

  bool operator==(const RootInterval&) const = default;
};

/// Sign of a polynomial on the open interval (0, 1). `positive`/`negative`
/// allow even-multiplicity tangencies, which are still listed in `roots`.
struct SignProfile {
  SignStatus status = SignStatus::identically_zero;
  std::vector<RootInterval> roots;  // increasing, pairwise disjoint

  int sign_changes() const;
  bool non_negative() const {
    return status == SignStatus::positive || status == SignStatus::identically_zero;
  }
};

/// Largest allowed isolating-interval width: 10^-9.
mpq_class root_width_bound();

/// Exact sign analysis on (0, 1) via a Sturm chain of the square-free part,
/// with bisection until every interval is no wider than root_width_bound().
SignProfile sign_profile(const PowerPoly& d);

/// Floating-point-free cross-check: evaluate exactly at i/(points-1) for
/// i = 0..points-1 and count sign changes among the nonzero values.
int sampled_sign_changes(const PowerPoly& d, int points = 10001);

/// Parses "a/b", an integer or a plain decimal ("0.125") into an exact rational.
std::optional<mpq_class> parse_rational(const std::string& text);

/// "num/den" (always with a denominator).
std::string rational_string(const mpq_class& q);

mpz_class binomial(int n, int k);

}  // namespace scnr
