#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kpq/rational.hpp"

namespace kpq {

// Exponent vector over a variable roster. Position 0 is always "beta";
// vectors of the wrong arity are hard errors, never silently resized.
using ExpVec = std::vector<int>;

long exp_total_degree(const ExpVec& e);
// Degree in everything except beta (the x / auxiliary part).
long exp_nonbeta_degree(const ExpVec& e);

// Canonical term order: graded lexicographic with beta last, largest term
// first. Fixing one total order makes every serialization byte-stable.
struct TermOrder {
  bool operator()(const ExpVec& a, const ExpVec& b) const;
};

// Sparse multivariate polynomial over Q with a named roster (beta, x1, ...).
// Values are immutable in spirit: every operation returns a fresh polynomial,
// zero coefficients are never stored, and the term map is kept in canonical
// order so two equal polynomials always print identically.
class ExactPolynomial {
 public:
  using TermMap = std::map<ExpVec, Rational, TermOrder>;

  ExactPolynomial() = default;
  explicit ExactPolynomial(std::vector<std::string> vars);

  static ExactPolynomial constant(std::vector<std::string> vars, const Rational& c);
  static ExactPolynomial variable(const std::vector<std::string>& vars, const std::string& name);
  static ExactPolynomial monomial(std::vector<std::string> vars, ExpVec exps, const Rational& c);

  const std::vector<std::string>& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t arity() const { return vars_.size(); }
  int var_index(const std::string& name) const;  // -1 when absent

  Rational coefficient(const ExpVec& e) const;
  // The coefficient of beta^0 x^0 ... (the scalar part).
  Rational constant_term() const;
  bool is_constant() const;

  long total_degree() const;      // max over terms, 0 for the zero polynomial
  long nonbeta_degree() const;    // max degree in the non-beta variables
  long beta_degree() const;

  ExactPolynomial operator-() const;
  ExactPolynomial operator+(const ExactPolynomial& o) const;
  ExactPolynomial operator-(const ExactPolynomial& o) const;
  ExactPolynomial operator*(const ExactPolynomial& o) const;
  ExactPolynomial scaled(const Rational& c) const;
  ExactPolynomial pow(long e) const;

  // Product dropping every monomial whose non-beta degree exceeds `max_deg`.
  ExactPolynomial mul_truncated(const ExactPolynomial& o, long max_deg) const;
  ExactPolynomial truncate_nonbeta(long max_deg) const;
  ExactPolynomial truncate_beta(long max_beta) const;

  // Substitutes polynomials for the named variables (simultaneously); any
  // variable not in the map stays itself. With `max_deg`, intermediate and
  // final results are truncated in the non-beta degree.
  ExactPolynomial substitute(const std::map<std::string, ExactPolynomial>& subs,
                             std::optional<long> max_deg = std::nullopt) const;
  ExactPolynomial set_var(const std::string& name, const Rational& value) const;

  // Re-expresses this polynomial over a superset roster.
  ExactPolynomial embedded(const std::vector<std::string>& superset) const;
  // Smallest common roster of a and b (union, left order first).
  static std::vector<std::string> merged_roster(const ExactPolynomial& a, const ExactPolynomial& b);

  // The slice of given non-beta homogeneous degree.
  ExactPolynomial nonbeta_homogeneous_part(long deg) const;
  // True iff invariant under every transposition of the listed variables.
  bool is_symmetric_in(const std::vector<std::string>& names) const;

  bool operator==(const ExactPolynomial& o) const;
  bool operator!=(const ExactPolynomial& o) const { return !(*this == o); }

  std::string to_text() const;
  std::string to_json_string() const;
  static ExactPolynomial from_json_string(const std::string& json);

  // Accumulates c * x^e; used by builders, re-normalizes lazily.
  void add_term(const ExpVec& e, const Rational& c);

 private:
  std::vector<std::string> vars_;
  TermMap terms_;

  void check_arity(const ExpVec& e) const;
};

// Roster helper: {"beta", "x1", ..., "xN"} (+ extra names appended).
std::vector<std::string> x_roster(int n_vars, const std::vector<std::string>& extra = {});

// The formal-group sum a (+) b = a + b + beta*a*b over a common roster.
ExactPolynomial formal_oplus(const ExactPolynomial& a, const ExactPolynomial& b);

// Rational expression tagged for series expansion: num / den with den to be
// inverted by a geometric expansion. (-) and bar produce these.
struct RatExpr {
  ExactPolynomial num;
  ExactPolynomial den;
};

// a (-) b = (a - b) / (1 + beta*b).
RatExpr formal_ominus(const ExactPolynomial& a, const ExactPolynomial& b);
// bar(t) = 0 (-) t = -t / (1 + beta*t).
RatExpr formal_bar(const ExactPolynomial& t);

}  // namespace kpq
