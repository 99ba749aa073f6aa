#include "kpq/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace kpq {

long exp_total_degree(const ExpVec& e) {
  long d = 0;
  for (int k : e) d += k;
  return d;
}

long exp_nonbeta_degree(const ExpVec& e) {
  long d = 0;
  for (std::size_t i = 1; i < e.size(); ++i) d += e[i];
  return d;
}

bool TermOrder::operator()(const ExpVec& a, const ExpVec& b) const {
  if (a.size() != b.size()) throw std::invalid_argument("exponent arity mismatch");
  long da = exp_total_degree(a), db = exp_total_degree(b);
  if (da != db) return da > db;
  // beta (position 0) compares last
  for (std::size_t i = 1; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return a.empty() ? false : a[0] > b[0];
}

ExactPolynomial::ExactPolynomial(std::vector<std::string> vars) : vars_(std::move(vars)) {
  if (vars_.empty() || vars_[0] != "beta")
    throw std::invalid_argument("roster must start with \"beta\"");
  for (std::size_t i = 0; i < vars_.size(); ++i)
    for (std::size_t j = i + 1; j < vars_.size(); ++j)
      if (vars_[i] == vars_[j]) throw std::invalid_argument("duplicate variable " + vars_[i]);
}

void ExactPolynomial::check_arity(const ExpVec& e) const {
  if (e.size() != vars_.size()) throw std::invalid_argument("exponent arity mismatch");
  for (int k : e)
    if (k < 0) throw std::invalid_argument("negative exponent in polynomial");
}

ExactPolynomial ExactPolynomial::constant(std::vector<std::string> vars, const Rational& c) {
  ExactPolynomial p(std::move(vars));
  if (c != 0) p.terms_.emplace(ExpVec(p.vars_.size(), 0), c);
  return p;
}

ExactPolynomial ExactPolynomial::variable(const std::vector<std::string>& vars,
                                          const std::string& name) {
  ExactPolynomial p(vars);
  int idx = p.var_index(name);
  if (idx < 0) throw std::invalid_argument("unknown variable " + name);
  ExpVec e(vars.size(), 0);
  e[idx] = 1;
  p.terms_.emplace(std::move(e), Rational(1));
  return p;
}

ExactPolynomial ExactPolynomial::monomial(std::vector<std::string> vars, ExpVec exps,
                                          const Rational& c) {
  ExactPolynomial p(std::move(vars));
  p.check_arity(exps);
  if (c != 0) p.terms_.emplace(std::move(exps), c);
  return p;
}

int ExactPolynomial::var_index(const std::string& name) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  return it == vars_.end() ? -1 : static_cast<int>(it - vars_.begin());
}

Rational ExactPolynomial::coefficient(const ExpVec& e) const {
  if (e.size() != vars_.size()) throw std::invalid_argument("exponent arity mismatch");
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational ExactPolynomial::constant_term() const {
  return coefficient(ExpVec(vars_.size(), 0));
}

bool ExactPolynomial::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && exp_total_degree(terms_.begin()->first) == 0);
}

long ExactPolynomial::total_degree() const {
  long d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, exp_total_degree(e));
  return d;
}

long ExactPolynomial::nonbeta_degree() const {
  long d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, exp_nonbeta_degree(e));
  return d;
}

long ExactPolynomial::beta_degree() const {
  long d = 0;
  for (const auto& [e, c] : terms_) d = std::max<long>(d, e[0]);
  return d;
}

void ExactPolynomial::add_term(const ExpVec& e, const Rational& c) {
  check_arity(e);
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

ExactPolynomial ExactPolynomial::operator-() const {
  ExactPolynomial r(vars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

ExactPolynomial ExactPolynomial::operator+(const ExactPolynomial& o) const {
  if (vars_ != o.vars_) {
    auto common = merged_roster(*this, o);
    return embedded(common) + o.embedded(common);
  }
  ExactPolynomial r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

ExactPolynomial ExactPolynomial::operator-(const ExactPolynomial& o) const {
  return *this + (-o);
}

ExactPolynomial ExactPolynomial::operator*(const ExactPolynomial& o) const {
  return mul_truncated(o, -1);
}

ExactPolynomial ExactPolynomial::mul_truncated(const ExactPolynomial& o, long max_deg) const {
  if (vars_ != o.vars_) {
    auto common = merged_roster(*this, o);
    return embedded(common).mul_truncated(o.embedded(common), max_deg);
  }
  ExactPolynomial r(vars_);
  ExpVec e(vars_.size());
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      if (max_deg >= 0 && exp_nonbeta_degree(e) > max_deg) continue;
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

ExactPolynomial ExactPolynomial::scaled(const Rational& c) const {
  ExactPolynomial r(vars_);
  if (c == 0) return r;
  for (const auto& [e, t] : terms_) r.terms_.emplace(e, t * c);
  return r;
}

ExactPolynomial ExactPolynomial::pow(long e) const {
  if (e < 0) throw std::invalid_argument("negative polynomial power");
  ExactPolynomial acc = constant(vars_, 1);
  for (long i = 0; i < e; ++i) acc = acc * *this;
  return acc;
}

ExactPolynomial ExactPolynomial::truncate_nonbeta(long max_deg) const {
  ExactPolynomial r(vars_);
  for (const auto& [e, c] : terms_)
    if (exp_nonbeta_degree(e) <= max_deg) r.terms_.emplace(e, c);
  return r;
}

ExactPolynomial ExactPolynomial::truncate_beta(long max_beta) const {
  ExactPolynomial r(vars_);
  for (const auto& [e, c] : terms_)
    if (e[0] <= max_beta) r.terms_.emplace(e, c);
  return r;
}

ExactPolynomial ExactPolynomial::substitute(const std::map<std::string, ExactPolynomial>& subs,
                                            std::optional<long> max_deg) const {
  long cap = max_deg.value_or(-1);
  ExactPolynomial result(vars_);
  for (const auto& [e, c] : terms_) {
    ExactPolynomial term = constant(vars_, c);
    ExpVec plain(vars_.size(), 0);
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (e[i] == 0) continue;
      auto it = subs.find(vars_[i]);
      if (it == subs.end()) {
        plain[i] = e[i];
        continue;
      }
      ExactPolynomial replacement = it->second.vars() == vars_ ? it->second : it->second.embedded(vars_);
      for (int k = 0; k < e[i]; ++k) term = term.mul_truncated(replacement, cap);
    }
    result = result + term.mul_truncated(monomial(vars_, plain, 1), cap);
  }
  return result;
}

ExactPolynomial ExactPolynomial::set_var(const std::string& name, const Rational& value) const {
  int idx = var_index(name);
  if (idx < 0) throw std::invalid_argument("unknown variable " + name);
  ExactPolynomial r(vars_);
  for (const auto& [e, c] : terms_) {
    ExpVec e2 = e;
    Rational c2 = c * rational_pow(value, e[idx]);
    e2[idx] = 0;
    r.add_term(e2, c2);
  }
  return r;
}

ExactPolynomial ExactPolynomial::embedded(const std::vector<std::string>& superset) const {
  if (superset == vars_) return *this;
  ExactPolynomial r(superset);
  std::vector<int> pos(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    pos[i] = r.var_index(vars_[i]);
    if (pos[i] < 0) throw std::invalid_argument("roster embedding misses " + vars_[i]);
  }
  for (const auto& [e, c] : terms_) {
    ExpVec e2(superset.size(), 0);
    for (std::size_t i = 0; i < vars_.size(); ++i) e2[pos[i]] = e[i];
    r.terms_.emplace(std::move(e2), c);
  }
  return r;
}

std::vector<std::string> ExactPolynomial::merged_roster(const ExactPolynomial& a,
                                                        const ExactPolynomial& b) {
  std::vector<std::string> m = a.vars_;
  for (const auto& v : b.vars_)
    if (std::find(m.begin(), m.end(), v) == m.end()) m.push_back(v);
  return m;
}

ExactPolynomial ExactPolynomial::nonbeta_homogeneous_part(long deg) const {
  ExactPolynomial r(vars_);
  for (const auto& [e, c] : terms_)
    if (exp_nonbeta_degree(e) == deg) r.terms_.emplace(e, c);
  return r;
}

bool ExactPolynomial::is_symmetric_in(const std::vector<std::string>& names) const {
  std::vector<int> idx;
  for (const auto& n : names) {
    int i = var_index(n);
    if (i < 0) throw std::invalid_argument("unknown variable " + n);
    idx.push_back(i);
  }
  for (std::size_t a = 0; a + 1 < idx.size(); ++a) {
    ExactPolynomial swapped(vars_);
    for (const auto& [e, c] : terms_) {
      ExpVec e2 = e;
      std::swap(e2[idx[a]], e2[idx[a + 1]]);
      swapped.terms_.emplace(std::move(e2), c);
    }
    if (swapped != *this) return false;
  }
  return true;
}

bool ExactPolynomial::operator==(const ExactPolynomial& o) const {
  if (vars_ == o.vars_) return terms_ == o.terms_;
  auto common = merged_roster(*this, o);
  return embedded(common).terms_ == o.embedded(common).terms_;
}

std::string ExactPolynomial::to_text() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational a = c;
    if (first) {
      if (a < 0) {
        out << "-";
        a = -a;
      }
    } else {
      out << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    bool has_vars = exp_total_degree(e) != 0;
    if (!has_vars || a != 1) out << rational_to_string(a);
    bool printed = !has_vars || a != 1;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (e[i] == 0) continue;
      if (printed) out << "*";
      out << vars_[i];
      if (e[i] != 1) out << "^" << e[i];
      printed = true;
    }
  }
  return out.str();
}

std::string ExactPolynomial::to_json_string() const {
  nlohmann::ordered_json j;
  j["vars"] = vars_;
  j["terms"] = nlohmann::ordered_json::array();
  for (const auto& [e, c] : terms_) {
    nlohmann::ordered_json t;
    t["coeff"] = rational_to_string(c);
    t["exp"] = e;
    j["terms"].push_back(std::move(t));
  }
  return j.dump();
}

ExactPolynomial ExactPolynomial::from_json_string(const std::string& json) {
  auto j = nlohmann::json::parse(json);
  ExactPolynomial p(j.at("vars").get<std::vector<std::string>>());
  for (const auto& t : j.at("terms")) {
    p.add_term(t.at("exp").get<ExpVec>(), rational_from_string(t.at("coeff").get<std::string>()));
  }
  return p;
}

std::vector<std::string> x_roster(int n_vars, const std::vector<std::string>& extra) {
  std::vector<std::string> vars{"beta"};
  for (int i = 1; i <= n_vars; ++i) vars.push_back("x" + std::to_string(i));
  for (const auto& v : extra) vars.push_back(v);
  return vars;
}

ExactPolynomial formal_oplus(const ExactPolynomial& a, const ExactPolynomial& b) {
  auto common = ExactPolynomial::merged_roster(a, b);
  ExactPolynomial ac = a.embedded(common), bc = b.embedded(common);
  ExactPolynomial beta = ExactPolynomial::variable(common, "beta");
  return ac + bc + beta * ac * bc;
}

RatExpr formal_ominus(const ExactPolynomial& a, const ExactPolynomial& b) {
  auto common = ExactPolynomial::merged_roster(a, b);
  ExactPolynomial ac = a.embedded(common), bc = b.embedded(common);
  ExactPolynomial beta = ExactPolynomial::variable(common, "beta");
  return RatExpr{ac - bc, ExactPolynomial::constant(common, 1) + beta * bc};
}

RatExpr formal_bar(const ExactPolynomial& t) {
  return formal_ominus(ExactPolynomial::constant(t.vars(), 0), t);
}

}  // namespace kpq
