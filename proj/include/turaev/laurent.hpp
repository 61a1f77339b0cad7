#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace turaev {

/// Formal variable a Laurent polynomial is written in. `q` is t^{1/2}.
enum class Variable { A, q, t };

inline const char* variable_name(Variable v) {
  switch (v) {
    case Variable::A: return "A";
    case Variable::q: return "q";
    case Variable::t: return "t";
  }
  return "?";
}

/// Integer Laurent polynomial in one variable, stored densely from the lowest
/// nonzero exponent. The zero polynomial has no coefficients.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(Variable v) : var_(v) {}

  static LaurentPoly monomial(std::int64_t coeff, int exponent, Variable v = Variable::A) {
    LaurentPoly p(v);
    if (coeff != 0) {
      p.low_ = exponent;
      p.coeffs_.push_back(coeff);
    }
    return p;
  }
  static LaurentPoly constant(std::int64_t c, Variable v = Variable::A) { return monomial(c, 0, v); }

  /// Build from (exponent, coefficient) pairs; repeated exponents accumulate.
  static LaurentPoly from_terms(const std::vector<std::pair<int, std::int64_t>>& terms,
                                Variable v = Variable::A) {
    LaurentPoly p(v);
    for (auto [e, c] : terms) p += monomial(c, e, v);
    return p;
  }

  Variable variable() const { return var_; }
  bool is_zero() const { return coeffs_.empty(); }

  int min_degree() const {
    require_nonzero();
    return low_;
  }
  int max_degree() const {
    require_nonzero();
    return low_ + static_cast<int>(coeffs_.size()) - 1;
  }
  int span() const { return max_degree() - min_degree(); }

  std::int64_t coeff(int exponent) const {
    const long k = static_cast<long>(exponent) - low_;
    if (k < 0 || k >= static_cast<long>(coeffs_.size())) return 0;
    return coeffs_[static_cast<std::size_t>(k)];
  }

  /// Nonzero terms as (exponent, coefficient), ascending exponent.
  std::vector<std::pair<int, std::int64_t>> terms() const {
    std::vector<std::pair<int, std::int64_t>> out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
      if (coeffs_[k] != 0) out.emplace_back(low_ + static_cast<int>(k), coeffs_[k]);
    return out;
  }

  int term_count() const {
    return static_cast<int>(std::count_if(coeffs_.begin(), coeffs_.end(),
                                          [](std::int64_t c) { return c != 0; }));
  }

  LaurentPoly& operator+=(const LaurentPoly& o) { return accumulate(o, 1); }
  LaurentPoly& operator-=(const LaurentPoly& o) { return accumulate(o, -1); }

  LaurentPoly& operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
  }
  LaurentPoly& operator*=(std::int64_t s) {
    if (s == 0) {
      coeffs_.clear();
      return *this;
    }
    for (auto& c : coeffs_) c *= s;
    return *this;
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator-(LaurentPoly a) { return a *= -1; }
  friend LaurentPoly operator*(LaurentPoly a, std::int64_t s) { return a *= s; }
  friend LaurentPoly operator*(std::int64_t s, LaurentPoly a) { return a *= s; }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    a.check_same(b);
    LaurentPoly r(a.var_);
    if (a.is_zero() || b.is_zero()) return r;
    r.low_ = a.low_ + b.low_;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    r.trim();
    return r;
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() && b.is_zero()) return true;
    return a.var_ == b.var_ && a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  /// Multiply by var^k.
  LaurentPoly shifted(int k) const {
    LaurentPoly r = *this;
    if (!r.is_zero()) r.low_ += k;
    return r;
  }

  LaurentPoly pow(unsigned n) const {
    LaurentPoly result = constant(1, var_);
    LaurentPoly base = *this;
    while (n != 0) {
      if (n & 1U) result *= base;
      n >>= 1U;
      if (n != 0) base *= base;
    }
    return result;
  }

  /// Substitute var -> new_var^factor. `factor` may be negative.
  LaurentPoly substituted(int factor, Variable new_var) const {
    if (factor == 0) throw std::invalid_argument("LaurentPoly::substituted: zero factor");
    LaurentPoly r(new_var);
    for (auto [e, c] : terms()) r += monomial(c, e * factor, new_var);
    return r;
  }

  /// Substitute var^divisor -> new_var, i.e. divide every exponent. Throws
  /// when some exponent is not a multiple of `divisor`.
  LaurentPoly exponents_divided(int divisor, Variable new_var) const {
    if (divisor == 0) throw std::invalid_argument("LaurentPoly::exponents_divided: zero divisor");
    LaurentPoly r(new_var);
    for (auto [e, c] : terms()) {
      if (e % divisor != 0) throw std::domain_error("LaurentPoly: exponent not divisible");
      r += monomial(c, e / divisor, new_var);
    }
    return r;
  }

  /// Replace var by -var.
  LaurentPoly negated_variable() const {
    LaurentPoly r = *this;
    for (std::size_t k = 0; k < r.coeffs_.size(); ++k)
      if ((r.low_ + static_cast<long>(k)) % 2 != 0) r.coeffs_[k] = -r.coeffs_[k];
    return r;
  }

  /// Exact division. Throws std::domain_error when the divisor does not
  /// divide or its extreme coefficients are not units.
  LaurentPoly divided_exact(const LaurentPoly& d) const {
    check_same(d);
    if (d.is_zero()) throw std::domain_error("LaurentPoly: division by zero");
    LaurentPoly q(var_);
    if (is_zero()) return q;
    const std::int64_t lead = d.coeffs_.back();
    if (lead != 1 && lead != -1) throw std::domain_error("LaurentPoly: divisor leading coefficient is not a unit");
    LaurentPoly rem = *this;
    const int dmax = d.max_degree();
    while (!rem.is_zero() && rem.span() >= d.span()) {
      const int shift = rem.max_degree() - dmax;
      const std::int64_t c = rem.coeffs_.back() * lead;  // lead is +-1
      LaurentPoly t = monomial(c, shift, var_);
      q += t;
      rem -= t * d;
    }
    if (!rem.is_zero()) throw std::domain_error("LaurentPoly: inexact division");
    return q;
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    const char* v = variable_name(var_);
    bool first = true;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      const std::int64_t c = *it;
      if (c == 0) continue;
      const int e = low_ + static_cast<int>(coeffs_.rend() - it) - 1;
      if (first) {
        if (c < 0) out += "-";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      const std::int64_t a = c < 0 ? -c : c;
      if (a != 1 || e == 0) out += std::to_string(a);
      if (e != 0) {
        out += v;
        if (e != 1) out += "^" + std::to_string(e);
      }
      first = false;
    }
    return out;
  }

 private:
  void require_nonzero() const {
    if (is_zero()) throw std::domain_error("LaurentPoly: degree of zero polynomial");
  }
  void check_same(const LaurentPoly& o) const {
    if (!is_zero() && !o.is_zero() && var_ != o.var_)
      throw std::invalid_argument("LaurentPoly: variable mismatch");
  }

  LaurentPoly& accumulate(const LaurentPoly& o, std::int64_t sign) {
    check_same(o);
    if (o.is_zero()) return *this;
    if (is_zero()) {
      var_ = o.var_;
      low_ = o.low_;
      coeffs_ = o.coeffs_;
      if (sign < 0)
        for (auto& c : coeffs_) c = -c;
      return *this;
    }
    const int new_low = std::min(low_, o.low_);
    const int new_high = std::max(max_degree(), o.max_degree());
    if (new_low < low_) coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - new_low), 0);
    low_ = new_low;
    coeffs_.resize(static_cast<std::size_t>(new_high - new_low + 1), 0);
    const std::size_t off = static_cast<std::size_t>(o.low_ - low_);
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[off + k] += sign * o.coeffs_[k];
    trim();
    return *this;
  }

  void trim() {
    std::size_t first = 0;
    while (first < coeffs_.size() && coeffs_[first] == 0) ++first;
    if (first == coeffs_.size()) {
      coeffs_.clear();
      low_ = 0;
      return;
    }
    std::size_t last = coeffs_.size();
    while (coeffs_[last - 1] == 0) --last;
    coeffs_.erase(coeffs_.begin() + static_cast<long>(last), coeffs_.end());
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(first));
    low_ += static_cast<int>(first);
  }

  Variable var_ = Variable::A;
  int low_ = 0;
  std::vector<std::int64_t> coeffs_;
};

/// The loop value -A^2 - A^{-2}.
inline LaurentPoly loop_value() {
  return LaurentPoly::from_terms({{2, -1}, {-2, -1}}, Variable::A);
}

}  // namespace turaev
