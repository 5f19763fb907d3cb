#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

namespace stickknot {

// Integer-coefficient Laurent polynomial in one indeterminate A.
// Zero coefficients are never stored.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;

  static LaurentPolynomial monomial(long long coef, int exp) {
    LaurentPolynomial p;
    if (coef != 0) p.c_[exp] = coef;
    return p;
  }
  static LaurentPolynomial one() { return monomial(1, 0); }

  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_.count(0) == 1 && c_.at(0) == 1; }
  const std::map<int, long long>& coeffs() const { return c_; }

  long long coeff(int exp) const {
    auto it = c_.find(exp);
    return it == c_.end() ? 0 : it->second;
  }

  LaurentPolynomial& operator+=(const LaurentPolynomial& o) {
    for (const auto& [e, k] : o.c_) add(e, k);
    return *this;
  }
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) {
    a += b;
    return a;
  }
  friend LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    LaurentPolynomial r = a;
    for (const auto& [e, k] : b.c_) r.add(e, -k);
    return r;
  }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    LaurentPolynomial r;
    for (const auto& [ea, ka] : a.c_)
      for (const auto& [eb, kb] : b.c_) r.add(ea + eb, ka * kb);
    return r;
  }
  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return a.c_ == b.c_;
  }

  // Substitute A -> A^-1 (the mirror image on bracket/Jones values).
  LaurentPolynomial mirrored() const {
    LaurentPolynomial r;
    for (const auto& [e, k] : c_) r.c_[-e] = k;
    return r;
  }

  // Evaluate at t = -1 after the substitution t = A^-4; every exponent must be
  // divisible by 4 (true for normalized Jones values of knots).
  long long evaluate_t_minus_one() const {
    long long v = 0;
    for (const auto& [e, k] : c_) {
      if (e % 4 != 0) throw std::domain_error("exponent not divisible by 4");
      const int te = -e / 4;
      v += (te % 2 == 0) ? k : -k;
    }
    return v;
  }

  std::string to_string(const std::string& var = "A") const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      const auto [e, k] = *it;
      if (!first) os << (k > 0 ? " + " : " - ");
      else if (k < 0) os << "-";
      first = false;
      const long long a = k > 0 ? k : -k;
      if (a != 1 || e == 0) os << a;
      if (e != 0) {
        os << var;
        if (e != 1) os << "^" << e;
      }
    }
    return os.str();
  }

 private:
  void add(int exp, long long k) {
    if (k == 0) return;
    auto [it, inserted] = c_.try_emplace(exp, k);
    if (!inserted) {
      it->second += k;
      if (it->second == 0) c_.erase(it);
    }
  }

  std::map<int, long long> c_;
};

}  // namespace stickknot
