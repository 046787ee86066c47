#pragma once

#include <array>
#include <map>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace sextic {

using BigInt = boost::multiprecision::cpp_int;

// Sparse polynomial with integer coefficients in the variables (q, delta, epsilon, alpha).
class ExactPoly {
 public:
  enum Var { q = 0, delta = 1, epsilon = 2, alpha = 3 };
  using Exponents = std::array<int, 4>;

  ExactPoly() = default;
  ExactPoly(long c);  // NOLINT: integer constants promote implicitly
  static ExactPoly var(Var v);
  static ExactPoly monomial(const BigInt& c, Exponents e);

  const std::map<Exponents, BigInt>& terms() const { return terms_; }
  BigInt coefficient(const Exponents& e) const;
  // Degree in q.
  int degree_q() const;
  // Coefficient of q^k as a polynomial in the remaining variables.
  ExactPoly coefficient_of_q(int k) const;
  double evaluate(double q, double delta, double epsilon, double alpha) const;
  std::string str() const;

  ExactPoly& operator+=(const ExactPoly& o);
  ExactPoly& operator-=(const ExactPoly& o);
  friend ExactPoly operator+(ExactPoly a, const ExactPoly& b) { return a += b; }
  friend ExactPoly operator-(ExactPoly a, const ExactPoly& b) { return a -= b; }
  friend ExactPoly operator-(const ExactPoly& a) { return ExactPoly(0) - a; }
  friend ExactPoly operator*(const ExactPoly& a, const ExactPoly& b);
  friend bool operator==(const ExactPoly& a, const ExactPoly& b) { return a.terms_ == b.terms_; }

 private:
  void add_term(const Exponents& e, const BigInt& c);
  std::map<Exponents, BigInt> terms_;
};

}  // namespace sextic
