#include "sextic/exact_poly.hpp"

#include <cmath>
#include <sstream>

namespace sextic {

ExactPoly::ExactPoly(long c) {
  if (c != 0) terms_[{0, 0, 0, 0}] = c;
}

ExactPoly ExactPoly::var(Var v) {
  Exponents e{0, 0, 0, 0};
  e[v] = 1;
  return monomial(1, e);
}

ExactPoly ExactPoly::monomial(const BigInt& c, Exponents e) {
  ExactPoly p;
  p.add_term(e, c);
  return p;
}

void ExactPoly::add_term(const Exponents& e, const BigInt& c) {
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

BigInt ExactPoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? BigInt(0) : it->second;
}

int ExactPoly::degree_q() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[q]);
  return d;
}

ExactPoly ExactPoly::coefficient_of_q(int k) const {
  ExactPoly out;
  for (const auto& [e, c] : terms_) {
    if (e[q] != k) continue;
    Exponents r = e;
    r[q] = 0;
    out.add_term(r, c);
  }
  return out;
}

double ExactPoly::evaluate(double qv, double d, double e, double a) const {
  double acc = 0.0;
  for (const auto& [ex, c] : terms_) {
    acc += c.convert_to<double>() * std::pow(qv, ex[q]) * std::pow(d, ex[delta]) *
           std::pow(e, ex[epsilon]) * std::pow(a, ex[alpha]);
  }
  return acc;
}

std::string ExactPoly::str() const {
  if (terms_.empty()) return "0";
  static const char* names[] = {"q", "delta", "epsilon", "alpha"};
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    const bool unit = (e == Exponents{0, 0, 0, 0});
    if (mag != 1 || unit) os << mag;
    bool need_star = (mag != 1);
    for (int v = 0; v < 4; ++v) {
      if (e[v] == 0) continue;
      os << (need_star ? "*" : "") << names[v];
      if (e[v] > 1) os << "^" << e[v];
      need_star = true;
    }
    first = false;
  }
  return os.str();
}

ExactPoly& ExactPoly::operator+=(const ExactPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

ExactPoly& ExactPoly::operator-=(const ExactPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

ExactPoly operator*(const ExactPoly& a, const ExactPoly& b) {
  ExactPoly out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      ExactPoly::Exponents e;
      for (int v = 0; v < 4; ++v) e[v] = ea[v] + eb[v];
      out.add_term(e, ca * cb);
    }
  return out;
}

}  // namespace sextic
