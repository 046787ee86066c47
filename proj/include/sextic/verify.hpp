#pragma once

#include <string>
#include <vector>

#include "sextic/exact_poly.hpp"

namespace sextic {

struct VerifyOptions {
  // Test hook: shift the constant term of every generated termination polynomial.
  bool perturb_qpoly = false;
};

struct CheckResult {
  std::string suite;
  std::string name;
  bool pass = false;
  std::string detail;
};

const std::vector<std::string>& verify_suites();
std::vector<CheckResult> run_verify(const std::string& suite, const VerifyOptions& opt = {});

// Closed-form termination polynomials for gamma = -N, N = 0..3.
ExactPoly reference_q_polynomial(int N);

}  // namespace sextic
