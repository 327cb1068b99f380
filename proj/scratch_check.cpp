// Scratch validation harness (not part of the build) used while developing.
#include <iostream>

#include "padiccf/padiccf.hpp"

using namespace padiccf;

static std::string join(const std::vector<PartialQuotient>& qs, const Prime& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < qs.size(); ++i) {
    if (i) s += ", ";
    s += qs[i].to_string(p);
  }
  return s + "]";
}

static void show(const char* label, const QuadElem& x, AlgorithmKind alg, long long steps) {
  ExpansionResult r = expand(x, alg, steps);
  std::cout << label << " [" << algorithm_token(alg) << "]: " << status_token(r.status);
  if (r.status == ExpansionStatus::Periodic)
    std::cout << " h=" << r.preperiod << " k=" << r.period;
  std::cout << "  " << join(r.quotients, x.prime()) << "\n";
}

int main() {
  Prime p5(5), p23(23), p7(7);
  auto c34 = QuadContext::with_sqrt(p5, 34);
  auto c54 = QuadContext::with_sqrt(p5, 54);
  auto c69 = QuadContext::with_sqrt(p5, 69);
  auto c19 = QuadContext::with_sqrt(p5, 19);
  auto c129 = QuadContext::with_sqrt(p5, 129);
  auto c30 = QuadContext::with_sqrt(p7, 30);
  auto r23 = QuadContext::rationals(p23);

  show("sqrt34", QuadElem::sqrt_d(c34), AlgorithmKind::BrowkinII, 1000);
  show("sqrt54", QuadElem::sqrt_d(c54), AlgorithmKind::BrowkinII, 1000);
  show("sqrt69", QuadElem::sqrt_d(c69), AlgorithmKind::BrowkinII, 1000);
  show("sqrt19", QuadElem::sqrt_d(c19), AlgorithmKind::New, 1000);
  show("sqrt129", QuadElem::sqrt_d(c129), AlgorithmKind::New, 1000);
  show("sqrt129", QuadElem::sqrt_d(c129), AlgorithmKind::BrowkinII, 1000);
  show("sqrt30+3", QuadElem::make(3, 1, 1, c30), AlgorithmKind::BrowkinII, 1000);
  show("-17/29", QuadElem::from_rational(-17, 29, r23), AlgorithmKind::BrowkinII, 100);
  show("-17/29", QuadElem::from_rational(-17, 29, r23), AlgorithmKind::New, 100);
  show("-15/109", QuadElem::from_rational(-15, 109, r23), AlgorithmKind::BrowkinII, 100);
  show("-15/109", QuadElem::from_rational(-15, 109, r23), AlgorithmKind::New, 100);

  // hensel + digit spot checks
  std::cout << "hensel(34,5,1)=" << hensel_sqrt(34, p5, 1)
            << " hensel(34,5,2)=" << hensel_sqrt(34, p5, 2)
            << " hensel(19,5,1)=" << hensel_sqrt(19, p5, 1) << "\n";
  std::cout << "v(sqrt34)=" << QuadElem::sqrt_d(c34).valuation().to_string()
            << " v(2-sqrt34)=" << QuadElem::make(2, -1, 1, c34).valuation().to_string()
            << "\n";
  return 0;
}
