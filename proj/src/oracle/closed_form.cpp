#include "q5/oracle.hpp"

#include <cmath>

namespace q5::oracle {

double ClosedFormParams::a(double t) const { return std::cos(alpha * t); }
double ClosedFormParams::b(double t) const { return beta * std::sin(alpha * t); }
double ClosedFormParams::c(double t) const { return gamma * std::sin(alpha * t); }

ClosedFormParams closed_form_params(const CouplingSet& c) {
  ClosedFormParams p;
  const double gv = c.g + c.v;
  p.alpha = std::hypot(c.epsilon, gv);
  if (p.alpha > 0.0) {
    p.beta = c.epsilon / p.alpha;
    p.gamma = gv / p.alpha;
  }
  return p;
}

Mat5 u1_closed_form(const CouplingSet& c, double t) {
  const ClosedFormParams p = closed_form_params(c);
  const cplx I(0.0, 1.0);
  const cplx eg = std::exp(I * (c.g * t));
  Mat5 u = Mat5::Zero();
  u(0, 0) = 1.0;
  u(2, 2) = 1.0;
  u(4, 4) = std::exp(I * (2.0 * c.g * t));
  if (p.alpha == 0.0) {
    u(1, 1) = eg;
    u(3, 3) = eg;
    return u;
  }
  u(1, 1) = eg * (p.a(t) + I * p.b(t));
  u(3, 3) = eg * (p.a(t) - I * p.b(t));
  u(1, 3) = eg * I * p.c(t);
  u(3, 1) = u(1, 3);
  return u;
}

}  // namespace q5::oracle
