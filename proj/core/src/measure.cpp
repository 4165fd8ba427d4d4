#include "schur/measure.hpp"

#include <cmath>
#include <stdexcept>

namespace schur {

MeasureExpr MeasureExpr::operator+(const MeasureExpr& o) const {
  if (coeff == 0) return o;
  if (o.coeff == 0) return *this;
  if (cinf_power != o.cinf_power || p != o.p)
    throw std::invalid_argument("MeasureExpr: incompatible C_inf powers");
  return {coeff + o.coeff, cinf_power, p};
}

MeasureExpr MeasureExpr::operator-(const MeasureExpr& o) const {
  return *this + MeasureExpr{-o.coeff, o.cinf_power, o.p};
}

MeasureExpr::Approx MeasureExpr::approx(double tol) const {
  double c = static_cast<double>(coeff);
  if (cinf_power == 0) return {c, 0.0};
  double cinf = c_constant_inf(p, tol);
  double v = c * std::pow(cinf, cinf_power);
  // relative truncation error of cinf is < tol (tail of -log of the product),
  // amplified by the power
  double rel = std::abs(static_cast<double>(cinf_power)) * tol * 1.01;
  return {v, std::abs(v) * rel + 1e-300};
}

std::string MeasureExpr::str() const {
  std::string s = coeff.str();
  if (cinf_power == 1) s += " * C_inf";
  else if (cinf_power != 0) s += " * C_inf^" + std::to_string(cinf_power);
  return s;
}

MeasureExpr mu_inf_sch_n(std::uint32_t p, unsigned n) {
  Int pn2 = 1;
  for (unsigned i = 0; i < n * n; ++i) pn2 *= p;
  return {Rat(1, pn2) / (c_constant(p, n) * c_constant(p, n)), 1, p};
}

MeasureExpr mu_inf_udg(std::uint32_t p, unsigned n, unsigned m, const Int& aut_order) {
  if (m > n) throw std::invalid_argument("mu_inf_udg: m > n");
  if (aut_order < 1) throw std::invalid_argument("mu_inf_udg: aut_order < 1");
  return {Rat(1) / (c_constant(p, n - m) * aut_order), 1, p};
}

Rat mu_n_class_count(std::uint32_t p, unsigned n, const Int& d_odd_size, unsigned m,
                     const Int& aut_order) {
  if (m > n) throw std::invalid_argument("mu_n_class_count: m > n");
  Rat r = c_constant(p, n) * c_constant(p, n) / (c_constant(p, n - m) * aut_order);
  for (unsigned i = 0; i < n; ++i) r *= d_odd_size;
  return r;
}

Rat mu_n_restriction_factor(std::uint32_t p, unsigned n, unsigned m) {
  if (m > n) throw std::invalid_argument("mu_n_restriction_factor: m > n");
  return c_constant(p, n) * c_constant(p, n) / (c_constant(p, m) * c_constant(p, m) * c_constant(p, n - m));
}

MeasureExpr mu_inf_abelianization(std::uint32_t p, const Int& aut_A_order) {
  if (aut_A_order < 1) throw std::invalid_argument("aut order < 1");
  return {Rat(1, aut_A_order), 1, p};
}

}  // namespace schur
