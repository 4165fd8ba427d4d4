#pragma once

#include <cstdint>
#include <string>

#include "schur/fp.hpp"

namespace schur {

/// An exact measure value of the form (rational) * C_infinity^e.  All
/// formula identities are checked exactly on the coefficient; floats appear
/// only at the reporting boundary via approx().
struct MeasureExpr {
  Rat coeff = 0;
  int cinf_power = 0;
  std::uint32_t p = 3;

  bool operator==(const MeasureExpr& o) const {
    return coeff == o.coeff && (coeff == 0 || (cinf_power == o.cinf_power && p == o.p));
  }

  MeasureExpr operator+(const MeasureExpr& o) const;
  MeasureExpr operator-(const MeasureExpr& o) const;
  MeasureExpr scaled(const Rat& r) const { return {coeff * r, cinf_power, p}; }

  struct Approx {
    double value = 0;
    double error_bound = 0;
  };
  /// Float value with the truncation error bound of the C_infinity factor
  /// propagated outward.
  Approx approx(double tol = 1e-12) const;

  std::string str() const;  // e.g. "3/4 * C_inf"
};

/// mu_infinity(Sch_n) = C_inf / C_n^2 * p^{-n^2}
MeasureExpr mu_inf_sch_n(std::uint32_t p, unsigned n);

/// mu_infinity(U_{D,G}) = C_inf / (C_{n-m} |Aut_sigma(G_D)|)
MeasureExpr mu_inf_udg(std::uint32_t p, unsigned n, unsigned m, const Int& aut_order);

/// Exact number of relation tuples at level D that produce a class with
/// d_G = n:  |F_{n,D}^-|^n * C_n^2 / (C_{n-m} * |Aut_sigma|).  The result is
/// returned as a rational; a non-integral value signals inconsistent inputs.
Rat mu_n_class_count(std::uint32_t p, unsigned n, const Int& d_odd_size, unsigned m,
                     const Int& aut_order);

/// Proportionality constant relating mu_n|Sch_m to mu_m|Sch_m:
/// C_n^2 / (C_m^2 C_{n-m})
Rat mu_n_restriction_factor(std::uint32_t p, unsigned n, unsigned m);

/// mu_infinity({[G] : G_ab isomorphic to A}) = C_inf / |Aut(A)|
MeasureExpr mu_inf_abelianization(std::uint32_t p, const Int& aut_A_order);

}  // namespace schur
