#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "ew/symzeta.hpp"

namespace ew {

struct NumericConfig {
  /// Relative accuracy goal for zeta, xi and Bessel evaluations.
  double target_rel_error = 1e-10;
  /// Distance from 0 or 1 within which xi_num reports a pole.
  double pole_tolerance = 1e-12;
  /// Terms in the alternating zeta series (Borwein); error ~ 5.8^-n.
  int zeta_terms = 40;
  /// Maximum step halvings in the Bessel quadrature.
  int bessel_max_halvings = 12;

  /// Throws ValidationError unless 0 < target_rel_error < 1e-4.
  void validate() const;
};

/// Riemann zeta on the real line, x != 1.
double zeta_num(double x, const NumericConfig& cfg = {});

/// Completed zeta pi^{-x/2} Gamma(x/2) zeta(x). Throws PoleError near 0 and 1.
double xi_num(double x, const NumericConfig& cfg = {});

/// sum_{d | m} d^t for m >= 1.
double divisor_sigma(double t, std::int64_t m);

/// log K_nu(x) for x > 0; finite where K_nu(x) itself would underflow.
double log_bessel_k(double nu, double x, const NumericConfig& cfg = {});
double bessel_k(double nu, double x, const NumericConfig& cfg = {});

/// B_m(s) = 2/xi(2s) |m|^{s-1/2} sigma_{1-2s}(|m|) K_{s-1/2}(2 pi |m|); zero when 2s is 0 or 1.
double b_coefficient(double s, std::int64_t m, const NumericConfig& cfg = {});

/// Charge bindings: slot name -> nonzero integer. Slots spelled as integers
/// need no binding.
using ChargeMap = std::map<std::string, std::int64_t>;

double eval_xi_product(const XiProduct& p, double s, const NumericConfig& cfg = {});
/// A1 blocks only; A2 blocks throw OutOfScope.
double eval_bfactor(const BFactor& b, double s, const ChargeMap& charges, const NumericConfig& cfg = {});

/// Value of a term at real s. When s sits on cancelling poles (finite
/// order 0) the value is taken as a symmetric limit; positive order gives 0
/// and negative order throws PoleError.
double eval_term(const TermExpr& t, double s, const ChargeMap& charges, const NumericConfig& cfg = {});
double eval_coeff(const CoeffExpr& c, double s, const ChargeMap& charges, const NumericConfig& cfg = {});

}  // namespace ew
