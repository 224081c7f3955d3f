#include "ew/numeval.hpp"

#include <cmath>
#include <numbers>

#include "ew/errors.hpp"

namespace ew {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHitTolerance = 1e-9;

bool near_pole_point(double x) { return std::abs(x) < kHitTolerance || std::abs(x - 1.0) < kHitTolerance; }

// Borwein's accelerated alternating series for eta(x), valid for x > 0.
double eta_borwein(double x, int n) {
  // d_k = n * sum_{i<=k} (n+i-1)! 4^i / ((n-i)! (2i)!)
  std::vector<double> d(n + 1);
  double e = 1.0 / n;
  double acc = 0.0;
  for (int i = 0; i <= n; ++i) {
    acc += e;
    d[i] = n * acc;
    e *= 4.0 * (n + i) * (n - i) / ((2.0 * i + 1.0) * (2.0 * i + 2.0));
  }
  double sum = 0.0;
  for (int k = 0; k < n; ++k) {
    const double term = (d[k] - d[n]) * std::exp(-x * std::log(k + 1.0));
    sum += (k % 2 == 0) ? term : -term;
  }
  return -sum / d[n];
}

// zeta(x) for x >= 0, x != 1.
double zeta_right(double x, int n) {
  if (x > 60.0) return 1.0 + std::exp2(-x) + std::pow(3.0, -x);
  const double denom = -std::expm1((1.0 - x) * std::numbers::ln2);  // 1 - 2^{1-x}
  return eta_borwein(x, n) / denom;
}

// xi(x) for x >= 1/2.
double xi_right(double x, const NumericConfig& cfg) {
  const double z = zeta_right(x, cfg.zeta_terms);
  return std::exp(-0.5 * x * std::log(kPi) + std::lgamma(0.5 * x)) * z;
}

// Integrand exponent of K_nu: -x cosh t + nu t (nu >= 0), plus log((1+e^{-2 nu t})/2).
double kernel_log(double nu, double x, double t) {
  return -x * std::cosh(t) + nu * t + std::log1p(std::exp(-2.0 * nu * t)) - std::numbers::ln2;
}

struct Hit {
  int order = 0;
  bool any = false;
};

Hit special_points(const TermExpr& t, double s) {
  Hit h;
  for (const auto& [arg, e] : t.xi.factors())
    if (near_pole_point(arg.at(s))) {
      h.any = true;
      h.order -= e;
    }
  for (const auto& b : t.bfactors)
    for (const auto& a : b.prefactor_args())
      if (near_pole_point(a.at(s))) {
        h.any = true;
        h.order += 1;
      }
  return h;
}

double direct_term(const TermExpr& t, double s, const ChargeMap& charges, const NumericConfig& cfg) {
  double v = eval_xi_product(t.xi, s, cfg);
  for (const auto& b : t.bfactors) v *= eval_bfactor(b, s, charges, cfg);
  return v;
}

std::int64_t bind_charge(const std::string& slot, const ChargeMap& charges) {
  auto it = charges.find(slot);
  if (it != charges.end()) {
    if (it->second == 0) throw ValidationError("charge '" + slot + "' must be nonzero");
    return it->second;
  }
  try {
    std::size_t used = 0;
    long long v = std::stoll(slot, &used);
    if (used == slot.size() && v != 0) return v;
  } catch (const std::exception&) {
  }
  throw ValidationError("charge slot '" + slot + "' is not bound to an integer");
}

}  // namespace

void NumericConfig::validate() const {
  if (!(target_rel_error > 0.0 && target_rel_error < 1e-4))
    throw ValidationError("target relative error must lie in (0, 1e-4)");
  if (zeta_terms < 5) throw ValidationError("zeta_terms must be at least 5");
}

double zeta_num(double x, const NumericConfig& cfg) {
  if (x == 1.0) throw PoleError("zeta has a pole at 1");
  if (x >= 0.0) return zeta_right(x, cfg.zeta_terms);
  // zeta(x) = 2^x pi^{x-1} sin(pi x/2) Gamma(1-x) zeta(1-x)
  return std::exp2(x) * std::pow(kPi, x - 1.0) * std::sin(0.5 * kPi * x) * std::tgamma(1.0 - x) *
         zeta_right(1.0 - x, cfg.zeta_terms);
}

double xi_num(double x, const NumericConfig& cfg) {
  if (std::abs(x) < cfg.pole_tolerance || std::abs(x - 1.0) < cfg.pole_tolerance)
    throw PoleError("xi(" + std::to_string(x) + ") is at a pole");
  return xi_right(x >= 0.5 ? x : 1.0 - x, cfg);
}

double divisor_sigma(double t, std::int64_t m) {
  if (m < 1) throw ValidationError("divisor_sigma needs m >= 1");
  // Multiplicative: product over prime powers of (1 + p^t + ... + p^{kt}).
  double result = 1.0;
  std::int64_t rest = m;
  for (std::int64_t p = 2; p * p <= rest; ++p) {
    if (rest % p) continue;
    double pt = std::pow(static_cast<double>(p), t), term = 1.0, power = 1.0;
    while (rest % p == 0) {
      rest /= p;
      power *= pt;
      term += power;
    }
    result *= term;
  }
  if (rest > 1) result *= 1.0 + std::pow(static_cast<double>(rest), t);
  return result;
}

double log_bessel_k(double nu, double x, const NumericConfig& cfg) {
  if (!(x > 0.0)) throw ValidationError("bessel_k needs x > 0");
  nu = std::abs(nu);
  const double tstar = std::asinh(nu / x);
  const double gmax = kernel_log(nu, x, tstar);
  // Integrate exp(g - gmax) on [0, T] with the trapezoid rule; the integrand
  // is even and analytic, so halving the step converges geometrically.
  double T = tstar + 1.0;
  while (kernel_log(nu, x, T) - gmax > -60.0) T += 0.5 + 0.25 * T;
  const double width = 1.0 / std::sqrt(x * std::cosh(tstar) + 1e-300);
  double h = std::min(0.5, 0.5 * width);
  auto trapezoid = [&](double step) {
    double sum = 0.5 * std::exp(kernel_log(nu, x, 0.0) - gmax);
    for (double t = step; t <= T; t += step) sum += std::exp(kernel_log(nu, x, t) - gmax);
    return sum * step;
  };
  double prev = trapezoid(h);
  for (int k = 0; k < cfg.bessel_max_halvings; ++k) {
    h *= 0.5;
    const double next = trapezoid(h);
    if (std::abs(next - prev) <= 0.1 * cfg.target_rel_error * std::abs(next)) return gmax + std::log(next);
    prev = next;
  }
  return gmax + std::log(prev);
}

double bessel_k(double nu, double x, const NumericConfig& cfg) { return std::exp(log_bessel_k(nu, x, cfg)); }

double b_coefficient(double s, std::int64_t m, const NumericConfig& cfg) {
  if (m == 0) throw ValidationError("B_m needs a nonzero charge");
  if (near_pole_point(2.0 * s)) return 0.0;
  const double am = std::abs(static_cast<double>(m));
  const double log_mag = (s - 0.5) * std::log(am) + log_bessel_k(s - 0.5, 2.0 * kPi * am, cfg);
  return 2.0 / xi_num(2.0 * s, cfg) * divisor_sigma(1.0 - 2.0 * s, m < 0 ? -m : m) * std::exp(log_mag);
}

double eval_xi_product(const XiProduct& p, double s, const NumericConfig& cfg) {
  double v = 1.0;
  for (const auto& [arg, e] : p.factors()) v *= std::pow(xi_num(arg.at(s), cfg), e);
  return v;
}

double eval_bfactor(const BFactor& b, double s, const ChargeMap& charges, const NumericConfig& cfg) {
  if (b.is_a2()) throw OutOfScope("numeric kernel for the A2 building block is out of scope (symbolic only)");
  return b_coefficient(b.params.at(0).at(s), bind_charge(b.charges.at(0), charges), cfg);
}

double eval_term(const TermExpr& t, double s, const ChargeMap& charges, const NumericConfig& cfg) {
  for (const auto& b : t.bfactors)
    if (b.is_a2()) throw OutOfScope("numeric kernel for the A2 building block is out of scope (symbolic only)");
  const Hit hit = special_points(t, s);
  if (!hit.any) return direct_term(t, s, charges, cfg);
  if (hit.order > 0) return 0.0;
  if (hit.order < 0) throw PoleError("term has a pole of order " + std::to_string(-hit.order) + " at s = " + std::to_string(s));
  // Removable singularity: Richardson-extrapolated symmetric limit.
  auto sym = [&](double h) {
    return 0.5 * (direct_term(t, s + h, charges, cfg) + direct_term(t, s - h, charges, cfg));
  };
  const double h = 1e-3;
  return (4.0 * sym(0.5 * h) - sym(h)) / 3.0;
}

double eval_coeff(const CoeffExpr& c, double s, const ChargeMap& charges, const NumericConfig& cfg) {
  double v = 0.0;
  for (const auto& t : c.terms) v += eval_term(t, s, charges, cfg);
  return v;
}

}  // namespace ew
