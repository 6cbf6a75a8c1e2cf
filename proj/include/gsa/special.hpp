#pragma once

namespace gsa::special {

// Inverse standard normal CDF (Wichura's AS 241, double precision;
// absolute error well below 1e-9 over (0,1)).
double norm_inv(double p);

// Standard normal CDF via erfc.
double norm_cdf(double z);

// Regularized incomplete beta I_x(a, b).
double beta_inc(double a, double b, double x);

// Inverse of I_x(a, b) in x; Newton with bisection safeguards.
double beta_inc_inv(double a, double b, double p);

// Regularized lower incomplete gamma P(a, x).
double gamma_p(double a, double x);

// Inverse of P(a, x) in x.
double gamma_p_inv(double a, double p);

// Chi-square CDF / inverse CDF with (possibly non-integer) nu degrees
// of freedom, through the Gamma(nu/2, scale 2) representation.
double chisq_cdf(double x, double nu);
double chisq_inv(double p, double nu);

}  // namespace gsa::special
