// Special functions: complementary error function, normal CDF, Student-t and
// chi-square survival functions, regularized incomplete beta.
#pragma once

namespace tcct {

// Complementary error function, rational approximation accurate to ~1e-16
// relative over the full range.
double erfc_rational(double x);

// Standard normal CDF; absolute error <= 1e-12 for |x| <= 8.
double normal_cdf(double x);

// Standard normal survival P(Z > x), accurate in the far tail.
double normal_sf(double x);

// Regularized incomplete beta I_x(a, b) for a, b > 0 and x in [0, 1].
double incomplete_beta_reg(double a, double b, double x);

// P(T_df > t) for Student's t; absolute error <= 1e-10. df >= 1 required.
double student_t_sf(double t, int df);

// P(X > x) for chi-square with even df >= 2, via the closed-form finite sum
// exp(-x/2) * sum_{k<df/2} (x/2)^k / k! evaluated in log space.
double chisq_even_sf(double x, int df);

}  // namespace tcct
