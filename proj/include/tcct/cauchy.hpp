// Cauchy score transforms: the p-value to tan((0.5 - p)*pi) map, its inverse
// survival map, and the normal-score transforms h and f built on them.
#pragma once

namespace tcct {

// tan((0.5 - p) * pi) for p in [0, 1]. Returns +inf at p = 0 and -inf at
// p = 1. Evaluated through the cotangent identity so both tails keep full
// relative precision; for p < 1e-15 the series limit 1/(p*pi) is used.
double cauchy_transform(double p);

// 0.5 - atan(t)/pi for any extended-real t; +inf maps to 0, -inf to 1, and
// t > 1e15 short-circuits to 1/(t*pi). Large |t| is evaluated via
// atan(1/t) so small survival probabilities keep relative precision.
double cauchy_survival(double t);

// h(x) = tan((2*Phi(|x|) - 1.5) * pi) for finite x; h(0) = -inf by
// convention. Equals cauchy_transform applied to the two-sided normal
// p-value erfc(|x|/sqrt(2)).
double h_transform(double x);

// f(x) = h(x) when h(x) > 0 and 0 otherwise.
double f_transform(double x);

}  // namespace tcct
