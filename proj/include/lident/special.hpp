#ifndef LIDENT_SPECIAL_HPP
#define LIDENT_SPECIAL_HPP

namespace lident {

// sum_{n>=1} sin(nx)/n = (pi - x)/2 on (0, 2pi).
double lemma2_sin_closed(double x);

// sum_{n>=1} cos(nx)/n = -log(2 sin(x/2)) on (0, 2pi).
double lemma2_cos_closed(double x);

// Cl_2(theta) = sum_{n>=1} sin(n theta)/n^2 on [0, 2pi], abs error <= 1e-12.
double clausen(double theta);

// int_0^theta log(2 sin(x/2)) dx = -Cl_2(theta).
double log_sin_integral(double theta);

}  // namespace lident

#endif
