#pragma once

#include <symtens/scalar.hpp>

namespace symtens {

// Integral of cos^a(t) sin^b(t) over [0, pi].  Zero for odd a; rational for
// odd b; a rational multiple of pi when a and b are both even.
PiLinear alpha_moment(int a, int b);

// Integral of cos^c(t) sin^d(t) over [0, 2*pi], divided by pi.  Equals
// 2 (c-1)!! (d-1)!! / (c+d)!! when c and d are both even, else zero.
Rational circle_moment(int c, int d);

}  // namespace symtens
