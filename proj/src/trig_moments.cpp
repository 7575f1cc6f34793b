#include <symtens/trig_moments.hpp>

namespace symtens {

namespace {

Rational wallis(int a, int b) {
    Rational r(double_factorial(a - 1) * double_factorial(b - 1), double_factorial(a + b));
    r.canonicalize();
    return r;
}

}  // namespace

PiLinear alpha_moment(int a, int b) {
    if (a < 0 || b < 0) throw config_error("alpha_moment: negative exponent");
    if (a % 2 == 1) return PiLinear(Scalar(0), Scalar(0));
    if (b % 2 == 1) return PiLinear(Scalar(2 * wallis(a, b)), Scalar(0));
    return PiLinear(Scalar(0), Scalar(wallis(a, b)));
}

Rational circle_moment(int c, int d) {
    if (c < 0 || d < 0) throw config_error("circle_moment: negative exponent");
    if (c % 2 == 1 || d % 2 == 1) return Rational(0);
    return 2 * wallis(c, d);
}

}  // namespace symtens
