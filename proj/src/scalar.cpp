#include <symtens/scalar.hpp>

#include <ostream>
#include <sstream>

namespace symtens {

std::string Scalar::str() const {
    if (d_ == 0) return a_.get_str();
    std::ostringstream os;
    bool have_a = sgn(a_) != 0;
    if (have_a) os << a_.get_str();
    if (sgn(b_) > 0 && have_a) os << "+";
    if (b_ == -1) os << "-";
    else if (b_ != 1) os << b_.get_str() << "*";
    os << "sqrt(" << d_ << ")";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace symtens
