#include "wordgrid/rational.hpp"

#include "wordgrid/errors.hpp"

namespace wordgrid {

Rational frac(long num, long den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational parse_rational(const std::string& text) {
    mpq_class q;
    if (q.set_str(text, 10) != 0)
        throw ParseError("bad rational: '" + text + "'");
    if (q.get_den() == 0)
        throw ParseError("zero denominator: '" + text + "'");
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) {
    return q.get_str();
}

}  // namespace wordgrid
