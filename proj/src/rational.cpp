#include "ringlab/rational.hpp"

#include "ringlab/errors.hpp"

namespace ringlab {

std::string to_fraction_string(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

Rational parse_fraction(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(s));
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0) throw Error(Err::SchemaError, "zero denominator in \"" + s + "\"");
        return Rational(num, den);
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        throw Error(Err::SchemaError, "bad rational \"" + s + "\"");
    }
}

bool is_integer(const Rational& r) { return denominator(r) == 1; }

long long to_integer(const Rational& r) {
    if (!is_integer(r)) throw Error(Err::SchemaError, "not an integer: " + to_fraction_string(r));
    return numerator(r).convert_to<long long>();
}

} // namespace ringlab
