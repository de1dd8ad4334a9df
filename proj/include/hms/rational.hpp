#ifndef HMS_RATIONAL_HPP
#define HMS_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "hms/errors.hpp"

namespace hms {

using Int = boost::multiprecision::cpp_int;
// Always stored in lowest terms with positive denominator.
using Rat = boost::multiprecision::cpp_rational;

// Parses "p" or "p/q" with optional sign; q must be nonzero.
inline Rat parse_rational(const std::string& text) {
    if (text.empty()) throw input_error("empty rational string");
    const auto slash = text.find('/');
    Int num, den = 1;
    try {
        if (slash == std::string::npos) {
            num = Int(text);
        } else {
            num = Int(text.substr(0, slash));
            den = Int(text.substr(slash + 1));
        }
    } catch (const std::runtime_error& e) {
        throw input_error("bad rational '" + text + "': " + e.what());
    }
    if (den == 0) throw input_error("rational with zero denominator: " + text);
    return Rat(num, den);
}

inline std::string rational_to_string(const Rat& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace hms

#endif
