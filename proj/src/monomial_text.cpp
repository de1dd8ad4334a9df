#include "hms/monomial_text.hpp"

#include <cctype>

namespace hms {

namespace {

[[noreturn]] void fail(const std::string& text, std::size_t pos, const std::string& why) {
    throw input_error("monomial '" + text + "' at position " + std::to_string(pos) + ": " + why);
}

}  // namespace

HalfMonomial parse_monomial(const std::string& text, int n) {
    if (n < 1) throw input_error("parse_monomial: n must be >= 1");
    HalfMonomial m;
    m.doubled.assign(n + 2, 0);
    if (text == "1") return m;
    if (text.empty()) throw input_error("empty monomial");

    std::size_t pos = 0;
    auto read_uint = [&](const char* what) -> long {
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            fail(text, pos, std::string("expected ") + what);
        long v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + (text[pos] - '0');
            if (v > 1'000'000) fail(text, pos, "exponent too large");
            ++pos;
        }
        return v;
    };

    while (true) {
        if (pos >= text.size() || text[pos] != 'z') fail(text, pos, "expected 'z'");
        ++pos;
        const long index = read_uint("variable index");
        if (index > n + 1) fail(text, pos, "variable index exceeds n+1");

        long doubled = 2;  // implicit exponent 1
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            const long p = read_uint("exponent");
            if (pos < text.size() && text[pos] == '/') {
                ++pos;
                const long q = read_uint("denominator");
                if (q != 2) fail(text, pos, "denominator must be 2");
                if (p % 2 == 0) fail(text, pos, "numerator over 2 must be odd");
                doubled = p;
            } else {
                doubled = 2 * p;
            }
        }
        m.doubled[index] += static_cast<int>(doubled);

        if (pos == text.size()) break;
        if (text[pos] != '*') fail(text, pos, "expected '*'");
        ++pos;
    }
    return m;
}

std::string print_monomial(const HalfMonomial& m) {
    std::string out;
    for (std::size_t j = 0; j < m.doubled.size(); ++j) {
        const int d = m.doubled[j];
        if (d == 0) continue;
        if (!out.empty()) out += '*';
        out += 'z';
        out += std::to_string(j);
        if (d == 2) continue;
        out += '^';
        if (d % 2 == 0) {
            out += std::to_string(d / 2);
        } else {
            out += std::to_string(d);
            out += "/2";
        }
    }
    return out.empty() ? "1" : out;
}

}  // namespace hms
