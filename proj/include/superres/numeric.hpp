#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "superres/errors.hpp"

namespace superres {

// All arithmetic in the engine is exact: arbitrary-precision integers for
// dimensions and counts, rationals for pairings and Weyl quotients.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline bool is_integral(const Rat& r) { return denominator(r) == 1; }

inline Int to_int(const Rat& r) {
    if (!is_integral(r))
        throw internal_error("expected an integral rational, got " + r.str());
    return numerator(r);
}

inline Int pow2(unsigned e) { return Int(1) << e; }

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }
inline Int int_abs(const Int& v) { return v < 0 ? Int(-v) : v; }

inline std::string int_str(const Int& v) { return v.str(); }

/// Canonical text form: "p" when integral, otherwise "p/q" in lowest terms.
inline std::string rat_str(const Rat& r) {
    if (is_integral(r)) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline Int parse_int(std::string_view s) {
    if (s.empty()) throw usage_error("empty integer literal");
    std::size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size()) throw usage_error("malformed integer literal '" + std::string(s) + "'");
    for (std::size_t j = i; j < s.size(); ++j)
        if (s[j] < '0' || s[j] > '9')
            throw usage_error("malformed integer literal '" + std::string(s) + "'");
    return Int(std::string(s));
}

/// Accepts "p" or "p/q" with q > 0 digits only.
inline Rat parse_rat(std::string_view s) {
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rat(parse_int(s));
    Int num = parse_int(s.substr(0, slash));
    std::string_view den_s = s.substr(slash + 1);
    if (!den_s.empty() && den_s[0] == '-')
        throw usage_error("malformed rational literal '" + std::string(s) + "'");
    Int den = parse_int(den_s);
    if (den == 0) throw usage_error("zero denominator in '" + std::string(s) + "'");
    return Rat(num, den);
}

} // namespace superres
