#ifndef FLAGTUTTE_RATIONAL_HPP
#define FLAGTUTTE_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

#include "error.hpp"

namespace flagtutte {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "-p" or "p/q" into a canonical rational.
inline Rational parse_rational(std::string_view text) {
    std::string s(text);
    auto trim = [](std::string& t) {
        auto b = t.find_first_not_of(" \t");
        auto e = t.find_last_not_of(" \t");
        t = (b == std::string::npos) ? std::string() : t.substr(b, e - b + 1);
    };
    trim(s);
    if (s.empty()) fail(ErrorCode::ParseError, "empty rational literal");
    auto valid_int = [](std::string_view t) {
        if (t.empty()) return false;
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!num.empty() && num[0] == '+') num.erase(0, 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
        fail(ErrorCode::ParseError, "malformed rational literal '" + s + "'");
    Integer n(num, 10), d(den, 10);
    if (d == 0) fail(ErrorCode::ParseError, "zero denominator in '" + s + "'");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(10); }

inline int sign(const Rational& q) { return sgn(q); }

/// Exact q^k for integer k >= 0.
inline Rational pow(const Rational& q, unsigned k) {
    Rational out(1);
    for (unsigned i = 0; i < k; ++i) out *= q;
    return out;
}

}  // namespace flagtutte

#endif  // FLAGTUTTE_RATIONAL_HPP
