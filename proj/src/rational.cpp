#include "profile_lab/rational.hpp"

#include <cctype>

namespace plab {

std::string rational_string(const mpq_class& q) {
    mpq_class c = q;
    c.canonicalize();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

mpq_class parse_rational(const std::string& text) {
    if (text.empty()) throw DomainError(ErrorCode::ParseError, "empty rational");
    std::size_t slash = text.find('/');
    try {
        if (slash != std::string::npos) {
            mpz_class num(text.substr(0, slash));
            mpz_class den(text.substr(slash + 1));
            if (den == 0) throw DomainError(ErrorCode::ParseError, "zero denominator");
            mpq_class q(num, den);
            q.canonicalize();
            return q;
        }
        std::size_t dot = text.find('.');
        if (dot == std::string::npos) {
            mpz_class whole(text);
            return mpq_class(whole);
        }
        std::string digits = text.substr(0, dot) + text.substr(dot + 1);
        if (digits.empty() || digits == "-" || digits == "+")
            throw DomainError(ErrorCode::ParseError, "bad decimal: " + text);
        std::size_t frac_len = text.size() - dot - 1;
        mpz_class num(digits);
        mpz_class den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
        mpq_class q(num, den);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw DomainError(ErrorCode::ParseError, "bad rational: " + text);
    }
}

} // namespace plab
