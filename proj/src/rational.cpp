#include "cobord/rational.hpp"

#include <cctype>

namespace cobord {

Rational parse_rational(std::string_view text) {
    size_t begin = text.find_first_not_of(" \t");
    size_t end = text.find_last_not_of(" \t");
    if (begin == std::string_view::npos)
        throw ParseError("empty rational literal");
    std::string s(text.substr(begin, end - begin + 1));

    auto check_digits = [&](const std::string& part, bool allow_sign) {
        if (part.empty())
            throw ParseError("bad rational literal '" + s + "'");
        size_t i = (allow_sign && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
        if (i == part.size())
            throw ParseError("bad rational literal '" + s + "'");
        for (; i < part.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(part[i])))
                throw ParseError("bad rational literal '" + s + "'");
    };

    size_t slash = s.find('/');
    if (slash == std::string::npos) {
        check_digits(s, true);
        return Rational(Int(s));
    }
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    check_digits(num, true);
    check_digits(den, false);
    return make_rational(Int(num), Int(den));
}

std::string to_string(const Rational& q) {
    if (q.get_den() == 1)
        return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Int& n) {
    return n.get_str();
}

Int binomial(const Int& n, const Int& k) {
    if (k < 0 || k > n)
        return 0;
    Int result;
    mpz_bin_ui(result.get_mpz_t(), n.get_mpz_t(), k.get_ui());
    return result;
}

Int factorial(long n) {
    if (n < 0)
        throw InvalidState("factorial of negative integer");
    Int result;
    mpz_fac_ui(result.get_mpz_t(), static_cast<unsigned long>(n));
    return result;
}

} // namespace cobord
