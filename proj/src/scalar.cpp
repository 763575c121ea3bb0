#include "massey/scalar.hpp"

#include <cctype>
#include <stdexcept>

namespace massey {

Scalar::Scalar(long numerator, long denominator) {
    if (denominator == 0) throw std::invalid_argument("zero denominator");
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Scalar::Scalar(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Scalar Scalar::parse(std::string_view text) {
    auto is_int = [](std::string_view s, bool allow_sign) {
        if (s.empty()) return false;
        std::size_t i = 0;
        if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
    if (!is_int(num, true) || (slash != std::string_view::npos && !is_int(den, false)))
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    std::string n(num);
    if (!n.empty() && n[0] == '+') n.erase(0, 1);
    mpz_class p(n, 10);
    mpz_class q = slash == std::string_view::npos ? mpz_class(1) : mpz_class(std::string(den), 10);
    if (q == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    mpq_class v(p, q);
    v.canonicalize();
    return Scalar(std::move(v));
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    value_ /= o.value_;
    return *this;
}

}  // namespace massey
