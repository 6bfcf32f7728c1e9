#include "lsk/rational.hpp"

#include <cctype>

namespace lsk {

std::string to_string(const Rational& q) {
    return q.get_str();
}

namespace {

// digits, no leading zero unless the number is exactly "0"
bool valid_digit_run(const std::string& s, std::size_t begin, std::size_t end) {
    if (begin >= end) return false;
    if (s[begin] == '0' && end - begin > 1) return false;
    for (std::size_t i = begin; i < end; ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

std::optional<Rational> rational_from_string(const std::string& text) {
    std::size_t pos = 0;
    if (pos < text.size() && text[pos] == '-') ++pos;
    std::size_t slash = text.find('/', pos);
    if (slash == std::string::npos) {
        if (!valid_digit_run(text, pos, text.size())) return std::nullopt;
    } else {
        if (!valid_digit_run(text, pos, slash)) return std::nullopt;
        if (!valid_digit_run(text, slash + 1, text.size())) return std::nullopt;
        if (text.compare(slash + 1, std::string::npos, "0") == 0) return std::nullopt;
    }
    Rational q(text);
    q.canonicalize();
    return q;
}

bool is_canonical_rational_string(const std::string& text) {
    auto q = rational_from_string(text);
    return q && to_string(*q) == text;
}

Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

}  // namespace lsk
