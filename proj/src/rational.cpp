#include "netrate/rational.hpp"

#include <cctype>

#include "netrate/errors.hpp"

namespace netrate {

Rational::Rational(long numerator, long denominator) : v_(0) {
    if (denominator == 0) {
        throw ParseError("rational with zero denominator");
    }
    v_ = numerator;
    v_ /= mpq_class(denominator);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) {
        throw ParseError("division by zero rational");
    }
    v_ /= o.v_;
    return *this;
}

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

} // namespace

Rational Rational::parse(const std::string& text) {
    std::string s = text;
    // trim surrounding whitespace
    size_t b = s.find_first_not_of(" \t\r\n");
    size_t e = s.find_last_not_of(" \t\r\n");
    if (b == std::string::npos) {
        throw ParseError("empty rational literal");
    }
    s = s.substr(b, e - b + 1);

    bool negative = false;
    if (s[0] == '+' || s[0] == '-') {
        negative = (s[0] == '-');
        s.erase(0, 1);
    }
    if (s.empty()) {
        throw ParseError("malformed rational literal '" + text + "'");
    }

    mpq_class value;
    if (auto slash = s.find('/'); slash != std::string::npos) {
        std::string num = s.substr(0, slash);
        std::string den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) {
            throw ParseError("malformed fraction '" + text + "'");
        }
        mpz_class n(num, 10), d(den, 10);
        if (d == 0) {
            throw ParseError("zero denominator in '" + text + "'");
        }
        value = mpq_class(n);
        value /= mpq_class(d);
    } else if (auto dot = s.find('.'); dot != std::string::npos) {
        std::string ip = s.substr(0, dot);
        std::string fp = s.substr(dot + 1);
        if (ip.empty()) ip = "0";
        if (fp.empty()) fp = "0";
        if (!all_digits(ip) || !all_digits(fp)) {
            throw ParseError("malformed decimal '" + text + "'");
        }
        mpz_class scaled(ip + fp, 10);
        mpz_class den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, fp.size());
        value = mpq_class(scaled);
        value /= mpq_class(den);
    } else {
        if (!all_digits(s)) {
            throw ParseError("malformed rational literal '" + text + "'");
        }
        value = mpq_class(mpz_class(s, 10));
    }
    if (negative) value = -value;
    return Rational(std::move(value));
}

std::string Rational::str() const {
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

long Rational::denominator_long() const {
    mpz_class d = v_.get_den();
    if (!d.fits_slong_p()) {
        throw ParseError("rational denominator too large for machine integer");
    }
    return d.get_si();
}

long Rational::numerator_long() const {
    mpz_class n = v_.get_num();
    if (!n.fits_slong_p()) {
        throw ParseError("rational numerator too large for machine integer");
    }
    return n.get_si();
}

long Rational::floor_scaled(long scale) const {
    mpz_class num = v_.get_num() * scale;
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), v_.get_den().get_mpz_t());
    if (!q.fits_slong_p()) {
        throw ParseError("scaled rational too large for machine integer");
    }
    return q.get_si();
}

} // namespace netrate
