#include "s2rank/rational.hpp"

#include <cctype>
#include <ostream>

namespace s2rank {

namespace {

bool all_digits(std::string_view t) {
    if (t.empty()) return false;
    for (char c : t) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

} // namespace

Rational::Rational(long num, long den) : v_(static_cast<signed long>(num), static_cast<signed long>(den)) {
    if (den == 0) throw Error("rational with zero denominator");
    v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
    if (den == 0) throw Error("rational with zero denominator");
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw Error("rational division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::parse(std::string_view text) {
    std::string_view t = text;
    while (!t.empty() && (t.front() == ' ' || t.front() == '\t')) t.remove_prefix(1);
    while (!t.empty() && (t.back() == ' ' || t.back() == '\t' || t.back() == '\r')) t.remove_suffix(1);
    if (t.empty()) throw Error("empty rational literal");

    bool negative = false;
    if (t.front() == '+' || t.front() == '-') {
        negative = (t.front() == '-');
        t.remove_prefix(1);
        if (t.empty()) throw Error("bare sign is not a rational literal");
    }

    mpq_class value;
    if (auto slash = t.find('/'); slash != std::string_view::npos) {
        std::string_view num = t.substr(0, slash);
        std::string_view den = t.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw Error("malformed fraction '" + std::string(text) + "'");
        mpz_class d(std::string(den), 10);
        if (d == 0) throw Error("fraction with zero denominator '" + std::string(text) + "'");
        value = mpq_class(mpz_class(std::string(num), 10), d);
    } else if (auto dot = t.find('.'); dot != std::string_view::npos) {
        std::string_view ip = t.substr(0, dot);
        std::string_view fp = t.substr(dot + 1);
        if (fp.empty() || !all_digits(fp) || (!ip.empty() && !all_digits(ip)))
            throw Error("malformed decimal '" + std::string(text) + "'");
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, fp.size());
        mpz_class whole = ip.empty() ? mpz_class(0) : mpz_class(std::string(ip), 10);
        mpz_class frac(std::string(fp), 10);
        value = mpq_class(whole * scale + frac, scale);
    } else {
        if (!all_digits(t)) throw Error("malformed rational '" + std::string(text) + "'");
        value = mpq_class(mpz_class(std::string(t), 10));
    }

    value.canonicalize();
    if (negative) value = -value;
    return Rational(value);
}

std::string Rational::str() const {
    std::string out = v_.get_num().get_str();
    if (v_.get_den() != 1) {
        out += '/';
        out += v_.get_den().get_str();
    }
    return out;
}

std::optional<std::string> Rational::decimal_str() const {
    if (is_integer()) return numerator().get_str();

    mpz_class den = denominator();
    unsigned twos = 0, fives = 0;
    while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) {
        mpz_divexact_ui(den.get_mpz_t(), den.get_mpz_t(), 2);
        ++twos;
    }
    while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) {
        mpz_divexact_ui(den.get_mpz_t(), den.get_mpz_t(), 5);
        ++fives;
    }
    if (den != 1) return std::nullopt;

    const unsigned k = twos > fives ? twos : fives;
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, k);
    mpz_class digits = numerator() * (scale / denominator());

    std::string body = mpz_class(abs(digits)).get_str();
    if (body.size() <= k) body.insert(0, k + 1 - body.size(), '0');
    body.insert(body.size() - k, ".");
    if (sgn(digits) < 0) body.insert(0, "-");
    return body;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

} // namespace s2rank
