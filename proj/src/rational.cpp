#include "rational.hpp"

namespace bkit {

std::string rational_to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::optional<Rational> rational_from_string(const std::string& s) {
    if (s.empty()) return std::nullopt;
    auto slash = s.find('/');
    std::string num = (slash == std::string::npos) ? s : s.substr(0, slash);
    std::string den = (slash == std::string::npos) ? "1" : s.substr(slash + 1);
    if (num.empty() || den.empty()) return std::nullopt;
    auto digits_ok = [](const std::string& t, bool sign_ok) {
        size_t i = 0;
        if (sign_ok && (t[0] == '-' || t[0] == '+')) i = 1;
        if (i >= t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    if (!digits_ok(num, true) || !digits_ok(den, false)) return std::nullopt;
    BigInt n(num), d(den);
    if (d == 0) return std::nullopt;
    Rational q(n, d);
    q.canonicalize();
    return q;
}

std::optional<Rational> rational_sqrt(const Rational& q) {
    if (sgn(q) < 0) return std::nullopt;
    if (sgn(q) == 0) return Rational(0);
    BigInt num_root, den_root;
    if (mpz_perfect_square_p(q.get_num().get_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(q.get_den().get_mpz_t()) == 0) return std::nullopt;
    mpz_sqrt(num_root.get_mpz_t(), q.get_num().get_mpz_t());
    mpz_sqrt(den_root.get_mpz_t(), q.get_den().get_mpz_t());
    return Rational(num_root, den_root);
}

} // namespace bkit
