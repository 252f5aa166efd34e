#include "kbonacci/brackets.hpp"

namespace kbonacci {

Rational q_bracket(long long n, const Rational& q) {
    if (n < 0) throw std::domain_error("q_bracket: n must be non-negative");
    if (q.sign() <= 0) throw std::domain_error("q_bracket: q must be positive");
    if (q == Rational(1)) return Rational(n);
    return (Rational(1) - q.pow(n)) / (Rational(1) - q);
}

Rational pq_bracket(long long n, const Rational& p, const Rational& q) {
    if (n < 0) throw std::domain_error("pq_bracket: n must be non-negative");
    if (p.sign() <= 0 || q.sign() <= 0)
        throw std::domain_error("pq_bracket: p and q must be positive");
    if (p == q) {
        if (n == 0) return Rational(0);
        return Rational(n) * p.pow(n - 1);
    }
    return (p.pow(n) - q.pow(n)) / (p - q);
}

Rational q_binomial(long long k, long long m, const Rational& q) {
    if (k < 0 || m < 0) throw std::domain_error("q_binomial: negative argument");
    if (q.sign() <= 0) throw std::domain_error("q_binomial: q must be positive");
    if (m > k) return Rational(0);
    if (m > k - m) m = k - m;
    // [k]! / ([m]! [k-m]!) as the usual telescoping product of brackets.
    Rational r(1);
    for (long long i = 1; i <= m; ++i) r *= q_bracket(k - m + i, q) / q_bracket(i, q);
    return r;
}

Rational bracket_value(const BracketKind& kind, long long n) {
    return std::visit(
        [n](const auto& b) -> Rational {
            using T = std::decay_t<decltype(b)>;
            if constexpr (std::is_same_v<T, ClassicalBracket>) {
                if (n < 0) throw std::domain_error("bracket_value: n must be non-negative");
                return Rational(n);
            } else if constexpr (std::is_same_v<T, QBracket>) {
                return q_bracket(n, b.q);
            } else {
                return pq_bracket(n, b.p, b.q);
            }
        },
        kind);
}

}  // namespace kbonacci
