#include "kbonacci/polynomial.hpp"

namespace kbonacci {

Polynomial Polynomial::monomial(int degree, Rational scale) {
    std::vector<Rational> c(static_cast<size_t>(degree) + 1, Rational(0));
    c.back() = std::move(scale);
    return Polynomial(std::move(c));
}

Rational Polynomial::eval(const Rational& x) const {
    Rational r(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

Polynomial Polynomial::shifted(const Rational& a) const {
    // Expand sum_i c_i (x+a)^i via the binomial theorem.
    std::vector<Rational> out(c_.size(), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        Rational apow(1);
        for (long long j = static_cast<long long>(i); j >= 0; --j) {
            out[static_cast<size_t>(j)] +=
                c_[i] * Rational(integer_binomial(static_cast<long long>(i), j)) * apow;
            apow *= a;
        }
    }
    return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
    if (c_.empty() || o.c_.empty()) {
        c_.clear();
        return *this;
    }
    std::vector<Rational> out(c_.size() + o.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
    c_ = std::move(out);
    trim();
    return *this;
}

Polynomial& Polynomial::scale(const Rational& s) {
    for (auto& x : c_) x *= s;
    trim();
    return *this;
}

}  // namespace kbonacci
