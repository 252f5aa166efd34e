#pragma once

#include "kbonacci/rational.hpp"

#include <variant>

namespace kbonacci {

/// Undeformed bracket: [n] = n.
struct ClassicalBracket {
    friend bool operator==(const ClassicalBracket&, const ClassicalBracket&) { return true; }
};

/// One-parameter deformation [n]_q = (1-q^n)/(1-q), q > 0.
struct QBracket {
    explicit QBracket(Rational q_) : q(std::move(q_)) {
        if (q.sign() <= 0) throw std::domain_error("QBracket: q must be positive");
    }
    Rational q;
    friend bool operator==(const QBracket& a, const QBracket& b) { return a.q == b.q; }
};

/// Two-parameter deformation [n]_{p,q} = (p^n-q^n)/(p-q), p, q > 0.
struct PQBracket {
    PQBracket(Rational p_, Rational q_) : p(std::move(p_)), q(std::move(q_)) {
        if (p.sign() <= 0 || q.sign() <= 0)
            throw std::domain_error("PQBracket: p and q must be positive");
    }
    Rational p, q;
    friend bool operator==(const PQBracket& a, const PQBracket& b) {
        return a.p == b.p && a.q == b.q;
    }
};

using BracketKind = std::variant<ClassicalBracket, QBracket, PQBracket>;

/// [n]_q = (1-q^n)/(1-q); equals n at q = 1 (continuous limit).
Rational q_bracket(long long n, const Rational& q);

/// [n]_{p,q} = (p^n-q^n)/(p-q); equals n*p^(n-1) at p = q and [n]_q at p = 1.
Rational pq_bracket(long long n, const Rational& p, const Rational& q);

/// Gaussian binomial built from q-brackets; ordinary binomial at q = 1,
/// and 0 when m > k.
Rational q_binomial(long long k, long long m, const Rational& q);

/// Evaluates whichever bracket `kind` denotes at level n.
Rational bracket_value(const BracketKind& kind, long long n);

}  // namespace kbonacci
