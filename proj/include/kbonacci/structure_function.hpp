#pragma once

#include "kbonacci/brackets.hpp"
#include "kbonacci/polynomial.hpp"

#include <vector>

namespace kbonacci {

struct SpectrumRow {
    long long n;
    Rational phi;
    Rational energy;
    friend bool operator==(const SpectrumRow& a, const SpectrumRow& b) {
        return a.n == b.n && a.phi == b.phi && a.energy == b.energy;
    }
};

struct Spectrum {
    std::vector<SpectrumRow> rows;
    bool energy_monotonic = true;
    friend bool operator==(const Spectrum& a, const Spectrum& b) {
        return a.rows == b.rows && a.energy_monotonic == b.energy_monotonic;
    }
};

/// A deformed-oscillator structure function
///
///   phi(n) = B(n) + mu_1 B(n)^2 + ... + mu_r B(n)^{r+1}
///
/// where B is the bracket of the chosen family. The mu list is 1-based in
/// spirit (mu()[0] multiplies the square); an empty list is the undeformed
/// oscillator. Construction enforces mu_i >= 0 and a nonzero trailing mu_r.
class StructureFunction {
public:
    StructureFunction(BracketKind bracket, std::vector<Rational> mu);

    static StructureFunction classical(std::vector<Rational> mu = {});
    static StructureFunction q_deformed(Rational q, std::vector<Rational> mu = {});
    static StructureFunction pq_deformed(Rational p, Rational q, std::vector<Rational> mu = {});

    const BracketKind& bracket() const { return bracket_; }
    const std::vector<Rational>& mu() const { return mu_; }

    /// r, the number of deformation coefficients.
    int order() const { return static_cast<int>(mu_.size()); }
    /// K = r + 1, the degree of phi as a polynomial in the bracket.
    int degree() const { return order() + 1; }

    bool is_classical() const { return std::holds_alternative<ClassicalBracket>(bracket_); }

    Rational phi(long long n) const;

    /// E_n = (phi(n) + phi(n+1)) / 2, exactly.
    Rational energy(long long n) const;

    /// Levels 0..n_max inclusive; energy_monotonic reports strict growth.
    Spectrum spectrum(long long n_max) const;

    /// phi as an exact polynomial in n. Classical bracket only.
    Polynomial phi_polynomial() const;

    friend bool operator==(const StructureFunction& a, const StructureFunction& b) {
        return a.bracket_ == b.bracket_ && a.mu_ == b.mu_;
    }

private:
    BracketKind bracket_;
    std::vector<Rational> mu_;
};

/// Coefficients (alpha_0..alpha_{r+1}) of the q-commutator form of the basic
/// relation: phi(n+1) - q*phi(n) = sum_l alpha_l n^l as a polynomial identity.
/// Classical bracket only; q is unconstrained here.
std::vector<Rational> q_commutator_coefficients(const StructureFunction& sf, const Rational& q);

}  // namespace kbonacci
