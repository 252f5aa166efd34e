#include "kbonacci/structure_function.hpp"

#include "kbonacci/errors.hpp"

namespace kbonacci {

StructureFunction::StructureFunction(BracketKind bracket, std::vector<Rational> mu)
    : bracket_(std::move(bracket)), mu_(std::move(mu)) {
    for (const auto& m : mu_)
        if (m.sign() < 0)
            throw std::domain_error("StructureFunction: deformation coefficients must be >= 0");
    if (!mu_.empty() && mu_.back().is_zero())
        throw std::invalid_argument(
            "StructureFunction: trailing deformation coefficient must be nonzero");
}

StructureFunction StructureFunction::classical(std::vector<Rational> mu) {
    return StructureFunction(ClassicalBracket{}, std::move(mu));
}

StructureFunction StructureFunction::q_deformed(Rational q, std::vector<Rational> mu) {
    return StructureFunction(QBracket(std::move(q)), std::move(mu));
}

StructureFunction StructureFunction::pq_deformed(Rational p, Rational q,
                                                 std::vector<Rational> mu) {
    return StructureFunction(PQBracket(std::move(p), std::move(q)), std::move(mu));
}

Rational StructureFunction::phi(long long n) const {
    Rational b = bracket_value(bracket_, n);
    Rational result = b;
    Rational power = b;
    for (const auto& m : mu_) {
        power *= b;
        result += m * power;
    }
    return result;
}

Rational StructureFunction::energy(long long n) const {
    return (phi(n) + phi(n + 1)) / Rational(2);
}

Spectrum StructureFunction::spectrum(long long n_max) const {
    if (n_max < 1) throw std::domain_error("spectrum: n_max must be >= 1");
    Spectrum s;
    s.rows.reserve(static_cast<size_t>(n_max) + 1);
    Rational prev_phi = phi(0);
    for (long long n = 0; n <= n_max; ++n) {
        Rational next_phi = phi(n + 1);
        Rational e = (prev_phi + next_phi) / Rational(2);
        if (!s.rows.empty() && !(e > s.rows.back().energy)) s.energy_monotonic = false;
        s.rows.push_back({n, prev_phi, e});
        prev_phi = std::move(next_phi);
    }
    return s;
}

Polynomial StructureFunction::phi_polynomial() const {
    if (!is_classical())
        throw UnsupportedFamilyError("phi_polynomial: classical bracket required");
    std::vector<Rational> coeffs(mu_.size() + 2, Rational(0));
    coeffs[1] = Rational(1);
    for (size_t j = 0; j < mu_.size(); ++j) coeffs[j + 2] = mu_[j];
    return Polynomial(std::move(coeffs));
}

std::vector<Rational> q_commutator_coefficients(const StructureFunction& sf, const Rational& q) {
    if (!sf.is_classical())
        throw UnsupportedFamilyError(
            "q_commutator_coefficients: classical bracket required");
    long long r = sf.order();
    // mu_0 = 1 implicitly; terms with s < l vanish through the zero binomial.
    auto mu_at = [&](long long j) { return j == 0 ? Rational(1) : sf.mu()[static_cast<size_t>(j - 1)]; };
    std::vector<Rational> alpha(static_cast<size_t>(r) + 2, Rational(0));
    for (long long s = 1; s <= r + 1; ++s) alpha[0] += mu_at(s - 1);
    for (long long l = 1; l <= r + 1; ++l) {
        Rational a = -q * mu_at(l - 1);
        for (long long s = l; s <= r + 1; ++s)
            a += Rational(integer_binomial(s, l)) * mu_at(s - 1);
        alpha[static_cast<size_t>(l)] = a;
    }
    return alpha;
}

}  // namespace kbonacci
