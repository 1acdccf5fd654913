#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "knotcord/errors.hpp"

namespace knotcord {

/// Univariate integer polynomial, coefficients stored ascending by degree.
/// Trailing zero coefficients are trimmed so the leading coefficient is
/// nonzero unless the polynomial is zero.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<mpz_class> ascending_coeffs);
    IntPolynomial(std::initializer_list<long> ascending_coeffs);

    static IntPolynomial constant(const mpz_class& c);
    /// t^q - 1
    static IntPolynomial power_minus_one(std::size_t q);

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree of the zero polynomial is reported as 0.
    std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
    const mpz_class& coeff(std::size_t i) const;
    const std::vector<mpz_class>& coefficients() const { return coeffs_; }
    const mpz_class& leading() const;

    mpz_class eval(const mpz_class& x) const;
    mpz_class operator()(const mpz_class& x) const { return eval(x); }

    IntPolynomial operator+(const IntPolynomial& rhs) const;
    IntPolynomial operator-(const IntPolynomial& rhs) const;
    IntPolynomial operator*(const IntPolynomial& rhs) const;
    IntPolynomial operator-() const;
    bool operator==(const IntPolynomial& rhs) const = default;

    /// Same polynomial up to sign, with positive leading coefficient.
    IntPolynomial sign_normalized() const;

    std::string to_string(const std::string& var = "t") const;

private:
    std::vector<mpz_class> coeffs_;
    void trim();
};

/// Resultant of two nonzero integer polynomials, computed as the determinant
/// of the Sylvester matrix with f's coefficient rows on top.
/// Throws ZeroPolynomial if either input is zero.
mpz_class poly_resultant(const IntPolynomial& f, const IntPolynomial& g);

mpz_class poly_eval(const IntPolynomial& f, const mpz_class& x);

} // namespace knotcord
