#include "knotcord/polynomial.hpp"

#include <sstream>

#include "knotcord/int_matrix.hpp"

namespace knotcord {

IntPolynomial::IntPolynomial(std::vector<mpz_class> ascending_coeffs)
    : coeffs_(std::move(ascending_coeffs)) {
    trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> ascending_coeffs) {
    coeffs_.reserve(ascending_coeffs.size());
    for (long c : ascending_coeffs) coeffs_.emplace_back(c);
    trim();
}

IntPolynomial IntPolynomial::constant(const mpz_class& c) {
    return IntPolynomial(std::vector<mpz_class>{c});
}

IntPolynomial IntPolynomial::power_minus_one(std::size_t q) {
    std::vector<mpz_class> c(q + 1);
    c[0] = -1;
    c[q] = 1;
    return IntPolynomial(std::move(c));
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const mpz_class& IntPolynomial::coeff(std::size_t i) const {
    static const mpz_class zero(0);
    return i < coeffs_.size() ? coeffs_[i] : zero;
}

const mpz_class& IntPolynomial::leading() const {
    if (coeffs_.empty()) throw ZeroPolynomial("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

mpz_class IntPolynomial::eval(const mpz_class& x) const {
    mpz_class acc(0);
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& rhs) const {
    std::vector<mpz_class> c(std::max(coeffs_.size(), rhs.coeffs_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(i) + rhs.coeff(i);
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& rhs) const {
    std::vector<mpz_class> c(std::max(coeffs_.size(), rhs.coeffs_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(i) - rhs.coeff(i);
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& rhs) const {
    if (is_zero() || rhs.is_zero()) return {};
    std::vector<mpz_class> c(coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * rhs.coeffs_[j];
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator-() const {
    std::vector<mpz_class> c(coeffs_);
    for (auto& x : c) x = -x;
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::sign_normalized() const {
    if (is_zero() || leading() > 0) return *this;
    return -*this;
}

std::string IntPolynomial::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const mpz_class& c = coeffs_[i];
        if (c == 0) continue;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        const mpz_class a = abs(c);
        if (i == 0 || a != 1) out << a.get_str();
        if (i > 0) {
            out << var;
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

mpz_class poly_resultant(const IntPolynomial& f, const IntPolynomial& g) {
    if (f.is_zero() || g.is_zero())
        throw ZeroPolynomial("resultant of the zero polynomial");
    const std::size_t m = f.degree();
    const std::size_t n = g.degree();
    if (m + n == 0) return 1; // empty Sylvester matrix
    IntMatrix s(m + n, m + n);
    // n shifted copies of f, then m shifted copies of g, coefficients descending.
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t i = 0; i <= m; ++i) s.at(r, r + i) = f.coeff(m - i);
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t i = 0; i <= n; ++i) s.at(n + r, r + i) = g.coeff(n - i);
    return s.determinant();
}

mpz_class poly_eval(const IntPolynomial& f, const mpz_class& x) { return f.eval(x); }

} // namespace knotcord
