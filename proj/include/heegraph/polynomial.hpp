#pragma once

// Exact sparse multivariate polynomials over Z in the fixed variable set
// x, y, z, w, L (L stands for lambda).  Coefficients are GMP integers,
// exponents machine integers.  Terms are kept in canonical order
// (graded reverse-lexicographic, highest first), so equal polynomials
// always print identically.

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace heegraph {

enum class Var : std::uint8_t { x = 0, y = 1, z = 2, w = 3, L = 4 };

inline constexpr std::size_t kVarCount = 5;

using Exponents = std::array<std::int32_t, kVarCount>;

/// Canonical term order: higher total degree first; among equal degree the
/// term with the smaller exponent in the last differing variable comes first.
struct CanonicalOrder {
    bool operator()(const Exponents& a, const Exponents& b) const noexcept;
};

class MultiPoly {
public:
    using TermMap = std::map<Exponents, mpz_class, CanonicalOrder>;

    MultiPoly() = default;
    MultiPoly(long constant);  // NOLINT: implicit integer promotion is intended
    explicit MultiPoly(const mpz_class& constant);

    static MultiPoly variable(Var v);
    static MultiPoly monomial(const Exponents& e, const mpz_class& c = 1);
    /// Parses the textual form produced by to_string().  Throws ParseError.
    static MultiPoly parse(std::string_view text);

    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
    [[nodiscard]] std::size_t term_count() const noexcept { return terms_.size(); }
    [[nodiscard]] const TermMap& terms() const noexcept { return terms_; }

    /// Coefficient of the monomial with exponents e (0 if absent).
    [[nodiscard]] mpz_class coefficient(const Exponents& e) const;
    [[nodiscard]] std::int32_t degree(Var v) const noexcept;
    [[nodiscard]] std::int32_t total_degree() const noexcept;

    /// Adds c * x^e in place.
    void add_term(const Exponents& e, const mpz_class& c);

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const MultiPoly& o);

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator-(MultiPoly a);
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

    [[nodiscard]] MultiPoly pow(unsigned n) const;

    /// Replaces every occurrence of v by the polynomial `value`.
    [[nodiscard]] MultiPoly substitute(Var v, const MultiPoly& value) const;
    /// Evaluates v at an integer, keeping the other variables.
    [[nodiscard]] MultiPoly substitute(Var v, const mpz_class& value) const;
    /// Full evaluation; `values` is indexed by Var.
    [[nodiscard]] mpz_class evaluate(const std::array<mpz_class, kVarCount>& values) const;

    /// Univariate view in v: coefficients indexed by the power of v.  Requires
    /// that no other variable occurs.
    [[nodiscard]] std::vector<mpz_class> univariate_coefficients(Var v) const;

    [[nodiscard]] std::string to_string() const;

private:
    TermMap terms_;
};

char var_symbol(Var v) noexcept;

/// Binomial-expanded (x - 1)^n as used by the Bollobas-Riordan sum.
MultiPoly shifted_power(Var v, std::int64_t shift, unsigned n);

}  // namespace heegraph
