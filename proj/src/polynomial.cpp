#include "heegraph/polynomial.hpp"

#include <cctype>
#include <numeric>

#include "heegraph/errors.hpp"

namespace heegraph {

namespace {

std::int64_t total(const Exponents& e) noexcept {
    return std::accumulate(e.begin(), e.end(), std::int64_t{0});
}

Exponents add_exponents(const Exponents& a, const Exponents& b) noexcept {
    Exponents r{};
    for (std::size_t i = 0; i < kVarCount; ++i) r[i] = a[i] + b[i];
    return r;
}

}  // namespace

bool CanonicalOrder::operator()(const Exponents& a, const Exponents& b) const noexcept {
    const auto da = total(a);
    const auto db = total(b);
    if (da != db) return da > db;
    for (std::size_t i = kVarCount; i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

char var_symbol(Var v) noexcept {
    static constexpr char symbols[kVarCount] = {'x', 'y', 'z', 'w', 'L'};
    return symbols[static_cast<std::size_t>(v)];
}

MultiPoly::MultiPoly(long constant) {
    if (constant != 0) terms_.emplace(Exponents{}, mpz_class(constant));
}

MultiPoly::MultiPoly(const mpz_class& constant) {
    if (constant != 0) terms_.emplace(Exponents{}, constant);
}

MultiPoly MultiPoly::variable(Var v) {
    Exponents e{};
    e[static_cast<std::size_t>(v)] = 1;
    return monomial(e);
}

MultiPoly MultiPoly::monomial(const Exponents& e, const mpz_class& c) {
    MultiPoly p;
    p.add_term(e, c);
    return p;
}

mpz_class MultiPoly::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

std::int32_t MultiPoly::degree(Var v) const noexcept {
    std::int32_t d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<std::size_t>(v)]);
    return d;
}

std::int32_t MultiPoly::total_degree() const noexcept {
    return terms_.empty() ? 0 : static_cast<std::int32_t>(total(terms_.begin()->first));
}

void MultiPoly::add_term(const Exponents& e, const mpz_class& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (inserted) return;
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) r.add_term(add_exponents(ea, eb), ca * cb);
    }
    return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
    *this = *this * o;
    return *this;
}

MultiPoly operator-(MultiPoly a) {
    for (auto& [e, c] : a.terms_) c = -c;
    return a;
}

MultiPoly MultiPoly::pow(unsigned n) const {
    MultiPoly result(1);
    MultiPoly base = *this;
    while (n != 0) {
        if (n & 1U) result *= base;
        n >>= 1U;
        if (n != 0) base *= base;
    }
    return result;
}

MultiPoly MultiPoly::substitute(Var v, const MultiPoly& value) const {
    const auto idx = static_cast<std::size_t>(v);
    // Cache powers of the substituted value; exponents are small.
    std::vector<MultiPoly> powers{MultiPoly(1)};
    MultiPoly result;
    for (const auto& [e, c] : terms_) {
        const auto k = static_cast<std::size_t>(e[idx]);
        while (powers.size() <= k) powers.push_back(powers.back() * value);
        Exponents rest = e;
        rest[idx] = 0;
        result += monomial(rest, c) * powers[k];
    }
    return result;
}

MultiPoly MultiPoly::substitute(Var v, const mpz_class& value) const {
    const auto idx = static_cast<std::size_t>(v);
    MultiPoly result;
    mpz_class power;
    for (const auto& [e, c] : terms_) {
        mpz_pow_ui(power.get_mpz_t(), value.get_mpz_t(), static_cast<unsigned long>(e[idx]));
        Exponents rest = e;
        rest[idx] = 0;
        result.add_term(rest, c * power);
    }
    return result;
}

mpz_class MultiPoly::evaluate(const std::array<mpz_class, kVarCount>& values) const {
    mpz_class sum = 0;
    mpz_class term;
    mpz_class power;
    for (const auto& [e, c] : terms_) {
        term = c;
        for (std::size_t i = 0; i < kVarCount; ++i) {
            if (e[i] == 0) continue;
            mpz_pow_ui(power.get_mpz_t(), values[i].get_mpz_t(), static_cast<unsigned long>(e[i]));
            term *= power;
        }
        sum += term;
    }
    return sum;
}

std::vector<mpz_class> MultiPoly::univariate_coefficients(Var v) const {
    const auto idx = static_cast<std::size_t>(v);
    std::vector<mpz_class> coeffs(static_cast<std::size_t>(degree(v)) + 1, 0);
    for (const auto& [e, c] : terms_) {
        for (std::size_t i = 0; i < kVarCount; ++i) {
            if (i != idx && e[i] != 0) {
                throw std::invalid_argument(std::string("polynomial is not univariate in ") + var_symbol(v));
            }
        }
        coeffs[static_cast<std::size_t>(e[idx])] = c;
    }
    return coeffs;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const bool negative = c < 0;
        if (first) {
            if (negative) out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        const mpz_class magnitude = abs(c);
        const bool constant = total(e) == 0;
        bool need_star = false;
        if (constant || magnitude != 1) {
            out += magnitude.get_str();
            need_star = true;
        }
        for (std::size_t i = 0; i < kVarCount; ++i) {
            if (e[i] == 0) continue;
            if (need_star) out += '*';
            out += var_symbol(static_cast<Var>(i));
            if (e[i] != 1) {
                out += '^';
                out += std::to_string(e[i]);
            }
            need_star = true;
        }
    }
    return out;
}

namespace {

class PolyParser {
public:
    explicit PolyParser(std::string_view text) : text_(text) {}

    MultiPoly parse() {
        MultiPoly result;
        skip_space();
        if (at_end()) fail("empty polynomial");
        int sign = 1;
        if (peek() == '-' || peek() == '+') {
            sign = next() == '-' ? -1 : 1;
        }
        while (true) {
            auto [e, c] = parse_term();
            result.add_term(e, sign * c);
            skip_space();
            if (at_end()) break;
            const char op = next();
            if (op != '+' && op != '-') fail(std::string("expected '+' or '-', found '") + op + "'");
            sign = op == '-' ? -1 : 1;
        }
        return result;
    }

private:
    std::pair<Exponents, mpz_class> parse_term() {
        Exponents e{};
        mpz_class c = 1;
        while (true) {
            skip_space();
            if (at_end()) fail("unexpected end of input");
            const char ch = peek();
            if (std::isdigit(static_cast<unsigned char>(ch)) != 0) {
                c *= mpz_class(read_digits());
            } else {
                const auto idx = var_index(next());
                std::int64_t power = 1;
                skip_space();
                if (!at_end() && peek() == '^') {
                    ++pos_;
                    skip_space();
                    power = std::stoll(read_digits());
                }
                e[idx] += static_cast<std::int32_t>(power);
            }
            skip_space();
            if (at_end() || peek() != '*') break;
            ++pos_;
        }
        return {e, c};
    }

    std::size_t var_index(char ch) {
        for (std::size_t i = 0; i < kVarCount; ++i) {
            if (var_symbol(static_cast<Var>(i)) == ch) return i;
        }
        fail(std::string("unknown variable '") + ch + "'");
    }

    std::string read_digits() {
        const auto start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())) != 0) ++pos_;
        if (start == pos_) fail("expected digits");
        return std::string(text_.substr(start, pos_ - start));
    }

    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek())) != 0) ++pos_;
    }
    [[nodiscard]] bool at_end() const { return pos_ >= text_.size(); }
    [[nodiscard]] char peek() const { return text_[pos_]; }
    char next() { return text_[pos_++]; }

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(0, "polynomial, column " + std::to_string(pos_ + 1) + ": " + what);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

MultiPoly MultiPoly::parse(std::string_view text) { return PolyParser(text).parse(); }

MultiPoly shifted_power(Var v, std::int64_t shift, unsigned n) {
    MultiPoly base = MultiPoly::variable(v);
    base += MultiPoly(static_cast<long>(shift));
    return base.pow(n);
}

}  // namespace heegraph
