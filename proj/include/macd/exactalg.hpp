#pragma once

// Exact arithmetic kernel: arbitrary-precision rationals, Laurent
// polynomials in the parameters (q, t, a), and the fraction field
// K = Q(q,t,a) with a canonical reduced representation.
//
// Everything here is immutable after construction and safe for
// concurrent use.

#include <gmpxx.h>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace macd {

using BigInt = mpz_class;
using BigRat = mpq_class;

/// Division by an exactly-zero field element.
struct DivisionByZero : std::domain_error {
    DivisionByZero() : std::domain_error("macd: division by zero") {}
};

/// An exactness guarantee was violated (non-divisible exact division,
/// singular interpolation system, residual singular part...). Indicates
/// a bug in the arithmetic kernel or corrupted input, never user error.
struct ArithmeticCorruption : std::logic_error {
    explicit ArithmeticCorruption(const std::string& what)
        : std::logic_error("macd: arithmetic corruption: " + what) {}
};

struct DimensionMismatch : std::invalid_argument {
    explicit DimensionMismatch(const std::string& what)
        : std::invalid_argument("macd: dimension mismatch: " + what) {}
};

// ---------------------------------------------------------------------------
// Monomials in the parameters q, t, a. Exponents may be negative.
// ---------------------------------------------------------------------------

struct Mono3 {
    int q = 0;
    int t = 0;
    int a = 0;

    int degree() const { return q + t + a; }
    bool is_unit() const { return q == 0 && t == 0 && a == 0; }

    Mono3 operator+(const Mono3& o) const { return {q + o.q, t + o.t, a + o.a}; }
    Mono3 operator-(const Mono3& o) const { return {q - o.q, t - o.t, a - o.a}; }
    Mono3 operator-() const { return {-q, -t, -a}; }
    bool operator==(const Mono3& o) const { return q == o.q && t == o.t && a == o.a; }
    bool operator!=(const Mono3& o) const { return !(*this == o); }
};

/// Graded-lexicographic order with q < t < a (a most significant on ties).
/// This is the fixed canonical monomial order for all of K's bookkeeping.
struct Mono3Less {
    bool operator()(const Mono3& x, const Mono3& y) const {
        const int dx = x.degree();
        const int dy = y.degree();
        if (dx != dy) return dx < dy;
        if (x.a != y.a) return x.a < y.a;
        if (x.t != y.t) return x.t < y.t;
        return x.q < y.q;
    }
};

// ---------------------------------------------------------------------------
// ParamPoly: Laurent polynomial in (q, t, a) over Q, sparse and normalized
// (no explicit zero coefficients are ever stored).
// ---------------------------------------------------------------------------

class ParamPoly {
  public:
    using TermMap = std::map<Mono3, BigRat, Mono3Less>;

    ParamPoly() = default;
    explicit ParamPoly(const BigRat& c) {
        if (c != 0) terms_[Mono3{}] = c;
    }
    explicit ParamPoly(long c) : ParamPoly(BigRat(c)) {}

    static ParamPoly monomial(const BigRat& c, const Mono3& m) {
        ParamPoly p;
        if (c != 0) p.terms_[m] = c;
        return p;
    }
    static const ParamPoly& zero();
    static const ParamPoly& one();

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
    }
    bool is_one() const;
    bool is_single_term() const { return terms_.size() == 1; }
    std::size_t num_terms() const { return terms_.size(); }

    /// Leading term under the canonical graded-lex order.
    const std::pair<const Mono3, BigRat>& leading_term() const;

    /// Componentwise minimum exponent over all terms (zero poly -> all 0).
    Mono3 min_exponents() const;
    int degree_in(int var) const;  // var: 0 = q, 1 = t, 2 = a; -1 for the zero poly

    /// Canonical Laurent split p = q^u.q t^u.t a^u.a * residual where the
    /// residual has minimum exponent 0 in each parameter.
    std::pair<Mono3, ParamPoly> factor_unit() const;

    ParamPoly operator+(const ParamPoly& o) const;
    ParamPoly operator-(const ParamPoly& o) const;
    ParamPoly operator*(const ParamPoly& o) const;
    ParamPoly operator-() const;
    ParamPoly& operator+=(const ParamPoly& o) { return *this = *this + o; }
    ParamPoly& operator-=(const ParamPoly& o) { return *this = *this - o; }
    ParamPoly& operator*=(const ParamPoly& o) { return *this = *this * o; }
    bool operator==(const ParamPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const ParamPoly& o) const { return !(*this == o); }

    ParamPoly scaled(const BigRat& c) const;
    ParamPoly shifted(const Mono3& m) const;  // multiply by the unit monomial m

    /// The parameter inversion iota: q,t,a -> their inverses (exponent negation).
    ParamPoly inverted_params() const;

    bool has_integer_coeffs() const;
    /// gcd of the (integer) coefficients; positive. Zero poly -> 0.
    BigInt integer_content() const;

    /// Exact multivariate division; nullopt when the division is not exact.
    std::optional<ParamPoly> divided_exact(const ParamPoly& d) const;

    /// Exact gcd of two integer-coefficient polynomials (no Laurent part),
    /// normalized primitive with positive leading coefficient.
    static ParamPoly gcd(const ParamPoly& x, const ParamPoly& y);

    /// Canonical text form, terms in ascending graded-lex order, e.g.
    /// "1 - q*t" or "2*q^2*t - 1/2".
    std::string to_string() const;

    void add_term(const Mono3& m, const BigRat& c);  // accumulating insert

  private:
    TermMap terms_;
};

// ---------------------------------------------------------------------------
// FieldElem: an element of K = Q(q,t,a) as a canonical reduced fraction
// num/den of integer-coefficient polynomials:
//   - den != 0, both polynomial (no negative exponents), no common monomial,
//   - gcd(num, den) = 1 including integer contents (coprime contents),
//   - leading coefficient of den positive.
// Elements of F = Q(q,t) are exactly those with no occurrence of a.
// ---------------------------------------------------------------------------

class FieldElem {
  public:
    FieldElem() : FieldElem(ParamPoly::zero(), ParamPoly::one(), true) {}
    FieldElem(long v) : FieldElem(ParamPoly(v), ParamPoly::one(), true) {}  // NOLINT(google-explicit-constructor)
    explicit FieldElem(const BigRat& v);
    explicit FieldElem(const ParamPoly& p) : FieldElem(p, ParamPoly::one()) {}
    FieldElem(ParamPoly num, ParamPoly den);

    static const FieldElem& zero();
    static const FieldElem& one();
    static FieldElem q() { return monomial(+1, Mono3{1, 0, 0}); }
    static FieldElem t() { return monomial(+1, Mono3{0, 1, 0}); }
    static FieldElem a() { return monomial(+1, Mono3{0, 0, 1}); }
    static FieldElem monomial(int sign, const Mono3& m);

    const ParamPoly& num() const { return num_; }
    const ParamPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator-(const FieldElem& o) const;
    FieldElem operator*(const FieldElem& o) const;
    FieldElem operator/(const FieldElem& o) const;
    FieldElem operator-() const;
    FieldElem& operator+=(const FieldElem& o) { return *this = *this + o; }
    FieldElem& operator-=(const FieldElem& o) { return *this = *this - o; }
    FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }
    FieldElem& operator/=(const FieldElem& o) { return *this = *this / o; }
    bool operator==(const FieldElem& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const FieldElem& o) const { return !(*this == o); }

    FieldElem inverse() const;
    FieldElem pow(long k) const;

    /// The field automorphism iota inverting q, t and a.
    FieldElem inverted_params() const;

    /// Recognize +-q^i t^j a^k; nullopt otherwise.
    std::optional<std::pair<int, Mono3>> as_signed_monomial() const;

    /// Canonical rendering: "num" when den = 1, otherwise "num/den" with
    /// multi-term polynomials parenthesized, e.g. "(1 - t)/(1 - q*t)".
    std::string to_string() const;

  private:
    FieldElem(ParamPoly num, ParamPoly den, bool already_canonical);
    void normalize();

    ParamPoly num_;
    ParamPoly den_;
};

/// q-shifted factorial (y; base)_m = prod_{j=0}^{m-1} (1 - base^j y).
enum class PochBase { q, q_inverse };
FieldElem pochhammer(const FieldElem& y, int m, PochBase base);
FieldElem pochhammer(const FieldElem& y, int m, const FieldElem& base);

}  // namespace macd
