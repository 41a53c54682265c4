#pragma once

// Polynomials and Laurent polynomials in x_1..x_n over K = Q(q,t,a),
// monomial evaluation points, and quotients of x-polynomials.

#include "macd/exactalg.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace macd {

using ExpVec = std::vector<int>;

/// Graded-lexicographic order on x-exponent vectors with x_1 < ... < x_n
/// (x_n most significant on ties).
struct ExpVecLess {
    bool operator()(const ExpVec& x, const ExpVec& y) const {
        int dx = 0, dy = 0;
        for (int e : x) dx += e;
        for (int e : y) dy += e;
        if (dx != dy) return dx < dy;
        for (std::size_t i = x.size(); i-- > 0;) {
            if (x[i] != y[i]) return x[i] < y[i];
        }
        return false;
    }
};

// ---------------------------------------------------------------------------
// Point: an n-vector of evaluation coordinates. Every point the theory
// needs has coordinates of the form +-q^i t^j a^k; a general field-element
// coordinate is supported as an escape hatch for derived points.
// ---------------------------------------------------------------------------

class Point {
  public:
    struct Coord {
        bool monomial = true;
        int sign = +1;
        Mono3 mono{};
        FieldElem general;  // used only when !monomial

        FieldElem value() const {
            if (!monomial) return general;
            return FieldElem::monomial(sign, mono);
        }
    };

    Point() = default;
    explicit Point(std::vector<Coord> coords) : coords_(std::move(coords)) {}

    /// Build from signed parameter monomials.
    static Point from_monomials(const std::vector<std::pair<int, Mono3>>& cs);
    /// Build from arbitrary nonzero field elements; monomial coordinates
    /// are detected and stored in monomial form.
    static Point from_field_elems(const std::vector<FieldElem>& cs);

    int n() const { return static_cast<int>(coords_.size()); }
    bool all_monomial() const;
    const Coord& coord(int i) const { return coords_.at(static_cast<std::size_t>(i)); }
    FieldElem coord_value(int i) const { return coord(i).value(); }
    std::vector<FieldElem> values() const;

    /// Multiply every coordinate by a^k.
    Point scaled_by_a(int k) const;
    /// Multiply every coordinate by a signed parameter monomial.
    Point scaled_by(int sign, const Mono3& m) const;
    /// Coordinatewise inverse.
    Point inverted() const;
    /// Apply w in one-line notation: result_{w(i)} = coord_i.
    Point permuted(const std::vector<int>& one_line) const;
    /// y -> (y_2, ..., y_n, q y_1).
    Point natural_raise() const;
    /// Swap coordinates i, i+1 (1-based i).
    Point swapped(int i) const;

    bool operator==(const Point& o) const;
    std::string to_string() const;

  private:
    std::vector<Coord> coords_;
};

// ---------------------------------------------------------------------------
// XPolynomial
// ---------------------------------------------------------------------------

class XPolynomial {
  public:
    using TermMap = std::map<ExpVec, FieldElem, ExpVecLess>;

    XPolynomial() = default;
    explicit XPolynomial(int n, bool laurent = false) : n_(n), laurent_(laurent) {}

    static XPolynomial constant(int n, const FieldElem& c, bool laurent = false);
    static XPolynomial monomial(int n, const ExpVec& e, const FieldElem& c);
    static XPolynomial variable(int n, int i);  // x_i, 1-based
    static XPolynomial one(int n) { return constant(n, FieldElem::one()); }

    int n() const { return n_; }
    bool laurent() const { return laurent_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t num_terms() const { return terms_.size(); }

    int total_degree() const;  // max over terms; 0 for the zero polynomial
    FieldElem coefficient(const ExpVec& e) const;
    void add_term(const ExpVec& e, const FieldElem& c);

    XPolynomial operator+(const XPolynomial& o) const;
    XPolynomial operator-(const XPolynomial& o) const;
    XPolynomial operator*(const XPolynomial& o) const;
    XPolynomial operator-() const;
    XPolynomial& operator+=(const XPolynomial& o) { return *this = *this + o; }
    XPolynomial& operator-=(const XPolynomial& o) { return *this = *this - o; }
    XPolynomial& operator*=(const XPolynomial& o) { return *this = *this * o; }
    bool operator==(const XPolynomial& o) const;
    bool operator!=(const XPolynomial& o) const { return !(*this == o); }

    XPolynomial scaled(const FieldElem& c) const;
    /// Multiply by the x-monomial with exponent vector e (may go Laurent).
    XPolynomial x_shifted(const ExpVec& e) const;

    /// Exact evaluation; fast path when all coordinates are monomials.
    FieldElem substitute(const Point& pt) const;

    /// p(c * x): coefficient of x^mu picks up c^{|mu|}.
    XPolynomial vars_scaled(const FieldElem& c) const;
    /// x_i -> x_i^{-1} for all i.
    XPolynomial vars_inverted() const;
    /// Apply w to the variables: x^mu -> x^{w(mu)} with w(mu)_{w(i)} = mu_i.
    XPolynomial vars_permuted(const std::vector<int>& one_line) const;
    /// Swap x_i, x_{i+1} (1-based i < n).
    XPolynomial vars_swapped(int i) const;

    /// Apply iota to all coefficients (q,t,a -> inverses); x untouched.
    XPolynomial coeffs_inverted_params() const;

    /// Degree-d homogeneous part.
    XPolynomial homogeneous_component(int d) const;

    /// Exact division by x_j (1-based); nullopt when some term lacks x_j.
    std::optional<XPolynomial> divided_by_var(int j) const;

    bool is_symmetric() const;

    /// Canonical rendering: terms ascending in graded-lex order, e.g.
    /// "(1 - t)/(1 - q*t) * x1^2*x2 + x2^3".
    std::string to_string() const;

  private:
    void check_compatible(const XPolynomial& o) const;

    int n_ = 0;
    bool laurent_ = false;
    TermMap terms_;
};

/// (p - s_i p)/(x_i - x_{i+1}), computed termwise and always exact.
XPolynomial divided_difference(const XPolynomial& p, int i);

// ---------------------------------------------------------------------------
// RationalX: a quotient of x-polynomials over K. Denominators are kept in
// the shape the constructions produce; equality is decided by exact
// cross-multiplication, never by floating or probabilistic means.
// ---------------------------------------------------------------------------

class RationalX {
  public:
    RationalX() = default;
    explicit RationalX(XPolynomial num)
        : num_(std::move(num)), den_(XPolynomial::one(num_.n())) {}
    RationalX(XPolynomial num, XPolynomial den);

    static RationalX one(int n) { return RationalX(XPolynomial::one(n)); }

    const XPolynomial& num() const { return num_; }
    const XPolynomial& den() const { return den_; }
    int n() const { return num_.n(); }
    bool is_zero() const { return num_.is_zero(); }
    bool den_is_one() const;

    RationalX operator+(const RationalX& o) const;
    RationalX operator-(const RationalX& o) const;
    RationalX operator*(const RationalX& o) const;
    RationalX operator-() const;

    RationalX scaled(const FieldElem& c) const;
    RationalX mul_poly(const XPolynomial& p) const;
    RationalX div_var(int j) const;  // divide by x_j
    RationalX vars_scaled(const FieldElem& c) const;
    RationalX vars_permuted(const std::vector<int>& one_line) const;
    RationalX vars_swapped(int i) const;
    RationalX coeffs_inverted_params() const;

    /// Exact equality of rational expressions via cross-multiplication.
    bool equals(const RationalX& o) const;

    /// Evaluate num/den at the point; throws DivisionByZero on a pole.
    FieldElem evaluate(const Point& pt) const;

    std::string to_string() const;

  private:
    XPolynomial num_;
    XPolynomial den_;
};

}  // namespace macd
