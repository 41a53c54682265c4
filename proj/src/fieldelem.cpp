#include "macd/exactalg.hpp"

#include <algorithm>

namespace macd {

FieldElem::FieldElem(const BigRat& v) : num_(v), den_(ParamPoly::one()) { normalize(); }

FieldElem::FieldElem(ParamPoly num, ParamPoly den) : num_(std::move(num)), den_(std::move(den)) {
    normalize();
}

FieldElem::FieldElem(ParamPoly num, ParamPoly den, bool)
    : num_(std::move(num)), den_(std::move(den)) {}

const FieldElem& FieldElem::zero() {
    static const FieldElem z;
    return z;
}

const FieldElem& FieldElem::one() {
    static const FieldElem o(1);
    return o;
}

FieldElem FieldElem::monomial(int sign, const Mono3& m) {
    return FieldElem(ParamPoly::monomial(BigRat(sign < 0 ? -1 : 1), m), ParamPoly::one());
}

void FieldElem::normalize() {
    if (den_.is_zero()) throw DivisionByZero();
    if (num_.is_zero()) {
        num_ = ParamPoly::zero();
        den_ = ParamPoly::one();
        return;
    }
    // Joint monomial normalization: shift so the minimum exponent of each
    // parameter over num and den together is exactly zero.
    {
        const Mono3 mn = num_.min_exponents();
        const Mono3 md = den_.min_exponents();
        const Mono3 joint{std::min(mn.q, md.q), std::min(mn.t, md.t), std::min(mn.a, md.a)};
        if (!joint.is_unit()) {
            num_ = num_.shifted(-joint);
            den_ = den_.shifted(-joint);
        }
    }
    // Clear rational coefficients.
    BigInt l = 1;
    for (const auto& [m, c] : num_.terms()) l = lcm(l, c.get_den());
    for (const auto& [m, c] : den_.terms()) l = lcm(l, c.get_den());
    if (l != 1) {
        num_ = num_.scaled(BigRat(l));
        den_ = den_.scaled(BigRat(l));
    }
    // Coprime integer contents.
    const BigInt cn = num_.integer_content();
    const BigInt cd = den_.integer_content();
    const BigInt cg = gcd(cn, cd);
    if (cg != 1) {
        num_ = num_.scaled(BigRat(1, cg));
        den_ = den_.scaled(BigRat(1, cg));
    }
    // Polynomial gcd.
    const ParamPoly g = ParamPoly::gcd(num_, den_);
    if (!g.is_one() && !g.is_constant()) {
        auto qn = num_.divided_exact(g);
        auto qd = den_.divided_exact(g);
        if (!qn || !qd) throw ArithmeticCorruption("gcd does not divide");
        num_ = std::move(*qn);
        den_ = std::move(*qd);
    }
    // Sign convention keyed to the lowest denominator monomial, so that
    // 1/(1 - q) is stored and rendered literally.
    if (den_.terms().begin()->second < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

namespace {

// Strip a common factor from a pair before multiplying the pieces out;
// keeps the polynomials the final normalization sees small.
void cross_reduce(ParamPoly& x, ParamPoly& y) {
    const ParamPoly g = ParamPoly::gcd(x, y);
    if (g.is_one() || g.is_constant()) return;
    auto qx = x.divided_exact(g);
    auto qy = y.divided_exact(g);
    if (!qx || !qy) throw ArithmeticCorruption("gcd does not divide");
    x = std::move(*qx);
    y = std::move(*qy);
}

}  // namespace

FieldElem FieldElem::operator+(const FieldElem& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (den_ == o.den_) return FieldElem(num_ + o.num_, den_);
    ParamPoly d1 = den_;
    ParamPoly d2 = o.den_;
    cross_reduce(d1, d2);  // now den * d2 == o.den * d1 == lcm of denominators
    return FieldElem(num_ * d2 + o.num_ * d1, den_ * d2);
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
    if (o.is_zero()) return *this;
    if (is_zero()) return -o;
    if (den_ == o.den_) return FieldElem(num_ - o.num_, den_);
    ParamPoly d1 = den_;
    ParamPoly d2 = o.den_;
    cross_reduce(d1, d2);
    return FieldElem(num_ * d2 - o.num_ * d1, den_ * d2);
}

FieldElem FieldElem::operator-() const {
    FieldElem r = *this;
    r.num_ = -r.num_;
    return r;
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
    if (is_zero() || o.is_zero()) return zero();
    ParamPoly n1 = num_;
    ParamPoly d2 = o.den_;
    cross_reduce(n1, d2);
    ParamPoly n2 = o.num_;
    ParamPoly d1 = den_;
    cross_reduce(n2, d1);
    return FieldElem(n1 * n2, d1 * d2);
}

FieldElem FieldElem::operator/(const FieldElem& o) const {
    if (o.is_zero()) throw DivisionByZero();
    if (is_zero()) return zero();
    ParamPoly n1 = num_;
    ParamPoly n2 = o.num_;
    cross_reduce(n1, n2);
    ParamPoly d1 = den_;
    ParamPoly d2 = o.den_;
    cross_reduce(d1, d2);
    return FieldElem(n1 * d2, d1 * n2);
}

FieldElem FieldElem::inverse() const {
    if (is_zero()) throw DivisionByZero();
    return FieldElem(den_, num_);
}

FieldElem FieldElem::pow(long k) const {
    if (k < 0) return inverse().pow(-k);
    FieldElem r = one();
    FieldElem b = *this;
    auto e = static_cast<unsigned long>(k);
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

FieldElem FieldElem::inverted_params() const {
    return FieldElem(num_.inverted_params(), den_.inverted_params());
}

std::optional<std::pair<int, Mono3>> FieldElem::as_signed_monomial() const {
    if (num_.num_terms() != 1 || den_.num_terms() != 1) return std::nullopt;
    const auto& [nm, nc] = *num_.terms().begin();
    const auto& [dm, dc] = *den_.terms().begin();
    if (dc != 1 || (nc != 1 && nc != -1)) return std::nullopt;
    return std::make_pair(nc == 1 ? +1 : -1, nm - dm);
}

std::string FieldElem::to_string() const {
    const auto wrap = [](const ParamPoly& p) {
        std::string s = p.to_string();
        if (p.num_terms() > 1) return "(" + s + ")";
        return s;
    };
    if (den_.is_one()) return num_.to_string();
    return wrap(num_) + "/" + wrap(den_);
}

FieldElem pochhammer(const FieldElem& y, int m, const FieldElem& base) {
    FieldElem r = FieldElem::one();
    FieldElem factor = y;
    for (int j = 0; j < m; ++j) {
        r *= FieldElem::one() - factor;
        factor *= base;
    }
    return r;
}

FieldElem pochhammer(const FieldElem& y, int m, PochBase base) {
    return pochhammer(y, m,
                      base == PochBase::q ? FieldElem::q() : FieldElem::q().inverse());
}

}  // namespace macd
