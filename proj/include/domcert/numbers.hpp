#pragma once

#include <gmpxx.h>

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "domcert/util.hpp"

namespace domcert {

using Rational = mpq_class;

Rational parse_rational(const std::string &s);  // accepts "3", "-5/7", "1.25"
std::string rational_str(const Rational &r);

// Number field Q[x]/(P) with a distinguished real root of P singled out by an
// isolating interval.  P is not tested for irreducibility up front; a zero
// divisor surfaces later as a "reducible modulus" error during division.
class AlgebraicField {
  public:
    // coeffs[i] is the coefficient of x^i.  The interval endpoints must
    // straddle a sign change (or hit a root exactly).
    static std::shared_ptr<const AlgebraicField> make(const std::vector<Rational> &coeffs,
                                                      const Rational &lo, const Rational &hi);
    // Positive real root of x^n - r, r > 0.
    static std::shared_ptr<const AlgebraicField> nth_root(const Rational &r, int n);

    int degree() const { return deg_; }
    const std::vector<mpz_class> &minpoly() const { return poly_int_; }
    bool is_rational() const { return deg_ == 1; }
    const Rational &rational_root() const { return rational_root_; }

    // Current isolating interval (thread safe snapshot).
    void interval(Rational &lo, Rational &hi) const;
    // Shrinks the isolating interval, keeping the root inside.
    void refine() const;
    // Refines until hi - lo <= eps.
    void refine_to(const Rational &eps) const;

    // x^(deg+k) reduced mod P, for k in [0, deg-2].
    const std::vector<Rational> &reduction_row(int k) const { return red_[k]; }

    std::string header() const;  // "minpoly: [c0,...,cd]; interval: lo hi"
    bool same_field(const AlgebraicField &o) const;

  private:
    AlgebraicField() = default;
    int deg_ = 0;
    std::vector<mpz_class> poly_int_;     // primitive, positive leading coeff
    std::vector<Rational> monic_;         // monic version, size deg_+1
    std::vector<std::vector<Rational>> red_;
    std::vector<std::vector<Rational>> sturm_;
    Rational rational_root_;              // set when deg_ == 1
    Rational orig_lo_, orig_hi_;          // interval as constructed, for stable headers
    mutable std::mutex mu_;
    mutable Rational lo_, hi_;

    int sign_at(const Rational &x) const;  // sign of P(x)
    int sturm_count(const Rational &lo, const Rational &hi) const;
    void refine_locked() const;
};

using FieldPtr = std::shared_ptr<const AlgebraicField>;

// Element of Q[x]/(P), stored as a coefficient vector of length deg(P).
class AlgebraicNumber {
  public:
    AlgebraicNumber() = default;
    AlgebraicNumber(FieldPtr f, std::vector<Rational> coeffs);
    static AlgebraicNumber from_rational(const FieldPtr &f, const Rational &r);
    static AlgebraicNumber generator(const FieldPtr &f);
    static AlgebraicNumber parse(const FieldPtr &f, const std::string &text);

    const FieldPtr &field() const { return field_; }
    const std::vector<Rational> &coeffs() const { return c_; }
    bool is_zero() const;
    bool is_rational_value() const;         // coefficient vector supported on degree 0
    const Rational &rational_value() const; // valid when is_rational_value()

    AlgebraicNumber operator+(const AlgebraicNumber &o) const;
    AlgebraicNumber operator-(const AlgebraicNumber &o) const;
    AlgebraicNumber operator-() const;
    AlgebraicNumber operator*(const AlgebraicNumber &o) const;
    AlgebraicNumber operator/(const AlgebraicNumber &o) const;
    AlgebraicNumber inverse() const;
    AlgebraicNumber pow(unsigned long e) const;
    AlgebraicNumber scaled(const Rational &r) const;

    int sign() const;  // exact sign of the real value at the distinguished root
    int compare(const AlgebraicNumber &o) const;
    bool operator==(const AlgebraicNumber &o) const { return compare(o) == 0; }
    bool operator<(const AlgebraicNumber &o) const { return compare(o) < 0; }
    bool operator<=(const AlgebraicNumber &o) const { return compare(o) <= 0; }

    // Rational interval enclosing the real value; width shrinks as the field
    // interval is refined.
    void enclosure(Rational &lo, Rational &hi) const;
    double to_double() const;

    std::string str() const;  // e.g. "1/2*a^2 - 3*a + 1"

  private:
    FieldPtr field_;
    std::vector<Rational> c_;
    void check_same_field(const AlgebraicNumber &o) const;
};

// Parses an algebraic number specification for CLI / certificate files:
//   "3/2"                                     rational
//   "nthroot(r, n)" or "root(n, r)"           positive real root of x^n - r
//   "root(k, poly c_d*x^d+...+c_0 in [lo,hi])" explicit minimal polynomial
// Returns the field; *out (if non-null) receives the generator as a number.
FieldPtr parse_alpha(const std::string &text, AlgebraicNumber *out = nullptr);

}  // namespace domcert
