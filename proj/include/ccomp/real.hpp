#pragma once

#include <mpfr.h>
#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace ccomp {

using Prec = mpfr_prec_t;

inline constexpr Prec kDefaultPrecision = 128;
inline constexpr Prec kMinPrecision = 53;

// Process-wide default used when a value is built without an explicit precision.
Prec default_precision();
void set_default_precision(Prec bits);

// Owning wrapper around mpfr_t. Binary operations round to the larger of the
// two operand precisions.
class Real {
public:
    Real();
    explicit Real(Prec prec);
    Real(double v, Prec prec);
    Real(long v, Prec prec);
    Real(int v, Prec prec) : Real(static_cast<long>(v), prec) {}
    Real(std::string_view decimal, Prec prec);
    Real(const mpz_class& z, Prec prec);
    Real(const Real& other);
    Real(const Real& other, Prec prec);
    Real(Real&& other) noexcept;
    Real& operator=(const Real& other);
    Real& operator=(Real&& other) noexcept;
    ~Real();

    static Real inf(Prec prec, int sign = 1);
    static Real pi(Prec prec);
    static Real ln2(Prec prec);

    Prec prec() const { return mpfr_get_prec(v_); }
    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    bool is_inf() const { return mpfr_inf_p(v_) != 0; }
    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    bool is_integer() const { return mpfr_integer_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long to_long() const { return mpfr_get_si(v_, MPFR_RNDZ); }
    mpz_class to_mpz() const;  // truncates toward zero

    // Decimal rendering with `digits` significant digits (0 = enough to round-trip).
    std::string str(int digits = 0) const;

    Real& operator+=(const Real& o);
    Real& operator-=(const Real& o);
    Real& operator*=(const Real& o);
    Real& operator/=(const Real& o);
    Real operator-() const;

private:
    mpfr_t v_;
};

Real operator+(const Real& a, const Real& b);
Real operator-(const Real& a, const Real& b);
Real operator*(const Real& a, const Real& b);
Real operator/(const Real& a, const Real& b);
Real operator+(const Real& a, long b);
Real operator+(long a, const Real& b);
Real operator-(const Real& a, long b);
Real operator-(long a, const Real& b);
Real operator*(const Real& a, long b);
Real operator*(long a, const Real& b);
Real operator/(const Real& a, long b);
Real operator/(long a, const Real& b);

int cmp(const Real& a, const Real& b);
inline bool operator<(const Real& a, const Real& b) { return cmp(a, b) < 0; }
inline bool operator>(const Real& a, const Real& b) { return cmp(a, b) > 0; }
inline bool operator<=(const Real& a, const Real& b) { return cmp(a, b) <= 0; }
inline bool operator>=(const Real& a, const Real& b) { return cmp(a, b) >= 0; }
inline bool operator==(const Real& a, const Real& b) { return cmp(a, b) == 0; }
inline bool operator!=(const Real& a, const Real& b) { return cmp(a, b) != 0; }
int cmp(const Real& a, double b);
inline bool operator<(const Real& a, double b) { return cmp(a, b) < 0; }
inline bool operator>(const Real& a, double b) { return cmp(a, b) > 0; }
inline bool operator<=(const Real& a, double b) { return cmp(a, b) <= 0; }
inline bool operator>=(const Real& a, double b) { return cmp(a, b) >= 0; }
inline bool operator==(const Real& a, double b) { return cmp(a, b) == 0; }
inline bool operator!=(const Real& a, double b) { return cmp(a, b) != 0; }

Real abs(const Real& x);
Real sqrt(const Real& x);
Real cbrt(const Real& x);
Real rootn(const Real& x, unsigned long k);  // real-signed for odd k
Real pow(const Real& x, const Real& y);
Real pow(const Real& x, long k);
Real exp(const Real& x);
Real log(const Real& x);
Real log1p(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real tan(const Real& x);
Real asin(const Real& x);
Real acos(const Real& x);
Real atan(const Real& x);
Real floor(const Real& x);
Real ldexp(const Real& x, long e);  // x * 2^e
Real max(const Real& a, const Real& b);
Real min(const Real& a, const Real& b);

}  // namespace ccomp
