/*
   Copyright 2026 the foldecode authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.

   v0.1
*/

#ifndef FOLDECODE_COMMON_HPP
#define FOLDECODE_COMMON_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace foldecode {

enum class ErrorKind {
    NotPrime,
    ReducibleModulus,
    DivisionByZero,
    FieldMismatch,
    IncompatibleFields,
    PoleAtPlace,
    BadParameter,
    SingularSeed,
    UnsupportedDivisor,
    InsufficientPlaces,
    DegreeTooLarge,
    LengthMismatch,
    IndexOutOfRange,
    ShapeMismatch,
    NegativeKappa,
    NoSolution,
    PrecisionTooLow,
    ListBoundViolated,
    EnumerationOverflow,
    NonIntegerGenus,
    SplittingFieldTooLarge,
    RamifiedPlace,
    CapExceeded,
    InvalidArgument,
    InternalError,
};

const char* error_kind_name(ErrorKind k);

/* NoSolution / ListBoundViolated / NonIntegerGenus flag violated proven
   guarantees, not bad inputs; the CLI maps them to a distinct exit code. */
bool is_tripwire(ErrorKind k);

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind)
    {
    }

    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message)
{
    throw Error(kind, message);
}

/* exact rational with int64 term size; all parameter formulas fit comfortably */
class Rational {
  public:
    Rational() : n_(0), d_(1) {}
    Rational(long long n) : n_(n), d_(1) {}
    Rational(long long n, long long d) : n_(n), d_(d) { normalize(); }

    long long num() const { return n_; }
    long long den() const { return d_; }

    Rational operator-() const { return Rational(-n_, d_); }
    friend Rational operator+(const Rational& a, const Rational& b)
    {
        return make_checked((__int128)a.n_ * b.d_ + (__int128)b.n_ * a.d_, (__int128)a.d_ * b.d_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b)
    {
        return make_checked((__int128)a.n_ * b.n_, (__int128)a.d_ * b.d_);
    }
    friend Rational operator/(const Rational& a, const Rational& b)
    {
        if (b.n_ == 0) fail(ErrorKind::DivisionByZero, "rational division by zero");
        return make_checked((__int128)a.n_ * b.d_, (__int128)a.d_ * b.n_);
    }

    friend bool operator==(const Rational& a, const Rational& b)
    {
        return a.n_ == b.n_ && a.d_ == b.d_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b)
    {
        return (__int128)a.n_ * b.d_ < (__int128)b.n_ * a.d_;
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return a < b || a == b; }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

    long long floor() const
    {
        long long q = n_ / d_;
        if (n_ % d_ != 0 && n_ < 0) --q;
        return q;
    }
    long long ceil() const
    {
        long long q = n_ / d_;
        if (n_ % d_ != 0 && n_ > 0) ++q;
        return q;
    }
    bool is_integer() const { return d_ == 1; }

    std::string str() const
    {
        if (d_ == 1) return std::to_string(n_);
        return std::to_string(n_) + "/" + std::to_string(d_);
    }
    double to_double() const { return (double)n_ / (double)d_; }

  private:
    static Rational make_checked(__int128 n, __int128 d)
    {
        __int128 g = gcd128(n < 0 ? -n : n, d < 0 ? -d : d);
        if (g == 0) g = 1;
        n /= g;
        d /= g;
        if (d < 0) {
            n = -n;
            d = -d;
        }
        const __int128 lim = (__int128)1 << 62;
        if (n >= lim || n <= -lim || d >= lim)
            fail(ErrorKind::InternalError, "rational overflow");
        Rational r;
        r.n_ = (long long)n;
        r.d_ = (long long)d;
        return r;
    }
    static __int128 gcd128(__int128 a, __int128 b)
    {
        while (b != 0) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }
    void normalize()
    {
        if (d_ == 0) fail(ErrorKind::DivisionByZero, "rational with zero denominator");
        long long g = std::gcd(n_ < 0 ? -n_ : n_, d_ < 0 ? -d_ : d_);
        if (g == 0) g = 1;
        n_ /= g;
        d_ /= g;
        if (d_ < 0) {
            n_ = -n_;
            d_ = -d_;
        }
    }

    long long n_;
    long long d_;
};

/* checked integer power; throws CapExceeded past 2^62 */
unsigned long long ipow_checked(unsigned long long base, unsigned exp);

/* floor(sqrt(n)) */
unsigned long long isqrt(unsigned long long n);

std::string to_hex(unsigned long long v);
unsigned long long parse_hex(const std::string& text);

} // namespace foldecode

#endif
