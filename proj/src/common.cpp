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

#include "foldecode/common.hpp"

#include <cctype>

namespace foldecode {

const char* error_kind_name(ErrorKind k)
{
    switch (k) {
        case ErrorKind::NotPrime: return "NotPrime";
        case ErrorKind::ReducibleModulus: return "ReducibleModulus";
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::FieldMismatch: return "FieldMismatch";
        case ErrorKind::IncompatibleFields: return "IncompatibleFields";
        case ErrorKind::PoleAtPlace: return "PoleAtPlace";
        case ErrorKind::BadParameter: return "BadParameter";
        case ErrorKind::SingularSeed: return "SingularSeed";
        case ErrorKind::UnsupportedDivisor: return "UnsupportedDivisor";
        case ErrorKind::InsufficientPlaces: return "InsufficientPlaces";
        case ErrorKind::DegreeTooLarge: return "DegreeTooLarge";
        case ErrorKind::LengthMismatch: return "LengthMismatch";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::ShapeMismatch: return "ShapeMismatch";
        case ErrorKind::NegativeKappa: return "NegativeKappa";
        case ErrorKind::NoSolution: return "NoSolution";
        case ErrorKind::PrecisionTooLow: return "PrecisionTooLow";
        case ErrorKind::ListBoundViolated: return "ListBoundViolated";
        case ErrorKind::EnumerationOverflow: return "EnumerationOverflow";
        case ErrorKind::NonIntegerGenus: return "NonIntegerGenus";
        case ErrorKind::SplittingFieldTooLarge: return "SplittingFieldTooLarge";
        case ErrorKind::RamifiedPlace: return "RamifiedPlace";
        case ErrorKind::CapExceeded: return "CapExceeded";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::InternalError: return "InternalError";
    }
    return "UnknownError";
}

bool is_tripwire(ErrorKind k)
{
    return k == ErrorKind::NoSolution || k == ErrorKind::ListBoundViolated ||
           k == ErrorKind::NonIntegerGenus || k == ErrorKind::InternalError;
}

unsigned long long ipow_checked(unsigned long long base, unsigned exp)
{
    unsigned long long r = 1;
    const unsigned long long lim = 1ull << 62;
    for (unsigned i = 0; i < exp; ++i) {
        if (base != 0 && r > lim / base)
            fail(ErrorKind::CapExceeded, "integer power exceeds 2^62");
        r *= base;
    }
    return r;
}

unsigned long long isqrt(unsigned long long n)
{
    if (n == 0) return 0;
    unsigned long long r = (unsigned long long)__builtin_sqrtl((long double)n);
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

std::string to_hex(unsigned long long v)
{
    static const char* digits = "0123456789abcdef";
    if (v == 0) return "0x0";
    std::string s;
    while (v > 0) {
        s.insert(s.begin(), digits[v & 0xf]);
        v >>= 4;
    }
    return "0x" + s;
}

unsigned long long parse_hex(const std::string& text)
{
    std::size_t pos = 0;
    if (text.size() >= 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) pos = 2;
    if (pos >= text.size()) fail(ErrorKind::InvalidArgument, "empty hex literal '" + text + "'");
    unsigned long long v = 0;
    for (; pos < text.size(); ++pos) {
        char c = (char)std::tolower((unsigned char)text[pos]);
        unsigned digit;
        if (c >= '0' && c <= '9')
            digit = (unsigned)(c - '0');
        else if (c >= 'a' && c <= 'f')
            digit = (unsigned)(c - 'a' + 10);
        else
            fail(ErrorKind::InvalidArgument, "bad hex literal '" + text + "'");
        if (v > (~0ull >> 4)) fail(ErrorKind::InvalidArgument, "hex literal overflow");
        v = (v << 4) | digit;
    }
    return v;
}

} // namespace foldecode
