#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace stci {

// All exact arithmetic runs on GMP integers. Exponents and lattice entries
// grow multiplicatively in the inputs, so fixed-width integers are not safe
// outside of explicitly bounded hot paths.
using Int = mpz_class;
using IntVec = std::vector<Int>;

class dimension_error : public std::invalid_argument {
public:
    explicit dimension_error(const std::string& what) : std::invalid_argument(what) {}
};

class resource_limit_error : public std::runtime_error {
public:
    explicit resource_limit_error(const std::string& what) : std::runtime_error(what) {}
};

inline bool is_zero(const IntVec& v) {
    for (const Int& x : v)
        if (x != 0) return false;
    return true;
}

inline bool is_nonnegative(const IntVec& v) {
    for (const Int& x : v)
        if (x < 0) return false;
    return true;
}

// Total degree: the sum of the coordinates.
inline Int degree(const IntVec& v) {
    Int s = 0;
    for (const Int& x : v) s += x;
    return s;
}

inline IntVec add(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size()) throw dimension_error("vector dimension mismatch in add");
    IntVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline IntVec sub(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size()) throw dimension_error("vector dimension mismatch in sub");
    IntVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline IntVec scale(const Int& c, const IntVec& v) {
    IntVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
    return r;
}

inline IntVec unit_vector(int dim, int i, const Int& c = 1) {
    IntVec r(static_cast<size_t>(dim), Int(0));
    r[static_cast<size_t>(i)] = c;
    return r;
}

// Lexicographic comparison reading coordinates left to right.
inline bool lex_less(const IntVec& a, const IntVec& b) {
    for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return a.size() < b.size();
}

inline std::string to_string(const IntVec& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += v[i].get_str();
    }
    s += ")";
    return s;
}

// Checked narrowing for the bounded enumeration paths. Values outside the
// int64 range mean the caller's bounds are far beyond desk scale.
inline long long to_int64(const Int& x, const char* context) {
    if (!x.fits_slong_p()) {
        // mpz fits_slong checks against C long; on LP64 that is int64.
        throw resource_limit_error(std::string("integer too large for bounded enumeration in ") + context);
    }
    return x.get_si();
}

}  // namespace stci
