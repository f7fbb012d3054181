#pragma once

#include <string>
#include <vector>

#include "stci/intvec.hpp"

namespace stci {

// The datum of an affine simplicial toric variety V in K^{n+r}:
//   x_j = u_j^c                    (j = 1..n)
//   y_i = u_1^{a_i1} ... u_n^{a_in} (i = 1..r)
// The attached generator set T consists of v_j = c*e_j followed by the rows
// w_i = (a_i1, ..., a_in). The codimension of V equals r.
struct ToricConfiguration {
    int n = 0;                 // ambient dimension
    Int c = 1;                 // common x-exponent
    std::vector<IntVec> rows;  // the w_i, each in N^n \ {0}

    int r() const { return static_cast<int>(rows.size()); }
    int num_variables() const { return n + r(); }

    // v_1..v_n then w_1..w_r.
    std::vector<IntVec> generators() const;
    IntVec generator(int idx) const;

    // "x1".."xn" then "y1".."yr", aligned with generators().
    std::string variable_name(int idx) const;

    void validate() const;

    bool operator==(const ToricConfiguration&) const = default;
};

// A binomial x^plus - x^minus over the variables (x_1..x_n, y_1..y_r),
// stored as two dense exponent vectors of length n + r. Canonical
// orientation: exponent tuples are compared lexicographically with variable
// order x_1 < ... < x_n < y_1 < ... < y_r (the largest variable y_r is the
// most significant), and the larger monomial is "plus".
struct Binomial {
    IntVec plus;
    IntVec minus;

    bool operator==(const Binomial&) const = default;
};

// True when a beats b in the canonical monomial comparison.
bool monomial_greater(const IntVec& a, const IntVec& b);

// Build a canonically oriented binomial from two distinct monomials with
// nonnegative exponents.
Binomial make_binomial(const IntVec& m1, const IntVec& m2);

// Reorient an existing binomial canonically.
Binomial canonical(const Binomial& b);

// ASCII rendering, e.g. "y3^2 - x1*x2*y1^2*y2^2". A trivial monomial prints
// as "1".
std::string monomial_to_string(const IntVec& exps, const ToricConfiguration& T);
std::string to_string(const Binomial& b, const ToricConfiguration& T);

// Deterministic order on binomials (canonical plus then minus, lex); used
// for set-style comparisons and stable output.
bool binomial_less(const Binomial& a, const Binomial& b);

std::vector<Binomial> sorted_canonical(std::vector<Binomial> bs);

}  // namespace stci
