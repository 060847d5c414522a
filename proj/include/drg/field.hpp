#pragma once

#include <string>
#include <vector>

#include "drg/group.hpp"

namespace drg {

// GF(p^e) with elements encoded as integers 0..p^e-1 in base-p digit form
// (digit i = coefficient of x^i). The modulus is the lexicographically
// smallest monic irreducible polynomial, coefficients compared low-degree
// first, so encodings are reproducible across runs.
struct FieldTable {
    int p = 0;
    int e = 0;
    int q = 0;                 // p^e
    std::vector<int> modulus;  // length e+1, monic: modulus[e] = 1

    int add(int a, int b) const;
    int sub(int a, int b) const;
    int neg(int a) const;
    int mul(int a, int b) const;
    int inverse(int a) const;  // a != 0
    int pow(int a, long long t) const;
    int multiplicative_order(int a) const;  // a != 0

    // base-p digit string, high digit first, width e ("0010" in GF(81))
    std::string label(int a) const;
    int parse(const std::string& s) const;
};

// Builds GF(p^e). Rejects non-prime p and p^e > 10^6.
FieldTable gf_make(int p, int e);

// Smallest-encoded element of multiplicative order exactly d; d must divide q-1.
int element_of_order(const FieldTable& f, int d);

// Relative trace onto the degree-s subfield: sum of x^(p^s)^i, i = 0..e/s-1.
// s must divide e; the result lies in the subfield copy inside F.
int relative_trace(const FieldTable& f, int s, int x);

// (F, +) as an explicit group; element indices match the field encodings.
GroupPtr additive_group(const FieldTable& f);

// (F, +)^copies with row-major indexing, e.g. GF(q)^2 for affine planes.
GroupPtr product_group(const FieldTable& f, int copies);

}  // namespace drg
