#pragma once

#include <string>
#include <vector>

#include "drg/diffset.hpp"

namespace drg {

// ------------------------------------------------------------------ reports ----

struct CatalogCheck {
    std::string label;
    bool ok = false;
    std::string detail;  // measured value, or what went wrong
};

struct CatalogReport {
    std::string name;
    std::string group_name;
    std::vector<int> set;  // the entry's principal set, when it has one
    std::vector<CatalogCheck> checks;
    bool ok() const;
};

// ------------------------------------------------------------ constructions ----

// Cyclic projective-plane difference set: exponents of a primitive element
// whose trace to the subfield vanishes, taken mod q^2+q+1.
struct SingerPlane {
    GroupPtr group;      // Z_{q^2+q+1}
    std::vector<int> d;  // (q^2+q+1, q+1, 1) difference set
    int q = 0;
};
SingerPlane singer(int q);  // q a prime power <= 16

// {0, 1} together with the order-5 multiplicative subgroup of GF(81):
// a (81, 6, 2, 0) partial geometric set satisfying the 0-or-1 condition.
struct Order81Set {
    GroupPtr group;
    std::vector<int> d;
};
Order81Set vls();

// The twelve digit-triples (a,b,c) in Z2 x Z3 x Z6 forming a symmetric
// (12,3,12,4) relative difference set; its development is STD_4[12;3].
struct Order36Rds {
    GroupPtr group;
    std::vector<int> d;
    Subgroup forbidden;  // order-3 subgroup, found by the zero-count scan
};
Order36Rds suetake();

// Affine plane of order q minus a parallel class: D = {(x, x^2)} in GF(q)^2,
// forbidden subgroup {0} x GF(q); a (q,q,q,1) relative difference set.
struct AffineRds {
    GroupPtr group;
    std::vector<int> d;
    Subgroup forbidden;
    int q = 0;
};
AffineRds ag_minus_parallel(int q);  // odd prime power q <= 13

// The three order-32 Cayley graphs with intersection array {6,5,4;1,2,6},
// each with the index-2 subgroup K where Cay(K, S∩K) is the 4-cube.
struct Design16 {
    std::string name;
    GroupPtr group;
    std::vector<int> s;          // 6-element connection set
    Subgroup cube_part;          // K
    std::vector<int> s_in_part;  // S ∩ K, parent indices
};
std::vector<Design16> designs16();

// -------------------------------------------------------------------- entries ----

// Self-verifying example registry. Parametric families are registered at
// small sizes; singer()/ag_minus_parallel() remain callable for other q.
std::vector<std::string> catalog_names();
CatalogReport catalog_run(const std::string& name);  // input_error on unknown names

}  // namespace drg
