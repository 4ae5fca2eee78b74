#pragma once

/* Boundary objects of the tangle category: the first homology of the
   infinite cyclic covering of a disk with signed punctures. For a sign
   sequence eps of length n the module carries the curve basis
   v_1, ..., v_{n-1} and a skew-hermitian intersection form; when the
   total winding l = sum(eps) vanishes, the boundary curve imposes one
   relation and a basis vector with unit coefficient is eliminated.

   The Gram closed form below was frozen from the agreement of two
   independent oracles (see tests/oracles and tools/gram_derive). */

#include <optional>
#include <string>
#include <vector>

#include "tangles/lagrangian.hpp"
#include "tangles/linalg.hpp"

namespace tangles {

using SignSeq = std::vector<int>;

/* Total winding l = sum of the signs. */
int total_winding(const SignSeq& eps);

/* Rejects anything but entries +1 / -1. */
void validate_signs(const SignSeq& eps);

std::string signs_label(const SignSeq& eps);

struct DiskObject {
    SignSeq eps;
    HermitianModule module; /* on the reduced basis */
    /* Boundary relation in the v-basis; present iff l = 0 and n > 0. */
    std::optional<std::vector<Laurent>> relation;
    /* 0-based v-basis index eliminated to form the reduced basis. */
    std::optional<int> eliminated_index;
    Mat lift; /* reduced basis -> v-basis; identity when nothing is eliminated */
    Mat proj; /* v-basis -> reduced basis; proj * lift = I, proj * relation = 0 */
};

/* Gram matrix of the intersection form on v_1..v_{n-1}, before any
   elimination. Entries vanish for |i-j| >= 2. */
Mat gram_form(const SignSeq& eps);

/* Expansion of the lifted boundary curve in the v-basis; requires l = 0
   and n > 0. */
std::vector<Laurent> relation_vector(const SignSeq& eps);

/* Memoized constructor; the returned reference stays valid for the
   lifetime of the program. Safe under concurrent calls. */
const DiskObject& build_object(const SignSeq& eps);

} // namespace tangles
