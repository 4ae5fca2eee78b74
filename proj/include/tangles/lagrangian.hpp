#pragma once

#include <string>

#include "tangles/linalg.hpp"

namespace tangles {

/* A free module with a nondegenerate skew-hermitian form given by its
   Gram matrix: gram(j,i) == -involute(gram(i,j)), and det(gram) != 0
   when the rank is positive. */
struct HermitianModule {
    int rank = 0;
    Mat gram;
    std::string label;
};

/* Validates the Gram matrix; throws ConstructionError. */
HermitianModule make_hermitian(int rank, Mat gram, std::string label = "");
/* Orthogonal direct sum (block diagonal Gram). */
HermitianModule direct_sum(const HermitianModule& a, const HermitianModule& b);
/* Same module with the form negated. */
HermitianModule negated(const HermitianModule& h);

/* The form evaluated on two column vectors: involute(x)^T gram y. */
Laurent pair_form(const HermitianModule& h, const Mat& x, const Mat& y);

/* {y : pair_form(a_i, y) == 0 for all generators a_i}; always closed. */
GeneratorSet annihilator(const HermitianModule& h, const GeneratorSet& a);

/* Closure of a submodule: its saturation. */
GeneratorSet closure_set(const GeneratorSet& a);

/* All pairwise form values between generators vanish. */
bool is_isotropic(const HermitianModule& h, const GeneratorSet& a);

/* The span equals its own annihilator. Requires a certified generator
   set, so that span comparisons are decidable. */
bool is_lagrangian(const HermitianModule& h, const GeneratorSet& a);

/* A sub-Lagrangian contraction: the quotient annihilator(A)/A with its
   induced form, the image of L in it, and the change-of-basis data.
   ann_basis columns are a free basis of annihilator(A) in ambient
   coordinates whose first a_count columns are exactly A's generators;
   the quotient basis is the remaining columns. */
struct Contraction {
    HermitianModule module;
    GeneratorSet image;
    Mat ann_basis;
    int a_count = 0;
};

Contraction contract(const HermitianModule& h, const GeneratorSet& l, const GeneratorSet& a);

/* Coordinates of ambient columns in the quotient of a contraction.
   Errors unless the columns lie in annihilator(A) integrally. */
Mat quotient_coords(const Contraction& c, const Mat& ambient_cols);

/* A submodule of (-source) + target presented by stacked generator
   blocks: msrc holds source coordinates, mtgt target coordinates. */
struct Relation {
    HermitianModule source, target;
    Mat msrc, mtgt;
    Saturation cert = Saturation::Uncertified;
    Laurent cert_gcd;
    bool lagrangian_checked = false;
    bool transversal = true;

    int count() const { return msrc.cols(); }
    Mat stacked() const { return Mat::vstack(msrc, mtgt); }
};

/* The ambient module (-source) + target of a relation. */
HermitianModule relation_ambient(const Relation& r);
GeneratorSet relation_genset(const Relation& r);

/* Builds a relation and runs the saturation certificate. */
Relation make_relation(HermitianModule src, HermitianModule tgt, Mat msrc, Mat mtgt);

/* Graph of the identity. */
Relation diagonal(const HermitianModule& h);

/* Graph of a matrix m : source -> target. Requires unitarity
   dagger(m) * target.gram * m == source.gram; throws ConstructionError
   otherwise. The result is verified Lagrangian. */
Relation graph(const Mat& m, const HermitianModule& src, const HermitianModule& tgt);

/* Graph of a fraction phi = phi_num / phi_den that is unitary over the
   fraction field: the saturation of the span of the columns
   (phi_den e_i, phi_num e_i). */
Relation restricted_graph(const Mat& phi_num, const Laurent& phi_den,
                          const HermitianModule& src, const HermitianModule& tgt);

/* Composition: generators (msrc1 W1, mtgt2 W2) where (W1; W2) spans the
   matching solutions of the middle coordinates. The transversality of
   the two relations is checked and recorded in the result flag, never
   assumed. */
Relation compose(const Relation& n1, const Relation& n2);

/* Composition followed by closure of the span. */
Relation compose_bar(const Relation& n1, const Relation& n2);

/* Runs the Lagrangian check on the relation's span inside its ambient
   module, records and returns the verdict. */
bool check_lagrangian(Relation& r);

/* Same boundary data and equal spans (mutual membership). */
bool relation_equal(const Relation& a, const Relation& b);

} // namespace tangles
