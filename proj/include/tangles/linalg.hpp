#pragma once

#include <vector>

#include "tangles/laurent.hpp"

namespace tangles {

/* Dense matrix over the Laurent polynomial ring, row major. */
class Mat {
  public:
    Mat() = default;
    Mat(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {}
    static Mat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Laurent& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
    const Laurent& at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

    bool operator==(const Mat&) const = default;

    Mat operator-() const;
    friend Mat operator+(const Mat& a, const Mat& b);
    friend Mat operator-(const Mat& a, const Mat& b);
    friend Mat operator*(const Mat& a, const Mat& b);
    Mat scaled(const Laurent& s) const;

    Mat transpose() const;
    Mat involute_entries() const;
    /* Conjugate transpose: involute every entry, then transpose. */
    Mat dagger() const { return involute_entries().transpose(); }

    bool is_zero() const;

    static Mat hstack(const Mat& a, const Mat& b);
    static Mat vstack(const Mat& a, const Mat& b);
    /* Half-open row/column ranges. */
    Mat row_slice(int from, int to) const;
    Mat col_slice(int from, int to) const;
    Mat col(int j) const { return col_slice(j, j + 1); }
    Mat with_col_removed(int j) const;
    Mat with_row_removed(int i) const;

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<Laurent> e_;
};

std::string to_string(const Mat& m);

/* Determinant: cofactor expansion below 5x5, Bareiss fraction-free
   elimination from 5x5 up. Requires a square matrix. */
Laurent det(const Mat& m);

/* Rank over the fraction field. */
int rank_over_field(const Mat& m);

enum class Saturation { Certified, Uncertified };

/* A finite set of column generators inside an ambient free module.
   When cert == Certified the columns are a basis of a saturated
   submodule (rational span intersected with the lattice): the gcd of
   all maximal minors is a unit (witnessed by cert_gcd). */
struct GeneratorSet {
    int ambient_rank = 0;
    Mat gens; /* ambient_rank x count */
    Saturation cert = Saturation::Uncertified;
    Laurent cert_gcd;

    int count() const { return gens.cols(); }
};

struct UnsaturatableError : MathError {
    Laurent witness;
    UnsaturatableError(const std::string& msg, Laurent w)
        : MathError(msg + " (maximal-minor gcd " + tangles::to_string(w) + ")"), witness(std::move(w)) {}
};

/* Gcd of maximal minors of the generator matrix; sets cert/cert_gcd on gs
   and returns the verdict. An empty generator set is certified. */
Saturation run_saturation_certificate(GeneratorSet& gs);

/* Generators of {x : m x = 0}. Columns are a basis of the rational
   solution space, cleared to primitive integral columns and scaled so the
   first nonzero entry of each is canonical; certificate attached. */
GeneratorSet kernel(const Mat& m);

/* Smallest saturated submodule containing the span of gs. Throws
   UnsaturatableError when the result cannot be certified. */
GeneratorSet saturate(const GeneratorSet& gs);

/* Canonical gcd of all g x g minors; 0 when g exceeds the rank over the
   fraction field, 1 when g == 0. */
Laurent minor_gcd(const Mat& m, int g);

/* Kernel of a single row. For exactly 2 columns returns the closed form
   (b/g, -a/g) with g = gcd(a, b); otherwise kernel + saturate. */
GeneratorSet row_syzygy(const Mat& row);

/* Solves m x = rhs over the fraction field. Returns false when
   inconsistent; when the solution is not unique, returns the one with
   all free variables set to zero. Entries of x are RatFunc. */
bool solve_rational(const Mat& m, const Mat& rhs, std::vector<std::vector<RatFunc>>& x);

/* Membership of a column in the Lambda-span of a free generator set.
   Requires the columns of gs to be linearly independent over the
   fraction field. */
bool member(const GeneratorSet& gs, const Mat& v);

/* Equality of spans of two free generator sets via mutual membership. */
bool span_equal(const GeneratorSet& a, const GeneratorSet& b);

/* Intersection of the spans of two certified generator sets. */
GeneratorSet intersect(const GeneratorSet& a, const GeneratorSet& b);

/* Repeatedly removes a column that is a Lambda-combination of the others,
   which preserves the span exactly when the dependency carries a unit
   coefficient on the removed column. Zero columns are always removed.
   Stops once the columns are independent or no unit dependency remains. */
GeneratorSet drop_unit_dependencies(const GeneratorSet& gs);

} // namespace tangles
