#include "tangles/linalg.hpp"

#include <algorithm>
#include <climits>

namespace tangles {

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Laurent(1);
    return m;
}

Mat Mat::operator-() const {
    Mat r(rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = -e_[i];
    return r;
}

Mat operator+(const Mat& a, const Mat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix add: shape mismatch");
    Mat r(a.rows_, a.cols_);
    for (size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = a.e_[i] + b.e_[i];
    return r;
}

Mat operator-(const Mat& a, const Mat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix sub: shape mismatch");
    Mat r(a.rows_, a.cols_);
    for (size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = a.e_[i] - b.e_[i];
    return r;
}

Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols_ != b.rows_) throw DimensionError("matrix mul: shape mismatch");
    Mat r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            const Laurent& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < b.cols_; ++j) {
                const Laurent& bkj = b.at(k, j);
                if (!bkj.is_zero()) r.at(i, j) += aik * bkj;
            }
        }
    return r;
}

Mat Mat::scaled(const Laurent& s) const {
    Mat r(rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * s;
    return r;
}

Mat Mat::transpose() const {
    Mat r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Mat Mat::involute_entries() const {
    Mat r(rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i].involute();
    return r;
}

bool Mat::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](const Laurent& x) { return x.is_zero(); });
}

Mat Mat::hstack(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows()) throw DimensionError("hstack: row mismatch");
    Mat r(a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols(); ++j) r.at(i, a.cols() + j) = b.at(i, j);
    }
    return r;
}

Mat Mat::vstack(const Mat& a, const Mat& b) {
    if (a.cols() != b.cols()) throw DimensionError("vstack: column mismatch");
    Mat r(a.rows() + b.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.at(a.rows() + i, j) = b.at(i, j);
    return r;
}

Mat Mat::row_slice(int from, int to) const {
    if (from < 0 || to > rows_ || from > to) throw DimensionError("row_slice out of range");
    Mat r(to - from, cols_);
    for (int i = from; i < to; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i - from, j) = at(i, j);
    return r;
}

Mat Mat::col_slice(int from, int to) const {
    if (from < 0 || to > cols_ || from > to) throw DimensionError("col_slice out of range");
    Mat r(rows_, to - from);
    for (int i = 0; i < rows_; ++i)
        for (int j = from; j < to; ++j) r.at(i, j - from) = at(i, j);
    return r;
}

Mat Mat::with_col_removed(int j) const {
    if (j < 0 || j >= cols_) throw DimensionError("column index out of range");
    Mat r(rows_, cols_ - 1);
    for (int i = 0; i < rows_; ++i)
        for (int c = 0; c < cols_; ++c)
            if (c != j) r.at(i, c < j ? c : c - 1) = at(i, c);
    return r;
}

Mat Mat::with_row_removed(int i) const {
    if (i < 0 || i >= rows_) throw DimensionError("row index out of range");
    Mat r(rows_ - 1, cols_);
    for (int r0 = 0; r0 < rows_; ++r0)
        if (r0 != i)
            for (int j = 0; j < cols_; ++j) r.at(r0 < i ? r0 : r0 - 1, j) = at(r0, j);
    return r;
}

std::string to_string(const Mat& m) {
    std::string s = "[";
    for (int i = 0; i < m.rows(); ++i) {
        s += i ? ", [" : "[";
        for (int j = 0; j < m.cols(); ++j) {
            if (j) s += ", ";
            s += to_string(m.at(i, j));
        }
        s += "]";
    }
    return s + "]";
}

namespace {

Laurent det_cofactor(const Mat& m) {
    int n = m.rows();
    if (n == 0) return Laurent(1);
    if (n == 1) return m.at(0, 0);
    Laurent d;
    Mat sub = m.row_slice(1, n);
    for (int j = 0; j < n; ++j) {
        if (m.at(0, j).is_zero()) continue;
        Laurent c = m.at(0, j) * det_cofactor(sub.with_col_removed(j));
        d += (j % 2 == 0) ? c : -c;
    }
    return d;
}

Laurent det_bareiss(Mat m) {
    int n = m.rows();
    int sign = 1;
    Laurent prev(1);
    for (int k = 0; k < n - 1; ++k) {
        if (m.at(k, k).is_zero()) {
            int sw = -1;
            for (int i = k + 1; i < n; ++i)
                if (!m.at(i, k).is_zero()) { sw = i; break; }
            if (sw == -1) return Laurent();
            for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(sw, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m.at(i, j) = exact_div(m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j), prev);
        prev = m.at(k, k);
    }
    Laurent d = m.at(n - 1, n - 1);
    return sign == 1 ? d : -d;
}

} // namespace

Laurent det(const Mat& m) {
    if (m.rows() != m.cols()) throw DimensionError("det of non-square matrix");
    return m.rows() < 5 ? det_cofactor(m) : det_bareiss(m);
}

namespace {

using Grid = std::vector<std::vector<RatFunc>>;

Grid grid_of(const Mat& m) {
    Grid g(static_cast<size_t>(m.rows()), std::vector<RatFunc>(static_cast<size_t>(m.cols())));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) g[static_cast<size_t>(i)][static_cast<size_t>(j)] = RatFunc(m.at(i, j));
    return g;
}

struct Rref {
    Grid m;
    std::vector<std::pair<int, int>> pivots; /* (row, col) */
    std::vector<int> pivot_row_of_col;       /* -1 for free columns */
};

/* Reduced row echelon form over the fraction field. Pivot choice: unit
   entries first (they keep elimination denominator-free), then the fewest
   terms, ties broken by lowest column index, then lowest row index. Pivots
   are confined to the first pivot_cols columns (the rest ride along,
   e.g. augmented right sides). */
Rref rref(Grid m, int pivot_cols) {
    int rows = static_cast<int>(m.size());
    int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
    (void)cols;
    Rref r;
    r.pivot_row_of_col.assign(static_cast<size_t>(pivot_cols), -1);
    std::vector<bool> row_used(static_cast<size_t>(rows), false);
    while (true) {
        int best_r = -1, best_c = -1, best_terms = INT_MAX;
        bool best_unit = false;
        for (int j = 0; j < pivot_cols; ++j) {
            if (r.pivot_row_of_col[static_cast<size_t>(j)] != -1) continue;
            for (int i = 0; i < rows; ++i) {
                if (row_used[static_cast<size_t>(i)]) continue;
                const RatFunc& v = m[static_cast<size_t>(i)][static_cast<size_t>(j)];
                if (v.is_zero()) continue;
                bool u = v.is_laurent() && v.num().is_unit();
                if (std::pair(!u, v.terms()) < std::pair(!best_unit, best_terms)) {
                    best_unit = u;
                    best_terms = v.terms();
                    best_r = i;
                    best_c = j;
                }
            }
        }
        if (best_r == -1) break;
        auto& prow = m[static_cast<size_t>(best_r)];
        RatFunc p = prow[static_cast<size_t>(best_c)];
        for (auto& v : prow) v = v / p;
        for (int i = 0; i < rows; ++i) {
            if (i == best_r) continue;
            auto& row = m[static_cast<size_t>(i)];
            RatFunc f = row[static_cast<size_t>(best_c)];
            if (f.is_zero()) continue;
            for (size_t j = 0; j < row.size(); ++j) row[j] = row[j] - f * prow[j];
        }
        row_used[static_cast<size_t>(best_r)] = true;
        r.pivot_row_of_col[static_cast<size_t>(best_c)] = best_r;
        r.pivots.emplace_back(best_r, best_c);
    }
    r.m = std::move(m);
    return r;
}

/* Clear denominators, divide out the entry gcd, then scale by the unit
   that puts the first nonzero entry in canonical form. */
void normalize_column(std::vector<RatFunc>& x, Mat& out, int col) {
    Laurent l(1);
    for (const RatFunc& v : x)
        if (!v.is_zero()) l = lcm(l, v.den());
    std::vector<Laurent> ints(x.size());
    for (size_t i = 0; i < x.size(); ++i)
        if (!x[i].is_zero()) ints[i] = x[i].num() * exact_div(l, x[i].den());
    Laurent g;
    for (const Laurent& v : ints) g = gcd(g, v);
    if (!g.is_zero())
        for (Laurent& v : ints) v = exact_div(v, g);
    for (const Laurent& v : ints)
        if (!v.is_zero()) {
            Laurent u = canonical_unit(v);
            for (Laurent& w : ints) w = w * u;
            break;
        }
    for (size_t i = 0; i < ints.size(); ++i) out.at(static_cast<int>(i), col) = ints[i];
}

bool next_combination(std::vector<int>& c, int n) {
    int k = static_cast<int>(c.size());
    for (int i = k - 1; i >= 0; --i) {
        if (c[static_cast<size_t>(i)] < n - k + i) {
            ++c[static_cast<size_t>(i)];
            for (int j = i + 1; j < k; ++j) c[static_cast<size_t>(j)] = c[static_cast<size_t>(j - 1)] + 1;
            return true;
        }
    }
    return false;
}

} // namespace

Saturation run_saturation_certificate(GeneratorSet& gs) {
    int n = gs.ambient_rank, k = gs.count();
    if (k == 0) {
        gs.cert_gcd = Laurent(1);
        gs.cert = Saturation::Certified;
        return gs.cert;
    }
    if (k > n) {
        gs.cert_gcd = Laurent();
        gs.cert = Saturation::Uncertified;
        return gs.cert;
    }
    std::vector<int> rowsel(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) rowsel[static_cast<size_t>(i)] = i;
    Laurent g;
    do {
        Mat sub(k, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) sub.at(i, j) = gs.gens.at(rowsel[static_cast<size_t>(i)], j);
        g = gcd(g, det(sub));
        if (g.is_one()) break;
    } while (next_combination(rowsel, n));
    gs.cert_gcd = g;
    gs.cert = g.is_one() ? Saturation::Certified : Saturation::Uncertified;
    return gs.cert;
}

namespace {

GeneratorSet kernel_basis(const Mat& m) {
    int n = m.cols();
    GeneratorSet gs;
    gs.ambient_rank = n;
    if (n == 0) {
        gs.gens = Mat(0, 0);
        run_saturation_certificate(gs);
        return gs;
    }
    /* Dividing a constraint row by its gcd leaves the kernel unchanged
       and keeps elimination entries small. */
    Mat cleaned = m;
    for (int i = 0; i < cleaned.rows(); ++i) {
        Laurent g;
        for (int j = 0; j < n; ++j) g = gcd(g, cleaned.at(i, j));
        if (g.is_zero() || g.is_one()) continue;
        for (int j = 0; j < n; ++j) cleaned.at(i, j) = exact_div(cleaned.at(i, j), g);
    }
    Rref r = rref(grid_of(cleaned), n);
    std::vector<int> free_cols;
    for (int j = 0; j < n; ++j)
        if (r.pivot_row_of_col[static_cast<size_t>(j)] == -1) free_cols.push_back(j);
    gs.gens = Mat(n, static_cast<int>(free_cols.size()));
    for (size_t fi = 0; fi < free_cols.size(); ++fi) {
        int f = free_cols[fi];
        std::vector<RatFunc> x(static_cast<size_t>(n));
        x[static_cast<size_t>(f)] = RatFunc(Laurent(1));
        for (auto [pr, pc] : r.pivots)
            x[static_cast<size_t>(pc)] = -r.m[static_cast<size_t>(pr)][static_cast<size_t>(f)];
        normalize_column(x, gs.gens, static_cast<int>(fi));
    }
    run_saturation_certificate(gs);
    return gs;
}

} // namespace

GeneratorSet kernel(const Mat& m) {
    GeneratorSet gs = kernel_basis(m);
    if (gs.cert != Saturation::Certified && gs.count() > 0) {
        /* The solution lattice of m x = 0 equals its own saturation, so a
           second elimination through the annihilator of the first basis can
           recover a certified basis for the same lattice. */
        GeneratorSet ann = kernel_basis(gs.gens.transpose());
        GeneratorSet sat = kernel_basis(ann.gens.transpose());
        if (sat.cert == Saturation::Certified && sat.count() == gs.count()) gs = std::move(sat);
    }
    return gs;
}

GeneratorSet saturate(const GeneratorSet& gs) {
    int n = gs.ambient_rank;
    if (gs.count() == 0) {
        GeneratorSet r;
        r.ambient_rank = n;
        r.gens = Mat(n, 0);
        run_saturation_certificate(r);
        return r;
    }
    GeneratorSet ann = kernel(gs.gens.transpose());
    GeneratorSet sat = kernel(ann.gens.transpose());
    if (sat.cert != Saturation::Certified)
        throw UnsaturatableError("saturation could not be certified", sat.cert_gcd);
    return sat;
}

Laurent minor_gcd(const Mat& m, int g) {
    if (g < 0 || g > std::min(m.rows(), m.cols())) throw DimensionError("minor order out of range");
    if (g == 0) return Laurent(1);
    if (g > rank_over_field(m)) return Laurent();
    std::vector<int> rowsel(static_cast<size_t>(g));
    for (int i = 0; i < g; ++i) rowsel[static_cast<size_t>(i)] = i;
    Laurent acc;
    do {
        std::vector<int> colsel(static_cast<size_t>(g));
        for (int i = 0; i < g; ++i) colsel[static_cast<size_t>(i)] = i;
        do {
            Mat sub(g, g);
            for (int i = 0; i < g; ++i)
                for (int j = 0; j < g; ++j)
                    sub.at(i, j) = m.at(rowsel[static_cast<size_t>(i)], colsel[static_cast<size_t>(j)]);
            acc = gcd(acc, det(sub));
            if (acc.is_one()) return acc;
        } while (next_combination(colsel, m.cols()));
    } while (next_combination(rowsel, m.rows()));
    return canonical_form(acc);
}

GeneratorSet row_syzygy(const Mat& row) {
    if (row.rows() != 1) throw DimensionError("row_syzygy expects a single row");
    if (row.cols() == 2 && !(row.at(0, 0).is_zero() && row.at(0, 1).is_zero())) {
        const Laurent &a = row.at(0, 0), &b = row.at(0, 1);
        Laurent g = gcd(a, b);
        GeneratorSet gs;
        gs.ambient_rank = 2;
        gs.gens = Mat(2, 1);
        gs.gens.at(0, 0) = exact_div(b, g);
        gs.gens.at(1, 0) = -exact_div(a, g);
        run_saturation_certificate(gs);
        return gs;
    }
    GeneratorSet ks = kernel(row);
    if (ks.cert != Saturation::Certified) ks = saturate(ks);
    return ks;
}

int rank_over_field(const Mat& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    return static_cast<int>(rref(grid_of(m), m.cols()).pivots.size());
}

bool solve_rational(const Mat& m, const Mat& rhs, std::vector<std::vector<RatFunc>>& x) {
    if (m.rows() != rhs.rows()) throw DimensionError("solve: row mismatch");
    int n = m.cols(), k = rhs.cols();
    Rref r = rref(grid_of(Mat::hstack(m, rhs)), n);
    /* Rows without a pivot have been fully eliminated on the left; any
       nonzero right-hand entry there means the system is inconsistent. */
    std::vector<bool> is_pivot_row(static_cast<size_t>(m.rows()), false);
    for (auto [pr, pc] : r.pivots) { (void)pc; is_pivot_row[static_cast<size_t>(pr)] = true; }
    for (int i = 0; i < m.rows(); ++i) {
        if (is_pivot_row[static_cast<size_t>(i)]) continue;
        for (int j = 0; j < k; ++j)
            if (!r.m[static_cast<size_t>(i)][static_cast<size_t>(n + j)].is_zero()) return false;
    }
    x.assign(static_cast<size_t>(n), std::vector<RatFunc>(static_cast<size_t>(k)));
    for (auto [pr, pc] : r.pivots)
        for (int j = 0; j < k; ++j)
            x[static_cast<size_t>(pc)][static_cast<size_t>(j)] = r.m[static_cast<size_t>(pr)][static_cast<size_t>(n + j)];
    return true;
}

bool member(const GeneratorSet& gs, const Mat& v) {
    if (v.rows() != gs.ambient_rank || v.cols() != 1) throw DimensionError("member: bad vector shape");
    if (gs.count() == 0) return v.is_zero();
    if (rank_over_field(gs.gens) != gs.count())
        throw MathError("membership test requires a free generating set");
    std::vector<std::vector<RatFunc>> x;
    if (!solve_rational(gs.gens, v, x)) return false;
    for (const auto& xi : x)
        if (!xi[0].is_laurent()) return false;
    return true;
}

bool span_equal(const GeneratorSet& a, const GeneratorSet& b) {
    if (a.ambient_rank != b.ambient_rank) throw DimensionError("span_equal: ambient mismatch");
    if (a.count() != b.count()) return false;
    for (int j = 0; j < b.count(); ++j)
        if (!member(a, b.gens.col(j))) return false;
    for (int j = 0; j < a.count(); ++j)
        if (!member(b, a.gens.col(j))) return false;
    return true;
}

GeneratorSet drop_unit_dependencies(const GeneratorSet& gs) {
    GeneratorSet r = gs;
    while (r.count() > 0) {
        bool removed = false;
        for (int j = r.count() - 1; j >= 0; --j)
            if (r.gens.col(j).is_zero()) {
                r.gens = r.gens.with_col_removed(j);
                removed = true;
            }
        if (removed) continue;
        GeneratorSet dep = kernel(r.gens);
        if (dep.count() == 0) break;
        int drop = -1;
        for (int j = 0; j < dep.count() && drop == -1; ++j)
            for (int i = 0; i < dep.ambient_rank && drop == -1; ++i)
                if (dep.gens.at(i, j).is_unit()) drop = i;
        if (drop == -1) break;
        r.gens = r.gens.with_col_removed(drop);
    }
    run_saturation_certificate(r);
    return r;
}

GeneratorSet intersect(const GeneratorSet& a, const GeneratorSet& b) {
    if (a.ambient_rank != b.ambient_rank) throw DimensionError("intersect: ambient mismatch");
    if (a.cert != Saturation::Certified || b.cert != Saturation::Certified)
        throw MathError("intersect requires certified generator sets");
    GeneratorSet r;
    r.ambient_rank = a.ambient_rank;
    if (a.count() == 0 || b.count() == 0) {
        r.gens = Mat(a.ambient_rank, 0);
        run_saturation_certificate(r);
        return r;
    }
    GeneratorSet k = kernel(Mat::hstack(a.gens, -b.gens));
    if (k.cert != Saturation::Certified)
        throw UnsaturatableError("intersection generators could not be certified", k.cert_gcd);
    r.gens = a.gens * k.gens.row_slice(0, a.count());
    run_saturation_certificate(r);
    if (r.cert != Saturation::Certified)
        throw UnsaturatableError("intersection could not be certified", r.cert_gcd);
    return r;
}

} // namespace tangles
