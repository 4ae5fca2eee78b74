#include "tangles/diskhomology.hpp"

#include <cstddef>
#include <map>
#include <mutex>
#include <utility>

#include "tangles/errors.hpp"

namespace tangles {

namespace {

/* Inverse of a unit c*t^k: the involution negates the exponent and fixes
   the sign, so it is exactly the inverse on units. */
Laurent unit_inverse(const Laurent& u) {
    if (!u.is_unit()) throw DivisionError("unit_inverse of a non-unit");
    return involute(u);
}

} // namespace

int total_winding(const SignSeq& eps) {
    int l = 0;
    for (int e : eps) l += e;
    return l;
}

void validate_signs(const SignSeq& eps) {
    for (int e : eps)
        if (e != 1 && e != -1) throw ValidationError("sign sequence entries must be +1 or -1");
}

std::string signs_label(const SignSeq& eps) {
    std::string s;
    for (int e : eps) s += e > 0 ? '+' : '-';
    return s;
}

Mat gram_form(const SignSeq& eps) {
    validate_signs(eps);
    int n = static_cast<int>(eps.size());
    int d = n - 1;
    if (d <= 0) return Mat(0, 0);
    Mat g(d, d);
    for (int i = 0; i < d; ++i) {
        int diag = (eps[static_cast<size_t>(i)] + eps[static_cast<size_t>(i + 1)]) / 2;
        g.at(i, i) = Laurent::term(diag, 1) - Laurent::term(diag, -1);
        if (i + 1 < d) {
            int e = eps[static_cast<size_t>(i + 1)];
            g.at(i, i + 1) = Laurent::t(-e) - Laurent(1);
            g.at(i + 1, i) = Laurent(1) - Laurent::t(e);
        }
    }
    return g;
}

std::vector<Laurent> relation_vector(const SignSeq& eps) {
    validate_signs(eps);
    int n = static_cast<int>(eps.size());
    if (n == 0) throw ValidationError("relation vector of the empty sequence");
    if (total_winding(eps) != 0) throw ValidationError("relation vector requires total winding zero");
    /* Lift the boundary word puncture by puncture: at step i the running
       level is c = eps_1 + ... + eps_{i-1}; a positive pass contributes
       t^c times the i-th loop, a negative pass contributes -t^{c-1}. The
       v-basis coordinate q_j collects the contributions of loops 1..j. */
    std::vector<Laurent> q(static_cast<size_t>(n - 1));
    Laurent acc;
    int c = 0;
    for (int i = 0; i < n - 1; ++i) {
        acc += eps[static_cast<size_t>(i)] > 0 ? Laurent::t(c) : -Laurent::t(c - 1);
        c += eps[static_cast<size_t>(i)];
        q[static_cast<size_t>(i)] = acc;
    }
    return q;
}

const DiskObject& build_object(const SignSeq& eps) {
    static std::map<SignSeq, DiskObject> cache;
    static std::mutex cache_mutex;
    std::lock_guard<std::mutex> lock(cache_mutex);
    if (auto it = cache.find(eps); it != cache.end()) return it->second;

    validate_signs(eps);
    int n = static_cast<int>(eps.size());
    int d = n - 1;
    int l = total_winding(eps);
    Mat g = gram_form(eps);

    DiskObject obj;
    obj.eps = eps;
    if (n == 0 || l != 0) {
        obj.module = make_hermitian(std::max(d, 0), g, signs_label(eps));
        obj.lift = Mat::identity(std::max(d, 0));
        obj.proj = obj.lift;
    } else {
        std::vector<Laurent> q = relation_vector(eps);
        int drop = -1;
        for (int j = d - 1; j >= 0; --j)
            if (q[static_cast<size_t>(j)].is_unit()) {
                drop = j;
                break;
            }
        if (drop == -1)
            throw ConstructionError("boundary relation has no unit coefficient to eliminate");
        Mat qcol(d, 1);
        for (int j = 0; j < d; ++j) qcol.at(j, 0) = q[static_cast<size_t>(j)];
        if (!(g * qcol).is_zero() || !(qcol.dagger() * g).is_zero())
            throw ConstructionError("boundary relation does not lie in the radical");
        Mat quot = g.with_row_removed(drop).with_col_removed(drop);
        obj.module = make_hermitian(d - 1, quot, signs_label(eps));
        obj.relation = std::move(q);
        obj.eliminated_index = drop;
        obj.lift = Mat::identity(d).with_col_removed(drop);
        /* proj x = coordinates of x - (x_drop / q_drop) * relation on the
           kept basis vectors; kills the relation, splits the lift. */
        Laurent qinv = unit_inverse((*obj.relation)[static_cast<size_t>(drop)]);
        Mat proj(d - 1, d);
        for (int r = 0, i = 0; i < d; ++i) {
            if (i == drop) continue;
            proj.at(r, i) = Laurent(1);
            proj.at(r, drop) = -(*obj.relation)[static_cast<size_t>(i)] * qinv;
            ++r;
        }
        obj.proj = proj;
        if (!(obj.proj * obj.lift == Mat::identity(d - 1)))
            throw ConstructionError("projection does not split the lift");
        if (!(obj.proj * qcol).is_zero())
            throw ConstructionError("projection does not kill the boundary relation");
    }
    return cache.emplace(eps, std::move(obj)).first->second;
}

} // namespace tangles
