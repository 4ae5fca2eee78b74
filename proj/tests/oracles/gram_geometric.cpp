#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "gram_oracle.hpp"
#include "tangles/laurent.hpp"

namespace tangles::oracle {

namespace {

using Rat = boost::multiprecision::cpp_rational;

struct Pt {
    Rat x, y;
};

Rat cross(const Pt& a, const Pt& b) { return a.x * b.y - a.y * b.x; }
Pt sub(const Pt& a, const Pt& b) { return {a.x - b.x, a.y - b.y}; }

/* Thrown when the configuration is non-generic (touching endpoints,
   crossings on a branch cut, overlapping segments); the caller retries
   with different jitter. */
struct Retry {};

/* Append a lasso from `base` around puncture m: approach the square
   boundary from below, circle it once (counterclockwise for s = +1),
   leave through a nearby point on the bottom edge, return to base. */
void lasso(std::vector<Pt>& out, const Pt& base, int m, int s, const Rat& r) {
    Rat a1 = r * 5 / 8, a2 = r * 3 / 8;
    Pt e1{Rat(m) + a1, -r}, e2{Rat(m) + a2, -r};
    Pt se{Rat(m) + r, -r}, ne{Rat(m) + r, r}, nw{Rat(m) - r, r}, sw{Rat(m) - r, -r};
    out.push_back(base);
    if (s > 0) {
        out.insert(out.end(), {e1, se, ne, nw, sw, e2});
    } else {
        out.insert(out.end(), {e2, sw, nw, ne, se, e1});
    }
}

/* The class v_i = (lift of the loop around puncture i with its own sign)
   minus (the same for puncture i+1): realized by the composite loop
   e_i^{eps_i} e_{i+1}^{-eps_{i+1}}, whose total winding weight vanishes so
   it lifts to a closed curve. Parameters depend on (i, copy, jitter) so
   that distinct polygons never share square radii. */
std::vector<Pt> curve_v(int i, int copy, int jitter, const std::vector<int>& eps) {
    Rat k(400 + 37 * jitter);
    auto off = [&](int which) { return Rat(((i * 2 + copy) * 2 + which) + 1) / k; };
    Rat r1 = Rat(1, 4) - off(0);
    Rat r2 = Rat(1, 4) - off(1);
    Pt base{Rat(i) + Rat(1, 2) + off(0) / 8, Rat(-3) - off(1)};
    std::vector<Pt> out;
    lasso(out, base, i, eps[static_cast<size_t>(i - 1)] > 0 ? +1 : -1, r1);
    lasso(out, base, i + 1, eps[static_cast<size_t>(i)] > 0 ? -1 : +1, r2);
    return out;
}

struct Piece {
    Pt p, q;
    int level;
};

/* Walk the closed polygon, cutting each edge where it crosses a branch cut
   (the vertical ray above a puncture). Crossing the cut of puncture m
   right-to-left raises the level by eps_m; left-to-right lowers it. The
   walk must return to level 0. */
std::vector<Piece> lift(const std::vector<Pt>& poly, const std::vector<int>& eps) {
    int n = static_cast<int>(eps.size());
    std::vector<Piece> out;
    int level = 0;
    for (size_t v = 0; v < poly.size(); ++v) {
        const Pt& p = poly[v];
        const Pt& q = poly[(v + 1) % poly.size()];
        struct Hit {
            Rat tau;
            int m, dir;
        };
        std::vector<Hit> hits;
        for (int m = 1; m <= n; ++m) {
            Rat dm(m);
            if ((p.x == dm && p.y > 0) || (q.x == dm && q.y > 0)) throw Retry{};
            if ((p.x < dm && q.x > dm) || (p.x > dm && q.x < dm)) {
                Rat tau = (dm - p.x) / (q.x - p.x);
                Rat ystar = p.y + tau * (q.y - p.y);
                if (ystar == 0) throw Retry{};
                if (ystar > 0) hits.push_back({tau, m, p.x < dm ? +1 : -1});
            }
        }
        std::sort(hits.begin(), hits.end(), [](const Hit& a, const Hit& b) { return a.tau < b.tau; });
        Pt cur = p;
        for (const Hit& h : hits) {
            Pt mid{Rat(h.m), p.y + h.tau * (q.y - p.y)};
            out.push_back({cur, mid, level});
            level += h.dir < 0 ? eps[static_cast<size_t>(h.m - 1)] : -eps[static_cast<size_t>(h.m - 1)];
            cur = mid;
        }
        out.push_back({cur, q, level});
    }
    if (level != 0) throw std::logic_error("lifted curve does not close up");
    return out;
}

/* Signed, level-weighted crossing count of two lifted curves. A crossing
   of the k-th translate of A with B contributes t^{-k} where k is the
   level of B minus the level of A at the crossing. */
Laurent pair_form(const std::vector<Piece>& a, const std::vector<Piece>& b) {
    Laurent w;
    for (const Piece& s : a) {
        for (const Piece& u : b) {
            Pt d1 = sub(s.q, s.p), d2 = sub(u.q, u.p), r = sub(u.p, s.p);
            Rat den = cross(d1, d2);
            if (den == 0) {
                if (cross(r, d1) != 0) continue;
                /* Collinear: reject genuine overlap. */
                Rat lo1 = 0, hi1 = d1.x * d1.x + d1.y * d1.y;
                Rat t0 = r.x * d1.x + r.y * d1.y;
                Pt r2 = sub(u.q, s.p);
                Rat t1 = r2.x * d1.x + r2.y * d1.y;
                if (std::max(std::min(t0, t1), lo1) < std::min(std::max(t0, t1), hi1)) throw Retry{};
                continue;
            }
            Rat t1 = cross(r, d2) / den, t2 = cross(r, d1) / den;
            if (t1 < 0 || t1 > 1 || t2 < 0 || t2 > 1) continue;
            if (t1 == 0 || t1 == 1 || t2 == 0 || t2 == 1) throw Retry{};
            w += Laurent::term(den > 0 ? 1 : -1, s.level - u.level);
        }
    }
    return w;
}

} // namespace

Mat gram_geometric(const std::vector<int>& eps) {
    int n = static_cast<int>(eps.size());
    int d = n - 1;
    if (d <= 0) return Mat(0, 0);
    for (int jitter = 0; jitter < 64; ++jitter) {
        try {
            std::vector<std::vector<Piece>> copy0, copy1;
            for (int i = 1; i <= d; ++i) {
                copy0.push_back(lift(curve_v(i, 0, jitter, eps), eps));
                copy1.push_back(lift(curve_v(i, 1, jitter, eps), eps));
            }
            Mat g(d, d);
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j)
                    g.at(i, j) = pair_form(copy0[static_cast<size_t>(i)], copy1[static_cast<size_t>(j)]);
            for (int i = 0; i < d; ++i) {
                for (int j = 0; j < d; ++j) {
                    if (std::abs(i - j) >= 2 && !g.at(i, j).is_zero())
                        throw std::logic_error("distant curves are disjoint but paired nonzero");
                    if (g.at(j, i) != -involute(g.at(i, j)))
                        throw std::logic_error("pairing is not skew under the involution");
                }
            }
            return g;
        } catch (const Retry&) {
            continue;
        }
    }
    throw std::logic_error("no generic polygon configuration found");
}

} // namespace tangles::oracle
