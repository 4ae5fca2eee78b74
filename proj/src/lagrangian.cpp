#include "tangles/lagrangian.hpp"

namespace tangles {

namespace {

Laurent unit_inverse(const Laurent& u) {
    if (!u.is_unit()) throw MathError("inverse of a non-unit");
    return u.involute();
}

Mat laurent_rows(const std::vector<std::vector<RatFunc>>& x, int from, int to, const char* what) {
    int cols = x.empty() ? 0 : static_cast<int>(x[0].size());
    Mat r(to - from, cols);
    for (int i = from; i < to; ++i)
        for (int j = 0; j < cols; ++j) {
            const RatFunc& v = x[static_cast<size_t>(i)][static_cast<size_t>(j)];
            if (!v.is_laurent()) throw MathError(std::string(what) + ": coordinates are not integral");
            r.at(i - from, j) = v.as_laurent();
        }
    return r;
}

} // namespace

HermitianModule make_hermitian(int rank, Mat gram, std::string label) {
    if (rank < 0 || gram.rows() != rank || gram.cols() != rank)
        throw ConstructionError("hermitian module: bad Gram shape");
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j)
            if (gram.at(j, i) != -involute(gram.at(i, j)))
                throw ConstructionError("hermitian module: form is not skew-hermitian");
    if (rank > 0 && det(gram).is_zero())
        throw ConstructionError("hermitian module: degenerate form");
    return HermitianModule{rank, std::move(gram), std::move(label)};
}

HermitianModule direct_sum(const HermitianModule& a, const HermitianModule& b) {
    Mat g(a.rank + b.rank, a.rank + b.rank);
    for (int i = 0; i < a.rank; ++i)
        for (int j = 0; j < a.rank; ++j) g.at(i, j) = a.gram.at(i, j);
    for (int i = 0; i < b.rank; ++i)
        for (int j = 0; j < b.rank; ++j) g.at(a.rank + i, a.rank + j) = b.gram.at(i, j);
    std::string label;
    if (!a.label.empty() || !b.label.empty()) label = a.label + "+" + b.label;
    return HermitianModule{a.rank + b.rank, std::move(g), std::move(label)};
}

HermitianModule negated(const HermitianModule& h) {
    return HermitianModule{h.rank, -h.gram, h.label.empty() ? "" : "-" + h.label};
}

Laurent pair_form(const HermitianModule& h, const Mat& x, const Mat& y) {
    if (x.rows() != h.rank || y.rows() != h.rank || x.cols() != 1 || y.cols() != 1)
        throw DimensionError("pair_form: bad vector shape");
    return (x.dagger() * h.gram * y).at(0, 0);
}

GeneratorSet annihilator(const HermitianModule& h, const GeneratorSet& a) {
    if (a.ambient_rank != h.rank) throw DimensionError("annihilator: ambient mismatch");
    Mat rows = a.gens.dagger() * h.gram;
    GeneratorSet k = kernel(rows);
    if (k.cert != Saturation::Certified) k = saturate(k);
    return k;
}

GeneratorSet closure_set(const GeneratorSet& a) { return saturate(a); }

bool is_isotropic(const HermitianModule& h, const GeneratorSet& a) {
    if (a.ambient_rank != h.rank) throw DimensionError("is_isotropic: ambient mismatch");
    return (a.gens.dagger() * h.gram * a.gens).is_zero();
}

bool is_lagrangian(const HermitianModule& h, const GeneratorSet& a) {
    if (a.cert != Saturation::Certified)
        throw MathError("is_lagrangian requires a certified generator set");
    GeneratorSet ann = annihilator(h, a);
    return span_equal(a, ann);
}

Contraction contract(const HermitianModule& h, const GeneratorSet& l, const GeneratorSet& a) {
    if (l.ambient_rank != h.rank || a.ambient_rank != h.rank)
        throw DimensionError("contract: ambient mismatch");
    if (a.cert != Saturation::Certified)
        throw ConstructionError("contract: the contracted submodule must be certified closed");
    if (!is_isotropic(h, a))
        throw ConstructionError("contract: the contracted submodule must be isotropic");

    GeneratorSet b = annihilator(h, a);
    int k = b.count(), m = a.count();

    /* Coordinates of A's generators in the annihilator basis. */
    std::vector<std::vector<RatFunc>> xr;
    if (!solve_rational(b.gens, a.gens, xr))
        throw ConstructionError("contract: generators do not lie in the annihilator");
    Mat x = laurent_rows(xr, 0, k, "contract");

    /* Unimodular completion: row-reduce x to (I; 0) using unit pivots,
       tracking the inverse basis change. */
    Mat uinv = Mat::identity(k);
    for (int c = 0; c < m; ++c) {
        int pivot = -1;
        for (int r = c; r < k && pivot == -1; ++r)
            if (x.at(r, c).is_unit()) pivot = r;
        if (pivot == -1)
            throw ConstructionError("contract: no unit pivot while completing the basis");
        if (pivot != c) {
            for (int j = 0; j < m; ++j) std::swap(x.at(c, j), x.at(pivot, j));
            for (int i = 0; i < k; ++i) std::swap(uinv.at(i, c), uinv.at(i, pivot));
        }
        Laurent s_piv = x.at(c, c);
        Laurent sinv = unit_inverse(s_piv);
        for (int j = 0; j < m; ++j) x.at(c, j) = x.at(c, j) * sinv;
        for (int i = 0; i < k; ++i) uinv.at(i, c) = uinv.at(i, c) * s_piv;
        for (int i = 0; i < k; ++i) {
            if (i == c) continue;
            Laurent lambda = x.at(i, c);
            if (lambda.is_zero()) continue;
            for (int j = 0; j < m; ++j) x.at(i, j) -= lambda * x.at(c, j);
            for (int r = 0; r < k; ++r) uinv.at(r, c) += lambda * uinv.at(r, i);
        }
    }

    Mat ann_basis = b.gens * uinv;
    Mat q = ann_basis.col_slice(m, k);
    Mat gram_q = q.dagger() * h.gram * q;
    HermitianModule module = make_hermitian(k - m, gram_q, h.label);

    /* (L + A) intersected with the annihilator, pushed to the quotient. */
    Mat s = Mat::hstack(l.gens, a.gens);
    GeneratorSet image;
    image.ambient_rank = k - m;
    if (s.cols() == 0) {
        image.gens = Mat(k - m, 0);
    } else {
        GeneratorSet cap = kernel(Mat::hstack(s, -b.gens));
        if (cap.cert != Saturation::Certified) cap = saturate(cap);
        Mat igens = s * cap.gens.row_slice(0, s.cols());
        std::vector<std::vector<RatFunc>> yr;
        if (!solve_rational(ann_basis, igens, yr))
            throw ConstructionError("contract: image does not lie in the annihilator");
        image.gens = laurent_rows(yr, m, k, "contract");
    }
    image = drop_unit_dependencies(image);

    return Contraction{std::move(module), std::move(image), std::move(ann_basis), m};
}

Mat quotient_coords(const Contraction& c, const Mat& ambient_cols) {
    std::vector<std::vector<RatFunc>> yr;
    if (!solve_rational(c.ann_basis, ambient_cols, yr))
        throw MathError("quotient_coords: columns are not in the annihilator");
    return laurent_rows(yr, c.a_count, c.ann_basis.cols(), "quotient_coords");
}

HermitianModule relation_ambient(const Relation& r) {
    return direct_sum(negated(r.source), r.target);
}

GeneratorSet relation_genset(const Relation& r) {
    GeneratorSet gs;
    gs.ambient_rank = r.source.rank + r.target.rank;
    gs.gens = r.stacked();
    gs.cert = r.cert;
    gs.cert_gcd = r.cert_gcd;
    return gs;
}

Relation make_relation(HermitianModule src, HermitianModule tgt, Mat msrc, Mat mtgt) {
    if (msrc.rows() != src.rank || mtgt.rows() != tgt.rank || msrc.cols() != mtgt.cols())
        throw DimensionError("relation: block shapes do not match the boundary modules");
    Relation r;
    r.source = std::move(src);
    r.target = std::move(tgt);
    r.msrc = std::move(msrc);
    r.mtgt = std::move(mtgt);
    GeneratorSet gs = relation_genset(r);
    run_saturation_certificate(gs);
    r.cert = gs.cert;
    r.cert_gcd = gs.cert_gcd;
    return r;
}

bool check_lagrangian(Relation& r) {
    if (r.cert != Saturation::Certified) {
        r.lagrangian_checked = false;
        return false;
    }
    GeneratorSet gs = relation_genset(r);
    r.lagrangian_checked = is_lagrangian(relation_ambient(r), gs);
    return r.lagrangian_checked;
}

Relation diagonal(const HermitianModule& h) {
    return graph(Mat::identity(h.rank), h, h);
}

Relation graph(const Mat& m, const HermitianModule& src, const HermitianModule& tgt) {
    if (m.rows() != tgt.rank || m.cols() != src.rank)
        throw DimensionError("graph: matrix shape does not match the modules");
    if (m.dagger() * tgt.gram * m != src.gram)
        throw ConstructionError("graph: matrix is not unitary for the given forms");
    Relation r = make_relation(src, tgt, Mat::identity(src.rank), m);
    check_lagrangian(r);
    return r;
}

Relation restricted_graph(const Mat& phi_num, const Laurent& phi_den,
                          const HermitianModule& src, const HermitianModule& tgt) {
    if (phi_num.rows() != tgt.rank || phi_num.cols() != src.rank)
        throw DimensionError("restricted_graph: matrix shape does not match the modules");
    if (phi_den.is_zero()) throw DivisionError("restricted_graph: zero denominator");
    if (phi_num.dagger() * tgt.gram * phi_num != src.gram.scaled(involute(phi_den) * phi_den))
        throw ConstructionError("restricted_graph: fraction is not unitary for the given forms");
    Mat stacked = Mat::vstack(Mat::identity(src.rank).scaled(phi_den), phi_num);
    GeneratorSet gs;
    gs.ambient_rank = src.rank + tgt.rank;
    gs.gens = stacked;
    GeneratorSet sat = saturate(gs);
    Relation r = make_relation(src, tgt, sat.gens.row_slice(0, src.rank),
                               sat.gens.row_slice(src.rank, src.rank + tgt.rank));
    check_lagrangian(r);
    return r;
}

Relation compose(const Relation& n1, const Relation& n2) {
    if (n1.target.rank != n2.source.rank || n1.target.gram != n2.source.gram)
        throw DimensionError("compose: middle modules do not match");
    int k1 = n1.count(), k2 = n2.count();
    GeneratorSet w = kernel(Mat::hstack(-n1.mtgt, n2.msrc));
    Mat w1 = w.gens.row_slice(0, k1);
    Mat w2 = w.gens.row_slice(k1, k1 + k2);
    Mat ms = n1.msrc * w1, mt = n2.mtgt * w2;
    /* A solution whose image vanishes in both boundary modules contributes
       nothing to the composite span; keep the generator count honest. */
    std::vector<int> keep;
    for (int j = 0; j < ms.cols(); ++j)
        if (!(ms.col(j).is_zero() && mt.col(j).is_zero())) keep.push_back(j);
    if (static_cast<int>(keep.size()) != ms.cols()) {
        Mat ms2(ms.rows(), static_cast<int>(keep.size())), mt2(mt.rows(), static_cast<int>(keep.size()));
        for (size_t j = 0; j < keep.size(); ++j) {
            for (int i = 0; i < ms.rows(); ++i) ms2.at(i, static_cast<int>(j)) = ms.at(i, keep[j]);
            for (int i = 0; i < mt.rows(); ++i) mt2.at(i, static_cast<int>(j)) = mt.at(i, keep[j]);
        }
        ms = std::move(ms2);
        mt = std::move(mt2);
    }
    Relation r = make_relation(n1.source, n2.target, ms, mt);

    /* Transversality of the pair: the stacked constraint system has only
       the zero solution exactly when (N1 + N2) meets 0 + diag + 0
       trivially inside H1 + H2 + H2 + H3. */
    Mat top = Mat::hstack(n1.msrc, Mat(n1.source.rank, k2));
    Mat mid = Mat::hstack(n1.mtgt, -n2.msrc);
    Mat bot = Mat::hstack(Mat(n2.target.rank, k1), n2.mtgt);
    GeneratorSet t = kernel(Mat::vstack(Mat::vstack(top, mid), bot));
    r.transversal = t.count() == 0 && n1.transversal && n2.transversal;
    return r;
}

Relation compose_bar(const Relation& n1, const Relation& n2) {
    Relation c = compose(n1, n2);
    GeneratorSet sat = saturate(relation_genset(c));
    Relation r = make_relation(c.source, c.target, sat.gens.row_slice(0, c.source.rank),
                               sat.gens.row_slice(c.source.rank, c.source.rank + c.target.rank));
    r.transversal = c.transversal;
    return r;
}

bool relation_equal(const Relation& a, const Relation& b) {
    if (a.source.rank != b.source.rank || a.target.rank != b.target.rank) return false;
    if (a.source.gram != b.source.gram || a.target.gram != b.target.gram) return false;
    return span_equal(relation_genset(a), relation_genset(b));
}

} // namespace tangles
