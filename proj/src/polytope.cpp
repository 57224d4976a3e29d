#include "homtoric/polytope.hpp"

#include "homtoric/error.hpp"
#include "homtoric/parallel.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace homtoric {

namespace {

IntMatrix homogenize(const IntMatrix& points) {
    IntMatrix h(points.rows() + 1, points.cols());
    h.row(0).setOnes();
    h.bottomRows(points.rows()) = points;
    return h;
}

using Key = std::vector<std::int64_t>;

Key key_of(const IntVector& v) { return Key(v.data(), v.data() + v.size()); }

}  // namespace

Polytope polytope_from_points(IntMatrix points) {
    Polytope p{std::move(points), -1};
    if (p.points.cols() > 0) p.dim = static_cast<int>(exact_rank(homogenize(p.points))) - 1;
    return p;
}

Polytope build_polytope(const ToricSystem& sys) { return polytope_from_points(sys.matrix()); }

Polytope stable_set_polytope(const Graph& g) {
    if (g.order() > 24) throw ResourceLimit("stable set polytope: more than 24 vertices");
    std::vector<std::uint64_t> masks;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.order()); ++s)
        if (g.is_independent(VertexSet(s))) masks.push_back(s);
    IntMatrix pts = IntMatrix::Zero(g.order(), static_cast<Eigen::Index>(masks.size()));
    for (std::size_t j = 0; j < masks.size(); ++j)
        for (int v = 0; v < g.order(); ++v) pts(v, static_cast<Eigen::Index>(j)) = (masks[j] >> v) & 1U;
    return polytope_from_points(std::move(pts));
}

FacetDescription facets(const Polytope& p, const FacetOptions& options) {
    const std::size_t n = p.vertex_count();
    if (n > options.vertex_cap)
        throw ResourceLimit("facets: " + std::to_string(n) + " vertices exceed the cap " +
                            std::to_string(options.vertex_cap));
    FacetDescription out{p.dim, {}};
    if (p.dim > options.dim_cap)
        throw ResourceLimit("facets: dimension " + std::to_string(p.dim) + " exceeds the cap " +
                            std::to_string(options.dim_cap));
    if (p.dim <= 0) return out;

    IntMatrix hom = homogenize(p.points);
    std::vector<Eigen::Index> basis_rows = independent_rows(hom);
    const auto r = static_cast<Eigen::Index>(basis_rows.size());
    if (basis_rows.front() != 0) throw InternalError("facets: row of ones not in the affine basis");
    IntMatrix w(r, static_cast<Eigen::Index>(n));
    for (Eigen::Index i = 0; i < r; ++i) w.row(i) = hom.row(basis_rows[static_cast<std::size_t>(i)]);

    const int k = static_cast<int>(r) - 1;  // subset size = dim
    std::vector<std::map<Key, std::vector<std::size_t>>> found(n);
    parallel_for(n, options.threads, [&](std::size_t first) {
        auto& mine = found[first];
        std::vector<std::size_t> pick(static_cast<std::size_t>(k));
        pick[0] = first;
        IntMatrix sub(k, r);
        // odometer over the remaining k-1 indices, all greater than `first`
        for (int i = 1; i < k; ++i) pick[static_cast<std::size_t>(i)] = first + static_cast<std::size_t>(i);
        if (k > 0 && pick.back() >= n) return;
        for (;;) {
            for (int i = 0; i < k; ++i) sub.row(i) = w.col(static_cast<Eigen::Index>(pick[static_cast<std::size_t>(i)])).transpose();
            IntVector a = primitive(cofactor_normal(sub));
            if (!a.isZero()) {
                IntVector vals = a.transpose() * w;
                bool nonneg = (vals.array() >= 0).all();
                bool nonpos = (vals.array() <= 0).all();
                if (nonneg || nonpos) {
                    if (!nonneg) {
                        a = -a;
                        vals = -vals;
                    }
                    Key key = key_of(a);
                    if (!mine.count(key)) {
                        std::vector<std::size_t> tight;
                        for (std::size_t j = 0; j < n; ++j)
                            if (vals(static_cast<Eigen::Index>(j)) == 0) tight.push_back(j);
                        mine.emplace(std::move(key), std::move(tight));
                    }
                }
            }
            int i = k - 1;
            while (i >= 1 && pick[static_cast<std::size_t>(i)] == n - static_cast<std::size_t>(k - i)) --i;
            if (i < 1) break;
            ++pick[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
        }
    });

    std::map<Key, std::vector<std::size_t>> all;
    for (auto& m : found) all.merge(m);
    for (auto& [a, tight] : all) {
        // a . (1, x_basis) >= 0  <=>  -a_rest . x <= a_0
        Facet f;
        f.normal = IntVector::Zero(p.ambient_dim());
        for (Eigen::Index i = 1; i < r; ++i) f.normal(basis_rows[static_cast<std::size_t>(i)] - 1) = -a[static_cast<std::size_t>(i)];
        f.offset = a[0];
        f.vertices = std::move(tight);
        IntMatrix t(hom.rows(), static_cast<Eigen::Index>(f.vertices.size()));
        for (std::size_t j = 0; j < f.vertices.size(); ++j) t.col(static_cast<Eigen::Index>(j)) = hom.col(static_cast<Eigen::Index>(f.vertices[j]));
        if (exact_rank(t) != r - 1) throw InternalError("facets: tight set does not span a hyperplane");
        out.facets.push_back(std::move(f));
    }
    std::sort(out.facets.begin(), out.facets.end(), [](const Facet& x, const Facet& y) {
        Key kx = key_of(x.normal), ky = key_of(y.normal);
        return std::tie(kx, x.offset) < std::tie(ky, y.offset);
    });
    return out;
}

Simplicity simplicity(const Polytope& p, const FacetDescription& f) {
    Simplicity s;
    s.counts.assign(p.vertex_count(), 0);
    for (const Facet& x : f.facets)
        for (std::size_t v : x.vertices) ++s.counts[v];
    for (int c : s.counts) s.simple = s.simple && c == f.dim;
    return s;
}

StableSetImage stable_set_iso(const Graph& g) {
    if (!g.loop_free()) throw PreconditionError("stable_set_iso: the graph has loops");
    StableSetImage out;
    out.system = build_system(g, spoon());
    const ToricSystem& sys = out.system;
    const auto& rows = sys.rows();
    // spoon: vertex 0 unlooped, vertex 1 looped
    for (Vertex v = 0; v < g.order(); ++v) {
        auto it = std::find_if(rows.begin(), rows.end(), [&](const SeparatorRow& row) {
            if (row.vertex_piece) return row.where.u == v && row.image_u == 0;
            if (row.where.u == v) return row.image_u == 0 && row.image_v == 1;
            if (row.where.v == v) return row.image_v == 0 && row.image_u == 1;
            return false;
        });
        if (it == rows.end()) throw InternalError("stable_set_iso: no row for a vertex");
        out.rows.push_back(static_cast<std::size_t>(it - rows.begin()));
    }
    const auto n = static_cast<Eigen::Index>(sys.variable_count());
    IntMatrix pts(g.order(), n);
    for (Vertex v = 0; v < g.order(); ++v) pts.row(v) = sys.matrix().row(static_cast<Eigen::Index>(out.rows[v]));
    for (Eigen::Index j = 0; j < n; ++j) {
        const VertexMap& phi = sys.homs()[static_cast<std::size_t>(j)];
        VertexSet s;
        for (Vertex v = 0; v < g.order(); ++v) {
            if (pts(v, j) != (phi[v] == 0 ? 1 : 0)) throw InternalError("stable_set_iso: coordinate mismatch");
            if (phi[v] == 0) s.insert(v);
        }
        if (!g.is_independent(s)) throw InternalError("stable_set_iso: image is not a stable set");
        out.sets.push_back(s);
    }
    std::vector<VertexSet> sorted = out.sets;
    std::sort(sorted.begin(), sorted.end(), [](VertexSet a, VertexSet b) { return a.bits() < b.bits(); });
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw InternalError("stable_set_iso: two homomorphisms share an image");
    // every row must be an affine function of the kept coordinates
    IntMatrix both(1 + g.order() + sys.matrix().rows(), n);
    both << IntMatrix::Ones(1, n), pts, sys.matrix();
    IntMatrix kept(1 + g.order(), n);
    kept << IntMatrix::Ones(1, n), pts;
    if (exact_rank(both) != exact_rank(kept)) throw InternalError("stable_set_iso: projection is not injective on the hull");
    out.image = polytope_from_points(std::move(pts));
    return out;
}

FaceCertificate face_check(const Graph& g, const Graph& h2, const Graph& h1, VertexSet removed) {
    if (h1.order() != h2.order()) throw PreconditionError("face_check: H1 must use the labels of H2");
    for (Edge e : h1.edges()) {
        if (!h2.adjacent(e.u, e.v)) throw PreconditionError("face_check: H1 has an edge missing from H2");
        if (removed.contains(e.u) || removed.contains(e.v))
            throw PreconditionError("face_check: an edge of H1 touches a deleted vertex");
    }
    FaceCertificate out;
    out.system = build_system(g, h2);
    const ToricSystem& sys = out.system;
    for (Vertex v : removed.members()) out.deleted.push_back("vertex " + std::to_string(v));
    for (Edge e : h2.edges())
        if (!removed.contains(e.u) && !removed.contains(e.v) && !h1.adjacent(e.u, e.v)) {
            std::ostringstream s;
            s << "edge " << e.u << "-" << e.v;
            out.deleted.push_back(s.str());
        }

    out.functional = IntVector::Zero(static_cast<Eigen::Index>(sys.row_count()));
    for (std::size_t i = 0; i < sys.row_count(); ++i) {
        const SeparatorRow& row = sys.rows()[i];
        bool uses = removed.contains(row.image_u) || removed.contains(row.image_v);
        if (!row.vertex_piece && !uses) uses = !h1.adjacent(row.image_u, row.image_v);
        if (uses) out.functional(static_cast<Eigen::Index>(i)) = 1;
    }
    IntVector values = out.functional.transpose() * sys.matrix();
    for (Eigen::Index j = 0; j < values.size(); ++j)
        if (values(j) == 0) out.face.push_back(static_cast<Variable>(j));

    InducedSubgraph kept = induced_subgraph(h1, h1.vertices() - removed);
    HomSet small = enumerate(g, kept.graph);
    for (const VertexMap& m : small) {
        VertexMap big(m.size());
        for (std::size_t i = 0; i < m.size(); ++i) big[i] = kept.vertices[static_cast<std::size_t>(m[i])];
        auto idx = sys.homs().index_of(big);
        if (!idx) throw InternalError("face_check: an H1 map is not an H2 map");
        out.embedded.push_back(static_cast<Variable>(*idx));
    }
    std::sort(out.embedded.begin(), out.embedded.end());
    out.ok = out.face == out.embedded && (values.array() >= 0).all();
    return out;
}

}  // namespace homtoric
