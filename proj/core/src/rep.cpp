#include "tamerep/rep.hpp"

#include <map>
#include <stdexcept>

namespace tamerep {

bool Rep::shapes_ok() const {
    if ((int)dim.size() != quiver.n || maps.size() != quiver.arrows.size()) return false;
    for (size_t a = 0; a < maps.size(); ++a) {
        if (maps[a].rows() != dim[quiver.arrows[a].target]) return false;
        if (maps[a].cols() != dim[quiver.arrows[a].source]) return false;
    }
    return true;
}

Rep zero_rep(const Quiver& q) {
    Rep r{q, std::vector<int>(q.n, 0), {}};
    r.maps.assign(q.arrows.size(), Matrix(0, 0));
    return r;
}

Rep projective(const Quiver& q, int v) {
    auto paths = paths_from(q, v);
    Rep p{q, {}, {}};
    p.dim.resize(q.n);
    std::vector<std::map<std::vector<int>, int>> index(q.n);
    for (int w = 0; w < q.n; ++w) {
        p.dim[w] = (int)paths[w].size();
        for (int k = 0; k < p.dim[w]; ++k) index[w][paths[w][k]] = k;
    }
    for (auto& arr : q.arrows) {
        Matrix m(p.dim[arr.target], p.dim[arr.source]);
        int a = (int)(&arr - q.arrows.data());
        for (int k = 0; k < p.dim[arr.source]; ++k) {
            auto path = paths[arr.source][k];
            path.push_back(a);
            m(index[arr.target].at(path), k) = Rational(1);
        }
        p.maps.push_back(std::move(m));
    }
    return p;
}

Rep injective(const Quiver& q, int v) {
    Quiver op = q.opposite();
    Rep pop = projective(op, v);
    Rep inj{q, pop.dim, {}};
    inj.maps.resize(q.arrows.size());
    for (size_t a = 0; a < q.arrows.size(); ++a) inj.maps[a] = pop.maps[a].transposed();
    return inj;
}

Rep simple(const Quiver& q, int v) {
    Rep s = zero_rep(q);
    s.dim[v] = 1;
    for (size_t a = 0; a < q.arrows.size(); ++a)
        s.maps[a] = Matrix(s.dim[q.arrows[a].target], s.dim[q.arrows[a].source]);
    return s;
}

Rep direct_sum(const std::vector<Rep>& parts) {
    if (parts.empty()) throw std::invalid_argument("direct_sum of empty list");
    Rep r{parts[0].quiver, std::vector<int>(parts[0].quiver.n, 0), {}};
    for (auto& p : parts) {
        if (!(p.quiver == r.quiver)) throw std::invalid_argument("direct_sum: quiver mismatch");
        for (int v = 0; v < r.quiver.n; ++v) r.dim[v] += p.dim[v];
    }
    for (size_t a = 0; a < r.quiver.arrows.size(); ++a) {
        std::vector<Matrix> blocks;
        for (auto& p : parts) blocks.push_back(p.maps[a]);
        Matrix m = diag_join(blocks);
        // diag_join stacks both rows and cols per part, which is exactly the
        // block-diagonal arrow map of the sum.
        r.maps.push_back(std::move(m));
    }
    return r;
}

bool is_morphism(const Rep& x, const Rep& y, const MorphMats& f) {
    if ((int)f.size() != x.quiver.n) return false;
    for (int v = 0; v < x.quiver.n; ++v)
        if (f[v].rows() != y.dim[v] || f[v].cols() != x.dim[v]) return false;
    for (size_t a = 0; a < x.quiver.arrows.size(); ++a) {
        int s = x.quiver.arrows[a].source, t = x.quiver.arrows[a].target;
        if (y.maps[a] * f[s] != f[t] * x.maps[a]) return false;
    }
    return true;
}

MorphMats identity_morphism(const Rep& x) {
    MorphMats f;
    for (int v = 0; v < x.quiver.n; ++v) f.push_back(Matrix::identity(x.dim[v]));
    return f;
}

MorphMats zero_morphism(const Rep& x, const Rep& y) {
    MorphMats f;
    for (int v = 0; v < x.quiver.n; ++v) f.push_back(Matrix(y.dim[v], x.dim[v]));
    return f;
}

MorphMats compose(const MorphMats& g, const MorphMats& f) {
    MorphMats h;
    h.reserve(f.size());
    for (size_t v = 0; v < f.size(); ++v) h.push_back(g[v] * f[v]);
    return h;
}

MorphMats add(const MorphMats& f, const MorphMats& g) {
    MorphMats h;
    h.reserve(f.size());
    for (size_t v = 0; v < f.size(); ++v) h.push_back(f[v] + g[v]);
    return h;
}

MorphMats scale(const Rational& c, const MorphMats& f) {
    MorphMats h;
    h.reserve(f.size());
    for (auto& m : f) h.push_back(c * m);
    return h;
}

bool is_zero_morphism(const MorphMats& f) {
    for (auto& m : f)
        if (!m.is_zero()) return false;
    return true;
}

Matrix path_action(const Rep& x, const std::vector<int>& path, int source_vertex) {
    Matrix m = Matrix::identity(x.dim[source_vertex]);
    for (int a : path) m = x.maps[a] * m;
    return m;
}

Rep kernel_rep(const Rep& x, const Rep& y, const MorphMats& f, MorphMats* inclusion) {
    Rep k{x.quiver, std::vector<int>(x.quiver.n, 0), {}};
    MorphMats incl(x.quiver.n);
    std::vector<Matrix> basis(x.quiver.n);
    for (int v = 0; v < x.quiver.n; ++v) {
        auto kb = kernel_basis(f[v]);
        k.dim[v] = (int)kb.size();
        Matrix b(x.dim[v], k.dim[v]);
        for (int j = 0; j < k.dim[v]; ++j) b.set_col(j, kb[j]);
        basis[v] = b;
        incl[v] = std::move(b);
    }
    for (size_t a = 0; a < x.quiver.arrows.size(); ++a) {
        int s = x.quiver.arrows[a].source, t = x.quiver.arrows[a].target;
        // X_a maps ker f_s into ker f_t; express in the kernel bases
        Matrix rhs = x.maps[a] * incl[s];
        auto sol = solve_matrix(incl[t], rhs);
        if (!sol) throw std::logic_error("kernel_rep: arrow image escapes kernel");
        k.maps.push_back(std::move(*sol));
    }
    if (inclusion) *inclusion = incl;
    return k;
}

Rep span_subrep(const Rep& x, const std::vector<std::vector<Vec>>& vectors, MorphMats* inclusion,
                bool close) {
    // Collect an independent generating family per vertex, optionally
    // saturated under the arrow action.
    std::vector<std::vector<Vec>> kept(x.quiver.n);
    std::vector<ColumnSpan> spans;
    spans.reserve(x.quiver.n);
    for (int v = 0; v < x.quiver.n; ++v) spans.emplace_back(x.dim[v]);
    for (int v = 0; v < x.quiver.n; ++v)
        for (auto& w : vectors[v])
            if (spans[v].add(w)) kept[v].push_back(w);
    if (close) {
        bool grew = true;
        while (grew) {
            grew = false;
            for (size_t a = 0; a < x.quiver.arrows.size(); ++a) {
                int s = x.quiver.arrows[a].source, t = x.quiver.arrows[a].target;
                std::vector<Vec> pushed;
                for (auto& w : kept[s]) pushed.push_back(x.maps[a].mul_vec(w));
                for (auto& w : pushed)
                    if (spans[t].add(w)) {
                        kept[t].push_back(w);
                        grew = true;
                    }
            }
        }
    }
    Rep u{x.quiver, std::vector<int>(x.quiver.n, 0), {}};
    MorphMats incl(x.quiver.n);
    for (int v = 0; v < x.quiver.n; ++v) {
        u.dim[v] = (int)kept[v].size();
        Matrix b(x.dim[v], u.dim[v]);
        for (int j = 0; j < u.dim[v]; ++j) b.set_col(j, kept[v][j]);
        incl[v] = std::move(b);
    }
    for (size_t a = 0; a < x.quiver.arrows.size(); ++a) {
        int s = x.quiver.arrows[a].source, t = x.quiver.arrows[a].target;
        Matrix rhs = x.maps[a] * incl[s];
        auto sol = solve_matrix(incl[t], rhs);
        if (!sol) throw std::logic_error("span_subrep: not closed under arrows");
        u.maps.push_back(std::move(*sol));
    }
    if (inclusion) *inclusion = incl;
    return u;
}

Rep image_rep(const Rep& x, const Rep& y, const MorphMats& f, MorphMats* inclusion) {
    std::vector<std::vector<Vec>> cols(y.quiver.n);
    for (int v = 0; v < y.quiver.n; ++v)
        for (int j = 0; j < f[v].cols(); ++j) cols[v].push_back(f[v].col(j));
    // the image of a morphism is arrow-closed already; close=false is safe
    return span_subrep(y, cols, inclusion, false);
}

Rep cokernel_rep(const Rep& x, const Rep& y, const MorphMats& f, MorphMats* projection) {
    Rep c{y.quiver, std::vector<int>(y.quiver.n, 0), {}};
    MorphMats proj(y.quiver.n);
    for (int v = 0; v < y.quiver.n; ++v) {
        ColumnSpan span(y.dim[v]);
        for (int j = 0; j < f[v].cols(); ++j) span.add(f[v].col(j));
        c.dim[v] = span.quotient_dim();
        Matrix p(c.dim[v], y.dim[v]);
        for (int j = 0; j < y.dim[v]; ++j) {
            Vec e(y.dim[v]);
            e[j] = Rational(1);
            p.set_col(j, span.quotient_coords(e));
        }
        proj[v] = std::move(p);
    }
    for (size_t a = 0; a < y.quiver.arrows.size(); ++a) {
        int s = y.quiver.arrows[a].source, t = y.quiver.arrows[a].target;
        // induced map: C_a * proj_s = proj_t * Y_a; proj_s is surjective, so
        // solve the transposed system.
        Matrix rhs = (proj[t] * y.maps[a]).transposed();
        auto sol = solve_matrix(proj[s].transposed(), rhs);
        if (!sol) throw std::logic_error("cokernel_rep: induced map inconsistent");
        c.maps.push_back(sol->transposed());
    }
    if (projection) *projection = proj;
    return c;
}

Rep quotient_rep(const Rep& x, const Rep& u, const MorphMats& incl, MorphMats* projection) {
    return cokernel_rep(u, x, incl, projection);
}

Rep radical_subrep(const Rep& x, MorphMats* inclusion) {
    std::vector<std::vector<Vec>> cols(x.quiver.n);
    for (size_t a = 0; a < x.quiver.arrows.size(); ++a) {
        int t = x.quiver.arrows[a].target;
        for (int j = 0; j < x.maps[a].cols(); ++j) cols[t].push_back(x.maps[a].col(j));
    }
    return span_subrep(x, cols, inclusion, true);
}

std::vector<int> top_dims(const Rep& x) {
    std::vector<int> t(x.quiver.n);
    Rep rad = radical_subrep(x, nullptr);
    for (int v = 0; v < x.quiver.n; ++v) t[v] = x.dim[v] - rad.dim[v];
    return t;
}

ProjectiveCover projective_cover(const Rep& x) {
    ProjectiveCover pc;
    MorphMats rad_incl;
    Rep rad = radical_subrep(x, &rad_incl);
    pc.multiplicities.resize(x.quiver.n);

    // choose top lifts: complement of rad_v in X_v
    std::vector<std::vector<Vec>> lifts(x.quiver.n);
    for (int v = 0; v < x.quiver.n; ++v) {
        ColumnSpan span(x.dim[v]);
        for (int j = 0; j < rad_incl[v].cols(); ++j) span.add(rad_incl[v].col(j));
        for (int j = 0; j < x.dim[v] && span.rank() < x.dim[v]; ++j) {
            Vec e(x.dim[v]);
            e[j] = Rational(1);
            if (span.add(e)) lifts[v].push_back(e);
        }
        pc.multiplicities[v] = (int)lifts[v].size();
    }

    std::vector<Rep> parts;
    std::vector<std::pair<int, int>> part_src; // (vertex, lift index)
    for (int v = 0; v < x.quiver.n; ++v)
        for (int k = 0; k < pc.multiplicities[v]; ++k) {
            parts.push_back(projective(x.quiver, v));
            part_src.push_back({v, k});
        }
    if (parts.empty()) {
        pc.cover = zero_rep(x.quiver);
        pc.map = zero_morphism(pc.cover, x);
        return pc;
    }
    pc.cover = direct_sum(parts);

    // assemble the map columnwise: the copy of P_v generated by lift ξ sends
    // the path p (v -> w) to X(p)·ξ.
    MorphMats f(x.quiver.n);
    for (int w = 0; w < x.quiver.n; ++w) f[w] = Matrix(x.dim[w], pc.cover.dim[w]);
    for (size_t pi = 0; pi < parts.size(); ++pi) {
        auto [v, k] = part_src[pi];
        auto paths = paths_from(x.quiver, v);
        const Vec& xi = lifts[v][k];
        for (int w = 0; w < x.quiver.n; ++w) {
            int off = 0;
            for (size_t pj = 0; pj < pi; ++pj) off += parts[pj].dim[w];
            for (int c = 0; c < parts[pi].dim[w]; ++c) {
                Matrix act = path_action(x, paths[w][c], v);
                Vec img = act.mul_vec(xi);
                for (int r = 0; r < x.dim[w]; ++r) f[w](r, off + c) = img[r];
            }
        }
    }
    pc.map = std::move(f);
    return pc;
}

} // namespace tamerep
