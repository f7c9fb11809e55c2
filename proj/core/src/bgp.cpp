#include "tamerep/bgp.hpp"

#include <algorithm>
#include <stdexcept>

namespace tamerep {

CoxeterFunctor::CoxeterFunctor(const Quiver& q, int direction) : q_(q), dir_(direction) {
    if (direction != 1 && direction != -1) throw std::invalid_argument("direction must be ±1");
    order_ = q.topological_order();
    if (direction == 1) std::reverse(order_.begin(), order_.end()); // sinks first
}

namespace {

Quiver reflect_quiver(const Quiver& q, int v) {
    Quiver r = q;
    for (auto& a : r.arrows)
        if (a.source == v || a.target == v) std::swap(a.source, a.target);
    return r;
}

} // namespace

Rep CoxeterFunctor::reflect(const Quiver& qc, const Rep& x, int v, bool sink, Quiver* qout) const {
    Quiver qr = reflect_quiver(qc, v);
    if (qout) *qout = qr;
    Rep r{qr, x.dim, {}};
    r.maps.resize(qc.arrows.size());
    if (sink) {
        auto in = qc.arrows_into(v);
        int total = 0;
        for (int a : in) total += x.dim[qc.arrows[a].source];
        // eps: ⊕ X_{s(a)} -> X_v, blocks side by side in arrow order
        Matrix eps(x.dim[v], total);
        int off = 0;
        for (int a : in) {
            eps.paste(0, off, x.maps[a]);
            off += x.dim[qc.arrows[a].source];
        }
        auto ker = kernel_basis(eps);
        r.dim[v] = (int)ker.size();
        Matrix k(total, r.dim[v]);
        for (size_t j = 0; j < ker.size(); ++j) k.set_col((int)j, ker[j]);
        // reversed arrows get the block rows of k
        off = 0;
        for (int a : in) {
            int s = qc.arrows[a].source;
            r.maps[a] = k.block(off, 0, x.dim[s], r.dim[v]);
            off += x.dim[s];
        }
        for (size_t a = 0; a < qc.arrows.size(); ++a)
            if (std::find(in.begin(), in.end(), (int)a) == in.end()) r.maps[a] = x.maps[a];
    } else {
        auto out = qc.arrows_out_of(v);
        int total = 0;
        for (int a : out) total += x.dim[qc.arrows[a].target];
        // eta: X_v -> ⊕ X_{t(a)}, blocks stacked in arrow order
        Matrix eta(total, x.dim[v]);
        int off = 0;
        for (int a : out) {
            eta.paste(off, 0, x.maps[a]);
            off += x.dim[qc.arrows[a].target];
        }
        // cokernel with quotient-coordinate projection
        ColumnSpan span(total);
        for (int j = 0; j < eta.cols(); ++j) span.add(eta.col(j));
        r.dim[v] = span.quotient_dim();
        Matrix proj(r.dim[v], total);
        for (int j = 0; j < total; ++j) {
            Vec e(total);
            e[j] = Rational(1);
            proj.set_col(j, span.quotient_coords(e));
        }
        // reversed arrows a': t(a) -> v get proj restricted to the block
        off = 0;
        for (int a : out) {
            int t = qc.arrows[a].target;
            r.maps[a] = proj.block(0, off, r.dim[v], x.dim[t]);
            off += x.dim[t];
        }
        for (size_t a = 0; a < qc.arrows.size(); ++a)
            if (std::find(out.begin(), out.end(), (int)a) == out.end()) r.maps[a] = x.maps[a];
    }
    return r;
}

MorphMats CoxeterFunctor::reflect_morphism(const Quiver& qc, const Rep& x, const Rep& y,
                                           const MorphMats& f, int v, bool sink, const Rep& xr,
                                           const Rep& yr) const {
    MorphMats g = f;
    if (sink) {
        auto in = qc.arrows_into(v);
        // K_Y · g_v = (⊕ f_{s(a)}) · K_X, where K are the stored kernel
        // inclusions readable from the reflected arrow blocks
        int totx = 0, toty = 0;
        for (int a : in) {
            totx += x.dim[qc.arrows[a].source];
            toty += y.dim[qc.arrows[a].source];
        }
        Matrix kx(totx, xr.dim[v]), ky(toty, yr.dim[v]), fsum(toty, totx);
        int ox = 0, oy = 0;
        for (int a : in) {
            int s = qc.arrows[a].source;
            kx.paste(ox, 0, xr.maps[a]);
            ky.paste(oy, 0, yr.maps[a]);
            fsum.paste(oy, ox, f[s]);
            ox += x.dim[s];
            oy += y.dim[s];
        }
        auto sol = solve_matrix(ky, fsum * kx);
        if (!sol) throw std::logic_error("reflect_morphism: kernel transport inconsistent");
        g[v] = *sol;
    } else {
        auto out = qc.arrows_out_of(v);
        int totx = 0, toty = 0;
        for (int a : out) {
            totx += x.dim[qc.arrows[a].target];
            toty += y.dim[qc.arrows[a].target];
        }
        Matrix px(xr.dim[v], totx), py(yr.dim[v], toty), fsum(toty, totx);
        int ox = 0, oy = 0;
        for (int a : out) {
            int t = qc.arrows[a].target;
            px.paste(0, ox, xr.maps[a]);
            py.paste(0, oy, yr.maps[a]);
            fsum.paste(oy, ox, f[t]);
            ox += x.dim[t];
            oy += y.dim[t];
        }
        // g_v ∘ px = py ∘ fsum, px surjective
        auto sol = solve_matrix(px.transposed(), (py * fsum).transposed());
        if (!sol) throw std::logic_error("reflect_morphism: cokernel transport inconsistent");
        g[v] = sol->transposed();
    }
    return g;
}

Rep CoxeterFunctor::apply(const Rep& x) const {
    Quiver qc = q_;
    Rep cur = x;
    for (int v : order_) {
        Quiver qn;
        cur = reflect(qc, cur, v, dir_ == 1, &qn);
        qc = qn;
    }
    cur.quiver = q_; // full sweep restores the orientation
    return cur;
}

MorphMats CoxeterFunctor::apply_to_morphism(const Rep& x, const Rep& y, const MorphMats& f) const {
    Quiver qc = q_;
    Rep cx = x, cy = y;
    MorphMats g = f;
    for (int v : order_) {
        Quiver qn;
        Rep nx = reflect(qc, cx, v, dir_ == 1, &qn);
        Rep ny = reflect(qc, cy, v, dir_ == 1, nullptr);
        g = reflect_morphism(qc, cx, cy, g, v, dir_ == 1, nx, ny);
        cx = nx;
        cy = ny;
        qc = qn;
    }
    return g;
}

Matrix coxeter_matrix(const Quiver& q) {
    // E[u][v] = delta - #arrows(u->v); Phi = -E^{-1} E^T
    Matrix e = Matrix::identity(q.n);
    for (auto& a : q.arrows) e(a.source, a.target) -= Rational(1);
    auto inv = solve_matrix(e, Matrix::identity(q.n));
    if (!inv) throw std::logic_error("Euler matrix is singular");
    return -(*inv * e.transposed());
}

} // namespace tamerep
