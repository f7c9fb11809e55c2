#include "tamerep/catalog.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace tamerep {

namespace {

std::vector<long long> to_ll(const std::vector<int>& v) {
    return std::vector<long long>(v.begin(), v.end());
}

std::vector<long long> mat_apply(const Matrix& m, const std::vector<long long>& x) {
    std::vector<long long> y(m.rows(), 0);
    for (int i = 0; i < m.rows(); ++i) {
        Rational acc;
        for (int j = 0; j < m.cols(); ++j) acc += m(i, j) * Rational(x[j]);
        if (!acc.is_integer()) throw std::logic_error("Coxeter image not integral");
        y[i] = acc.num();
    }
    return y;
}

bool all_positive(const std::vector<long long>& v) {
    for (long long x : v)
        if (x <= 0) return false;
    return true;
}
bool all_nonneg(const std::vector<long long>& v) {
    for (long long x : v)
        if (x < 0) return false;
    return true;
}

} // namespace

std::string IndecLabel::str() const {
    switch (kind) {
        case Kind::Preprojective:
            return (power ? "t^-" + std::to_string(power) + " " : std::string()) + "P" +
                   std::to_string(vertex + 1);
        case Kind::Preinjective:
            return (power ? "t^" + std::to_string(power) + " " : std::string()) + "I" +
                   std::to_string(vertex + 1);
        default:
            return "T" + std::to_string(tube) + "[r" + std::to_string(ray) + ",l" +
                   std::to_string(level) + "]";
    }
}

Catalog::Catalog(Quiver q, CatalogOptions opt)
    : q_(std::move(q)), opt_(opt), cplus_(q_, +1), cminus_(q_, -1) {
    build_coxeter_data();
    enumerate_tubes();
}

void Catalog::build_coxeter_data() {
    phi_ = coxeter_matrix(q_);
    auto inv = solve_matrix(phi_, Matrix::identity(q_.n));
    if (!inv) throw std::logic_error("Coxeter matrix is singular");
    phi_inv_ = *inv;

    // delta: primitive positive integral generator of the radical of the
    // symmetrized Euler form
    Matrix e = Matrix::identity(q_.n);
    for (auto& a : q_.arrows) e(a.source, a.target) -= Rational(1);
    Matrix sym = e + e.transposed();
    auto ker = kernel_basis(sym);
    if (ker.size() != 1) throw std::invalid_argument("quiver is not connected Euclidean");
    // clear denominators, make primitive and positive
    long long lcm = 1;
    for (auto& x : ker[0]) lcm = std::lcm(lcm, x.den());
    std::vector<long long> d(q_.n);
    long long g = 0;
    for (int i = 0; i < q_.n; ++i) {
        Rational s = Rational(lcm) * ker[0][i];
        d[i] = s.num();
        g = std::gcd(g, d[i]);
    }
    for (auto& x : d) x /= g;
    if (d[0] < 0)
        for (auto& x : d) x = -x;
    if (!all_positive(d)) throw std::logic_error("null root is not positive");
    delta_ = d;

    // Coxeter period h: least m with (Phi^m - 1)^2 = 0
    Matrix p = phi_;
    period_ = 0;
    for (int m = 1; m <= 4 * q_.n * q_.n + 16; ++m) {
        Matrix nm = p - Matrix::identity(q_.n);
        if ((nm * nm).is_zero()) {
            period_ = m;
            // defect row from Phi^h - 1 = delta ⊗ defect
            int w = 0;
            while (delta_[w] != 1) ++w; // all our types have a coordinate 1
            defect_row_.assign(q_.n, 0);
            for (int j = 0; j < q_.n; ++j) {
                const Rational& val = nm(w, j);
                if (!val.is_integer()) throw std::logic_error("defect is not integral");
                defect_row_[j] = val.num();
            }
            // verify the rank-one factorization exactly
            for (int i = 0; i < q_.n; ++i)
                for (int j = 0; j < q_.n; ++j)
                    if (nm(i, j) != Rational(delta_[i] * defect_row_[j]))
                        throw std::logic_error("Phi^h - 1 is not delta ⊗ defect");
            break;
        }
        p = p * phi_;
    }
    if (!period_) throw std::logic_error("Coxeter period not found");

    // sincerity threshold
    sincerity_ = 0;
    for (int v = 0; v < q_.n; ++v) {
        auto d0 = to_ll(injective(q_, v).dim);
        int m = 0;
        auto cur = d0;
        while (!all_positive(cur)) {
            cur = mat_apply(phi_, cur);
            ++m;
            if (m > 4 * period_ + 64) throw std::logic_error("sincerity threshold not found");
        }
        sincerity_ = std::max(sincerity_, m);
    }
}

long long Catalog::defect(const std::vector<long long>& dims) const {
    long long s = 0;
    for (int i = 0; i < q_.n; ++i) s += defect_row_[i] * dims[i];
    return s;
}
long long Catalog::defect(const std::vector<int>& dims) const { return defect(to_ll(dims)); }

std::vector<long long> Catalog::phi_apply(const std::vector<long long>& x, int times) const {
    auto y = x;
    for (int i = 0; i < times; ++i) y = mat_apply(phi_, y);
    return y;
}
std::vector<long long> Catalog::phi_inv_apply(const std::vector<long long>& x, int times) const {
    auto y = x;
    for (int i = 0; i < times; ++i) y = mat_apply(phi_inv_, y);
    return y;
}

void Catalog::enumerate_tubes() {
    // all 0 <= x <= delta, x != 0, delta excluded
    std::vector<std::vector<long long>> candidates;
    std::vector<long long> cur(q_.n, 0);
    while (true) {
        int i = 0;
        while (i < q_.n && cur[i] == delta_[i]) cur[i++] = 0;
        if (i == q_.n) break;
        ++cur[i];
        bool zero = true, full = true;
        for (int v = 0; v < q_.n; ++v) {
            if (cur[v] != 0) zero = false;
            if (cur[v] != delta_[v]) full = false;
        }
        if (zero || full) continue;
        if (defect(cur) != 0) continue;
        if (tits_form(q_, cur) != 1) continue;
        candidates.push_back(cur);
    }
    std::set<std::vector<long long>> seen;
    std::vector<Tube> tubes;
    for (auto& x : candidates) {
        if (seen.count(x)) continue;
        // orbit under Phi^{-1} (ray direction: mouth[j+1] = tau^{-1} mouth[j])
        std::vector<std::vector<long long>> orbit{x};
        bool ok = true;
        for (int step = 0; step < 1024; ++step) {
            auto nxt = mat_apply(phi_inv_, orbit.back());
            if (nxt == x) break;
            if (!all_nonneg(nxt)) {
                ok = false;
                break;
            }
            orbit.push_back(nxt);
            if (step == 1023) ok = false;
        }
        if (!ok) continue;
        for (auto& m : orbit) seen.insert(m);
        std::vector<long long> total(q_.n, 0);
        for (auto& m : orbit)
            for (int v = 0; v < q_.n; ++v) total[v] += m[v];
        if (total != delta_) continue; // an orbit of higher tube level
        // canonical start: lexicographically smallest member
        int start = 0;
        for (size_t j = 1; j < orbit.size(); ++j)
            if (orbit[j] < orbit[start]) start = (int)j;
        std::rotate(orbit.begin(), orbit.begin() + start, orbit.end());
        Tube t;
        t.rank = (int)orbit.size();
        t.mouth_dims = std::move(orbit);
        tubes.push_back(std::move(t));
    }
    std::sort(tubes.begin(), tubes.end(), [](const Tube& a, const Tube& b) {
        if (a.rank != b.rank) return a.rank > b.rank;
        return a.mouth_dims[0] < b.mouth_dims[0];
    });
    for (size_t i = 0; i < tubes.size(); ++i) tubes[i].id = (int)i;
    tubes_ = std::move(tubes);
}

int Catalog::tube_level_cap(int tube_id) const {
    if (opt_.tube_level_cap > 0) return opt_.tube_level_cap;
    return tubes_[tube_id].rank + opt_.tube_level_slack;
}

std::vector<long long> Catalog::dims_of(const IndecLabel& l) const {
    switch (l.kind) {
        case IndecLabel::Kind::Preinjective:
            return phi_apply(to_ll(injective(q_, l.vertex).dim), l.power);
        case IndecLabel::Kind::Preprojective:
            return phi_inv_apply(to_ll(projective(q_, l.vertex).dim), l.power);
        default: {
            const Tube& t = tubes_.at(l.tube);
            std::vector<long long> d(q_.n, 0);
            for (int s = 0; s < l.level; ++s) {
                auto& m = t.mouth_dims[(l.ray + s) % t.rank];
                for (int v = 0; v < q_.n; ++v) d[v] += m[v];
            }
            return d;
        }
    }
}

Rep Catalog::generic_brick(const std::vector<long long>& dims, unsigned seed) const {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> entry(-9, 9);
    for (int attempt = 0; attempt < 400; ++attempt) {
        Rep x{q_, {}, {}};
        x.dim.resize(q_.n);
        for (int v = 0; v < q_.n; ++v) x.dim[v] = (int)dims[v];
        for (auto& a : q_.arrows) {
            Matrix m(x.dim[a.target], x.dim[a.source]);
            for (int i = 0; i < m.rows(); ++i)
                for (int j = 0; j < m.cols(); ++j) m(i, j) = Rational(entry(rng));
            x.maps.push_back(std::move(m));
        }
        if (hom_dim(x, x) == 1) return x;
    }
    throw std::runtime_error("generic_brick: no brick found for dimension vector");
}

Rep Catalog::realize_mouth(int tube, int ray) const {
    const Tube& t = tubes_.at(tube);
    if (ray == 0) {
        const auto& d = t.mouth_dims[0];
        // unit vector: the simple representation is the regular simple
        int support = -1;
        long long height = 0;
        for (int v = 0; v < q_.n; ++v) {
            height += d[v];
            if (d[v] > 0) support = v;
        }
        if (height == 1) return simple(q_, support);
        return generic_brick(d, 0x7ab3u + 131 * (unsigned)tube);
    }
    Rep prev = realize(IndecLabel::regular(tube, ray - 1, 1));
    Rep cur = cminus_.apply(prev);
    if (to_ll(cur.dim) != t.mouth_dims[ray])
        throw std::logic_error("mouth tau-transport dimension mismatch");
    return cur;
}

Rep Catalog::realize_uncached(const IndecLabel& l) const {
    switch (l.kind) {
        case IndecLabel::Kind::Preinjective: {
            if (l.power == 0) return injective(q_, l.vertex);
            Rep prev = realize(IndecLabel::preinjective(l.vertex, l.power - 1));
            return cplus_.apply(prev);
        }
        case IndecLabel::Kind::Preprojective: {
            if (l.power == 0) return projective(q_, l.vertex);
            Rep prev = realize(IndecLabel::preprojective(l.vertex, l.power - 1));
            return cminus_.apply(prev);
        }
        default: {
            if (l.level == 1) return realize_mouth(l.tube, l.ray);
            // extension 0 -> E_ray^{level-1} -> E_ray^{level} -> E_{ray+level-1} -> 0
            const Tube& t = tubes_.at(l.tube);
            Rep b = realize(IndecLabel::regular(l.tube, l.ray, l.level - 1));
            Rep a = realize(IndecLabel::regular(l.tube, (l.ray + l.level - 1) % t.rank, 1));
            ExtSpace ext = ext1_space(a, b);
            if (ext.dim() != 1)
                throw std::logic_error("ray extension space is not one-dimensional");
            Rep mid = extension_middle(a, b, ext.basis[0], nullptr, nullptr);
            if (to_ll(mid.dim) != dims_of(l))
                throw std::logic_error("ray extension dimension mismatch");
            return mid;
        }
    }
}

std::shared_ptr<const Rep> Catalog::realize_ptr(const IndecLabel& l) const {
    // window guards
    if (l.transjective()) {
        if (l.power < 0 || l.power > opt_.max_transjective_power)
            throw std::out_of_range("transjective power outside catalog window");
        if (l.vertex < 0 || l.vertex >= q_.n) throw std::out_of_range("bad vertex");
    } else {
        if (l.tube < 0 || l.tube >= (int)tubes_.size()) throw std::out_of_range("bad tube id");
        if (l.ray < 0 || l.ray >= tubes_[l.tube].rank) throw std::out_of_range("bad ray index");
        if (l.level < 1 || l.level > tube_level_cap(l.tube))
            throw std::out_of_range("tube level outside catalog window");
    }
    {
        std::lock_guard<std::mutex> g(mu_);
        auto it = rep_cache_.find(l);
        if (it != rep_cache_.end()) return it->second;
    }
    Rep r = realize_uncached(l);
    // defect trichotomy sanity
    long long d = defect(to_ll(r.dim));
    if ((l.kind == IndecLabel::Kind::Preprojective && d >= 0) ||
        (l.kind == IndecLabel::Kind::Preinjective && d <= 0) ||
        (l.kind == IndecLabel::Kind::Regular && d != 0))
        throw std::logic_error("defect trichotomy violated for " + l.str());
    auto sp = std::make_shared<const Rep>(std::move(r));
    std::lock_guard<std::mutex> g(mu_);
    auto [it, inserted] = rep_cache_.emplace(l, sp);
    return it->second;
}

const Rep& Catalog::realize(const IndecLabel& l) const { return *realize_ptr(l); }

std::optional<IndecLabel> Catalog::tau_label(const IndecLabel& l) const {
    switch (l.kind) {
        case IndecLabel::Kind::Preprojective:
            if (l.power == 0) return std::nullopt;
            return IndecLabel::preprojective(l.vertex, l.power - 1);
        case IndecLabel::Kind::Preinjective:
            return IndecLabel::preinjective(l.vertex, l.power + 1);
        default: {
            int r = tubes_.at(l.tube).rank;
            return IndecLabel::regular(l.tube, (l.ray + r - 1) % r, l.level);
        }
    }
}

std::optional<IndecLabel> Catalog::tau_inv_label(const IndecLabel& l) const {
    switch (l.kind) {
        case IndecLabel::Kind::Preinjective:
            if (l.power == 0) return std::nullopt;
            return IndecLabel::preinjective(l.vertex, l.power - 1);
        case IndecLabel::Kind::Preprojective:
            return IndecLabel::preprojective(l.vertex, l.power + 1);
        default: {
            int r = tubes_.at(l.tube).rank;
            return IndecLabel::regular(l.tube, (l.ray + 1) % r, l.level);
        }
    }
}

Rep Catalog::tau(const Rep& x) const {
    Rep y = cplus_.apply(x);
    Rep back = cminus_.apply(y);
    if (back.dim != x.dim) throw std::invalid_argument("tau: projective summand present");
    return y;
}

Rep Catalog::tau_inverse(const Rep& x) const {
    Rep y = cminus_.apply(x);
    Rep back = cplus_.apply(y);
    if (back.dim != x.dim) throw std::invalid_argument("tau_inverse: injective summand present");
    return y;
}

Slice Catalog::slice(int power) const {
    if (power < 0) throw std::invalid_argument("slice power must be >= 0");
    Slice s;
    s.power = power;
    for (int v = 0; v < q_.n; ++v) s.members.push_back(IndecLabel::preinjective(v, power));
    return s;
}

Cone Catalog::cone(const IndecLabel& vertex) const {
    if (!vertex.is_regular()) throw std::invalid_argument("cone: non-regular label");
    const Tube& t = tubes_.at(vertex.tube);
    Cone c;
    c.vertex = vertex;
    c.level = vertex.level;
    for (int s = 0; s < vertex.level; ++s)
        for (int l = 1; l <= vertex.level - s; ++l)
            c.members.push_back(IndecLabel::regular(vertex.tube, (vertex.ray + s) % t.rank, l));
    std::sort(c.members.begin(), c.members.end());
    return c;
}

std::vector<IndecLabel> Catalog::cone_edge(const IndecLabel& vertex) const {
    if (!vertex.is_regular()) throw std::invalid_argument("cone_edge: non-regular label");
    const Tube& t = tubes_.at(vertex.tube);
    std::vector<IndecLabel> edge;
    for (int s = 0; s < vertex.level; ++s)
        edge.push_back(IndecLabel::regular(vertex.tube, (vertex.ray + s) % t.rank,
                                           vertex.level - s));
    return edge;
}

std::shared_ptr<const Rep> Catalog::homogeneous_sample(int index) const {
    {
        std::lock_guard<std::mutex> g(mu_);
        auto it = homog_cache_.find(index);
        if (it != homog_cache_.end()) return it->second;
    }
    Rep r{q_, {}, {}};
    if (q_.type.family == 'A') {
        // lambda family: all vertex dimensions 1; lambda sits on the last
        // arrow, 1 elsewhere. The monodromy separates parameters, so walking
        // lambda = 1, 2, ... and keeping the (index+1)-th valid one gives
        // pairwise non-isomorphic samples.
        int valid = 0;
        for (long long cand = 1; cand <= 256; ++cand) {
            Rep x{q_, std::vector<int>(q_.n, 1), {}};
            for (size_t a = 0; a < q_.arrows.size(); ++a) {
                Matrix m(1, 1);
                m(0, 0) = (a + 1 == q_.arrows.size()) ? Rational(cand) : Rational(1);
                x.maps.push_back(std::move(m));
            }
            bool ok = hom_dim(x, x) == 1;
            if (ok)
                for (auto& t : tubes_)
                    for (int ray = 0; ray < t.rank && ok; ++ray) {
                        const Rep& e = realize(IndecLabel::regular(t.id, ray, 1));
                        if (hom_dim(e, x) != 0 || hom_dim(x, e) != 0) ok = false;
                    }
            if (ok && valid++ == index) {
                r = std::move(x);
                break;
            }
        }
        if (r.dim.empty()) throw std::runtime_error("homogeneous sample search failed");
    } else {
        for (int tries = 0;; ++tries) {
            Rep x = generic_brick(delta_, 0x9e3779b9u + 977 * (unsigned)index + (unsigned)tries);
            bool ok = true;
            for (auto& t : tubes_)
                for (int ray = 0; ray < t.rank && ok; ++ray) {
                    const Rep& e = realize(IndecLabel::regular(t.id, ray, 1));
                    if (hom_dim(e, x) != 0 || hom_dim(x, e) != 0) ok = false;
                }
            // distinct from earlier samples
            if (ok) {
                std::lock_guard<std::mutex> g(mu_);
                for (auto& [idx, other] : homog_cache_)
                    if (other->dim == x.dim && is_isomorphic(*other, x)) {
                        ok = false;
                        break;
                    }
            }
            if (ok) {
                r = std::move(x);
                break;
            }
            if (tries > 64) throw std::runtime_error("homogeneous sample search failed");
        }
    }
    auto sp = std::make_shared<const Rep>(std::move(r));
    std::lock_guard<std::mutex> g(mu_);
    auto [it, inserted] = homog_cache_.emplace(index, sp);
    return it->second;
}

Catalog::Side Catalog::side_of_dims(const std::vector<long long>& dims) const {
    long long d = defect(dims);
    if (d < 0) return Side::Preprojective;
    if (d > 0) return Side::Preinjective;
    return Side::Regular;
}

bool Catalog::hom_known_zero(const IndecLabel& x, const IndecLabel& y) const {
    Side sx = side_of(x), sy = side_of(y);
    if (sx == Side::Preinjective && sy != Side::Preinjective) return true;
    if (sx == Side::Regular && sy == Side::Preprojective) return true;
    if (sx == Side::Regular && sy == Side::Regular && x.tube != y.tube) return true;
    if (sx == Side::Preinjective && sy == Side::Preinjective && x.power < y.power) return true;
    if (sx == Side::Preprojective && sy == Side::Preprojective && x.power > y.power) return true;
    return false;
}

bool Catalog::ext_known_zero(const IndecLabel& x, const IndecLabel& y) const {
    auto tx = tau_label(x);
    if (!tx) return true; // x projective
    return hom_known_zero(y, *tx);
}

std::optional<IndecLabel> Catalog::identify(const Rep& x) const {
    auto dims = to_ll(x.dim);
    long long d = defect(dims);
    if (d != 0) {
        bool proj_side = d < 0;
        for (int v = 0; v < q_.n; ++v) {
            auto cur = to_ll(proj_side ? projective(q_, v).dim : injective(q_, v).dim);
            for (int k = 0; k <= opt_.max_transjective_power; ++k) {
                if (cur == dims) {
                    IndecLabel l = proj_side ? IndecLabel::preprojective(v, k)
                                             : IndecLabel::preinjective(v, k);
                    if (is_isomorphic(realize(l), x)) return l;
                }
                cur = proj_side ? mat_apply(phi_inv_, cur) : mat_apply(phi_, cur);
            }
        }
        return std::nullopt;
    }
    // regular: Hom fingerprint against the mouths picks the ray
    for (auto& t : tubes_) {
        for (int ray = 0; ray < t.rank; ++ray) {
            const Rep& e = realize(IndecLabel::regular(t.id, ray, 1));
            if (hom_dim(e, x) == 0) continue;
            // x has regular socle E_ray; level from the dimension height
            for (int level = 1; level <= tube_level_cap(t.id); ++level) {
                IndecLabel l = IndecLabel::regular(t.id, ray, level);
                if (dims_of(l) == dims) {
                    if (is_isomorphic(realize(l), x)) return l;
                    break;
                }
            }
            return std::nullopt;
        }
    }
    // no exceptional mouth maps in: homogeneous
    return std::nullopt;
}

std::vector<Catalog::Summand> Catalog::decompose(const Rep& x) const {
    std::vector<Summand> out;
    if (x.total_dim() == 0) return out;
    auto pieces = split_indecomposables(x);
    std::vector<IndecLabel> labels;
    for (auto& p : pieces) {
        auto l = identify(p);
        if (!l) {
            // homogeneous piece on an A~ quiver of mouth size: read off lambda
            auto dims = to_ll(p.dim);
            if (q_.type.family == 'A' && defect(dims) == 0 && dims == delta_) {
                std::lock_guard<std::mutex> g(mu_);
                // synthesize a labelled homogeneous tube: monodromy ratio of
                // the last arrow against the rest (all dims are 1)
                bool unit = true;
                for (int v = 0; v < q_.n; ++v) unit &= p.dim[v] == 1;
                if (unit) {
                    Rational num(1), den(1);
                    bool infinite = false;
                    // lambda = entry of last arrow / product of others (all
                    // others are invertible for an indecomposable)
                    for (size_t a = 0; a + 1 < q_.arrows.size(); ++a) {
                        if (p.maps[a](0, 0).is_zero()) infinite = true;
                        else den *= p.maps[a](0, 0);
                    }
                    num = p.maps.back()(0, 0);
                    Tube t;
                    t.id = (int)tubes_.size() + (int)homog_params_.size();
                    t.rank = 1;
                    t.mouth_dims = {delta_};
                    if (infinite)
                        t.parameter_infinite = true;
                    else
                        t.parameter = num / den;
                    homog_params_.push_back({infinite ? Rational(0) : *t.parameter, t.id});
                    labels.push_back(IndecLabel::regular(t.id, 0, 1));
                    continue;
                }
            }
            throw std::runtime_error("unidentified summand of dimension vector (catalog window)");
        }
        labels.push_back(*l);
    }
    std::sort(labels.begin(), labels.end());
    for (size_t i = 0; i < labels.size();) {
        size_t j = i;
        while (j < labels.size() && labels[j] == labels[i]) ++j;
        out.push_back({labels[i], (int)(j - i)});
        i = j;
    }
    return out;
}

} // namespace tamerep
