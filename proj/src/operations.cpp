#include "dblcat/operations.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace dblcat {

namespace {

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x)
    {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(std::size_t a, std::size_t b)
    {
        a = find(a);
        b = find(b);
        if (a != b)
            parent[std::max(a, b)] = std::min(a, b);
    }
};

// Fill structure maps of a presheaf whose cells are indexed by `rep` representatives.
template <class FaceOf, class DegOf>
void fill_structure(FinBisimplicialSet::Builder& builder, Truncation t,
                    const std::vector<std::size_t>& sizes, FaceOf face_of, DegOf deg_of)
{
    for (Bidegree d : t.degrees()) {
        const std::size_t count = sizes[t.index(d)];
        for (Direction dir : {Direction::horizontal, Direction::vertical}) {
            const int n = extent(dir, d);
            if (n >= 1)
                for (int i = 0; i <= n; ++i) {
                    std::vector<CellId> table(count);
                    for (std::size_t c = 0; c < count; ++c)
                        table[c] = face_of(dir, d, i, static_cast<CellId>(c));
                    builder.face(dir, d, i, std::move(table));
                }
            if (n + 1 <= bound(dir, t))
                for (int i = 0; i <= n; ++i) {
                    std::vector<CellId> table(count);
                    for (std::size_t c = 0; c < count; ++c)
                        table[c] = deg_of(dir, d, i, static_cast<CellId>(c));
                    builder.degeneracy(dir, d, i, std::move(table));
                }
        }
    }
}

}  // namespace

Pushout pushout(const FinBisimplicialSet& a, const FinBisimplicialSet& b, const FinBisimplicialSet& c,
                const BisimplicialMap& f, const BisimplicialMap& g)
{
    const Truncation t = a.truncation();
    if (!(b.truncation() == t) || !(c.truncation() == t) || !(f.truncation == t) || !(g.truncation == t))
        throw InvalidInput("pushout: truncation mismatch");
    const std::size_t L = t.level_count();
    std::vector<std::vector<CellId>> cls(L);       // member -> class
    std::vector<std::vector<std::size_t>> rep(L);  // class -> first member
    Pushout out{{}, {t, std::vector<std::vector<CellId>>(L)}, {t, std::vector<std::vector<CellId>>(L)}};
    FinBisimplicialSet::Builder builder(t);
    std::vector<std::size_t> sizes(L);
    for (Bidegree d : t.degrees()) {
        const std::size_t l = t.index(d), nb = b.size(d), nc = c.size(d);
        UnionFind uf(nb + nc);
        for (CellId x = 0; x < a.size(d); ++x)
            uf.unite(f(d, x), nb + g(d, x));
        std::vector<CellId> root_class(nb + nc, static_cast<CellId>(-1));
        cls[l].resize(nb + nc);
        std::vector<std::string> labels;
        for (std::size_t x = 0; x < nb + nc; ++x) {
            std::size_t r = uf.find(x);
            if (root_class[r] == static_cast<CellId>(-1)) {
                root_class[r] = static_cast<CellId>(rep[l].size());
                rep[l].push_back(x);
                labels.push_back(x < nb ? "L:" + b.label(d, static_cast<CellId>(x))
                                        : "R:" + c.label(d, static_cast<CellId>(x - nb)));
            }
            cls[l][x] = root_class[r];
        }
        sizes[l] = rep[l].size();
        out.from_left.components[l].assign(cls[l].begin(), cls[l].begin() + static_cast<std::ptrdiff_t>(nb));
        out.from_right.components[l].assign(cls[l].begin() + static_cast<std::ptrdiff_t>(nb), cls[l].end());
        builder.cells(d, std::move(labels));
    }
    auto member_op = [&](Direction dir, Bidegree d, int i, CellId k, bool is_face) {
        const std::size_t l = t.index(d);
        const std::size_t x = rep[l][k], nb = b.size(d);
        Bidegree e = shifted(dir, d, is_face ? -1 : 1);
        std::size_t y;
        if (x < nb) {
            auto cx = static_cast<CellId>(x);
            y = is_face ? b.face(dir, d, i, cx) : b.degeneracy(dir, d, i, cx);
        } else {
            auto cx = static_cast<CellId>(x - nb);
            y = b.size(e) + (is_face ? c.face(dir, d, i, cx) : c.degeneracy(dir, d, i, cx));
        }
        return cls[t.index(e)][y];
    };
    fill_structure(
        builder, t, sizes,
        [&](Direction dir, Bidegree d, int i, CellId k) { return member_op(dir, d, i, k, true); },
        [&](Direction dir, Bidegree d, int i, CellId k) { return member_op(dir, d, i, k, false); });
    out.object = std::move(builder).build();
    return out;
}

BisimplicialMap copair(const Pushout& p, const BisimplicialMap& u, const BisimplicialMap& v)
{
    const Truncation t = p.object.truncation();
    BisimplicialMap out{t, std::vector<std::vector<CellId>>(t.level_count())};
    for (Bidegree d : t.degrees()) {
        const std::size_t l = t.index(d);
        auto& comp = out.components[l];
        comp.assign(p.object.size(d), static_cast<CellId>(-1));
        auto assign = [&](CellId cls, CellId value) {
            if (comp[cls] == static_cast<CellId>(-1))
                comp[cls] = value;
            else if (comp[cls] != value)
                throw InvalidInput("copair: the two maps disagree at (" + to_string(d) + ")");
        };
        for (CellId x = 0; x < p.from_left.components[l].size(); ++x)
            assign(p.from_left(d, x), u(d, x));
        for (CellId x = 0; x < p.from_right.components[l].size(); ++x)
            assign(p.from_right(d, x), v(d, x));
    }
    return out;
}

Product product(const FinBisimplicialSet& x, const FinBisimplicialSet& y)
{
    const Truncation t = x.truncation();
    if (!(y.truncation() == t))
        throw InvalidInput("product: truncation mismatch");
    const std::size_t L = t.level_count();
    Product out{{}, {t, std::vector<std::vector<CellId>>(L)}, {t, std::vector<std::vector<CellId>>(L)}};
    FinBisimplicialSet::Builder builder(t);
    std::vector<std::size_t> sizes(L);
    for (Bidegree d : t.degrees()) {
        const std::size_t l = t.index(d), nx = x.size(d), ny = y.size(d);
        std::vector<std::string> labels;
        labels.reserve(nx * ny);
        for (CellId i = 0; i < nx; ++i)
            for (CellId j = 0; j < ny; ++j) {
                labels.push_back("(" + x.label(d, i) + "," + y.label(d, j) + ")");
                out.first.components[l].push_back(i);
                out.second.components[l].push_back(j);
            }
        sizes[l] = nx * ny;
        builder.cells(d, std::move(labels));
    }
    auto pair_op = [&](Direction dir, Bidegree d, CellId k, bool is_face, int i) {
        const std::size_t ny = y.size(d);
        CellId a = static_cast<CellId>(k / ny), b = static_cast<CellId>(k % ny);
        Bidegree e = shifted(dir, d, is_face ? -1 : 1);
        CellId fa = is_face ? x.face(dir, d, i, a) : x.degeneracy(dir, d, i, a);
        CellId fb = is_face ? y.face(dir, d, i, b) : y.degeneracy(dir, d, i, b);
        return static_cast<CellId>(fa * y.size(e) + fb);
    };
    fill_structure(
        builder, t, sizes, [&](Direction dir, Bidegree d, int i, CellId k) { return pair_op(dir, d, k, true, i); },
        [&](Direction dir, Bidegree d, int i, CellId k) { return pair_op(dir, d, k, false, i); });
    out.object = std::move(builder).build();
    return out;
}

namespace {

Truncation dual_truncation(Truncation t, Duality which)
{
    return which == Duality::transpose ? Truncation{t.m, t.n} : t;
}

Bidegree dual_degree(Bidegree d, Duality which)
{
    return which == Duality::transpose ? Bidegree{d.m, d.n} : d;
}

Direction dual_direction(Direction dir, Duality which)
{
    if (which != Duality::transpose)
        return dir;
    return dir == Direction::horizontal ? Direction::vertical : Direction::horizontal;
}

// Index of the structure map of x realizing the dual's i-th map in direction `dir` at degree `d` (dual side).
int dual_index(Direction dir, Bidegree d, int i, Duality which)
{
    if ((which == Duality::hop && dir == Direction::horizontal) ||
        (which == Duality::vop && dir == Direction::vertical))
        return extent(dir, d) - i;
    return i;
}

}  // namespace

FinBisimplicialSet dualize(const FinBisimplicialSet& x, Duality which)
{
    const Truncation t = dual_truncation(x.truncation(), which);
    FinBisimplicialSet::Builder builder(t);
    std::vector<std::size_t> sizes(t.level_count());
    for (Bidegree d : t.degrees()) {
        Bidegree src = dual_degree(d, which);
        sizes[t.index(d)] = x.size(src);
        builder.cells(d, x.labels(src));
    }
    fill_structure(
        builder, t, sizes,
        [&](Direction dir, Bidegree d, int i, CellId c) {
            return x.face(dual_direction(dir, which), dual_degree(d, which), dual_index(dir, d, i, which), c);
        },
        [&](Direction dir, Bidegree d, int i, CellId c) {
            return x.degeneracy(dual_direction(dir, which), dual_degree(d, which), dual_index(dir, d, i, which), c);
        });
    return std::move(builder).build();
}

BisimplicialMap dualize(const BisimplicialMap& f, Duality which)
{
    const Truncation t = dual_truncation(f.truncation, which);
    BisimplicialMap g{t, std::vector<std::vector<CellId>>(t.level_count())};
    for (Bidegree d : t.degrees())
        g.components[t.index(d)] = f.components[f.truncation.index(dual_degree(d, which))];
    return g;
}

Subpresheaf generated_subpresheaf(const FinBisimplicialSet& x, std::vector<std::vector<bool>> marked)
{
    const Truncation t = x.truncation();
    if (marked.size() != t.level_count())
        throw InvalidInput("generated_subpresheaf: marking has wrong shape");
    std::deque<std::pair<Bidegree, CellId>> work;
    for (Bidegree d : t.degrees()) {
        marked[t.index(d)].resize(x.size(d), false);
        for (CellId c = 0; c < x.size(d); ++c)
            if (marked[t.index(d)][c])
                work.push_back({d, c});
    }
    auto visit = [&](Bidegree d, CellId c) {
        auto ref = marked[t.index(d)][c];
        if (!ref) {
            ref = true;
            work.push_back({d, c});
        }
    };
    while (!work.empty()) {
        auto [d, c] = work.front();
        work.pop_front();
        for (Direction dir : {Direction::horizontal, Direction::vertical}) {
            const int n = extent(dir, d);
            if (n >= 1)
                for (int i = 0; i <= n; ++i)
                    visit(shifted(dir, d, -1), x.face(dir, d, i, c));
            if (n + 1 <= bound(dir, t))
                for (int i = 0; i <= n; ++i)
                    visit(shifted(dir, d, 1), x.degeneracy(dir, d, i, c));
        }
    }
    const std::size_t L = t.level_count();
    Subpresheaf out{{}, {t, std::vector<std::vector<CellId>>(L)}};
    std::vector<std::vector<CellId>> local(L);
    std::vector<std::size_t> sizes(L);
    FinBisimplicialSet::Builder builder(t);
    for (Bidegree d : t.degrees()) {
        const std::size_t l = t.index(d);
        local[l].assign(x.size(d), static_cast<CellId>(-1));
        std::vector<std::string> labels;
        for (CellId c = 0; c < x.size(d); ++c)
            if (marked[l][c]) {
                local[l][c] = static_cast<CellId>(out.inclusion.components[l].size());
                out.inclusion.components[l].push_back(c);
                labels.push_back(x.label(d, c));
            }
        sizes[l] = labels.size();
        builder.cells(d, std::move(labels));
    }
    fill_structure(
        builder, t, sizes,
        [&](Direction dir, Bidegree d, int i, CellId k) {
            return local[t.index(shifted(dir, d, -1))][x.face(dir, d, i, out.inclusion(d, k))];
        },
        [&](Direction dir, Bidegree d, int i, CellId k) {
            return local[t.index(shifted(dir, d, 1))][x.degeneracy(dir, d, i, out.inclusion(d, k))];
        });
    out.object = std::move(builder).build();
    return out;
}

Subpresheaf image(const BisimplicialMap& f, const FinBisimplicialSet& target)
{
    const Truncation t = target.truncation();
    std::vector<std::vector<bool>> marked(t.level_count());
    for (Bidegree d : t.degrees()) {
        marked[t.index(d)].assign(target.size(d), false);
        for (CellId c : f.components[t.index(d)])
            marked[t.index(d)][c] = true;
    }
    return generated_subpresheaf(target, std::move(marked));
}

bool same_image(const BisimplicialMap& f, const BisimplicialMap& g)
{
    if (!(f.truncation == g.truncation))
        return false;
    for (std::size_t l = 0; l < f.components.size(); ++l) {
        std::vector<CellId> a = f.components[l], b = g.components[l];
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
        std::sort(b.begin(), b.end());
        b.erase(std::unique(b.begin(), b.end()), b.end());
        if (a != b)
            return false;
    }
    return true;
}

}  // namespace dblcat
