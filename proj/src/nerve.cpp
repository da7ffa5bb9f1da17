#include "dblcat/nerve.hpp"

#include <algorithm>
#include <map>

namespace dblcat {

std::vector<std::uint32_t> Grid::key() const
{
    std::vector<std::uint32_t> k;
    k.reserve(sq.size() + h.size() + v.size() + objects.size() + 2);
    k.insert(k.end(), sq.begin(), sq.end());
    k.insert(k.end(), h.begin(), h.end());
    k.insert(k.end(), v.begin(), v.end());
    k.insert(k.end(), objects.begin(), objects.end());
    return k;
}

namespace {

template <class T>
T need(std::optional<T> x, const char* what)
{
    if (!x)
        throw InvalidInput(std::string("composition table is not total: ") + what);
    return *x;
}

Grid shaped(int n, int m)
{
    Grid g;
    g.n = n;
    g.m = m;
    g.objects.resize((n + 1) * (m + 1));
    g.h.resize(n * (m + 1));
    g.v.resize((n + 1) * m);
    g.sq.resize(n * m);
    return g;
}

}  // namespace

Grid grid_hop(const Grid& g)
{
    Grid r = g;
    const int n = g.n, m = g.m;
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= m; ++j)
            r.objects[i * (m + 1) + j] = g.objects[(n - i) * (m + 1) + j];
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j)
            r.h[i * (m + 1) + j] = g.h[(n - 1 - i) * (m + 1) + j];
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j < m; ++j)
            r.v[i * m + j] = g.v[(n - i) * m + j];
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j)
            r.sq[i * m + j] = g.sq[(n - 1 - i) * m + j];
    return r;
}

Grid grid_face(const FinDoubleCategory& d, const Grid& g, Direction dir, int i)
{
    if (dir == Direction::horizontal) {
        const int n = g.n, m = g.m;
        Grid r = shaped(n - 1, m);
        for (int a = 0; a < n; ++a)
            for (int j = 0; j <= m; ++j)
                r.objects[a * (m + 1) + j] = g.objects[(a < i ? a : a + 1) * (m + 1) + j];
        for (int a = 0; a < n; ++a)
            for (int j = 0; j < m; ++j)
                r.v[a * m + j] = g.v[(a < i ? a : a + 1) * m + j];
        for (int a = 0; a + 1 < n; ++a) {
            for (int j = 0; j <= m; ++j) {
                std::uint32_t val;
                if (i == 0 || a > i - 1)
                    val = g.h[(a + 1) * (m + 1) + j];
                else if (i == n || a < i - 1)
                    val = g.h[a * (m + 1) + j];
                else
                    val = need(d.h_comp(g.h_arrow(a, j), g.h_arrow(a + 1, j)), "horizontal arrows").value;
                r.h[a * (m + 1) + j] = val;
            }
            for (int j = 0; j < m; ++j) {
                std::uint32_t val;
                if (i == 0 || a > i - 1)
                    val = g.sq[(a + 1) * m + j];
                else if (i == n || a < i - 1)
                    val = g.sq[a * m + j];
                else
                    val = need(d.sq_hcomp(g.square(a, j), g.square(a + 1, j)), "squares").value;
                r.sq[a * m + j] = val;
            }
        }
        return r;
    }
    const int n = g.n, m = g.m;
    Grid r = shaped(n, m - 1);
    for (int a = 0; a <= n; ++a)
        for (int b = 0; b < m; ++b)
            r.objects[a * m + b] = g.objects[a * (m + 1) + (b < i ? b : b + 1)];
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < m; ++b)
            r.h[a * m + b] = g.h[a * (m + 1) + (b < i ? b : b + 1)];
    for (int b = 0; b + 1 < m; ++b) {
        for (int a = 0; a <= n; ++a) {
            std::uint32_t val;
            if (i == 0 || b > i - 1)
                val = g.v[a * m + b + 1];
            else if (i == m || b < i - 1)
                val = g.v[a * m + b];
            else
                val = need(d.v_comp(g.v_arrow(a, b), g.v_arrow(a, b + 1)), "vertical arrows").value;
            r.v[a * (m - 1) + b] = val;
        }
        for (int a = 0; a < n; ++a) {
            std::uint32_t val;
            if (i == 0 || b > i - 1)
                val = g.sq[a * m + b + 1];
            else if (i == m || b < i - 1)
                val = g.sq[a * m + b];
            else
                val = need(d.sq_vcomp(g.square(a, b), g.square(a, b + 1)), "squares").value;
            r.sq[a * (m - 1) + b] = val;
        }
    }
    return r;
}

Grid grid_degeneracy(const FinDoubleCategory& d, const Grid& g, Direction dir, int i)
{
    const int n = g.n, m = g.m;
    if (dir == Direction::horizontal) {
        Grid r = shaped(n + 1, m);
        for (int a = 0; a <= n + 1; ++a)
            for (int j = 0; j <= m; ++j)
                r.objects[a * (m + 1) + j] = g.objects[(a <= i ? a : a - 1) * (m + 1) + j];
        for (int a = 0; a <= n + 1; ++a)
            for (int j = 0; j < m; ++j)
                r.v[a * m + j] = g.v[(a <= i ? a : a - 1) * m + j];
        for (int a = 0; a <= n; ++a) {
            for (int j = 0; j <= m; ++j)
                r.h[a * (m + 1) + j] = a < i    ? g.h[a * (m + 1) + j]
                                       : a == i ? d.h_identity(g.object(i, j)).value
                                                : g.h[(a - 1) * (m + 1) + j];
            for (int j = 0; j < m; ++j)
                r.sq[a * m + j] = a < i    ? g.sq[a * m + j]
                                  : a == i ? d.identity_square(g.v_arrow(i, j)).value
                                           : g.sq[(a - 1) * m + j];
        }
        return r;
    }
    Grid r = shaped(n, m + 1);
    const int m2 = m + 1;
    for (int a = 0; a <= n; ++a)
        for (int b = 0; b <= m2; ++b)
            r.objects[a * (m2 + 1) + b] = g.objects[a * (m + 1) + (b <= i ? b : b - 1)];
    for (int a = 0; a < n; ++a)
        for (int b = 0; b <= m2; ++b)
            r.h[a * (m2 + 1) + b] = g.h[a * (m + 1) + (b <= i ? b : b - 1)];
    for (int a = 0; a <= n; ++a)
        for (int b = 0; b < m2; ++b)
            r.v[a * m2 + b] = b < i    ? g.v[a * m + b]
                              : b == i ? d.v_identity(g.object(a, i)).value
                                       : g.v[a * m + b - 1];
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < m2; ++b)
            r.sq[a * m2 + b] = b < i    ? g.sq[a * m + b]
                               : b == i ? d.identity_square(g.h_arrow(a, i)).value
                                        : g.sq[a * m + b - 1];
    return r;
}

std::string grid_label(const FinDoubleCategory& d, const Grid& g)
{
    std::string s;
    if (g.n == 0 && g.m == 0)
        return d.object_name(g.object(0, 0));
    if (g.m == 0) {
        for (int i = 0; i < g.n; ++i)
            s += (i ? ";" : "") + d.h_arrow(g.h_arrow(i, 0)).name;
        return s;
    }
    if (g.n == 0) {
        for (int j = 0; j < g.m; ++j)
            s += (j ? "/" : "") + d.v_arrow(g.v_arrow(0, j)).name;
        return s;
    }
    for (int j = 0; j < g.m; ++j) {
        if (j)
            s += "/";
        for (int i = 0; i < g.n; ++i)
            s += (i ? ";" : "") + d.square(g.square(i, j)).name;
    }
    return s;
}

Grid base_grid(const FinDoubleCategory& d, Bidegree deg, std::uint32_t id)
{
    if (deg.n == 0 && deg.m == 0) {
        Grid g = shaped(0, 0);
        g.objects[0] = id;
        return g;
    }
    if (deg.n == 1 && deg.m == 0) {
        Grid g = shaped(1, 0);
        const auto& a = d.h_arrow(HArrowId{id});
        g.objects = {a.source.value, a.target.value};
        g.h[0] = id;
        return g;
    }
    if (deg.n == 0 && deg.m == 1) {
        Grid g = shaped(0, 1);
        const auto& a = d.v_arrow(VArrowId{id});
        g.objects = {a.source.value, a.target.value};
        g.v[0] = id;
        return g;
    }
    if (deg.n == 1 && deg.m == 1) {
        Grid g = shaped(1, 1);
        const auto& s = d.square(SquareId{id});
        const auto &t = d.h_arrow(s.top), &b = d.h_arrow(s.bottom);
        g.objects = {t.source.value, b.source.value, t.target.value, b.target.value};
        g.h = {s.top.value, s.bottom.value};
        g.v = {s.left.value, s.right.value};
        g.sq[0] = id;
        return g;
    }
    throw InvalidInput("base_grid: " + to_string(deg) + " is not a base level");
}

namespace {

// Vertical chains of m arrows.
std::vector<Grid> vertical_chains(const FinDoubleCategory& d, int m, std::uint64_t budget)
{
    std::vector<Grid> out;
    Grid g = shaped(0, m);
    auto rec = [&](auto&& self, int j) -> void {
        if (j == m) {
            out.push_back(g);
            if (out.size() > budget)
                throw BudgetExceeded("nerve enumeration exceeded the budget");
            return;
        }
        ObjectId from = ObjectId{g.objects[j]};
        for (std::uint32_t a = 0; a < d.v_arrow_count(); ++a) {
            const auto& v = d.v_arrow(VArrowId{a});
            if (v.source != from)
                continue;
            g.v[j] = a;
            g.objects[j + 1] = v.target.value;
            self(self, j + 1);
        }
    };
    for (std::uint32_t x = 0; x < d.object_count(); ++x) {
        g.objects[0] = x;
        rec(rec, 0);
    }
    return out;
}

// Columns of m squares stacked vertically (one horizontal arrow when m = 0).
std::vector<Grid> columns(const FinDoubleCategory& d, int m, std::uint64_t budget)
{
    std::vector<Grid> out;
    if (m == 0) {
        for (std::uint32_t a = 0; a < d.h_arrow_count(); ++a)
            out.push_back(base_grid(d, {1, 0}, a));
        return out;
    }
    Grid g = shaped(1, m);
    auto rec = [&](auto&& self, int j, HArrowId top) -> void {
        if (j == m) {
            out.push_back(g);
            if (out.size() > budget)
                throw BudgetExceeded("nerve enumeration exceeded the budget");
            return;
        }
        for (SquareId s : d.squares_with_top(top)) {
            const Square& q = d.square(s);
            g.sq[j] = s.value;
            g.v[j] = q.left.value;
            g.v[m + j] = q.right.value;
            g.h[j + 1] = q.bottom.value;
            self(self, j + 1, q.bottom);
        }
    };
    for (std::uint32_t a = 0; a < d.h_arrow_count(); ++a) {
        g.h[0] = a;
        rec(rec, 0, HArrowId{a});
    }
    for (Grid& c : out)
        for (int j = 0; j <= m; ++j) {
            const auto& h = d.h_arrow(c.h_arrow(0, j));
            c.objects[j] = h.source.value;
            c.objects[(m + 1) + j] = h.target.value;
        }
    return out;
}

std::vector<std::uint32_t> left_edge(const Grid& c)
{
    if (c.m == 0)
        return {c.objects[0]};
    return {c.v.begin(), c.v.begin() + c.m};
}

std::vector<std::uint32_t> right_edge(const Grid& g)
{
    if (g.m == 0)
        return {g.objects[g.n]};
    return {g.v.end() - g.m, g.v.end()};
}

Grid append_column(const Grid& g, const Grid& c)
{
    const int m = g.m;
    Grid r = shaped(g.n + 1, m);
    std::copy(g.objects.begin(), g.objects.end(), r.objects.begin());
    std::copy(c.objects.begin() + (m + 1), c.objects.end(), r.objects.begin() + (g.n + 1) * (m + 1));
    std::copy(g.h.begin(), g.h.end(), r.h.begin());
    std::copy(c.h.begin(), c.h.end(), r.h.begin() + g.n * (m + 1));
    std::copy(g.v.begin(), g.v.end(), r.v.begin());
    std::copy(c.v.begin() + m, c.v.end(), r.v.begin() + (g.n + 1) * m);
    std::copy(g.sq.begin(), g.sq.end(), r.sq.begin());
    std::copy(c.sq.begin(), c.sq.end(), r.sq.begin() + g.n * m);
    return r;
}

}  // namespace

std::vector<Grid> enumerate_grids(const FinDoubleCategory& d, Bidegree deg, std::uint64_t budget)
{
    std::vector<Grid> out;
    if (deg.n == 0) {
        out = vertical_chains(d, deg.m, budget);
    } else {
        auto cols = columns(d, deg.m, budget);
        std::map<std::vector<std::uint32_t>, std::vector<std::size_t>> by_left;
        for (std::size_t k = 0; k < cols.size(); ++k)
            by_left[left_edge(cols[k])].push_back(k);
        out = cols;
        for (int step = 1; step < deg.n; ++step) {
            std::vector<Grid> next;
            for (const Grid& g : out) {
                auto it = by_left.find(right_edge(g));
                if (it == by_left.end())
                    continue;
                for (std::size_t k : it->second) {
                    next.push_back(append_column(g, cols[k]));
                    if (next.size() > budget)
                        throw BudgetExceeded("nerve enumeration exceeded the budget");
                }
            }
            out = std::move(next);
        }
    }
    std::vector<std::pair<std::vector<std::uint32_t>, std::size_t>> keyed;
    keyed.reserve(out.size());
    for (std::size_t k = 0; k < out.size(); ++k)
        keyed.emplace_back(out[k].key(), k);
    std::sort(keyed.begin(), keyed.end());
    std::vector<Grid> sorted;
    sorted.reserve(out.size());
    for (const auto& [k, idx] : keyed)
        sorted.push_back(std::move(out[idx]));
    return sorted;
}

std::uint64_t count_grids(const FinDoubleCategory& d, Bidegree deg)
{
    if (deg.n == 0)
        return vertical_chains(d, deg.m, ~0ULL).size();
    auto cols = columns(d, deg.m, ~0ULL);
    std::map<std::vector<std::uint32_t>, std::uint64_t> ways;
    for (const Grid& c : cols)
        ways[right_edge(c)] += 1;
    for (int step = 1; step < deg.n; ++step) {
        std::map<std::vector<std::uint32_t>, std::uint64_t> next;
        for (const Grid& c : cols) {
            auto it = ways.find(left_edge(c));
            if (it != ways.end())
                next[right_edge(c)] += it->second;
        }
        ways = std::move(next);
    }
    std::uint64_t total = 0;
    for (const auto& [k, w] : ways)
        total += w;
    return total;
}

std::size_t LazyNerve::KeyHash::operator()(const std::vector<std::uint32_t>& v) const noexcept
{
    std::size_t h = v.size();
    for (auto x : v)
        h = h * 0x100000001b3ULL ^ x;
    return h;
}

LazyNerve::LazyNerve(const FinDoubleCategory& d, Truncation t) : dbl_(d), trunc_(t), levels_(t.level_count())
{
    const std::pair<Bidegree, std::size_t> base[] = {
        {{0, 0}, d.object_count()}, {{1, 0}, d.h_arrow_count()}, {{0, 1}, d.v_arrow_count()}, {{1, 1}, d.square_count()}};
    for (auto [deg, count] : base) {
        if (!t.contains(deg))
            continue;
        for (std::uint32_t id = 0; id < count; ++id)
            intern(base_grid(d, deg, id));
    }
}

CellId LazyNerve::intern(const Grid& g) const
{
    std::lock_guard lock(mutex_);
    Level& l = levels_[trunc_.index({g.n, g.m})];
    auto [it, inserted] = l.ids.emplace(g.key(), static_cast<CellId>(l.grids.size()));
    if (inserted)
        l.grids.push_back(g);
    return it->second;
}

Grid LazyNerve::grid(Bidegree d, CellId c) const
{
    std::lock_guard lock(mutex_);
    return levels_[trunc_.index(d)].grids.at(c);
}

std::size_t LazyNerve::interned(Bidegree d) const
{
    std::lock_guard lock(mutex_);
    return levels_[trunc_.index(d)].grids.size();
}

CellId LazyNerve::face(Direction dir, Bidegree d, int i, CellId c) const
{
    return intern(grid_face(dbl_, grid(d, c), dir, i));
}

CellId LazyNerve::degeneracy(Direction dir, Bidegree d, int i, CellId c) const
{
    return intern(grid_degeneracy(dbl_, grid(d, c), dir, i));
}

std::string LazyNerve::describe(Bidegree d, CellId c) const { return grid_label(dbl_, grid(d, c)); }

void LazyNerve::matching(Bidegree d, std::span<const CellId> faces, std::vector<CellId>& out) const
{
    out.clear();
    const FinDoubleCategory& D = dbl_;
    if (d.n == 0 && d.m == 0) {
        for (std::uint32_t x = 0; x < D.object_count(); ++x)
            out.push_back(x);
        return;
    }
    if (d.n == 1 && d.m == 0) {
        for (HArrowId a : D.h_arrows_between(grid({0, 0}, faces[1]).object(0, 0), grid({0, 0}, faces[0]).object(0, 0)))
            out.push_back(a.value);
        return;
    }
    if (d.n == 0 && d.m == 1) {
        for (VArrowId a : D.v_arrows_between(grid({0, 0}, faces[1]).object(0, 0), grid({0, 0}, faces[0]).object(0, 0)))
            out.push_back(a.value);
        return;
    }
    if (d.n == 1 && d.m == 1) {
        for (SquareId s : D.squares_with_boundary(HArrowId{faces[3]}, HArrowId{faces[2]}, VArrowId{faces[1]},
                                                  VArrowId{faces[0]}))
            out.push_back(s.value);
        return;
    }
    // Glue the last and first faces in one direction, then confirm every face.
    const std::size_t h_count = d.n >= 1 ? static_cast<std::size_t>(d.n + 1) : 0;
    Grid candidate;
    if (d.n >= 2) {
        Bidegree fd{d.n - 1, d.m};
        Grid first = grid(fd, faces[d.n]);
        Grid last = grid(fd, faces[0]);
        Grid col = shaped(1, d.m);
        const int m = d.m;
        std::copy(last.objects.end() - 2 * (m + 1), last.objects.end(), col.objects.begin());
        std::copy(last.h.end() - (m + 1), last.h.end(), col.h.begin());
        std::copy(last.v.end() - 2 * m, last.v.end(), col.v.begin());
        std::copy(last.sq.end() - m, last.sq.end(), col.sq.begin());
        if (right_edge(first) != left_edge(col))
            return;
        candidate = append_column(first, col);
    } else {
        Bidegree fd{d.n, d.m - 1};
        Grid first = grid(fd, faces[h_count + d.m]);
        Grid last = grid(fd, faces[h_count]);
        const int n = d.n, m = d.m;
        candidate = shaped(n, m);
        for (int a = 0; a <= n; ++a) {
            for (int b = 0; b <= m; ++b)
                candidate.objects[a * (m + 1) + b] = b < m ? first.objects[a * m + b] : last.objects[a * m + m - 1];
            for (int b = 0; b < m; ++b)
                candidate.v[a * m + b] = b < m - 1 ? first.v[a * (m - 1) + b] : last.v[a * (m - 1) + m - 2];
        }
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b <= m; ++b)
                candidate.h[a * (m + 1) + b] = b < m ? first.h[a * m + b] : last.h[a * m + m - 1];
            for (int b = 0; b < m; ++b)
                candidate.sq[a * m + b] = b < m - 1 ? first.sq[a * (m - 1) + b] : last.sq[a * (m - 1) + m - 2];
        }
    }
    std::size_t pos = 0;
    for (Direction dir : {Direction::horizontal, Direction::vertical}) {
        if (extent(dir, d) < 1)
            continue;
        for (int i = 0; i <= extent(dir, d); ++i) {
            Bidegree fd = shifted(dir, d, -1);
            Grid f;
            try {
                f = grid_face(D, candidate, dir, i);
            } catch (const InvalidInput&) {
                return;
            }
            if (f != grid(fd, faces[pos++]))
                return;
        }
    }
    out.push_back(intern(candidate));
}

MaterializedNerve materialize_indexed(const FinDoubleCategory& d, Truncation t, std::uint64_t budget)
{
    FinBisimplicialSet::Builder b(t);
    MaterializedNerve out;
    out.truncation = t;
    out.keys.resize(t.level_count());
    std::vector<std::vector<Grid>> grids(t.level_count());
    std::uint64_t total = 0;
    for (Bidegree deg : t.degrees()) {
        auto& gs = grids[t.index(deg)];
        gs = enumerate_grids(d, deg, budget);
        total += gs.size();
        if (total > budget)
            throw BudgetExceeded("nerve has more than " + std::to_string(budget) + " cells");
        std::vector<std::string> labels;
        labels.reserve(gs.size());
        auto& keys = out.keys[t.index(deg)];
        keys.reserve(gs.size());
        for (const Grid& g : gs) {
            keys.push_back(g.key());
            labels.push_back(grid_label(d, g));
        }
        b.cells(deg, std::move(labels));
    }
    for (Bidegree deg : t.degrees()) {
        const auto& gs = grids[t.index(deg)];
        for (Direction dir : {Direction::horizontal, Direction::vertical}) {
            const int e = extent(dir, deg);
            if (e >= 1)
                for (int i = 0; i <= e; ++i) {
                    std::vector<CellId> table(gs.size());
                    for (std::size_t k = 0; k < gs.size(); ++k)
                        table[k] = out.at(grid_face(d, gs[k], dir, i));
                    b.face(dir, deg, i, std::move(table));
                }
            if (e + 1 <= bound(dir, t))
                for (int i = 0; i <= e; ++i) {
                    std::vector<CellId> table(gs.size());
                    for (std::size_t k = 0; k < gs.size(); ++k)
                        table[k] = out.at(grid_degeneracy(d, gs[k], dir, i));
                    b.degeneracy(dir, deg, i, std::move(table));
                }
        }
    }
    out.set = std::move(b).build();
    return out;
}

FinBisimplicialSet materialize(const FinDoubleCategory& d, Truncation t, std::uint64_t budget)
{
    return materialize_indexed(d, t, budget).set;
}

std::optional<CellId> MaterializedNerve::id(const Grid& g) const
{
    const Truncation t = truncation;
    if (!t.contains({g.n, g.m}))
        return std::nullopt;
    const auto& level = keys[t.index({g.n, g.m})];
    auto k = g.key();
    auto it = std::lower_bound(level.begin(), level.end(), k);
    if (it == level.end() || *it != k)
        return std::nullopt;
    return static_cast<CellId>(it - level.begin());
}

CellId MaterializedNerve::at(const Grid& g) const
{
    auto c = id(g);
    if (!c)
        throw InvalidInput("grid is not a cell of the materialized nerve");
    return *c;
}

BisimplicialMap materialized_to_lazy(const FinDoubleCategory& d, const FinBisimplicialSet& nerve, const LazyNerve& lazy)
{
    const Truncation t = nerve.truncation();
    BisimplicialMap f{t, std::vector<std::vector<CellId>>(t.level_count())};
    for (Bidegree deg : t.degrees()) {
        auto gs = enumerate_grids(d, deg);
        if (gs.size() != nerve.size(deg))
            throw InvalidInput("materialized nerve does not belong to this double category");
        auto& comp = f.components[t.index(deg)];
        for (const Grid& g : gs)
            comp.push_back(lazy.intern(g));
    }
    return f;
}

}  // namespace dblcat
