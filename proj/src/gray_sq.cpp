#include "dblcat/gray_sq.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "dblcat/hom.hpp"
#include "dblcat/operations.hpp"
#include "dblcat/shapes.hpp"

namespace dblcat {

FinTwoCategory poset_2cat(const std::string& name, const std::vector<std::string>& elements,
                          const std::vector<std::pair<int, int>>& leq)
{
    const int n = static_cast<int>(elements.size());
    std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
    for (int x = 0; x < n; ++x)
        rel[x][x] = true;
    for (auto [x, y] : leq)
        rel.at(x).at(y) = true;
    for (int k = 0; k < n; ++k)
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if (rel[x][k] && rel[k][y])
                    rel[x][y] = true;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (x != y && rel[x][y] && rel[y][x])
                throw InvalidInput("order on '" + name + "' is not antisymmetric");

    FinTwoCategory::Builder b(name);
    for (const auto& e : elements)
        b.object(e);
    std::vector<std::vector<std::uint32_t>> cell(n, std::vector<std::uint32_t>(n, kNoId));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (rel[x][y])
                cell[x][y] = b.one_cell(elements[x] + "-" + elements[y], ObjectId{static_cast<std::uint32_t>(x)},
                                        ObjectId{static_cast<std::uint32_t>(y)})
                                 .value;
    for (int x = 0; x < n; ++x)
        b.identity(ObjectId{static_cast<std::uint32_t>(x)}, OneCellId{cell[x][x]});
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (rel[x][y] && rel[y][z])
                    b.comp(OneCellId{cell[x][y]}, OneCellId{cell[y][z]}, OneCellId{cell[x][z]});
    b.posetal_two_cells({});
    return std::move(b).build();
}

FinTwoCategory chain(int n)
{
    std::vector<std::string> elements;
    std::vector<std::pair<int, int>> leq;
    for (int i = 0; i <= n; ++i) {
        elements.push_back(std::to_string(i));
        if (i > 0)
            leq.emplace_back(i - 1, i);
    }
    return poset_2cat("[" + std::to_string(n) + "]", elements, leq);
}

FinTwoCategory chain_product(int a, int b)
{
    std::vector<std::string> elements;
    std::vector<std::pair<int, int>> leq;
    for (int i = 0; i <= a; ++i)
        for (int j = 0; j <= b; ++j) {
            elements.push_back(std::to_string(i) + std::to_string(j));
            const int here = i * (b + 1) + j;
            if (i > 0)
                leq.emplace_back(here - (b + 1), here);
            if (j > 0)
                leq.emplace_back(here - 1, here);
        }
    return poset_2cat("[" + std::to_string(a) + "]x[" + std::to_string(b) + "]", elements, leq);
}

FinTwoCategory terminal_2cat() { return poset_2cat("terminal", {"*"}, {}); }

std::string format_path(const GrayPath& p) { return std::to_string(p.i) + "," + std::to_string(p.j) + ":" + p.moves; }

GrayPath parse_path(const std::string& name)
{
    auto comma = name.find(',');
    auto colon = name.find(':');
    if (comma == std::string::npos || colon == std::string::npos || colon < comma)
        throw ParseError("not a lattice path: '" + name + "'");
    GrayPath p;
    p.i = std::stoi(name.substr(0, comma));
    p.j = std::stoi(name.substr(comma + 1, colon - comma - 1));
    p.moves = name.substr(colon + 1);
    return p;
}

bool path_leq(const std::string& p, const std::string& q)
{
    if (p.size() != q.size() || std::count(p.begin(), p.end(), 'D') != std::count(q.begin(), q.end(), 'D'))
        return false;
    int dp = 0, dq = 0;
    for (std::size_t k = 0; k < p.size(); ++k) {
        dp += p[k] == 'D';
        dq += q[k] == 'D';
        if (dq < dp)
            return false;
    }
    return true;
}

namespace {

// Move strings with r R's and d D's in lexicographic order ('D' < 'R').
std::vector<std::string> move_strings(int r, int d)
{
    std::vector<std::string> out;
    std::string s(static_cast<std::size_t>(d), 'D');
    s.append(static_cast<std::size_t>(r), 'R');
    do
        out.push_back(s);
    while (std::next_permutation(s.begin(), s.end()));
    return out;
}

std::string tuple_name(int i, int j, const std::vector<int>& t)
{
    std::string s = std::to_string(i) + ">" + std::to_string(j) + ":";
    for (std::size_t k = 0; k < t.size(); ++k)
        s += (k ? "," : "") + std::to_string(t[k]);
    return s;
}

}  // namespace

FinTwoCategory gray_grid(int n, int m)
{
    if (n < 0 || m < 0)
        throw InvalidInput("gray_grid: negative size");
    FinTwoCategory::Builder b("gray(" + std::to_string(n) + "," + std::to_string(m) + ")");
    auto point = [m](int i, int j) { return ObjectId{static_cast<std::uint32_t>(i * (m + 1) + j)}; };
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= m; ++j)
            b.object(std::to_string(i) + "," + std::to_string(j));
    std::vector<GrayPath> paths;
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= m; ++j)
            for (int k = i; k <= n; ++k)
                for (int l = j; l <= m; ++l)
                    for (const auto& s : move_strings(k - i, l - j)) {
                        GrayPath p{i, j, s};
                        b.one_cell(format_path(p), point(i, j), point(k, l));
                        paths.push_back(p);
                    }
    const auto& partial = b.partial();
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= m; ++j)
            b.identity(point(i, j), *partial.find_one_cell(format_path({i, j, ""})));
    std::vector<std::pair<OneCellId, OneCellId>> leq;
    for (std::uint32_t p = 0; p < paths.size(); ++p) {
        const GrayPath& a = paths[p];
        int ei = a.i + static_cast<int>(std::count(a.moves.begin(), a.moves.end(), 'R'));
        int ej = a.j + static_cast<int>(std::count(a.moves.begin(), a.moves.end(), 'D'));
        for (std::uint32_t q = 0; q < paths.size(); ++q) {
            const GrayPath& c = paths[q];
            if (c.i == ei && c.j == ej)
                b.comp(OneCellId{p}, OneCellId{q}, *partial.find_one_cell(format_path({a.i, a.j, a.moves + c.moves})));
            if (c.i == a.i && c.j == a.j && p != q && path_leq(a.moves, c.moves))
                leq.emplace_back(OneCellId{p}, OneCellId{q});
        }
    }
    b.posetal_two_cells(leq);
    return std::move(b).build();
}

FinTwoCategory globe_grid(int n, int m)
{
    if (n < 0 || m < 0)
        throw InvalidInput("globe_grid: negative size");
    FinTwoCategory::Builder b("globe(" + std::to_string(n) + "," + std::to_string(m) + ")");
    for (int i = 0; i <= n; ++i)
        b.object(std::to_string(i));
    struct Cell {
        int i, j;
        std::vector<int> t;
    };
    std::vector<Cell> cells;
    for (int i = 0; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
            std::vector<int> t(static_cast<std::size_t>(j - i), 0);
            while (true) {
                b.one_cell(tuple_name(i, j, t), ObjectId{static_cast<std::uint32_t>(i)},
                           ObjectId{static_cast<std::uint32_t>(j)});
                cells.push_back({i, j, t});
                int k = static_cast<int>(t.size()) - 1;
                while (k >= 0 && t[k] == m)
                    t[k--] = 0;
                if (k < 0)
                    break;
                ++t[k];
            }
        }
    const auto& partial = b.partial();
    for (int i = 0; i <= n; ++i)
        b.identity(ObjectId{static_cast<std::uint32_t>(i)}, *partial.find_one_cell(tuple_name(i, i, {})));
    std::vector<std::pair<OneCellId, OneCellId>> leq;
    for (std::uint32_t p = 0; p < cells.size(); ++p)
        for (std::uint32_t q = 0; q < cells.size(); ++q) {
            const Cell &a = cells[p], &c = cells[q];
            if (a.j == c.i) {
                auto t = a.t;
                t.insert(t.end(), c.t.begin(), c.t.end());
                b.comp(OneCellId{p}, OneCellId{q}, *partial.find_one_cell(tuple_name(a.i, c.j, t)));
            }
            if (p != q && a.i == c.i && a.j == c.j) {
                bool below = true;
                for (std::size_t k = 0; k < a.t.size(); ++k)
                    below = below && a.t[k] <= c.t[k];
                if (below)
                    leq.emplace_back(OneCellId{p}, OneCellId{q});
            }
        }
    b.posetal_two_cells(leq);
    return std::move(b).build();
}

std::string square_name(const FinTwoCategory& x, OneCellId top, OneCellId left, OneCellId right, OneCellId bottom)
{
    return "(" + x.one_cell(top).name + "," + x.one_cell(left).name + "," + x.one_cell(right).name + "," +
           x.one_cell(bottom).name + ")";
}

FinDoubleCategory squares_dblcat(const FinTwoCategory& x)
{
    if (!x.locally_posetal())
        throw InvalidInput("squares construction needs a locally posetal 2-category");
    FinDoubleCategory::Builder b("Sq(" + x.name() + ")");
    const auto n0 = static_cast<std::uint32_t>(x.object_count());
    const auto n1 = static_cast<std::uint32_t>(x.one_cell_count());
    for (std::uint32_t o = 0; o < n0; ++o)
        b.object(x.object_name(ObjectId{o}));
    for (std::uint32_t p = 0; p < n1; ++p) {
        const auto& c = x.one_cell(OneCellId{p});
        b.h_arrow(c.name, c.source, c.target);
    }
    for (std::uint32_t p = 0; p < n1; ++p) {
        const auto& c = x.one_cell(OneCellId{p});
        b.v_arrow(c.name, c.source, c.target);
    }
    for (std::uint32_t o = 0; o < n0; ++o) {
        b.h_identity(ObjectId{o}, HArrowId{x.identity(ObjectId{o}).value});
        b.v_identity(ObjectId{o}, VArrowId{x.identity(ObjectId{o}).value});
        for (std::uint32_t o2 = 0; o2 < n0; ++o2)
            for (OneCellId p : x.hom(ObjectId{o}, ObjectId{o2}))
                for (std::uint32_t o3 = 0; o3 < n0; ++o3)
                    for (OneCellId q : x.hom(ObjectId{o2}, ObjectId{o3})) {
                        auto r = *x.comp(p, q);
                        b.h_comp(HArrowId{p.value}, HArrowId{q.value}, HArrowId{r.value});
                        b.v_comp(VArrowId{p.value}, VArrowId{q.value}, VArrowId{r.value});
                    }
    }
    struct Boundary {
        OneCellId top, left, right, bottom;
    };
    std::vector<Boundary> squares;
    const auto& partial = b.partial();
    for (std::uint32_t t = 0; t < n1; ++t) {
        const auto& top = x.one_cell(OneCellId{t});
        for (std::uint32_t c = 0; c < n0; ++c)
            for (OneCellId left : x.hom(top.source, ObjectId{c}))
                for (std::uint32_t d = 0; d < n0; ++d)
                    for (OneCellId right : x.hom(top.target, ObjectId{d}))
                        for (OneCellId bottom : x.hom(ObjectId{c}, ObjectId{d}))
                            if (x.leq(*x.comp(OneCellId{t}, right), *x.comp(left, bottom))) {
                                b.square(square_name(x, OneCellId{t}, left, right, bottom), HArrowId{t},
                                         HArrowId{bottom.value}, VArrowId{left.value}, VArrowId{right.value});
                                squares.push_back({OneCellId{t}, left, right, bottom});
                            }
    }
    auto find = [&](OneCellId top, OneCellId left, OneCellId right, OneCellId bottom) {
        auto s = partial.find_square(square_name(x, top, left, right, bottom));
        if (!s)
            throw InvalidInput("composition in '" + x.name() + "' is not monotone");
        return *s;
    };
    for (std::uint32_t p = 0; p < n1; ++p) {
        const auto& c = x.one_cell(OneCellId{p});
        const OneCellId is = x.identity(c.source), it = x.identity(c.target);
        b.identity_square(HArrowId{p}, find(OneCellId{p}, is, it, OneCellId{p}));
        b.identity_square(VArrowId{p}, find(is, OneCellId{p}, OneCellId{p}, it));
    }
    for (std::uint32_t s = 0; s < squares.size(); ++s)
        for (std::uint32_t u = 0; u < squares.size(); ++u) {
            const Boundary &a = squares[s], &c = squares[u];
            if (a.right == c.left)
                b.sq_hcomp(SquareId{s}, SquareId{u},
                           find(*x.comp(a.top, c.top), a.left, c.right, *x.comp(a.bottom, c.bottom)));
            if (a.bottom == c.top)
                b.sq_vcomp(SquareId{s}, SquareId{u},
                           find(a.top, *x.comp(a.left, c.left), *x.comp(a.right, c.right), c.bottom));
        }
    return std::move(b).build();
}

std::vector<GrayFunctor> gray_functors(const FinTwoCategory& x, int n, int m, std::uint64_t budget)
{
    if (!x.locally_posetal())
        throw InvalidInput("2-functor enumeration needs a locally posetal target");
    std::vector<GrayFunctor> out;
    GrayFunctor f;
    f.n = n;
    f.m = m;
    f.points.assign((n + 1) * (m + 1), ObjectId{kNoId});
    f.h.assign(n * (m + 1), OneCellId{kNoId});
    f.v.assign((n + 1) * m, OneCellId{kNoId});
    const auto n0 = static_cast<std::uint32_t>(x.object_count());
    std::uint64_t tried = 0;
    auto outgoing = [&](ObjectId a) {
        std::vector<OneCellId> cs;
        for (std::uint32_t o = 0; o < n0; ++o)
            for (OneCellId p : x.hom(a, ObjectId{o}))
                cs.push_back(p);
        std::sort(cs.begin(), cs.end());
        return cs;
    };
    auto pt = [m](int i, int j) { return i * (m + 1) + j; };
    // Visit points column by column; each point is fixed by its incoming edges.
    std::function<void(int)> rec = [&](int k) {
        if (k == (n + 1) * (m + 1)) {
            out.push_back(f);
            if (out.size() > budget)
                throw BudgetExceeded("2-functor enumeration exceeded the budget");
            return;
        }
        const int i = k / (m + 1), j = k % (m + 1);
        auto with_vertical = [&](ObjectId here) {
            if (j == 0) {
                f.points[k] = here;
                rec(k + 1);
                return;
            }
            for (OneCellId e : x.hom(f.points[pt(i, j - 1)], here)) {
                if (++tried > budget)
                    throw BudgetExceeded("2-functor enumeration exceeded the budget");
                if (i > 0) {
                    auto top = f.h[pt(i - 1, j - 1)], bottom = f.h[pt(i - 1, j)];
                    auto left = f.v[(i - 1) * m + j - 1];
                    if (!x.leq(*x.comp(top, e), *x.comp(left, bottom)))
                        continue;
                }
                f.v[i * m + j - 1] = e;
                f.points[k] = here;
                rec(k + 1);
            }
        };
        if (i == 0) {
            if (j == 0) {
                for (std::uint32_t o = 0; o < n0; ++o)
                    with_vertical(ObjectId{o});
            } else {
                for (std::uint32_t o = 0; o < n0; ++o)
                    with_vertical(ObjectId{o});
            }
            return;
        }
        for (OneCellId e : outgoing(f.points[pt(i - 1, j)])) {
            f.h[pt(i - 1, j)] = e;
            with_vertical(x.one_cell(e).target);
        }
    };
    rec(0);
    return out;
}

TwoFunctorData gray_functor_data(const FinTwoCategory& grid, const FinTwoCategory& x, const GrayFunctor& f)
{
    TwoFunctorData data;
    data.objects = f.points;
    const int m = f.m;
    for (std::uint32_t p = 0; p < grid.one_cell_count(); ++p) {
        GrayPath path = parse_path(grid.one_cell(OneCellId{p}).name);
        int i = path.i, j = path.j;
        OneCellId acc = x.identity(f.points[i * (m + 1) + j]);
        for (char c : path.moves) {
            OneCellId e = c == 'R' ? f.h[i * (m + 1) + j] : f.v[i * m + j];
            acc = *x.comp(acc, e);
            (c == 'R' ? i : j) += 1;
        }
        data.one_cells.push_back(acc);
    }
    for (std::uint32_t a = 0; a < grid.two_cell_count(); ++a) {
        const auto& c = grid.two_cell(TwoCellId{a});
        const auto& cells = x.cells_between(data.one_cells[c.source.value], data.one_cells[c.target.value]);
        if (cells.empty())
            throw InvalidInput("assignment does not preserve the 2-cell " + c.name);
        data.two_cells.push_back(cells.front());
    }
    return data;
}

Grid gray_functor_grid(const FinDoubleCategory& sq, const GrayFunctor& f)
{
    Grid g;
    g.n = f.n;
    g.m = f.m;
    for (auto o : f.points)
        g.objects.push_back(o.value);
    for (auto e : f.h)
        g.h.push_back(e.value);
    for (auto e : f.v)
        g.v.push_back(e.value);
    for (int i = 0; i < f.n; ++i)
        for (int j = 0; j < f.m; ++j) {
            const auto& s = sq.squares_with_boundary(g.h_arrow(i, j), g.h_arrow(i, j + 1), g.v_arrow(i, j),
                                                     g.v_arrow(i + 1, j));
            if (s.empty())
                throw InvalidInput("2-functor has no square at a unit cell");
            g.sq.push_back(s.front().value);
        }
    return g;
}

namespace {

TwoFunctorData globe_functor(const FinTwoCategory& grid, const FinTwoCategory& globe, bool horizontal)
{
    TwoFunctorData data;
    for (std::uint32_t o = 0; o < grid.object_count(); ++o) {
        const auto& name = grid.object_name(ObjectId{o});
        auto comma = name.find(',');
        const std::string coord = horizontal ? name.substr(0, comma) : name.substr(comma + 1);
        data.objects.push_back(*globe.find_object(coord));
    }
    int n = 0;
    for (std::uint32_t o = 0; o < grid.object_count(); ++o)
        n = std::max(n, parse_path(grid.object_name(ObjectId{o}) + ":").i);
    for (std::uint32_t p = 0; p < grid.one_cell_count(); ++p) {
        GrayPath path = parse_path(grid.one_cell(OneCellId{p}).name);
        int i = path.i, j = path.j;
        std::vector<int> t;
        for (char c : path.moves) {
            if (horizontal && c == 'R')
                t.push_back(j);
            if (!horizontal && c == 'D')
                t.push_back(n - i);
            (c == 'R' ? i : j) += 1;
        }
        const int from = horizontal ? path.i : path.j, to = horizontal ? i : j;
        auto cell = globe.find_one_cell(tuple_name(from, to, t));
        if (!cell)
            throw InvalidInput("no globe 1-cell " + tuple_name(from, to, t));
        data.one_cells.push_back(*cell);
    }
    for (std::uint32_t a = 0; a < grid.two_cell_count(); ++a) {
        const auto& c = grid.two_cell(TwoCellId{a});
        const auto& cells = globe.cells_between(data.one_cells[c.source.value], data.one_cells[c.target.value]);
        data.two_cells.push_back(cells.empty() ? TwoCellId{kNoId} : cells.front());
    }
    return data;
}

}  // namespace

TwoFunctorData iota_h_globe(const FinTwoCategory& grid, const FinTwoCategory& globe)
{
    return globe_functor(grid, globe, true);
}

TwoFunctorData iota_v_globe(const FinTwoCategory& grid, const FinTwoCategory& globe)
{
    return globe_functor(grid, globe, false);
}

std::pair<DblFunctor, DblFunctor> iota_maps(const FinTwoCategory& x, const FinDoubleCategory& hor,
                                            const FinDoubleCategory& vert, const FinDoubleCategory& sq)
{
    auto square = [&](OneCellId top, OneCellId left, OneCellId right, OneCellId bottom) {
        auto s = sq.find_square(square_name(x, top, left, right, bottom));
        if (!s)
            throw InvalidInput("squares double category lacks a required square");
        return *s;
    };
    std::pair<DblFunctor, DblFunctor> out;
    for (const FinDoubleCategory* d : {&hor, &vert}) {
        const bool is_h = d == &hor;
        DblFunctor& f = is_h ? out.first : out.second;
        for (std::uint32_t o = 0; o < d->object_count(); ++o)
            f.objects.push_back(*sq.find_object(d->object_name(ObjectId{o})));
        for (std::uint32_t a = 0; a < d->h_arrow_count(); ++a)
            f.h_arrows.push_back(is_h ? *sq.find_h_arrow(d->h_arrow(HArrowId{a}).name)
                                      : sq.h_identity(f.objects[d->h_arrow(HArrowId{a}).source.value]));
        for (std::uint32_t a = 0; a < d->v_arrow_count(); ++a)
            f.v_arrows.push_back(is_h ? sq.v_identity(f.objects[d->v_arrow(VArrowId{a}).source.value])
                                      : *sq.find_v_arrow(d->v_arrow(VArrowId{a}).name));
        for (std::uint32_t s = 0; s < d->square_count(); ++s) {
            const Square& q = d->square(SquareId{s});
            OneCellId top{f.h_arrows[q.top.value].value}, bottom{f.h_arrows[q.bottom.value].value};
            OneCellId left{f.v_arrows[q.left.value].value}, right{f.v_arrows[q.right.value].value};
            f.squares.push_back(square(top, left, right, bottom));
        }
    }
    return out;
}

namespace {

// The grid of embed_2cat(globe_grid(n, m), horizontal) given by the cell (alpha, beta) of [n, m].
Grid universal_grid(const FinDoubleCategory& target, Bidegree d, const RepCell& cell)
{
    Grid g;
    g.n = d.n;
    g.m = d.m;
    auto h_cell = [&](int p, int q) {
        std::vector<int> tuple(static_cast<std::size_t>(cell.h[p + 1] - cell.h[p]), cell.v[q]);
        return *target.find_h_arrow(tuple_name(cell.h[p], cell.h[p + 1], tuple));
    };
    for (int p = 0; p <= d.n; ++p)
        for (int q = 0; q <= d.m; ++q)
            g.objects.push_back(static_cast<std::uint32_t>(cell.h[p]));
    for (int p = 0; p < d.n; ++p)
        for (int q = 0; q <= d.m; ++q)
            g.h.push_back(h_cell(p, q).value);
    for (int p = 0; p <= d.n; ++p)
        for (int q = 0; q < d.m; ++q)
            g.v.push_back(target.v_identity(ObjectId{static_cast<std::uint32_t>(cell.h[p])}).value);
    for (int p = 0; p < d.n; ++p)
        for (int q = 0; q < d.m; ++q) {
            const auto& s =
                target.squares_with_boundary(h_cell(p, q), h_cell(p, q + 1), g.v_arrow(p, q), g.v_arrow(p + 1, q));
            if (s.empty())
                throw InvalidInput("no square filling a cell of the universal grid");
            g.sq.push_back(s.front().value);
        }
    return g;
}

}  // namespace

GlobeQuotientReport check_globe_quotient(int n, int m, Truncation t)
{
    GlobeQuotientReport report;
    Shape rep = build_shape(ShapeSpec::representable(n, m), t);
    const FinBisimplicialSet& r = rep.set();
    std::vector<std::vector<bool>> marked(t.level_count());
    for (Bidegree d : t.degrees()) {
        marked[t.index(d)].assign(r.size(d), false);
        for (CellId c = 0; c < r.size(d); ++c)
            marked[t.index(d)][c] = is_constant(rep.cells.key(d, c).cell.h);
    }
    Subpresheaf lines = generated_subpresheaf(r, marked);

    // n + 1 points, each constant in every bidegree
    FinBisimplicialSet::Builder pb(t);
    std::vector<std::string> names;
    std::vector<CellId> same;
    for (int i = 0; i <= n; ++i) {
        names.push_back(std::to_string(i));
        same.push_back(static_cast<CellId>(i));
    }
    for (Bidegree d : t.degrees())
        pb.cells(d, names);
    for (Bidegree d : t.degrees())
        for (Direction dir : {Direction::horizontal, Direction::vertical}) {
            const int e = extent(dir, d);
            if (e >= 1)
                for (int i = 0; i <= e; ++i)
                    pb.face(dir, d, i, same);
            if (e + 1 <= bound(dir, t))
                for (int i = 0; i <= e; ++i)
                    pb.degeneracy(dir, d, i, same);
        }
    FinBisimplicialSet points = std::move(pb).build();

    const FinBisimplicialSet& a = lines.object;
    BisimplicialMap collapse{t, std::vector<std::vector<CellId>>(t.level_count())};
    for (Bidegree d : t.degrees())
        for (CellId c = 0; c < a.size(d); ++c)
            collapse.components[t.index(d)].push_back(
                static_cast<CellId>(rep.cells.key(d, lines.inclusion(d, c)).cell.h.front()));
    Pushout po = pushout(a, points, r, collapse, lines.inclusion);

    FinDoubleCategory target = embed_2cat(globe_grid(n, m), Direction::horizontal);
    MaterializedNerve nerve = materialize_indexed(target, t);

    BisimplicialMap from_points{t, std::vector<std::vector<CellId>>(t.level_count())};
    BisimplicialMap from_rep{t, std::vector<std::vector<CellId>>(t.level_count())};
    for (Bidegree d : t.degrees()) {
        for (int k = 0; k <= n; ++k) {
            ObjectId o{static_cast<std::uint32_t>(k)};
            Grid g;
            g.n = d.n;
            g.m = d.m;
            g.objects.assign((d.n + 1) * (d.m + 1), o.value);
            g.h.assign(d.n * (d.m + 1), target.h_identity(o).value);
            g.v.assign((d.n + 1) * d.m, target.v_identity(o).value);
            g.sq.assign(d.n * d.m, target.identity_square(o).value);
            from_points.components[t.index(d)].push_back(nerve.at(g));
        }
        for (CellId c = 0; c < r.size(d); ++c)
            from_rep.components[t.index(d)].push_back(nerve.at(universal_grid(target, d, rep.cells.key(d, c).cell)));
    }
    for (Bidegree d : t.degrees())
        report.levels.push_back({d, po.object.size(d), nerve.set.size(d)});
    BisimplicialMap induced;
    try {
        induced = copair(po, from_points, from_rep);
    } catch (const InvalidInput& e) {
        report.detail = e.what();
        return report;
    }
    if (auto err = check_map(induced, po.object, nerve.set)) {
        report.detail = "induced map is not natural: " + *err;
        return report;
    }
    report.natural = true;
    report.injective = is_injective(induced);
    report.bijective = is_bijective(induced, nerve.set);
    for (const auto& l : report.levels)
        if (l.quotient != l.nerve && report.detail.empty())
            report.detail = "level " + to_string(l.degree) + ": quotient has " + std::to_string(l.quotient) +
                            " cells, nerve has " + std::to_string(l.nerve);
    return report;
}

std::optional<std::string> globe_restriction_bijective(int n, int m, const FinTwoCategory& y, Truncation t)
{
    FinDoubleCategory globe = embed_2cat(globe_grid(n, m), Direction::horizontal);
    FinDoubleCategory target = embed_2cat(y, Direction::horizontal);
    MaterializedNerve source = materialize_indexed(globe, t);
    Bidegree top{n, m};
    RepCell identity;
    for (int i = 0; i <= n; ++i)
        identity.h.push_back(i);
    for (int j = 0; j <= m; ++j)
        identity.v.push_back(j);
    const CellId universal = source.at(universal_grid(globe, top, identity));
    LazyNerve x(target, t);
    HomSearch search(source.set, x);
    std::set<CellId> images;
    std::uint64_t maps = search.run([&](const std::vector<CellId>& roots) {
        images.insert(search.value(roots, top, universal));
        return true;
    });
    const std::uint64_t cells = count_grids(target, top);
    if (images.size() != maps)
        return "two maps restrict to the same cell";
    if (maps != cells)
        return std::to_string(maps) + " maps but " + std::to_string(cells) + " cells at " + to_string(top);
    return std::nullopt;
}

}  // namespace dblcat
