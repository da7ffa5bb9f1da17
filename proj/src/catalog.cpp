#include "dblcat/catalog.hpp"

#include <map>
#include <tuple>

#include "dblcat/gray_sq.hpp"

namespace dblcat {

FinTwoCategory galois_2cat()
{
    FinTwoCategory::Builder b("galois");
    ObjectId a = b.object("A"), bb = b.object("B");
    OneCellId ia = b.one_cell("id_A", a, a), ib = b.one_cell("id_B", bb, bb);
    OneCellId u = b.one_cell("u", a, bb), v = b.one_cell("v", bb, a), e = b.one_cell("e", bb, bb);
    b.identity(a, ia).identity(bb, ib);
    b.comp(ia, ia, ia).comp(ia, u, u).comp(u, ib, u).comp(ib, ib, ib).comp(ib, v, v).comp(v, ia, v);
    b.comp(ib, e, e).comp(e, ib, e);
    b.comp(u, v, ia).comp(v, u, e).comp(u, e, u).comp(e, v, v).comp(e, e, e);
    b.posetal_two_cells({{e, ib}});
    return std::move(b).build();
}

namespace {

// Double category of a w by h grid of points: arrows are straight segments, squares are
// rectangles. Each rectangle carries one square, except the full 2 by 2 rectangle of the
// broken fixture, which carries one square per evaluation order.
FinDoubleCategory rectangles(const std::string& name, int w, int h, bool broken)
{
    FinDoubleCategory::Builder b(name);
    auto pname = [](int i, int j) { return std::to_string(i) + std::to_string(j); };
    std::map<std::pair<int, int>, ObjectId> points;
    for (int j = 0; j <= h; ++j)
        for (int i = 0; i <= w; ++i)
            points[{i, j}] = b.object(pname(i, j));
    std::map<std::tuple<int, int, int>, HArrowId> hs;  // row, from, to
    std::map<std::tuple<int, int, int>, VArrowId> vs;  // column, from, to
    for (int j = 0; j <= h; ++j)
        for (int i = 0; i <= w; ++i)
            for (int k = i; k <= w; ++k)
                hs[{j, i, k}] = b.h_arrow(i == k ? "id" + pname(i, j) : pname(i, j) + ">" + pname(k, j),
                                          points[{i, j}], points[{k, j}]);
    for (int i = 0; i <= w; ++i)
        for (int j = 0; j <= h; ++j)
            for (int l = j; l <= h; ++l)
                vs[{i, j, l}] = b.v_arrow(j == l ? "id" + pname(i, j) : pname(i, j) + "v" + pname(i, l),
                                          points[{i, j}], points[{i, l}]);
    for (auto [p, o] : points) {
        b.h_identity(o, hs[{p.second, p.first, p.first}]);
        b.v_identity(o, vs[{p.first, p.second, p.second}]);
    }
    for (auto [key, a] : hs) {
        auto [j, i, k] = key;
        for (int p = k; p <= w; ++p)
            b.h_comp(a, hs[{j, k, p}], hs[{j, i, p}]);
    }
    for (auto [key, a] : vs) {
        auto [i, j, l] = key;
        for (int p = l; p <= h; ++p)
            b.v_comp(a, vs[{i, l, p}], vs[{i, j, p}]);
    }

    using Rect = std::tuple<int, int, int, int>;  // i, k, j, l
    std::map<Rect, std::vector<SquareId>> squares;
    const std::map<Rect, std::string> letters = {{{0, 1, 0, 1}, "alpha"}, {{1, 2, 0, 1}, "beta"},
                                                 {{0, 1, 1, 2}, "gamma"}, {{1, 2, 1, 2}, "delta"},
                                                 {{0, 2, 0, 1}, "A1"},    {{0, 2, 1, 2}, "A2"},
                                                 {{0, 1, 0, 2}, "B1"},    {{1, 2, 0, 2}, "B2"}};
    for (int i = 0; i <= w; ++i)
        for (int k = i; k <= w; ++k)
            for (int j = 0; j <= h; ++j)
                for (int l = j; l <= h; ++l) {
                    Rect r{i, k, j, l};
                    auto add = [&](const std::string& sname) {
                        squares[r].push_back(b.square(sname, hs[{j, i, k}], hs[{l, i, k}], vs[{i, j, l}],
                                                      vs[{k, j, l}]));
                    };
                    std::string sname = "[" + pname(i, j) + "," + pname(k, l) + "]";
                    if (broken && letters.count(r))
                        sname = letters.at(r);
                    if (broken && k - i == 2 && l - j == 2) {
                        add("T1");
                        add("T2");
                    } else {
                        add(sname);
                    }
                }
    for (auto [key, a] : hs) {
        auto [j, i, k] = key;
        b.identity_square(a, squares[{i, k, j, j}].front());
    }
    for (auto [key, a] : vs) {
        auto [i, j, l] = key;
        b.identity_square(a, squares[{i, i, j, l}].front());
    }
    for (const auto& [r1, list1] : squares)
        for (const auto& [r2, list2] : squares) {
            auto [i1, k1, j1, l1] = r1;
            auto [i2, k2, j2, l2] = r2;
            for (SquareId s1 : list1)
                for (SquareId s2 : list2) {
                    if (k1 == i2 && j1 == j2 && l1 == l2) {
                        const auto& out = squares[{i1, k2, j1, l1}];
                        SquareId c = out.front();
                        if (i1 == k1)
                            c = s2;
                        else if (i2 == k2)
                            c = s1;
                        else if (out.size() > 1)
                            c = out[1];  // B1 | B2
                        b.sq_hcomp(s1, s2, c);
                    }
                    if (l1 == j2 && i1 == i2 && k1 == k2) {
                        const auto& out = squares[{i1, k1, j1, l2}];
                        SquareId c = out.front();
                        if (j1 == l1)
                            c = s2;
                        else if (j2 == l2)
                            c = s1;
                        b.sq_vcomp(s1, s2, c);  // A1 / A2 is the first
                    }
                }
        }
    return std::move(b).build();
}

}  // namespace

FinDoubleCategory terminal_dblcat() { return squares_dblcat(terminal_2cat()); }
FinDoubleCategory free_h_arrow() { return rectangles("free-h-arrow", 1, 0, false); }
FinDoubleCategory free_v_arrow() { return rectangles("free-v-arrow", 0, 1, false); }
FinDoubleCategory free_square() { return rectangles("free-square", 1, 1, false); }
FinDoubleCategory broken_interchange() { return rectangles("broken-interchange", 2, 2, true); }

std::vector<TwoCatEntry> two_category_catalog()
{
    std::vector<TwoCatEntry> out;
    out.push_back({"terminal", terminal_2cat()});
    out.push_back({"chain1", chain(1)});
    out.push_back({"chain2", chain(2)});
    out.push_back({"chain1x1", chain_product(1, 1)});
    out.push_back({"galois", galois_2cat()});
    return out;
}

std::vector<DblCatEntry> double_category_catalog()
{
    std::vector<DblCatEntry> out;
    out.push_back({"terminal", terminal_dblcat()});
    out.push_back({"free-h-arrow", free_h_arrow()});
    out.push_back({"free-v-arrow", free_v_arrow()});
    out.push_back({"free-square", free_square()});
    for (auto& [name, x] : two_category_catalog())
        if (name != "terminal")
            out.push_back({"sq-" + name, squares_dblcat(x)});
    return out;
}

}  // namespace dblcat
