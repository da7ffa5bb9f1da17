#include <gtest/gtest.h>

#include <set>

#include "dblcat/catalog.hpp"
#include "dblcat/double_category.hpp"
#include "dblcat/gray_sq.hpp"
#include "dblcat/hom.hpp"
#include "dblcat/nerve.hpp"
#include "dblcat/shapes.hpp"

using namespace dblcat;

namespace {

// Monotone maps [n] x [m] -> [1] by brute force over all 0/1 fillings.
std::uint64_t monotone_fillings(int n, int m)
{
    const int cells = (n + 1) * (m + 1);
    std::uint64_t count = 0;
    for (std::uint64_t mask = 0; mask < (1ULL << cells); ++mask) {
        auto at = [&](int i, int j) { return mask >> (i * (m + 1) + j) & 1; };
        bool ok = true;
        for (int i = 0; i <= n && ok; ++i)
            for (int j = 0; j <= m && ok; ++j)
                ok = (i == n || at(i, j) <= at(i + 1, j)) && (j == m || at(i, j) <= at(i, j + 1));
        count += ok;
    }
    return count;
}

// Name-based comparison data from a fragment of Sq(x) to x.
TwoFunctorData fragment_to_base(const Fragment& f, const FinTwoCategory& x)
{
    TwoFunctorData data;
    const FinTwoCategory& k = f.category;
    for (std::uint32_t o = 0; o < k.object_count(); ++o)
        data.objects.push_back(*x.find_object(k.object_name(ObjectId{o})));
    for (std::uint32_t p = 0; p < k.one_cell_count(); ++p)
        data.one_cells.push_back(*x.find_one_cell(k.one_cell(OneCellId{p}).name));
    for (std::uint32_t a = 0; a < k.two_cell_count(); ++a) {
        const auto& c = k.two_cell(TwoCellId{a});
        const auto& cells = x.cells_between(data.one_cells[c.source.value], data.one_cells[c.target.value]);
        data.two_cells.push_back(cells.empty() ? TwoCellId{kNoId} : cells.front());
    }
    return data;
}

std::vector<FinTwoCategory> posetal_catalog()
{
    std::vector<FinTwoCategory> out;
    for (auto& e : two_category_catalog())
        out.push_back(std::move(e.category));
    return out;
}

std::uint64_t composable_pairs(const FinDoubleCategory& d)
{
    std::uint64_t k = 0;
    for (std::uint32_t a = 0; a < d.square_count(); ++a)
        for (std::uint32_t b = 0; b < d.square_count(); ++b)
            k += d.square(SquareId{a}).right == d.square(SquareId{b}).left;
    return k;
}

bool is_identity_square(const FinDoubleCategory& d, SquareId s)
{
    const Square& q = d.square(s);
    return d.identity_square(q.top) == s || d.identity_square(q.left) == s;
}

}  // namespace

TEST(DoubleCategory, CatalogSatisfiesAxioms)
{
    for (const auto& [name, d] : double_category_catalog())
        EXPECT_TRUE(check_axioms(d).ok()) << name << ": " << check_axioms(d).summary();
    for (const auto& x : posetal_catalog())
        EXPECT_TRUE(check_axioms(x).ok()) << x.name();
}

TEST(DoubleCategory, BrokenInterchangeNamesItsSquares)
{
    auto d = broken_interchange();
    auto report = check_axioms(d);
    ASSERT_FALSE(report.ok());
    EXPECT_EQ(report.summary().substr(0, 11), "interchange");
    const auto& w = report.violations.front().witnesses;
    EXPECT_EQ(std::set<std::string>(w.begin(), w.end()), (std::set<std::string>{"alpha", "beta", "gamma", "delta"}));
    EXPECT_THROW(companionable_alt_check(d, SquareId{0}), InvalidInput);
}

TEST(Nerve, TerminalIsAPoint)
{
    Truncation t{3, 3};
    auto n = materialize(terminal_dblcat(), t);
    for (Bidegree d : t.degrees())
        EXPECT_EQ(n.size(d), 1u);
}

TEST(Nerve, SquaresOfIntervalCountsMonotoneFillings)
{
    auto d = squares_dblcat(chain(1));
    EXPECT_EQ(count_grids(d, {1, 1}), 6u);
    for (int n = 0; n <= 3; ++n)
        for (int m = 0; m <= 3; ++m) {
            EXPECT_EQ(count_grids(d, {n, m}), monotone_fillings(n, m)) << n << "," << m;
            EXPECT_EQ(enumerate_grids(d, {n, m}).size(), monotone_fillings(n, m));
        }
}

TEST(Nerve, TwoByOneLevelIsComposablePairs)
{
    for (const auto& [name, d] : double_category_catalog()) {
        EXPECT_EQ(count_grids(d, {2, 1}), composable_pairs(d)) << name;
        EXPECT_EQ(enumerate_grids(d, {2, 1}).size(), composable_pairs(d)) << name;
    }
}

TEST(Nerve, GridFacesAreCompositesAndSegalHolds)
{
    for (const auto& [name, d] : double_category_catalog()) {
        Truncation t = name == "sq-galois" ? Truncation{2, 2} : Truncation{3, 3};
        auto n = materialize(d, t);
        EXPECT_FALSE(check_identities(n).has_value()) << name;
        EXPECT_TRUE(is_segal(n).holds) << name << ": " << is_segal(n).failure;
    }
}

TEST(Nerve, LazyAgreesWithMaterialized)
{
    for (const auto& [name, d] : double_category_catalog()) {
        Truncation t{2, 2};
        auto n = materialize(d, t);
        LazyNerve lazy(d, t);
        auto f = materialized_to_lazy(d, n, lazy);
        EXPECT_FALSE(check_map(f, n, lazy).has_value()) << name;
        EXPECT_TRUE(is_injective(f)) << name;
        for (Bidegree deg : t.degrees())
            EXPECT_EQ(lazy.interned(deg), n.size(deg)) << name;
    }
}

TEST(Nerve, MapsFromLowerTriangle)
{
    Truncation t{2, 2};
    auto l = build_shape(ShapeSpec::lower_triangle(), t);
    auto n = materialize(squares_dblcat(chain(1)), t);
    EXPECT_EQ(hom_set(l.set(), n).size(), 3u);
}

TEST(Nerve, UniqueLiftsAgainstNonconvexHorns)
{
    for (const auto& [name, d] : double_category_catalog()) {
        if (name == "sq-galois" || name == "sq-chain1x1")
            continue;
        for (const ShapeSpec& spec : nonconvex_horns(2, 2)) {
            Truncation t{spec.n, spec.m};
            auto h = build_shape(spec, t);
            LazyNerve lazy(d, t);
            EXPECT_TRUE(has_unique_lift(*h.inclusion, h.set(), *h.ambient, lazy).holds)
                << name << " " << format_shape(spec);
        }
    }
}

TEST(Fragment, TerminalAndSquaresRecoverTheBase)
{
    auto f = fragment(terminal_dblcat(), Direction::horizontal);
    EXPECT_EQ(f.category.object_count(), 1u);
    EXPECT_EQ(f.category.one_cell_count(), 1u);
    EXPECT_EQ(f.category.two_cell_count(), 1u);
    for (const auto& x : posetal_catalog()) {
        auto sq = squares_dblcat(x);
        for (Direction dir : {Direction::horizontal, Direction::vertical}) {
            auto fr = fragment(sq, dir);
            EXPECT_TRUE(check_axioms(fr.category).ok()) << x.name();
            EXPECT_TRUE(is_isomorphism(fr.category, x, fragment_to_base(fr, x))) << x.name();
        }
    }
}

TEST(Fragment, VerticalFragmentOfIntervalSquares)
{
    auto fr = fragment(squares_dblcat(chain(1)), Direction::vertical);
    int nonidentity = 0;
    for (std::uint32_t p = 0; p < fr.category.one_cell_count(); ++p)
        nonidentity += !fr.category.is_identity(OneCellId{p});
    EXPECT_EQ(nonidentity, 1);
}

TEST(Fragment, EmbedThenFragmentRecovers)
{
    for (const auto& x : posetal_catalog())
        for (Direction dir : {Direction::horizontal, Direction::vertical}) {
            auto d = embed_2cat(x, dir);
            EXPECT_TRUE(check_axioms(d).ok()) << x.name();
            auto fr = fragment(d, dir);
            EXPECT_TRUE(is_isomorphism(fr.category, x, fragment_to_base(fr, x))) << x.name();
        }
    auto g = embed_2cat(globe_grid(1, 1), Direction::horizontal);
    int nonidentity = 0;
    for (std::uint32_t s = 0; s < g.square_count(); ++s)
        nonidentity += !is_identity_square(g, SquareId{s});
    EXPECT_EQ(nonidentity, 1);
}

TEST(Paste, SmallGrids)
{
    auto d = squares_dblcat(chain(2));
    for (std::uint32_t s = 0; s < d.square_count(); ++s)
        EXPECT_EQ(paste_grid(d, {{SquareId{s}}}), SquareId{s});
    auto f = *d.find_h_arrow("0-1"), g = *d.find_h_arrow("1-2");
    EXPECT_EQ(paste_grid(d, {{d.identity_square(f), d.identity_square(g)}}),
              d.identity_square(*d.h_comp(f, g)));
    auto left = d.identity_square(*d.find_v_arrow("0-1")), right = d.identity_square(*d.find_v_arrow("1-2"));
    EXPECT_THROW(paste_grid(d, {{left, right}}), InvalidInput);
}

TEST(Paste, EvaluationOrderIndependence)
{
    for (const auto& [name, d] : double_category_catalog()) {
        if (d.square_count() > 40)
            continue;
        for (const Grid& g : enumerate_grids(d, {2, 2})) {
            std::vector<std::vector<SquareId>> rows(2, std::vector<SquareId>(2));
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j)
                    rows[j][i] = g.square(i, j);
            auto [a, b] = paste_both_ways(d, rows);
            EXPECT_EQ(a, b) << name;
        }
    }
}

TEST(Companions, IdentityArrowHasIdentityCompanion)
{
    for (const auto& [name, d] : double_category_catalog())
        for (std::uint32_t o = 0; o < d.object_count(); ++o) {
            ObjectId x{o};
            Companionship want{Handedness::companion, d.v_identity(x), d.h_identity(x), d.identity_square(x),
                               d.identity_square(x)};
            auto found = find_companions(d, d.v_identity(x));
            EXPECT_NE(std::find(found.begin(), found.end(), want), found.end()) << name;
        }
}

TEST(Companions, ChainOfLengthTwo)
{
    auto x = chain(2);
    auto d = squares_dblcat(x);
    auto f = *d.find_v_arrow("0-1");
    auto comps = find_companions(d, f);
    ASSERT_EQ(comps.size(), 1u);
    EXPECT_EQ(d.h_arrow(comps[0].h).name, "0-1");
    EXPECT_TRUE(find_companions(d, f, Handedness::conjoint).empty());
    EXPECT_TRUE(find_adjunctions(x, *x.find_one_cell("0-1")).empty());
}

TEST(Companions, UniqueUpToUniqueInvertibleCell)
{
    for (const auto& [name, d] : double_category_catalog())
        for (std::uint32_t a = 0; a < d.v_arrow_count(); ++a)
            for (Handedness kind : {Handedness::companion, Handedness::conjoint}) {
                auto found = find_companions(d, VArrowId{a}, kind);
                for (const auto& c1 : found)
                    for (const auto& c2 : found) {
                        // invertible horizontal cells h1 => h2 pasting unit1 onto unit2
                        int witnesses = 0;
                        for (SquareId s : d.squares_with_boundary(c1.h, c2.h, d.v_identity(d.h_arrow(c1.h).source),
                                                                  d.v_identity(d.h_arrow(c1.h).target)))
                            if (horizontal_inverse(d, s) && d.sq_vcomp(c1.unit, s) == c2.unit)
                                ++witnesses;
                        EXPECT_EQ(witnesses, 1) << name;
                    }
            }
}

TEST(Companions, UnitsUpToInvertibleCells)
{
    for (const auto& [name, d] : double_category_catalog())
        for (std::uint32_t h = 0; h < d.h_arrow_count(); ++h)
            for (const auto& c : find_companion_data_for(d, HArrowId{h}))
                for (std::uint32_t s = 0; s < d.square_count(); ++s) {
                    const Square& a = d.square(SquareId{s});
                    if (a.top != c.h || !d.is_identity(a.left) || !d.is_identity(a.right))
                        continue;
                    SquareId composite = *d.sq_vcomp(c.unit, SquareId{s});
                    bool is_unit = false;
                    for (const auto& other : find_companion_data_for(d, a.bottom))
                        is_unit = is_unit || (other.unit == composite && other.f == c.f);
                    EXPECT_EQ(is_unit, horizontal_inverse(d, SquareId{s}).has_value()) << name;
                }
}

TEST(Companions, SquaresOfPosetalCategories)
{
    for (const auto& x : posetal_catalog()) {
        auto d = squares_dblcat(x);
        for (std::uint32_t p = 0; p < x.one_cell_count(); ++p) {
            const std::string& fname = x.one_cell(OneCellId{p}).name;
            VArrowId f = *d.find_v_arrow(fname);
            auto comps = find_companions(d, f);
            ASSERT_EQ(comps.size(), 1u) << x.name();
            EXPECT_EQ(d.h_arrow(comps[0].h).name, fname);
            auto conjs = find_companions(d, f, Handedness::conjoint);
            auto adjs = find_adjunctions(x, OneCellId{p});
            ASSERT_EQ(conjs.size(), adjs.size()) << x.name() << " " << fname;
            if (!adjs.empty())
                EXPECT_EQ(d.h_arrow(conjs[0].h).name, x.one_cell(adjs[0].right).name);
        }
    }
}

TEST(Companionable, MatchesFillerAndMateConditions)
{
    for (const auto& x : posetal_catalog()) {
        auto d = squares_dblcat(x);
        auto left_adjoint = [&](OneCellId r) -> std::optional<OneCellId> {
            auto l = find_left_adjoints(x, r);
            return l.empty() ? std::nullopt : std::optional<OneCellId>(l.front().left);
        };
        for (std::uint32_t s = 0; s < d.square_count(); ++s) {
            const Square& q = d.square(SquareId{s});
            OneCellId top{q.top.value}, bottom{q.bottom.value}, left{q.left.value}, right{q.right.value};
            bool filler_identity = *x.comp(top, right) == *x.comp(left, bottom);
            EXPECT_EQ(is_companionable(d, SquareId{s}).holds, filler_identity) << x.name() << " " << q.name;
            auto lt = left_adjoint(top), lb = left_adjoint(bottom);
            bool mate_identity = lt && lb && *x.comp(*lt, left) == *x.comp(right, *lb);
            EXPECT_EQ(is_companionable(d, SquareId{s}, Handedness::conjoint).holds, mate_identity)
                << x.name() << " " << q.name;
        }
    }
}

TEST(Companionable, AlternativeCheckAgrees)
{
    for (const auto& [name, d] : double_category_catalog())
        for (Handedness kind : {Handedness::companion, Handedness::conjoint})
            for (std::uint32_t s = 0; s < d.square_count(); ++s)
                EXPECT_EQ(companionable_alt_check(d, SquareId{s}, kind), is_companionable(d, SquareId{s}, kind).holds)
                    << name << " " << d.square(SquareId{s}).name;
}

TEST(Companionable, IdentitySquaresOnCompanions)
{
    for (const auto& [name, d] : double_category_catalog())
        for (std::uint32_t a = 0; a < d.v_arrow_count(); ++a)
            if (!find_companions(d, VArrowId{a}).empty()) {
                auto r = is_companionable(d, d.identity_square(VArrowId{a}));
                EXPECT_TRUE(r.holds) << name;
                EXPECT_TRUE(r.inverse.has_value());
            }
    auto d = free_square();
    EXPECT_FALSE(is_companionable(d, *d.find_square("[00,11]")).holds);
}

TEST(Adjunctions, FromCompanionAndConjoint)
{
    for (const auto& [name, d] : double_category_catalog()) {
        auto hor = fragment(d, Direction::horizontal);
        for (std::uint32_t a = 0; a < d.v_arrow_count(); ++a)
            for (const auto& comp : find_companions(d, VArrowId{a}))
                for (const auto& conj : find_companions(d, VArrowId{a}, Handedness::conjoint)) {
                    auto [unit, counit] = adjunction_from_comp_conj(d, comp, conj);
                    Adjunction adj{OneCellId{comp.h.value}, OneCellId{conj.h.value}, *hor.cell(unit),
                                   *hor.cell(counit)};
                    EXPECT_TRUE(triangle_identities_hold(hor.category, adj)) << name;
                    auto found = find_adjunctions(hor.category, adj.left);
                    EXPECT_NE(std::find_if(found.begin(), found.end(),
                                           [&](const Adjunction& b) {
                                               return b.right == adj.right && b.unit == adj.unit &&
                                                      b.counit == adj.counit;
                                           }),
                              found.end())
                        << name;
                    if (d.is_identity(VArrowId{a})) {
                        EXPECT_TRUE(hor.category.is_identity(adj.unit));
                        EXPECT_TRUE(hor.category.is_identity(adj.counit));
                    }
                }
    }
}

TEST(Adjunctions, GaloisConnection)
{
    auto x = galois_2cat();
    auto u = *x.find_one_cell("u"), v = *x.find_one_cell("v");
    auto found = find_adjunctions(x, u);
    ASSERT_EQ(found.size(), 1u);
    EXPECT_EQ(found[0].right, v);
    EXPECT_TRUE(find_adjunctions(x, v).empty());
    for (const auto& k : posetal_catalog())
        for (std::uint32_t p = 0; p < k.one_cell_count(); ++p)
            for (std::uint32_t q = 0; q < k.one_cell_count(); ++q) {
                auto adjs = find_adjunctions(k, OneCellId{p});
                bool general = std::any_of(adjs.begin(), adjs.end(),
                                           [&](const Adjunction& a) { return a.right == OneCellId{q}; });
                EXPECT_EQ(general, posetal_adjoint(k, OneCellId{p}, OneCellId{q}));
            }
    auto i = x.identity(*x.find_object("A"));
    auto self = find_adjunctions(x, i);
    ASSERT_FALSE(self.empty());
    EXPECT_EQ(self[0].right, i);
    EXPECT_EQ(self[0].unit, x.identity2(i));
}

TEST(Gray, GridShapes)
{
    auto g = gray_grid(1, 1);
    EXPECT_EQ(g.object_count(), 4u);
    auto a = *g.find_object("0,0"), b = *g.find_object("1,1");
    EXPECT_EQ(g.hom(a, b).size(), 2u);
    int nonidentity = 0;
    for (std::uint32_t c = 0; c < g.two_cell_count(); ++c)
        nonidentity += !g.is_identity(TwoCellId{c});
    EXPECT_EQ(nonidentity, 1);
    EXPECT_TRUE(g.find_two_cell("0,0:RD=>0,0:DR").has_value());
    auto g21 = gray_grid(2, 1);
    EXPECT_EQ(g21.hom(*g21.find_object("0,0"), *g21.find_object("2,1")).size(), 3u);
    for (int n = 0; n <= 3; ++n)
        for (int m = 0; m <= 2; ++m) {
            auto x = gray_grid(n, m);
            EXPECT_EQ(x.object_count(), static_cast<std::size_t>((n + 1) * (m + 1)));
            EXPECT_TRUE(x.locally_posetal());
            EXPECT_TRUE(check_axioms(x).ok()) << check_axioms(x).summary();
            std::uint64_t paths = 1;
            for (int k = 1; k <= n; ++k)
                paths = paths * static_cast<std::uint64_t>(m + k) / static_cast<std::uint64_t>(k);
            auto from = *x.find_object("0,0"), to = *x.find_object(std::to_string(n) + "," + std::to_string(m));
            EXPECT_EQ(x.hom(from, to).size(), paths);
        }
}

TEST(Gray, PathOrder)
{
    EXPECT_TRUE(path_leq("RD", "DR"));
    EXPECT_FALSE(path_leq("DR", "RD"));
    EXPECT_TRUE(path_leq("RRDD", "RDRD"));
    EXPECT_FALSE(path_leq("RD", "RR"));
    auto p = parse_path("2,1:RDR");
    EXPECT_EQ(p.i, 2);
    EXPECT_EQ(p.j, 1);
    EXPECT_EQ(format_path(p), "2,1:RDR");
    EXPECT_THROW(parse_path("nope"), ParseError);
}

TEST(Globe, Shapes)
{
    auto g = globe_grid(1, 1);
    EXPECT_EQ(g.object_count(), 2u);
    EXPECT_EQ(g.hom(ObjectId{0}, ObjectId{1}).size(), 2u);
    int nonidentity = 0;
    for (std::uint32_t c = 0; c < g.two_cell_count(); ++c)
        nonidentity += !g.is_identity(TwoCellId{c});
    EXPECT_EQ(nonidentity, 1);
    for (int m = 0; m <= 4; ++m)
        EXPECT_EQ(globe_grid(1, m).hom(ObjectId{0}, ObjectId{1}).size(), static_cast<std::size_t>(m + 1));
    auto h = globe_grid(2, 2);
    EXPECT_EQ(h.hom(ObjectId{0}, ObjectId{2}).size(), 9u);
    EXPECT_TRUE(check_axioms(h).ok()) << check_axioms(h).summary();
}

TEST(Globe, QuotientOfGridEmbedsInTheNerve)
{
    for (int n = 0; n <= 2; ++n)
        for (int m = 0; m <= 2; ++m) {
            auto r = check_globe_quotient(n, m, Truncation{2, 2});
            EXPECT_TRUE(r.natural) << n << "," << m << ": " << r.detail;
            EXPECT_TRUE(r.injective) << n << "," << m;
            EXPECT_EQ(r.bijective, n < 2 || m == 0) << n << "," << m << ": " << r.detail;
        }
    // mixed tuples such as (0, 1) in hom(0, 2) are not in the quotient
    auto r = check_globe_quotient(2, 1, Truncation{2, 2});
    auto level = std::find_if(r.levels.begin(), r.levels.end(),
                              [](const auto& l) { return l.degree == Bidegree{1, 0}; });
    EXPECT_EQ(level->quotient, 9u);
    EXPECT_EQ(level->nerve, 11u);
}

TEST(Globe, MapsOutOfTheNerveAreCells)
{
    for (const auto& y : posetal_catalog())
        for (int n = 0; n <= 2; ++n)
            for (int m = 0; m <= 2; ++m) {
                auto err = globe_restriction_bijective(n, m, y, Truncation{2, 2});
                EXPECT_FALSE(err.has_value()) << y.name() << " " << n << "," << m << ": " << err.value_or("");
            }
}

TEST(Squares, BasicInstances)
{
    auto t = squares_dblcat(terminal_2cat());
    EXPECT_EQ(t.object_count(), 1u);
    EXPECT_EQ(t.h_arrow_count(), 1u);
    EXPECT_EQ(t.v_arrow_count(), 1u);
    EXPECT_EQ(t.square_count(), 1u);
    EXPECT_EQ(count_grids(squares_dblcat(chain(2)), {0, 1}), 6u);
    FinTwoCategory::Builder b("two-cell");
    auto x = b.object("x"), y = b.object("y");
    auto ix = b.one_cell("ix", x, x), iy = b.one_cell("iy", y, y), p = b.one_cell("p", x, y);
    b.identity(x, ix).identity(y, iy);
    b.identity2(ix, b.two_cell("1", ix, ix)).identity2(iy, b.two_cell("2", iy, iy));
    b.identity2(p, b.two_cell("3", p, p)).two_cell("4", p, p);
    b.unit_entries();
    EXPECT_THROW(squares_dblcat(std::move(b).build()), InvalidInput);
}

TEST(Squares, NerveLevelsAreGrayFunctors)
{
    for (const auto& x : posetal_catalog()) {
        auto sq = squares_dblcat(x);
        for (int n = 0; n <= 2; ++n)
            for (int m = 0; m <= 2; ++m) {
                auto fs = gray_functors(x, n, m);
                EXPECT_EQ(fs.size(), count_grids(sq, {n, m})) << x.name() << " " << n << "," << m;
                auto grid = gray_grid(n, m);
                auto grids = enumerate_grids(sq, {n, m});
                std::set<std::vector<std::uint32_t>> seen;
                for (const auto& f : fs) {
                    EXPECT_FALSE(check_two_functor(grid, x, gray_functor_data(grid, x, f)).has_value());
                    seen.insert(gray_functor_grid(sq, f).key());
                }
                std::set<std::vector<std::uint32_t>> all;
                for (const auto& g : grids)
                    all.insert(g.key());
                EXPECT_EQ(seen, all) << x.name();
            }
    }
}

TEST(Squares, GrayFunctorsGlueFromColumns)
{
    auto x = chain_product(1, 1);
    for (int m = 0; m <= 2; ++m) {
        auto columns = gray_functors(x, 1, m);
        for (int n = 1; n <= 3; ++n) {
            // chains of n columns agreeing on shared edges
            std::vector<std::uint64_t> ways(columns.size(), 1);
            for (int step = 1; step < n; ++step) {
                std::vector<std::uint64_t> next(columns.size(), 0);
                for (std::size_t a = 0; a < columns.size(); ++a)
                    for (std::size_t b = 0; b < columns.size(); ++b) {
                        bool glue = true;
                        for (int j = 0; j <= m; ++j)
                            glue = glue && columns[a].points[(m + 1) + j] == columns[b].points[j];
                        for (int j = 0; j < m; ++j)
                            glue = glue && columns[a].v[m + j] == columns[b].v[j];
                        if (glue)
                            next[b] += ways[a];
                    }
                ways = next;
            }
            std::uint64_t total = 0;
            for (auto w : ways)
                total += w;
            EXPECT_EQ(gray_functors(x, n, m).size(), total) << n << "," << m;
        }
    }
}

TEST(Squares, IntervalMatchesMonotoneFillings)
{
    auto sq = squares_dblcat(chain(1));
    for (int n = 0; n <= 3; ++n)
        for (int m = 0; m <= 3; ++m)
            EXPECT_EQ(gray_functors(chain(1), n, m).size(), monotone_fillings(n, m));
    EXPECT_TRUE(check_axioms(sq).ok());
}

TEST(Iota, MapsIntoSquares)
{
    for (const auto& x : posetal_catalog()) {
        auto hor = embed_2cat(x, Direction::horizontal), vert = embed_2cat(x, Direction::vertical);
        auto sq = squares_dblcat(x);
        auto [ih, iv] = iota_maps(x, hor, vert, sq);
        EXPECT_FALSE(check_dbl_functor(hor, sq, ih).has_value()) << x.name();
        EXPECT_FALSE(check_dbl_functor(vert, sq, iv).has_value()) << x.name();
        EXPECT_EQ(ih.objects, iv.objects);
        auto fr = fragment(sq, Direction::horizontal);
        std::set<std::uint32_t> image, cells;
        for (SquareId s : ih.squares)
            image.insert(s.value);
        for (SquareId s : fr.squares)
            cells.insert(s.value);
        EXPECT_EQ(image, cells) << x.name();
        EXPECT_EQ(ih.squares.size(), fr.squares.size());
    }
    auto x = chain(1);
    auto sq = squares_dblcat(x);
    auto [ih, iv] = iota_maps(x, embed_2cat(x, Direction::horizontal), embed_2cat(x, Direction::vertical), sq);
    auto p = *x.find_one_cell("0-1");
    EXPECT_EQ(ih.h_arrows[p.value], *sq.find_h_arrow("0-1"));
    EXPECT_TRUE(sq.is_identity(ih.v_arrows[p.value]));
}

TEST(Iota, GridToGlobe)
{
    for (int n = 0; n <= 2; ++n)
        for (int m = 0; m <= 2; ++m) {
            auto grid = gray_grid(n, m);
            auto gh = globe_grid(n, m), gv = globe_grid(m, n);
            EXPECT_FALSE(check_two_functor(grid, gh, iota_h_globe(grid, gh)).has_value()) << n << "," << m;
            EXPECT_FALSE(check_two_functor(grid, gv, iota_v_globe(grid, gv)).has_value()) << n << "," << m;
        }
}

TEST(Embed, NoCompanionsForNonidentityVerticals)
{
    for (const auto& x : posetal_catalog()) {
        auto d = embed_2cat(x, Direction::vertical);
        for (std::uint32_t a = 0; a < d.v_arrow_count(); ++a)
            if (!d.is_identity(VArrowId{a}))
                EXPECT_TRUE(find_companions(d, VArrowId{a}).empty()) << x.name();
    }
}
