#include <gtest/gtest.h>

#include "dblcat/hom.hpp"
#include "dblcat/operations.hpp"
#include "dblcat/shapes.hpp"

using namespace dblcat;

namespace {

std::uint64_t binom(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
}

// Monotone maps [a] -> [n] are multisets of size a+1 from n+1 values.
std::uint64_t monotone_count(int a, int n) { return binom(a + n + 1, n); }

std::size_t nondegenerate(const FinBisimplicialSet& x, Bidegree d)
{
    std::size_t k = 0;
    for (CellId c = 0; c < x.size(d); ++c)
        k += x.is_degenerate(d, c) ? 0 : 1;
    return k;
}

// Two (1,0)-cells sharing one endpoint, nothing above except degeneracies.
FinBisimplicialSet two_edges_glued()
{
    Truncation t{2, 0};
    FinBisimplicialSet::Builder b(t);
    b.cells({0, 0}, {"x", "y", "z"});
    b.cells({1, 0}, {"sx", "sy", "sz", "f", "g"});
    b.cells({2, 0}, {"ssx", "ssy", "ssz", "s0f", "s1f", "s0g", "s1g"});
    b.face(Direction::horizontal, {1, 0}, 0, {0, 1, 2, 1, 2});
    b.face(Direction::horizontal, {1, 0}, 1, {0, 1, 2, 0, 1});
    b.degeneracy(Direction::horizontal, {0, 0}, 0, {0, 1, 2});
    b.degeneracy(Direction::horizontal, {1, 0}, 0, {0, 1, 2, 3, 5});
    b.degeneracy(Direction::horizontal, {1, 0}, 1, {0, 1, 2, 4, 6});
    // faces of (2,0): d0, d1, d2
    b.face(Direction::horizontal, {2, 0}, 0, {0, 1, 2, 3, 1, 4, 2});
    b.face(Direction::horizontal, {2, 0}, 1, {0, 1, 2, 3, 3, 4, 4});
    b.face(Direction::horizontal, {2, 0}, 2, {0, 1, 2, 0, 3, 1, 4});
    return std::move(b).build();
}

}  // namespace

TEST(Representable, LevelCountsMatchBinomialOracle)
{
    Truncation t{3, 3};
    for (int n = 0; n <= 2; ++n)
        for (int m = 0; m <= 2; ++m) {
            auto x = representable(n, m, t);
            for (Bidegree d : t.degrees())
                EXPECT_EQ(x.size(d), monotone_count(d.n, n) * monotone_count(d.m, m));
            EXPECT_FALSE(check_identities(x).has_value());
        }
}

TEST(Representable, SpotValues)
{
    Truncation t{3, 3};
    auto point = representable(0, 0, t);
    for (Bidegree d : t.degrees())
        EXPECT_EQ(point.size(d), 1u);
    EXPECT_EQ(representable(1, 1, t).size({1, 1}), 9u);
    EXPECT_EQ(representable(1, 0, t).size({1, 0}), 3u);
}

TEST(Representable, CellsAboveTheShapeDegree)
{
    auto x = representable(3, 1, Truncation{1, 1});
    EXPECT_EQ(x.size({1, 1}), monotone_count(1, 3) * 3);
    EXPECT_FALSE(check_identities(x).has_value());
}

TEST(Shapes, LowerTriangle)
{
    auto l = build_shape(ShapeSpec::lower_triangle(), Truncation{3, 3});
    EXPECT_EQ(l.set().size({0, 0}), 2u);
    EXPECT_FALSE(check_identities(l.set()).has_value());
    ASSERT_TRUE(l.quotient.has_value());
    EXPECT_FALSE(check_map(*l.quotient, *l.uncollapsed, l.set()).has_value());
    // One nondegenerate (1,1)-cell and the vertical edge f; top and left edges collapsed.
    EXPECT_EQ(nondegenerate(l.set(), {1, 1}), 1u);
    EXPECT_EQ(nondegenerate(l.set(), {0, 1}), 1u);
    EXPECT_EQ(nondegenerate(l.set(), {1, 0}), 1u);
}

TEST(Shapes, SpineOfTwoSimplex)
{
    auto s = build_shape(ShapeSpec::spine_h(2, 0), Truncation{3, 3});
    EXPECT_EQ(nondegenerate(s.set(), {1, 0}), 2u);
    EXPECT_EQ(nondegenerate(s.set(), {2, 0}), 0u);
    EXPECT_FALSE(check_map(*s.inclusion, s.set(), *s.ambient).has_value());
}

TEST(Shapes, HornMembershipOracle)
{
    Truncation t{3, 3};
    auto h = build_shape(ShapeSpec::horn({1}, {}, 2, 1), t);
    auto rep = representable(2, 1, t);
    for (Bidegree d : t.degrees()) {
        // Complement: horizontal part hits both 0 and 2, vertical part hits all of [1].
        std::size_t missing = 0;
        for (const auto& a : monotone_maps(d.n, 2))
            for (const auto& b : monotone_maps(d.m, 1))
                if (a.front() == 0 && a.back() == 2 && b.front() == 0 && b.back() == 1)
                    ++missing;
        EXPECT_EQ(h.set().size(d), rep.size(d) - missing) << to_string(d);
    }
    EXPECT_FALSE(check_identities(h.set()).has_value());
}

TEST(Shapes, BoundaryMissesOnlyTopCell)
{
    auto b = build_shape(ShapeSpec::boundary(1, 1), Truncation{1, 1});
    EXPECT_EQ(b.set().size({1, 1}), 8u);
    EXPECT_EQ(b.set().size({0, 0}), 4u);
}

TEST(Shapes, LQuotientAndGammaAreSubquotients)
{
    Truncation t{3, 3};
    auto l = build_shape(ShapeSpec::l_quotient(1, 1), t);
    auto tri = build_shape(ShapeSpec::lower_triangle(), t);
    for (Bidegree d : t.degrees())
        EXPECT_EQ(l.set().labels(d), tri.set().labels(d));
    for (int n = 1; n <= 2; ++n) {
        auto g = build_shape(ShapeSpec::gamma_l({0}, n, 2), t);
        EXPECT_FALSE(check_identities(g.set()).has_value());
        EXPECT_FALSE(check_map(*g.inclusion, g.set(), *g.ambient).has_value());
        EXPECT_FALSE(check_map(*g.quotient, *g.uncollapsed, g.set()).has_value());
        EXPECT_TRUE(is_injective(*g.inclusion));
    }
}

TEST(Shapes, SpecStringsRoundTrip)
{
    for (std::string text : {"horn:S=1:T=:n=2:m=1", "representable:n=1:m=1", "spine-v:n=0:m=3",
                             "lower-triangle", "L-quotient:n=2:m=3", "gamma-L:T=0,1:n=1:m=3", "boundary:n=2:m=2"})
        EXPECT_EQ(format_shape(parse_shape(text)), text);
    EXPECT_THROW(parse_shape("horn:S=3:T=:n=2:m=1"), InvalidInput);
    EXPECT_THROW(parse_shape("gamma-L:T=2:n=1:m=2"), InvalidInput);
    EXPECT_THROW(parse_shape("wedge:n=1"), ParseError);
}

TEST(Pushout, AlongIdentityReturnsOtherLeg)
{
    Truncation t{2, 2};
    auto h = build_shape(ShapeSpec::horn({}, {0, 1}, 1, 1), t);
    auto id = identity_map(h.set());
    auto p = pushout(h.set(), h.set(), *h.ambient, id, *h.inclusion);
    for (Bidegree d : t.degrees())
        EXPECT_EQ(p.object.size(d), h.ambient->size(d));
    EXPECT_TRUE(is_bijective(p.from_right, p.object));
}

TEST(Pushout, TwoTrianglesAlongTheVerticalEdge)
{
    // [0,1] -> L picks the vertical arrow f; both endpoints are shared, so the
    // glued object has the two vertices of L.
    Truncation t{2, 2};
    auto l = build_shape(ShapeSpec::lower_triangle(), t);
    auto edge = representable(0, 1, t);
    auto maps = hom_set(edge, l.set());
    std::optional<BisimplicialMap> f_edge;
    for (const auto& m : maps) {
        CellId e = m({0, 1}, edge.find({0, 1}, "0|01").value());
        if (!l.set().is_degenerate({0, 1}, e))
            f_edge = m;
    }
    ASSERT_TRUE(f_edge.has_value());
    auto p = pushout(edge, l.set(), l.set(), *f_edge, *f_edge);
    EXPECT_EQ(p.object.size({0, 0}), 2u);
    EXPECT_EQ(p.object.size({1, 1}), 2 * l.set().size({1, 1}) - edge.size({1, 1}));
    EXPECT_FALSE(check_identities(p.object).has_value());
}

TEST(Product, SpotValuesAndRepresentables)
{
    Truncation t{2, 2};
    auto l = build_shape(ShapeSpec::lower_triangle(), t);
    EXPECT_EQ(product(l.set(), l.set()).object.size({0, 0}), 4u);

    auto h = build_shape(ShapeSpec::representable(1, 0), t);
    auto v = build_shape(ShapeSpec::representable(0, 1), t);
    auto sq = build_shape(ShapeSpec::representable(1, 1), t);
    auto p = product(h.set(), v.set());
    BisimplicialMap f{t, std::vector<std::vector<CellId>>(t.level_count())};
    for (Bidegree d : t.degrees())
        for (CellId c = 0; c < p.object.size(d); ++c) {
            const auto& a = h.cells.key(d, p.first(d, c));
            const auto& b = v.cells.key(d, p.second(d, c));
            f.components[t.index(d)].push_back(sq.cells.id(d, ShapeCell{false, {a.cell.h, b.cell.v}}));
        }
    EXPECT_FALSE(check_map(f, p.object, sq.set()).has_value());
    EXPECT_TRUE(is_bijective(f, sq.set()));

    auto point = representable(0, 0, t);
    auto q = product(sq.set(), point);
    for (Bidegree d : t.degrees())
        EXPECT_EQ(q.object.size(d), sq.set().size(d));
    EXPECT_TRUE(is_bijective(q.first, sq.set()));
}

TEST(Dualize, InvolutionsAndCommutation)
{
    Truncation t{3, 2};
    auto x = build_shape(ShapeSpec::horn({0}, {2}, 2, 2), t).cells.set;
    for (Duality w : {Duality::transpose, Duality::hop, Duality::vop}) {
        auto y = dualize(dualize(x, w), w);
        EXPECT_FALSE(check_identities(dualize(x, w)).has_value());
        for (Bidegree d : t.degrees()) {
            EXPECT_EQ(y.labels(d), x.labels(d));
            for (Direction dir : {Direction::horizontal, Direction::vertical}) {
                if (x.has_face(dir, d))
                    for (int i = 0; i <= extent(dir, d); ++i)
                        EXPECT_EQ(y.face_table(dir, d, i), x.face_table(dir, d, i));
                if (x.has_degeneracy(dir, d))
                    for (int i = 0; i <= extent(dir, d); ++i)
                        EXPECT_EQ(y.degeneracy_table(dir, d, i), x.degeneracy_table(dir, d, i));
            }
        }
    }
    auto a = dualize(dualize(x, Duality::hop), Duality::transpose);
    auto b = dualize(dualize(x, Duality::transpose), Duality::vop);
    for (Bidegree d : a.truncation().degrees())
        for (Direction dir : {Direction::horizontal, Direction::vertical})
            if (a.has_face(dir, d))
                for (int i = 0; i <= extent(dir, d); ++i)
                    EXPECT_EQ(a.face_table(dir, d, i), b.face_table(dir, d, i));

    auto r10 = representable(1, 0, Truncation{2, 2});
    auto r01 = representable(0, 1, Truncation{2, 2});
    auto tr = dualize(r10, Duality::transpose);
    for (Bidegree d : tr.truncation().degrees())
        EXPECT_EQ(tr.size(d), r01.size(d));
}

TEST(Hom, YonedaCounts)
{
    Truncation t{2, 2};
    auto target = build_shape(ShapeSpec::l_quotient(2, 2), t).cells.set;
    EXPECT_EQ(hom_set(representable(0, 0, t), target).size(), target.size({0, 0}));
    EXPECT_EQ(hom_set(representable(1, 1, t), target).size(), target.size({1, 1}));
    EXPECT_EQ(hom_count(representable(2, 1, t), target), target.size({2, 1}));
}

TEST(Hom, MapsAreNaturalAndSorted)
{
    Truncation t{2, 2};
    auto src = build_shape(ShapeSpec::spine_h(2, 1), t).cells.set;
    auto tgt = representable(2, 1, t);
    auto maps = hom_set(src, tgt);
    ASSERT_FALSE(maps.empty());
    for (const auto& m : maps)
        EXPECT_FALSE(check_map(m, src, tgt).has_value());
    EXPECT_TRUE(std::is_sorted(maps.begin(), maps.end()));
}

TEST(Hom, BudgetIsEnforced)
{
    Truncation t{2, 2};
    auto src = representable(2, 2, t);
    EXPECT_THROW(hom_count(src, representable(2, 2, t), 5), BudgetExceeded);
}

TEST(UniqueLift, IdentityAndSpines)
{
    Truncation t{3, 3};
    auto x = representable(2, 1, t);
    auto id = identity_map(x);
    EXPECT_TRUE(has_unique_lift(id, x, x, x).holds);
    auto s = build_shape(ShapeSpec::spine_h(2, 0), t);
    auto target = representable(1, 2, t);
    EXPECT_TRUE(has_unique_lift(*s.inclusion, s.set(), *s.ambient, target).holds);
}

TEST(UniqueLift, FailsWithoutComposites)
{
    auto x = two_edges_glued();
    Truncation t = x.truncation();
    auto s = build_shape(ShapeSpec::spine_h(2, 0), t);
    auto r = has_unique_lift(*s.inclusion, s.set(), *s.ambient, x);
    EXPECT_FALSE(r.holds);
    EXPECT_EQ(r.extensions, 0u);
    EXPECT_TRUE(r.counterexample.has_value());
}

TEST(UniqueLift, StableUnderDualities)
{
    Truncation t{2, 2};
    auto h = build_shape(ShapeSpec::horn({1}, {}, 2, 1), t);
    auto target = build_shape(ShapeSpec::l_quotient(2, 2), t).cells.set;
    bool base = has_unique_lift(*h.inclusion, h.set(), *h.ambient, target).holds;
    for (Duality w : {Duality::hop, Duality::vop}) {
        auto i = dualize(*h.inclusion, w);
        EXPECT_EQ(has_unique_lift(i, dualize(h.set(), w), dualize(*h.ambient, w), dualize(target, w)).holds, base);
    }
}

TEST(Segal, RepresentablesAndCounterexample)
{
    Truncation t{3, 3};
    for (int n = 0; n <= 2; ++n)
        for (int m = 0; m <= 2; ++m)
            EXPECT_TRUE(is_segal(representable(n, m, t)).holds);
    auto glued = two_edges_glued();
    auto r = is_segal(glued);
    EXPECT_FALSE(r.holds);
    EXPECT_NE(r.failure.find("surjective"), std::string::npos);
    EXPECT_FALSE(check_identities(glued).has_value());
}

TEST(Normalization, RootsAreNondegenerate)
{
    Truncation t{3, 3};
    auto x = representable(2, 2, t);
    Normalization norm(x);
    // Nondegenerate cells of [2,2] are pairs of injective maps: 7 × 7.
    EXPECT_EQ(norm.roots().size(), 49u);
    for (Bidegree d : t.degrees())
        for (CellId c = 0; c < x.size(d); ++c) {
            const auto& nf = norm(d, c);
            EXPECT_EQ(apply_steps(x, nf.root_degree, nf.root, nf.steps), c);
        }
}
