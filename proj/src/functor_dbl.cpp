#include "dblcat/functor_dbl.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "dblcat/gray_sq.hpp"

namespace dblcat {

namespace {

using Values = std::vector<std::uint32_t>;

// Backtracking over variables with value lists computed from earlier choices. A check runs
// once its last variable is assigned.
class Search {
public:
    using Domain = std::function<Values(const Values&)>;
    using Check = std::function<bool(const Values&)>;

    explicit Search(std::uint64_t& remaining) : remaining_(remaining) {}

    std::size_t variable(Domain d)
    {
        domains_.push_back(std::move(d));
        checks_.emplace_back();
        return domains_.size() - 1;
    }
    void check(std::size_t last, Check c) { checks_.at(last).push_back(std::move(c)); }

    void run(const std::function<void(const Values&)>& visit)
    {
        Values values(domains_.size(), 0);
        step(0, values, visit);
    }

private:
    void step(std::size_t k, Values& values, const std::function<void(const Values&)>& visit)
    {
        if (k == domains_.size()) {
            visit(values);
            return;
        }
        for (std::uint32_t v : domains_[k](values)) {
            if (remaining_ == 0)
                throw BudgetExceeded("functor enumeration exceeded its budget");
            --remaining_;
            values[k] = v;
            bool ok = true;
            for (const auto& c : checks_[k])
                if (!(ok = c(values)))
                    break;
            if (ok)
                step(k + 1, values, visit);
        }
    }

    std::uint64_t& remaining_;
    std::vector<Domain> domains_;
    std::vector<std::vector<Check>> checks_;
};

template <class T>
Values ids(const std::vector<T>& xs)
{
    Values out;
    for (const T& x : xs)
        out.push_back(x.value);
    return out;
}

std::size_t last_of(std::initializer_list<std::size_t> xs) { return *std::max_element(xs.begin(), xs.end()); }

std::vector<DblFunctor> functors_impl(const FinDoubleCategory& c, const FinDoubleCategory& d, std::uint64_t& remaining)
{
    const auto n0 = static_cast<std::uint32_t>(c.object_count());
    const auto nh = static_cast<std::uint32_t>(c.h_arrow_count());
    const auto nv = static_cast<std::uint32_t>(c.v_arrow_count());
    const auto ns = static_cast<std::uint32_t>(c.square_count());
    auto obj = [](std::uint32_t x) -> std::size_t { return x; };
    auto har = [&](std::uint32_t a) -> std::size_t { return n0 + a; };
    auto var = [&](std::uint32_t a) -> std::size_t { return n0 + nh + a; };
    auto sqr = [&](std::uint32_t s) -> std::size_t { return n0 + nh + nv + s; };

    std::vector<std::optional<HArrowId>> identity_of_h(ns);
    std::vector<std::optional<VArrowId>> identity_of_v(ns);
    for (std::uint32_t a = 0; a < nh; ++a)
        identity_of_h[c.identity_square(HArrowId{a}).value] = HArrowId{a};
    for (std::uint32_t a = 0; a < nv; ++a)
        identity_of_v[c.identity_square(VArrowId{a}).value] = VArrowId{a};

    Search search(remaining);
    Values all_objects;
    for (std::uint32_t x = 0; x < d.object_count(); ++x)
        all_objects.push_back(x);
    for (std::uint32_t x = 0; x < n0; ++x)
        search.variable([&all_objects](const Values&) { return all_objects; });
    for (std::uint32_t a = 0; a < nh; ++a) {
        const HArrow arrow = c.h_arrow(HArrowId{a});
        const bool identity = c.is_identity(HArrowId{a});
        search.variable([&, arrow, identity](const Values& v) {
            ObjectId s{v[obj(arrow.source.value)]}, t{v[obj(arrow.target.value)]};
            return identity ? Values{d.h_identity(s).value} : ids(d.h_arrows_between(s, t));
        });
    }
    for (std::uint32_t a = 0; a < nv; ++a) {
        const VArrow arrow = c.v_arrow(VArrowId{a});
        const bool identity = c.is_identity(VArrowId{a});
        search.variable([&, arrow, identity](const Values& v) {
            ObjectId s{v[obj(arrow.source.value)]}, t{v[obj(arrow.target.value)]};
            return identity ? Values{d.v_identity(s).value} : ids(d.v_arrows_between(s, t));
        });
    }
    for (std::uint32_t s = 0; s < ns; ++s) {
        const Square q = c.square(SquareId{s});
        const auto ih = identity_of_h[s];
        const auto iv = identity_of_v[s];
        search.variable([&, q, ih, iv](const Values& v) {
            if (ih)
                return Values{d.identity_square(HArrowId{v[har(ih->value)]}).value};
            if (iv)
                return Values{d.identity_square(VArrowId{v[var(iv->value)]}).value};
            return ids(d.squares_with_boundary(HArrowId{v[har(q.top.value)]}, HArrowId{v[har(q.bottom.value)]},
                                               VArrowId{v[var(q.left.value)]}, VArrowId{v[var(q.right.value)]}));
        });
    }
    for (std::uint32_t p = 0; p < nh; ++p)
        for (std::uint32_t q = 0; q < nh; ++q)
            if (auto r = c.h_comp(HArrowId{p}, HArrowId{q}))
                search.check(last_of({har(p), har(q), har(r->value)}), [&, p, q, r = r->value](const Values& v) {
                    return d.h_comp(HArrowId{v[har(p)]}, HArrowId{v[har(q)]}) == HArrowId{v[har(r)]};
                });
    for (std::uint32_t p = 0; p < nv; ++p)
        for (std::uint32_t q = 0; q < nv; ++q)
            if (auto r = c.v_comp(VArrowId{p}, VArrowId{q}))
                search.check(last_of({var(p), var(q), var(r->value)}), [&, p, q, r = r->value](const Values& v) {
                    return d.v_comp(VArrowId{v[var(p)]}, VArrowId{v[var(q)]}) == VArrowId{v[var(r)]};
                });
    for (std::uint32_t s = 0; s < ns; ++s) {
        const Square& q = c.square(SquareId{s});
        for (SquareId t : c.squares_with_left(q.right))
            if (auto r = c.sq_hcomp(SquareId{s}, t))
                search.check(last_of({sqr(s), sqr(t.value), sqr(r->value)}),
                             [&, s, t = t.value, r = r->value](const Values& v) {
                                 return d.sq_hcomp(SquareId{v[sqr(s)]}, SquareId{v[sqr(t)]}) == SquareId{v[sqr(r)]};
                             });
        for (SquareId t : c.squares_with_top(q.bottom))
            if (auto r = c.sq_vcomp(SquareId{s}, t))
                search.check(last_of({sqr(s), sqr(t.value), sqr(r->value)}),
                             [&, s, t = t.value, r = r->value](const Values& v) {
                                 return d.sq_vcomp(SquareId{v[sqr(s)]}, SquareId{v[sqr(t)]}) == SquareId{v[sqr(r)]};
                             });
    }
    std::vector<DblFunctor> out;
    search.run([&](const Values& v) {
        DblFunctor f;
        for (std::uint32_t x = 0; x < n0; ++x)
            f.objects.push_back(ObjectId{v[obj(x)]});
        for (std::uint32_t a = 0; a < nh; ++a)
            f.h_arrows.push_back(HArrowId{v[har(a)]});
        for (std::uint32_t a = 0; a < nv; ++a)
            f.v_arrows.push_back(VArrowId{v[var(a)]});
        for (std::uint32_t s = 0; s < ns; ++s)
            f.squares.push_back(SquareId{v[sqr(s)]});
        out.push_back(std::move(f));
    });
    return out;
}

std::vector<HTransformation> h_impl(const FinDoubleCategory& c, const FinDoubleCategory& d, const DblFunctor& F,
                                    const DblFunctor& G, std::uint32_t fi, std::uint32_t gi, std::uint64_t& remaining)
{
    const auto n0 = static_cast<std::uint32_t>(c.object_count());
    const auto nh = static_cast<std::uint32_t>(c.h_arrow_count());
    const auto nv = static_cast<std::uint32_t>(c.v_arrow_count());
    const auto ns = static_cast<std::uint32_t>(c.square_count());
    auto var = [&](std::uint32_t f) -> std::size_t { return n0 + f; };

    Search search(remaining);
    for (std::uint32_t x = 0; x < n0; ++x)
        search.variable([&, x](const Values&) { return ids(d.h_arrows_between(F.objects[x], G.objects[x])); });
    for (std::uint32_t f = 0; f < nv; ++f) {
        const VArrow arrow = c.v_arrow(VArrowId{f});
        const bool identity = c.is_identity(VArrowId{f});
        search.variable([&, f, arrow, identity](const Values& v) {
            HArrowId top{v[arrow.source.value]}, bottom{v[arrow.target.value]};
            if (identity)
                return Values{d.identity_square(top).value};
            return ids(d.squares_with_boundary(top, bottom, F.v_arrows[f], G.v_arrows[f]));
        });
    }
    for (std::uint32_t a = 0; a < nh; ++a) {
        const HArrow arrow = c.h_arrow(HArrowId{a});
        search.check(std::max(arrow.source.value, arrow.target.value), [&, a, arrow](const Values& v) {
            auto lhs = d.h_comp(F.h_arrows[a], HArrowId{v[arrow.target.value]});
            return lhs && lhs == d.h_comp(HArrowId{v[arrow.source.value]}, G.h_arrows[a]);
        });
    }
    for (std::uint32_t p = 0; p < nv; ++p)
        for (std::uint32_t q = 0; q < nv; ++q)
            if (auto r = c.v_comp(VArrowId{p}, VArrowId{q}))
                search.check(last_of({var(p), var(q), var(r->value)}), [&, p, q, r = r->value](const Values& v) {
                    return d.sq_vcomp(SquareId{v[var(p)]}, SquareId{v[var(q)]}) == SquareId{v[var(r)]};
                });
    for (std::uint32_t s = 0; s < ns; ++s) {
        const Square q = c.square(SquareId{s});
        search.check(std::max(var(q.left.value), var(q.right.value)), [&, s, q](const Values& v) {
            auto lhs = d.sq_hcomp(F.squares[s], SquareId{v[var(q.right.value)]});
            return lhs && lhs == d.sq_hcomp(SquareId{v[var(q.left.value)]}, G.squares[s]);
        });
    }
    std::vector<HTransformation> out;
    search.run([&](const Values& v) {
        HTransformation t{fi, gi, {}, {}};
        for (std::uint32_t x = 0; x < n0; ++x)
            t.components.push_back(HArrowId{v[x]});
        for (std::uint32_t f = 0; f < nv; ++f)
            t.squares.push_back(SquareId{v[var(f)]});
        out.push_back(std::move(t));
    });
    return out;
}

VTransformation from_transposed(const HTransformation& t)
{
    VTransformation out{t.source, t.target, {}, t.squares};
    for (HArrowId a : t.components)
        out.components.push_back(VArrowId{a.value});
    return out;
}

std::vector<Modification> modifications_impl(const FunctorArrows& fun, std::uint32_t top, std::uint32_t bottom,
                                             std::uint32_t left, std::uint32_t right, std::uint64_t& remaining)
{
    const FinDoubleCategory &c = fun.source, &d = fun.target;
    const auto n0 = static_cast<std::uint32_t>(c.object_count());
    const HTransformation &alpha = fun.h[top], &beta = fun.h[bottom];
    const VTransformation &phi = fun.v[left], &psi = fun.v[right];
    Search search(remaining);
    for (std::uint32_t x = 0; x < n0; ++x)
        search.variable([&, x](const Values&) {
            return ids(d.squares_with_boundary(alpha.components[x], beta.components[x], phi.components[x],
                                               psi.components[x]));
        });
    for (std::uint32_t a = 0; a < c.h_arrow_count(); ++a) {
        const HArrow arrow = c.h_arrow(HArrowId{a});
        search.check(std::max(arrow.source.value, arrow.target.value), [&, a, arrow](const Values& v) {
            auto lhs = d.sq_hcomp(phi.squares[a], SquareId{v[arrow.target.value]});
            return lhs && lhs == d.sq_hcomp(SquareId{v[arrow.source.value]}, psi.squares[a]);
        });
    }
    for (std::uint32_t f = 0; f < c.v_arrow_count(); ++f) {
        const VArrow arrow = c.v_arrow(VArrowId{f});
        search.check(std::max(arrow.source.value, arrow.target.value), [&, f, arrow](const Values& v) {
            auto lhs = d.sq_vcomp(alpha.squares[f], SquareId{v[arrow.target.value]});
            return lhs && lhs == d.sq_vcomp(SquareId{v[arrow.source.value]}, beta.squares[f]);
        });
    }
    std::vector<Modification> out;
    search.run([&](const Values& v) {
        Modification m{top, bottom, left, right, {}};
        for (std::uint32_t x = 0; x < n0; ++x)
            m.components.push_back(SquareId{v[x]});
        out.push_back(std::move(m));
    });
    return out;
}

template <class T>
std::optional<std::uint32_t> find_in(const std::vector<T>& xs, const T& x)
{
    auto it = std::lower_bound(xs.begin(), xs.end(), x);
    if (it == xs.end() || !(*it == x))
        return std::nullopt;
    return static_cast<std::uint32_t>(it - xs.begin());
}

}  // namespace

std::optional<std::uint32_t> FunctorArrows::find_h(const HTransformation& a) const { return find_in(h, a); }
std::optional<std::uint32_t> FunctorArrows::find_v(const VTransformation& a) const { return find_in(v, a); }

std::uint32_t FunctorArrows::h_identity(std::uint32_t f) const
{
    const DblFunctor& F = functors.at(f);
    HTransformation t{f, f, {}, {}};
    for (ObjectId x : F.objects)
        t.components.push_back(target.h_identity(x));
    for (VArrowId a : F.v_arrows)
        t.squares.push_back(target.identity_square(a));
    auto found = find_h(t);
    if (!found)
        throw Error("identity transformation missing");
    return *found;
}

std::uint32_t FunctorArrows::v_identity(std::uint32_t f) const
{
    const DblFunctor& F = functors.at(f);
    VTransformation t{f, f, {}, {}};
    for (ObjectId x : F.objects)
        t.components.push_back(target.v_identity(x));
    for (HArrowId a : F.h_arrows)
        t.squares.push_back(target.identity_square(a));
    auto found = find_v(t);
    if (!found)
        throw Error("identity transformation missing");
    return *found;
}

std::vector<Modification> modifications(const FunctorArrows& fun, std::uint32_t top, std::uint32_t bottom,
                                        std::uint32_t left, std::uint32_t right, std::uint64_t budget)
{
    return modifications_impl(fun, top, bottom, left, right, budget);
}

std::vector<DblFunctor> dbl_functors(const FinDoubleCategory& c, const FinDoubleCategory& d, std::uint64_t budget)
{
    return functors_impl(c, d, budget);
}

std::vector<HTransformation> h_transformations(const FinDoubleCategory& c, const FinDoubleCategory& d,
                                               const std::vector<DblFunctor>& functors, std::uint32_t f,
                                               std::uint32_t g, std::uint64_t budget)
{
    return h_impl(c, d, functors.at(f), functors.at(g), f, g, budget);
}

std::vector<VTransformation> v_transformations(const FinDoubleCategory& c, const FinDoubleCategory& d,
                                               const std::vector<DblFunctor>& functors, std::uint32_t f,
                                               std::uint32_t g, std::uint64_t budget)
{
    std::vector<VTransformation> out;
    for (const auto& t : h_impl(transpose(c), transpose(d), transpose(functors.at(f)), transpose(functors.at(g)), f,
                                g, budget))
        out.push_back(from_transposed(t));
    return out;
}

namespace {

FunctorArrows arrows_impl(const FinDoubleCategory& c, const FinDoubleCategory& d, std::uint64_t& remaining)
{
    if (!check_axioms(c).ok() || !check_axioms(d).ok())
        throw InvalidInput("functor double categories need valid double categories");
    FunctorArrows out{c, d, functors_impl(c, d, remaining), {}, {}};
    const auto nf = static_cast<std::uint32_t>(out.functors.size());
    const FinDoubleCategory ct = transpose(c), dt = transpose(d);
    std::vector<DblFunctor> transposed;
    for (const auto& f : out.functors)
        transposed.push_back(transpose(f));
    // pairs in order, so both lists come out sorted
    for (std::uint32_t f = 0; f < nf; ++f)
        for (std::uint32_t g = 0; g < nf; ++g) {
            auto hs = h_impl(c, d, out.functors[f], out.functors[g], f, g, remaining);
            std::sort(hs.begin(), hs.end());
            out.h.insert(out.h.end(), hs.begin(), hs.end());
            for (const auto& t : h_impl(ct, dt, transposed[f], transposed[g], f, g, remaining))
                out.v.push_back(from_transposed(t));
        }
    std::sort(out.v.begin(), out.v.end());
    return out;
}

}  // namespace

FunctorArrows functor_arrows(const FinDoubleCategory& c, const FinDoubleCategory& d, std::uint64_t budget)
{
    return arrows_impl(c, d, budget);
}

FunctorDoubleCategory dbl_fun(const FinDoubleCategory& c, const FinDoubleCategory& d, std::uint64_t budget)
{
    std::uint64_t remaining = budget;
    FunctorDoubleCategory out{arrows_impl(c, d, remaining), {}, FinDoubleCategory{}};
    const auto nf = static_cast<std::uint32_t>(out.functors.size());

    std::multimap<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> h_between;
    for (std::uint32_t i = 0; i < out.h.size(); ++i)
        h_between.emplace(std::pair{out.h[i].source, out.h[i].target}, i);
    std::multimap<std::uint32_t, std::uint32_t> v_from;
    for (std::uint32_t i = 0; i < out.v.size(); ++i)
        v_from.emplace(out.v[i].source, i);
    for (std::uint32_t top = 0; top < out.h.size(); ++top) {
        auto [lb, le] = v_from.equal_range(out.h[top].source);
        for (auto l = lb; l != le; ++l) {
            auto [rb, re] = v_from.equal_range(out.h[top].target);
            for (auto r = rb; r != re; ++r) {
                auto [bb, be] = h_between.equal_range({out.v[l->second].target, out.v[r->second].target});
                for (auto b = bb; b != be; ++b)
                    for (auto& m : modifications_impl(out, top, b->second, l->second, r->second, remaining))
                        out.squares.push_back(std::move(m));
            }
        }
    }
    std::sort(out.squares.begin(), out.squares.end());

    FinDoubleCategory::Builder b("[" + c.name() + "," + d.name() + "]");
    for (std::uint32_t f = 0; f < nf; ++f)
        b.object("F" + std::to_string(f));
    for (std::uint32_t i = 0; i < out.h.size(); ++i)
        b.h_arrow("h" + std::to_string(i), ObjectId{out.h[i].source}, ObjectId{out.h[i].target});
    for (std::uint32_t i = 0; i < out.v.size(); ++i)
        b.v_arrow("v" + std::to_string(i), ObjectId{out.v[i].source}, ObjectId{out.v[i].target});
    for (std::uint32_t i = 0; i < out.squares.size(); ++i) {
        const auto& m = out.squares[i];
        b.square("s" + std::to_string(i), HArrowId{m.top}, HArrowId{m.bottom}, VArrowId{m.left}, VArrowId{m.right});
    }

    auto need = [](std::optional<std::uint32_t> x, const char* what) {
        if (!x)
            throw Error(std::string("functor double category is not closed under ") + what);
        return *x;
    };
    std::vector<std::uint32_t> h_id(nf), v_id(nf);
    for (std::uint32_t f = 0; f < nf; ++f) {
        h_id[f] = out.h_identity(f);
        v_id[f] = out.v_identity(f);
        b.h_identity(ObjectId{f}, HArrowId{h_id[f]}).v_identity(ObjectId{f}, VArrowId{v_id[f]});
    }
    auto find_sq = [&](const Modification& m) { return need(find_in(out.squares, m), "square composition"); };
    for (std::uint32_t i = 0; i < out.h.size(); ++i) {
        const auto& a = out.h[i];
        Modification id{i, i, v_id[a.source], v_id[a.target], {}};
        for (HArrowId x : a.components)
            id.components.push_back(d.identity_square(x));
        b.identity_square(HArrowId{i}, SquareId{find_sq(id)});
        for (std::uint32_t j = 0; j < out.h.size(); ++j) {
            const auto& c2 = out.h[j];
            if (c2.source != a.target)
                continue;
            HTransformation r{a.source, c2.target, {}, {}};
            for (std::size_t x = 0; x < a.components.size(); ++x)
                r.components.push_back(*d.h_comp(a.components[x], c2.components[x]));
            for (std::size_t f = 0; f < a.squares.size(); ++f)
                r.squares.push_back(*d.sq_hcomp(a.squares[f], c2.squares[f]));
            b.h_comp(HArrowId{i}, HArrowId{j}, HArrowId{need(out.find_h(r), "horizontal composition")});
        }
    }
    for (std::uint32_t i = 0; i < out.v.size(); ++i) {
        const auto& a = out.v[i];
        Modification id{h_id[a.source], h_id[a.target], i, i, {}};
        for (VArrowId x : a.components)
            id.components.push_back(d.identity_square(x));
        b.identity_square(VArrowId{i}, SquareId{find_sq(id)});
        for (std::uint32_t j = 0; j < out.v.size(); ++j) {
            const auto& c2 = out.v[j];
            if (c2.source != a.target)
                continue;
            VTransformation r{a.source, c2.target, {}, {}};
            for (std::size_t x = 0; x < a.components.size(); ++x)
                r.components.push_back(*d.v_comp(a.components[x], c2.components[x]));
            for (std::size_t f = 0; f < a.squares.size(); ++f)
                r.squares.push_back(*d.sq_vcomp(a.squares[f], c2.squares[f]));
            b.v_comp(VArrowId{i}, VArrowId{j}, VArrowId{need(out.find_v(r), "vertical composition")});
        }
    }
    std::multimap<std::uint32_t, std::uint32_t> by_left, by_top;
    for (std::uint32_t i = 0; i < out.squares.size(); ++i) {
        by_left.emplace(out.squares[i].left, i);
        by_top.emplace(out.squares[i].top, i);
    }
    for (std::uint32_t i = 0; i < out.squares.size(); ++i) {
        const auto& m = out.squares[i];
        auto [lb, le] = by_left.equal_range(m.right);
        for (auto it = lb; it != le; ++it) {
            const auto& n = out.squares[it->second];
            Modification r{b.partial().h_comp(HArrowId{m.top}, HArrowId{n.top})->value, b.partial().h_comp(HArrowId{m.bottom}, HArrowId{n.bottom})->value, m.left,
                           n.right, {}};
            for (std::size_t x = 0; x < m.components.size(); ++x)
                r.components.push_back(*d.sq_hcomp(m.components[x], n.components[x]));
            b.sq_hcomp(SquareId{i}, SquareId{it->second}, SquareId{find_sq(r)});
        }
        auto [tb, te] = by_top.equal_range(m.bottom);
        for (auto it = tb; it != te; ++it) {
            const auto& n = out.squares[it->second];
            Modification r{m.top, n.bottom, b.partial().v_comp(VArrowId{m.left}, VArrowId{n.left})->value, b.partial().v_comp(VArrowId{m.right}, VArrowId{n.right})->value,
                           {}};
            for (std::size_t x = 0; x < m.components.size(); ++x)
                r.components.push_back(*d.sq_vcomp(m.components[x], n.components[x]));
            b.sq_vcomp(SquareId{i}, SquareId{it->second}, SquareId{find_sq(r)});
        }
    }
    out.category = std::move(b).build();
    return out;
}

FunctorDoubleCategory vertical_cotensor(const FinTwoCategory& x, const FinDoubleCategory& d, std::uint64_t budget)
{
    return dbl_fun(embed_2cat(x, Direction::vertical), d, budget);
}

FunctorDoubleCategory fun_lax(const FinTwoCategory& x, const FinTwoCategory& y, std::uint64_t budget)
{
    if (!y.locally_posetal())
        throw InvalidInput("fun_lax needs a locally posetal target");
    return vertical_cotensor(x, squares_dblcat(y), budget);
}

std::string describe_functor(const FinDoubleCategory& c, const FinDoubleCategory& d, const DblFunctor& f)
{
    std::string out;
    auto add = [&](const std::string& from, const std::string& to) {
        out += (out.empty() ? "" : ", ") + from + "->" + to;
    };
    for (std::uint32_t x = 0; x < c.object_count(); ++x)
        add(c.object_name(ObjectId{x}), d.object_name(f.objects[x]));
    for (std::uint32_t a = 0; a < c.h_arrow_count(); ++a)
        if (!c.is_identity(HArrowId{a}))
            add(c.h_arrow(HArrowId{a}).name, d.h_arrow(f.h_arrows[a]).name);
    for (std::uint32_t a = 0; a < c.v_arrow_count(); ++a)
        if (!c.is_identity(VArrowId{a}))
            add(c.v_arrow(VArrowId{a}).name, d.v_arrow(f.v_arrows[a]).name);
    return "{" + out + "}";
}

std::vector<TransformationCompanion> transformation_companions(const FunctorArrows& fun, std::uint32_t alpha,
                                                               std::uint64_t budget)
{
    const HTransformation& a = fun.h.at(alpha);
    const std::uint32_t hf = fun.h_identity(a.source), hg = fun.h_identity(a.target);
    const std::uint32_t vf = fun.v_identity(a.source), vg = fun.v_identity(a.target);
    std::vector<TransformationCompanion> out;
    for (std::uint32_t phi = 0; phi < fun.v.size(); ++phi) {
        if (fun.v[phi].source != a.source || fun.v[phi].target != a.target)
            continue;
        auto units = modifications_impl(fun, hf, alpha, vf, phi, budget);
        if (units.empty())
            continue;
        auto counits = modifications_impl(fun, alpha, hg, phi, vg, budget);
        for (const auto& u : units)
            for (const auto& e : counits) {
                bool ok = true;
                for (std::size_t x = 0; ok && x < a.components.size(); ++x)
                    ok = triangle_identities_hold(fun.target, Companionship{Handedness::companion,
                                                                            fun.v[phi].components[x],
                                                                            a.components[x], u.components[x],
                                                                            e.components[x]});
                if (ok)
                    out.push_back({phi, u, e});
            }
    }
    return out;
}

CompanionCharacterization companion_characterization(const FunctorArrows& fun, std::uint32_t alpha,
                                                     std::uint64_t budget)
{
    const FinDoubleCategory &c = fun.source, &d = fun.target;
    const HTransformation& a = fun.h.at(alpha);
    const DblFunctor &F = fun.functors[a.source], &G = fun.functors[a.target];
    CompanionCharacterization out;
    const auto in_fun = transformation_companions(fun, alpha, budget);
    out.is_companion = !in_fun.empty();
    out.all_companionable = true;
    for (SquareId s : a.squares)
        out.all_companionable = out.all_companionable && is_companionable(d, s).holds;

    std::vector<Companionship> data;
    for (HArrowId h : a.components) {
        auto found = find_companion_data_for(d, h);
        if (found.empty())
            return out;
        data.push_back(found.front());
    }
    VTransformation phi{a.source, a.target, {}, {}};
    for (const auto& x : data)
        phi.components.push_back(x.f);
    for (std::uint32_t k = 0; k < c.h_arrow_count(); ++k) {
        const HArrow& arrow = c.h_arrow(HArrowId{k});
        auto upper = d.sq_hcomp(d.identity_square(F.h_arrows[k]), data[arrow.target.value].unit);
        auto lower = d.sq_hcomp(data[arrow.source.value].counit, d.identity_square(G.h_arrows[k]));
        auto column = upper && lower ? d.sq_vcomp(*upper, *lower) : std::nullopt;
        if (!column)
            return out;
        phi.squares.push_back(*column);
    }
    out.witness = fun.find_v(phi);
    if (out.witness)
        for (const auto& x : in_fun)
            out.witness_matches = out.witness_matches || x.v == *out.witness;
    return out;
}

std::optional<std::uint32_t> pointwise_unit_mismatch(const FunctorDoubleCategory& fun)
{
    const FinDoubleCategory &e = fun.category, &d = fun.target;
    auto is_unit = [](const FinDoubleCategory& k, SquareId s) {
        for (const auto& c : find_companions(k, k.square(s).right))
            if (c.unit == s)
                return true;
        return false;
    };
    for (std::uint32_t s = 0; s < e.square_count(); ++s) {
        if (!has_unit_shape(e, SquareId{s}, Handedness::companion))
            continue;
        bool pointwise = true;
        for (SquareId m : fun.squares[s].components)
            pointwise = pointwise && is_unit(d, m);
        if (pointwise != is_unit(e, SquareId{s}))
            return s;
    }
    return std::nullopt;
}

LaxAdjointCharacterization lax_adjoint_characterization(const FunctorDoubleCategory& fun, const Fragment& horizontal,
                                                        const FinTwoCategory& y, std::uint32_t v)
{
    const FinDoubleCategory& c = fun.source;
    const HTransformation& t = fun.h.at(v);
    const DblFunctor &F = fun.functors[t.source], &G = fun.functors[t.target];
    auto cell = [](auto id) { return OneCellId{id.value}; };
    LaxAdjointCharacterization out;
    out.right_adjoint = !find_left_adjoints(horizontal.category, OneCellId{v}).empty();
    const auto conj = find_companion_data_for(fun.category, HArrowId{v}, Handedness::conjoint);
    out.has_conjoint = !conj.empty();

    for (HArrowId component : t.components) {
        auto left = find_left_adjoints(y, cell(component));
        if (left.empty())
            break;
        out.left_components.push_back(left.front().left);
    }
    bool complete = out.left_components.size() == t.components.size();
    bool invertible = complete;
    for (std::uint32_t f = 0; complete && f < c.v_arrow_count(); ++f) {
        const VArrow& arrow = c.v_arrow(VArrowId{f});
        const OneCellId u0 = out.left_components[arrow.source.value], u1 = out.left_components[arrow.target.value];
        const OneCellId v0 = cell(t.components[arrow.source.value]), v1 = cell(t.components[arrow.target.value]);
        const OneCellId ff = cell(F.v_arrows[f]), gf = cell(G.v_arrows[f]);
        // G f ; u1 <= u0 ; v0 ; G f ; u1 <= u0 ; F f ; v1 ; u1 <= u0 ; F f
        const OneCellId mate_source = *y.comp(gf, u1), mate_target = *y.comp(u0, ff);
        const OneCellId middle = *y.comp(*y.comp(u0, v0), mate_source);
        const OneCellId lax = *y.comp(*y.comp(u0, *y.comp(ff, v1)), u1);
        const bool mate = y.leq(mate_source, middle) && y.leq(middle, lax) && y.leq(lax, mate_target);
        if (!mate)
            throw Error("mate of a naturality square does not exist");
        invertible = invertible && y.leq(mate_target, mate_source);
    }
    out.pointwise = complete && invertible;

    if (complete) {
        VTransformation u{t.target, t.source, {}, {}};
        for (OneCellId x : out.left_components)
            u.components.push_back(VArrowId{x.value});
        for (std::uint32_t a = 0; a < c.h_arrow_count(); ++a)
            u.squares.push_back(fun.target.identity_square(u.components[c.h_arrow(HArrowId{a}).source.value]));
        out.left_adjoint = fun.find_v(u);
    }
    out.mates_match = out.left_adjoint.has_value() == out.pointwise;
    if (out.has_conjoint) {
        bool found = false;
        for (const auto& x : conj)
            found = found || (out.left_adjoint && x.f.value == *out.left_adjoint);
        out.mates_match = out.mates_match && found;
    }
    return out;
}

}  // namespace dblcat
