#include "dblcat/double_category.hpp"

#include <algorithm>

namespace dblcat {

namespace {

template <class T>
std::optional<T> lookup(const std::unordered_map<std::uint64_t, T>& table, std::uint32_t a, std::uint32_t b)
{
    auto it = table.find(pair_key(a, b));
    if (it == table.end())
        return std::nullopt;
    return it->second;
}

template <class IdT>
std::optional<IdT> find_in(const std::unordered_map<std::string, std::uint32_t>& index, const std::string& name)
{
    auto it = index.find(name);
    if (it == index.end())
        return std::nullopt;
    return IdT{it->second};
}

}  // namespace

std::size_t FinDoubleCategory::BoundaryHash::operator()(const BoundaryKey& k) const noexcept
{
    std::size_t h = k.top;
    h = h * 1000003u ^ k.bottom;
    h = h * 1000003u ^ k.left;
    h = h * 1000003u ^ k.right;
    return h;
}

std::optional<ObjectId> FinDoubleCategory::find_object(const std::string& n) const { return find_in<ObjectId>(object_index_, n); }
std::optional<HArrowId> FinDoubleCategory::find_h_arrow(const std::string& n) const { return find_in<HArrowId>(h_index_, n); }
std::optional<VArrowId> FinDoubleCategory::find_v_arrow(const std::string& n) const { return find_in<VArrowId>(v_index_, n); }
std::optional<SquareId> FinDoubleCategory::find_square(const std::string& n) const { return find_in<SquareId>(sq_index_, n); }

std::optional<HArrowId> FinDoubleCategory::h_comp(HArrowId a, HArrowId b) const { return lookup(h_comp_, a.value, b.value); }
std::optional<VArrowId> FinDoubleCategory::v_comp(VArrowId a, VArrowId b) const { return lookup(v_comp_, a.value, b.value); }
std::optional<SquareId> FinDoubleCategory::sq_hcomp(SquareId a, SquareId b) const { return lookup(sq_hcomp_, a.value, b.value); }
std::optional<SquareId> FinDoubleCategory::sq_vcomp(SquareId a, SquareId b) const { return lookup(sq_vcomp_, a.value, b.value); }

const std::vector<HArrowId>& FinDoubleCategory::h_arrows_between(ObjectId x, ObjectId y) const
{
    return h_between_.at(x.value * objects_.size() + y.value);
}

const std::vector<VArrowId>& FinDoubleCategory::v_arrows_between(ObjectId x, ObjectId y) const
{
    return v_between_.at(x.value * objects_.size() + y.value);
}

const std::vector<SquareId>& FinDoubleCategory::squares_with_boundary(HArrowId top, HArrowId bottom, VArrowId left,
                                                                      VArrowId right) const
{
    auto it = by_boundary_.find({top.value, bottom.value, left.value, right.value});
    return it == by_boundary_.end() ? no_squares_ : it->second;
}

FinDoubleCategory::Builder::Builder(std::string name) { result_.name_ = std::move(name); }

ObjectId FinDoubleCategory::Builder::object(const std::string& name)
{
    auto& d = result_;
    if (!d.object_index_.emplace(name, static_cast<std::uint32_t>(d.objects_.size())).second)
        throw InvalidInput("duplicate object name '" + name + "'");
    d.objects_.push_back(name);
    d.h_identity_.push_back(HArrowId{kNoId});
    d.v_identity_.push_back(VArrowId{kNoId});
    return ObjectId{static_cast<std::uint32_t>(d.objects_.size() - 1)};
}

HArrowId FinDoubleCategory::Builder::h_arrow(const std::string& name, ObjectId source, ObjectId target)
{
    auto& d = result_;
    if (source.value >= d.objects_.size() || target.value >= d.objects_.size())
        throw InvalidInput("horizontal arrow '" + name + "' has an unknown endpoint");
    if (!d.h_index_.emplace(name, static_cast<std::uint32_t>(d.h_arrows_.size())).second)
        throw InvalidInput("duplicate horizontal arrow name '" + name + "'");
    d.h_arrows_.push_back({name, source, target});
    d.h_identity_square_.push_back(SquareId{kNoId});
    return HArrowId{static_cast<std::uint32_t>(d.h_arrows_.size() - 1)};
}

VArrowId FinDoubleCategory::Builder::v_arrow(const std::string& name, ObjectId source, ObjectId target)
{
    auto& d = result_;
    if (source.value >= d.objects_.size() || target.value >= d.objects_.size())
        throw InvalidInput("vertical arrow '" + name + "' has an unknown endpoint");
    if (!d.v_index_.emplace(name, static_cast<std::uint32_t>(d.v_arrows_.size())).second)
        throw InvalidInput("duplicate vertical arrow name '" + name + "'");
    d.v_arrows_.push_back({name, source, target});
    d.v_identity_square_.push_back(SquareId{kNoId});
    return VArrowId{static_cast<std::uint32_t>(d.v_arrows_.size() - 1)};
}

SquareId FinDoubleCategory::Builder::square(const std::string& name, HArrowId top, HArrowId bottom, VArrowId left,
                                            VArrowId right)
{
    auto& d = result_;
    if (top.value >= d.h_arrows_.size() || bottom.value >= d.h_arrows_.size() || left.value >= d.v_arrows_.size() ||
        right.value >= d.v_arrows_.size())
        throw InvalidInput("square '" + name + "' has an unknown boundary arrow");
    if (!d.sq_index_.emplace(name, static_cast<std::uint32_t>(d.squares_.size())).second)
        throw InvalidInput("duplicate square name '" + name + "'");
    d.squares_.push_back({name, top, bottom, left, right});
    return SquareId{static_cast<std::uint32_t>(d.squares_.size() - 1)};
}

FinDoubleCategory::Builder& FinDoubleCategory::Builder::h_identity(ObjectId x, HArrowId a)
{
    result_.h_identity_.at(x.value) = a;
    return *this;
}

FinDoubleCategory::Builder& FinDoubleCategory::Builder::v_identity(ObjectId x, VArrowId a)
{
    result_.v_identity_.at(x.value) = a;
    return *this;
}

FinDoubleCategory::Builder& FinDoubleCategory::Builder::identity_square(HArrowId a, SquareId s)
{
    result_.h_identity_square_.at(a.value) = s;
    return *this;
}

FinDoubleCategory::Builder& FinDoubleCategory::Builder::identity_square(VArrowId a, SquareId s)
{
    result_.v_identity_square_.at(a.value) = s;
    return *this;
}

FinDoubleCategory::Builder& FinDoubleCategory::Builder::h_comp(HArrowId a, HArrowId b, HArrowId c)
{
    result_.h_comp_[pair_key(a.value, b.value)] = c;
    return *this;
}

FinDoubleCategory::Builder& FinDoubleCategory::Builder::v_comp(VArrowId a, VArrowId b, VArrowId c)
{
    result_.v_comp_[pair_key(a.value, b.value)] = c;
    return *this;
}

FinDoubleCategory::Builder& FinDoubleCategory::Builder::sq_hcomp(SquareId a, SquareId b, SquareId c)
{
    result_.sq_hcomp_[pair_key(a.value, b.value)] = c;
    return *this;
}

FinDoubleCategory::Builder& FinDoubleCategory::Builder::sq_vcomp(SquareId a, SquareId b, SquareId c)
{
    result_.sq_vcomp_[pair_key(a.value, b.value)] = c;
    return *this;
}

FinDoubleCategory::Builder& FinDoubleCategory::Builder::unit_entries()
{
    auto& d = result_;
    for (std::uint32_t a = 0; a < d.h_arrows_.size(); ++a) {
        const HArrow& h = d.h_arrows_[a];
        h_comp(d.h_identity_.at(h.source.value), HArrowId{a}, HArrowId{a});
        h_comp(HArrowId{a}, d.h_identity_.at(h.target.value), HArrowId{a});
    }
    for (std::uint32_t a = 0; a < d.v_arrows_.size(); ++a) {
        const VArrow& v = d.v_arrows_[a];
        v_comp(d.v_identity_.at(v.source.value), VArrowId{a}, VArrowId{a});
        v_comp(VArrowId{a}, d.v_identity_.at(v.target.value), VArrowId{a});
    }
    for (std::uint32_t s = 0; s < d.squares_.size(); ++s) {
        const Square& q = d.squares_[s];
        sq_hcomp(d.v_identity_square_.at(q.left.value), SquareId{s}, SquareId{s});
        sq_hcomp(SquareId{s}, d.v_identity_square_.at(q.right.value), SquareId{s});
        sq_vcomp(d.h_identity_square_.at(q.top.value), SquareId{s}, SquareId{s});
        sq_vcomp(SquareId{s}, d.h_identity_square_.at(q.bottom.value), SquareId{s});
    }
    return *this;
}

FinDoubleCategory FinDoubleCategory::Builder::build() &&
{
    auto& d = result_;
    for (std::size_t x = 0; x < d.objects_.size(); ++x) {
        if (d.h_identity_[x].value >= d.h_arrows_.size())
            throw InvalidInput("object '" + d.objects_[x] + "' has no horizontal identity");
        if (d.v_identity_[x].value >= d.v_arrows_.size())
            throw InvalidInput("object '" + d.objects_[x] + "' has no vertical identity");
    }
    for (std::size_t a = 0; a < d.h_arrows_.size(); ++a)
        if (d.h_identity_square_[a].value >= d.squares_.size())
            throw InvalidInput("horizontal arrow '" + d.h_arrows_[a].name + "' has no identity square");
    for (std::size_t a = 0; a < d.v_arrows_.size(); ++a)
        if (d.v_identity_square_[a].value >= d.squares_.size())
            throw InvalidInput("vertical arrow '" + d.v_arrows_[a].name + "' has no identity square");
    auto check_range = [](const auto& table, std::size_t n, const char* what) {
        for (const auto& [key, v] : table)
            if ((key >> 32) >= n || (key & 0xffffffffULL) >= n || v.value >= n)
                throw InvalidInput(std::string(what) + " table refers to an unknown cell");
    };
    check_range(d.h_comp_, d.h_arrows_.size(), "horizontal composition");
    check_range(d.v_comp_, d.v_arrows_.size(), "vertical composition");
    check_range(d.sq_hcomp_, d.squares_.size(), "horizontal square composition");
    check_range(d.sq_vcomp_, d.squares_.size(), "vertical square composition");

    const std::size_t no = d.objects_.size();
    d.h_between_.assign(no * no, {});
    d.v_between_.assign(no * no, {});
    for (std::uint32_t a = 0; a < d.h_arrows_.size(); ++a)
        d.h_between_[d.h_arrows_[a].source.value * no + d.h_arrows_[a].target.value].push_back(HArrowId{a});
    for (std::uint32_t a = 0; a < d.v_arrows_.size(); ++a)
        d.v_between_[d.v_arrows_[a].source.value * no + d.v_arrows_[a].target.value].push_back(VArrowId{a});
    d.by_left_.assign(d.v_arrows_.size(), {});
    d.by_top_.assign(d.h_arrows_.size(), {});
    for (std::uint32_t s = 0; s < d.squares_.size(); ++s) {
        const Square& q = d.squares_[s];
        d.by_boundary_[{q.top.value, q.bottom.value, q.left.value, q.right.value}].push_back(SquareId{s});
        d.by_left_[q.left.value].push_back(SquareId{s});
        d.by_top_[q.top.value].push_back(SquareId{s});
    }
    return std::move(result_);
}

namespace {

// Category axioms for one arrow direction. Arrows are given by count and accessors.
template <class IdT, class Source, class Target, class Ident, class Comp, class Name>
std::optional<Violation> check_category(const char* what, std::size_t count, Source source, Target target,
                                        Ident identity, Comp comp, Name name)
{
    auto v = [&](std::string law, std::vector<std::string> w) {
        return Violation{std::string(what) + " " + law, std::move(w), {}};
    };
    for (std::uint32_t a = 0; a < count; ++a) {
        IdT A{a};
        if (comp(identity(source(A)), A) != A || comp(A, identity(target(A))) != A)
            return v("unit law", {name(A)});
        for (std::uint32_t b = 0; b < count; ++b) {
            IdT B{b};
            if (target(A) != source(B))
                continue;
            auto ab = comp(A, B);
            if (!ab)
                return v("composition table not total", {name(A), name(B)});
            if (source(*ab) != source(A) || target(*ab) != target(B))
                return v("composite has wrong endpoints", {name(A), name(B)});
        }
    }
    for (std::uint32_t a = 0; a < count; ++a)
        for (std::uint32_t b = 0; b < count; ++b) {
            auto ab = comp(IdT{a}, IdT{b});
            if (!ab)
                continue;
            for (std::uint32_t c = 0; c < count; ++c) {
                auto bc = comp(IdT{b}, IdT{c});
                if (bc && comp(*ab, IdT{c}) != comp(IdT{a}, *bc))
                    return v("associativity", {name(IdT{a}), name(IdT{b}), name(IdT{c})});
            }
        }
    return std::nullopt;
}

}  // namespace

ValidationReport check_axioms(const FinDoubleCategory& d)
{
    ValidationReport report;
    auto fail = [&](std::string law, std::vector<std::string> witnesses, std::string detail = {}) {
        report.violations.push_back({std::move(law), std::move(witnesses), std::move(detail)});
        return report;
    };
    auto sq = [&](SquareId s) -> const Square& { return d.square(s); };
    auto sname = [&](SquareId s) { return d.square(s).name; };
    const auto no = static_cast<std::uint32_t>(d.object_count());
    const auto ns = static_cast<std::uint32_t>(d.square_count());

    for (std::uint32_t x = 0; x < no; ++x) {
        ObjectId X{x};
        const HArrow& h = d.h_arrow(d.h_identity(X));
        const VArrow& v = d.v_arrow(d.v_identity(X));
        if (h.source != X || h.target != X || v.source != X || v.target != X)
            return fail("identity arrow endpoints", {d.object_name(X)});
    }
    for (std::uint32_t s = 0; s < ns; ++s) {
        const Square& q = sq(SquareId{s});
        const auto &t = d.h_arrow(q.top), &b = d.h_arrow(q.bottom);
        const auto &l = d.v_arrow(q.left), &r = d.v_arrow(q.right);
        if (t.source != l.source || t.target != r.source || b.source != l.target || b.target != r.target)
            return fail("square boundary does not close", {q.name});
    }
    for (std::uint32_t a = 0; a < d.h_arrow_count(); ++a) {
        HArrowId A{a};
        const Square& q = sq(d.identity_square(A));
        const auto& h = d.h_arrow(A);
        if (q.top != A || q.bottom != A || q.left != d.v_identity(h.source) || q.right != d.v_identity(h.target))
            return fail("identity square boundary", {h.name});
    }
    for (std::uint32_t a = 0; a < d.v_arrow_count(); ++a) {
        VArrowId A{a};
        const Square& q = sq(d.identity_square(A));
        const auto& v = d.v_arrow(A);
        if (q.left != A || q.right != A || q.top != d.h_identity(v.source) || q.bottom != d.h_identity(v.target))
            return fail("identity square boundary", {v.name});
    }
    for (std::uint32_t x = 0; x < no; ++x)
        if (d.identity_square(d.h_identity(ObjectId{x})) != d.identity_square(d.v_identity(ObjectId{x})))
            return fail("identity squares on an object differ", {d.object_name(ObjectId{x})});

    if (auto v = check_category<HArrowId>(
            "horizontal", d.h_arrow_count(), [&](HArrowId a) { return d.h_arrow(a).source; },
            [&](HArrowId a) { return d.h_arrow(a).target; }, [&](ObjectId x) { return d.h_identity(x); },
            [&](HArrowId a, HArrowId b) { return d.h_comp(a, b); }, [&](HArrowId a) { return d.h_arrow(a).name; })) {
        report.violations.push_back(*v);
        return report;
    }
    if (auto v = check_category<VArrowId>(
            "vertical", d.v_arrow_count(), [&](VArrowId a) { return d.v_arrow(a).source; },
            [&](VArrowId a) { return d.v_arrow(a).target; }, [&](ObjectId x) { return d.v_identity(x); },
            [&](VArrowId a, VArrowId b) { return d.v_comp(a, b); }, [&](VArrowId a) { return d.v_arrow(a).name; })) {
        report.violations.push_back(*v);
        return report;
    }

    // horizontal square composition, along the shared vertical edge
    for (std::uint32_t a = 0; a < ns; ++a) {
        const Square& A = sq(SquareId{a});
        for (SquareId b : d.squares_with_left(A.right)) {
            auto c = d.sq_hcomp(SquareId{a}, b);
            if (!c)
                return fail("horizontal square composition table not total", {A.name, sname(b)});
            const Square &B = sq(b), &C = sq(*c);
            if (C.left != A.left || C.right != B.right || std::optional(C.top) != d.h_comp(A.top, B.top) ||
                std::optional(C.bottom) != d.h_comp(A.bottom, B.bottom))
                return fail("horizontal square composite has wrong boundary", {A.name, B.name});
        }
        if (d.sq_hcomp(d.identity_square(A.left), SquareId{a}) != SquareId{a} ||
            d.sq_hcomp(SquareId{a}, d.identity_square(A.right)) != SquareId{a})
            return fail("horizontal square unit law", {A.name});
    }
    for (std::uint32_t a = 0; a < ns; ++a) {
        const Square& A = sq(SquareId{a});
        for (SquareId b : d.squares_with_top(A.bottom)) {
            auto c = d.sq_vcomp(SquareId{a}, b);
            if (!c)
                return fail("vertical square composition table not total", {A.name, sname(b)});
            const Square &B = sq(b), &C = sq(*c);
            if (C.top != A.top || C.bottom != B.bottom || std::optional(C.left) != d.v_comp(A.left, B.left) ||
                std::optional(C.right) != d.v_comp(A.right, B.right))
                return fail("vertical square composite has wrong boundary", {A.name, B.name});
        }
        if (d.sq_vcomp(d.identity_square(A.top), SquareId{a}) != SquareId{a} ||
            d.sq_vcomp(SquareId{a}, d.identity_square(A.bottom)) != SquareId{a})
            return fail("vertical square unit law", {A.name});
    }
    for (std::uint32_t a = 0; a < d.h_arrow_count(); ++a)
        for (std::uint32_t b = 0; b < d.h_arrow_count(); ++b) {
            auto ab = d.h_comp(HArrowId{a}, HArrowId{b});
            if (ab && d.sq_hcomp(d.identity_square(HArrowId{a}), d.identity_square(HArrowId{b})) !=
                          d.identity_square(*ab))
                return fail("horizontal composite of identity squares",
                            {d.h_arrow(HArrowId{a}).name, d.h_arrow(HArrowId{b}).name});
        }
    for (std::uint32_t a = 0; a < d.v_arrow_count(); ++a)
        for (std::uint32_t b = 0; b < d.v_arrow_count(); ++b) {
            auto ab = d.v_comp(VArrowId{a}, VArrowId{b});
            if (ab && d.sq_vcomp(d.identity_square(VArrowId{a}), d.identity_square(VArrowId{b})) !=
                          d.identity_square(*ab))
                return fail("vertical composite of identity squares",
                            {d.v_arrow(VArrowId{a}).name, d.v_arrow(VArrowId{b}).name});
        }
    for (std::uint32_t a = 0; a < ns; ++a)
        for (SquareId b : d.squares_with_left(sq(SquareId{a}).right)) {
            auto ab = *d.sq_hcomp(SquareId{a}, b);
            for (SquareId c : d.squares_with_left(sq(b).right))
                if (d.sq_hcomp(ab, c) != d.sq_hcomp(SquareId{a}, *d.sq_hcomp(b, c)))
                    return fail("horizontal square associativity", {sname(SquareId{a}), sname(b), sname(c)});
        }
    for (std::uint32_t a = 0; a < ns; ++a)
        for (SquareId b : d.squares_with_top(sq(SquareId{a}).bottom)) {
            auto ab = *d.sq_vcomp(SquareId{a}, b);
            for (SquareId c : d.squares_with_top(sq(b).bottom))
                if (d.sq_vcomp(ab, c) != d.sq_vcomp(SquareId{a}, *d.sq_vcomp(b, c)))
                    return fail("vertical square associativity", {sname(SquareId{a}), sname(b), sname(c)});
        }
    // interchange for a 2x2 grid  a b / c e
    for (std::uint32_t a = 0; a < ns; ++a) {
        SquareId A{a};
        for (SquareId b : d.squares_with_left(sq(A).right))
            for (SquareId c : d.squares_with_top(sq(A).bottom))
                for (SquareId e : d.squares_with_top(sq(b).bottom)) {
                    if (sq(e).left != sq(c).right)
                        continue;
                    auto rows = d.sq_vcomp(*d.sq_hcomp(A, b), *d.sq_hcomp(c, e));
                    auto cols = d.sq_hcomp(*d.sq_vcomp(A, c), *d.sq_vcomp(b, e));
                    if (rows != cols)
                        return fail("interchange", {sname(A), sname(b), sname(c), sname(e)});
                }
    }
    return report;
}

std::pair<SquareId, SquareId> paste_both_ways(const FinDoubleCategory& d,
                                              const std::vector<std::vector<SquareId>>& grid)
{
    if (grid.empty() || grid.front().empty())
        throw InvalidInput("empty grid");
    const std::size_t rows = grid.size(), cols = grid.front().size();
    for (std::size_t i = 0; i < rows; ++i) {
        if (grid[i].size() != cols)
            throw InvalidInput("ragged grid");
        for (std::size_t j = 0; j < cols; ++j) {
            const Square& s = d.square(grid[i][j]);
            if (j + 1 < cols && s.right != d.square(grid[i][j + 1]).left)
                throw InvalidInput("squares " + s.name + " and " + d.square(grid[i][j + 1]).name +
                                   " do not share a vertical edge");
            if (i + 1 < rows && s.bottom != d.square(grid[i + 1][j]).top)
                throw InvalidInput("squares " + s.name + " and " + d.square(grid[i + 1][j]).name +
                                   " do not share a horizontal edge");
        }
    }
    auto need = [](std::optional<SquareId> s) {
        if (!s)
            throw InvalidInput("composition table is not total on the grid");
        return *s;
    };
    std::optional<SquareId> by_rows;
    for (std::size_t i = 0; i < rows; ++i) {
        SquareId row = grid[i][0];
        for (std::size_t j = 1; j < cols; ++j)
            row = need(d.sq_hcomp(row, grid[i][j]));
        by_rows = by_rows ? need(d.sq_vcomp(*by_rows, row)) : row;
    }
    std::optional<SquareId> by_cols;
    for (std::size_t j = 0; j < cols; ++j) {
        SquareId col = grid[0][j];
        for (std::size_t i = 1; i < rows; ++i)
            col = need(d.sq_vcomp(col, grid[i][j]));
        by_cols = by_cols ? need(d.sq_hcomp(*by_cols, col)) : col;
    }
    return {*by_rows, *by_cols};
}

SquareId paste_grid(const FinDoubleCategory& d, const std::vector<std::vector<SquareId>>& grid)
{
    auto [r, c] = paste_both_ways(d, grid);
    if (r != c)
        throw Error("row-first pasting gives " + d.square(r).name + " but column-first gives " + d.square(c).name);
    return r;
}

bool has_unit_shape(const FinDoubleCategory& d, SquareId s, Handedness kind)
{
    const Square& q = d.square(s);
    if (!d.is_identity(q.top))
        return false;
    return kind == Handedness::companion ? d.is_identity(q.left) : d.is_identity(q.right);
}

bool triangle_identities_hold(const FinDoubleCategory& d, const Companionship& c)
{
    if (c.kind == Handedness::companion)
        return d.sq_vcomp(c.unit, c.counit) == d.identity_square(c.f) &&
               d.sq_hcomp(c.unit, c.counit) == d.identity_square(c.h);
    return d.sq_vcomp(c.unit, c.counit) == d.identity_square(c.f) &&
           d.sq_hcomp(c.counit, c.unit) == d.identity_square(c.h);
}

namespace {

void collect(const FinDoubleCategory& d, VArrowId f, HArrowId h, Handedness kind, std::vector<Companionship>& out)
{
    const VArrow& v = d.v_arrow(f);
    const HArrowId hx = d.h_identity(v.source), hy = d.h_identity(v.target);
    const VArrowId vx = d.v_identity(v.source), vy = d.v_identity(v.target);
    const bool comp = kind == Handedness::companion;
    const auto& units = comp ? d.squares_with_boundary(hx, h, vx, f) : d.squares_with_boundary(hx, h, f, vx);
    const auto& counits = comp ? d.squares_with_boundary(h, hy, f, vy) : d.squares_with_boundary(h, hy, vy, f);
    for (SquareId u : units)
        for (SquareId e : counits) {
            Companionship c{kind, f, h, u, e};
            if (triangle_identities_hold(d, c))
                out.push_back(c);
        }
}

}  // namespace

std::vector<Companionship> find_companions(const FinDoubleCategory& d, VArrowId f, Handedness kind)
{
    std::vector<Companionship> out;
    const VArrow& v = d.v_arrow(f);
    const auto& hs = kind == Handedness::companion ? d.h_arrows_between(v.source, v.target)
                                                   : d.h_arrows_between(v.target, v.source);
    for (HArrowId h : hs)
        collect(d, f, h, kind, out);
    return out;
}

std::vector<Companionship> find_companion_data_for(const FinDoubleCategory& d, HArrowId h, Handedness kind)
{
    std::vector<Companionship> out;
    const HArrow& a = d.h_arrow(h);
    const auto& fs = kind == Handedness::companion ? d.v_arrows_between(a.source, a.target)
                                                   : d.v_arrows_between(a.target, a.source);
    for (VArrowId f : fs)
        collect(d, f, h, kind, out);
    return out;
}

std::optional<SquareId> vertical_inverse(const FinDoubleCategory& d, SquareId s)
{
    const Square& q = d.square(s);
    if (!d.is_identity(q.top) || !d.is_identity(q.bottom))
        return std::nullopt;
    for (SquareId t : d.squares_with_boundary(q.top, q.bottom, q.right, q.left))
        if (d.sq_hcomp(s, t) == d.identity_square(q.left) && d.sq_hcomp(t, s) == d.identity_square(q.right))
            return t;
    return std::nullopt;
}

std::optional<SquareId> horizontal_inverse(const FinDoubleCategory& d, SquareId s)
{
    const Square& q = d.square(s);
    if (!d.is_identity(q.left) || !d.is_identity(q.right))
        return std::nullopt;
    for (SquareId t : d.squares_with_boundary(q.bottom, q.top, q.left, q.right))
        if (d.sq_vcomp(s, t) == d.identity_square(q.top) && d.sq_vcomp(t, s) == d.identity_square(q.bottom))
            return t;
    return std::nullopt;
}

CompanionableResult is_companionable(const FinDoubleCategory& d, SquareId sq, Handedness kind)
{
    CompanionableResult result;
    const Square& q = d.square(sq);
    auto tops = find_companion_data_for(d, q.top, kind);
    auto bottoms = find_companion_data_for(d, q.bottom, kind);
    for (const auto& t : tops)
        for (const auto& b : bottoms) {
            auto upper = d.sq_vcomp(t.unit, sq);
            auto column = upper ? d.sq_vcomp(*upper, b.counit) : std::nullopt;
            if (!column)
                continue;
            if (!result.column) {
                result.top = t;
                result.bottom = b;
                result.column = column;
            }
            if (auto inv = vertical_inverse(d, *column)) {
                result = {true, t, b, column, inv};
                return result;
            }
        }
    return result;
}

bool companionable_alt_check(const FinDoubleCategory& d, SquareId sq, Handedness kind)
{
    if (auto report = check_axioms(d); !report)
        throw InvalidInput("double category fails its axioms: " + report.summary());
    const Square& q = d.square(sq);
    auto tops = find_companion_data_for(d, q.top, kind);
    auto bottoms = find_companion_data_for(d, q.bottom, kind);
    const VArrowId side = kind == Handedness::companion ? q.left : q.right;
    for (const auto& t : tops)
        for (const auto& b : bottoms) {
            auto lhs = d.sq_vcomp(t.unit, sq);
            auto rhs = d.sq_vcomp(d.identity_square(side), b.unit);
            if (lhs && rhs && *lhs == *rhs)
                return true;
        }
    return false;
}

std::pair<SquareId, SquareId> adjunction_from_comp_conj(const FinDoubleCategory& d, const Companionship& comp,
                                                        const Companionship& conj)
{
    if (comp.kind != Handedness::companion || conj.kind != Handedness::conjoint || comp.f != conj.f)
        throw InvalidInput("expected a companionship and a conjunction on the same vertical arrow");
    if (!triangle_identities_hold(d, comp) || !triangle_identities_hold(d, conj))
        throw InvalidInput("triangle identities fail for the given data");
    auto unit = d.sq_hcomp(comp.unit, conj.unit);
    auto counit = d.sq_hcomp(conj.counit, comp.counit);
    if (!unit || !counit)
        throw InvalidInput("composition table is not total on the given data");
    return {*unit, *counit};
}

Fragment fragment(const FinDoubleCategory& d, Direction dir)
{
    const bool hor = dir == Direction::horizontal;
    FinTwoCategory::Builder b(d.name() + (hor ? ".hor" : ".vert"));
    for (std::uint32_t x = 0; x < d.object_count(); ++x)
        b.object(d.object_name(ObjectId{x}));
    const std::size_t n1 = hor ? d.h_arrow_count() : d.v_arrow_count();
    for (std::uint32_t a = 0; a < n1; ++a) {
        if (hor) {
            const auto& h = d.h_arrow(HArrowId{a});
            b.one_cell(h.name, h.source, h.target);
        } else {
            const auto& v = d.v_arrow(VArrowId{a});
            b.one_cell(v.name, v.source, v.target);
        }
    }
    Fragment out;
    out.cell_of.assign(d.square_count(), kNoId);
    for (std::uint32_t s = 0; s < d.square_count(); ++s) {
        const Square& q = d.square(SquareId{s});
        TwoCellId id;
        if (hor) {
            if (!d.is_identity(q.left) || !d.is_identity(q.right))
                continue;
            id = b.two_cell(q.name, OneCellId{q.top.value}, OneCellId{q.bottom.value});
        } else {
            if (!d.is_identity(q.top) || !d.is_identity(q.bottom))
                continue;
            id = b.two_cell(q.name, OneCellId{q.right.value}, OneCellId{q.left.value});
        }
        out.cell_of[s] = id.value;
        out.squares.push_back(SquareId{s});
    }
    for (std::uint32_t x = 0; x < d.object_count(); ++x)
        b.identity(ObjectId{x}, OneCellId{hor ? d.h_identity(ObjectId{x}).value : d.v_identity(ObjectId{x}).value});
    for (std::uint32_t a = 0; a < n1; ++a) {
        SquareId s = hor ? d.identity_square(HArrowId{a}) : d.identity_square(VArrowId{a});
        if (out.cell_of[s.value] == kNoId)
            throw InvalidInput("identity square of an arrow is not in the fragment");
        b.identity2(OneCellId{a}, TwoCellId{out.cell_of[s.value]});
        for (std::uint32_t c = 0; c < n1; ++c) {
            std::optional<std::uint32_t> r;
            if (hor) {
                if (auto x = d.h_comp(HArrowId{a}, HArrowId{c}))
                    r = x->value;
            } else if (auto x = d.v_comp(VArrowId{a}, VArrowId{c})) {
                r = x->value;
            }
            if (r)
                b.comp(OneCellId{a}, OneCellId{c}, OneCellId{*r});
        }
    }
    auto add = [&](auto&& setter, SquareId x, SquareId y, std::optional<SquareId> r) {
        if (r && out.cell_of[r->value] != kNoId)
            setter(TwoCellId{out.cell_of[x.value]}, TwoCellId{out.cell_of[y.value]}, TwoCellId{out.cell_of[r->value]});
    };
    auto vset = [&](TwoCellId x, TwoCellId y, TwoCellId r) { b.vcomp(x, y, r); };
    auto hset = [&](TwoCellId x, TwoCellId y, TwoCellId r) { b.hcomp(x, y, r); };
    for (SquareId x : out.squares)
        for (SquareId y : out.squares) {
            if (hor) {
                add(vset, x, y, d.sq_vcomp(x, y));
                add(hset, x, y, d.sq_hcomp(x, y));
            } else {
                // 2-cell x then y is the square y placed left of x
                add(vset, x, y, d.sq_hcomp(y, x));
                add(hset, x, y, d.sq_vcomp(x, y));
            }
        }
    out.category = std::move(b).build();
    return out;
}

FinDoubleCategory horizontal_opposite(const FinDoubleCategory& d)
{
    FinDoubleCategory::Builder b(d.name() + ".hop");
    const auto n0 = static_cast<std::uint32_t>(d.object_count());
    const auto nh = static_cast<std::uint32_t>(d.h_arrow_count());
    const auto nv = static_cast<std::uint32_t>(d.v_arrow_count());
    const auto ns = static_cast<std::uint32_t>(d.square_count());
    for (std::uint32_t o = 0; o < n0; ++o)
        b.object(d.object_name(ObjectId{o}));
    for (std::uint32_t a = 0; a < nh; ++a) {
        const HArrow& h = d.h_arrow(HArrowId{a});
        b.h_arrow(h.name, h.target, h.source);
    }
    for (std::uint32_t a = 0; a < nv; ++a) {
        const VArrow& v = d.v_arrow(VArrowId{a});
        b.v_arrow(v.name, v.source, v.target);
    }
    for (std::uint32_t s = 0; s < ns; ++s) {
        const Square& q = d.square(SquareId{s});
        b.square(q.name, q.top, q.bottom, q.right, q.left);
    }
    for (std::uint32_t o = 0; o < n0; ++o)
        b.h_identity(ObjectId{o}, d.h_identity(ObjectId{o})).v_identity(ObjectId{o}, d.v_identity(ObjectId{o}));
    for (std::uint32_t a = 0; a < nh; ++a) {
        b.identity_square(HArrowId{a}, d.identity_square(HArrowId{a}));
        for (std::uint32_t c = 0; c < nh; ++c)
            if (auto r = d.h_comp(HArrowId{a}, HArrowId{c}))
                b.h_comp(HArrowId{c}, HArrowId{a}, *r);
    }
    for (std::uint32_t a = 0; a < nv; ++a) {
        b.identity_square(VArrowId{a}, d.identity_square(VArrowId{a}));
        for (std::uint32_t c = 0; c < nv; ++c)
            if (auto r = d.v_comp(VArrowId{a}, VArrowId{c}))
                b.v_comp(VArrowId{a}, VArrowId{c}, *r);
    }
    for (std::uint32_t s = 0; s < ns; ++s)
        for (std::uint32_t t = 0; t < ns; ++t) {
            if (auto r = d.sq_hcomp(SquareId{s}, SquareId{t}))
                b.sq_hcomp(SquareId{t}, SquareId{s}, *r);
            if (auto r = d.sq_vcomp(SquareId{s}, SquareId{t}))
                b.sq_vcomp(SquareId{s}, SquareId{t}, *r);
        }
    return std::move(b).build();
}

FinDoubleCategory transpose(const FinDoubleCategory& d)
{
    FinDoubleCategory::Builder b(d.name() + ".t");
    const auto n0 = static_cast<std::uint32_t>(d.object_count());
    const auto nh = static_cast<std::uint32_t>(d.h_arrow_count());
    const auto nv = static_cast<std::uint32_t>(d.v_arrow_count());
    const auto ns = static_cast<std::uint32_t>(d.square_count());
    for (std::uint32_t o = 0; o < n0; ++o)
        b.object(d.object_name(ObjectId{o}));
    for (std::uint32_t a = 0; a < nv; ++a) {
        const VArrow& v = d.v_arrow(VArrowId{a});
        b.h_arrow(v.name, v.source, v.target);
    }
    for (std::uint32_t a = 0; a < nh; ++a) {
        const HArrow& h = d.h_arrow(HArrowId{a});
        b.v_arrow(h.name, h.source, h.target);
    }
    for (std::uint32_t s = 0; s < ns; ++s) {
        const Square& q = d.square(SquareId{s});
        b.square(q.name, HArrowId{q.left.value}, HArrowId{q.right.value}, VArrowId{q.top.value},
                 VArrowId{q.bottom.value});
    }
    for (std::uint32_t o = 0; o < n0; ++o)
        b.h_identity(ObjectId{o}, HArrowId{d.v_identity(ObjectId{o}).value})
            .v_identity(ObjectId{o}, VArrowId{d.h_identity(ObjectId{o}).value});
    for (std::uint32_t a = 0; a < nv; ++a) {
        b.identity_square(HArrowId{a}, d.identity_square(VArrowId{a}));
        for (std::uint32_t c = 0; c < nv; ++c)
            if (auto r = d.v_comp(VArrowId{a}, VArrowId{c}))
                b.h_comp(HArrowId{a}, HArrowId{c}, HArrowId{r->value});
    }
    for (std::uint32_t a = 0; a < nh; ++a) {
        b.identity_square(VArrowId{a}, d.identity_square(HArrowId{a}));
        for (std::uint32_t c = 0; c < nh; ++c)
            if (auto r = d.h_comp(HArrowId{a}, HArrowId{c}))
                b.v_comp(VArrowId{a}, VArrowId{c}, VArrowId{r->value});
    }
    for (std::uint32_t s = 0; s < ns; ++s) {
        const Square& q = d.square(SquareId{s});
        for (SquareId t : d.squares_with_top(q.bottom))
            if (auto r = d.sq_vcomp(SquareId{s}, t))
                b.sq_hcomp(SquareId{s}, t, *r);
        for (SquareId t : d.squares_with_left(q.right))
            if (auto r = d.sq_hcomp(SquareId{s}, t))
                b.sq_vcomp(SquareId{s}, t, *r);
    }
    return std::move(b).build();
}

DblFunctor transpose(const DblFunctor& f)
{
    DblFunctor out;
    out.objects = f.objects;
    for (VArrowId a : f.v_arrows)
        out.h_arrows.push_back(HArrowId{a.value});
    for (HArrowId a : f.h_arrows)
        out.v_arrows.push_back(VArrowId{a.value});
    out.squares = f.squares;
    return out;
}

FinDoubleCategory embed_2cat(const FinTwoCategory& x, Direction dir)
{
    const bool hor = dir == Direction::horizontal;
    FinDoubleCategory::Builder b(x.name() + (hor ? ".h" : ".v"));
    const auto n0 = static_cast<std::uint32_t>(x.object_count());
    const auto n1 = static_cast<std::uint32_t>(x.one_cell_count());
    const auto n2 = static_cast<std::uint32_t>(x.two_cell_count());
    for (std::uint32_t o = 0; o < n0; ++o)
        b.object(x.object_name(ObjectId{o}));
    // Full direction: ids equal 1-cell ids. Trivial direction: one identity per object.
    for (std::uint32_t p = 0; p < n1; ++p) {
        const auto& c = x.one_cell(OneCellId{p});
        if (hor)
            b.h_arrow(c.name, c.source, c.target);
        else
            b.v_arrow(c.name, c.source, c.target);
    }
    for (std::uint32_t o = 0; o < n0; ++o) {
        const auto& name = x.one_cell(x.identity(ObjectId{o})).name;
        if (hor)
            b.v_arrow(name, ObjectId{o}, ObjectId{o});
        else
            b.h_arrow(name, ObjectId{o}, ObjectId{o});
    }
    for (std::uint32_t o = 0; o < n0; ++o) {
        const std::uint32_t full = x.identity(ObjectId{o}).value;
        b.h_identity(ObjectId{o}, HArrowId{hor ? full : o});
        b.v_identity(ObjectId{o}, VArrowId{hor ? o : full});
    }
    for (std::uint32_t a = 0; a < n2; ++a) {
        const auto& c = x.two_cell(TwoCellId{a});
        const auto& p = x.one_cell(c.source);
        if (hor)
            b.square(c.name, HArrowId{c.source.value}, HArrowId{c.target.value}, VArrowId{p.source.value},
                     VArrowId{p.target.value});
        else
            b.square(c.name, HArrowId{p.source.value}, HArrowId{p.target.value}, VArrowId{c.target.value},
                     VArrowId{c.source.value});
    }
    for (std::uint32_t p = 0; p < n1; ++p) {
        SquareId s{x.identity2(OneCellId{p}).value};
        if (hor)
            b.identity_square(HArrowId{p}, s);
        else
            b.identity_square(VArrowId{p}, s);
        for (std::uint32_t q = 0; q < n1; ++q)
            if (auto r = x.comp(OneCellId{p}, OneCellId{q})) {
                if (hor)
                    b.h_comp(HArrowId{p}, HArrowId{q}, HArrowId{r->value});
                else
                    b.v_comp(VArrowId{p}, VArrowId{q}, VArrowId{r->value});
            }
    }
    for (std::uint32_t o = 0; o < n0; ++o) {
        SquareId s{x.identity2(x.identity(ObjectId{o})).value};
        if (hor) {
            b.identity_square(VArrowId{o}, s);
            b.v_comp(VArrowId{o}, VArrowId{o}, VArrowId{o});
        } else {
            b.identity_square(HArrowId{o}, s);
            b.h_comp(HArrowId{o}, HArrowId{o}, HArrowId{o});
        }
    }
    for (std::uint32_t a = 0; a < n2; ++a)
        for (std::uint32_t c = 0; c < n2; ++c) {
            TwoCellId A{a}, C{c};
            if (hor) {
                if (auto r = x.vcomp(A, C))
                    b.sq_vcomp(SquareId{a}, SquareId{c}, SquareId{r->value});
                if (auto r = x.hcomp(A, C))
                    b.sq_hcomp(SquareId{a}, SquareId{c}, SquareId{r->value});
            } else {
                // square a left of square c is the 2-cell c then a
                if (auto r = x.vcomp(C, A))
                    b.sq_hcomp(SquareId{a}, SquareId{c}, SquareId{r->value});
                if (auto r = x.hcomp(A, C))
                    b.sq_vcomp(SquareId{a}, SquareId{c}, SquareId{r->value});
            }
        }
    return std::move(b).build();
}

std::optional<std::string> check_dbl_functor(const FinDoubleCategory& a, const FinDoubleCategory& b,
                                             const DblFunctor& f)
{
    if (f.objects.size() != a.object_count() || f.h_arrows.size() != a.h_arrow_count() ||
        f.v_arrows.size() != a.v_arrow_count() || f.squares.size() != a.square_count())
        return "assignment sizes do not match the source";
    for (std::uint32_t x = 0; x < a.object_count(); ++x) {
        if (f.h_arrows[a.h_identity(ObjectId{x}).value] != b.h_identity(f.objects[x]) ||
            f.v_arrows[a.v_identity(ObjectId{x}).value] != b.v_identity(f.objects[x]))
            return "identity arrows of " + a.object_name(ObjectId{x}) + " not preserved";
    }
    for (std::uint32_t p = 0; p < a.h_arrow_count(); ++p) {
        const auto &s = a.h_arrow(HArrowId{p}), &t = b.h_arrow(f.h_arrows[p]);
        if (t.source != f.objects[s.source.value] || t.target != f.objects[s.target.value])
            return "endpoints of " + s.name + " not preserved";
        if (f.squares[a.identity_square(HArrowId{p}).value] != b.identity_square(f.h_arrows[p]))
            return "identity square of " + s.name + " not preserved";
        for (std::uint32_t q = 0; q < a.h_arrow_count(); ++q)
            if (auto r = a.h_comp(HArrowId{p}, HArrowId{q}); r && b.h_comp(f.h_arrows[p], f.h_arrows[q]) != f.h_arrows[r->value])
                return "composite " + s.name + ";" + a.h_arrow(HArrowId{q}).name + " not preserved";
    }
    for (std::uint32_t p = 0; p < a.v_arrow_count(); ++p) {
        const auto &s = a.v_arrow(VArrowId{p}), &t = b.v_arrow(f.v_arrows[p]);
        if (t.source != f.objects[s.source.value] || t.target != f.objects[s.target.value])
            return "endpoints of " + s.name + " not preserved";
        if (f.squares[a.identity_square(VArrowId{p}).value] != b.identity_square(f.v_arrows[p]))
            return "identity square of " + s.name + " not preserved";
        for (std::uint32_t q = 0; q < a.v_arrow_count(); ++q)
            if (auto r = a.v_comp(VArrowId{p}, VArrowId{q}); r && b.v_comp(f.v_arrows[p], f.v_arrows[q]) != f.v_arrows[r->value])
                return "composite " + s.name + "/" + a.v_arrow(VArrowId{q}).name + " not preserved";
    }
    for (std::uint32_t s = 0; s < a.square_count(); ++s) {
        const Square &p = a.square(SquareId{s}), &q = b.square(f.squares[s]);
        if (q.top != f.h_arrows[p.top.value] || q.bottom != f.h_arrows[p.bottom.value] ||
            q.left != f.v_arrows[p.left.value] || q.right != f.v_arrows[p.right.value])
            return "boundary of square " + p.name + " not preserved";
        for (SquareId t : a.squares_with_left(p.right))
            if (b.sq_hcomp(f.squares[s], f.squares[t.value]) != f.squares[a.sq_hcomp(SquareId{s}, t)->value])
                return "horizontal composite of " + p.name + " and " + a.square(t).name + " not preserved";
        for (SquareId t : a.squares_with_top(p.bottom))
            if (b.sq_vcomp(f.squares[s], f.squares[t.value]) != f.squares[a.sq_vcomp(SquareId{s}, t)->value])
                return "vertical composite of " + p.name + " and " + a.square(t).name + " not preserved";
    }
    return std::nullopt;
}

bool is_isomorphism(const FinDoubleCategory& a, const FinDoubleCategory& b, const DblFunctor& f)
{
    if (check_dbl_functor(a, b, f))
        return false;
    auto bijective = [](auto values, std::size_t n) {
        if (values.size() != n)
            return false;
        std::sort(values.begin(), values.end());
        return std::adjacent_find(values.begin(), values.end()) == values.end();
    };
    return bijective(f.objects, b.object_count()) && bijective(f.h_arrows, b.h_arrow_count()) &&
           bijective(f.v_arrows, b.v_arrow_count()) && bijective(f.squares, b.square_count());
}

DblFunctor identity_functor(const FinDoubleCategory& d)
{
    DblFunctor f;
    for (std::uint32_t x = 0; x < d.object_count(); ++x)
        f.objects.push_back(ObjectId{x});
    for (std::uint32_t x = 0; x < d.h_arrow_count(); ++x)
        f.h_arrows.push_back(HArrowId{x});
    for (std::uint32_t x = 0; x < d.v_arrow_count(); ++x)
        f.v_arrows.push_back(VArrowId{x});
    for (std::uint32_t x = 0; x < d.square_count(); ++x)
        f.squares.push_back(SquareId{x});
    return f;
}

}  // namespace dblcat
