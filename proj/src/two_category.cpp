#include "dblcat/two_category.hpp"

#include <algorithm>
#include <set>

namespace dblcat {

std::string ValidationReport::summary() const
{
    if (violations.empty())
        return "valid";
    const Violation& v = violations.front();
    std::string s = v.law;
    if (!v.witnesses.empty()) {
        s += " [";
        for (std::size_t i = 0; i < v.witnesses.size(); ++i)
            s += (i ? ", " : "") + v.witnesses[i];
        s += "]";
    }
    if (!v.detail.empty())
        s += ": " + v.detail;
    return s;
}

namespace {

template <class T>
std::optional<T> lookup(const std::unordered_map<std::uint64_t, T>& table, std::uint32_t a, std::uint32_t b)
{
    auto it = table.find(pair_key(a, b));
    if (it == table.end())
        return std::nullopt;
    return it->second;
}

}  // namespace

std::optional<ObjectId> FinTwoCategory::find_object(const std::string& name) const
{
    auto it = object_index_.find(name);
    return it == object_index_.end() ? std::nullopt : std::optional<ObjectId>(ObjectId{it->second});
}

std::optional<OneCellId> FinTwoCategory::find_one_cell(const std::string& name) const
{
    auto it = one_index_.find(name);
    return it == one_index_.end() ? std::nullopt : std::optional<OneCellId>(OneCellId{it->second});
}

std::optional<TwoCellId> FinTwoCategory::find_two_cell(const std::string& name) const
{
    auto it = two_index_.find(name);
    return it == two_index_.end() ? std::nullopt : std::optional<TwoCellId>(TwoCellId{it->second});
}

std::optional<OneCellId> FinTwoCategory::comp(OneCellId p, OneCellId q) const { return lookup(comp_, p.value, q.value); }
std::optional<TwoCellId> FinTwoCategory::vcomp(TwoCellId a, TwoCellId b) const { return lookup(vcomp_, a.value, b.value); }
std::optional<TwoCellId> FinTwoCategory::hcomp(TwoCellId a, TwoCellId b) const { return lookup(hcomp_, a.value, b.value); }

const std::vector<OneCellId>& FinTwoCategory::hom(ObjectId x, ObjectId y) const
{
    return hom_.at(x.value * objects_.size() + y.value);
}

const std::vector<TwoCellId>& FinTwoCategory::cells_between(OneCellId p, OneCellId q) const
{
    auto it = between_.find(pair_key(p.value, q.value));
    return it == between_.end() ? none_ : it->second;
}

std::optional<TwoCellId> FinTwoCategory::inverse(TwoCellId a) const
{
    const TwoCell& c = two_cell(a);
    for (TwoCellId b : cells_between(c.target, c.source))
        if (vcomp(a, b) == identity2(c.source) && vcomp(b, a) == identity2(c.target))
            return b;
    return std::nullopt;
}

FinTwoCategory::Builder::Builder(std::string name) { result_.name_ = std::move(name); }

ObjectId FinTwoCategory::Builder::object(const std::string& name)
{
    if (!result_.object_index_.emplace(name, static_cast<std::uint32_t>(result_.objects_.size())).second)
        throw InvalidInput("duplicate object name '" + name + "'");
    result_.objects_.push_back(name);
    result_.identity_.push_back(OneCellId{kNoId});
    return ObjectId{static_cast<std::uint32_t>(result_.objects_.size() - 1)};
}

OneCellId FinTwoCategory::Builder::one_cell(const std::string& name, ObjectId source, ObjectId target)
{
    if (source.value >= result_.objects_.size() || target.value >= result_.objects_.size())
        throw InvalidInput("1-cell '" + name + "' has an unknown endpoint");
    if (!result_.one_index_.emplace(name, static_cast<std::uint32_t>(result_.one_cells_.size())).second)
        throw InvalidInput("duplicate 1-cell name '" + name + "'");
    result_.one_cells_.push_back({name, source, target});
    result_.identity2_.push_back(TwoCellId{kNoId});
    return OneCellId{static_cast<std::uint32_t>(result_.one_cells_.size() - 1)};
}

TwoCellId FinTwoCategory::Builder::two_cell(const std::string& name, OneCellId source, OneCellId target)
{
    if (source.value >= result_.one_cells_.size() || target.value >= result_.one_cells_.size())
        throw InvalidInput("2-cell '" + name + "' has an unknown boundary");
    if (!result_.two_index_.emplace(name, static_cast<std::uint32_t>(result_.two_cells_.size())).second)
        throw InvalidInput("duplicate 2-cell name '" + name + "'");
    result_.two_cells_.push_back({name, source, target});
    return TwoCellId{static_cast<std::uint32_t>(result_.two_cells_.size() - 1)};
}

FinTwoCategory::Builder& FinTwoCategory::Builder::identity(ObjectId x, OneCellId p)
{
    result_.identity_.at(x.value) = p;
    return *this;
}

FinTwoCategory::Builder& FinTwoCategory::Builder::identity2(OneCellId p, TwoCellId a)
{
    result_.identity2_.at(p.value) = a;
    return *this;
}

FinTwoCategory::Builder& FinTwoCategory::Builder::comp(OneCellId p, OneCellId q, OneCellId r)
{
    result_.comp_[pair_key(p.value, q.value)] = r;
    return *this;
}

FinTwoCategory::Builder& FinTwoCategory::Builder::vcomp(TwoCellId a, TwoCellId b, TwoCellId c)
{
    result_.vcomp_[pair_key(a.value, b.value)] = c;
    return *this;
}

FinTwoCategory::Builder& FinTwoCategory::Builder::hcomp(TwoCellId a, TwoCellId b, TwoCellId c)
{
    result_.hcomp_[pair_key(a.value, b.value)] = c;
    return *this;
}

FinTwoCategory::Builder& FinTwoCategory::Builder::locally_posetal(bool flag)
{
    result_.posetal_ = flag;
    return *this;
}

FinTwoCategory::Builder& FinTwoCategory::Builder::posetal_two_cells(
    const std::vector<std::pair<OneCellId, OneCellId>>& leq)
{
    auto& k = result_;
    const std::size_t n1 = k.one_cells_.size();
    std::vector<std::vector<bool>> rel(n1, std::vector<bool>(n1, false));
    for (std::size_t p = 0; p < n1; ++p)
        rel[p][p] = true;
    for (auto [p, q] : leq) {
        if (k.one_cells_.at(p.value).source != k.one_cells_.at(q.value).source ||
            k.one_cells_.at(p.value).target != k.one_cells_.at(q.value).target)
            throw InvalidInput("order relation between non-parallel 1-cells '" + k.one_cells_[p.value].name +
                               "' and '" + k.one_cells_[q.value].name + "'");
        rel[p.value][q.value] = true;
    }
    // Close under transitivity and whiskering.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t p = 0; p < n1; ++p)
            for (std::size_t q = 0; q < n1; ++q) {
                if (!rel[p][q])
                    continue;
                for (std::size_t r = 0; r < n1; ++r) {
                    if (rel[q][r] && !rel[p][r])
                        rel[p][r] = changed = true;
                    auto pr = lookup(k.comp_, static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(r));
                    auto qr = lookup(k.comp_, static_cast<std::uint32_t>(q), static_cast<std::uint32_t>(r));
                    if (pr && qr && !rel[pr->value][qr->value])
                        rel[pr->value][qr->value] = changed = true;
                    auto rp = lookup(k.comp_, static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(p));
                    auto rq = lookup(k.comp_, static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(q));
                    if (rp && rq && !rel[rp->value][rq->value])
                        rel[rp->value][rq->value] = changed = true;
                }
            }
    }
    std::vector<std::vector<std::uint32_t>> cell(n1, std::vector<std::uint32_t>(n1, kNoId));
    for (std::size_t p = 0; p < n1; ++p)
        for (std::size_t q = 0; q < n1; ++q)
            if (rel[p][q]) {
                auto id = two_cell(k.one_cells_[p].name + "=>" + k.one_cells_[q].name, OneCellId{static_cast<std::uint32_t>(p)},
                                   OneCellId{static_cast<std::uint32_t>(q)});
                cell[p][q] = id.value;
            }
    for (std::size_t p = 0; p < n1; ++p)
        identity2(OneCellId{static_cast<std::uint32_t>(p)}, TwoCellId{cell[p][p]});
    for (std::size_t p = 0; p < n1; ++p)
        for (std::size_t q = 0; q < n1; ++q) {
            if (!rel[p][q])
                continue;
            for (std::size_t r = 0; r < n1; ++r)
                if (rel[q][r])
                    vcomp(TwoCellId{cell[p][q]}, TwoCellId{cell[q][r]}, TwoCellId{cell[p][r]});
            for (std::size_t p2 = 0; p2 < n1; ++p2)
                for (std::size_t q2 = 0; q2 < n1; ++q2) {
                    if (!rel[p2][q2])
                        continue;
                    auto a = lookup(k.comp_, static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(p2));
                    auto b = lookup(k.comp_, static_cast<std::uint32_t>(q), static_cast<std::uint32_t>(q2));
                    if (!a || !b)
                        continue;
                    hcomp(TwoCellId{cell[p][q]}, TwoCellId{cell[p2][q2]}, TwoCellId{cell[a->value][b->value]});
                }
        }
    k.posetal_ = true;
    return *this;
}

FinTwoCategory::Builder& FinTwoCategory::Builder::unit_entries()
{
    auto& k = result_;
    for (std::uint32_t p = 0; p < k.one_cells_.size(); ++p) {
        const OneCell& c = k.one_cells_[p];
        comp(k.identity_.at(c.source.value), OneCellId{p}, OneCellId{p});
        comp(OneCellId{p}, k.identity_.at(c.target.value), OneCellId{p});
    }
    for (std::uint32_t a = 0; a < k.two_cells_.size(); ++a) {
        const TwoCell& c = k.two_cells_[a];
        const OneCell& p = k.one_cells_.at(c.source.value);
        vcomp(k.identity2_.at(c.source.value), TwoCellId{a}, TwoCellId{a});
        vcomp(TwoCellId{a}, k.identity2_.at(c.target.value), TwoCellId{a});
        hcomp(k.identity2_.at(k.identity_.at(p.source.value).value), TwoCellId{a}, TwoCellId{a});
        hcomp(TwoCellId{a}, k.identity2_.at(k.identity_.at(p.target.value).value), TwoCellId{a});
    }
    return *this;
}

FinTwoCategory FinTwoCategory::Builder::build() &&
{
    auto& k = result_;
    for (std::size_t x = 0; x < k.objects_.size(); ++x)
        if (k.identity_[x].value >= k.one_cells_.size())
            throw InvalidInput("object '" + k.objects_[x] + "' has no identity 1-cell");
    for (std::size_t p = 0; p < k.one_cells_.size(); ++p)
        if (k.identity2_[p].value >= k.two_cells_.size())
            throw InvalidInput("1-cell '" + k.one_cells_[p].name + "' has no identity 2-cell");
    auto check_range = [](const auto& table, std::size_t n, const char* what) {
        for (const auto& [key, v] : table)
            if ((key >> 32) >= n || (key & 0xffffffffULL) >= n || v.value >= n)
                throw InvalidInput(std::string(what) + " table refers to an unknown cell");
    };
    check_range(k.comp_, k.one_cells_.size(), "composition");
    check_range(k.vcomp_, k.two_cells_.size(), "vertical composition");
    check_range(k.hcomp_, k.two_cells_.size(), "horizontal composition");
    const std::size_t no = k.objects_.size();
    k.hom_.assign(no * no, {});
    for (std::size_t p = 0; p < k.one_cells_.size(); ++p) {
        const auto& c = k.one_cells_[p];
        k.hom_[c.source.value * no + c.target.value].push_back(OneCellId{static_cast<std::uint32_t>(p)});
    }
    for (std::size_t a = 0; a < k.two_cells_.size(); ++a) {
        const auto& c = k.two_cells_[a];
        k.between_[pair_key(c.source.value, c.target.value)].push_back(TwoCellId{static_cast<std::uint32_t>(a)});
    }
    return std::move(result_);
}

ValidationReport check_axioms(const FinTwoCategory& k)
{
    ValidationReport report;
    auto fail = [&](std::string law, std::vector<std::string> witnesses, std::string detail = {}) {
        report.violations.push_back({std::move(law), std::move(witnesses), std::move(detail)});
        return report;
    };
    auto one = [&](OneCellId p) { return k.one_cell(p).name; };
    auto two = [&](TwoCellId a) { return k.two_cell(a).name; };
    const auto n0 = static_cast<std::uint32_t>(k.object_count());
    const auto n1 = static_cast<std::uint32_t>(k.one_cell_count());
    const auto n2 = static_cast<std::uint32_t>(k.two_cell_count());

    for (std::uint32_t x = 0; x < n0; ++x) {
        const auto& c = k.one_cell(k.identity(ObjectId{x}));
        if (c.source.value != x || c.target.value != x)
            return fail("identity 1-cell endpoints", {k.object_name(ObjectId{x})});
    }
    for (std::uint32_t a = 0; a < n2; ++a) {
        const auto& c = k.two_cell(TwoCellId{a});
        const auto &s = k.one_cell(c.source), &t = k.one_cell(c.target);
        if (s.source != t.source || s.target != t.target)
            return fail("2-cell boundary not parallel", {c.name});
    }
    for (std::uint32_t p = 0; p < n1; ++p) {
        const auto& c = k.two_cell(k.identity2(OneCellId{p}));
        if (c.source.value != p || c.target.value != p)
            return fail("identity 2-cell boundary", {one(OneCellId{p})});
    }
    // 1-cell composition
    for (std::uint32_t p = 0; p < n1; ++p)
        for (std::uint32_t q = 0; q < n1; ++q) {
            OneCellId P{p}, Q{q};
            if (k.one_cell(P).target != k.one_cell(Q).source)
                continue;
            auto r = k.comp(P, Q);
            if (!r)
                return fail("composition table not total", {one(P), one(Q)});
            if (k.one_cell(*r).source != k.one_cell(P).source || k.one_cell(*r).target != k.one_cell(Q).target)
                return fail("composite has wrong endpoints", {one(P), one(Q)});
        }
    for (std::uint32_t p = 0; p < n1; ++p) {
        OneCellId P{p};
        const auto& c = k.one_cell(P);
        if (k.comp(k.identity(c.source), P) != P || k.comp(P, k.identity(c.target)) != P)
            return fail("1-cell unit law", {one(P)});
    }
    for (std::uint32_t p = 0; p < n1; ++p)
        for (std::uint32_t q = 0; q < n1; ++q) {
            auto pq = k.comp(OneCellId{p}, OneCellId{q});
            if (!pq)
                continue;
            for (std::uint32_t r = 0; r < n1; ++r) {
                auto qr = k.comp(OneCellId{q}, OneCellId{r});
                if (!qr)
                    continue;
                if (k.comp(*pq, OneCellId{r}) != k.comp(OneCellId{p}, *qr))
                    return fail("1-cell associativity", {one(OneCellId{p}), one(OneCellId{q}), one(OneCellId{r})});
            }
        }
    // vertical 2-cell composition
    for (std::uint32_t a = 0; a < n2; ++a)
        for (std::uint32_t b = 0; b < n2; ++b) {
            TwoCellId A{a}, B{b};
            if (k.two_cell(A).target != k.two_cell(B).source)
                continue;
            auto c = k.vcomp(A, B);
            if (!c)
                return fail("vertical composition table not total", {two(A), two(B)});
            if (k.two_cell(*c).source != k.two_cell(A).source || k.two_cell(*c).target != k.two_cell(B).target)
                return fail("vertical composite has wrong boundary", {two(A), two(B)});
        }
    for (std::uint32_t a = 0; a < n2; ++a) {
        TwoCellId A{a};
        const auto& c = k.two_cell(A);
        if (k.vcomp(k.identity2(c.source), A) != A || k.vcomp(A, k.identity2(c.target)) != A)
            return fail("vertical unit law", {two(A)});
    }
    for (std::uint32_t a = 0; a < n2; ++a)
        for (std::uint32_t b = 0; b < n2; ++b) {
            auto ab = k.vcomp(TwoCellId{a}, TwoCellId{b});
            if (!ab)
                continue;
            for (std::uint32_t c = 0; c < n2; ++c) {
                auto bc = k.vcomp(TwoCellId{b}, TwoCellId{c});
                if (bc && k.vcomp(*ab, TwoCellId{c}) != k.vcomp(TwoCellId{a}, *bc))
                    return fail("vertical associativity", {two(TwoCellId{a}), two(TwoCellId{b}), two(TwoCellId{c})});
            }
        }
    // horizontal 2-cell composition
    auto hsrc = [&](TwoCellId a) { return k.one_cell(k.two_cell(a).source); };
    for (std::uint32_t a = 0; a < n2; ++a)
        for (std::uint32_t b = 0; b < n2; ++b) {
            TwoCellId A{a}, B{b};
            if (hsrc(A).target != hsrc(B).source)
                continue;
            auto c = k.hcomp(A, B);
            if (!c)
                return fail("horizontal composition table not total", {two(A), two(B)});
            auto s = k.comp(k.two_cell(A).source, k.two_cell(B).source);
            auto t = k.comp(k.two_cell(A).target, k.two_cell(B).target);
            if (k.two_cell(*c).source != s || k.two_cell(*c).target != t)
                return fail("horizontal composite has wrong boundary", {two(A), two(B)});
        }
    for (std::uint32_t a = 0; a < n2; ++a) {
        TwoCellId A{a};
        auto left = k.identity2(k.identity(hsrc(A).source));
        auto right = k.identity2(k.identity(hsrc(A).target));
        if (k.hcomp(left, A) != A || k.hcomp(A, right) != A)
            return fail("horizontal unit law", {two(A)});
    }
    for (std::uint32_t p = 0; p < n1; ++p)
        for (std::uint32_t q = 0; q < n1; ++q) {
            auto pq = k.comp(OneCellId{p}, OneCellId{q});
            if (pq && k.hcomp(k.identity2(OneCellId{p}), k.identity2(OneCellId{q})) != k.identity2(*pq))
                return fail("horizontal composite of identities", {one(OneCellId{p}), one(OneCellId{q})});
        }
    for (std::uint32_t a = 0; a < n2; ++a)
        for (std::uint32_t b = 0; b < n2; ++b) {
            auto ab = k.hcomp(TwoCellId{a}, TwoCellId{b});
            if (!ab)
                continue;
            for (std::uint32_t c = 0; c < n2; ++c) {
                auto bc = k.hcomp(TwoCellId{b}, TwoCellId{c});
                if (bc && k.hcomp(*ab, TwoCellId{c}) != k.hcomp(TwoCellId{a}, *bc))
                    return fail("horizontal associativity", {two(TwoCellId{a}), two(TwoCellId{b}), two(TwoCellId{c})});
            }
        }
    // interchange: (a;b) * (c;d) = (a*c);(b*d)
    for (std::uint32_t a = 0; a < n2; ++a)
        for (std::uint32_t b = 0; b < n2; ++b) {
            auto ab = k.vcomp(TwoCellId{a}, TwoCellId{b});
            if (!ab)
                continue;
            for (std::uint32_t c = 0; c < n2; ++c) {
                auto ac = k.hcomp(TwoCellId{a}, TwoCellId{c});
                if (!ac)
                    continue;
                for (std::uint32_t d = 0; d < n2; ++d) {
                    auto cd = k.vcomp(TwoCellId{c}, TwoCellId{d});
                    auto bd = k.hcomp(TwoCellId{b}, TwoCellId{d});
                    if (!cd || !bd)
                        continue;
                    if (k.hcomp(*ab, *cd) != k.vcomp(*ac, *bd))
                        return fail("interchange", {two(TwoCellId{a}), two(TwoCellId{b}), two(TwoCellId{c}),
                                                    two(TwoCellId{d})});
                }
            }
        }
    if (k.locally_posetal()) {
        for (std::uint32_t p = 0; p < n1; ++p)
            for (std::uint32_t q = 0; q < n1; ++q) {
                const auto& cells = k.cells_between(OneCellId{p}, OneCellId{q});
                if (cells.size() > 1)
                    return fail("locally posetal: parallel 2-cells", {two(cells[0]), two(cells[1])});
                if (p != q && !cells.empty() && k.leq(OneCellId{q}, OneCellId{p}))
                    return fail("locally posetal: antisymmetry", {one(OneCellId{p}), one(OneCellId{q})});
            }
    }
    return report;
}

bool triangle_identities_hold(const FinTwoCategory& k, const Adjunction& adj)
{
    const OneCellId u = adj.left, v = adj.right;
    auto eta_u = k.hcomp(adj.unit, k.identity2(u));
    auto u_eps = k.hcomp(k.identity2(u), adj.counit);
    if (!eta_u || !u_eps || k.vcomp(*eta_u, *u_eps) != k.identity2(u))
        return false;
    auto v_eta = k.hcomp(k.identity2(v), adj.unit);
    auto eps_v = k.hcomp(adj.counit, k.identity2(v));
    return v_eta && eps_v && k.vcomp(*v_eta, *eps_v) == k.identity2(v);
}

namespace {

std::vector<Adjunction> adjunctions_with(const FinTwoCategory& k, OneCellId u, OneCellId v)
{
    std::vector<Adjunction> out;
    const auto& cu = k.one_cell(u);
    auto uv = k.comp(u, v);
    auto vu = k.comp(v, u);
    if (!uv || !vu)
        return out;
    for (TwoCellId unit : k.cells_between(k.identity(cu.source), *uv))
        for (TwoCellId counit : k.cells_between(*vu, k.identity(cu.target))) {
            Adjunction adj{u, v, unit, counit};
            if (triangle_identities_hold(k, adj))
                out.push_back(adj);
        }
    return out;
}

}  // namespace

std::vector<Adjunction> find_adjunctions(const FinTwoCategory& k, OneCellId u)
{
    std::vector<Adjunction> out;
    const auto& cu = k.one_cell(u);
    for (OneCellId v : k.hom(cu.target, cu.source))
        for (const auto& adj : adjunctions_with(k, u, v))
            out.push_back(adj);
    return out;
}

std::vector<Adjunction> find_left_adjoints(const FinTwoCategory& k, OneCellId v)
{
    std::vector<Adjunction> out;
    const auto& cv = k.one_cell(v);
    for (OneCellId u : k.hom(cv.target, cv.source))
        for (const auto& adj : adjunctions_with(k, u, v))
            out.push_back(adj);
    return out;
}

bool posetal_adjoint(const FinTwoCategory& k, OneCellId u, OneCellId v)
{
    const auto& cu = k.one_cell(u);
    const auto& cv = k.one_cell(v);
    if (cv.source != cu.target || cv.target != cu.source)
        return false;
    return k.leq(k.identity(cu.source), *k.comp(u, v)) && k.leq(*k.comp(v, u), k.identity(cu.target));
}

std::optional<std::string> check_two_functor(const FinTwoCategory& a, const FinTwoCategory& b, const TwoFunctorData& f)
{
    if (f.objects.size() != a.object_count() || f.one_cells.size() != a.one_cell_count() ||
        f.two_cells.size() != a.two_cell_count())
        return "assignment sizes do not match the source";
    for (std::uint32_t x = 0; x < a.object_count(); ++x)
        if (f.one_cells[a.identity(ObjectId{x}).value] != b.identity(f.objects[x]))
            return "identity of " + a.object_name(ObjectId{x}) + " not preserved";
    for (std::uint32_t p = 0; p < a.one_cell_count(); ++p) {
        const auto& c = a.one_cell(OneCellId{p});
        const auto& d = b.one_cell(f.one_cells[p]);
        if (d.source != f.objects[c.source.value] || d.target != f.objects[c.target.value])
            return "endpoints of " + c.name + " not preserved";
        if (f.two_cells[a.identity2(OneCellId{p}).value] != b.identity2(f.one_cells[p]))
            return "identity 2-cell of " + c.name + " not preserved";
        for (std::uint32_t q = 0; q < a.one_cell_count(); ++q) {
            auto pq = a.comp(OneCellId{p}, OneCellId{q});
            if (pq && b.comp(f.one_cells[p], f.one_cells[q]) != f.one_cells[pq->value])
                return "composite " + c.name + ";" + a.one_cell(OneCellId{q}).name + " not preserved";
        }
    }
    for (std::uint32_t x = 0; x < a.two_cell_count(); ++x) {
        const auto& c = a.two_cell(TwoCellId{x});
        const auto& d = b.two_cell(f.two_cells[x]);
        if (d.source != f.one_cells[c.source.value] || d.target != f.one_cells[c.target.value])
            return "boundary of 2-cell " + c.name + " not preserved";
        for (std::uint32_t y = 0; y < a.two_cell_count(); ++y) {
            auto v = a.vcomp(TwoCellId{x}, TwoCellId{y});
            if (v && b.vcomp(f.two_cells[x], f.two_cells[y]) != f.two_cells[v->value])
                return "vertical composite of " + c.name + " not preserved";
            auto h = a.hcomp(TwoCellId{x}, TwoCellId{y});
            if (h && b.hcomp(f.two_cells[x], f.two_cells[y]) != f.two_cells[h->value])
                return "horizontal composite of " + c.name + " not preserved";
        }
    }
    return std::nullopt;
}

bool is_isomorphism(const FinTwoCategory& a, const FinTwoCategory& b, const TwoFunctorData& f)
{
    if (check_two_functor(a, b, f))
        return false;
    auto bijective = [](auto values, std::size_t n) {
        if (values.size() != n)
            return false;
        std::sort(values.begin(), values.end());
        return std::adjacent_find(values.begin(), values.end()) == values.end();
    };
    return bijective(f.objects, b.object_count()) && bijective(f.one_cells, b.one_cell_count()) &&
           bijective(f.two_cells, b.two_cell_count());
}

}  // namespace dblcat
