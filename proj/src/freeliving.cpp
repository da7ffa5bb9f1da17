#include "dblcat/freeliving.hpp"

#include <algorithm>
#include <optional>

#include "dblcat/hom.hpp"
#include "dblcat/operations.hpp"

namespace dblcat {

Staircase parse_staircase(int n, int m, const std::string& bits)
{
    Staircase s{n, m, bits};
    if (n < 0 || m < 0 || bits.size() != static_cast<std::size_t>((n + 1) * (m + 1)) ||
        bits.find_first_not_of("01") != std::string::npos)
        throw ParseError("'" + bits + "' is not a " + std::to_string(n + 1) + "x" + std::to_string(m + 1) +
                         " bit matrix");
    if (!is_monotone(s))
        throw InvalidInput("'" + bits + "' is not monotone");
    return s;
}

bool is_monotone(const Staircase& s)
{
    for (int i = 0; i <= s.n; ++i)
        for (int j = 0; j <= s.m; ++j) {
            if (i < s.n && s.at(i, j) > s.at(i + 1, j))
                return false;
            if (j < s.m && s.at(i, j) > s.at(i, j + 1))
                return false;
        }
    return true;
}

std::vector<Staircase> comp_cells(int n, int m)
{
    if (n < 0 || m < 0)
        throw InvalidInput("comp_cells: negative size");
    std::vector<Staircase> out;
    Staircase s{n, m, std::string(static_cast<std::size_t>((n + 1) * (m + 1)), '0')};
    // fill in row-major order; a cell may be 0 only if its left and upper neighbours are 0
    auto rec = [&](auto&& self, int k) -> void {
        if (k == (n + 1) * (m + 1)) {
            out.push_back(s);
            return;
        }
        const int i = k / (m + 1), j = k % (m + 1);
        const bool forced = (i > 0 && s.at(i - 1, j)) || (j > 0 && s.at(i, j - 1));
        if (!forced) {
            s.bits[k] = '0';
            self(self, k + 1);
        }
        s.bits[k] = '1';
        self(self, k + 1);
        s.bits[k] = '0';
    };
    rec(rec, 0);
    return out;
}

Staircase sigma(int n)
{
    if (n < 1)
        throw InvalidInput("sigma needs n >= 1");
    Staircase s{n, n, {}};
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j)
            s.bits.push_back(j <= n - i ? '0' : '1');
    return s;
}

Staircase restrict_staircase(const Staircase& s, const Monotone& a, const Monotone& b)
{
    Staircase out{static_cast<int>(a.size()) - 1, static_cast<int>(b.size()) - 1, {}};
    for (int p : a)
        for (int q : b)
            out.bits.push_back(static_cast<char>('0' + s.at(p, q)));
    return out;
}

namespace {

Monotone identity_monotone(int n)
{
    Monotone f;
    for (int i = 0; i <= n; ++i)
        f.push_back(i);
    return f;
}

struct CompModel {
    using Key = Staircase;
    std::vector<Key> cells(Bidegree d) const { return comp_cells(d.n, d.m); }
    Key face(Direction dir, int i, const Key& k) const { return staircase_face(dir, i, k); }
    Key degeneracy(Direction dir, int i, const Key& k) const { return staircase_degeneracy(dir, i, k); }
    std::string label(const Key& k) const { return k.bits; }
};

std::optional<BisimplicialMap> factor_through(const BisimplicialMap& f, const Subpresheaf& s,
                                              const FinBisimplicialSet& target)
{
    const Truncation t = f.truncation;
    BisimplicialMap out{t, std::vector<std::vector<CellId>>(t.level_count())};
    for (Bidegree d : t.degrees()) {
        std::vector<CellId> preimage(target.size(d), kNoId);
        for (CellId c = 0; c < s.object.size(d); ++c)
            preimage[s.inclusion(d, c)] = c;
        for (CellId v : f.components[t.index(d)]) {
            if (preimage[v] == kNoId)
                return std::nullopt;
            out.components[t.index(d)].push_back(preimage[v]);
        }
    }
    return out;
}

Subpresheaf generated_by(const CompPresheaf& comp, int k)
{
    const Truncation t = comp.set.truncation();
    std::vector<std::vector<bool>> marked(t.level_count());
    for (Bidegree d : t.degrees())
        marked[t.index(d)].assign(comp.set.size(d), false);
    for (int i = 1; i <= k; ++i)
        marked[t.index({i, i})][comp.id({i, i}, sigma(i))] = true;
    return generated_subpresheaf(comp.set, marked);
}

// Attaches L[n, m] to `base` along Gamma^0_L[n, m] via the cell x; returns the image of the
// pushout in comp, or a failure message.
std::optional<Subpresheaf> attach(const CompPresheaf& comp, const Subpresheaf& base, int n, int m,
                                  const Staircase& x, std::string& why)
{
    const Truncation t = comp.set.truncation();
    Shape l = build_shape(ShapeSpec::l_quotient(n, m), t);
    Shape gamma = build_shape(ShapeSpec::gamma_l({0}, n, m), t);
    BisimplicialMap from_l = yoneda_map(l, comp, x);
    if (auto err = check_map(from_l, l.set(), comp.set)) {
        why = "map out of L is not natural: " + *err;
        return std::nullopt;
    }
    BisimplicialMap on_gamma = compose(*gamma.inclusion, from_l);
    auto into_base = factor_through(on_gamma, base, comp.set);
    if (!into_base) {
        why = "Gamma^0_L does not land in the previous stage";
        return std::nullopt;
    }
    Pushout p = pushout(gamma.set(), base.object, l.set(), *into_base, *gamma.inclusion);
    BisimplicialMap out = copair(p, base.inclusion, from_l);
    if (!is_injective(out)) {
        why = "pushout does not embed in comp";
        return std::nullopt;
    }
    return image(out, comp.set);
}

std::string stage_name(int n, int m) { return "[" + std::to_string(n) + "," + std::to_string(m) + "]"; }

}  // namespace

Staircase staircase_face(Direction dir, int i, const Staircase& s)
{
    Monotone a = identity_monotone(s.n), b = identity_monotone(s.m);
    if (dir == Direction::horizontal)
        a = delete_entry(a, i);
    else
        b = delete_entry(b, i);
    return restrict_staircase(s, a, b);
}

Staircase staircase_degeneracy(Direction dir, int i, const Staircase& s)
{
    Monotone a = identity_monotone(s.n), b = identity_monotone(s.m);
    if (dir == Direction::horizontal)
        a = duplicate_entry(a, i);
    else
        b = duplicate_entry(b, i);
    return restrict_staircase(s, a, b);
}

CompPresheaf comp_keyed(Truncation t) { return build_keyed(CompModel{}, t); }

FinBisimplicialSet comp_presheaf(Truncation t, Handedness which)
{
    if (which == Handedness::companion)
        return comp_keyed(t).set;
    return dualize(comp_keyed(t).set, Duality::hop);
}

BisimplicialMap yoneda_map(const Shape& shape, const CompPresheaf& comp, const Staircase& x)
{
    const Truncation t = comp.set.truncation();
    BisimplicialMap f{t, std::vector<std::vector<CellId>>(t.level_count())};
    for (Bidegree d : t.degrees())
        for (CellId c = 0; c < shape.set().size(d); ++c) {
            const ShapeCell& k = shape.cells.key(d, c);
            f.components[t.index(d)].push_back(comp.id(d, restrict_staircase(x, k.cell.h, k.cell.v)));
        }
    return f;
}

FiltrationReport verify_filtration(int n, Truncation t)
{
    if (n < 1)
        throw InvalidInput("verify_filtration needs n >= 1");
    FiltrationReport report;
    auto line = [&](bool ok, const std::string& text) {
        report.ok = report.ok && ok;
        report.lines.push_back((ok ? "ok   " : "FAIL ") + text);
    };
    const Truncation big{std::max(t.n, n), std::max(t.m, n)};
    CompPresheaf comp = comp_keyed(big);

    Subpresheaf s = generated_by(comp, 1);
    {
        Shape l = build_shape(ShapeSpec::lower_triangle(), big);
        BisimplicialMap from_l = yoneda_map(l, comp, sigma(1));
        bool natural = !check_map(from_l, l.set(), comp.set).has_value();
        bool ok = natural && is_injective(from_l) && same_image(image(from_l, comp.set).inclusion, s.inclusion);
        line(ok, "S_1 is the image of L");
    }
    for (int k = 1; k < n; ++k) {
        std::string why;
        auto first = attach(comp, s, k, k + 1, staircase_face(Direction::horizontal, 0, sigma(k + 1)), why);
        line(first.has_value(), "S_" + std::to_string(k) + " + L" + stage_name(k, k + 1) + " along Gamma^0_L" +
                                    stage_name(k, k + 1) + (why.empty() ? "" : ": " + why));
        if (!first)
            return report;
        auto second = attach(comp, *first, k + 1, k + 1, sigma(k + 1), why);
        line(second.has_value(), "then L" + stage_name(k + 1, k + 1) + " along Gamma^0_L" + stage_name(k + 1, k + 1) +
                                     (why.empty() ? "" : ": " + why));
        if (!second)
            return report;
        Subpresheaf next = generated_by(comp, k + 1);
        line(same_image(second->inclusion, next.inclusion), "result equals S_" + std::to_string(k + 1));
        s = std::move(next);
    }
    bool covers = true;
    for (Bidegree d : t.degrees())
        covers = covers && s.object.size(d) == comp.set.size(d);
    report.exhausts = covers;
    report.lines.push_back(std::string(covers ? "ok   " : "no   ") + "S_" + std::to_string(n) +
                           " contains comp up to (" + std::to_string(t.n) + "," + std::to_string(t.m) + ")");
    return report;
}

Grid staircase_grid(const FinDoubleCategory& d, const Companionship& data, const Staircase& s)
{
    const bool conj = data.kind == Handedness::conjoint;
    const VArrow& f = d.v_arrow(data.f);
    const ObjectId x = f.source, y = f.target;
    // conjunction data are read on the horizontal opposite
    auto value = [&](int i, int j) { return conj ? s.at(s.n - i, j) : s.at(i, j); };
    Grid g;
    g.n = s.n;
    g.m = s.m;
    for (int i = 0; i <= s.n; ++i)
        for (int j = 0; j <= s.m; ++j)
            g.objects.push_back((value(i, j) ? y : x).value);
    for (int i = 0; i < s.n; ++i)
        for (int j = 0; j <= s.m; ++j) {
            int a = value(i, j), b = value(i + 1, j);
            g.h.push_back((a == b ? d.h_identity(a ? y : x) : data.h).value);
        }
    for (int i = 0; i <= s.n; ++i)
        for (int j = 0; j < s.m; ++j) {
            int a = value(i, j), b = value(i, j + 1);
            g.v.push_back((a == b ? d.v_identity(a ? y : x) : data.f).value);
        }
    for (int i = 0; i < s.n; ++i)
        for (int j = 0; j < s.m; ++j) {
            const int tl = value(i, j), tr = value(i + 1, j), bl = value(i, j + 1), br = value(i + 1, j + 1);
            SquareId q;
            if (tl == tr && bl == br)
                q = tl == bl ? d.identity_square(tl ? y : x) : d.identity_square(data.f);
            else if (tl == bl && tr == br)
                q = d.identity_square(data.h);
            else if (tl == tr)
                q = data.unit;  // companion 00/01, conjoint 00/10
            else
                q = data.counit;  // companion 01/11, conjoint 10/11
            g.sq.push_back(q.value);
        }
    return g;
}

BisimplicialMap extend_companionship(const CompPresheaf& comp, const LazyNerve& nerve, const Companionship& data)
{
    const FinDoubleCategory& d = nerve.category();
    if (!triangle_identities_hold(d, data))
        throw InvalidInput("companionship data fail the triangle identities");
    const Truncation t = comp.set.truncation();
    if (nerve.truncation() != t)
        throw InvalidInput("extend_companionship: truncations differ");
    BisimplicialMap f{t, std::vector<std::vector<CellId>>(t.level_count())};
    for (Bidegree deg : t.degrees())
        for (CellId c = 0; c < comp.set.size(deg); ++c)
            f.components[t.index(deg)].push_back(nerve.intern(staircase_grid(d, data, comp.key(deg, c))));
    return f;
}

std::uint64_t count_extensions(const CompPresheaf& comp, const LazyNerve& nerve, SquareId eta, Handedness kind,
                               std::uint64_t budget)
{
    if (!has_unit_shape(nerve.category(), eta, kind))
        throw InvalidInput("square does not have the boundary of a unit");
    FinBisimplicialSet conj;
    const FinBisimplicialSet* source = &comp.set;
    if (kind == Handedness::conjoint) {
        conj = dualize(comp.set, Duality::hop);
        source = &conj;
    }
    HomSearch search(*source, nerve, budget);
    // sigma(1) is fixed by the horizontal opposite, so the same cell id is pinned in both cases
    search.pin({1, 1}, comp.id({1, 1}, sigma(1)), eta.value);
    return search.count();
}

}  // namespace dblcat
