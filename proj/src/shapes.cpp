#include "dblcat/shapes.hpp"

#include <functional>
#include <sstream>

namespace dblcat {

std::vector<Monotone> monotone_maps(int a, int n)
{
    std::vector<Monotone> out;
    if (a < 0 || n < 0)
        return out;
    Monotone f(static_cast<std::size_t>(a + 1), 0);
    std::function<void(int, int)> rec = [&](int pos, int lo) {
        if (pos > a) {
            out.push_back(f);
            return;
        }
        for (int v = lo; v <= n; ++v) {
            f[pos] = v;
            rec(pos + 1, v);
        }
    };
    rec(0, 0);
    return out;
}

Monotone delete_entry(const Monotone& f, int i)
{
    Monotone g = f;
    g.erase(g.begin() + i);
    return g;
}

Monotone duplicate_entry(const Monotone& f, int i)
{
    Monotone g = f;
    g.insert(g.begin() + i, f[i]);
    return g;
}

bool is_constant(const Monotone& f) { return f.front() == f.back(); }

bool is_surjective(const Monotone& f, int n)
{
    std::vector<bool> hit(static_cast<std::size_t>(n + 1), false);
    for (int v : f)
        hit[v] = true;
    for (bool b : hit)
        if (!b)
            return false;
    return true;
}

std::string format_monotone(const Monotone& f)
{
    bool compact = true;
    for (int v : f)
        compact = compact && v < 10;
    std::string s;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (!compact && i > 0)
            s += ',';
        s += std::to_string(f[i]);
    }
    return s;
}

bool in_horn(const RepCell& c, const std::set<int>& S, const std::set<int>& T, int n, int m)
{
    std::vector<bool> hh(static_cast<std::size_t>(n + 1), false), hv(static_cast<std::size_t>(m + 1), false);
    for (int v : c.h)
        hh[v] = true;
    for (int v : c.v)
        hv[v] = true;
    for (int i = 0; i <= n; ++i)
        if (!hh[i] && !S.count(i))
            return true;
    for (int j = 0; j <= m; ++j)
        if (!hv[j] && !T.count(j))
            return true;
    return false;
}

bool in_spine(const Monotone& f) { return f.back() - f.front() <= 1; }

bool in_l_collapse(const RepCell& c)
{
    bool left_column = is_constant(c.h) && c.h.front() == 0 && c.v.back() <= 1;
    bool top_row = is_constant(c.v) && c.v.front() == 0;
    return left_column || top_row;
}

bool is_convex(const std::set<int>& s)
{
    return s.empty() || *s.rbegin() - *s.begin() + 1 == static_cast<int>(s.size());
}

std::vector<ShapeSpec> nonconvex_horns(int max_n, int max_m)
{
    auto subsets = [](int n) {
        std::vector<std::set<int>> out;
        for (int mask = 0; mask < (1 << (n + 1)); ++mask) {
            std::set<int> s;
            for (int i = 0; i <= n; ++i)
                if (mask >> i & 1)
                    s.insert(i);
            out.push_back(s);
        }
        return out;
    };
    auto complement = [](const std::set<int>& s, int n) {
        std::set<int> c;
        for (int i = 0; i <= n; ++i)
            if (!s.count(i))
                c.insert(i);
        return c;
    };
    std::vector<ShapeSpec> out;
    for (int n = 0; n <= max_n; ++n)
        for (int m = 0; m <= max_m; ++m)
            for (const auto& S : subsets(n))
                for (const auto& T : subsets(m))
                    if (!is_convex(complement(S, n)) || !is_convex(complement(T, m)))
                        out.push_back(ShapeSpec::horn(S, T, n, m));
    return out;
}

namespace {

struct ShapeModel {
    using Key = ShapeCell;
    int n = 0, m = 0;
    std::function<bool(const RepCell&)> member;
    std::function<bool(const RepCell&)> collapse;

    std::vector<Key> cells(Bidegree d) const
    {
        std::vector<Key> out;
        bool point = false;
        auto hs = monotone_maps(d.n, n);
        auto vs = monotone_maps(d.m, m);
        for (const auto& a : hs)
            for (const auto& b : vs) {
                RepCell c{a, b};
                if (member && !member(c))
                    continue;
                if (collapse && collapse(c))
                    point = true;
                else
                    out.push_back({false, std::move(c)});
            }
        if (point)
            out.push_back(collapsed_point(d));
        return out;
    }
    Key collapsed_point(Bidegree d) const
    {
        return {true, {Monotone(static_cast<std::size_t>(d.n + 1), 0), Monotone(static_cast<std::size_t>(d.m + 1), 0)}};
    }
    Key normalize(RepCell c) const
    {
        if (collapse && collapse(c))
            return {true, {Monotone(c.h.size(), 0), Monotone(c.v.size(), 0)}};
        return {false, std::move(c)};
    }
    Key face(Direction dir, int i, const Key& k) const
    {
        RepCell c = k.cell;
        if (dir == Direction::horizontal)
            c.h = delete_entry(c.h, i);
        else
            c.v = delete_entry(c.v, i);
        if (k.collapsed)
            return {true, {Monotone(c.h.size(), 0), Monotone(c.v.size(), 0)}};
        return normalize(std::move(c));
    }
    Key degeneracy(Direction dir, int i, const Key& k) const
    {
        RepCell c = k.cell;
        if (dir == Direction::horizontal)
            c.h = duplicate_entry(c.h, i);
        else
            c.v = duplicate_entry(c.v, i);
        if (k.collapsed)
            return {true, {Monotone(c.h.size(), 0), Monotone(c.v.size(), 0)}};
        return normalize(std::move(c));
    }
    std::string label(const Key& k) const
    {
        if (k.collapsed)
            return "*";
        return format_monotone(k.cell.h) + "|" + format_monotone(k.cell.v);
    }
};

// Map between keyed presheaves induced by a key translation.
template <class F>
BisimplicialMap keyed_map(const KeyedPresheaf<ShapeCell>& from, const KeyedPresheaf<ShapeCell>& to, F translate)
{
    const Truncation t = from.set.truncation();
    BisimplicialMap f{t, {}};
    for (Bidegree d : t.degrees()) {
        std::vector<CellId> comp;
        for (const auto& k : from.keys[t.index(d)])
            comp.push_back(to.id(d, translate(k)));
        f.components.push_back(std::move(comp));
    }
    return f;
}

std::string format_set(const std::set<int>& s)
{
    std::string out;
    for (int v : s) {
        if (!out.empty())
            out += ',';
        out += std::to_string(v);
    }
    return out;
}

std::set<int> parse_set(const std::string& text)
{
    std::set<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty())
            continue;
        try {
            std::size_t used = 0;
            int v = std::stoi(item, &used);
            if (used != item.size())
                throw ParseError("bad index '" + item + "'");
            out.insert(v);
        } catch (const std::logic_error&) {
            throw ParseError("bad index '" + item + "'");
        }
    }
    return out;
}

}  // namespace

void validate(const ShapeSpec& s)
{
    if (s.n < 0 || s.m < 0)
        throw InvalidInput("shape degrees must be nonnegative");
    auto within = [](const std::set<int>& xs, int hi) {
        for (int v : xs)
            if (v < 0 || v > hi)
                return false;
        return true;
    };
    switch (s.kind) {
    case ShapeKind::horn:
        if (!within(s.S, s.n) || !within(s.T, s.m))
            throw InvalidInput("horn index sets must satisfy S ⊆ [n], T ⊆ [m]");
        break;
    case ShapeKind::lower_triangle:
        if (s.n != 1 || s.m != 1)
            throw InvalidInput("lower triangle has degree (1,1)");
        break;
    case ShapeKind::l_quotient:
        if (s.m < 1)
            throw InvalidInput("L[n,m] needs m >= 1");
        break;
    case ShapeKind::gamma_l:
        if (s.n < 1 || s.m < 2 || !within(s.T, s.m - 1))
            throw InvalidInput("gamma-L needs n >= 1, m >= 2 and T ⊆ [m-1]");
        break;
    default:
        break;
    }
    if (!s.S.empty() && s.kind != ShapeKind::horn)
        throw InvalidInput("S only applies to horns");
    if (!s.T.empty() && s.kind != ShapeKind::horn && s.kind != ShapeKind::gamma_l)
        throw InvalidInput("T only applies to horns and gamma-L");
}

ShapeSpec parse_shape(const std::string& text)
{
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ':'))
        parts.push_back(part);
    if (parts.empty())
        throw ParseError("empty shape");
    ShapeSpec s;
    const std::string& kind = parts[0];
    if (kind == "representable")
        s.kind = ShapeKind::representable;
    else if (kind == "boundary")
        s.kind = ShapeKind::boundary;
    else if (kind == "spine-h")
        s.kind = ShapeKind::spine_h;
    else if (kind == "spine-v")
        s.kind = ShapeKind::spine_v;
    else if (kind == "horn")
        s.kind = ShapeKind::horn;
    else if (kind == "lower-triangle") {
        s.kind = ShapeKind::lower_triangle;
        s.n = s.m = 1;
    } else if (kind == "L-quotient")
        s.kind = ShapeKind::l_quotient;
    else if (kind == "gamma-L")
        s.kind = ShapeKind::gamma_l;
    else
        throw ParseError("unknown shape kind '" + kind + "'");
    for (std::size_t i = 1; i < parts.size(); ++i) {
        auto eq = parts[i].find('=');
        if (eq == std::string::npos)
            throw ParseError("expected key=value in '" + parts[i] + "'");
        std::string key = parts[i].substr(0, eq), value = parts[i].substr(eq + 1);
        if (key == "S")
            s.S = parse_set(value);
        else if (key == "T")
            s.T = parse_set(value);
        else if (key == "n" || key == "m") {
            auto xs = parse_set(value);
            if (xs.size() != 1)
                throw ParseError("expected one integer for " + key);
            (key == "n" ? s.n : s.m) = *xs.begin();
        } else
            throw ParseError("unknown shape parameter '" + key + "'");
    }
    validate(s);
    return s;
}

std::string format_shape(const ShapeSpec& s)
{
    auto nm = ":n=" + std::to_string(s.n) + ":m=" + std::to_string(s.m);
    switch (s.kind) {
    case ShapeKind::representable:
        return "representable" + nm;
    case ShapeKind::boundary:
        return "boundary" + nm;
    case ShapeKind::spine_h:
        return "spine-h" + nm;
    case ShapeKind::spine_v:
        return "spine-v" + nm;
    case ShapeKind::horn:
        return "horn:S=" + format_set(s.S) + ":T=" + format_set(s.T) + nm;
    case ShapeKind::lower_triangle:
        return "lower-triangle";
    case ShapeKind::l_quotient:
        return "L-quotient" + nm;
    case ShapeKind::gamma_l:
        return "gamma-L:T=" + format_set(s.T) + nm;
    }
    return "";
}

Shape build_shape(const ShapeSpec& spec, Truncation t)
{
    validate(spec);
    const int n = spec.n, m = spec.m;
    ShapeModel full{n, m, nullptr, nullptr};
    auto identity = [](const ShapeCell& k) { return k; };
    Shape out{spec, {}, {}, {}, {}, {}};
    auto sub = [&](std::function<bool(const RepCell&)> member) {
        ShapeModel model{n, m, std::move(member), nullptr};
        out.cells = build_keyed(model, t);
        auto amb = build_keyed(full, t);
        out.inclusion = keyed_map(out.cells, amb, identity);
        out.ambient = std::move(amb.set);
    };
    switch (spec.kind) {
    case ShapeKind::representable:
        out.cells = build_keyed(full, t);
        break;
    case ShapeKind::boundary:
        sub([n, m](const RepCell& c) { return in_horn(c, {}, {}, n, m); });
        break;
    case ShapeKind::spine_h:
        sub([](const RepCell& c) { return in_spine(c.h); });
        break;
    case ShapeKind::spine_v:
        sub([](const RepCell& c) { return in_spine(c.v); });
        break;
    case ShapeKind::horn: {
        auto S = spec.S, T = spec.T;
        sub([S, T, n, m](const RepCell& c) { return in_horn(c, S, T, n, m); });
        break;
    }
    case ShapeKind::lower_triangle:
    case ShapeKind::l_quotient: {
        ShapeModel model{n, m, nullptr, in_l_collapse};
        out.cells = build_keyed(model, t);
        auto rep = build_keyed(full, t);
        out.quotient = keyed_map(rep, out.cells, [&](const ShapeCell& k) { return model.normalize(k.cell); });
        out.uncollapsed = std::move(rep.set);
        break;
    }
    case ShapeKind::gamma_l: {
        auto T = spec.T;
        auto member = [T, n, m](const RepCell& c) { return in_horn(c, {}, T, n, m); };
        ShapeModel model{n, m, member, in_l_collapse};
        out.cells = build_keyed(model, t);
        ShapeModel whole{n, m, nullptr, in_l_collapse};
        auto l = build_keyed(whole, t);
        out.inclusion = keyed_map(out.cells, l, identity);
        out.ambient = std::move(l.set);
        ShapeModel horn{n, m, member, nullptr};
        auto h = build_keyed(horn, t);
        out.quotient = keyed_map(h, out.cells, [&](const ShapeCell& k) { return model.normalize(k.cell); });
        out.uncollapsed = std::move(h.set);
        break;
    }
    }
    return out;
}

FinBisimplicialSet representable(int n, int m, Truncation t)
{
    return build_shape(ShapeSpec::representable(n, m), t).cells.set;
}

}  // namespace dblcat
