#include "dblcat/hom.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace dblcat {

HomSearch::HomSearch(const FinBisimplicialSet& source, const PresheafView& target, std::uint64_t budget)
    : source_(source), target_(target), budget_(budget), norm_(source)
{
    const Truncation t = source.truncation();
    if (!(target.truncation() == t))
        throw InvalidInput("hom: source and target truncations differ");
    root_pos_.resize(t.level_count());
    for (Bidegree d : t.degrees())
        root_pos_[t.index(d)].assign(source.size(d), static_cast<std::size_t>(-1));

    auto face_roots = [&](Bidegree d, CellId c) {
        std::vector<std::tuple<Bidegree, CellId, std::vector<DegeneracyStep>>> out;
        for (Direction dir : {Direction::horizontal, Direction::vertical}) {
            const int n = extent(dir, d);
            if (n < 1)
                continue;
            Bidegree e = shifted(dir, d, -1);
            for (int i = 0; i <= n; ++i) {
                const NormalForm& nf = norm_(e, source.face(dir, d, i, c));
                out.emplace_back(nf.root_degree, nf.root, nf.steps);
            }
        }
        return out;
    };

    // Post-order over faces, starting from the highest roots.
    std::vector<std::pair<Bidegree, CellId>> starts = norm_.roots();
    std::stable_sort(starts.begin(), starts.end(), [](const auto& a, const auto& b) {
        int sa = a.first.n + a.first.m, sb = b.first.n + b.first.m;
        if (sa != sb)
            return sa > sb;
        return a.first > b.first;
    });
    std::vector<std::vector<bool>> seen(t.level_count());
    for (Bidegree d : t.degrees())
        seen[t.index(d)].assign(source.size(d), false);
    std::function<void(Bidegree, CellId)> visit = [&](Bidegree d, CellId c) {
        if (seen[t.index(d)][c])
            return;
        seen[t.index(d)][c] = true;
        for (auto& [rd, rc, steps] : face_roots(d, c))
            visit(rd, rc);
        root_pos_[t.index(d)][c] = order_.size();
        order_.push_back({d, c});
    };
    for (auto [d, c] : starts)
        visit(d, c);

    vars_.resize(order_.size());
    for (std::size_t p = 0; p < order_.size(); ++p) {
        auto [d, c] = order_[p];
        vars_[p].degree = d;
        for (auto& [rd, rc, steps] : face_roots(d, c))
            vars_[p].faces.push_back({root_pos_[t.index(rd)][rc], rd, steps});
    }
}

void HomSearch::pin(Bidegree d, CellId cell, CellId value)
{
    const NormalForm& nf = norm_(d, cell);
    std::size_t p = root_pos_[source_.truncation().index(nf.root_degree)][nf.root];
    vars_[p].pins.push_back({nf.root_degree, nf.steps, value});
}

bool HomSearch::search(std::size_t pos, std::vector<CellId>& values,
                       const std::function<bool(const std::vector<CellId>&)>& visit, std::uint64_t& found)
{
    if (pos == vars_.size()) {
        ++found;
        return visit(values);
    }
    const Variable& var = vars_[pos];
    std::vector<CellId> faces;
    faces.reserve(var.faces.size());
    for (const auto& fc : var.faces)
        faces.push_back(apply_steps(target_, fc.root_degree, values[fc.root_pos], fc.steps));
    std::vector<CellId> candidates;
    target_.matching(var.degree, faces, candidates);
    for (CellId cand : candidates) {
        if (++tried_ > budget_)
            throw BudgetExceeded("map enumeration exceeded budget of " + std::to_string(budget_) +
                                 " candidate assignments");
        bool ok = true;
        for (const auto& pin : var.pins)
            if (apply_steps(target_, pin.root_degree, cand, pin.steps) != pin.value) {
                ok = false;
                break;
            }
        if (!ok)
            continue;
        values[pos] = cand;
        if (!search(pos + 1, values, visit, found))
            return false;
    }
    return true;
}

std::uint64_t HomSearch::run(const std::function<bool(const std::vector<CellId>&)>& visit)
{
    std::vector<CellId> values(vars_.size(), 0);
    std::uint64_t found = 0;
    search(0, values, visit, found);
    return found;
}

std::uint64_t HomSearch::count()
{
    return run([](const std::vector<CellId>&) { return true; });
}

CellId HomSearch::value(const std::vector<CellId>& root_values, Bidegree d, CellId c) const
{
    const NormalForm& nf = norm_(d, c);
    std::size_t p = root_pos_[source_.truncation().index(nf.root_degree)][nf.root];
    return apply_steps(target_, nf.root_degree, root_values[p], nf.steps);
}

BisimplicialMap HomSearch::expand(const std::vector<CellId>& root_values) const
{
    const Truncation t = source_.truncation();
    BisimplicialMap f{t, std::vector<std::vector<CellId>>(t.level_count())};
    for (Bidegree d : t.degrees()) {
        auto& comp = f.components[t.index(d)];
        comp.resize(source_.size(d));
        for (CellId c = 0; c < source_.size(d); ++c)
            comp[c] = value(root_values, d, c);
    }
    return f;
}

std::vector<BisimplicialMap> hom_set(const FinBisimplicialSet& x, const FinBisimplicialSet& y, std::uint64_t budget)
{
    HomSearch search(x, y, budget);
    std::vector<BisimplicialMap> out;
    search.run([&](const std::vector<CellId>& values) {
        out.push_back(search.expand(values));
        return true;
    });
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t hom_count(const FinBisimplicialSet& x, const PresheafView& y, std::uint64_t budget)
{
    HomSearch search(x, y, budget);
    return search.count();
}

LiftResult has_unique_lift(const BisimplicialMap& i, const FinBisimplicialSet& a, const FinBisimplicialSet& b,
                           const PresheafView& x, std::uint64_t budget)
{
    if (!is_injective(i))
        throw InvalidInput("has_unique_lift: the map is not a monomorphism");
    if (auto err = check_map(i, a, b))
        throw InvalidInput("has_unique_lift: " + *err);
    HomSearch from_a(a, x, budget);
    std::vector<std::vector<CellId>> restrictions;
    std::map<std::vector<CellId>, std::size_t> index;
    from_a.run([&](const std::vector<CellId>& values) {
        index.emplace(values, restrictions.size());
        restrictions.push_back(values);
        return true;
    });
    std::vector<std::uint64_t> counts(restrictions.size(), 0);
    HomSearch from_b(b, x, budget);
    const auto& a_roots = from_a.roots();
    std::vector<CellId> key(a_roots.size());
    from_b.run([&](const std::vector<CellId>& values) {
        for (std::size_t k = 0; k < a_roots.size(); ++k) {
            auto [d, c] = a_roots[k];
            key[k] = from_b.value(values, d, i(d, c));
        }
        auto it = index.find(key);
        if (it == index.end())
            throw InvalidInput("has_unique_lift: restriction is not a map out of A");
        ++counts[it->second];
        return true;
    });
    LiftResult result;
    result.maps_checked = restrictions.size();
    for (std::size_t k = 0; k < restrictions.size(); ++k)
        if (counts[k] != 1) {
            result.holds = false;
            result.counterexample = from_a.expand(restrictions[k]);
            result.extensions = counts[k];
            break;
        }
    return result;
}

namespace {

// (1, other)-edge k of an n-cell: the cell spanned by vertices k-1, k.
CellId spine_edge(const FinBisimplicialSet& x, Direction dir, Bidegree d, CellId c, int k)
{
    const int n = extent(dir, d);
    Bidegree cur = d;
    for (int top = n; top > k; --top) {
        c = x.face(dir, cur, top, c);
        cur = shifted(dir, cur, -1);
    }
    for (int low = 0; low < k - 1; ++low) {
        c = x.face(dir, cur, 0, c);
        cur = shifted(dir, cur, -1);
    }
    return c;
}

std::optional<std::string> check_spines(const FinBisimplicialSet& x, Direction dir)
{
    const Truncation t = x.truncation();
    const char* name = dir == Direction::horizontal ? "horizontal" : "vertical";
    for (Bidegree d : t.degrees()) {
        const int n = extent(dir, d);
        if (n < 2)
            continue;
        Bidegree edge = dir == Direction::horizontal ? Bidegree{1, d.m} : Bidegree{d.n, 1};
        const std::size_t edges = x.size(edge);
        std::vector<CellId> src(edges), tgt(edges);
        for (CellId e = 0; e < edges; ++e) {
            src[e] = x.face(dir, edge, 1, e);
            tgt[e] = x.face(dir, edge, 0, e);
        }
        std::set<std::vector<CellId>> seen;
        for (CellId c = 0; c < x.size(d); ++c) {
            std::vector<CellId> tuple(static_cast<std::size_t>(n));
            for (int k = 1; k <= n; ++k)
                tuple[k - 1] = spine_edge(x, dir, d, c, k);
            for (int k = 1; k < n; ++k)
                if (tgt[tuple[k - 1]] != src[tuple[k]])
                    return std::string(name) + " spine at (" + to_string(d) + ") is not a chain";
            if (!seen.insert(tuple).second)
                return std::string(name) + " spine map at (" + to_string(d) + ") is not injective";
        }
        // Chains of n composable edges, counted through their endpoints.
        Bidegree vertex = dir == Direction::horizontal ? Bidegree{0, d.m} : Bidegree{d.n, 0};
        std::vector<std::uint64_t> ending(x.size(vertex), 0);
        for (CellId e = 0; e < edges; ++e)
            ++ending[tgt[e]];
        for (int len = 2; len <= n; ++len) {
            std::vector<std::uint64_t> next(ending.size(), 0);
            for (CellId e = 0; e < edges; ++e)
                next[tgt[e]] += ending[src[e]];
            ending = std::move(next);
        }
        std::uint64_t chains = 0;
        for (auto v : ending)
            chains += v;
        if (chains != x.size(d))
            return std::string(name) + " spine map at (" + to_string(d) + ") is not surjective: " +
                   std::to_string(x.size(d)) + " cells, " + std::to_string(chains) + " chains";
    }
    return std::nullopt;
}

}  // namespace

SegalResult is_segal(const FinBisimplicialSet& x)
{
    for (Direction dir : {Direction::horizontal, Direction::vertical})
        if (auto failure = check_spines(x, dir))
            return {false, *failure};
    return {};
}

}  // namespace dblcat
