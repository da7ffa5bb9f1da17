#include "dblcat/bisimplicial.hpp"

#include <algorithm>
#include <sstream>

namespace dblcat {

namespace {

int slot(Direction dir) { return dir == Direction::horizontal ? 0 : 1; }

const char* dir_name(Direction dir) { return dir == Direction::horizontal ? "h" : "v"; }

}  // namespace

std::vector<Bidegree> Truncation::degrees() const
{
    std::vector<Bidegree> out;
    for (int a = 0; a <= n; ++a)
        for (int b = 0; b <= m; ++b)
            out.push_back({a, b});
    return out;
}

std::string to_string(Bidegree d) { return std::to_string(d.n) + "," + std::to_string(d.m); }

std::string PresheafView::describe(Bidegree d, CellId c) const
{
    return "(" + to_string(d) + ")#" + std::to_string(c);
}

std::size_t FinBisimplicialSet::KeyHash::operator()(const std::vector<CellId>& v) const noexcept
{
    std::size_t h = 0xcbf29ce484222325ULL;
    for (CellId c : v) {
        h ^= c + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

const FinBisimplicialSet::Level& FinBisimplicialSet::level(Bidegree d) const
{
    if (!trunc_.contains(d))
        throw InvalidInput("bidegree (" + to_string(d) + ") outside truncation");
    return levels_[trunc_.index(d)];
}

std::size_t FinBisimplicialSet::total_size() const
{
    std::size_t total = 0;
    for (const auto& l : levels_)
        total += l.labels.size();
    return total;
}

std::optional<CellId> FinBisimplicialSet::find(Bidegree d, std::string_view label) const
{
    const auto& labels = level(d).labels;
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == label)
            return static_cast<CellId>(i);
    return std::nullopt;
}

const std::vector<CellId>& FinBisimplicialSet::face_table(Direction dir, Bidegree d, int i) const
{
    const auto& tables = level(d).faces[slot(dir)];
    if (i < 0 || static_cast<std::size_t>(i) >= tables.size())
        throw InvalidInput(std::string("no ") + dir_name(dir) + "-face " + std::to_string(i) + " at (" +
                           to_string(d) + ")");
    return tables[i];
}

const std::vector<CellId>& FinBisimplicialSet::degeneracy_table(Direction dir, Bidegree d, int i) const
{
    const auto& tables = level(d).degeneracies[slot(dir)];
    if (i < 0 || static_cast<std::size_t>(i) >= tables.size())
        throw InvalidInput(std::string("no ") + dir_name(dir) + "-degeneracy " + std::to_string(i) +
                           " at (" + to_string(d) + ")");
    return tables[i];
}

CellId FinBisimplicialSet::face(Direction dir, Bidegree d, int i, CellId c) const
{
    return face_table(dir, d, i)[c];
}

CellId FinBisimplicialSet::degeneracy(Direction dir, Bidegree d, int i, CellId c) const
{
    return degeneracy_table(dir, d, i)[c];
}

std::vector<CellId> FinBisimplicialSet::face_key(Bidegree d, CellId c) const
{
    std::vector<CellId> key;
    const Level& l = level(d);
    for (int s = 0; s < 2; ++s)
        for (const auto& table : l.faces[s])
            key.push_back(table[c]);
    return key;
}

bool FinBisimplicialSet::is_degenerate(Bidegree d, CellId c) const
{
    for (Direction dir : {Direction::horizontal, Direction::vertical}) {
        if (!has_face(dir, d))
            continue;
        Bidegree lower = shifted(dir, d, -1);
        for (int k = 0; k < extent(dir, d); ++k)
            if (degeneracy(dir, lower, k, face(dir, d, k, c)) == c)
                return true;
    }
    return false;
}

void FinBisimplicialSet::matching(Bidegree d, std::span<const CellId> faces, std::vector<CellId>& out) const
{
    out.clear();
    const Level& l = level(d);
    if (d.n == 0 && d.m == 0) {
        out.resize(l.labels.size());
        for (std::size_t i = 0; i < out.size(); ++i)
            out[i] = static_cast<CellId>(i);
        return;
    }
    std::vector<CellId> key(faces.begin(), faces.end());
    auto it = l.by_faces.find(key);
    if (it != l.by_faces.end())
        out = it->second;
}

FinBisimplicialSet::Builder::Builder(Truncation t)
{
    if (t.n < 0 || t.m < 0)
        throw InvalidInput("negative truncation");
    result_.trunc_ = t;
    result_.levels_.resize(t.level_count());
}

FinBisimplicialSet::Builder& FinBisimplicialSet::Builder::cells(Bidegree d, std::vector<std::string> labels)
{
    if (!result_.trunc_.contains(d))
        throw InvalidInput("bidegree (" + to_string(d) + ") outside truncation");
    result_.levels_[result_.trunc_.index(d)].labels = std::move(labels);
    return *this;
}

FinBisimplicialSet::Builder& FinBisimplicialSet::Builder::face(Direction dir, Bidegree d, int i,
                                                               std::vector<CellId> table)
{
    if (!result_.trunc_.contains(d) || extent(dir, d) < 1 || i < 0 || i > extent(dir, d))
        throw InvalidInput(std::string("face ") + dir_name(dir) + std::to_string(i) + " undefined at (" +
                           to_string(d) + ")");
    auto& tables = result_.levels_[result_.trunc_.index(d)].faces[slot(dir)];
    tables.resize(static_cast<std::size_t>(extent(dir, d) + 1));
    tables[i] = std::move(table);
    return *this;
}

FinBisimplicialSet::Builder& FinBisimplicialSet::Builder::degeneracy(Direction dir, Bidegree d, int i,
                                                                     std::vector<CellId> table)
{
    if (!result_.trunc_.contains(d) || extent(dir, d) + 1 > bound(dir, result_.trunc_) || i < 0 ||
        i > extent(dir, d))
        throw InvalidInput(std::string("degeneracy ") + dir_name(dir) + std::to_string(i) +
                           " undefined at (" + to_string(d) + ")");
    auto& tables = result_.levels_[result_.trunc_.index(d)].degeneracies[slot(dir)];
    tables.resize(static_cast<std::size_t>(extent(dir, d) + 1));
    tables[i] = std::move(table);
    return *this;
}

FinBisimplicialSet FinBisimplicialSet::Builder::build() &&
{
    FinBisimplicialSet& x = result_;
    const Truncation t = x.trunc_;
    for (Bidegree d : t.degrees()) {
        Level& l = x.levels_[t.index(d)];
        for (Direction dir : {Direction::horizontal, Direction::vertical}) {
            auto check = [&](std::vector<std::vector<CellId>>& tables, bool defined, Bidegree target,
                             const char* what) {
                std::size_t expected = defined ? static_cast<std::size_t>(extent(dir, d) + 1) : 0;
                if (tables.size() != expected)
                    throw InvalidInput(std::string("missing ") + dir_name(dir) + "-" + what + " tables at (" +
                                       to_string(d) + ")");
                for (const auto& table : tables) {
                    if (table.size() != l.labels.size())
                        throw InvalidInput(std::string(dir_name(dir)) + "-" + what + " table at (" +
                                           to_string(d) + ") has wrong length");
                    std::size_t limit = x.levels_[t.index(target)].labels.size();
                    for (CellId c : table)
                        if (c >= limit)
                            throw InvalidInput(std::string(dir_name(dir)) + "-" + what + " at (" +
                                               to_string(d) + ") out of range");
                }
            };
            bool has_f = extent(dir, d) >= 1;
            bool has_s = extent(dir, d) + 1 <= bound(dir, t);
            check(l.faces[slot(dir)], has_f, has_f ? shifted(dir, d, -1) : d, "face");
            check(l.degeneracies[slot(dir)], has_s, has_s ? shifted(dir, d, 1) : d, "degeneracy");
        }
    }
    for (Bidegree d : t.degrees()) {
        if (d.n == 0 && d.m == 0)
            continue;
        Level& l = x.levels_[t.index(d)];
        for (CellId c = 0; c < l.labels.size(); ++c)
            l.by_faces[x.face_key(d, c)].push_back(c);
    }
    return std::move(result_);
}

BisimplicialMap identity_map(const FinBisimplicialSet& x)
{
    BisimplicialMap f{x.truncation(), {}};
    for (Bidegree d : x.truncation().degrees()) {
        std::vector<CellId> comp(x.size(d));
        for (std::size_t i = 0; i < comp.size(); ++i)
            comp[i] = static_cast<CellId>(i);
        f.components.push_back(std::move(comp));
    }
    return f;
}

BisimplicialMap compose(const BisimplicialMap& f, const BisimplicialMap& g)
{
    if (!(f.truncation == g.truncation))
        throw InvalidInput("compose: truncation mismatch");
    BisimplicialMap h{f.truncation, f.components};
    for (std::size_t l = 0; l < h.components.size(); ++l)
        for (auto& c : h.components[l])
            c = g.components[l].at(c);
    return h;
}

namespace {

std::string where(Bidegree d, CellId c) { return "cell " + std::to_string(c) + " at (" + to_string(d) + ")"; }

std::optional<std::string> check_direction(const FinBisimplicialSet& x, Direction dir)
{
    const Truncation t = x.truncation();
    const char* nm = dir_name(dir);
    for (Bidegree d : t.degrees()) {
        const int n = extent(dir, d);
        for (CellId c = 0; c < x.size(d); ++c) {
            // d_i d_j = d_{j-1} d_i, i < j
            if (n >= 2) {
                Bidegree d1 = shifted(dir, d, -1);
                for (int j = 1; j <= n; ++j)
                    for (int i = 0; i < j; ++i)
                        if (x.face(dir, d1, i, x.face(dir, d, j, c)) != x.face(dir, d1, j - 1, x.face(dir, d, i, c)))
                            return std::string(nm) + "-face identity d" + std::to_string(i) + "d" +
                                   std::to_string(j) + " fails on " + where(d, c);
            }
            if (n + 1 > bound(dir, t))
                continue;
            Bidegree up = shifted(dir, d, 1);
            for (int j = 0; j <= n; ++j) {
                CellId s = x.degeneracy(dir, d, j, c);
                for (int i = 0; i <= n + 1; ++i) {
                    CellId lhs = x.face(dir, up, i, s);
                    CellId rhs;
                    if (i == j || i == j + 1)
                        rhs = c;
                    else if (i < j)
                        rhs = x.degeneracy(dir, shifted(dir, d, -1), j - 1, x.face(dir, d, i, c));
                    else
                        rhs = x.degeneracy(dir, shifted(dir, d, -1), j, x.face(dir, d, i - 1, c));
                    if (lhs != rhs)
                        return std::string(nm) + "-identity d" + std::to_string(i) + "s" + std::to_string(j) +
                               " fails on " + where(d, c);
                }
                if (n + 2 <= bound(dir, t))
                    for (int i = 0; i <= j; ++i)
                        if (x.degeneracy(dir, up, i, s) != x.degeneracy(dir, up, j + 1, x.degeneracy(dir, d, i, c)))
                            return std::string(nm) + "-identity s" + std::to_string(i) + "s" + std::to_string(j) +
                                   " fails on " + where(d, c);
            }
        }
    }
    return std::nullopt;
}

std::optional<std::string> check_cross(const FinBisimplicialSet& x)
{
    const Truncation t = x.truncation();
    const Direction H = Direction::horizontal, V = Direction::vertical;
    for (Bidegree d : t.degrees()) {
        for (CellId c = 0; c < x.size(d); ++c) {
            for (int i = 0; i <= d.n; ++i) {
                for (int j = 0; j <= d.m; ++j) {
                    // hf/vf
                    if (d.n >= 1 && d.m >= 1) {
                        CellId a = x.face(V, {d.n - 1, d.m}, j, x.face(H, d, i, c));
                        CellId b = x.face(H, {d.n, d.m - 1}, i, x.face(V, d, j, c));
                        if (a != b)
                            return "h-face " + std::to_string(i) + " and v-face " + std::to_string(j) +
                                   " do not commute on " + where(d, c);
                    }
                    // hf/vs
                    if (d.n >= 1 && d.m + 1 <= t.m) {
                        CellId a = x.degeneracy(V, {d.n - 1, d.m}, j, x.face(H, d, i, c));
                        CellId b = x.face(H, {d.n, d.m + 1}, i, x.degeneracy(V, d, j, c));
                        if (a != b)
                            return "h-face " + std::to_string(i) + " and v-degeneracy " + std::to_string(j) +
                                   " do not commute on " + where(d, c);
                    }
                    // hs/vf
                    if (d.n + 1 <= t.n && d.m >= 1) {
                        CellId a = x.face(V, {d.n + 1, d.m}, j, x.degeneracy(H, d, i, c));
                        CellId b = x.degeneracy(H, {d.n, d.m - 1}, i, x.face(V, d, j, c));
                        if (a != b)
                            return "h-degeneracy " + std::to_string(i) + " and v-face " + std::to_string(j) +
                                   " do not commute on " + where(d, c);
                    }
                    // hs/vs
                    if (d.n + 1 <= t.n && d.m + 1 <= t.m) {
                        CellId a = x.degeneracy(V, {d.n + 1, d.m}, j, x.degeneracy(H, d, i, c));
                        CellId b = x.degeneracy(H, {d.n, d.m + 1}, i, x.degeneracy(V, d, j, c));
                        if (a != b)
                            return "h-degeneracy " + std::to_string(i) + " and v-degeneracy " +
                                   std::to_string(j) + " do not commute on " + where(d, c);
                    }
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<std::string> check_identities(const FinBisimplicialSet& x)
{
    if (auto e = check_direction(x, Direction::horizontal))
        return e;
    if (auto e = check_direction(x, Direction::vertical))
        return e;
    return check_cross(x);
}

std::optional<std::string> check_map(const BisimplicialMap& f, const FinBisimplicialSet& source,
                                     const PresheafView& target)
{
    const Truncation t = source.truncation();
    if (!(f.truncation == t) || !(target.truncation() == t))
        return "truncation mismatch";
    if (f.components.size() != t.level_count())
        return "wrong number of components";
    for (Bidegree d : t.degrees()) {
        if (f.components[t.index(d)].size() != source.size(d))
            return "component at (" + to_string(d) + ") has wrong length";
        for (CellId c = 0; c < source.size(d); ++c) {
            CellId y = f(d, c);
            for (Direction dir : {Direction::horizontal, Direction::vertical}) {
                int n = extent(dir, d);
                if (n >= 1)
                    for (int i = 0; i <= n; ++i)
                        if (f(shifted(dir, d, -1), source.face(dir, d, i, c)) != target.face(dir, d, i, y))
                            return std::string("map does not commute with ") + dir_name(dir) + "-face " +
                                   std::to_string(i) + " on " + where(d, c);
                if (n + 1 <= bound(dir, t))
                    for (int i = 0; i <= n; ++i)
                        if (f(shifted(dir, d, 1), source.degeneracy(dir, d, i, c)) !=
                            target.degeneracy(dir, d, i, y))
                            return std::string("map does not commute with ") + dir_name(dir) + "-degeneracy " +
                                   std::to_string(i) + " on " + where(d, c);
            }
        }
    }
    return std::nullopt;
}

bool is_injective(const BisimplicialMap& f)
{
    for (const auto& comp : f.components) {
        std::vector<CellId> sorted = comp;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            return false;
    }
    return true;
}

bool is_bijective(const BisimplicialMap& f, const FinBisimplicialSet& target)
{
    if (!is_injective(f))
        return false;
    for (Bidegree d : f.truncation.degrees())
        if (f.components[f.truncation.index(d)].size() != target.size(d))
            return false;
    return true;
}

Normalization::Normalization(const FinBisimplicialSet& x) : trunc_(x.truncation())
{
    forms_.resize(trunc_.level_count());
    // Degrees in increasing order, so lower levels are normalized first.
    for (Bidegree d : trunc_.degrees()) {
        auto& forms = forms_[trunc_.index(d)];
        forms.resize(x.size(d));
        for (CellId c = 0; c < x.size(d); ++c) {
            bool found = false;
            for (Direction dir : {Direction::horizontal, Direction::vertical}) {
                if (extent(dir, d) < 1)
                    continue;
                Bidegree lower = shifted(dir, d, -1);
                for (int k = 0; k < extent(dir, d) && !found; ++k) {
                    CellId y = x.face(dir, d, k, c);
                    if (x.degeneracy(dir, lower, k, y) == c) {
                        forms[c] = forms_[trunc_.index(lower)][y];
                        forms[c].steps.push_back({dir, k});
                        found = true;
                    }
                }
                if (found)
                    break;
            }
            if (!found) {
                forms[c] = NormalForm{d, c, {}};
                roots_.push_back({d, c});
            }
        }
    }
}

CellId apply_steps(const PresheafView& target, Bidegree root_degree, CellId x,
                   const std::vector<DegeneracyStep>& steps)
{
    Bidegree d = root_degree;
    for (const auto& s : steps) {
        x = target.degeneracy(s.dir, d, s.index, x);
        d = shifted(s.dir, d, 1);
    }
    return x;
}

}  // namespace dblcat
