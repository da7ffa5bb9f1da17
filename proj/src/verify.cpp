#include "dblcat/verify.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>

#include "dblcat/catalog.hpp"
#include "dblcat/freeliving.hpp"
#include "dblcat/functor_dbl.hpp"
#include "dblcat/gray_sq.hpp"
#include "dblcat/hom.hpp"
#include "dblcat/nerve.hpp"
#include "dblcat/shapes.hpp"

namespace dblcat {

namespace {

template <class T>
const T* find_stem(const std::vector<std::pair<std::string, T>>& v, const std::string& stem)
{
    auto it = std::lower_bound(v.begin(), v.end(), stem, [](const auto& e, const std::string& s) { return e.first < s; });
    return it != v.end() && it->first == stem ? &it->second : nullptr;
}

template <class T>
void sort_by_stem(std::vector<std::pair<std::string, T>>& v)
{
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
}

std::vector<const std::pair<std::string, FinDoubleCategory>*> valid_double(const FixtureCatalog& c)
{
    std::vector<const std::pair<std::string, FinDoubleCategory>*> out;
    for (const auto& e : c.dbl)
        if (check_axioms(e.second).ok())
            out.push_back(&e);
    return out;
}

CheckLine budget_line(const std::string& subject, const BudgetExceeded& e)
{
    return {subject, false, true, std::string("budget exceeded: ") + e.what()};
}

void require(const FixtureCatalog& c, const std::vector<std::string>& two, const std::vector<std::string>& dbl)
{
    for (const auto& s : two)
        if (!c.find_two(s))
            throw ParseError("fixture '" + s + ".json' (2-category) is missing");
    for (const auto& s : dbl)
        if (!c.find_dbl(s))
            throw ParseError("fixture '" + s + ".json' (double category) is missing");
}

}  // namespace

const FinTwoCategory* FixtureCatalog::find_two(const std::string& stem) const { return find_stem(two, stem); }
const FinDoubleCategory* FixtureCatalog::find_dbl(const std::string& stem) const { return find_stem(dbl, stem); }

std::string fixture_stem(const std::string& catalog_name, bool two_category)
{
    if (two_category && catalog_name == "terminal")
        return "terminal_2cat";
    std::string s = catalog_name;
    for (const std::string chain = "chain"; s.find(chain) != std::string::npos;)
        s.replace(s.find(chain), chain.size(), "poset");
    std::replace(s.begin(), s.end(), '-', '_');
    return s;
}

FixtureCatalog builtin_catalog()
{
    FixtureCatalog c;
    for (auto& [name, k] : two_category_catalog())
        c.two.emplace_back(fixture_stem(name, true), std::move(k));
    for (auto& [name, d] : double_category_catalog())
        c.dbl.emplace_back(fixture_stem(name, false), std::move(d));
    c.dbl.emplace_back("broken_interchange", broken_interchange());
    sort_by_stem(c.two);
    sort_by_stem(c.dbl);
    return c;
}

FixtureCatalog load_catalog(const std::string& dir)
{
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir))
        throw ParseError("fixture directory '" + dir + "' does not exist");
    FixtureCatalog c;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.path().extension() != ".json")
            continue;
        const Json j = read_json_file(entry.path().string());
        const std::string stem = entry.path().stem().string();
        const std::string kind = json_kind(j);
        if (kind == "2-category")
            c.two.emplace_back(stem, two_category_from_json(j));
        else if (kind == "double-category")
            c.dbl.emplace_back(stem, double_category_from_json(j));
    }
    if (c.empty())
        throw ParseError("no fixtures in '" + dir + "'");
    sort_by_stem(c.two);
    sort_by_stem(c.dbl);
    return c;
}

void write_catalog(const FixtureCatalog& catalog, const std::string& dir)
{
    std::filesystem::create_directories(dir);
    auto write = [&](const std::string& stem, const Json& j) {
        std::ofstream out(dir + "/" + stem + ".json");
        if (!out)
            throw Error("cannot write '" + dir + "/" + stem + ".json'");
        out << dump(j);
    };
    for (const auto& [stem, k] : catalog.two)
        write(stem, to_json(k));
    for (const auto& [stem, d] : catalog.dbl)
        write(stem, to_json(d));
}

std::optional<TwoFunctorData> match_by_name(const FinTwoCategory& a, const FinTwoCategory& b)
{
    TwoFunctorData data;
    for (std::uint32_t o = 0; o < a.object_count(); ++o) {
        auto x = b.find_object(a.object_name(ObjectId{o}));
        if (!x)
            return std::nullopt;
        data.objects.push_back(*x);
    }
    for (std::uint32_t p = 0; p < a.one_cell_count(); ++p) {
        auto q = b.find_one_cell(a.one_cell(OneCellId{p}).name);
        if (!q)
            return std::nullopt;
        data.one_cells.push_back(*q);
    }
    for (std::uint32_t s = 0; s < a.two_cell_count(); ++s) {
        const TwoCell& c = a.two_cell(TwoCellId{s});
        const auto& cells = b.cells_between(data.one_cells[c.source.value], data.one_cells[c.target.value]);
        if (cells.size() != 1)
            return std::nullopt;
        data.two_cells.push_back(cells.front());
    }
    return data;
}

bool SuiteReport::ok() const
{
    return std::all_of(checks.begin(), checks.end(), [](const CheckLine& l) { return l.ok; });
}

bool SuiteReport::budget_exceeded() const
{
    return std::any_of(checks.begin(), checks.end(), [](const CheckLine& l) { return l.budget; });
}

Json SuiteReport::to_json() const
{
    Json checks_json = Json::array();
    for (const auto& l : checks)
        checks_json.push_back(
            Json{{"subject", l.subject}, {"ok", l.ok}, {"budget_exceeded", l.budget}, {"detail", l.detail}});
    return Json{{"suite", suite}, {"ok", ok()}, {"checks", checks_json}};
}

SuiteReport verify_horns(const FixtureCatalog& catalog, int max_n, int max_m, std::uint64_t budget)
{
    SuiteReport report{"horns", {}};
    std::vector<Shape> horns;
    for (const ShapeSpec& spec : nonconvex_horns(max_n, max_m))
        horns.push_back(build_shape(spec, Truncation{spec.n, spec.m}));
    for (const auto* e : valid_double(catalog)) {
        const auto& [stem, d] = *e;
        try {
            std::map<Truncation, FinBisimplicialSet> nerves;
            std::uint64_t maps = 0;
            CheckLine line{stem, true, false, ""};
            for (const Shape& h : horns) {
                const Truncation t = h.set().truncation();
                auto it = nerves.find(t);
                if (it == nerves.end())
                    it = nerves.emplace(t, materialize(d, t, budget)).first;
                const LiftResult r = has_unique_lift(*h.inclusion, h.set(), *h.ambient, it->second, budget);
                maps += r.maps_checked;
                if (!r.holds) {
                    line.ok = false;
                    line.detail = format_shape(h.spec) + ": a map out of the horn has " +
                                  std::to_string(r.extensions) + " extensions";
                    break;
                }
            }
            if (line.ok)
                line.detail = std::to_string(horns.size()) + " horns, " + std::to_string(maps) + " maps";
            report.checks.push_back(line);
        } catch (const BudgetExceeded& ex) {
            report.checks.push_back(budget_line(stem, ex));
        }
    }
    return report;
}

SuiteReport verify_segal(const FixtureCatalog& catalog, Truncation t, std::uint64_t budget)
{
    SuiteReport report{"segal", {}};
    for (const auto* e : valid_double(catalog)) {
        const auto& [stem, d] = *e;
        try {
            const FinBisimplicialSet x = materialize(d, t, budget);
            const SegalResult r = is_segal(x);
            report.checks.push_back(
                {stem, r.holds, false, r.holds ? std::to_string(x.total_size()) + " cells" : r.failure});
        } catch (const BudgetExceeded& ex) {
            report.checks.push_back(budget_line(stem, ex));
        }
    }
    return report;
}

SuiteReport verify_filtration_suite(int n, Truncation t)
{
    SuiteReport report{"filtration", {}};
    const FiltrationReport r = verify_filtration(n, t);
    for (const auto& l : r.lines)
        report.checks.push_back({"stage", l.rfind("ok", 0) == 0, false, l});
    report.checks.push_back({"union", r.exhausts, false,
                             r.exhausts ? "S_" + std::to_string(n) + " exhausts comp"
                                        : "S_" + std::to_string(n) + " misses cells of comp"});
    return report;
}

SuiteReport verify_thm_c(const FixtureCatalog& catalog, std::uint64_t budget)
{
    require(catalog, {"poset1"}, {"free_v_arrow", "free_square"});
    SuiteReport report{"thmC", {}};
    const std::vector<std::pair<std::string, FinDoubleCategory>> sources{
        {"free_v_arrow", *catalog.find_dbl("free_v_arrow")},
        {"free_square", *catalog.find_dbl("free_square")},
        {"poset1", embed_2cat(*catalog.find_two("poset1"), Direction::vertical)}};
    for (const auto& [xs, x] : sources)
        for (const auto* e : valid_double(catalog)) {
            const std::string subject = xs + " -> " + e->first;
            try {
                const FunctorArrows fun = functor_arrows(x, e->second, budget);
                CheckLine line{subject, true, false, ""};
                std::size_t companions = 0;
                for (std::uint32_t a = 0; a < fun.h.size() && line.ok; ++a) {
                    const auto r = companion_characterization(fun, a, budget);
                    companions += r.is_companion;
                    if (!r.agree()) {
                        line.ok = false;
                        line.detail = "h" + std::to_string(a) + ": companion " + std::to_string(r.is_companion) +
                                      ", naturality squares companionable " + std::to_string(r.all_companionable) +
                                      ", witness " + std::to_string(r.witness_matches);
                    }
                }
                if (line.ok)
                    line.detail = std::to_string(fun.h.size()) + " transformations, " + std::to_string(companions) +
                                  " with companions";
                report.checks.push_back(line);
            } catch (const BudgetExceeded& ex) {
                report.checks.push_back(budget_line(subject, ex));
            }
        }
    return report;
}

SuiteReport verify_thm_d(const FixtureCatalog& catalog, std::uint64_t budget)
{
    require(catalog, {"terminal_2cat", "poset1"}, {});
    SuiteReport report{"thmD", {}};
    for (const char* xs : {"terminal_2cat", "poset1"})
        for (const auto& [ys, y] : catalog.two) {
            const std::string subject = std::string(xs) + " -> " + ys;
            if (!y.locally_posetal())
                continue;
            try {
                const FunctorDoubleCategory fun = fun_lax(*catalog.find_two(xs), y, budget);
                const Fragment hor = fragment(fun.category, Direction::horizontal);
                CheckLine line{subject, true, false, ""};
                std::size_t adjoints = 0;
                for (std::uint32_t v = 0; v < fun.h.size() && line.ok; ++v) {
                    const auto r = lax_adjoint_characterization(fun, hor, y, v);
                    adjoints += r.right_adjoint;
                    if (!r.agree()) {
                        line.ok = false;
                        line.detail = "h" + std::to_string(v) + ": right adjoint " + std::to_string(r.right_adjoint) +
                                      ", conjoint " + std::to_string(r.has_conjoint) + ", pointwise " +
                                      std::to_string(r.pointwise) + ", mates " + std::to_string(r.mates_match);
                    }
                }
                if (line.ok)
                    line.detail = std::to_string(fun.h.size()) + " lax transformations, " + std::to_string(adjoints) +
                                  " right adjoints";
                report.checks.push_back(line);
            } catch (const BudgetExceeded& ex) {
                report.checks.push_back(budget_line(subject, ex));
            }
        }
    return report;
}

SuiteReport verify_fragments(const FixtureCatalog& catalog)
{
    SuiteReport report{"fragments", {}};
    for (const auto& [stem, x] : catalog.two) {
        if (!x.locally_posetal())
            continue;
        const FinDoubleCategory sq = squares_dblcat(x);
        for (Direction dir : {Direction::horizontal, Direction::vertical}) {
            const Fragment fr = fragment(sq, dir);
            const auto data = match_by_name(fr.category, x);
            const bool ok = check_axioms(fr.category).ok() && data && is_isomorphism(fr.category, x, *data);
            report.checks.push_back({std::string(dir == Direction::horizontal ? "Hor" : "Vert") + "(Sq(" + stem + "))",
                                     ok, false, ok ? "isomorphic to " + stem : "not isomorphic to " + stem});
        }
    }
    return report;
}

}  // namespace dblcat
