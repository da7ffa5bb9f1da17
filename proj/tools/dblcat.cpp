#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "dblcat/catalog.hpp"
#include "dblcat/freeliving.hpp"
#include "dblcat/functor_dbl.hpp"
#include "dblcat/gray_sq.hpp"
#include "dblcat/json_io.hpp"
#include "dblcat/nerve.hpp"
#include "dblcat/verify.hpp"

using namespace dblcat;

namespace {

enum Exit { kOk = 0, kFailure = 1, kInput = 2, kBudget = 3 };

struct Options {
    std::vector<int> levels;
    std::uint64_t budget = kDefaultBudget;
    std::string format = "table";
    bool json() const { return format == "json"; }
    Truncation truncation(Truncation fallback) const
    {
        return levels.empty() ? fallback : Truncation{levels[0], levels[1]};
    }
};

struct Loaded {
    std::optional<FinTwoCategory> two;
    std::optional<FinDoubleCategory> dbl;
};

Loaded load(const std::string& path)
{
    const Json j = read_json_file(path);
    if (json_kind(j) == "2-category")
        return {two_category_from_json(j), std::nullopt};
    if (json_kind(j) == "double-category")
        return {std::nullopt, double_category_from_json(j)};
    throw ParseError("'" + path + "' is neither a 2-category nor a double category");
}

FinTwoCategory load_two(const std::string& path)
{
    Loaded l = load(path);
    if (!l.two)
        throw ParseError("'" + path + "' is not a 2-category");
    return std::move(*l.two);
}

FinDoubleCategory load_dbl(const std::string& path)
{
    Loaded l = load(path);
    if (!l.dbl)
        throw ParseError("'" + path + "' is not a double category");
    return std::move(*l.dbl);
}

// A 2-category argument stands for its vertical embedding.
FinDoubleCategory load_source(const std::string& path)
{
    Loaded l = load(path);
    return l.dbl ? std::move(*l.dbl) : embed_2cat(*l.two, Direction::vertical);
}

void require_valid(const FinDoubleCategory& d)
{
    const ValidationReport r = check_axioms(d);
    if (!r.ok())
        throw InvalidInput(d.name() + " is not a double category: " + r.summary());
}

Json report_json(const ValidationReport& r)
{
    Json v = Json::array();
    for (const auto& x : r.violations)
        v.push_back(Json{{"law", x.law}, {"witnesses", x.witnesses}, {"detail", x.detail}});
    return Json{{"ok", r.ok()}, {"violations", v}};
}

std::string staircase_rows(const Staircase& s)
{
    std::string out;
    for (int j = 0; j <= s.m; ++j) {
        for (int i = 0; i <= s.n; ++i)
            out += static_cast<char>('0' + s.at(i, j));
        out += '\n';
    }
    return out;
}

struct UnitChoice {
    SquareId square;
    std::optional<Companionship> data;
};

std::vector<Companionship> all_companionships(const FinDoubleCategory& d, Handedness kind)
{
    std::vector<Companionship> out;
    for (std::uint32_t a = 0; a < d.v_arrow_count(); ++a)
        for (const auto& c : find_companions(d, VArrowId{a}, kind))
            out.push_back(c);
    return out;
}

// "u<k>" is the k-th entry of all_companionships; otherwise a square name or id.
UnitChoice resolve_unit(const FinDoubleCategory& d, const std::string& text, Handedness kind)
{
    const auto list = all_companionships(d, kind);
    auto digits = [](const std::string& s) { return !s.empty() && std::all_of(s.begin(), s.end(), ::isdigit); };
    if (text.size() > 1 && text[0] == 'u' && digits(text.substr(1)) && !d.find_square(text)) {
        const std::size_t k = std::stoul(text.substr(1));
        if (k >= list.size())
            throw InvalidInput("there are only " + std::to_string(list.size()) + " units");
        return {list[k].unit, list[k]};
    }
    std::optional<SquareId> s = d.find_square(text);
    if (!s && digits(text) && std::stoul(text) < d.square_count())
        s = SquareId{static_cast<std::uint32_t>(std::stoul(text))};
    if (!s)
        throw InvalidInput("no square or unit named '" + text + "'");
    for (const auto& c : list)
        if (c.unit == *s)
            return {*s, c};
    return {*s, std::nullopt};
}

Handedness parse_kind(const std::string& s) { return s == "conjoint" ? Handedness::conjoint : Handedness::companion; }

int print_json(const Json& j)
{
    std::cout << dump(j);
    return kOk;
}

int print_suites(const std::vector<SuiteReport>& reports, const Options& o)
{
    bool failed = false, budget = false;
    for (const auto& r : reports)
        for (const auto& l : r.checks) {
            failed = failed || (!l.ok && !l.budget);
            budget = budget || l.budget;
        }
    if (o.json()) {
        Json all = Json::array();
        for (const auto& r : reports)
            all.push_back(r.to_json());
        std::cout << dump(Json{{"ok", !failed && !budget}, {"suites", all}});
    } else {
        for (const auto& r : reports)
            for (const auto& l : r.checks)
                std::cout << (l.ok ? "PASS " : l.budget ? "BUDGET " : "FAIL ") << r.suite << " " << l.subject << ": "
                          << l.detail << "\n";
    }
    return failed ? kFailure : budget ? kBudget : kOk;
}

// Verbs

int cmd_check_axioms(const std::string& path, const Options& o)
{
    Loaded l = load(path);
    const ValidationReport r = l.two ? check_axioms(*l.two) : check_axioms(*l.dbl);
    if (o.json())
        print_json(report_json(r));
    else if (r.ok())
        std::cout << "ok\n";
    else
        std::cout << r.summary() << "\n";
    return r.ok() ? kOk : kFailure;
}

int cmd_check_thm_c(const std::string& xpath, const std::string& dpath, const Options& o)
{
    const FinDoubleCategory x = load_source(xpath);
    const FinDoubleCategory d = load_dbl(dpath);
    require_valid(x);
    require_valid(d);
    const FunctorArrows fun = functor_arrows(x, d, o.budget);
    bool ok = true;
    Json rows = Json::array();
    std::ostringstream text;
    for (std::uint32_t a = 0; a < fun.h.size(); ++a) {
        const auto r = companion_characterization(fun, a, o.budget);
        ok = ok && r.agree();
        rows.push_back(Json{{"transformation", a},
                            {"is_companion", r.is_companion},
                            {"all_companionable", r.all_companionable},
                            {"witness_matches", r.witness_matches},
                            {"agree", r.agree()}});
        text << "h" << a << " companion=" << r.is_companion << " companionable=" << r.all_companionable
             << " witness=" << r.witness_matches << (r.agree() ? "" : "  DISAGREE") << "\n";
    }
    if (o.json())
        print_json(Json{{"ok", ok}, {"functors", fun.functors.size()}, {"transformations", rows}});
    else
        std::cout << fun.functors.size() << " functors, " << fun.h.size() << " horizontal transformations\n"
                  << text.str() << (ok ? "agree\n" : "disagree\n");
    return ok ? kOk : kFailure;
}

int cmd_check_thm_d(const std::string& xpath, const std::string& ypath, const Options& o)
{
    const FinTwoCategory x = load_two(xpath);
    const FinTwoCategory y = load_two(ypath);
    const FunctorDoubleCategory fun = fun_lax(x, y, o.budget);
    const Fragment hor = fragment(fun.category, Direction::horizontal);
    bool ok = true;
    Json rows = Json::array();
    std::ostringstream text;
    for (std::uint32_t v = 0; v < fun.h.size(); ++v) {
        const auto r = lax_adjoint_characterization(fun, hor, y, v);
        ok = ok && r.agree();
        Json left = Json::array();
        for (OneCellId u : r.left_components)
            left.push_back(y.one_cell(u).name);
        rows.push_back(Json{{"transformation", v},
                            {"right_adjoint", r.right_adjoint},
                            {"has_conjoint", r.has_conjoint},
                            {"pointwise", r.pointwise},
                            {"left_components", left},
                            {"mates_match", r.mates_match},
                            {"agree", r.agree()}});
        text << "h" << v << " right_adjoint=" << r.right_adjoint << " conjoint=" << r.has_conjoint
             << " pointwise=" << r.pointwise << " mates=" << r.mates_match << (r.agree() ? "" : "  DISAGREE") << "\n";
    }
    if (o.json())
        print_json(Json{{"ok", ok}, {"transformations", rows}});
    else
        std::cout << fun.h.size() << " lax transformations\n" << text.str() << (ok ? "agree\n" : "disagree\n");
    return ok ? kOk : kFailure;
}

int cmd_nerve(const std::string& path, const Options& o)
{
    const FinDoubleCategory d = load_dbl(path);
    require_valid(d);
    const FinBisimplicialSet x = materialize(d, o.truncation({2, 2}), o.budget);
    if (o.json())
        return print_json(to_json(x));
    for (Bidegree deg : x.truncation().degrees())
        std::cout << "(" << to_string(deg) << ") " << x.size(deg) << "\n";
    return kOk;
}

std::string describe_two(const FinTwoCategory& k)
{
    std::ostringstream out;
    out << k.name() << ": " << k.object_count() << " objects, " << k.one_cell_count() << " 1-cells, "
        << k.two_cell_count() << " 2-cells\n";
    for (std::uint32_t p = 0; p < k.one_cell_count(); ++p) {
        const OneCell& c = k.one_cell(OneCellId{p});
        out << "  " << c.name << " : " << k.object_name(c.source) << " -> " << k.object_name(c.target) << "\n";
    }
    for (std::uint32_t a = 0; a < k.two_cell_count(); ++a) {
        const TwoCell& c = k.two_cell(TwoCellId{a});
        if (!k.is_identity(TwoCellId{a}))
            out << "  " << c.name << " : " << k.one_cell(c.source).name << " => " << k.one_cell(c.target).name
                << "\n";
    }
    return out.str();
}

std::string describe_dbl(const FinDoubleCategory& d)
{
    std::ostringstream out;
    out << d.name() << ": " << d.object_count() << " objects, " << d.h_arrow_count() << " horizontal, "
        << d.v_arrow_count() << " vertical, " << d.square_count() << " squares\n";
    for (std::uint32_t s = 0; s < d.square_count(); ++s) {
        const Square& q = d.square(SquareId{s});
        out << "  " << q.name << " : top " << d.h_arrow(q.top).name << ", bottom " << d.h_arrow(q.bottom).name
            << ", left " << d.v_arrow(q.left).name << ", right " << d.v_arrow(q.right).name << "\n";
    }
    return out.str();
}

int cmd_fragment(const std::string& path, const std::string& dir, const Options& o)
{
    const FinDoubleCategory d = load_dbl(path);
    require_valid(d);
    const Fragment fr = fragment(d, dir == "v" ? Direction::vertical : Direction::horizontal);
    if (o.json())
        return print_json(to_json(fr.category));
    std::cout << describe_two(fr.category);
    return kOk;
}

int cmd_companions(const std::string& path, const std::string& arrow, Handedness kind, const Options& o)
{
    const FinDoubleCategory d = load_dbl(path);
    require_valid(d);
    std::optional<VArrowId> only;
    if (!arrow.empty()) {
        only = d.find_v_arrow(arrow);
        if (!only)
            throw InvalidInput("no vertical arrow named '" + arrow + "'");
    }
    Json rows = Json::array();
    std::size_t k = 0;
    for (const auto& c : all_companionships(d, kind)) {
        const std::string label = "u" + std::to_string(k++);
        if (only && c.f != *only)
            continue;
        rows.push_back(Json{{"label", label},
                            {"vertical", d.v_arrow(c.f).name},
                            {"horizontal", d.h_arrow(c.h).name},
                            {"unit", d.square(c.unit).name},
                            {"counit", d.square(c.counit).name}});
        if (!o.json())
            std::cout << label << " " << d.v_arrow(c.f).name << " ~ " << d.h_arrow(c.h).name << "  unit "
                      << d.square(c.unit).name << "  counit " << d.square(c.counit).name << "\n";
    }
    if (o.json())
        print_json(rows);
    else if (rows.empty())
        std::cout << "none\n";
    return kOk;
}

int cmd_extend(const std::string& path, const std::string& unit, Handedness kind, const Options& o)
{
    const FinDoubleCategory d = load_dbl(path);
    require_valid(d);
    const UnitChoice u = resolve_unit(d, unit, kind);
    if (!u.data)
        throw InvalidInput("'" + d.square(u.square).name + "' is not a unit");
    const Truncation t = o.truncation({2, 2});
    const CompPresheaf comp = comp_keyed(t);
    const LazyNerve nerve(d, t);
    const BisimplicialMap f = extend_companionship(comp, nerve, *u.data);
    if (o.json()) {
        Json j = to_json(f);
        Json cells = Json::object();
        for (Bidegree deg : t.degrees()) {
            Json level = Json::array();
            for (CellId c = 0; c < comp.set.size(deg); ++c)
                level.push_back({comp.set.label(deg, c), nerve.describe(deg, f(deg, c))});
            cells[std::to_string(deg.n) + "," + std::to_string(deg.m)] = level;
        }
        j["unit"] = d.square(u.square).name;
        j["cells"] = cells;
        return print_json(j);
    }
    std::cout << "unit " << d.square(u.square).name << "\n";
    for (Bidegree deg : t.degrees())
        for (CellId c = 0; c < comp.set.size(deg); ++c)
            std::cout << "(" << to_string(deg) << ") " << comp.set.label(deg, c) << " -> "
                      << nerve.describe(deg, f(deg, c)) << "\n";
    return kOk;
}

int cmd_count_extensions(const std::string& path, const std::string& unit, Handedness kind, const Options& o)
{
    const FinDoubleCategory d = load_dbl(path);
    require_valid(d);
    const UnitChoice u = resolve_unit(d, unit, kind);
    const Truncation t = o.truncation({2, 2});
    const CompPresheaf comp = comp_keyed(t);
    const LazyNerve nerve(d, t);
    const std::uint64_t count = count_extensions(comp, nerve, u.square, kind, o.budget);
    if (o.json())
        return print_json(Json{{"unit", d.square(u.square).name}, {"count", count}});
    std::cout << count << "\n";
    return kOk;
}

int cmd_staircases(int n, int m, Handedness kind, const Options& o)
{
    if (n < 0 || m < 0)
        throw InvalidInput("negative degree");
    std::vector<std::string> bits;
    for (const Staircase& s : comp_cells(n, m)) {
        if (kind == Handedness::companion) {
            bits.push_back(s.bits);
            continue;
        }
        std::string r(s.bits.size(), '0');
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= m; ++j)
                r[static_cast<std::size_t>(i * (m + 1) + j)] = static_cast<char>('0' + s.at(n - i, j));
        bits.push_back(r);
    }
    std::sort(bits.begin(), bits.end());
    if (o.json())
        return print_json(bits);
    for (const auto& b : bits)
        std::cout << b << "\n";
    return kOk;
}

int cmd_sigma(int n, const Options& o)
{
    if (n < 1)
        throw InvalidInput("sigma needs n >= 1");
    const Staircase s = sigma(n);
    if (o.json())
        return print_json(Json{{"n", n}, {"m", n}, {"bits", s.bits}});
    std::cout << s.bits << "\n" << staircase_rows(s);
    return kOk;
}

int cmd_two(const FinTwoCategory& k, const Options& o)
{
    if (o.json())
        return print_json(to_json(k));
    std::cout << describe_two(k);
    return kOk;
}

int cmd_sq(const std::string& path, const Options& o)
{
    const FinDoubleCategory sq = squares_dblcat(load_two(path));
    if (!o.levels.empty()) {
        const FinBisimplicialSet x = materialize(sq, o.truncation({2, 2}), o.budget);
        if (o.json())
            return print_json(to_json(x));
        for (Bidegree deg : x.truncation().degrees())
            std::cout << "(" << to_string(deg) << ") " << x.size(deg) << "\n";
        return kOk;
    }
    if (o.json())
        return print_json(to_json(sq));
    std::cout << describe_dbl(sq);
    return kOk;
}

int print_functor_category(const FunctorDoubleCategory& fun, const Options& o)
{
    if (o.json()) {
        Json functors = Json::array();
        for (const auto& f : fun.functors)
            functors.push_back(describe_functor(fun.source, fun.target, f));
        return print_json(Json{{"functors", functors},
                               {"h_transformations", fun.h.size()},
                               {"v_transformations", fun.v.size()},
                               {"modifications", fun.squares.size()},
                               {"category", to_json(fun.category)}});
    }
    std::cout << fun.functors.size() << " functors, " << fun.h.size() << " horizontal, " << fun.v.size()
              << " vertical, " << fun.squares.size() << " squares\n";
    for (std::size_t i = 0; i < fun.functors.size(); ++i)
        std::cout << "F" << i << " " << describe_functor(fun.source, fun.target, fun.functors[i]) << "\n";
    return kOk;
}

int cmd_verify(const std::string& suite, const std::string& dir, int filtration_n, const Options& o)
{
    const FixtureCatalog catalog = load_catalog(dir);
    const Truncation t = o.truncation({3, 3});
    std::vector<SuiteReport> reports;
    const bool all = suite == "all";
    if (all || suite == "horns")
        reports.push_back(verify_horns(catalog, t.n, t.m, o.budget));
    if (all || suite == "filtration")
        reports.push_back(verify_filtration_suite(filtration_n, t));
    if (all || suite == "thmC")
        reports.push_back(verify_thm_c(catalog, o.budget));
    if (all || suite == "thmD")
        reports.push_back(verify_thm_d(catalog, o.budget));
    if (all || suite == "fragments")
        reports.push_back(verify_fragments(catalog));
    return print_suites(reports, o);
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Finite double categories, their nerves, companions and conjoints"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--levels", o.levels, "Truncation N M")->expected(2)->check(CLI::NonNegativeNumber);
    app.add_option("--budget", o.budget, "Cap on enumerated candidates");
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "table"}));

    std::string file, file2, arrow, unit, kind = "companion", dir = "h", fixtures = "fixtures", suite;
    int n = 0, m = 0, filtration_n = 4;
    std::function<int()> run;

    auto* check = app.add_subcommand("check", "Axioms or a characterization check");
    std::string what, x_path, d_path;
    check->add_option("what", what)->required()->check(CLI::IsMember({"axioms", "thmC", "thmD"}));
    check->add_option("file", file, "Structure for 'axioms'");
    check->add_option("--x", x_path, "Source for thmC and thmD");
    check->add_option("--d", d_path, "Target for thmC and thmD");
    check->callback([&] {
        run = [&] {
            if (what == "axioms") {
                if (file.empty())
                    throw ParseError("check axioms needs a file");
                return cmd_check_axioms(file, o);
            }
            if (x_path.empty() || d_path.empty())
                throw ParseError("check " + what + " needs --x and --d");
            return what == "thmC" ? cmd_check_thm_c(x_path, d_path, o) : cmd_check_thm_d(x_path, d_path, o);
        };
    });

    auto* nerve = app.add_subcommand("nerve", "Materialized nerve of a double category");
    nerve->add_option("file", file)->required();
    nerve->callback([&] { run = [&] { return cmd_nerve(file, o); }; });

    auto* frag = app.add_subcommand("fragment", "Horizontal or vertical fragment");
    frag->add_option("file", file)->required();
    frag->add_option("--dir", dir, "h or v")->check(CLI::IsMember({"h", "v"}));
    frag->callback([&] { run = [&] { return cmd_fragment(file, dir, o); }; });

    for (auto [name, k] : {std::pair{"companion", Handedness::companion}, std::pair{"conjoint", Handedness::conjoint}}) {
        auto* sub = app.add_subcommand(name, std::string("List ") + name + " data with their unit labels");
        sub->add_option("file", file)->required();
        sub->add_option("--arrow", arrow, "Vertical arrow name");
        sub->callback([&, k = k] { run = [&, k] { return cmd_companions(file, arrow, k, o); }; });
    }

    auto* extend = app.add_subcommand("extend", "Extend a unit to a map out of comp or conj");
    auto* count = app.add_subcommand("count-extensions", "Count maps out of comp or conj sending sigma(1) to a square");
    for (auto* sub : {extend, count}) {
        sub->add_option("file", file)->required();
        sub->add_option("--unit", unit, "Square name or id, or u<k> as listed by 'companion'")->required();
        sub->add_option("--kind", kind)->check(CLI::IsMember({"companion", "conjoint"}));
    }
    extend->callback([&] { run = [&] { return cmd_extend(file, unit, parse_kind(kind), o); }; });
    count->callback([&] { run = [&] { return cmd_count_extensions(file, unit, parse_kind(kind), o); }; });

    for (auto [name, k] : {std::pair{"comp", Handedness::companion}, std::pair{"conj", Handedness::conjoint}}) {
        auto* sub = app.add_subcommand(name, std::string("Cells of ") + name + " at (n, m) as bit strings");
        sub->add_option("n", n)->required();
        sub->add_option("m", m)->required();
        sub->callback([&, k = k] { run = [&, k] { return cmd_staircases(n, m, k, o); }; });
    }

    auto* sig = app.add_subcommand("sigma", "The staircase sigma(n)");
    sig->add_option("n", n)->required();
    sig->callback([&] { run = [&] { return cmd_sigma(n, o); }; });

    auto* gray = app.add_subcommand("gray", "The Gray grid [n] x [m]");
    auto* globe = app.add_subcommand("globe", "The globular 2-category [n; m, ..., m]");
    for (auto* sub : {gray, globe}) {
        sub->add_option("n", n)->required()->check(CLI::NonNegativeNumber);
        sub->add_option("m", m)->required()->check(CLI::NonNegativeNumber);
    }
    gray->callback([&] { run = [&] { return cmd_two(gray_grid(n, m), o); }; });
    globe->callback([&] { run = [&] { return cmd_two(globe_grid(n, m), o); }; });

    auto* sq = app.add_subcommand("sq", "Squares double category of a locally posetal 2-category");
    sq->add_option("file", file)->required();
    sq->callback([&] { run = [&] { return cmd_sq(file, o); }; });

    auto* dblfun = app.add_subcommand("dblfun", "Double category of double functors C -> D");
    dblfun->add_option("c", file)->required();
    dblfun->add_option("d", file2)->required();
    dblfun->callback([&] {
        run = [&] {
            const FinDoubleCategory c = load_source(file), d = load_dbl(file2);
            require_valid(c);
            require_valid(d);
            return print_functor_category(dbl_fun(c, d, o.budget), o);
        };
    });

    auto* funlax = app.add_subcommand("funlax", "Functors X -> Sq(Y) with lax transformations");
    funlax->add_option("x", file)->required();
    funlax->add_option("y", file2)->required();
    funlax->callback([&] {
        run = [&] { return print_functor_category(fun_lax(load_two(file), load_two(file2), o.budget), o); };
    });

    auto* verify = app.add_subcommand("verify", "Run a property suite over the fixture catalog");
    verify->add_option("suite", suite)
        ->required()
        ->check(CLI::IsMember({"all", "horns", "filtration", "thmC", "thmD", "fragments"}));
    verify->add_option("--fixtures", fixtures, "Fixture directory");
    verify->add_option("--stages", filtration_n, "Filtration stages")->check(CLI::PositiveNumber);
    verify->callback([&] { run = [&] { return cmd_verify(suite, fixtures, filtration_n, o); }; });

    auto* cat = app.add_subcommand("catalog", "Write the built-in fixture catalog as JSON");
    cat->add_option("dir", fixtures)->required();
    cat->callback([&] {
        run = [&] {
            write_catalog(builtin_catalog(), fixtures);
            return int{kOk};
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInput;
    }
    try {
        return run();
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kBudget;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInput;
    } catch (const InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInput;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFailure;
    }
}
