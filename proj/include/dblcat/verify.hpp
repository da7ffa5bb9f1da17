#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dblcat/bisimplicial.hpp"
#include "dblcat/double_category.hpp"
#include "dblcat/json_io.hpp"
#include "dblcat/two_category.hpp"

namespace dblcat {

// Fixtures keyed by file stem, sorted by stem.
struct FixtureCatalog {
    std::vector<std::pair<std::string, FinTwoCategory>> two;
    std::vector<std::pair<std::string, FinDoubleCategory>> dbl;

    const FinTwoCategory* find_two(const std::string& stem) const;
    const FinDoubleCategory* find_dbl(const std::string& stem) const;
    bool empty() const { return two.empty() && dbl.empty(); }
};

// "chain1" -> "poset1", "sq-chain1" -> "sq_poset1"; the terminal 2-category is "terminal_2cat".
std::string fixture_stem(const std::string& catalog_name, bool two_category);
// The built-in catalog plus the broken interchange fixture.
FixtureCatalog builtin_catalog();
// Every *.json file of dir. Throws ParseError if dir is missing or holds no fixtures.
FixtureCatalog load_catalog(const std::string& dir);
void write_catalog(const FixtureCatalog& catalog, const std::string& dir);

// Name-based comparison data a -> b: objects and 1-cells by name, 2-cells by boundary.
// Empty if some name of a is missing in b.
std::optional<TwoFunctorData> match_by_name(const FinTwoCategory& a, const FinTwoCategory& b);

struct CheckLine {
    std::string subject;
    bool ok = true;
    bool budget = false;  // failed because the budget was exceeded
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckLine> checks;
    bool ok() const;
    bool budget_exceeded() const;
    Json to_json() const;
};

// Unique lifts against every horn with non-convex complement, n <= max_n, m <= max_m, for
// each valid double category fixture.
SuiteReport verify_horns(const FixtureCatalog& catalog, int max_n, int max_m, std::uint64_t budget = kDefaultBudget);
// is_segal on the nerve of each valid double category fixture at truncation t.
SuiteReport verify_segal(const FixtureCatalog& catalog, Truncation t, std::uint64_t budget = kDefaultBudget);
SuiteReport verify_filtration_suite(int n, Truncation t);
// Every horizontal transformation X -> D for X in {free_v_arrow, free_square, poset1 embedded
// vertically} and every valid double category fixture D.
SuiteReport verify_thm_c(const FixtureCatalog& catalog, std::uint64_t budget = kDefaultBudget);
// Every lax transformation X -> Y for X in {terminal_2cat, poset1} and every 2-category Y.
SuiteReport verify_thm_d(const FixtureCatalog& catalog, std::uint64_t budget = kDefaultBudget);
// Both fragments of Sq(X) recover X, for every 2-category fixture X.
SuiteReport verify_fragments(const FixtureCatalog& catalog);

}  // namespace dblcat
