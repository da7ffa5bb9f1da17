#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dblcat/bisimplicial.hpp"
#include "dblcat/keyed.hpp"

namespace dblcat {

using Monotone = std::vector<int>;

// Monotone maps [a] -> [n] in lexicographic order.
std::vector<Monotone> monotone_maps(int a, int n);
Monotone delete_entry(const Monotone& f, int i);     // f ∘ d_i
Monotone duplicate_entry(const Monotone& f, int i);  // f ∘ s_i
bool is_constant(const Monotone& f);
bool is_surjective(const Monotone& f, int n);
std::string format_monotone(const Monotone& f);

struct RepCell {
    Monotone h;
    Monotone v;
    friend auto operator<=>(const RepCell&, const RepCell&) = default;
};

// A cell of a sub-presheaf or quotient of a representable; `collapsed` marks the
// point a quotient shape collapses to.
struct ShapeCell {
    bool collapsed = false;
    RepCell cell;
    friend auto operator<=>(const ShapeCell&, const ShapeCell&) = default;
};

enum class ShapeKind { representable, boundary, spine_h, spine_v, horn, lower_triangle, l_quotient, gamma_l };

struct ShapeSpec {
    ShapeKind kind = ShapeKind::representable;
    int n = 0;
    int m = 0;
    std::set<int> S;
    std::set<int> T;

    static ShapeSpec representable(int n, int m) { return {ShapeKind::representable, n, m, {}, {}}; }
    static ShapeSpec boundary(int n, int m) { return {ShapeKind::boundary, n, m, {}, {}}; }
    static ShapeSpec spine_h(int n, int m) { return {ShapeKind::spine_h, n, m, {}, {}}; }
    static ShapeSpec spine_v(int n, int m) { return {ShapeKind::spine_v, n, m, {}, {}}; }
    static ShapeSpec horn(std::set<int> S, std::set<int> T, int n, int m)
    {
        return {ShapeKind::horn, n, m, std::move(S), std::move(T)};
    }
    static ShapeSpec lower_triangle() { return {ShapeKind::lower_triangle, 1, 1, {}, {}}; }
    static ShapeSpec l_quotient(int n, int m) { return {ShapeKind::l_quotient, n, m, {}, {}}; }
    static ShapeSpec gamma_l(std::set<int> T, int n, int m) { return {ShapeKind::gamma_l, n, m, {}, std::move(T)}; }
};

// CLI syntax, e.g. "horn:S=1:T=:n=2:m=1", "L-quotient:n=2:m=3", "gamma-L:T=0:n=1:m=2".
ShapeSpec parse_shape(const std::string& text);
std::string format_shape(const ShapeSpec& spec);
void validate(const ShapeSpec& spec);

struct Shape {
    ShapeSpec spec;
    KeyedPresheaf<ShapeCell> cells;
    // Sub-presheaf shapes: the inclusion into `ambient`.
    std::optional<FinBisimplicialSet> ambient;
    std::optional<BisimplicialMap> inclusion;
    // Quotient shapes: the quotient map out of the uncollapsed presheaf.
    std::optional<FinBisimplicialSet> uncollapsed;
    std::optional<BisimplicialMap> quotient;

    const FinBisimplicialSet& set() const { return cells.set; }
};

Shape build_shape(const ShapeSpec& spec, Truncation t);
FinBisimplicialSet representable(int n, int m, Truncation t);

// Membership tests on cells of [n,m], shared with other modules.
bool in_horn(const RepCell& c, const std::set<int>& S, const std::set<int>& T, int n, int m);
bool in_spine(const Monotone& f);
bool in_l_collapse(const RepCell& c);

bool is_convex(const std::set<int>& s);
// Horns with [n] \ S or [m] \ T not convex, for n <= max_n and m <= max_m.
std::vector<ShapeSpec> nonconvex_horns(int max_n, int max_m);

}  // namespace dblcat
