#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dblcat/bisimplicial.hpp"
#include "dblcat/double_category.hpp"
#include "dblcat/nerve.hpp"
#include "dblcat/two_category.hpp"

namespace dblcat {

// A poset as a 2-category with identity 2-cells only. `leq` generates the order; 1-cells are
// named "x-y".
FinTwoCategory poset_2cat(const std::string& name, const std::vector<std::string>& elements,
                          const std::vector<std::pair<int, int>>& leq);
FinTwoCategory chain(int n);                 // [n]
FinTwoCategory chain_product(int a, int b);  // [a] x [b]
FinTwoCategory terminal_2cat();

// Lattice path from (i, j) given as moves: R increases i, D increases j.
struct GrayPath {
    int i = 0;
    int j = 0;
    std::string moves;
};
std::string format_path(const GrayPath& p);
GrayPath parse_path(const std::string& name);
// Every prefix of q has at least as many D moves as the same prefix of p.
bool path_leq(const std::string& p, const std::string& q);

// The oplax Gray grid [n] ⊗ [m]: points, lattice paths, and p => q whenever path_leq(p, q).
FinTwoCategory gray_grid(int n, int m);
// The globular 2-category [n; m, ..., m]: hom(i, j) = [m]^(j - i) ordered pointwise.
FinTwoCategory globe_grid(int n, int m);

// Squares (F, G, f, g) with F;g <= f;G. Throws InvalidInput unless x is locally posetal.
FinDoubleCategory squares_dblcat(const FinTwoCategory& x);
// The square of squares_dblcat(x) with the given boundary, if any.
std::string square_name(const FinTwoCategory& x, OneCellId top, OneCellId left, OneCellId right, OneCellId bottom);

// A 2-functor gray_grid(n, m) -> x, given by the images of points and unit edges.
struct GrayFunctor {
    int n = 0;
    int m = 0;
    std::vector<ObjectId> points;  // [i * (m + 1) + j]
    std::vector<OneCellId> h;      // (i, j) -> (i + 1, j)
    std::vector<OneCellId> v;      // (i, j) -> (i, j + 1), [i * m + j]
};

// All 2-functors into a locally posetal x by constraint propagation over the grid.
std::vector<GrayFunctor> gray_functors(const FinTwoCategory& x, int n, int m, std::uint64_t budget = kDefaultBudget);
// The full assignment on gray_grid(n, m), for check_two_functor.
TwoFunctorData gray_functor_data(const FinTwoCategory& grid, const FinTwoCategory& x, const GrayFunctor& f);
// The corresponding cell of the nerve of squares_dblcat(x).
Grid gray_functor_grid(const FinDoubleCategory& sq, const GrayFunctor& f);

// gray_grid(n, m) -> globe_grid(n, m): a path goes to the rows of its R moves.
TwoFunctorData iota_h_globe(const FinTwoCategory& grid, const FinTwoCategory& globe);
// gray_grid(n, m) -> globe_grid(m, n): a path goes to n - i for each D move in column i.
TwoFunctorData iota_v_globe(const FinTwoCategory& grid, const FinTwoCategory& globe);

// embed_2cat(x, horizontal) -> squares_dblcat(x) and embed_2cat(x, vertical) -> squares_dblcat(x).
std::pair<DblFunctor, DblFunctor> iota_maps(const FinTwoCategory& x, const FinDoubleCategory& hor,
                                            const FinDoubleCategory& vert, const FinDoubleCategory& sq);

struct GlobeQuotientReport {
    struct Level {
        Bidegree degree;
        std::size_t quotient = 0;
        std::size_t nerve = 0;
    };
    bool natural = false;    // the induced map out of the quotient exists
    bool injective = false;
    bool bijective = false;
    std::vector<Level> levels;
    std::string detail;      // first failure or first level where the sizes differ
};

// Compares the quotient of [n, m] collapsing each vertical line {i} x [m] with the nerve of
// embed_2cat(globe_grid(n, m), horizontal) at truncation t, through the induced map.
GlobeQuotientReport check_globe_quotient(int n, int m, Truncation t);

// Maps from the nerve of embed_2cat(globe_grid(n, m), horizontal) into the nerve of
// embed_2cat(y, horizontal) biject with cells at (n, m) by evaluation at the universal cell.
std::optional<std::string> globe_restriction_bijective(int n, int m, const FinTwoCategory& y, Truncation t);

}  // namespace dblcat
