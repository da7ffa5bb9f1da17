#pragma once

#include <string>
#include <vector>

#include "dblcat/bisimplicial.hpp"
#include "dblcat/double_category.hpp"
#include "dblcat/keyed.hpp"
#include "dblcat/nerve.hpp"
#include "dblcat/shapes.hpp"

namespace dblcat {

// Monotone map [n] x [m] -> [1]. bits[i * (m + 1) + j] is the value at horizontal position i
// and vertical position j, so the string is row-major over i.
struct Staircase {
    int n = 0;
    int m = 0;
    std::string bits;

    int at(int i, int j) const { return bits[static_cast<std::size_t>(i * (m + 1) + j)] - '0'; }
    friend auto operator<=>(const Staircase&, const Staircase&) = default;
};

Staircase parse_staircase(int n, int m, const std::string& bits);
bool is_monotone(const Staircase& s);

// All staircases of shape (n, m), ordered by bit string.
std::vector<Staircase> comp_cells(int n, int m);

// s(i, j) = 0 iff j <= n - i, at bidegree (n, n).
Staircase sigma(int n);

// s composed with a x b.
Staircase restrict_staircase(const Staircase& s, const Monotone& a, const Monotone& b);
Staircase staircase_face(Direction dir, int i, const Staircase& s);
Staircase staircase_degeneracy(Direction dir, int i, const Staircase& s);

using CompPresheaf = KeyedPresheaf<Staircase>;
CompPresheaf comp_keyed(Truncation t);
// comp, or its horizontal opposite conj. Cell ids and labels are shared by both.
FinBisimplicialSet comp_presheaf(Truncation t, Handedness which = Handedness::companion);

// The map from a shape to comp picking out the cell x at the shape's top degree.
BisimplicialMap yoneda_map(const Shape& shape, const CompPresheaf& comp, const Staircase& x);

struct FiltrationReport {
    bool ok = true;         // every attaching step holds
    bool exhausts = false;  // S_n contains every cell of comp within the truncation
    std::vector<std::string> lines;
};

// S_k is generated by sigma(1), ..., sigma(k). Checks that S_1 is the image of L, that each
// S_{k+1} is S_k with L[k, k+1] attached along Gamma^0_L[k, k+1] and then L[k+1, k+1]
// attached along Gamma^0_L[k+1, k+1], and whether S_n contains every cell of comp within t.
FiltrationReport verify_filtration(int n, Truncation t);

// The grid for a staircase: corner patterns select identity squares, the unit, the counit, or
// identity squares on f and on the horizontal arrow. For conjunction data the staircase is
// read through the horizontal opposite.
Grid staircase_grid(const FinDoubleCategory& d, const Companionship& data, const Staircase& s);

// comp -> nerve (or conj -> nerve for conjunction data). Throws InvalidInput if the triangle
// identities fail.
BisimplicialMap extend_companionship(const CompPresheaf& comp, const LazyNerve& nerve, const Companionship& data);

// Maps comp -> nerve (conj -> nerve) sending sigma(1) to the square eta, by exhaustive search.
std::uint64_t count_extensions(const CompPresheaf& comp, const LazyNerve& nerve, SquareId eta,
                               Handedness kind = Handedness::companion, std::uint64_t budget = kDefaultBudget);

}  // namespace dblcat
