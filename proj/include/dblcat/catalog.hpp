#pragma once

#include <string>
#include <vector>

#include "dblcat/double_category.hpp"
#include "dblcat/two_category.hpp"

namespace dblcat {

// Two objects A, B with u : A -> B left adjoint to v : B -> A, u;v = id_A and v;u <= id_B.
FinTwoCategory galois_2cat();

FinDoubleCategory terminal_dblcat();
FinDoubleCategory free_h_arrow();
FinDoubleCategory free_v_arrow();
FinDoubleCategory free_square();
// A 2 by 2 grid of squares alpha, beta / gamma, delta whose two composites differ.
FinDoubleCategory broken_interchange();

struct TwoCatEntry {
    std::string name;
    FinTwoCategory category;
};
struct DblCatEntry {
    std::string name;
    FinDoubleCategory category;
};

// Locally posetal 2-categories: terminal, [1], [2], [1]x[1], galois.
std::vector<TwoCatEntry> two_category_catalog();
// Valid double categories: terminal, free cells, Sq of each locally posetal entry except terminal.
std::vector<DblCatEntry> double_category_catalog();

}  // namespace dblcat
