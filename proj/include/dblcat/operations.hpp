#pragma once

#include <vector>

#include "dblcat/bisimplicial.hpp"

namespace dblcat {

struct Pushout {
    FinBisimplicialSet object;
    BisimplicialMap from_left;   // B -> P
    BisimplicialMap from_right;  // C -> P
};

// Pushout of B <-f- A -g-> C. Classes are numbered by their first member, B before C.
Pushout pushout(const FinBisimplicialSet& a, const FinBisimplicialSet& b, const FinBisimplicialSet& c,
                const BisimplicialMap& f, const BisimplicialMap& g);

// The map out of a pushout induced by u: B -> X and v: C -> X. Throws InvalidInput if u and v
// disagree on some class.
BisimplicialMap copair(const Pushout& p, const BisimplicialMap& u, const BisimplicialMap& v);

struct Product {
    FinBisimplicialSet object;
    BisimplicialMap first;
    BisimplicialMap second;
};

Product product(const FinBisimplicialSet& x, const FinBisimplicialSet& y);

enum class Duality { transpose, hop, vop };

FinBisimplicialSet dualize(const FinBisimplicialSet& x, Duality which);
// The same map between dualized source and target.
BisimplicialMap dualize(const BisimplicialMap& f, Duality which);

struct Subpresheaf {
    FinBisimplicialSet object;
    BisimplicialMap inclusion;
};

// Smallest sub-presheaf containing the marked cells (closed under all structure maps).
// `marked` is indexed by Truncation::index.
Subpresheaf generated_subpresheaf(const FinBisimplicialSet& x, std::vector<std::vector<bool>> marked);
Subpresheaf image(const BisimplicialMap& f, const FinBisimplicialSet& target);

// Level-by-level cell equality of two sub-presheaves given by inclusions into the same target.
bool same_image(const BisimplicialMap& f, const BisimplicialMap& g);

}  // namespace dblcat
