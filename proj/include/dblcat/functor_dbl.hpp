#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dblcat/double_category.hpp"
#include "dblcat/two_category.hpp"

namespace dblcat {

// alpha : F => G with a horizontal arrow per object and a square per vertical arrow f : x -> x'
// (top alpha_x, bottom alpha_x', left F f, right G f).
struct HTransformation {
    std::uint32_t source = 0;  // functor index
    std::uint32_t target = 0;
    std::vector<HArrowId> components;
    std::vector<SquareId> squares;
    friend auto operator<=>(const HTransformation&, const HTransformation&) = default;
};

// phi : F => F' with a vertical arrow per object and a square per horizontal arrow a : x -> y
// (top F a, bottom F' a, left phi_x, right phi_y).
struct VTransformation {
    std::uint32_t source = 0;
    std::uint32_t target = 0;
    std::vector<VArrowId> components;
    std::vector<SquareId> squares;
    friend auto operator<=>(const VTransformation&, const VTransformation&) = default;
};

// A square per object with boundary (top_x, bottom_x, left_x, right_x).
struct Modification {
    std::uint32_t top = 0;  // HTransformation index
    std::uint32_t bottom = 0;
    std::uint32_t left = 0;  // VTransformation index
    std::uint32_t right = 0;
    std::vector<SquareId> components;
    friend auto operator<=>(const Modification&, const Modification&) = default;
};

// Functors, horizontal and vertical transformations, each list sorted.
struct FunctorArrows {
    FinDoubleCategory source;
    FinDoubleCategory target;
    std::vector<DblFunctor> functors;
    std::vector<HTransformation> h;
    std::vector<VTransformation> v;

    std::optional<std::uint32_t> find_h(const HTransformation& a) const;
    std::optional<std::uint32_t> find_v(const VTransformation& a) const;
    std::uint32_t h_identity(std::uint32_t f) const;
    std::uint32_t v_identity(std::uint32_t f) const;
};

// Object, arrow and square ids of `category` index functors, h, v and squares.
struct FunctorDoubleCategory : FunctorArrows {
    std::vector<Modification> squares;
    FinDoubleCategory category;
};

// All strict double functors c -> d in lexicographic order of their assignments.
std::vector<DblFunctor> dbl_functors(const FinDoubleCategory& c, const FinDoubleCategory& d,
                                     std::uint64_t budget = kDefaultBudget);
std::vector<HTransformation> h_transformations(const FinDoubleCategory& c, const FinDoubleCategory& d,
                                               const std::vector<DblFunctor>& functors, std::uint32_t f,
                                               std::uint32_t g, std::uint64_t budget = kDefaultBudget);
std::vector<VTransformation> v_transformations(const FinDoubleCategory& c, const FinDoubleCategory& d,
                                               const std::vector<DblFunctor>& functors, std::uint32_t f,
                                               std::uint32_t g, std::uint64_t budget = kDefaultBudget);

// Modifications with the given boundary, in lexicographic order.
std::vector<Modification> modifications(const FunctorArrows& fun, std::uint32_t top, std::uint32_t bottom,
                                        std::uint32_t left, std::uint32_t right,
                                        std::uint64_t budget = kDefaultBudget);

// Throws BudgetExceeded once more than `budget` candidates have been tried in total.
FunctorArrows functor_arrows(const FinDoubleCategory& c, const FinDoubleCategory& d,
                             std::uint64_t budget = kDefaultBudget);
FunctorDoubleCategory dbl_fun(const FinDoubleCategory& c, const FinDoubleCategory& d,
                              std::uint64_t budget = kDefaultBudget);
FunctorDoubleCategory vertical_cotensor(const FinTwoCategory& x, const FinDoubleCategory& d,
                                        std::uint64_t budget = kDefaultBudget);
// Horizontal arrows are the lax transformations x -> y. Throws InvalidInput unless y is
// locally posetal.
FunctorDoubleCategory fun_lax(const FinTwoCategory& x, const FinTwoCategory& y,
                              std::uint64_t budget = kDefaultBudget);

// Short text for a functor: the images of objects and of non-identity arrows.
std::string describe_functor(const FinDoubleCategory& c, const FinDoubleCategory& d, const DblFunctor& f);

// Companionship data for alpha in the functor double category, found without building its
// squares: a vertical transformation and unit and counit modifications satisfying the triangle
// identities componentwise.
struct TransformationCompanion {
    std::uint32_t v = 0;
    Modification unit;
    Modification counit;
};
std::vector<TransformationCompanion> transformation_companions(const FunctorArrows& fun, std::uint32_t alpha,
                                                               std::uint64_t budget = kDefaultBudget);

struct CompanionCharacterization {
    bool is_companion = false;        // alpha has a companion in the functor double category
    bool all_companionable = false;   // every naturality square of alpha is companionable in d
    std::optional<std::uint32_t> witness;  // vertical transformation built from pointwise data
    bool witness_matches = false;     // the witness is a companion of alpha
    bool agree() const { return is_companion == all_companionable && is_companion == witness_matches; }
};

// The witness has companions of alpha_x as components and, over a : x -> y, the vertical
// composite of [F a | unit_y] over [counit_x | G a].
CompanionCharacterization companion_characterization(const FunctorArrows& fun, std::uint32_t alpha,
                                                     std::uint64_t budget = kDefaultBudget);

// A square of unit shape in the functor double category is a companionship unit iff every
// component is one in the target. Returns the first square where this fails.
std::optional<std::uint32_t> pointwise_unit_mismatch(const FunctorDoubleCategory& fun);

struct LaxAdjointCharacterization {
    bool right_adjoint = false;  // in the horizontal fragment
    bool has_conjoint = false;
    bool pointwise = false;      // components have left adjoints and all mates are invertible
    std::vector<OneCellId> left_components;     // u_x when every component has a left adjoint
    std::optional<std::uint32_t> left_adjoint;  // the strict transformation with components u_x
    bool mates_match = false;  // left_adjoint exists iff pointwise, and equals the conjoint
    bool agree() const { return right_adjoint == has_conjoint && has_conjoint == pointwise && mates_match; }
};

// `fun` must come from fun_lax(x, y) and `horizontal` be its horizontal fragment.
LaxAdjointCharacterization lax_adjoint_characterization(const FunctorDoubleCategory& fun, const Fragment& horizontal,
                                                        const FinTwoCategory& y, std::uint32_t v);

}  // namespace dblcat
