#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "dblcat/bisimplicial.hpp"
#include "dblcat/errors.hpp"
#include "dblcat/ids.hpp"
#include "dblcat/two_category.hpp"
#include "dblcat/validation.hpp"

namespace dblcat {

struct HArrow {
    std::string name;
    ObjectId source;
    ObjectId target;
};

struct VArrow {
    std::string name;
    ObjectId source;
    ObjectId target;
};

//   top
// left  right
//  bottom
struct Square {
    std::string name;
    HArrowId top;
    HArrowId bottom;
    VArrowId left;
    VArrowId right;
};

// Strict double category given by tables. Arrow composition is diagrammatic. sq_hcomp(a, b)
// puts a on the left of b; sq_vcomp(a, b) puts a on top of b.
class FinDoubleCategory {
public:
    class Builder;

    const std::string& name() const { return name_; }
    std::size_t object_count() const { return objects_.size(); }
    std::size_t h_arrow_count() const { return h_arrows_.size(); }
    std::size_t v_arrow_count() const { return v_arrows_.size(); }
    std::size_t square_count() const { return squares_.size(); }

    const std::string& object_name(ObjectId x) const { return objects_.at(x.value); }
    const HArrow& h_arrow(HArrowId a) const { return h_arrows_.at(a.value); }
    const VArrow& v_arrow(VArrowId a) const { return v_arrows_.at(a.value); }
    const Square& square(SquareId s) const { return squares_.at(s.value); }
    std::optional<ObjectId> find_object(const std::string& name) const;
    std::optional<HArrowId> find_h_arrow(const std::string& name) const;
    std::optional<VArrowId> find_v_arrow(const std::string& name) const;
    std::optional<SquareId> find_square(const std::string& name) const;

    HArrowId h_identity(ObjectId x) const { return h_identity_.at(x.value); }
    VArrowId v_identity(ObjectId x) const { return v_identity_.at(x.value); }
    // Unit for sq_vcomp: top = bottom = F, identity sides.
    SquareId identity_square(HArrowId f) const { return h_identity_square_.at(f.value); }
    // Unit for sq_hcomp: left = right = f, identity top and bottom.
    SquareId identity_square(VArrowId f) const { return v_identity_square_.at(f.value); }
    SquareId identity_square(ObjectId x) const { return identity_square(h_identity(x)); }

    std::optional<HArrowId> h_comp(HArrowId a, HArrowId b) const;
    std::optional<VArrowId> v_comp(VArrowId a, VArrowId b) const;
    std::optional<SquareId> sq_hcomp(SquareId a, SquareId b) const;
    std::optional<SquareId> sq_vcomp(SquareId a, SquareId b) const;

    bool is_identity(HArrowId a) const { return h_identity(h_arrow(a).source) == a; }
    bool is_identity(VArrowId a) const { return v_identity(v_arrow(a).source) == a; }

    const std::vector<HArrowId>& h_arrows_between(ObjectId x, ObjectId y) const;
    const std::vector<VArrowId>& v_arrows_between(ObjectId x, ObjectId y) const;
    const std::vector<SquareId>& squares_with_boundary(HArrowId top, HArrowId bottom, VArrowId left,
                                                       VArrowId right) const;
    const std::vector<SquareId>& squares_with_left(VArrowId f) const { return by_left_.at(f.value); }
    const std::vector<SquareId>& squares_with_top(HArrowId f) const { return by_top_.at(f.value); }

private:
    struct BoundaryKey {
        std::uint32_t top, bottom, left, right;
        friend bool operator==(const BoundaryKey&, const BoundaryKey&) = default;
    };
    struct BoundaryHash {
        std::size_t operator()(const BoundaryKey& k) const noexcept;
    };

    std::string name_;
    std::vector<std::string> objects_;
    std::vector<HArrow> h_arrows_;
    std::vector<VArrow> v_arrows_;
    std::vector<Square> squares_;
    std::vector<HArrowId> h_identity_;
    std::vector<VArrowId> v_identity_;
    std::vector<SquareId> h_identity_square_;
    std::vector<SquareId> v_identity_square_;
    std::unordered_map<std::uint64_t, HArrowId> h_comp_;
    std::unordered_map<std::uint64_t, VArrowId> v_comp_;
    std::unordered_map<std::uint64_t, SquareId> sq_hcomp_;
    std::unordered_map<std::uint64_t, SquareId> sq_vcomp_;
    std::unordered_map<std::string, std::uint32_t> object_index_, h_index_, v_index_, sq_index_;
    std::vector<std::vector<HArrowId>> h_between_;
    std::vector<std::vector<VArrowId>> v_between_;
    std::unordered_map<BoundaryKey, std::vector<SquareId>, BoundaryHash> by_boundary_;
    std::vector<std::vector<SquareId>> by_left_, by_top_;
    std::vector<SquareId> no_squares_;
};

class FinDoubleCategory::Builder {
public:
    explicit Builder(std::string name);
    ObjectId object(const std::string& name);
    HArrowId h_arrow(const std::string& name, ObjectId source, ObjectId target);
    VArrowId v_arrow(const std::string& name, ObjectId source, ObjectId target);
    SquareId square(const std::string& name, HArrowId top, HArrowId bottom, VArrowId left, VArrowId right);
    Builder& h_identity(ObjectId x, HArrowId a);
    Builder& v_identity(ObjectId x, VArrowId a);
    Builder& identity_square(HArrowId a, SquareId s);
    Builder& identity_square(VArrowId a, SquareId s);
    Builder& h_comp(HArrowId a, HArrowId b, HArrowId c);
    Builder& v_comp(VArrowId a, VArrowId b, VArrowId c);
    Builder& sq_hcomp(SquareId a, SquareId b, SquareId c);
    Builder& sq_vcomp(SquareId a, SquareId b, SquareId c);
    // Adds every composite with an identity arrow or identity square. Identities must be set.
    Builder& unit_entries();
    // Checks references and indexes; axioms are left to check_axioms.
    FinDoubleCategory build() &&;

    const FinDoubleCategory& partial() const { return result_; }

private:
    FinDoubleCategory result_;
};

ValidationReport check_axioms(const FinDoubleCategory& d);

// grid[row][col]; rows are stacked top to bottom. Throws InvalidInput on boundary mismatch and
// Error if row-first and column-first evaluation disagree.
SquareId paste_grid(const FinDoubleCategory& d, const std::vector<std::vector<SquareId>>& grid);

// Row-first and column-first composites of a compatible grid, without comparing them.
std::pair<SquareId, SquareId> paste_both_ways(const FinDoubleCategory& d,
                                              const std::vector<std::vector<SquareId>>& grid);

enum class Handedness { companion, conjoint };

// companion: h : x -> y with unit (top id, left id, right f, bottom h) and counit
//            (top h, left f, right id, bottom id).
// conjoint:  h : y -> x with unit (top id, left f, right id, bottom h) and counit
//            (top h, left id, right f, bottom id).
struct Companionship {
    Handedness kind = Handedness::companion;
    VArrowId f;
    HArrowId h;
    SquareId unit;
    SquareId counit;
    friend bool operator==(const Companionship&, const Companionship&) = default;
};

bool triangle_identities_hold(const FinDoubleCategory& d, const Companionship& c);
bool has_unit_shape(const FinDoubleCategory& d, SquareId s, Handedness kind);
std::vector<Companionship> find_companions(const FinDoubleCategory& d, VArrowId f,
                                           Handedness kind = Handedness::companion);
// All data whose horizontal arrow is h.
std::vector<Companionship> find_companion_data_for(const FinDoubleCategory& d, HArrowId h,
                                                   Handedness kind = Handedness::companion);

struct CompanionableResult {
    bool holds = false;
    std::optional<Companionship> top;     // data for the top boundary
    std::optional<Companionship> bottom;  // data for the bottom boundary
    std::optional<SquareId> column;       // pasted unit / square / counit
    std::optional<SquareId> inverse;
};

// Inverse of a square with identity top and bottom under sq_hcomp.
std::optional<SquareId> vertical_inverse(const FinDoubleCategory& d, SquareId s);
// Inverse of a square with identity left and right under sq_vcomp.
std::optional<SquareId> horizontal_inverse(const FinDoubleCategory& d, SquareId s);

CompanionableResult is_companionable(const FinDoubleCategory& d, SquareId sq,
                                     Handedness kind = Handedness::companion);
// Equality of the two one-sided pastings. Throws InvalidInput if d fails check_axioms.
bool companionable_alt_check(const FinDoubleCategory& d, SquareId sq, Handedness kind = Handedness::companion);

// Unit and counit squares of h ⊣ h' in the horizontal fragment. Throws InvalidInput if the
// data are not a companionship and a conjunction on the same f.
std::pair<SquareId, SquareId> adjunction_from_comp_conj(const FinDoubleCategory& d, const Companionship& comp,
                                                        const Companionship& conj);

// 2-category of objects, arrows in one direction and squares trivial in the other. In the
// vertical fragment a square with left f and right g is a 2-cell g => f.
struct Fragment {
    FinTwoCategory category;
    std::vector<SquareId> squares;       // 2-cell id -> square
    std::vector<std::uint32_t> cell_of;  // square id -> 2-cell id or kNoId
    std::optional<TwoCellId> cell(SquareId s) const
    {
        auto v = cell_of.at(s.value);
        return v == kNoId ? std::nullopt : std::optional<TwoCellId>(TwoCellId{v});
    }
};

Fragment fragment(const FinDoubleCategory& d, Direction dir);

struct DblFunctor {
    std::vector<ObjectId> objects;
    std::vector<HArrowId> h_arrows;
    std::vector<VArrowId> v_arrows;
    std::vector<SquareId> squares;
    friend auto operator<=>(const DblFunctor&, const DblFunctor&) = default;
};

// First failure of functoriality as text.
std::optional<std::string> check_dbl_functor(const FinDoubleCategory& a, const FinDoubleCategory& b,
                                             const DblFunctor& f);
bool is_isomorphism(const FinDoubleCategory& a, const FinDoubleCategory& b, const DblFunctor& f);
DblFunctor identity_functor(const FinDoubleCategory& d);

// Horizontal arrows reversed, squares mirrored left to right. Ids and names are kept.
FinDoubleCategory horizontal_opposite(const FinDoubleCategory& d);
// Horizontal and vertical exchanged. Horizontal arrow ids of the result are the vertical arrow
// ids of d and conversely; square ids and names are kept.
FinDoubleCategory transpose(const FinDoubleCategory& d);
DblFunctor transpose(const DblFunctor& f);

// Double category with the 1-cells of x in direction dir and only identities in the other.
FinDoubleCategory embed_2cat(const FinTwoCategory& x, Direction dir);

}  // namespace dblcat
