#pragma once

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dblcat/errors.hpp"
#include "dblcat/ids.hpp"
#include "dblcat/validation.hpp"

namespace dblcat {

struct OneCell {
    std::string name;
    ObjectId source;
    ObjectId target;
};

struct TwoCell {
    std::string name;
    OneCellId source;
    OneCellId target;
};

// Strict 2-category given by tables. Composition of 1-cells is diagrammatic: comp(p, q) is
// "p then q". hcomp of 2-cells follows the same order.
class FinTwoCategory {
public:
    class Builder;

    const std::string& name() const { return name_; }
    bool locally_posetal() const { return posetal_; }

    std::size_t object_count() const { return objects_.size(); }
    std::size_t one_cell_count() const { return one_cells_.size(); }
    std::size_t two_cell_count() const { return two_cells_.size(); }
    const std::string& object_name(ObjectId x) const { return objects_.at(x.value); }
    const OneCell& one_cell(OneCellId p) const { return one_cells_.at(p.value); }
    const TwoCell& two_cell(TwoCellId a) const { return two_cells_.at(a.value); }
    std::optional<ObjectId> find_object(const std::string& name) const;
    std::optional<OneCellId> find_one_cell(const std::string& name) const;
    std::optional<TwoCellId> find_two_cell(const std::string& name) const;

    OneCellId identity(ObjectId x) const { return identity_.at(x.value); }
    TwoCellId identity2(OneCellId p) const { return identity2_.at(p.value); }
    std::optional<OneCellId> comp(OneCellId p, OneCellId q) const;
    std::optional<TwoCellId> vcomp(TwoCellId a, TwoCellId b) const;  // a then b
    std::optional<TwoCellId> hcomp(TwoCellId a, TwoCellId b) const;  // a then b along objects
    std::optional<TwoCellId> whisker_left(OneCellId p, TwoCellId b) const { return hcomp(identity2(p), b); }
    std::optional<TwoCellId> whisker_right(TwoCellId a, OneCellId q) const { return hcomp(a, identity2(q)); }

    const std::vector<OneCellId>& hom(ObjectId x, ObjectId y) const;
    const std::vector<TwoCellId>& cells_between(OneCellId p, OneCellId q) const;
    bool leq(OneCellId p, OneCellId q) const { return !cells_between(p, q).empty(); }
    bool is_identity(OneCellId p) const { return identity(one_cell(p).source) == p; }
    bool is_identity(TwoCellId a) const { return identity2(two_cell(a).source) == a; }
    std::optional<TwoCellId> inverse(TwoCellId a) const;

private:
    std::string name_;
    bool posetal_ = false;
    std::vector<std::string> objects_;
    std::vector<OneCell> one_cells_;
    std::vector<TwoCell> two_cells_;
    std::vector<OneCellId> identity_;
    std::vector<TwoCellId> identity2_;
    std::unordered_map<std::uint64_t, OneCellId> comp_;
    std::unordered_map<std::uint64_t, TwoCellId> vcomp_;
    std::unordered_map<std::uint64_t, TwoCellId> hcomp_;
    std::unordered_map<std::string, std::uint32_t> object_index_, one_index_, two_index_;
    std::vector<std::vector<OneCellId>> hom_;  // [x * |objects| + y]
    std::unordered_map<std::uint64_t, std::vector<TwoCellId>> between_;
    std::vector<TwoCellId> none_;
    std::vector<OneCellId> no_cells_;
};

class FinTwoCategory::Builder {
public:
    explicit Builder(std::string name);
    ObjectId object(const std::string& name);
    OneCellId one_cell(const std::string& name, ObjectId source, ObjectId target);
    TwoCellId two_cell(const std::string& name, OneCellId source, OneCellId target);
    Builder& identity(ObjectId x, OneCellId p);
    Builder& identity2(OneCellId p, TwoCellId a);
    Builder& comp(OneCellId p, OneCellId q, OneCellId r);
    Builder& vcomp(TwoCellId a, TwoCellId b, TwoCellId c);
    Builder& hcomp(TwoCellId a, TwoCellId b, TwoCellId c);
    Builder& locally_posetal(bool flag);
    // Adds every composite with an identity 1-cell or identity 2-cell. Identities must be set.
    Builder& unit_entries();
    // Checks references and indexes; axioms are left to check_axioms.
    FinTwoCategory build() &&;

    // Generates one 2-cell per related pair (reflexive-transitive closure of `leq`), with
    // the induced compositions. Composition of 1-cells must already be total.
    Builder& posetal_two_cells(const std::vector<std::pair<OneCellId, OneCellId>>& leq);

    const FinTwoCategory& partial() const { return result_; }

private:
    FinTwoCategory result_;
};

ValidationReport check_axioms(const FinTwoCategory& k);

struct Adjunction {
    OneCellId left;
    OneCellId right;
    TwoCellId unit;    // identity(source) => left;right
    TwoCellId counit;  // right;left => identity(target)
};

// All right adjoints of u with witnessing unit/counit, in id order.
std::vector<Adjunction> find_adjunctions(const FinTwoCategory& k, OneCellId u);
std::vector<Adjunction> find_left_adjoints(const FinTwoCategory& k, OneCellId v);
bool triangle_identities_hold(const FinTwoCategory& k, const Adjunction& adj);

// Poset-enriched shortcut: id <= u;v and v;u <= id.
bool posetal_adjoint(const FinTwoCategory& k, OneCellId u, OneCellId v);

// Isomorphism check along explicit assignments.
struct TwoFunctorData {
    std::vector<ObjectId> objects;
    std::vector<OneCellId> one_cells;
    std::vector<TwoCellId> two_cells;
};
std::optional<std::string> check_two_functor(const FinTwoCategory& a, const FinTwoCategory& b,
                                             const TwoFunctorData& f);
bool is_isomorphism(const FinTwoCategory& a, const FinTwoCategory& b, const TwoFunctorData& f);

}  // namespace dblcat
