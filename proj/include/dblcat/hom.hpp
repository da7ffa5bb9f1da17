#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dblcat/bisimplicial.hpp"

namespace dblcat {

// Backtracking enumeration of maps source -> target. Only nondegenerate source cells are
// variables; each is chosen among target cells whose faces match the values already fixed
// for its faces, so the search never builds an inconsistent partial map.
class HomSearch {
public:
    HomSearch(const FinBisimplicialSet& source, const PresheafView& target,
              std::uint64_t budget = kDefaultBudget);

    // Require the map to send `cell` at degree d to `value`.
    void pin(Bidegree d, CellId cell, CellId value);

    // Calls visit(root_values) for every map in deterministic order; return false to stop.
    // root_values is aligned with roots(). Returns the number of maps visited.
    std::uint64_t run(const std::function<bool(const std::vector<CellId>&)>& visit);
    std::uint64_t count();

    const std::vector<std::pair<Bidegree, CellId>>& roots() const { return order_; }
    BisimplicialMap expand(const std::vector<CellId>& root_values) const;
    // Value of the map on an arbitrary source cell.
    CellId value(const std::vector<CellId>& root_values, Bidegree d, CellId c) const;
    std::uint64_t candidates_tried() const { return tried_; }

private:
    struct FaceConstraint {
        std::size_t root_pos;  // position in order_
        Bidegree root_degree;
        std::vector<DegeneracyStep> steps;
    };
    struct PinConstraint {
        Bidegree root_degree;
        std::vector<DegeneracyStep> steps;
        CellId value;
    };
    struct Variable {
        Bidegree degree;
        std::vector<FaceConstraint> faces;  // in matching() order
        std::vector<PinConstraint> pins;
    };

    bool search(std::size_t pos, std::vector<CellId>& values,
                const std::function<bool(const std::vector<CellId>&)>& visit, std::uint64_t& found);

    const FinBisimplicialSet& source_;
    const PresheafView& target_;
    std::uint64_t budget_;
    std::uint64_t tried_ = 0;
    Normalization norm_;
    std::vector<std::pair<Bidegree, CellId>> order_;
    std::vector<std::size_t> position_;  // per root in norm_.roots() order -> position in order_
    std::vector<std::vector<std::size_t>> root_pos_;  // [level][cell] -> position, for roots
    std::vector<Variable> vars_;
};

std::vector<BisimplicialMap> hom_set(const FinBisimplicialSet& x, const FinBisimplicialSet& y,
                                     std::uint64_t budget = kDefaultBudget);
std::uint64_t hom_count(const FinBisimplicialSet& x, const PresheafView& y, std::uint64_t budget = kDefaultBudget);

struct LiftResult {
    bool holds = true;
    std::uint64_t maps_checked = 0;
    // On failure: a map A -> X and how many extensions it has (0 or >= 2).
    std::optional<BisimplicialMap> counterexample;
    std::uint64_t extensions = 0;
};

// Every map A -> X extends uniquely along i: A -> B.
LiftResult has_unique_lift(const BisimplicialMap& i, const FinBisimplicialSet& a, const FinBisimplicialSet& b,
                           const PresheafView& x, std::uint64_t budget = kDefaultBudget);

struct SegalResult {
    bool holds = true;
    std::string failure;  // direction and level of the first failing spine map
};

SegalResult is_segal(const FinBisimplicialSet& x);

}  // namespace dblcat
