#pragma once

#include <cstdint>
#include <deque>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "dblcat/bisimplicial.hpp"
#include "dblcat/double_category.hpp"

namespace dblcat {

// An n×m grid of squares together with its edges and vertices. Point (i, j) has horizontal
// position i in [0, n] and vertical position j in [0, m].
struct Grid {
    int n = 0;
    int m = 0;
    std::vector<std::uint32_t> objects;  // [i * (m + 1) + j]
    std::vector<std::uint32_t> h;        // (i, j) -> (i + 1, j), [i * (m + 1) + j]
    std::vector<std::uint32_t> v;        // (i, j) -> (i, j + 1), [i * m + j]
    std::vector<std::uint32_t> sq;       // [i * m + j]

    ObjectId object(int i, int j) const { return ObjectId{objects[i * (m + 1) + j]}; }
    HArrowId h_arrow(int i, int j) const { return HArrowId{h[i * (m + 1) + j]}; }
    VArrowId v_arrow(int i, int j) const { return VArrowId{v[i * m + j]}; }
    SquareId square(int i, int j) const { return SquareId{sq[i * m + j]}; }

    // Squares, then horizontal arrows, vertical arrows and objects. Sorting by key puts the
    // four base levels in id order.
    std::vector<std::uint32_t> key() const;
    friend bool operator==(const Grid&, const Grid&) = default;
};

Grid grid_face(const FinDoubleCategory& d, const Grid& g, Direction dir, int i);
Grid grid_degeneracy(const FinDoubleCategory& d, const Grid& g, Direction dir, int i);
// The same grid in the horizontal opposite: columns in reverse order.
Grid grid_hop(const Grid& g);
std::string grid_label(const FinDoubleCategory& d, const Grid& g);
Grid base_grid(const FinDoubleCategory& d, Bidegree deg, std::uint32_t id);

// All grids of the given shape, sorted by key. Throws BudgetExceeded past `budget` grids.
std::vector<Grid> enumerate_grids(const FinDoubleCategory& d, Bidegree deg, std::uint64_t budget = kDefaultBudget);
// Number of grids of the given shape, by a transfer count over columns.
std::uint64_t count_grids(const FinDoubleCategory& d, Bidegree deg);

// The nerve as a presheaf whose cells are interned on demand. Levels (0,0), (1,0), (0,1)
// and (1,1) use the ids of objects, horizontal arrows, vertical arrows and squares.
class LazyNerve final : public PresheafView {
public:
    LazyNerve(const FinDoubleCategory& d, Truncation t);

    Truncation truncation() const override { return trunc_; }
    CellId face(Direction dir, Bidegree d, int i, CellId c) const override;
    CellId degeneracy(Direction dir, Bidegree d, int i, CellId c) const override;
    void matching(Bidegree d, std::span<const CellId> faces, std::vector<CellId>& out) const override;
    std::string describe(Bidegree d, CellId c) const override;

    const FinDoubleCategory& category() const { return dbl_; }
    Grid grid(Bidegree d, CellId c) const;
    CellId intern(const Grid& g) const;
    std::size_t interned(Bidegree d) const;

    struct KeyHash {
        std::size_t operator()(const std::vector<std::uint32_t>& v) const noexcept;
    };

private:
    struct Level {
        std::deque<Grid> grids;
        std::unordered_map<std::vector<std::uint32_t>, CellId, KeyHash> ids;
    };

    const FinDoubleCategory& dbl_;
    Truncation trunc_;
    mutable std::mutex mutex_;
    mutable std::vector<Level> levels_;
};

// The nerve truncated at t with cells in key order at every level.
FinBisimplicialSet materialize(const FinDoubleCategory& d, Truncation t, std::uint64_t budget = kDefaultBudget);

struct MaterializedNerve {
    Truncation truncation;
    FinBisimplicialSet set;
    std::vector<std::vector<std::vector<std::uint32_t>>> keys;  // per level, sorted

    std::optional<CellId> id(const Grid& g) const;
    CellId at(const Grid& g) const;
};
MaterializedNerve materialize_indexed(const FinDoubleCategory& d, Truncation t, std::uint64_t budget = kDefaultBudget);

// Map from a materialized nerve into a lazy nerve of the same category.
BisimplicialMap materialized_to_lazy(const FinDoubleCategory& d, const FinBisimplicialSet& nerve,
                                     const LazyNerve& lazy);

}  // namespace dblcat
