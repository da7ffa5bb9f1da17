#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "dblcat/errors.hpp"

namespace dblcat {

using CellId = std::uint32_t;

struct Bidegree {
    int n = 0;
    int m = 0;
    friend auto operator<=>(const Bidegree&, const Bidegree&) = default;
};

struct Truncation {
    int n = 3;
    int m = 3;
    friend auto operator<=>(const Truncation&, const Truncation&) = default;

    bool contains(Bidegree d) const { return d.n >= 0 && d.m >= 0 && d.n <= n && d.m <= m; }
    std::size_t level_count() const { return static_cast<std::size_t>((n + 1) * (m + 1)); }
    std::size_t index(Bidegree d) const { return static_cast<std::size_t>(d.n * (m + 1) + d.m); }
    Bidegree degree(std::size_t idx) const
    {
        return {static_cast<int>(idx) / (m + 1), static_cast<int>(idx) % (m + 1)};
    }
    std::vector<Bidegree> degrees() const;
};

enum class Direction { horizontal, vertical };

inline int extent(Direction dir, Bidegree d) { return dir == Direction::horizontal ? d.n : d.m; }
inline int bound(Direction dir, Truncation t) { return dir == Direction::horizontal ? t.n : t.m; }
inline Bidegree shifted(Direction dir, Bidegree d, int delta)
{
    return dir == Direction::horizontal ? Bidegree{d.n + delta, d.m} : Bidegree{d.n, d.m + delta};
}
std::string to_string(Bidegree d);

// Read access to a truncated presheaf on Δ×Δ. Faces are d_i for i in [0, extent],
// defined when extent >= 1; degeneracies s_i for i in [0, extent], defined below the bound.
class PresheafView {
public:
    virtual ~PresheafView() = default;
    virtual Truncation truncation() const = 0;
    virtual CellId face(Direction dir, Bidegree d, int i, CellId c) const = 0;
    virtual CellId degeneracy(Direction dir, Bidegree d, int i, CellId c) const = 0;
    // Cells at d whose faces are exactly `faces`, ascending. The order of `faces` is
    // h-faces 0..n (if n >= 1) followed by v-faces 0..m (if m >= 1).
    virtual void matching(Bidegree d, std::span<const CellId> faces, std::vector<CellId>& out) const = 0;
    virtual std::string describe(Bidegree d, CellId c) const;
};

class FinBisimplicialSet final : public PresheafView {
public:
    class Builder;

    FinBisimplicialSet() = default;

    Truncation truncation() const override { return trunc_; }
    std::size_t size(Bidegree d) const { return level(d).labels.size(); }
    std::size_t total_size() const;
    const std::string& label(Bidegree d, CellId c) const { return level(d).labels.at(c); }
    const std::vector<std::string>& labels(Bidegree d) const { return level(d).labels; }
    std::optional<CellId> find(Bidegree d, std::string_view label) const;

    CellId face(Direction dir, Bidegree d, int i, CellId c) const override;
    CellId degeneracy(Direction dir, Bidegree d, int i, CellId c) const override;
    CellId h_face(Bidegree d, int i, CellId c) const { return face(Direction::horizontal, d, i, c); }
    CellId v_face(Bidegree d, int i, CellId c) const { return face(Direction::vertical, d, i, c); }
    CellId h_deg(Bidegree d, int i, CellId c) const { return degeneracy(Direction::horizontal, d, i, c); }
    CellId v_deg(Bidegree d, int i, CellId c) const { return degeneracy(Direction::vertical, d, i, c); }

    const std::vector<CellId>& face_table(Direction dir, Bidegree d, int i) const;
    const std::vector<CellId>& degeneracy_table(Direction dir, Bidegree d, int i) const;
    bool has_face(Direction dir, Bidegree d) const { return extent(dir, d) >= 1; }
    bool has_degeneracy(Direction dir, Bidegree d) const
    {
        return extent(dir, d) + 1 <= bound(dir, trunc_);
    }

    void matching(Bidegree d, std::span<const CellId> faces, std::vector<CellId>& out) const override;
    std::string describe(Bidegree d, CellId c) const override { return label(d, c); }

    // All face values of c in the order used by matching().
    std::vector<CellId> face_key(Bidegree d, CellId c) const;
    bool is_degenerate(Bidegree d, CellId c) const;

private:
    struct KeyHash {
        std::size_t operator()(const std::vector<CellId>& v) const noexcept;
    };
    struct Level {
        std::vector<std::string> labels;
        std::vector<std::vector<CellId>> faces[2];
        std::vector<std::vector<CellId>> degeneracies[2];
        std::unordered_map<std::vector<CellId>, std::vector<CellId>, KeyHash> by_faces;
    };
    const Level& level(Bidegree d) const;

    Truncation trunc_{0, 0};
    std::vector<Level> levels_;
};

class FinBisimplicialSet::Builder {
public:
    explicit Builder(Truncation t);
    Builder& cells(Bidegree d, std::vector<std::string> labels);
    Builder& face(Direction dir, Bidegree d, int i, std::vector<CellId> table);
    Builder& degeneracy(Direction dir, Bidegree d, int i, std::vector<CellId> table);
    // Validates table shapes and ranges, then indexes cells by faces.
    FinBisimplicialSet build() &&;

private:
    FinBisimplicialSet result_;
};

// Levelwise function; components are indexed by Truncation::index.
struct BisimplicialMap {
    Truncation truncation;
    std::vector<std::vector<CellId>> components;

    CellId operator()(Bidegree d, CellId c) const { return components[truncation.index(d)][c]; }
    friend bool operator==(const BisimplicialMap&, const BisimplicialMap&) = default;
    friend auto operator<=>(const BisimplicialMap&, const BisimplicialMap&) = default;
};

BisimplicialMap identity_map(const FinBisimplicialSet& x);
BisimplicialMap compose(const BisimplicialMap& f, const BisimplicialMap& g);  // g after f

// Simplicial identities in both directions and cross-commutation. Returns the first
// violation as text.
std::optional<std::string> check_identities(const FinBisimplicialSet& x);
std::optional<std::string> check_map(const BisimplicialMap& f, const FinBisimplicialSet& source,
                                     const PresheafView& target);
bool is_injective(const BisimplicialMap& f);
bool is_bijective(const BisimplicialMap& f, const FinBisimplicialSet& target);

// Eilenberg-Zilber view: every cell is an iterated degeneracy of a unique nondegenerate root.
struct DegeneracyStep {
    Direction dir;
    int index;
};
struct NormalForm {
    Bidegree root_degree;
    CellId root = 0;
    std::vector<DegeneracyStep> steps;  // applied in order starting at root_degree
};
class Normalization {
public:
    explicit Normalization(const FinBisimplicialSet& x);
    const NormalForm& operator()(Bidegree d, CellId c) const { return forms_[trunc_.index(d)][c]; }
    // Nondegenerate cells as (degree, cell), by degree then id.
    const std::vector<std::pair<Bidegree, CellId>>& roots() const { return roots_; }

private:
    Truncation trunc_;
    std::vector<std::vector<NormalForm>> forms_;
    std::vector<std::pair<Bidegree, CellId>> roots_;
};

CellId apply_steps(const PresheafView& target, Bidegree root_degree, CellId x,
                   const std::vector<DegeneracyStep>& steps);

}  // namespace dblcat
