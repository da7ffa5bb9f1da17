#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "dblcat/bisimplicial.hpp"

namespace dblcat {

// A presheaf together with the structured key behind each cell id.
template <class Key>
struct KeyedPresheaf {
    FinBisimplicialSet set;
    std::vector<std::vector<Key>> keys;
    std::vector<std::map<Key, CellId>> ids;

    const Key& key(Bidegree d, CellId c) const { return keys[set.truncation().index(d)][c]; }
    CellId id(Bidegree d, const Key& k) const
    {
        const auto& index = ids[set.truncation().index(d)];
        auto it = index.find(k);
        if (it == index.end())
            throw InvalidInput("no cell with the requested key at (" + to_string(d) + ")");
        return it->second;
    }
    bool contains(Bidegree d, const Key& k) const { return ids[set.truncation().index(d)].count(k) > 0; }
};

// Model requirements:
//   using Key = ...;                                  (totally ordered)
//   std::vector<Key> cells(Bidegree) const;           (any order; sorted here)
//   Key face(Direction, int i, const Key&) const;
//   Key degeneracy(Direction, int i, const Key&) const;
//   std::string label(const Key&) const;
template <class Model>
KeyedPresheaf<typename Model::Key> build_keyed(const Model& model, Truncation t)
{
    using Key = typename Model::Key;
    KeyedPresheaf<Key> out;
    out.keys.resize(t.level_count());
    out.ids.resize(t.level_count());
    FinBisimplicialSet::Builder builder(t);
    for (Bidegree d : t.degrees()) {
        auto& keys = out.keys[t.index(d)];
        keys = model.cells(d);
        std::sort(keys.begin(), keys.end());
        keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
        std::vector<std::string> labels;
        labels.reserve(keys.size());
        for (std::size_t i = 0; i < keys.size(); ++i) {
            out.ids[t.index(d)].emplace(keys[i], static_cast<CellId>(i));
            labels.push_back(model.label(keys[i]));
        }
        builder.cells(d, std::move(labels));
    }
    auto lookup = [&](Bidegree d, const Key& k) {
        const auto& index = out.ids[t.index(d)];
        auto it = index.find(k);
        if (it == index.end())
            throw InvalidInput("structure map leaves the presheaf at (" + to_string(d) + ")");
        return it->second;
    };
    for (Bidegree d : t.degrees()) {
        const auto& keys = out.keys[t.index(d)];
        for (Direction dir : {Direction::horizontal, Direction::vertical}) {
            const int n = extent(dir, d);
            if (n >= 1)
                for (int i = 0; i <= n; ++i) {
                    std::vector<CellId> table;
                    table.reserve(keys.size());
                    for (const Key& k : keys)
                        table.push_back(lookup(shifted(dir, d, -1), model.face(dir, i, k)));
                    builder.face(dir, d, i, std::move(table));
                }
            if (n + 1 <= bound(dir, t))
                for (int i = 0; i <= n; ++i) {
                    std::vector<CellId> table;
                    table.reserve(keys.size());
                    for (const Key& k : keys)
                        table.push_back(lookup(shifted(dir, d, 1), model.degeneracy(dir, i, k)));
                    builder.degeneracy(dir, d, i, std::move(table));
                }
        }
    }
    out.set = std::move(builder).build();
    return out;
}

}  // namespace dblcat
