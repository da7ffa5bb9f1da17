#include "dblcat/json_io.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>

namespace dblcat {

namespace {

using Triple = std::array<std::uint32_t, 3>;

Json triples(std::vector<Triple> t)
{
    std::sort(t.begin(), t.end());
    Json out = Json::array();
    for (const auto& x : t)
        out.push_back(x);
    return out;
}

std::string level_key(Bidegree d) { return std::to_string(d.n) + "," + std::to_string(d.m); }

const Json& field(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        throw ParseError(std::string("missing field '") + key + "'");
    return j.at(key);
}

template <class T>
T get(const Json& j, const char* what)
{
    try {
        return j.get<T>();
    } catch (const nlohmann::json::exception&) {
        throw ParseError(std::string("field '") + what + "' has the wrong type");
    }
}

std::uint32_t get_id(const Json& j, const char* what, std::size_t count)
{
    const auto id = get<std::uint32_t>(j, what);
    if (id >= count)
        throw InvalidInput(std::string("field '") + what + "' refers to a missing entry " + std::to_string(id));
    return id;
}

std::uint32_t ref(const Json& j, const char* key, std::size_t count) { return get_id(field(j, key), key, count); }

void check_triples(const std::vector<Triple>& ts, const char* key, std::size_t count)
{
    for (const auto& t : ts)
        for (auto id : t)
            if (id >= count)
                throw InvalidInput(std::string("'") + key + "' refers to a missing entry " + std::to_string(id));
}

std::vector<Triple> get_triples(const Json& j, const char* key, std::size_t count)
{
    if (!j.contains(key))
        return {};
    auto ts = get<std::vector<Triple>>(j.at(key), key);
    check_triples(ts, key, count);
    return ts;
}

std::vector<std::uint32_t> get_ids(const Json& j, const char* key, std::size_t length, std::size_t count)
{
    auto v = get<std::vector<std::uint32_t>>(field(j, key), key);
    if (v.size() != length)
        throw ParseError(std::string("'") + key + "' has the wrong length");
    for (auto id : v)
        if (id >= count)
            throw InvalidInput(std::string("'") + key + "' refers to a missing entry " + std::to_string(id));
    return v;
}

Json named_cell(const std::string& name, std::uint32_t source, std::uint32_t target)
{
    return Json{{"name", name}, {"source", source}, {"target", target}};
}

}  // namespace

Json to_json(const FinTwoCategory& k)
{
    Json j;
    j["kind"] = "2-category";
    j["name"] = k.name();
    j["locally_posetal"] = k.locally_posetal();
    Json objects = Json::array(), ones = Json::array(), twos = Json::array(), ids = Json::array(),
         ids2 = Json::array();
    for (std::uint32_t x = 0; x < k.object_count(); ++x) {
        objects.push_back(k.object_name(ObjectId{x}));
        ids.push_back(k.identity(ObjectId{x}).value);
    }
    std::vector<Triple> comp, vcomp, hcomp;
    for (std::uint32_t p = 0; p < k.one_cell_count(); ++p) {
        const OneCell& c = k.one_cell(OneCellId{p});
        ones.push_back(named_cell(c.name, c.source.value, c.target.value));
        ids2.push_back(k.identity2(OneCellId{p}).value);
        for (std::uint32_t q = 0; q < k.one_cell_count(); ++q)
            if (auto r = k.comp(OneCellId{p}, OneCellId{q}))
                comp.push_back({p, q, r->value});
    }
    for (std::uint32_t a = 0; a < k.two_cell_count(); ++a) {
        const TwoCell& c = k.two_cell(TwoCellId{a});
        twos.push_back(named_cell(c.name, c.source.value, c.target.value));
        for (std::uint32_t b = 0; b < k.two_cell_count(); ++b) {
            if (auto r = k.vcomp(TwoCellId{a}, TwoCellId{b}))
                vcomp.push_back({a, b, r->value});
            if (auto r = k.hcomp(TwoCellId{a}, TwoCellId{b}))
                hcomp.push_back({a, b, r->value});
        }
    }
    j["objects"] = objects;
    j["one_cells"] = ones;
    j["two_cells"] = twos;
    j["identities"] = ids;
    j["identity_two_cells"] = ids2;
    j["comp"] = triples(comp);
    j["vcomp"] = triples(vcomp);
    j["hcomp"] = triples(hcomp);
    return j;
}

Json to_json(const FinDoubleCategory& d)
{
    Json j;
    j["kind"] = "double-category";
    j["name"] = d.name();
    Json objects = Json::array(), hs = Json::array(), vs = Json::array(), squares = Json::array();
    Json hid = Json::array(), vid = Json::array(), hsq = Json::array(), vsq = Json::array();
    for (std::uint32_t x = 0; x < d.object_count(); ++x) {
        objects.push_back(d.object_name(ObjectId{x}));
        hid.push_back(d.h_identity(ObjectId{x}).value);
        vid.push_back(d.v_identity(ObjectId{x}).value);
    }
    std::vector<Triple> hc, vc, shc, svc;
    for (std::uint32_t a = 0; a < d.h_arrow_count(); ++a) {
        const HArrow& h = d.h_arrow(HArrowId{a});
        hs.push_back(named_cell(h.name, h.source.value, h.target.value));
        hsq.push_back(d.identity_square(HArrowId{a}).value);
        for (std::uint32_t b = 0; b < d.h_arrow_count(); ++b)
            if (auto r = d.h_comp(HArrowId{a}, HArrowId{b}))
                hc.push_back({a, b, r->value});
    }
    for (std::uint32_t a = 0; a < d.v_arrow_count(); ++a) {
        const VArrow& v = d.v_arrow(VArrowId{a});
        vs.push_back(named_cell(v.name, v.source.value, v.target.value));
        vsq.push_back(d.identity_square(VArrowId{a}).value);
        for (std::uint32_t b = 0; b < d.v_arrow_count(); ++b)
            if (auto r = d.v_comp(VArrowId{a}, VArrowId{b}))
                vc.push_back({a, b, r->value});
    }
    for (std::uint32_t s = 0; s < d.square_count(); ++s) {
        const Square& q = d.square(SquareId{s});
        squares.push_back(Json{{"name", q.name},
                               {"top", q.top.value},
                               {"bottom", q.bottom.value},
                               {"left", q.left.value},
                               {"right", q.right.value}});
        for (SquareId t : d.squares_with_left(q.right))
            if (auto r = d.sq_hcomp(SquareId{s}, t))
                shc.push_back({s, t.value, r->value});
        for (SquareId t : d.squares_with_top(q.bottom))
            if (auto r = d.sq_vcomp(SquareId{s}, t))
                svc.push_back({s, t.value, r->value});
    }
    j["objects"] = objects;
    j["h_arrows"] = hs;
    j["v_arrows"] = vs;
    j["squares"] = squares;
    j["h_identities"] = hid;
    j["v_identities"] = vid;
    j["h_identity_squares"] = hsq;
    j["v_identity_squares"] = vsq;
    j["h_comp"] = triples(hc);
    j["v_comp"] = triples(vc);
    j["sq_hcomp"] = triples(shc);
    j["sq_vcomp"] = triples(svc);
    return j;
}

Json to_json(const FinBisimplicialSet& x)
{
    const Truncation t = x.truncation();
    Json j;
    j["kind"] = "bisimplicial-set";
    j["truncation"] = {t.n, t.m};
    Json levels = Json::object(), tables[2][2];
    for (auto& row : tables)
        for (auto& cell : row)
            cell = Json::object();
    for (Bidegree d : t.degrees()) {
        levels[level_key(d)] = x.labels(d);
        for (Direction dir : {Direction::horizontal, Direction::vertical}) {
            const int k = dir == Direction::horizontal ? 0 : 1;
            if (x.has_face(dir, d)) {
                Json faces = Json::array();
                for (int i = 0; i <= extent(dir, d); ++i)
                    faces.push_back(x.face_table(dir, d, i));
                tables[k][0][level_key(d)] = faces;
            }
            if (x.has_degeneracy(dir, d)) {
                Json degs = Json::array();
                for (int i = 0; i <= extent(dir, d); ++i)
                    degs.push_back(x.degeneracy_table(dir, d, i));
                tables[k][1][level_key(d)] = degs;
            }
        }
    }
    j["levels"] = levels;
    j["h_face"] = tables[0][0];
    j["h_deg"] = tables[0][1];
    j["v_face"] = tables[1][0];
    j["v_deg"] = tables[1][1];
    return j;
}

Json to_json(const BisimplicialMap& f)
{
    Json j;
    j["kind"] = "bisimplicial-map";
    j["truncation"] = {f.truncation.n, f.truncation.m};
    Json comps = Json::object();
    for (Bidegree d : f.truncation.degrees())
        comps[level_key(d)] = f.components[f.truncation.index(d)];
    j["components"] = comps;
    return j;
}

FinTwoCategory two_category_from_json(const Json& j)
{
    if (json_kind(j) != "2-category")
        throw ParseError("expected a 2-category");
    FinTwoCategory::Builder b(get<std::string>(field(j, "name"), "name"));
    const auto& k = b.partial();
    for (const auto& o : field(j, "objects"))
        b.object(get<std::string>(o, "objects"));
    for (const auto& c : field(j, "one_cells"))
        b.one_cell(get<std::string>(field(c, "name"), "name"), ObjectId{ref(c, "source", k.object_count())},
                   ObjectId{ref(c, "target", k.object_count())});
    const auto ids = get_ids(j, "identities", k.object_count(), k.one_cell_count());
    for (std::uint32_t x = 0; x < ids.size(); ++x)
        b.identity(ObjectId{x}, OneCellId{ids[x]});
    for (const auto& t : get_triples(j, "comp", k.one_cell_count()))
        b.comp(OneCellId{t[0]}, OneCellId{t[1]}, OneCellId{t[2]});
    if (!j.contains("two_cells")) {
        std::vector<std::pair<OneCellId, OneCellId>> leq;
        if (j.contains("leq"))
            for (const auto& p : get<std::vector<std::array<std::uint32_t, 2>>>(j.at("leq"), "leq")) {
                if (p[0] >= k.one_cell_count() || p[1] >= k.one_cell_count())
                    throw InvalidInput("'leq' refers to a missing 1-cell");
                leq.push_back({OneCellId{p[0]}, OneCellId{p[1]}});
            }
        b.posetal_two_cells(leq);
        return std::move(b).build();
    }
    for (const auto& c : field(j, "two_cells"))
        b.two_cell(get<std::string>(field(c, "name"), "name"), OneCellId{ref(c, "source", k.one_cell_count())},
                   OneCellId{ref(c, "target", k.one_cell_count())});
    const auto ids2 = get_ids(j, "identity_two_cells", k.one_cell_count(), k.two_cell_count());
    for (std::uint32_t p = 0; p < ids2.size(); ++p)
        b.identity2(OneCellId{p}, TwoCellId{ids2[p]});
    for (const auto& t : get_triples(j, "vcomp", k.two_cell_count()))
        b.vcomp(TwoCellId{t[0]}, TwoCellId{t[1]}, TwoCellId{t[2]});
    for (const auto& t : get_triples(j, "hcomp", k.two_cell_count()))
        b.hcomp(TwoCellId{t[0]}, TwoCellId{t[1]}, TwoCellId{t[2]});
    b.locally_posetal(j.contains("locally_posetal") && get<bool>(j.at("locally_posetal"), "locally_posetal"));
    return std::move(b).build();
}

FinDoubleCategory double_category_from_json(const Json& j)
{
    if (json_kind(j) != "double-category")
        throw ParseError("expected a double category");
    FinDoubleCategory::Builder b(get<std::string>(field(j, "name"), "name"));
    const auto& d = b.partial();
    for (const auto& o : field(j, "objects"))
        b.object(get<std::string>(o, "objects"));
    for (const auto& c : field(j, "h_arrows"))
        b.h_arrow(get<std::string>(field(c, "name"), "name"), ObjectId{ref(c, "source", d.object_count())},
                  ObjectId{ref(c, "target", d.object_count())});
    for (const auto& c : field(j, "v_arrows"))
        b.v_arrow(get<std::string>(field(c, "name"), "name"), ObjectId{ref(c, "source", d.object_count())},
                  ObjectId{ref(c, "target", d.object_count())});
    for (const auto& s : field(j, "squares"))
        b.square(get<std::string>(field(s, "name"), "name"), HArrowId{ref(s, "top", d.h_arrow_count())},
                 HArrowId{ref(s, "bottom", d.h_arrow_count())}, VArrowId{ref(s, "left", d.v_arrow_count())},
                 VArrowId{ref(s, "right", d.v_arrow_count())});
    const auto hid = get_ids(j, "h_identities", d.object_count(), d.h_arrow_count());
    const auto vid = get_ids(j, "v_identities", d.object_count(), d.v_arrow_count());
    for (std::uint32_t x = 0; x < hid.size(); ++x)
        b.h_identity(ObjectId{x}, HArrowId{hid[x]}).v_identity(ObjectId{x}, VArrowId{vid[x]});
    const auto hsq = get_ids(j, "h_identity_squares", d.h_arrow_count(), d.square_count());
    const auto vsq = get_ids(j, "v_identity_squares", d.v_arrow_count(), d.square_count());
    for (std::uint32_t a = 0; a < hsq.size(); ++a)
        b.identity_square(HArrowId{a}, SquareId{hsq[a]});
    for (std::uint32_t a = 0; a < vsq.size(); ++a)
        b.identity_square(VArrowId{a}, SquareId{vsq[a]});
    for (const auto& t : get_triples(j, "h_comp", d.h_arrow_count()))
        b.h_comp(HArrowId{t[0]}, HArrowId{t[1]}, HArrowId{t[2]});
    for (const auto& t : get_triples(j, "v_comp", d.v_arrow_count()))
        b.v_comp(VArrowId{t[0]}, VArrowId{t[1]}, VArrowId{t[2]});
    for (const auto& t : get_triples(j, "sq_hcomp", d.square_count()))
        b.sq_hcomp(SquareId{t[0]}, SquareId{t[1]}, SquareId{t[2]});
    for (const auto& t : get_triples(j, "sq_vcomp", d.square_count()))
        b.sq_vcomp(SquareId{t[0]}, SquareId{t[1]}, SquareId{t[2]});
    return std::move(b).build();
}

FinBisimplicialSet bisimplicial_from_json(const Json& j)
{
    auto tr = get<std::array<int, 2>>(field(j, "truncation"), "truncation");
    if (tr[0] < 0 || tr[1] < 0)
        throw ParseError("negative truncation");
    const Truncation t{tr[0], tr[1]};
    FinBisimplicialSet::Builder b(t);
    const Json& levels = field(j, "levels");
    for (Bidegree d : t.degrees())
        b.cells(d, get<std::vector<std::string>>(field(levels, level_key(d).c_str()), "levels"));
    const char* keys[2][2] = {{"h_face", "h_deg"}, {"v_face", "v_deg"}};
    for (Bidegree d : t.degrees())
        for (Direction dir : {Direction::horizontal, Direction::vertical}) {
            const int k = dir == Direction::horizontal ? 0 : 1;
            for (int which = 0; which < 2; ++which) {
                const Json& block = field(j, keys[k][which]);
                if (!block.contains(level_key(d)))
                    continue;
                auto tables = get<std::vector<std::vector<CellId>>>(block.at(level_key(d)), keys[k][which]);
                for (int i = 0; i < static_cast<int>(tables.size()); ++i) {
                    if (which == 0)
                        b.face(dir, d, i, tables[i]);
                    else
                        b.degeneracy(dir, d, i, tables[i]);
                }
            }
        }
    return std::move(b).build();
}

BisimplicialMap map_from_json(const Json& j)
{
    auto tr = get<std::array<int, 2>>(field(j, "truncation"), "truncation");
    BisimplicialMap f{Truncation{tr[0], tr[1]}, {}};
    if (tr[0] < 0 || tr[1] < 0)
        throw ParseError("negative truncation");
    const Json& comps = field(j, "components");
    for (Bidegree d : f.truncation.degrees())
        f.components.push_back(get<std::vector<CellId>>(field(comps, level_key(d).c_str()), "components"));
    return f;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
        return Json::parse(buffer.str());
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError("'" + path + "': " + e.what());
    }
}

std::string json_kind(const Json& j)
{
    if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string())
        throw ParseError("missing field 'kind'");
    return j.at("kind").get<std::string>();
}

}  // namespace dblcat
