#include "pmd/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace pmd {

namespace {

using nlohmann::json;

json parse_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

void require_keys(const json& obj, const std::string& ctx,
                  std::initializer_list<const char*> allowed) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool ok = false;
        for (const char* k : allowed) ok = ok || it.key() == k;
        if (!ok) throw ParseError(ctx + ": unknown key '" + it.key() + "'");
    }
}

long long get_int(const json& v, const std::string& ctx) {
    if (!v.is_number_integer()) throw ParseError(ctx + " must be an integer");
    return v.get<long long>();
}

int get_small_int(const json& v, const std::string& ctx, long long lo, long long hi) {
    long long x = get_int(v, ctx);
    if (x < lo || x > hi)
        throw ParseError(ctx + " out of range [" + std::to_string(lo) + ", " +
                         std::to_string(hi) + "]");
    return (int)x;
}

int parse_id(const std::string& key, const std::string& ctx) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), v);
    if (ec != std::errc() || ptr != key.data() + key.size() || v < 0)
        throw ParseError(ctx + ": bad element id '" + key + "'");
    return v;
}

PosetPtr parse_poset(const json& p) {
    if (!p.is_object()) throw ParseError("poset must be an object");
    if (!p.contains("shape") || !p["shape"].is_string())
        throw ParseError("poset needs a string key 'shape'");
    std::string shape = p["shape"].get<std::string>();
    try {
        if (shape == "chain") {
            require_keys(p, "poset", {"shape", "n"});
            if (!p.contains("n")) throw ParseError("chain poset needs 'n'");
            return build_chain(get_small_int(p["n"], "poset.n", 1, 4096));
        }
        if (shape == "grid") {
            require_keys(p, "poset", {"shape", "m", "n"});
            if (!p.contains("m") || !p.contains("n"))
                throw ParseError("grid poset needs 'm' and 'n'");
            return build_grid(get_small_int(p["m"], "poset.m", 1, 4096),
                              get_small_int(p["n"], "poset.n", 1, 4096));
        }
        if (shape == "triangle") {
            require_keys(p, "poset", {"shape", "m", "n", "cutoff"});
            if (!p.contains("m") || !p.contains("n") || !p.contains("cutoff"))
                throw ParseError("triangle poset needs 'm', 'n' and 'cutoff'");
            return build_triangle(get_small_int(p["m"], "poset.m", 1, 4096),
                                  get_small_int(p["n"], "poset.n", 1, 4096),
                                  get_small_int(p["cutoff"], "poset.cutoff", -8192, 8192));
        }
        if (shape == "zigzag") {
            require_keys(p, "poset", {"shape", "steps"});
            if (!p.contains("steps") || !p["steps"].is_string())
                throw ParseError("zigzag poset needs a string key 'steps'");
            std::vector<bool> steps;
            for (char c : p["steps"].get<std::string>()) {
                if (c == 'r')
                    steps.push_back(true);
                else if (c == 'd')
                    steps.push_back(false);
                else
                    throw ParseError(std::string("zigzag steps must be 'r'/'d', got '") + c +
                                     "'");
            }
            return build_zigzag(steps);
        }
        if (shape == "opposite") {
            require_keys(p, "poset", {"shape", "of"});
            if (!p.contains("of")) throw ParseError("opposite poset needs 'of'");
            return build_opposite(parse_poset(p["of"]));
        }
        if (shape == "custom") {
            require_keys(p, "poset", {"shape", "size", "covers"});
            if (!p.contains("size") || !p.contains("covers"))
                throw ParseError("custom poset needs 'size' and 'covers'");
            int size = get_small_int(p["size"], "poset.size", 0, 4096);
            if (!p["covers"].is_array()) throw ParseError("poset.covers must be an array");
            std::vector<std::pair<int, int>> covers;
            for (const json& c : p["covers"]) {
                if (!c.is_array() || c.size() != 2)
                    throw ParseError("each cover must be a pair [src, dst]");
                covers.emplace_back(get_small_int(c[0], "cover src", 0, size - 1),
                                    get_small_int(c[1], "cover dst", 0, size - 1));
            }
            return build_custom(size, covers);
        }
    } catch (const MalformedShape& e) {
        throw ParseError(std::string("poset: ") + e.what());
    }
    throw ParseError("unknown poset shape '" + shape + "'");
}

json poset_to_json(const FinitePoset& P) {
    json p;
    switch (P.kind) {
        case ShapeKind::Chain:
            p["shape"] = "chain";
            p["n"] = P.size;
            return p;
        case ShapeKind::Grid:
            p["shape"] = "grid";
            p["m"] = P.m;
            p["n"] = P.n;
            return p;
        case ShapeKind::Triangle:
            p["shape"] = "triangle";
            p["m"] = P.m;
            p["n"] = P.n;
            p["cutoff"] = P.cutoff;
            return p;
        case ShapeKind::Zigzag: {
            std::string steps;
            for (bool r : P.zz_steps) steps += r ? 'r' : 'd';
            p["shape"] = "zigzag";
            p["steps"] = steps;
            return p;
        }
        case ShapeKind::Opposite:
            p["shape"] = "opposite";
            p["of"] = poset_to_json(*P.opposite_of);
            return p;
        case ShapeKind::Custom:
        default:
            p["shape"] = "custom";
            p["size"] = P.size;
            p["covers"] = json::array();
            for (auto [s, d] : P.covers) p["covers"].push_back(json::array({s, d}));
            return p;
    }
}

Rational parse_rational_json(const json& v, const std::string& ctx) {
    if (v.is_number_integer()) return make_rational(v.get<long long>(), 1);
    if (v.is_string()) return parse_rational(v.get<std::string>());
    throw ParseError(ctx + ": rationals are integers or strings like '-7/2'");
}

std::vector<Rational> parse_rational_array(const json& v, const std::string& ctx) {
    if (!v.is_array()) throw ParseError(ctx + " must be an array");
    std::vector<Rational> out;
    for (const json& x : v) out.push_back(parse_rational_json(x, ctx));
    return out;
}

} // namespace

PersistenceModule parse_module(const std::string& text) {
    json doc = parse_text(text);
    if (!doc.is_object()) throw ParseError("module document must be a JSON object");
    require_keys(doc, "module", {"field_char", "poset", "dims", "maps"});
    if (!doc.contains("poset")) throw ParseError("missing key 'poset'");

    std::uint32_t p = default_field_char();
    if (doc.contains("field_char"))
        p = (std::uint32_t)get_small_int(doc["field_char"], "field_char", 2, (1LL << 31) - 1);
    FieldSpec F(p); // rejects non-primes with a ParseError

    PosetPtr P = parse_poset(doc["poset"]);
    std::vector<int> dims(P->size, 0);
    if (doc.contains("dims")) {
        if (!doc["dims"].is_object()) throw ParseError("dims must be an object");
        for (auto it = doc["dims"].begin(); it != doc["dims"].end(); ++it) {
            int id = parse_id(it.key(), "dims");
            if (id >= P->size) throw ParseError("dims: element id " + it.key() + " out of range");
            dims[id] = get_small_int(it.value(), "dims." + it.key(), 0, 16384);
        }
    }

    std::vector<Matrix> maps;
    for (auto [s, d] : P->covers) maps.emplace_back(dims[d], dims[s]);
    std::vector<char> given(P->covers.size(), 0);
    if (doc.contains("maps")) {
        if (!doc["maps"].is_object()) throw ParseError("maps must be an object");
        for (auto it = doc["maps"].begin(); it != doc["maps"].end(); ++it) {
            const std::string& key = it.key();
            size_t arrow = key.find("->");
            if (arrow == std::string::npos)
                throw ParseError("maps: key '" + key + "' is not of the form 'src->dst'");
            int s = parse_id(key.substr(0, arrow), "maps");
            int d = parse_id(key.substr(arrow + 2), "maps");
            if (s >= P->size || d >= P->size)
                throw ParseError("maps: element id out of range in '" + key + "'");
            int k = find_cover(*P, s, d);
            if (k < 0) throw ParseError("maps: '" + key + "' is not a cover of the poset");
            if (!it.value().is_array())
                throw ParseError("maps." + key + " must be a flat row-major array");
            const json& arr = it.value();
            Matrix& A = maps[k];
            if ((long long)arr.size() != (long long)A.rows * A.cols)
                throw ParseError("maps." + key + " has " + std::to_string(arr.size()) +
                                 " entries, expected " + std::to_string(A.rows * A.cols));
            for (size_t i = 0; i < arr.size(); ++i)
                A.a[i] = F.reduce(get_int(arr[i], "maps." + key));
            given[k] = 1;
        }
    }
    for (size_t k = 0; k < P->covers.size(); ++k)
        if (!given[k] && maps[k].rows > 0 && maps[k].cols > 0)
            throw ParseError("maps: missing entry for cover '" +
                             std::to_string(P->covers[k].first) + "->" +
                             std::to_string(P->covers[k].second) + "'");

    PersistenceModule M{P, F, std::move(dims), std::move(maps)};
    validate(M);
    return M;
}

std::string serialize_module(const PersistenceModule& M) {
    json doc;
    doc["field_char"] = M.field.p;
    doc["poset"] = poset_to_json(*M.poset);
    json dims = json::object();
    for (int x = 0; x < M.poset->size; ++x) dims[std::to_string(x)] = M.dims[x];
    doc["dims"] = dims;
    json maps = json::object();
    for (size_t k = 0; k < M.poset->covers.size(); ++k) {
        const Matrix& A = M.maps[k];
        if (A.rows == 0 || A.cols == 0) continue;
        auto [s, d] = M.poset->covers[k];
        maps[std::to_string(s) + "->" + std::to_string(d)] = A.a;
    }
    doc["maps"] = maps;
    return doc.dump(2) + "\n";
}

GeneratorSpec parse_interval_spec(const std::string& text) {
    json doc = parse_text(text);
    if (!doc.is_object()) throw ParseError("generator spec must be a JSON object");
    require_keys(doc, "generator spec", {"poset", "carriers", "scramble"});
    if (!doc.contains("poset") || !doc.contains("carriers"))
        throw ParseError("generator spec needs 'poset' and 'carriers'");

    GeneratorSpec spec;
    spec.poset = parse_poset(doc["poset"]);
    if (!doc["carriers"].is_array()) throw ParseError("carriers must be an array");
    for (const json& c : doc["carriers"]) {
        if (!c.is_object()) throw ParseError("each carrier entry must be an object");
        require_keys(c, "carrier entry", {"carrier", "multiplicity"});
        if (!c.contains("carrier") || !c["carrier"].is_array())
            throw ParseError("carrier entry needs an array key 'carrier'");
        std::vector<int> carrier;
        for (const json& x : c["carrier"])
            carrier.push_back(get_small_int(x, "carrier element", 0, spec.poset->size - 1));
        int mult = 1;
        if (c.contains("multiplicity")) mult = get_small_int(c["multiplicity"], "multiplicity", 1, 4096);
        spec.carriers.emplace_back(std::move(carrier), mult);
    }
    if (doc.contains("scramble")) {
        if (!doc["scramble"].is_boolean()) throw ParseError("scramble must be a boolean");
        spec.scramble = doc["scramble"].get<bool>();
    }
    return spec;
}

SampledFunction parse_function_spec(const std::string& text) {
    json doc = parse_text(text);
    if (!doc.is_object()) throw ParseError("function spec must be a JSON object");
    require_keys(doc, "function spec", {"samples", "thresholds", "s_grid", "t_grid"});
    if (!doc.contains("samples")) throw ParseError("function spec needs 'samples'");
    SampledFunction f;
    f.values = parse_rational_array(doc["samples"], "samples");
    if (doc.contains("thresholds"))
        f.sublevel_thresholds = parse_rational_array(doc["thresholds"], "thresholds");
    if (doc.contains("s_grid")) f.s_grid = parse_rational_array(doc["s_grid"], "s_grid");
    if (doc.contains("t_grid")) f.t_grid = parse_rational_array(doc["t_grid"], "t_grid");
    return f;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw IoError("failed while reading '" + path + "'");
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << content;
    out.flush();
    if (!out) throw IoError("failed while writing '" + path + "'");
}

} // namespace pmd
