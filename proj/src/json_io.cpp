#include "mvpoly/json_io.hpp"

namespace mvpoly {

namespace {
const json& field(const json& j, const char* name) {
    if (!j.is_object() || !j.contains(name))
        throw schema_error(std::string("missing field '") + name + "'");
    return j.at(name);
}

IntVec int_vector(const json& j, const char* what) {
    if (!j.is_array()) throw schema_error(std::string(what) + " must be an array");
    IntVec out;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw schema_error(std::string(what) + " must hold integers");
        out.push_back(x.get<Int>());
    }
    return out;
}
} // namespace

json cartan_to_json(const CartanData& c) {
    return json{{"kind", std::string(1, c.kind())}, {"rank", c.rank()}};
}

CartanData cartan_from_json(const json& j) {
    const json& kind = field(j, "kind");
    const json& rank = field(j, "rank");
    if (!kind.is_string() || kind.get<std::string>().size() != 1 || !rank.is_number_integer())
        throw schema_error("cartan must look like {\"kind\": \"A\", \"rank\": 2}");
    return CartanData::build(kind.get<std::string>()[0], rank.get<int>());
}

json element_to_json(const WeylElement& w) {
    return json{{"word", w.word}};
}

json polytope_to_json(const MVContext& ctx, const BZData& bz) {
    json arr = json::array();
    for (int c = 0; c < ctx.num_chambers(); ++c)
        arr.push_back({{"weight", ctx.chamber(c).weight.c}, {"value", bz.m[c]}});
    return json{{"cartan", cartan_to_json(ctx.cartan())}, {"bz", arr}};
}

BZData polytope_from_json(const MVContext& ctx, const json& j) {
    const json& arr = field(j, "bz");
    if (!arr.is_array()) throw schema_error("'bz' must be an array");
    BZData bz;
    bz.m.assign(ctx.num_chambers(), 0);
    std::vector<char> seen(ctx.num_chambers(), 0);
    for (const auto& entry : arr) {
        Weight wt{int_vector(field(entry, "weight"), "weight")};
        const json& value = field(entry, "value");
        if (!value.is_number_integer()) throw schema_error("'value' must be an integer");
        if (static_cast<int>(wt.c.size()) != ctx.rank())
            throw schema_error("weight length does not match the rank");
        int c = ctx.chamber_index(wt); // math_error if not a chamber weight
        if (seen[c]) throw schema_error("duplicate chamber weight in 'bz'");
        seen[c] = 1;
        bz.m[c] = value.get<Int>();
    }
    for (char s : seen)
        if (!s) throw schema_error("'bz' must assign every chamber weight");
    return bz;
}

json lusztig_to_json(const Word& word, const IntVec& n) {
    return json{{"word", word}, {"n", n}};
}

std::pair<Word, IntVec> lusztig_from_json(const json& j) {
    IntVec w = int_vector(field(j, "word"), "word");
    IntVec n = int_vector(field(j, "n"), "n");
    if (w.size() != n.size()) throw schema_error("'word' and 'n' must have equal length");
    Word word;
    for (Int x : w) word.push_back(static_cast<int>(x));
    return {word, n};
}

json vertices_to_json(const MVContext& ctx, const MVPolytope& P) {
    json arr = json::array();
    for (int k = 0; k < ctx.num_elements(); ++k)
        arr.push_back({{"w", ctx.element(k).word}, {"mu", P.mu[k].c}});
    return json{{"cartan", cartan_to_json(ctx.cartan())}, {"vertices", arr}};
}

} // namespace mvpoly
