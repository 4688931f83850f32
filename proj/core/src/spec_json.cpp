#include "uff/spec_json.hpp"

#include <json.hpp>

namespace uff {

namespace {

using nlohmann::json;

json parse_document(std::string_view text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw ParseError("invalid JSON document");
    return doc;
}

std::vector<int> as_elements(const json& arr, const char* what) {
    if (!arr.is_array()) throw ParseError(std::string(what) + ": subset must be an array");
    std::vector<int> elems;
    elems.reserve(arr.size());
    for (const auto& e : arr) {
        if (!e.is_number_integer()) throw ParseError(std::string(what) + ": elements must be integers");
        elems.push_back(e.get<int>());
    }
    return elems;
}

Family family_from_json(const json& arr, int n, const char* what) {
    if (!arr.is_array()) throw ParseError(std::string(what) + ": family must be an array of subsets");
    std::vector<SubsetMask> members;
    members.reserve(arr.size());
    for (const auto& sub : arr) {
        try {
            members.push_back(subset_from_elements(as_elements(sub, what), n));
        } catch (const std::invalid_argument& e) {
            throw ParseError(std::string(what) + ": " + e.what());
        }
    }
    try {
        return Family::of(n, std::move(members));
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string(what) + ": " + e.what());
    }
}

int max_element_of(const json& families) {
    int m = 0;
    for (const auto& fam : families)
        for (const auto& sub : fam)
            for (const auto& e : sub)
                if (e.is_number_integer()) m = std::max(m, e.get<int>());
    return m;
}

}  // namespace

CushionSpec cushion_spec_from_json(std::string_view text) {
    const json doc = parse_document(text);
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("levels"))
        throw ParseError("cushion spec needs \"n\" and \"levels\"");
    if (!doc["n"].is_number_integer()) throw ParseError("\"n\" must be an integer");
    CushionSpec spec;
    spec.n = doc["n"].get<int>();
    if (spec.n < 1 || spec.n > kMaxGround) throw ParseError("\"n\" must be in [1,64]");
    const json& levels = doc["levels"];
    if (!levels.is_array() || levels.empty()) throw ParseError("\"levels\" must be a non-empty array");
    for (std::size_t j = 0; j < levels.size(); ++j) {
        const json& lvl = levels[j];
        const std::string what = "level " + std::to_string(j + 1);
        if (!lvl.is_object() || !lvl.contains("m") || !lvl.contains("h") || !lvl.contains("cushion"))
            throw ParseError(what + ": needs \"m\", \"h\" and \"cushion\"");
        if (!lvl["m"].is_number_integer() || !lvl["h"].is_number_integer())
            throw ParseError(what + ": \"m\" and \"h\" must be integers");
        CushionLevel out;
        out.m = lvl["m"].get<int>();
        out.h = lvl["h"].get<int>();
        out.cushion = family_from_json(lvl["cushion"], spec.n, what.c_str());
        spec.levels.push_back(std::move(out));
    }
    spec.validate();
    return spec;
}

LayeredSpec layered_spec_from_json(std::string_view text) {
    const json doc = parse_document(text);
    if (!doc.is_object() || !doc.contains("fs") || !doc.contains("gs"))
        throw ParseError("layered spec needs \"fs\" and \"gs\"");
    const json& fs = doc["fs"];
    const json& gs = doc["gs"];
    if (!fs.is_array() || !gs.is_array()) throw ParseError("\"fs\" and \"gs\" must be arrays");

    int n = 0;
    if (doc.contains("n")) {
        if (!doc["n"].is_number_integer()) throw ParseError("\"n\" must be an integer");
        n = doc["n"].get<int>();
    } else {
        n = std::max(max_element_of(fs), max_element_of(gs));
    }
    if (n < 1 || n > kMaxGround) throw ParseError("ground size must be in [1,64]");

    LayeredSpec spec;
    for (std::size_t j = 0; j < fs.size(); ++j)
        spec.fs.push_back(family_from_json(fs[j], n, ("F" + std::to_string(j + 1)).c_str()));
    for (std::size_t j = 0; j < gs.size(); ++j)
        spec.gs.push_back(family_from_json(gs[j], n, ("G" + std::to_string(j + 1)).c_str()));
    spec.validate();
    return spec;
}

}  // namespace uff
