/**
 * The JSON workspace document: one poset plus named multivalued maps and
 * named single-valued functions over it.
 *
 *   {
 *     "poset":     { "elements": ["a", ...], "covers": [["lower","upper"], ...] },
 *     "maps":      { "F": { "a": ["a","b"], ... }, ... },
 *     "functions": { "f": { "a": "b", ... }, ... }
 *   }
 *
 * Parsing canonicalizes: covers are normalized to the transitive reduction,
 * value lists are sorted in element order, and every identifier is checked.
 * Serialization is byte-deterministic, so parse(serialize(d)) == d.
 */

#pragma once

#include "fintop/multimap.hpp"
#include "fintop/poset.hpp"

#include <json.hpp>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace fintop {

struct workspace_document {
    std::vector<std::string> elements;
    std::vector<std::pair<std::string, std::string>> covers;
    /// per map name, one value list per element (aligned with `elements`)
    std::map<std::string, std::vector<std::vector<std::string>>> maps;
    /// per function name, one image element per element
    std::map<std::string, std::vector<std::string>> functions;

    bool operator==(const workspace_document&) const = default;
};

/** Materialized document: the poset plus validated maps and functions. */
struct workspace {
    poset space;
    std::map<std::string, multivalued_map> maps;
    std::map<std::string, monotone_map> functions;
};

inline workspace materialize(const workspace_document& doc)
{
    workspace w{poset::from_covers(doc.elements, doc.covers), {}, {}};
    for (const auto& [name, table] : doc.maps)
    {
        if (table.size() != doc.elements.size())
            throw std::invalid_argument("document: map '" + name +
                                        "' must assign a value to every element");
        std::vector<element_set> values;
        values.reserve(table.size());
        for (const auto& lst : table)
            values.push_back(set_from_names(w.space, lst));
        w.maps.emplace(name, multivalued_map(w.space, w.space, std::move(values)));
    }
    for (const auto& [name, table] : doc.functions)
    {
        if (table.size() != doc.elements.size())
            throw std::invalid_argument("document: function '" + name +
                                        "' must assign an image to every element");
        monotone_map f;
        f.reserve(table.size());
        for (const auto& img : table)
            f.push_back(w.space.index_of(img));
        w.functions.emplace(name, std::move(f));
    }
    return w;
}

namespace detail {

inline const nlohmann::ordered_json& expect(const nlohmann::ordered_json& j,
                                            const char* key, const char* what)
{
    auto it = j.find(key);
    if (it == j.end())
        throw std::invalid_argument(std::string("document: missing field '") + key + "' (" +
                                    what + ")");
    return *it;
}

} // namespace detail

inline workspace_document parse_document(const std::string& text)
{
    nlohmann::ordered_json j;
    try
    {
        j = nlohmann::ordered_json::parse(text);
    }
    catch (const nlohmann::json::parse_error& e)
    {
        throw std::invalid_argument(std::string("document: not valid JSON: ") + e.what());
    }
    if (!j.is_object())
        throw std::invalid_argument("document: top level must be an object");

    workspace_document doc;
    const auto& jp = detail::expect(j, "poset", "object with elements and covers");
    const auto& je = detail::expect(jp, "elements", "array of identifier strings");
    if (!je.is_array())
        throw std::invalid_argument("document: poset.elements must be an array");
    for (const auto& e : je)
    {
        if (!e.is_string())
            throw std::invalid_argument("document: poset.elements entries must be strings");
        doc.elements.push_back(e.get<std::string>());
    }
    const auto& jc = detail::expect(jp, "covers", "array of [lower, upper] pairs");
    if (!jc.is_array())
        throw std::invalid_argument("document: poset.covers must be an array");
    for (const auto& c : jc)
    {
        if (!c.is_array() || c.size() != 2 || !c[0].is_string() || !c[1].is_string())
            throw std::invalid_argument(
                "document: each cover must be a [lower, upper] pair of strings");
        doc.covers.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
    }

    // validate and canonicalize against the poset
    poset space = poset::from_covers(doc.elements, doc.covers);
    doc.covers = space.cover_names();

    if (j.contains("maps"))
    {
        const auto& jm = j["maps"];
        if (!jm.is_object())
            throw std::invalid_argument("document: maps must be an object");
        for (const auto& [name, table] : jm.items())
        {
            if (!table.is_object())
                throw std::invalid_argument("document: map '" + name + "' must be an object");
            std::vector<std::vector<std::string>> values(doc.elements.size());
            std::vector<bool> seen(doc.elements.size(), false);
            for (const auto& [elem, lst] : table.items())
            {
                int i = space.index_of(elem);
                if (!lst.is_array() || lst.empty())
                    throw std::invalid_argument("document: map '" + name + "' at '" + elem +
                                                "' must be a nonempty array");
                element_set s;
                for (const auto& v : lst)
                {
                    if (!v.is_string())
                        throw std::invalid_argument("document: map '" + name + "' at '" + elem +
                                                    "' has a non-string entry");
                    s.push_back(space.index_of(v.get<std::string>()));
                }
                std::sort(s.begin(), s.end());
                s.erase(std::unique(s.begin(), s.end()), s.end());
                values[i] = set_names(space, s);
                seen[i] = true;
            }
            for (size_t i = 0; i < seen.size(); ++i)
                if (!seen[i])
                    throw std::invalid_argument("document: map '" + name + "' misses element '" +
                                                doc.elements[i] + "'");
            doc.maps[name] = std::move(values);
        }
    }
    if (j.contains("functions"))
    {
        const auto& jf = j["functions"];
        if (!jf.is_object())
            throw std::invalid_argument("document: functions must be an object");
        for (const auto& [name, table] : jf.items())
        {
            if (!table.is_object())
                throw std::invalid_argument("document: function '" + name +
                                            "' must be an object");
            std::vector<std::string> images(doc.elements.size());
            std::vector<bool> seen(doc.elements.size(), false);
            for (const auto& [elem, img] : table.items())
            {
                int i = space.index_of(elem);
                if (!img.is_string())
                    throw std::invalid_argument("document: function '" + name + "' at '" + elem +
                                                "' must be a string");
                space.index_of(img.get<std::string>()); // existence check
                images[i] = img.get<std::string>();
                seen[i] = true;
            }
            for (size_t i = 0; i < seen.size(); ++i)
                if (!seen[i])
                    throw std::invalid_argument("document: function '" + name +
                                                "' misses element '" + doc.elements[i] + "'");
            doc.functions[name] = std::move(images);
        }
    }
    return doc;
}

inline std::string serialize_document(const workspace_document& doc)
{
    nlohmann::ordered_json j;
    j["poset"]["elements"] = doc.elements;
    auto& jc = j["poset"]["covers"] = nlohmann::ordered_json::array();
    for (const auto& [lo, hi] : doc.covers)
        jc.push_back({lo, hi});
    auto& jm = j["maps"] = nlohmann::ordered_json::object();
    for (const auto& [name, table] : doc.maps)
    {
        auto& t = jm[name] = nlohmann::ordered_json::object();
        for (size_t i = 0; i < doc.elements.size(); ++i)
            t[doc.elements[i]] = table[i];
    }
    auto& jf = j["functions"] = nlohmann::ordered_json::object();
    for (const auto& [name, table] : doc.functions)
    {
        auto& t = jf[name] = nlohmann::ordered_json::object();
        for (size_t i = 0; i < doc.elements.size(); ++i)
            t[doc.elements[i]] = table[i];
    }
    return j.dump(2) + "\n";
}

} // namespace fintop
