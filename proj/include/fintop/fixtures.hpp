/**
 * Built-in example documents.
 *
 *   circle4       4-point circle model (two maximal over two minimal points)
 *   example-s1-F  circle4 with the degree-reversing multivalued map F
 *   example-L1    circle4 with the map whose image is contractible
 *   corona        6-point crown S^1 model, map F and its unique selector f
 *   corona-G      crown with comparable maps F >= G of different dynamics
 *   prop7         circle4 with the usc+lsc map admitting selectors of
 *                 different Lefschetz numbers
 *   sphere6       minimal 6-point S^2 model with its complement map Fc
 *   sphere-fig3   10-point S^2 model with the fixed point property, plus Fc
 *   chain2        the 2-chain
 */

#pragma once

#include "fintop/document.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace fintop {

inline std::vector<std::string> fixture_names()
{
    return {"circle4", "example-s1-F", "example-L1", "corona", "corona-G",
            "prop7",   "sphere6",      "sphere-fig3", "chain2"};
}

inline workspace_document fixture(const std::string& name)
{
    workspace_document d;
    auto circle = [&] {
        d.elements = {"a", "b", "c", "d"};
        d.covers = {{"c", "a"}, {"c", "b"}, {"d", "a"}, {"d", "b"}};
    };
    auto crown = [&] {
        d.elements = {"a", "a'", "b", "b'", "c", "c'"};
        d.covers = {{"a'", "a"}, {"c'", "a"}, {"a'", "b"},
                    {"b'", "b"}, {"b'", "c"}, {"c'", "c"}};
    };

    if (name == "circle4")
    {
        circle();
    }
    else if (name == "example-s1-F")
    {
        circle();
        d.maps["F"] = {{"a", "b", "c"}, {"a", "b", "d"}, {"a"}, {"b"}};
    }
    else if (name == "example-L1")
    {
        circle();
        d.maps["F"] = {{"a", "b", "c"}, {"a", "b", "c"}, {"a"}, {"b"}};
    }
    else if (name == "corona")
    {
        crown();
        d.maps["F"] = {{"a", "a'", "b", "b'", "c'"}, // F(a)
                       {"b'"},                       // F(a')
                       {"b'", "c", "c'"},            // F(b)
                       {"c'"},                       // F(b')
                       {"a", "a'", "c'"},            // F(c)
                       {"a'"}};                      // F(c')
        d.functions["f"] = {"b", "b'", "c", "c'", "a", "a'"};
    }
    else if (name == "corona-G")
    {
        crown();
        d.maps["F"] = {{"a", "a'", "b", "b'", "c'"},
                       {"b'"},
                       {"b'", "c", "c'"},
                       {"c'"},
                       {"a", "a'", "c'"},
                       {"a'"}};
        d.maps["G"] = {{"a'", "b", "b'"},
                       {"b'"},
                       {"b'", "c", "c'"},
                       {"c'"},
                       {"a", "a'", "c'"},
                       {"a'"}};
    }
    else if (name == "prop7")
    {
        circle();
        d.maps["F"] = {{"a", "b", "c"}, {"a", "b", "c"}, {"a", "c", "d"}, {"a", "c", "d"}};
        d.functions["identity"] = {"a", "b", "c", "d"};
        d.functions["fold"] = {"a", "a", "c", "c"};
    }
    else if (name == "sphere6")
    {
        d.elements = {"x1", "x2", "y1", "y2", "z1", "z2"};
        d.covers = {{"x1", "y1"}, {"x2", "y1"}, {"x1", "y2"}, {"x2", "y2"},
                    {"y1", "z1"}, {"y2", "z1"}, {"y1", "z2"}, {"y2", "z2"}};
        d.maps["Fc"] = {{"x2"},
                        {"x1"},
                        {"x1", "x2", "y2"},
                        {"x1", "x2", "y1"},
                        {"x1", "x2", "y1", "y2", "z2"},
                        {"x1", "x2", "y1", "y2", "z1"}};
    }
    else if (name == "sphere-fig3")
    {
        // Face poset of a CW sphere with vertices v1..v3, edges e1..e4 and
        // faces a, f1, f2; the digon face a is the unique maximal point
        // covering exactly two elements.
        d.elements = {"v1", "v2", "v3", "e1", "e2", "e3", "e4", "a", "f1", "f2"};
        d.covers = {{"v1", "e1"}, {"v2", "e1"}, {"v1", "e2"}, {"v2", "e2"},
                    {"v2", "e3"}, {"v3", "e3"}, {"v1", "e4"}, {"v3", "e4"},
                    {"e1", "a"},  {"e2", "a"},  {"e2", "f1"}, {"e3", "f1"},
                    {"e4", "f1"}, {"e1", "f2"}, {"e3", "f2"}, {"e4", "f2"}};
        d.maps["Fc"] = {{"v2", "v3", "e3"},
                        {"v1", "v3", "e4"},
                        {"v1", "v2", "e1", "e2", "a"},
                        {"v1", "v2", "v3", "e2", "e3", "e4", "f1"},
                        {"v1", "v2", "v3", "e1", "e3", "e4", "f2"},
                        {"v1", "v2", "v3", "e1", "e2", "e4", "a"},
                        {"v1", "v2", "v3", "e1", "e2", "e3", "a"},
                        {"v1", "v2", "v3", "e1", "e2", "e3", "e4", "f1", "f2"},
                        {"v1", "v2", "v3", "e1", "e2", "e3", "e4", "a", "f2"},
                        {"v1", "v2", "v3", "e1", "e2", "e3", "e4", "a", "f1"}};
    }
    else if (name == "chain2")
    {
        d.elements = {"0", "1"};
        d.covers = {{"0", "1"}};
    }
    else
    {
        std::string msg = "unknown fixture '" + name + "'; available:";
        for (const auto& n : fixture_names())
            msg += " " + n;
        throw std::invalid_argument(msg);
    }
    return d;
}

} // namespace fintop
