/**
 * Batch command-line interface.
 *
 * Subcommands operate on workspace documents (JSON files, or built-in
 * examples via "fixture:NAME").  Exit codes: 0 success / affirmative answer,
 * 1 negative answer, 2 input error, 3 budget exhausted (unknown).
 * All output is deterministic; --json switches to a stable machine-readable
 * form.
 */

#include "fintop/document.hpp"
#include "fintop/dynamics.hpp"
#include "fintop/fixtures.hpp"
#include "fintop/homology.hpp"
#include "fintop/lefschetz.hpp"
#include "fintop/multimap.hpp"
#include "fintop/poset.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using json = nlohmann::ordered_json;
using namespace fintop;

constexpr int exit_ok = 0;
constexpr int exit_negative = 1;
constexpr int exit_input_error = 2;
constexpr int exit_unknown = 3;

workspace_document load_document(const std::string& file)
{
    if (file.rfind("fixture:", 0) == 0)
        return fixture(file.substr(8));
    std::ifstream in(file);
    if (!in)
        throw std::invalid_argument("cannot open file '" + file + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_document(ss.str());
}

const multivalued_map& pick_map(const workspace& w, const std::string& name)
{
    auto it = w.maps.find(name);
    if (it == w.maps.end())
    {
        std::string msg = "no map named '" + name + "' in document; available:";
        for (const auto& [n, m] : w.maps)
            msg += " " + n;
        throw std::invalid_argument(msg);
    }
    return it->second;
}

json map_to_json(const multivalued_map& f)
{
    json j = json::object();
    for (int i = 0; i < f.domain().size(); ++i)
        j[f.domain().name(i)] = set_names(f.codomain(), f.value(i));
    return j;
}

json function_to_json(const poset& x, const monotone_map& f)
{
    json j = json::object();
    for (int i = 0; i < x.size(); ++i)
        j[x.name(i)] = x.name(f[i]);
    return j;
}

std::string map_to_line(const multivalued_map& f)
{
    std::string s;
    for (int i = 0; i < f.domain().size(); ++i)
    {
        if (i)
            s += "  ";
        s += f.domain().name(i) + " -> {";
        const auto& v = f.value(i);
        for (size_t k = 0; k < v.size(); ++k)
            s += (k ? "," : "") + f.codomain().name(v[k]);
        s += "}";
    }
    return s;
}

void emit(bool as_json, const json& j, const std::string& text)
{
    if (as_json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

json witness_json(const poset& x, const semicontinuity_witness& w)
{
    return json{{"x1", x.name(w.x1)}, {"x2", x.name(w.x2)}, {"y", x.name(w.y)}};
}

int out_of(outcome o)
{
    switch (o)
    {
        case outcome::yes: return exit_ok;
        case outcome::no: return exit_negative;
        default: return exit_unknown;
    }
}

int run(int argc, char** argv)
{
    CLI::App app{"exact fixed point toolkit for finite T0 spaces"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable output");

    std::string file, map_name = "F", map2_name;
    long long budget = 1000000;
    std::string via = "homology";
    bool verify_all = false, enumerate_only = false;
    std::string example_name;

    auto* c_validate = app.add_subcommand("validate", "parse and validate a document");
    c_validate->add_option("file", file)->required();

    auto* c_homology = app.add_subcommand("homology", "integral homology of the space");
    c_homology->add_option("file", file)->required();

    auto* c_classify = app.add_subcommand("classify", "semicontinuity of a map");
    c_classify->add_option("file", file)->required();
    c_classify->add_option("--map", map_name);
    c_classify->add_flag("--verify-all-characterizations", verify_all);

    auto* c_lef = app.add_subcommand("lefschetz", "Lefschetz number of a map");
    c_lef->add_option("file", file)->required();
    c_lef->add_option("--map", map_name);
    c_lef->add_option("--via", via)->check(CLI::IsMember({"homology", "carrier", "both"}));

    auto* c_fixed = app.add_subcommand("fixed-points", "fixed points of a map");
    c_fixed->add_option("file", file)->required();
    c_fixed->add_option("--map", map_name);

    auto* c_certify = app.add_subcommand("certify", "Lefschetz fixed point certificate");
    c_certify->add_option("file", file)->required();
    c_certify->add_option("--map", map_name);

    auto* c_sel = app.add_subcommand("selectors", "continuous selectors of a map");
    c_sel->add_option("file", file)->required();
    c_sel->add_option("--map", map_name);
    c_sel->add_option("--budget", budget);

    auto* c_core = app.add_subcommand("core", "beat-point core and contractibility");
    c_core->add_option("file", file)->required();

    auto* c_fpp = app.add_subcommand("fpp", "fixed point property for continuous maps");
    c_fpp->add_option("file", file)->required();
    c_fpp->add_option("--budget", budget);
    c_fpp->add_flag("--enumerate-only", enumerate_only, "skip the rigidity fast path");

    auto* c_mfpp = app.add_subcommand("mfpp", "fixed point property for multivalued maps");
    c_mfpp->add_option("file", file)->required();
    c_mfpp->add_option("--budget", budget);
    c_mfpp->add_flag("--enumerate-only", enumerate_only, "skip the complement-map probe");

    auto* c_hom = app.add_subcommand("homotopic", "fence search between two maps");
    c_hom->add_option("file", file)->required();
    c_hom->add_option("--map", map_name);
    c_hom->add_option("--map2", map2_name)->required();
    c_hom->add_option("--budget", budget);

    auto* c_class = app.add_subcommand("homotopy-class", "homotopy class of a map");
    c_class->add_option("file", file)->required();
    c_class->add_option("--map", map_name);
    c_class->add_option("--budget", budget);

    auto* c_audit = app.add_subcommand("audit", "rationally acyclic => MFPP => FPP audit");
    c_audit->add_option("file", file)->required();
    c_audit->add_option("--budget", budget);

    auto* c_ex = app.add_subcommand("examples", "list or print built-in examples");
    c_ex->add_option("name", example_name);

    CLI11_PARSE(app, argc, argv);

    if (c_ex->parsed())
    {
        if (example_name.empty())
        {
            json j = json::array();
            std::string text;
            for (const auto& n : fixture_names())
            {
                j.push_back(n);
                text += n + "\n";
            }
            emit(as_json, j, text);
            return exit_ok;
        }
        std::cout << serialize_document(fixture(example_name));
        return exit_ok;
    }

    workspace_document doc = load_document(file);
    workspace w = materialize(doc);
    const poset& space = w.space;

    if (c_validate->parsed())
    {
        json j{{"valid", true},
               {"elements", space.size()},
               {"covers", space.cover_pairs().size()}};
        json maps = json::array(), fns = json::array();
        std::string text = "valid: " + std::to_string(space.size()) + " elements, " +
                           std::to_string(space.cover_pairs().size()) + " covers";
        for (const auto& [n, m] : w.maps)
            maps.push_back(n);
        for (const auto& [n, m] : w.functions)
            fns.push_back(n);
        j["maps"] = maps;
        j["functions"] = fns;
        text += "; maps:";
        for (const auto& [n, m] : w.maps)
            text += " " + n;
        text += "; functions:";
        for (const auto& [n, m] : w.functions)
            text += " " + n;
        emit(as_json, j, text + "\n");
        return exit_ok;
    }

    if (c_homology->parsed())
    {
        simplicial_complex k = order_complex(space);
        homology_data h = homology(k);
        json j;
        j["betti"] = h.betti();
        json tors = json::array();
        for (const auto& d : h.deg)
        {
            json t = json::array();
            for (const auto& v : d.torsion)
                t.push_back(v.str());
            tors.push_back(t);
        }
        j["torsion"] = tors;
        j["euler_characteristic"] = euler_characteristic(k);
        std::string text = "betti:";
        for (int b : h.betti())
            text += " " + std::to_string(b);
        text += "\ntorsion:";
        for (const auto& d : h.deg)
        {
            text += " [";
            for (size_t i = 0; i < d.torsion.size(); ++i)
                text += (i ? "," : "") + d.torsion[i].str();
            text += "]";
        }
        text += "\neuler characteristic: " + std::to_string(euler_characteristic(k)) + "\n";
        emit(as_json, j, text);
        return exit_ok;
    }

    if (c_classify->parsed())
    {
        const multivalued_map& f = pick_map(w, map_name);
        semicontinuity_report rep = classify(f, verify_all);
        value_acyclicity_report va = has_acyclic_values(f);
        json j{{"usc", rep.usc}, {"lsc", rep.lsc}, {"susc", rep.susc}, {"slsc", rep.slsc}};
        if (rep.usc_witness)
            j["usc_witness"] = witness_json(space, *rep.usc_witness);
        if (rep.lsc_witness)
            j["lsc_witness"] = witness_json(space, *rep.lsc_witness);
        if (rep.susc_witness)
            j["susc_witness"] = witness_json(space, *rep.susc_witness);
        if (rep.slsc_witness)
            j["slsc_witness"] = witness_json(space, *rep.slsc_witness);
        j["acyclic_values"] = va.all_acyclic;
        j["verified_all_characterizations"] = rep.verified_all;
        auto flag = [](bool b) { return b ? std::string("yes") : std::string("no"); };
        std::string text = "usc: " + flag(rep.usc) + "\nlsc: " + flag(rep.lsc) +
                           "\nsusc: " + flag(rep.susc) + "\nslsc: " + flag(rep.slsc) +
                           "\nacyclic values: " + flag(va.all_acyclic) + "\n";
        if (rep.susc_witness)
            text += "susc violation: '" + space.name(rep.susc_witness->x1) + "' <= '" +
                    space.name(rep.susc_witness->x2) + "' loses '" +
                    space.name(rep.susc_witness->y) + "'\n";
        emit(as_json, j, text);
        return rep.usc || rep.lsc ? exit_ok : exit_negative;
    }

    if (c_lef->parsed())
    {
        const multivalued_map& f = pick_map(w, map_name);
        json j{{"via", via}};
        std::string text;
        if (via == "homology" || via == "both")
        {
            bigint l = lefschetz_number(f, lefschetz_route::homology);
            j["homology"] = l.str();
            text += "L (homology route) = " + l.str() + "\n";
        }
        if (via == "carrier" || via == "both")
        {
            bigint l = lefschetz_number(f, lefschetz_route::carrier);
            j["carrier"] = l.str();
            text += "L (carrier route)  = " + l.str() + "\n";
        }
        emit(as_json, j, text);
        return exit_ok;
    }

    if (c_fixed->parsed())
    {
        const multivalued_map& f = pick_map(w, map_name);
        element_set fp = fixed_points(f);
        json j{{"fixed_points", set_names(space, fp)}};
        std::string text = "fixed points:";
        for (int i : fp)
            text += " " + space.name(i);
        emit(as_json, j, text + "\n");
        return fp.empty() ? exit_negative : exit_ok;
    }

    if (c_certify->parsed())
    {
        const multivalued_map& f = pick_map(w, map_name);
        fixed_point_certificate cert = certify(f);
        bool certified = cert.lefschetz != 0;
        json j{{"lefschetz", cert.lefschetz.str()},
               {"fixed_points", set_names(space, cert.fixed)},
               {"certified", certified},
               {"method", "homology"}};
        std::string text = "L = " + cert.lefschetz.str() + "\nfixed points:";
        for (int i : cert.fixed)
            text += " " + space.name(i);
        text += certified ? "\ncertificate: L != 0 forces a fixed point\n"
                          : "\ncertificate: none (L = 0)\n";
        emit(as_json, j, text);
        return certified ? exit_ok : exit_negative;
    }

    if (c_sel->parsed())
    {
        const multivalued_map& f = pick_map(w, map_name);
        auto res = selectors(f, budget);
        json j{{"complete", res.complete}, {"count", res.items.size()}};
        json arr = json::array();
        std::string text;
        for (const auto& s : res.items)
        {
            arr.push_back(function_to_json(space, s));
            for (int i = 0; i < space.size(); ++i)
                text += (i ? " " : "") + space.name(i) + "->" + space.name(s[i]);
            text += "\n";
        }
        j["selectors"] = arr;
        text += std::to_string(res.items.size()) + " selector(s)" +
                (res.complete ? "" : " (budget exhausted)") + "\n";
        emit(as_json, j, text);
        if (!res.complete)
            return exit_unknown;
        return res.items.empty() ? exit_negative : exit_ok;
    }

    if (c_core->parsed())
    {
        poset c = core(space);
        bool contractible = c.size() == 1;
        json j{{"core", c.elements()}, {"size", c.size()}, {"contractible", contractible}};
        std::string text = "core:";
        for (const auto& e : c.elements())
            text += " " + e;
        text += contractible ? "\ncontractible: yes\n" : "\ncontractible: no\n";
        emit(as_json, j, text);
        return contractible ? exit_ok : exit_negative;
    }

    if (c_fpp->parsed())
    {
        fpp_result r = has_fpp(space, budget, enumerate_only);
        json j{{"verdict", to_string(r.verdict)},
               {"fast_path", r.used_fast_path},
               {"examined", r.examined}};
        std::string text = std::string("FPP: ") + to_string(r.verdict) + "\n";
        if (r.witness)
        {
            j["witness"] = function_to_json(space, *r.witness);
            text += "fixed point free map:";
            for (int i = 0; i < space.size(); ++i)
                text += " " + space.name(i) + "->" + space.name((*r.witness)[i]);
            text += "\n";
        }
        emit(as_json, j, text);
        return out_of(r.verdict);
    }

    if (c_mfpp->parsed())
    {
        mfpp_result r = has_mfpp(space, budget, enumerate_only);
        json j{{"verdict", to_string(r.verdict)},
               {"witness_is_complement_map", r.witness_is_complement},
               {"examined", r.examined}};
        std::string text = std::string("MFPP: ") + to_string(r.verdict) + "\n";
        if (r.witness)
        {
            j["witness"] = map_to_json(*r.witness);
            text += "fixed point free susc acyclic map:\n  " + map_to_line(*r.witness) + "\n";
            if (r.witness_is_complement)
                text += "  (the complement-of-closure map)\n";
        }
        emit(as_json, j, text);
        return out_of(r.verdict);
    }

    if (c_hom->parsed())
    {
        const multivalued_map& f = pick_map(w, map_name);
        const multivalued_map& g = pick_map(w, map2_name);
        homotopy_result r = are_homotopic(f, g, budget);
        json j{{"verdict", to_string(r.verdict)}, {"examined", r.examined}};
        std::string text = std::string("homotopic: ") + to_string(r.verdict) + "\n";
        if (r.witness)
        {
            json fencej = json::array();
            for (size_t i = 0; i < r.witness->maps.size(); ++i)
            {
                fencej.push_back(map_to_json(r.witness->maps[i]));
                text += "  " + map_to_line(r.witness->maps[i]) + "\n";
                if (i < r.witness->step_le.size())
                    text += r.witness->step_le[i] ? "  <=\n" : "  >=\n";
            }
            j["fence"] = fencej;
            json steps = json::array();
            for (bool b : r.witness->step_le)
                steps.push_back(b ? "le" : "ge");
            j["steps"] = steps;
        }
        emit(as_json, j, text);
        return out_of(r.verdict);
    }

    if (c_class->parsed())
    {
        const multivalued_map& f = pick_map(w, map_name);
        auto r = homotopy_class(f, budget);
        json j{{"complete", r.complete}, {"size", r.items.size()}};
        json arr = json::array();
        std::string text;
        for (const auto& m : r.items)
        {
            arr.push_back(map_to_json(m));
            text += "  " + map_to_line(m) + "\n";
        }
        j["members"] = arr;
        text += "class size " + std::to_string(r.items.size()) +
                (r.complete ? "" : " (budget exhausted)") + "\n";
        emit(as_json, j, text);
        return r.complete ? exit_ok : exit_unknown;
    }

    if (c_audit->parsed())
    {
        audit_report rep = implication_audit(space, budget);
        json j{{"rationally_acyclic", rep.rationally_acyclic},
               {"mfpp", to_string(rep.mfpp)},
               {"fpp", to_string(rep.fpp)},
               {"implication_chain_consistent", true}};
        std::string text = std::string("rationally acyclic: ") +
                           (rep.rationally_acyclic ? "yes" : "no") + "\nMFPP: " +
                           to_string(rep.mfpp) + "\nFPP: " + to_string(rep.fpp) +
                           "\nimplication chain: consistent\n";
        emit(as_json, j, text);
        bool unknown = rep.mfpp == outcome::unknown || rep.fpp == outcome::unknown;
        return unknown ? exit_unknown : exit_ok;
    }

    return exit_input_error;
}

} // namespace

int main(int argc, char** argv)
{
    try
    {
        return run(argc, argv);
    }
    catch (const std::invalid_argument& e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input_error;
    }
    catch (const std::logic_error& e)
    {
        std::cerr << "internal error (this falsifies the implementation): " << e.what() << "\n";
        return exit_input_error;
    }
    catch (const std::exception& e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input_error;
    }
}
