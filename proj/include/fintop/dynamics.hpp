/**
 * Fixed points, fixed point properties, and homotopies of multivalued maps.
 *
 * Brute-force testers enumerate monotone single-valued self-maps (FPP) or
 * susc acyclic-valued multivalued self-maps (MFPP) along the canonical
 * linear extension.  Budgets bound the number of candidate maps examined;
 * exhaustion is a third outcome distinct from yes/no.  Homotopy between susc
 * acyclic-valued maps is decided by searching the comparability graph of
 * pointwise value inclusion for a fence.
 */

#pragma once

#include "fintop/homology.hpp"
#include "fintop/lefschetz.hpp"
#include "fintop/multimap.hpp"
#include "fintop/poset.hpp"

#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace fintop {

enum class outcome { yes, no, unknown };

inline const char* to_string(outcome o)
{
    switch (o)
    {
        case outcome::yes: return "yes";
        case outcome::no: return "no";
        default: return "unknown";
    }
}

// ---------------------------------------------------------------------------
// fixed points

inline element_set fixed_points(const multivalued_map& f)
{
    if (!f.is_self_map())
        throw std::invalid_argument("fixed_points: self-map required");
    element_set out;
    for (int x = 0; x < f.domain().size(); ++x)
        if (set_contains(f.value(x), x))
            out.push_back(x);
    return out;
}

inline element_set fixed_points(const poset& x, const monotone_map& f)
{
    element_set out;
    for (int i = 0; i < x.size(); ++i)
        if (f.at(i) == i)
            out.push_back(i);
    return out;
}

/** From x <= f(x), iterate f until the orbit stabilizes at a fixed point. */
inline int transfer_fixed_point(const poset& x, const monotone_map& f, int start)
{
    if (!x.leq(start, f.at(start)))
        throw std::invalid_argument("transfer_fixed_point: start is not below its image");
    int cur = start;
    for (int steps = 0; steps <= x.size(); ++steps)
    {
        if (f[cur] == cur)
            return cur;
        cur = f[cur];
    }
    throw std::logic_error("transfer_fixed_point: orbit failed to stabilize");
}

// ---------------------------------------------------------------------------
// certification

struct fixed_point_certificate {
    bigint lefschetz;
    element_set fixed;
    lefschetz_route method;
};

/**
 * Compute L(F) and the fixed point set.  A nonzero Lefschetz number with an
 * empty fixed point set contradicts the fixed point theorem and aborts: it
 * would falsify the implementation, not the input.
 */
inline fixed_point_certificate certify(const multivalued_map& f,
                                       lefschetz_route route = lefschetz_route::homology)
{
    fixed_point_certificate cert{lefschetz_number(f, route), fixed_points(f), route};
    if (cert.lefschetz != 0 && cert.fixed.empty())
        throw std::logic_error("certify: nonzero Lefschetz number with no fixed point");
    return cert;
}

// ---------------------------------------------------------------------------
// streaming enumeration of self-maps

namespace detail {

/** All nonempty vertex masks of an n-element ground set, ordered as their
 *  ascending index tuples compare lexicographically. */
inline std::vector<uint32_t> canonical_subset_order(int n)
{
    if (n > 20)
        throw std::invalid_argument("subset enumeration supports at most 20 elements");
    std::vector<uint32_t> out;
    out.reserve((1u << n) - 1);
    auto rec = [&](auto&& self, uint32_t cur, int start) -> void {
        for (int i = start; i < n; ++i)
        {
            uint32_t m = cur | (1u << i);
            out.push_back(m);
            self(self, m, i + 1);
        }
    };
    rec(rec, 0u, 0);
    return out;
}

inline element_set mask_to_set(uint32_t mask, int n)
{
    element_set s;
    for (int i = 0; i < n; ++i)
        if (mask & (1u << i))
            s.push_back(i);
    return s;
}

inline uint32_t set_to_mask(const element_set& s)
{
    uint32_t m = 0;
    for (int i : s)
        m |= 1u << i;
    return m;
}

struct acyclicity_cache {
    const poset* space;
    std::vector<int8_t> memo; // -1 unknown, 0 no, 1 yes

    explicit acyclicity_cache(const poset& p)
        : space(&p), memo(size_t(1) << p.size(), -1)
    {
    }

    bool operator()(uint32_t mask)
    {
        int8_t& m = memo[mask];
        if (m < 0)
            m = is_acyclic(*space, mask_to_set(mask, space->size())) ? 1 : 0;
        return m == 1;
    }
};

/**
 * Stream all susc self-maps with acyclic values satisfying the per-element
 * mask constraints lo[x] <= H(x) <= hi[x].  The callback gets the value
 * masks; returning false stops the walk.  Returns {complete, emitted}.
 */
struct stream_stats {
    bool complete = true;
    long long emitted = 0;
};

template <typename Fn>
inline stream_stats for_each_susc_acyclic(const poset& x, const std::vector<uint32_t>& lo,
                                          const std::vector<uint32_t>& hi, long long budget,
                                          acyclicity_cache& acyclic, Fn&& fn)
{
    if (budget <= 0)
        throw std::invalid_argument("enumeration budget must be positive");
    const int n = x.size();
    const std::vector<uint32_t> order_masks = canonical_subset_order(n);
    const std::vector<int> ext = linear_extension(x);
    std::vector<std::vector<int>> lower(n);
    for (auto [a, b] : x.cover_pairs())
        lower[b].push_back(a);

    std::vector<uint32_t> chosen(n, 0);
    stream_stats st;
    bool stop = false;
    auto rec = [&](auto&& self, size_t k) -> void {
        if (stop)
            return;
        if (k == ext.size())
        {
            if (st.emitted >= budget)
            {
                st.complete = false;
                stop = true;
                return;
            }
            ++st.emitted;
            if (!fn(chosen))
                stop = true;
            return;
        }
        int e = ext[k];
        uint32_t need = lo[e];
        for (int c : lower[e])
            need |= chosen[c];
        for (uint32_t mask : order_masks)
        {
            if ((mask & need) != need)
                continue;
            if ((mask & ~hi[e]) != 0)
                continue;
            if (!acyclic(mask))
                continue;
            chosen[e] = mask;
            self(self, k + 1);
            chosen[e] = 0;
            if (stop)
                return;
        }
    };
    rec(rec, 0);
    return st;
}

template <typename Fn>
inline stream_stats for_each_susc_acyclic(const poset& x, long long budget,
                                          acyclicity_cache& acyclic, Fn&& fn)
{
    const uint32_t all = x.size() == 32 ? ~0u : (1u << x.size()) - 1;
    std::vector<uint32_t> lo(x.size(), 0), hi(x.size(), all);
    return for_each_susc_acyclic(x, lo, hi, budget, acyclic, std::forward<Fn>(fn));
}

template <typename Fn>
inline stream_stats for_each_monotone_self_map(const poset& x, long long budget, Fn&& fn)
{
    if (budget <= 0)
        throw std::invalid_argument("enumeration budget must be positive");
    const std::vector<int> ext = linear_extension(x);
    std::vector<std::vector<int>> lower(x.size());
    for (auto [a, b] : x.cover_pairs())
        lower[b].push_back(a);
    monotone_map f(x.size(), -1);
    stream_stats st;
    bool stop = false;
    auto rec = [&](auto&& self, size_t k) -> void {
        if (stop)
            return;
        if (k == ext.size())
        {
            if (st.emitted >= budget)
            {
                st.complete = false;
                stop = true;
                return;
            }
            ++st.emitted;
            if (!fn(const_cast<const monotone_map&>(f)))
                stop = true;
            return;
        }
        int e = ext[k];
        for (int cand = 0; cand < x.size(); ++cand)
        {
            bool ok = true;
            for (int c : lower[e])
                if (!x.leq(f[c], cand))
                {
                    ok = false;
                    break;
                }
            if (!ok)
                continue;
            f[e] = cand;
            self(self, k + 1);
            f[e] = -1;
            if (stop)
                return;
        }
    };
    rec(rec, 0);
    return st;
}

} // namespace detail

/** All susc acyclic-valued self-maps, materialized in canonical order. */
inline enumeration_result<multivalued_map> enumerate_susc_acyclic(const poset& x,
                                                                  long long budget)
{
    detail::acyclicity_cache cache(x);
    enumeration_result<multivalued_map> res;
    auto st = detail::for_each_susc_acyclic(
        x, budget, cache, [&](const std::vector<uint32_t>& masks) {
            std::vector<element_set> values;
            values.reserve(masks.size());
            for (uint32_t m : masks)
                values.push_back(detail::mask_to_set(m, x.size()));
            res.items.emplace_back(x, x, std::move(values));
            return true;
        });
    res.complete = st.complete;
    return res;
}

// ---------------------------------------------------------------------------
// fixed point properties

/**
 * Structural test enabling the fast fixed-point-property argument: the order
 * complex is a connected closed triangulated surface with the homology of
 * S^2, and a unique maximal point covers exactly two elements.  On such a
 * space every order automorphism fixes that point, and every non-surjective
 * monotone self-map has Lefschetz number 1, so the space has the FPP.
 */
struct rigidity_check {
    bool s2_homology = false;
    bool pseudomanifold = false;
    int distinguished = -1; ///< the unique maximal point covering two elements

    bool applies() const { return s2_homology && pseudomanifold && distinguished >= 0; }
};

inline rigidity_check sphere_rigidity_check(const poset& x)
{
    rigidity_check rc;
    simplicial_complex k = order_complex(x);
    homology_data h = homology(k);
    rc.s2_homology = h.betti() == std::vector<int>{1, 0, 1} && !h.has_torsion();

    if (k.dim() == 2)
    {
        std::vector<int> edge_use(k.count(1), 0);
        std::vector<std::vector<int>> edge_tris(k.count(1));
        for (int t = 0; t < k.count(2); ++t)
        {
            const auto& s = k.simplex(2, t);
            for (int omit = 0; omit < 3; ++omit)
            {
                std::vector<int> e;
                for (int i = 0; i < 3; ++i)
                    if (i != omit)
                        e.push_back(s[i]);
                int ei = k.index_of(e);
                ++edge_use[ei];
                edge_tris[ei].push_back(t);
            }
        }
        bool closed = k.count(2) > 0;
        for (int u : edge_use)
            if (u != 2)
                closed = false;
        if (closed)
        {
            std::vector<char> seen(k.count(2), 0);
            std::vector<int> stack{0};
            seen[0] = 1;
            int reached = 1;
            while (!stack.empty())
            {
                int t = stack.back();
                stack.pop_back();
                const auto& s = k.simplex(2, t);
                for (int omit = 0; omit < 3; ++omit)
                {
                    std::vector<int> e;
                    for (int i = 0; i < 3; ++i)
                        if (i != omit)
                            e.push_back(s[i]);
                    for (int t2 : edge_tris[k.index_of(e)])
                        if (!seen[t2])
                        {
                            seen[t2] = 1;
                            ++reached;
                            stack.push_back(t2);
                        }
                }
            }
            rc.pseudomanifold = reached == k.count(2);
        }
    }

    std::vector<int> cover_count(x.size(), 0);
    std::vector<char> maximal(x.size(), 1);
    for (auto [a, b] : x.cover_pairs())
    {
        ++cover_count[b];
        maximal[a] = 0;
    }
    for (int i = 0; i < x.size(); ++i)
        if (maximal[i] && cover_count[i] == 2)
        {
            if (rc.distinguished >= 0)
            {
                rc.distinguished = -1;
                break;
            }
            rc.distinguished = i;
        }
    return rc;
}

struct fpp_result {
    outcome verdict = outcome::unknown;
    std::optional<monotone_map> witness;
    bool used_fast_path = false;
    long long examined = 0;
};

/**
 * Does every monotone self-map fix a point?  The rigidity fast path answers
 * affirmatively when it applies; otherwise all monotone self-maps are
 * enumerated within the budget.  Set `enumerate_only` to force the
 * brute-force route (used for cross-checking the fast path).
 */
inline fpp_result has_fpp(const poset& x, long long budget, bool enumerate_only = false)
{
    fpp_result res;
    if (!enumerate_only && sphere_rigidity_check(x).applies())
    {
        res.verdict = outcome::yes;
        res.used_fast_path = true;
        return res;
    }
    auto st = detail::for_each_monotone_self_map(x, budget, [&](const monotone_map& f) {
        for (int i = 0; i < x.size(); ++i)
            if (f[i] == i)
                return true;
        res.witness = f;
        return false;
    });
    res.examined = st.emitted;
    if (res.witness)
        res.verdict = outcome::no;
    else
        res.verdict = st.complete ? outcome::yes : outcome::unknown;
    return res;
}

struct mfpp_result {
    outcome verdict = outcome::unknown;
    std::optional<multivalued_map> witness;
    bool witness_is_complement = false;
    long long examined = 0;
};

/**
 * Does every susc multivalued self-map with acyclic values fix a point?
 * The complement-of-closure map {y : y not >= x} is probed first: whenever
 * it is defined and has acyclic values it is a fixed-point-free witness.
 * Otherwise candidates are enumerated within the budget.
 */
inline mfpp_result has_mfpp(const poset& x, long long budget, bool enumerate_only = false)
{
    mfpp_result res;
    if (!enumerate_only)
    {
        try
        {
            multivalued_map probe = complement_upset_map(x);
            if (has_acyclic_values(probe).all_acyclic)
            {
                res.verdict = outcome::no;
                res.witness = std::move(probe);
                res.witness_is_complement = true;
                return res;
            }
        }
        catch (const std::invalid_argument&)
        {
            // some value was empty; the probe does not apply
        }
    }
    detail::acyclicity_cache cache(x);
    std::optional<std::vector<uint32_t>> found;
    auto st = detail::for_each_susc_acyclic(x, budget, cache,
                                            [&](const std::vector<uint32_t>& masks) {
                                                for (int i = 0; i < x.size(); ++i)
                                                    if (masks[i] & (1u << i))
                                                        return true;
                                                found = masks;
                                                return false;
                                            });
    res.examined = st.emitted;
    if (found)
    {
        std::vector<element_set> values;
        for (uint32_t m : *found)
            values.push_back(detail::mask_to_set(m, x.size()));
        res.witness = multivalued_map(x, x, std::move(values));
        res.verdict = outcome::no;
    }
    else
    {
        res.verdict = st.complete ? outcome::yes : outcome::unknown;
    }
    return res;
}

// ---------------------------------------------------------------------------
// implication audit: rationally acyclic => MFPP => FPP

struct audit_report {
    bool rationally_acyclic = false;
    outcome mfpp = outcome::unknown;
    outcome fpp = outcome::unknown;
    mfpp_result mfpp_detail;
    fpp_result fpp_detail;
};

inline audit_report implication_audit(const poset& x, long long budget)
{
    audit_report rep;
    std::vector<int> b = homology(x).betti();
    rep.rationally_acyclic = !b.empty() && b[0] == 1;
    for (size_t n = 1; n < b.size(); ++n)
        if (b[n] != 0)
            rep.rationally_acyclic = false;
    rep.mfpp_detail = has_mfpp(x, budget);
    rep.fpp_detail = has_fpp(x, budget);
    rep.mfpp = rep.mfpp_detail.verdict;
    rep.fpp = rep.fpp_detail.verdict;
    if (rep.rationally_acyclic && rep.mfpp == outcome::no)
        throw std::logic_error("implication_audit: rationally acyclic space without MFPP");
    if (rep.mfpp == outcome::yes && rep.fpp == outcome::no)
        throw std::logic_error("implication_audit: MFPP space without FPP");
    return rep;
}

// ---------------------------------------------------------------------------
// homotopy fences

/** Maps F_0, ..., F_n with alternating pointwise inclusions. */
struct fence {
    std::vector<multivalued_map> maps;
    std::vector<bool> step_le; ///< step i: maps[i] <= maps[i+1] when true, >= otherwise
};

inline bool value_wise_le(const multivalued_map& f, const multivalued_map& g)
{
    for (int i = 0; i < f.domain().size(); ++i)
        if (!subset_of(f.value(i), g.value(i)))
            return false;
    return true;
}

namespace detail {

inline void require_susc_acyclic(const multivalued_map& f, const char* who)
{
    if (!f.is_self_map())
        throw std::invalid_argument(std::string(who) + ": self-map required");
    if (!classify(f).susc)
        throw std::invalid_argument(std::string(who) + ": map is not susc");
    if (!has_acyclic_values(f).all_acyclic)
        throw std::invalid_argument(std::string(who) + ": map lacks acyclic values");
}

} // namespace detail

/**
 * All susc acyclic-valued maps below (`down` true) or above F, pointwise.
 * F itself is always among them.
 */
inline enumeration_result<multivalued_map> fence_neighbors(const multivalued_map& f, bool down,
                                                           long long budget)
{
    detail::require_susc_acyclic(f, "fence_neighbors");
    const poset& x = f.domain();
    const uint32_t all = (1u << x.size()) - 1;
    std::vector<uint32_t> lo(x.size(), 0), hi(x.size(), all);
    for (int i = 0; i < x.size(); ++i)
    {
        uint32_t m = detail::set_to_mask(f.value(i));
        (down ? hi[i] : lo[i]) = m;
    }
    detail::acyclicity_cache cache(x);
    enumeration_result<multivalued_map> res;
    auto st = detail::for_each_susc_acyclic(
        x, lo, hi, budget, cache, [&](const std::vector<uint32_t>& masks) {
            std::vector<element_set> values;
            for (uint32_t m : masks)
                values.push_back(detail::mask_to_set(m, x.size()));
            res.items.emplace_back(x, x, std::move(values));
            return true;
        });
    res.complete = st.complete;
    return res;
}

struct homotopy_result {
    outcome verdict = outcome::unknown;
    std::optional<fence> witness;
    long long examined = 0;
};

/**
 * Breadth-first search of the comparability graph on susc acyclic-valued
 * maps.  Runs of equal inclusion direction are legal fences by transitivity,
 * so reachability is plain graph connectivity; the returned witness is
 * compressed to strictly alternating steps.
 */
inline homotopy_result are_homotopic(const multivalued_map& f, const multivalued_map& g,
                                     long long budget)
{
    detail::require_susc_acyclic(f, "are_homotopic");
    detail::require_susc_acyclic(g, "are_homotopic");
    if (!(f.domain() == g.domain()))
        throw std::invalid_argument("are_homotopic: maps must live on the same space");
    const poset& x = f.domain();
    const int n = x.size();

    using state = std::vector<uint32_t>;
    auto to_state = [&](const multivalued_map& m) {
        state s(n);
        for (int i = 0; i < n; ++i)
            s[i] = detail::set_to_mask(m.value(i));
        return s;
    };
    const state start = to_state(f);
    const state goal = to_state(g);

    homotopy_result res;
    std::map<state, int> id;
    std::vector<state> states{start};
    std::vector<int> parent{-1};
    std::vector<bool> parent_step_le{false};
    id[start] = 0;
    std::deque<int> queue{0};
    detail::acyclicity_cache cache(x);
    const uint32_t all = (1u << n) - 1;

    int found = start == goal ? 0 : -1;
    bool out_of_budget = false;
    while (!queue.empty() && found < 0 && !out_of_budget)
    {
        int cur = queue.front();
        queue.pop_front();
        for (int dir = 0; dir < 2 && found < 0; ++dir)
        {
            const bool down = dir == 0;
            std::vector<uint32_t> lo(n, 0), hi(n, all);
            for (int i = 0; i < n; ++i)
                (down ? hi[i] : lo[i]) = states[cur][i];
            long long remaining = budget - res.examined;
            if (remaining <= 0)
            {
                out_of_budget = true;
                break;
            }
            auto st = detail::for_each_susc_acyclic(
                x, lo, hi, remaining, cache, [&](const state& nb) {
                    if (!id.count(nb))
                    {
                        id[nb] = static_cast<int>(states.size());
                        states.push_back(nb);
                        // step from cur to nb: nb <= cur when descending
                        parent.push_back(cur);
                        parent_step_le.push_back(!down);
                        if (nb == goal)
                        {
                            found = id[nb];
                            return false;
                        }
                        queue.push_back(id[nb]);
                    }
                    return true;
                });
            res.examined += st.emitted;
            if (!st.complete && found < 0)
                out_of_budget = true;
        }
    }

    if (found >= 0)
    {
        // reconstruct the path from F to G
        std::vector<int> path;
        std::vector<bool> step_le; // step_le[i]: path[i] <= path[i+1]
        for (int v = found; v != -1; v = parent[v])
            path.push_back(v);
        std::reverse(path.begin(), path.end());
        for (size_t i = 0; i + 1 < path.size(); ++i)
            step_le.push_back(parent_step_le[path[i + 1]]);

        // compress runs of equal direction (valid by transitivity)
        std::vector<state> seq;
        std::vector<bool> dirs;
        for (size_t i = 0; i < path.size(); ++i)
            seq.push_back(states[path[i]]);
        dirs = step_le;
        for (size_t i = 0; i + 1 < dirs.size();)
        {
            if (dirs[i] == dirs[i + 1])
            {
                seq.erase(seq.begin() + i + 1);
                dirs.erase(dirs.begin() + i);
            }
            else
                ++i;
        }

        fence w;
        for (const state& s : seq)
        {
            std::vector<element_set> values;
            for (uint32_t m : s)
                values.push_back(detail::mask_to_set(m, n));
            w.maps.emplace_back(x, x, std::move(values));
        }
        w.step_le = dirs;
        res.witness = std::move(w);
        res.verdict = outcome::yes;
    }
    else
    {
        res.verdict = out_of_budget ? outcome::unknown : outcome::no;
    }
    return res;
}

/** BFS closure of the homotopy class of F, in deterministic order. */
inline enumeration_result<multivalued_map> homotopy_class(const multivalued_map& f,
                                                          long long budget)
{
    detail::require_susc_acyclic(f, "homotopy_class");
    const poset& x = f.domain();
    const int n = x.size();
    using state = std::vector<uint32_t>;
    state start(n);
    for (int i = 0; i < n; ++i)
        start[i] = detail::set_to_mask(f.value(i));

    std::map<state, int> id;
    std::vector<state> states{start};
    id[start] = 0;
    std::deque<int> queue{0};
    detail::acyclicity_cache cache(x);
    const uint32_t all = (1u << n) - 1;
    long long examined = 0;
    bool complete = true;
    while (!queue.empty() && complete)
    {
        int cur = queue.front();
        queue.pop_front();
        for (int dir = 0; dir < 2; ++dir)
        {
            const bool down = dir == 0;
            std::vector<uint32_t> lo(n, 0), hi(n, all);
            for (int i = 0; i < n; ++i)
                (down ? hi[i] : lo[i]) = states[cur][i];
            long long remaining = budget - examined;
            if (remaining <= 0)
            {
                complete = false;
                break;
            }
            auto st = detail::for_each_susc_acyclic(x, lo, hi, remaining, cache,
                                                    [&](const state& nb) {
                                                        if (!id.count(nb))
                                                        {
                                                            id[nb] = static_cast<int>(states.size());
                                                            states.push_back(nb);
                                                            queue.push_back(id[nb]);
                                                        }
                                                        return true;
                                                    });
            examined += st.emitted;
            if (!st.complete)
                complete = false;
        }
    }

    std::sort(states.begin(), states.end());
    enumeration_result<multivalued_map> res;
    res.complete = complete;
    for (const state& s : states)
    {
        std::vector<element_set> values;
        for (uint32_t m : s)
            values.push_back(detail::mask_to_set(m, n));
        res.items.emplace_back(x, x, std::move(values));
    }
    return res;
}

/**
 * Validate a fence and check the homotopy invariance it promises: equal
 * induced matrices on every free quotient, hence equal Lefschetz numbers.
 */
inline bool homotopy_invariance_check(const fence& w)
{
    if (w.maps.empty())
        throw std::invalid_argument("homotopy_invariance_check: empty fence");
    if (w.step_le.size() + 1 != w.maps.size())
        throw std::invalid_argument("homotopy_invariance_check: step flags do not match maps");
    for (size_t i = 0; i < w.maps.size(); ++i)
        detail::require_susc_acyclic(w.maps[i], "homotopy_invariance_check");
    for (size_t i = 0; i + 1 < w.maps.size(); ++i)
    {
        const multivalued_map& a = w.maps[i];
        const multivalued_map& b = w.maps[i + 1];
        if (!(a.domain() == b.domain()))
            throw std::invalid_argument("homotopy_invariance_check: mixed spaces in fence");
        bool ok = w.step_le[i] ? value_wise_le(a, b) : value_wise_le(b, a);
        if (!ok)
            throw std::invalid_argument("homotopy_invariance_check: step " + std::to_string(i) +
                                        " is not an inclusion in the flagged direction");
        if (i > 0 && w.step_le[i] == w.step_le[i - 1])
            throw std::invalid_argument("homotopy_invariance_check: fence steps must alternate");
    }
    induced_map_data first = induced_map_of(w.maps.front());
    for (size_t i = 1; i < w.maps.size(); ++i)
    {
        induced_map_data other = induced_map_of(w.maps[i]);
        if (other.mats.size() != first.mats.size())
            return false;
        for (size_t n = 0; n < first.mats.size(); ++n)
            if (!(other.mats[n] == first.mats[n]))
                return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// the isotone counterexample

/**
 * The canonical reason Lefschetz numbers do not extend to maps that are
 * merely usc and lsc: on the 4-point circle model, the map
 * F(a)=F(b)={a,b,c}, F(c)=F(d)={a,c,d} is usc and lsc with acyclic values,
 * yet its selectors include the identity (L = 0) and a fold onto a 2-chain
 * (L = 1), so no selector-consistent assignment of numbers exists.
 */
struct isotone_gap_report {
    poset space;
    multivalued_map map;
    semicontinuity_report classification;
    bool acyclic_values = false;
    std::vector<monotone_map> all_selectors;
    monotone_map identity_selector;
    monotone_map fold_selector;
    bigint lefschetz_identity;
    bigint lefschetz_fold;

    isotone_gap_report(poset p, multivalued_map m)
        : space(std::move(p)), map(std::move(m))
    {
    }
};

inline isotone_gap_report isotone_selector_gap()
{
    poset x = poset::from_covers({"a", "b", "c", "d"},
                                 {{"c", "a"}, {"c", "b"}, {"d", "a"}, {"d", "b"}});
    element_set abc = {0, 1, 2}, acd = {0, 2, 3};
    multivalued_map f(x, x, {abc, abc, acd, acd});
    isotone_gap_report rep(x, f);
    rep.classification = classify(f, true);
    rep.acyclic_values = has_acyclic_values(f).all_acyclic;
    rep.all_selectors = selectors(f, 1000).items;
    rep.identity_selector = {0, 1, 2, 3};
    rep.fold_selector = {0, 0, 2, 2};
    bool has_id = false, has_fold = false;
    for (const auto& s : rep.all_selectors)
    {
        has_id = has_id || s == rep.identity_selector;
        has_fold = has_fold || s == rep.fold_selector;
    }
    if (!has_id || !has_fold)
        throw std::logic_error("isotone_selector_gap: expected selectors are missing");
    rep.lefschetz_identity = lefschetz_single(x, rep.identity_selector);
    rep.lefschetz_fold = lefschetz_single(x, rep.fold_selector);
    return rep;
}

} // namespace fintop
