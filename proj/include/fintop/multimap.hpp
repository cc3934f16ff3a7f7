/**
 * Multivalued maps between finite T0 spaces.
 *
 * A multivalued map F : X -o Y assigns a nonempty subset F(x) of Y to every
 * x in X.  Semicontinuity is decided combinatorially:
 *
 *   usc   for x1 <= x2, every y1 in F(x1) sits below some y2 in F(x2);
 *   lsc   for x1 >= x2, every y1 in F(x1) sits above some y2 in F(x2);
 *   susc  x1 <= x2 implies F(x1) a subset of F(x2);
 *   slsc  x1 <= x2 implies F(x2) a subset of F(x1).
 *
 * A verification mode re-derives each notion from its preimage-based
 * definition and three further equivalent characterizations and cross-checks
 * them all.
 */

#pragma once

#include "fintop/homology.hpp"
#include "fintop/poset.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fintop {

class multivalued_map {
  public:
    multivalued_map(poset domain, poset codomain, std::vector<element_set> values,
                    bool allow_empty = false)
        : domain_(std::move(domain)), codomain_(std::move(codomain)), values_(std::move(values))
    {
        if (static_cast<int>(values_.size()) != domain_.size())
            throw std::invalid_argument("multivalued_map: one value set per element required");
        for (int i = 0; i < domain_.size(); ++i)
        {
            check_subset(codomain_, values_[i]);
            if (values_[i].empty() && !allow_empty)
                throw std::invalid_argument("multivalued_map: empty value at '" +
                                            domain_.name(i) + "'");
        }
    }

    const poset& domain() const noexcept { return domain_; }
    const poset& codomain() const noexcept { return codomain_; }
    const element_set& value(int x) const { return values_.at(x); }
    const std::vector<element_set>& values() const noexcept { return values_; }
    bool is_self_map() const { return domain_ == codomain_; }

    bool operator==(const multivalued_map& o) const
    {
        return domain_ == o.domain_ && codomain_ == o.codomain_ && values_ == o.values_;
    }

  private:
    poset domain_, codomain_;
    std::vector<element_set> values_;
};

// ---------------------------------------------------------------------------
// preimages

/** {x : F(x) contained in B} */
inline element_set small_preimage(const multivalued_map& f, const element_set& b)
{
    check_subset(f.codomain(), b);
    element_set out;
    for (int x = 0; x < f.domain().size(); ++x)
        if (subset_of(f.value(x), b))
            out.push_back(x);
    return out;
}

/** {x : F(x) meets B} */
inline element_set large_preimage(const multivalued_map& f, const element_set& b)
{
    check_subset(f.codomain(), b);
    element_set out;
    for (int x = 0; x < f.domain().size(); ++x)
    {
        for (int y : f.value(x))
            if (set_contains(b, y))
            {
                out.push_back(x);
                break;
            }
    }
    return out;
}

// ---------------------------------------------------------------------------
// semicontinuity

struct semicontinuity_witness {
    int x1 = -1, x2 = -1, y = -1;
};

struct semicontinuity_report {
    bool usc = false, lsc = false, susc = false, slsc = false;
    std::optional<semicontinuity_witness> usc_witness, lsc_witness, susc_witness, slsc_witness;
    bool verified_all = false;
};

namespace detail {

// usc: x1 <= x2, y1 in F(x1) => some y2 in F(x2) with y1 <= y2
inline std::optional<semicontinuity_witness> usc_violation(const multivalued_map& f)
{
    const poset& x = f.domain();
    const poset& y = f.codomain();
    for (int x1 = 0; x1 < x.size(); ++x1)
        for (int x2 = 0; x2 < x.size(); ++x2)
        {
            if (!x.leq(x1, x2))
                continue;
            for (int y1 : f.value(x1))
            {
                bool dominated = false;
                for (int y2 : f.value(x2))
                    if (y.leq(y1, y2))
                    {
                        dominated = true;
                        break;
                    }
                if (!dominated)
                    return semicontinuity_witness{x1, x2, y1};
            }
        }
    return std::nullopt;
}

inline std::optional<semicontinuity_witness> lsc_violation(const multivalued_map& f)
{
    const poset& x = f.domain();
    const poset& y = f.codomain();
    for (int x1 = 0; x1 < x.size(); ++x1)
        for (int x2 = 0; x2 < x.size(); ++x2)
        {
            if (!x.leq(x2, x1))
                continue;
            for (int y1 : f.value(x1))
            {
                bool dominated = false;
                for (int y2 : f.value(x2))
                    if (y.leq(y2, y1))
                    {
                        dominated = true;
                        break;
                    }
                if (!dominated)
                    return semicontinuity_witness{x1, x2, y1};
            }
        }
    return std::nullopt;
}

inline std::optional<semicontinuity_witness> susc_violation(const multivalued_map& f)
{
    const poset& x = f.domain();
    for (int x1 = 0; x1 < x.size(); ++x1)
        for (int x2 = 0; x2 < x.size(); ++x2)
        {
            if (!x.leq(x1, x2))
                continue;
            for (int y1 : f.value(x1))
                if (!set_contains(f.value(x2), y1))
                    return semicontinuity_witness{x1, x2, y1};
        }
    return std::nullopt;
}

inline std::optional<semicontinuity_witness> slsc_violation(const multivalued_map& f)
{
    const poset& x = f.domain();
    for (int x1 = 0; x1 < x.size(); ++x1)
        for (int x2 = 0; x2 < x.size(); ++x2)
        {
            if (!x.leq(x1, x2))
                continue;
            for (int y1 : f.value(x2))
                if (!set_contains(f.value(x1), y1))
                    return semicontinuity_witness{x1, x2, y1};
        }
    return std::nullopt;
}

inline std::vector<element_set> all_subsets(int n)
{
    if (n > 20)
        throw std::invalid_argument("verification mode supports codomains of at most 20 points");
    std::vector<element_set> out;
    out.reserve(1u << n);
    for (unsigned mask = 0; mask < (1u << n); ++mask)
    {
        element_set s;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i))
                s.push_back(i);
        out.push_back(std::move(s));
    }
    return out;
}

} // namespace detail

/**
 * Classify F as usc / lsc / susc / slsc, reporting the lexicographically
 * first violating triple (x1, x2, y) for every notion that fails.
 *
 * In verification mode every notion is additionally evaluated through the
 * remaining equivalent characterizations (preimage openness, image-of-open
 * containments, pointwise domination) and any disagreement is an internal
 * error.
 */
inline semicontinuity_report classify(const multivalued_map& f, bool verify_all = false)
{
    semicontinuity_report rep;
    rep.usc_witness = detail::usc_violation(f);
    rep.lsc_witness = detail::lsc_violation(f);
    rep.susc_witness = detail::susc_violation(f);
    rep.slsc_witness = detail::slsc_violation(f);
    rep.usc = !rep.usc_witness;
    rep.lsc = !rep.lsc_witness;
    rep.susc = !rep.susc_witness;
    rep.slsc = !rep.slsc_witness;

    if (verify_all)
    {
        const poset& x = f.domain();
        const poset& y = f.codomain();
        auto subsets = detail::all_subsets(y.size());

        bool usc_a = true, lsc_a = true, susc_def = true, slsc_def = true;
        for (const element_set& b : subsets)
        {
            bool open_b = is_down_set(y, b);
            if (open_b && !is_down_set(x, small_preimage(f, b)))
                usc_a = false;
            if (open_b && !is_down_set(x, large_preimage(f, b)))
                lsc_a = false;
            if (!is_down_set(x, small_preimage(f, b)))
                susc_def = false;
            if (!is_down_set(x, large_preimage(f, b)))
                slsc_def = false;
        }

        // image-of-open containments: F(U_x) inside U_{F(x)}, F(cl x) inside cl F(x)
        bool usc_b = true, lsc_b = true;
        for (int p = 0; p < x.size(); ++p)
        {
            element_set img_open, img_closed;
            for (int z : min_open(x, p))
                img_open = set_union(img_open, f.value(z));
            for (int z : closure(x, p))
                img_closed = set_union(img_closed, f.value(z));
            if (!subset_of(img_open, min_open_of_set(y, f.value(p))))
                usc_b = false;
            if (!subset_of(img_closed, closure_of_set(y, f.value(p))))
                lsc_b = false;
        }

        // pairwise containments in open hulls / closed hulls
        bool usc_c = true, lsc_c = true;
        for (int x1 = 0; x1 < x.size(); ++x1)
            for (int x2 = 0; x2 < x.size(); ++x2)
            {
                if (x.leq(x1, x2) && !subset_of(f.value(x1), min_open_of_set(y, f.value(x2))))
                    usc_c = false;
                if (x.leq(x2, x1) && !subset_of(f.value(x1), closure_of_set(y, f.value(x2))))
                    lsc_c = false;
            }

        if (usc_a != rep.usc || usc_b != rep.usc || usc_c != rep.usc)
            throw std::logic_error("classify: usc characterizations disagree");
        if (lsc_a != rep.lsc || lsc_b != rep.lsc || lsc_c != rep.lsc)
            throw std::logic_error("classify: lsc characterizations disagree");
        if (susc_def != rep.susc)
            throw std::logic_error("classify: susc characterizations disagree");
        if (slsc_def != rep.slsc)
            throw std::logic_error("classify: slsc characterizations disagree");
        rep.verified_all = true;
    }
    return rep;
}

// ---------------------------------------------------------------------------
// value acyclicity

struct value_acyclicity_report {
    bool all_acyclic = false;
    enum class status : int8_t { acyclic, not_acyclic, empty };
    std::vector<status> per_element;
};

inline value_acyclicity_report has_acyclic_values(const multivalued_map& f)
{
    value_acyclicity_report rep;
    rep.all_acyclic = true;
    rep.per_element.resize(f.domain().size());
    for (int x = 0; x < f.domain().size(); ++x)
    {
        if (f.value(x).empty())
        {
            rep.per_element[x] = value_acyclicity_report::status::empty;
            rep.all_acyclic = false;
        }
        else if (is_acyclic(f.codomain(), f.value(x)))
        {
            rep.per_element[x] = value_acyclicity_report::status::acyclic;
        }
        else
        {
            rep.per_element[x] = value_acyclicity_report::status::not_acyclic;
            rep.all_acyclic = false;
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// graphs

/**
 * The graph of F: the subposet of X x Y on pairs (x, y) with y in F(x),
 * together with the coordinate projections (as vertex maps).
 */
struct map_graph {
    poset space;
    monotone_map p1, p2;
};

inline map_graph graph_of(const multivalued_map& f)
{
    const poset& x = f.domain();
    const poset& y = f.codomain();
    poset prod = product(x, y);
    element_set pairs;
    map_graph g;
    for (int i = 0; i < x.size(); ++i)
        for (int j : f.value(i))
            pairs.push_back(i * y.size() + j);
    std::sort(pairs.begin(), pairs.end());
    g.space = subposet(prod, pairs);
    for (int k : pairs)
    {
        g.p1.push_back(k / y.size());
        g.p2.push_back(k % y.size());
    }
    return g;
}

// ---------------------------------------------------------------------------
// constructions

/** F(x) = min_open(f(x)); always susc with acyclic values (each value has a maximum). */
inline multivalued_map from_function(const poset& x, const monotone_map& f)
{
    if (!is_monotone(x, x, f))
        throw std::invalid_argument("from_function: map is not monotone");
    std::vector<element_set> values;
    values.reserve(x.size());
    for (int i = 0; i < x.size(); ++i)
        values.push_back(min_open(x, f[i]));
    return multivalued_map(x, x, std::move(values));
}

/** Same values over the opposite domain and codomain. */
inline multivalued_map opposite_map(const multivalued_map& f)
{
    return multivalued_map(opposite(f.domain()), opposite(f.codomain()), f.values());
}

/** Same values with only the domain order reversed. */
inline multivalued_map primed_map(const multivalued_map& f)
{
    return multivalued_map(opposite(f.domain()), f.codomain(), f.values());
}

/**
 * y |-> i(F(r(y))) for monotone r : Y -> X and i : X -> Y.
 * Transfers fixed-point freeness along a retraction when r(i(x)) = x.
 */
inline multivalued_map compose_sandwich(const poset& x, const poset& y, const monotone_map& i,
                                        const multivalued_map& f, const monotone_map& r)
{
    if (!is_monotone(x, y, i))
        throw std::invalid_argument("compose_sandwich: section is not monotone");
    if (!is_monotone(y, x, r))
        throw std::invalid_argument("compose_sandwich: retraction is not monotone");
    if (!(f.domain() == x) || !f.is_self_map())
        throw std::invalid_argument("compose_sandwich: middle map must be a self-map of X");
    std::vector<element_set> values(y.size());
    for (int p = 0; p < y.size(); ++p)
    {
        element_set v;
        for (int z : f.value(r[p]))
            v.push_back(i[z]);
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
        values[p] = std::move(v);
    }
    return multivalued_map(y, y, std::move(values));
}

/**
 * F(x) = complement of the closure of x, i.e. {y : y not >= x}.
 * Always susc and fixed point free; fails when some x lies below everything.
 */
inline multivalued_map complement_upset_map(const poset& x)
{
    std::vector<element_set> values(x.size());
    for (int i = 0; i < x.size(); ++i)
    {
        values[i] = set_difference(full_set(x), closure(x, i));
        if (values[i].empty())
            throw std::invalid_argument("complement_upset_map: value at '" + x.name(i) +
                                        "' is empty (the point lies below every other point)");
    }
    return multivalued_map(x, x, std::move(values));
}

// ---------------------------------------------------------------------------
// selectors

/**
 * All continuous selectors of F: monotone f with f(x) in F(x) everywhere.
 * Walks the canonical linear extension, pruning against already-placed
 * covers; deterministic order, possibly empty.
 */
inline enumeration_result<monotone_map> selectors(const multivalued_map& f, long long budget)
{
    if (budget <= 0)
        throw std::invalid_argument("selectors: budget must be positive");
    const poset& x = f.domain();
    const poset& y = f.codomain();
    enumeration_result<monotone_map> res;
    const std::vector<int> order = linear_extension(x);
    std::vector<std::vector<int>> lower(x.size());
    for (auto [a, b] : x.cover_pairs())
        lower[b].push_back(a);
    monotone_map g(x.size(), -1);
    bool overflow = false;
    auto rec = [&](auto&& self, size_t k) -> void {
        if (overflow)
            return;
        if (k == order.size())
        {
            if (static_cast<long long>(res.items.size()) >= budget)
            {
                overflow = true;
                return;
            }
            res.items.push_back(g);
            return;
        }
        int e = order[k];
        for (int cand : f.value(e))
        {
            bool ok = true;
            for (int c : lower[e])
                if (!y.leq(g[c], cand))
                {
                    ok = false;
                    break;
                }
            if (!ok)
                continue;
            g[e] = cand;
            self(self, k + 1);
            g[e] = -1;
            if (overflow)
                return;
        }
    };
    rec(rec, 0);
    res.complete = !overflow;
    return res;
}

} // namespace fintop
