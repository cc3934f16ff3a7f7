/**
 * Finite T0 spaces represented as posets.
 *
 * A finite T0 topological space and a finite poset are the same data: points
 * are elements, and y <= x exactly when y lies in every open set containing x.
 * Open sets are the down-sets; the smallest open set around x is
 * min_open(x) = {y : y <= x}, and the closure of {x} is {y : y >= x}.
 *
 * The element order given at construction is the global total order used for
 * simplex orientation, canonical vertex choices, and tie-breaking; keeping it
 * fixed makes every downstream computation deterministic.
 */

#pragma once

#include <algorithm>
#include <cstdint>
#include <queue>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace fintop {

/** Canonically ordered subset of a poset's elements (ascending indices). */
using element_set = std::vector<int>;

/** Single-valued map between posets: f[i] is the codomain index of element i. */
using monotone_map = std::vector<int>;

/** Result of a budgeted enumeration; `complete` is false when the budget ran out. */
template <typename T>
struct enumeration_result {
    std::vector<T> items;
    bool complete = true;
};

class poset {
  public:
    /** Empty placeholder; build real posets with from_covers / from_relation. */
    poset() = default;

    /**
     * Build a poset from elements and cover pairs (lower, upper).
     *
     * Redundant (transitively implied) cover pairs are accepted and
     * normalized away; duplicate elements, unknown identifiers and cycles
     * are rejected.  The empty poset is rejected unless `allow_empty`.
     */
    static poset from_covers(std::vector<std::string> elements,
                             const std::vector<std::pair<std::string, std::string>>& covers,
                             bool allow_empty = false)
    {
        poset p;
        p.elements_ = std::move(elements);
        if (p.elements_.empty() && !allow_empty)
            throw std::invalid_argument("poset: empty element list");
        for (int i = 0; i < static_cast<int>(p.elements_.size()); ++i)
        {
            if (p.index_.count(p.elements_[i]))
                throw std::invalid_argument("poset: duplicate element '" + p.elements_[i] + "'");
            p.index_[p.elements_[i]] = i;
        }
        const int n = p.size();
        std::vector<std::vector<int>> up(n);
        for (const auto& [lo, hi] : covers)
        {
            int a = p.index_checked(lo), b = p.index_checked(hi);
            if (a == b)
                throw std::invalid_argument("poset: cover cycle through '" + lo + "'");
            up[a].push_back(b);
        }
        p.leq_.assign(static_cast<size_t>(n) * n, 0);
        for (int i = 0; i < n; ++i)
        {
            // reachability along covers = reflexive-transitive closure
            std::vector<char> seen(n, 0);
            std::vector<int> stack{i};
            seen[i] = 1;
            while (!stack.empty())
            {
                int x = stack.back();
                stack.pop_back();
                p.leq_[static_cast<size_t>(i) * n + x] = 1;
                for (int y : up[x])
                    if (!seen[y])
                    {
                        seen[y] = 1;
                        stack.push_back(y);
                    }
            }
        }
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (p.leq(i, j) && p.leq(j, i))
                    throw std::invalid_argument("poset: cover cycle between '" + p.elements_[i] +
                                                "' and '" + p.elements_[j] + "'");
        p.rebuild_covers();
        return p;
    }

    int size() const noexcept { return static_cast<int>(elements_.size()); }
    const std::vector<std::string>& elements() const noexcept { return elements_; }
    const std::string& name(int i) const { return elements_.at(i); }

    int index_of(const std::string& id) const
    {
        auto it = index_.find(id);
        if (it == index_.end())
            throw std::invalid_argument("poset: unknown element '" + id + "'");
        return it->second;
    }

    bool contains(const std::string& id) const { return index_.count(id) != 0; }

    /** a <= b in the poset order. */
    bool leq(int a, int b) const { return leq_[static_cast<size_t>(a) * size() + b] != 0; }
    bool less(int a, int b) const { return a != b && leq(a, b); }
    bool comparable(int a, int b) const { return leq(a, b) || leq(b, a); }

    /** Cover pairs (lower, upper) of the transitive reduction, sorted. */
    const std::vector<std::pair<int, int>>& cover_pairs() const noexcept { return covers_; }

    std::vector<std::pair<std::string, std::string>> cover_names() const
    {
        std::vector<std::pair<std::string, std::string>> out;
        for (auto [a, b] : covers_)
            out.emplace_back(elements_[a], elements_[b]);
        return out;
    }

    bool operator==(const poset& o) const
    {
        return elements_ == o.elements_ && leq_ == o.leq_;
    }

    /** Internal constructor from a full order relation (assumed valid). */
    static poset from_relation(std::vector<std::string> elements, std::vector<uint8_t> leq)
    {
        poset p;
        p.elements_ = std::move(elements);
        for (int i = 0; i < static_cast<int>(p.elements_.size()); ++i)
            p.index_[p.elements_[i]] = i;
        p.leq_ = std::move(leq);
        p.rebuild_covers();
        return p;
    }

  private:
    int index_checked(const std::string& id) const
    {
        auto it = index_.find(id);
        if (it == index_.end())
            throw std::invalid_argument("poset: unknown element '" + id + "' in covers");
        return it->second;
    }

    void rebuild_covers()
    {
        covers_.clear();
        const int n = size();
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
            {
                if (!less(a, b))
                    continue;
                bool is_cover = true;
                for (int w = 0; w < n && is_cover; ++w)
                    if (w != a && w != b && less(a, w) && less(w, b))
                        is_cover = false;
                if (is_cover)
                    covers_.emplace_back(a, b);
            }
        std::sort(covers_.begin(), covers_.end());
    }

    std::vector<std::string> elements_;
    std::unordered_map<std::string, int> index_;
    std::vector<uint8_t> leq_; // row-major: leq_[i*n+j] <=> i <= j
    std::vector<std::pair<int, int>> covers_;
};

// ---------------------------------------------------------------------------
// element sets

inline element_set full_set(const poset& x)
{
    element_set s(x.size());
    for (int i = 0; i < x.size(); ++i)
        s[i] = i;
    return s;
}

inline bool set_contains(const element_set& s, int v)
{
    return std::binary_search(s.begin(), s.end(), v);
}

inline bool subset_of(const element_set& a, const element_set& b)
{
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline element_set set_union(const element_set& a, const element_set& b)
{
    element_set out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline element_set set_difference(const element_set& a, const element_set& b)
{
    element_set out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline void check_subset(const poset& x, const element_set& s)
{
    for (size_t i = 0; i < s.size(); ++i)
    {
        if (s[i] < 0 || s[i] >= x.size())
            throw std::invalid_argument("element_set: index out of range");
        if (i > 0 && s[i] <= s[i - 1])
            throw std::invalid_argument("element_set: not strictly ascending");
    }
}

inline element_set set_from_names(const poset& x, const std::vector<std::string>& names)
{
    element_set s;
    s.reserve(names.size());
    for (const auto& id : names)
        s.push_back(x.index_of(id));
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

inline std::vector<std::string> set_names(const poset& x, const element_set& s)
{
    std::vector<std::string> out;
    out.reserve(s.size());
    for (int i : s)
        out.push_back(x.name(i));
    return out;
}

// ---------------------------------------------------------------------------
// open sets and closures

/** Smallest open set containing x: {y : y <= x}. */
inline element_set min_open(const poset& p, int x)
{
    if (x < 0 || x >= p.size())
        throw std::invalid_argument("min_open: unknown element");
    element_set s;
    for (int y = 0; y < p.size(); ++y)
        if (p.leq(y, x))
            s.push_back(y);
    return s;
}

/** Closure of {x}: {y : y >= x}. */
inline element_set closure(const poset& p, int x)
{
    if (x < 0 || x >= p.size())
        throw std::invalid_argument("closure: unknown element");
    element_set s;
    for (int y = 0; y < p.size(); ++y)
        if (p.leq(x, y))
            s.push_back(y);
    return s;
}

/** Smallest open set containing A: points below some point of A. */
inline element_set min_open_of_set(const poset& p, const element_set& a)
{
    check_subset(p, a);
    element_set s;
    for (int y = 0; y < p.size(); ++y)
        for (int x : a)
            if (p.leq(y, x))
            {
                s.push_back(y);
                break;
            }
    return s;
}

/** Smallest closed set containing A: points above some point of A. */
inline element_set closure_of_set(const poset& p, const element_set& a)
{
    check_subset(p, a);
    element_set s;
    for (int y = 0; y < p.size(); ++y)
        for (int x : a)
            if (p.leq(x, y))
            {
                s.push_back(y);
                break;
            }
    return s;
}

inline bool is_down_set(const poset& p, const element_set& s)
{
    for (int x : s)
        for (int y = 0; y < p.size(); ++y)
            if (p.leq(y, x) && !set_contains(s, y))
                return false;
    return true;
}

inline bool is_up_set(const poset& p, const element_set& s)
{
    for (int x : s)
        for (int y = 0; y < p.size(); ++y)
            if (p.leq(x, y) && !set_contains(s, y))
                return false;
    return true;
}

// ---------------------------------------------------------------------------
// constructions

/** Same elements with the order reversed. */
inline poset opposite(const poset& p)
{
    const int n = p.size();
    std::vector<uint8_t> leq(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            leq[static_cast<size_t>(i) * n + j] = p.leq(j, i) ? 1 : 0;
    return poset::from_relation(p.elements(), std::move(leq));
}

/**
 * Product order: (x,y) <= (x',y') iff x <= x' and y <= y'.
 * Elements are named "(x,y)" and listed row-major in the factors' orders.
 */
inline poset product(const poset& x, const poset& y)
{
    const int nx = x.size(), ny = y.size();
    const int n = nx * ny;
    std::vector<std::string> elements;
    elements.reserve(n);
    for (int i = 0; i < nx; ++i)
        for (int j = 0; j < ny; ++j)
            elements.push_back("(" + x.name(i) + "," + y.name(j) + ")");
    std::vector<uint8_t> leq(static_cast<size_t>(n) * n, 0);
    for (int i1 = 0; i1 < nx; ++i1)
        for (int j1 = 0; j1 < ny; ++j1)
            for (int i2 = 0; i2 < nx; ++i2)
                for (int j2 = 0; j2 < ny; ++j2)
                    if (x.leq(i1, i2) && y.leq(j1, j2))
                        leq[static_cast<size_t>(i1 * ny + j1) * n + (i2 * ny + j2)] = 1;
    return poset::from_relation(std::move(elements), std::move(leq));
}

/** Induced order on a subset; element names and relative order are kept. */
inline poset subposet(const poset& p, const element_set& s)
{
    check_subset(p, s);
    const int m = static_cast<int>(s.size());
    std::vector<std::string> elements;
    elements.reserve(m);
    for (int i : s)
        elements.push_back(p.name(i));
    std::vector<uint8_t> leq(static_cast<size_t>(m) * m, 0);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            leq[static_cast<size_t>(a) * m + b] = p.leq(s[a], s[b]) ? 1 : 0;
    return poset::from_relation(std::move(elements), std::move(leq));
}

// ---------------------------------------------------------------------------
// beat points and cores

/**
 * Points whose strict down-set has a maximum or whose strict up-set has a
 * minimum; removing one is a homotopy equivalence.
 */
inline element_set beat_points(const poset& p)
{
    element_set out;
    for (int x = 0; x < p.size(); ++x)
    {
        element_set down, up;
        for (int y = 0; y < p.size(); ++y)
        {
            if (p.less(y, x))
                down.push_back(y);
            if (p.less(x, y))
                up.push_back(y);
        }
        bool beat = false;
        for (int m : down)
        {
            bool is_max = true;
            for (int y : down)
                if (!p.leq(y, m))
                {
                    is_max = false;
                    break;
                }
            if (is_max)
            {
                beat = true;
                break;
            }
        }
        for (size_t k = 0; k < up.size() && !beat; ++k)
        {
            int m = up[k];
            bool is_min = true;
            for (int y : up)
                if (!p.leq(m, y))
                {
                    is_min = false;
                    break;
                }
            if (is_min)
                beat = true;
        }
        if (beat)
            out.push_back(x);
    }
    return out;
}

/**
 * Remove beat points one at a time (smallest element first) until none
 * remain.  The result is unique up to homeomorphism; this tie-break pins one
 * representative.
 */
inline poset core(const poset& p)
{
    if (p.size() == 0)
        throw std::invalid_argument("core: empty poset");
    poset cur = p;
    for (;;)
    {
        element_set bp = beat_points(cur);
        if (bp.empty())
            return cur;
        element_set keep;
        for (int i = 0; i < cur.size(); ++i)
            if (i != bp.front())
                keep.push_back(i);
        cur = subposet(cur, keep);
    }
}

inline bool is_contractible(const poset& p)
{
    return core(p).size() == 1;
}

// ---------------------------------------------------------------------------
// monotone maps

inline bool is_monotone(const poset& x, const poset& y, const monotone_map& f)
{
    if (static_cast<int>(f.size()) != x.size())
        return false;
    for (int v : f)
        if (v < 0 || v >= y.size())
            return false;
    for (auto [a, b] : x.cover_pairs())
        if (!y.leq(f[a], f[b]))
            return false;
    return true;
}

/** Deterministic linear extension: repeatedly take the smallest-index minimal element. */
inline std::vector<int> linear_extension(const poset& p)
{
    const int n = p.size();
    std::vector<int> indegree(n, 0);
    for (auto [a, b] : p.cover_pairs())
        ++indegree[b];
    std::priority_queue<int, std::vector<int>, std::greater<>> ready;
    for (int i = 0; i < n; ++i)
        if (indegree[i] == 0)
            ready.push(i);
    std::vector<int> order;
    order.reserve(n);
    while (!ready.empty())
    {
        int x = ready.top();
        ready.pop();
        order.push_back(x);
        for (auto [a, b] : p.cover_pairs())
            if (a == x && --indegree[b] == 0)
                ready.push(b);
    }
    return order;
}

/**
 * All order-preserving maps X -> Y, at most `budget` of them.
 *
 * Enumeration walks the canonical linear extension of X, choosing f(x) in
 * Y's element order subject to the cover constraints already placed; the
 * output order is deterministic.
 */
inline enumeration_result<monotone_map> monotone_maps(const poset& x, const poset& y,
                                                      long long budget)
{
    if (budget <= 0)
        throw std::invalid_argument("monotone_maps: budget must be positive");
    enumeration_result<monotone_map> res;
    const std::vector<int> order = linear_extension(x);
    // covers of order[k] among already-placed elements
    std::vector<std::vector<int>> lower(x.size());
    for (auto [a, b] : x.cover_pairs())
        lower[b].push_back(a);

    monotone_map f(x.size(), -1);
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
            res.items.push_back(f);
            return;
        }
        int e = order[k];
        for (int cand = 0; cand < y.size() && !overflow; ++cand)
        {
            bool ok = true;
            for (int c : lower[e])
                if (!y.leq(f[c], cand))
                {
                    ok = false;
                    break;
                }
            if (!ok)
                continue;
            f[e] = cand;
            self(self, k + 1);
            f[e] = -1;
        }
    };
    rec(rec, 0);
    res.complete = !overflow;
    return res;
}

} // namespace fintop
