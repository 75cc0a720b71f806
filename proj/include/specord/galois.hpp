#pragma once

// Finite posets, monotone maps, and adjoints computed from first principles:
//   right adjoint of f:  g(y) = join { a : f(a) <= y }
//   left adjoint of g:   f(a) = meet { y : a <= g(y) }
// Both are computed by brute force and then *verified* against the defining
// equivalence f(a) <= y iff a <= g(y); a candidate that fails verification
// (the map did not preserve the required joins/meets) is reported as absent
// rather than returned broken.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "specord/errors.hpp"
#include "specord/projection.hpp"
#include "specord/tolerance.hpp"

namespace specord {

class FinitePoset {
public:
    // leq is an n x n row-major relation table; validated as a partial order.
    FinitePoset(int n, std::vector<uint8_t> leq_table) : n_(n), leq_(std::move(leq_table)) {
        if (n <= 0 || leq_.size() != static_cast<size_t>(n) * static_cast<size_t>(n))
            throw Error("FinitePoset: bad table size");
        for (int a = 0; a < n_; ++a)
            if (!leq(a, a)) throw Error("FinitePoset: relation is not reflexive");
        for (int a = 0; a < n_; ++a)
            for (int b = 0; b < n_; ++b)
                if (a != b && leq(a, b) && leq(b, a))
                    throw Error("FinitePoset: relation is not antisymmetric");
        for (int a = 0; a < n_; ++a)
            for (int b = 0; b < n_; ++b)
                if (leq(a, b))
                    for (int c = 0; c < n_; ++c)
                        if (leq(b, c) && !leq(a, c))
                            throw Error("FinitePoset: relation is not transitive");
    }

    static FinitePoset from_leq(int n, const std::function<bool(int, int)>& f) {
        std::vector<uint8_t> t(static_cast<size_t>(n) * n);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                t[static_cast<size_t>(a) * n + b] = f(a, b) ? 1 : 0;
        return FinitePoset(n, std::move(t));
    }

    static FinitePoset chain(int n) {
        return from_leq(n, [](int a, int b) { return a <= b; });
    }

    // Subsets of k atoms ordered by inclusion; element index == bitmask.
    static FinitePoset boolean(int k) {
        if (k < 0 || k > 16) throw Error("FinitePoset::boolean: k out of range");
        const int n = 1 << k;
        return from_leq(n, [](int a, int b) { return (a & ~b) == 0; });
    }

    static FinitePoset antichain(int n) {
        return from_leq(n, [](int a, int b) { return a == b; });
    }

    static FinitePoset from_projections(const std::vector<Projection>& ps,
                                        const Tolerance& tol = default_tolerance()) {
        return from_leq(static_cast<int>(ps.size()), [&](int a, int b) {
            return proj_leq(ps[static_cast<size_t>(a)], ps[static_cast<size_t>(b)], tol);
        });
    }

    int size() const { return n_; }
    bool leq(int a, int b) const { return leq_[static_cast<size_t>(a) * n_ + b] != 0; }

    friend bool operator==(const FinitePoset& x, const FinitePoset& y) {
        return x.n_ == y.n_ && x.leq_ == y.leq_;
    }

    // Greatest lower bound of a subset, if it exists.  Empty subset: top.
    std::optional<int> meet_of(const std::vector<int>& subset) const {
        std::vector<int> lower;
        for (int c = 0; c < n_; ++c) {
            bool ok = true;
            for (int a : subset) ok = ok && leq(c, a);
            if (ok) lower.push_back(c);
        }
        for (int m : lower) {
            bool greatest = true;
            for (int c : lower) greatest = greatest && leq(c, m);
            if (greatest) return m;
        }
        return std::nullopt;
    }

    std::optional<int> join_of(const std::vector<int>& subset) const {
        std::vector<int> upper;
        for (int c = 0; c < n_; ++c) {
            bool ok = true;
            for (int a : subset) ok = ok && leq(a, c);
            if (ok) upper.push_back(c);
        }
        for (int j : upper) {
            bool least = true;
            for (int c : upper) least = least && leq(j, c);
            if (least) return j;
        }
        return std::nullopt;
    }

private:
    int n_;
    std::vector<uint8_t> leq_;
};

namespace detail {

// Visit subsets of {0..n-1}: all of them when 2^n fits the 2^16 cap,
// otherwise a fixed deterministic sample (empty, full, singletons, pairs,
// and LCG-generated masks so behaviour is identical run to run).
inline void forall_subsets(int n, const std::function<void(const std::vector<int>&)>& visit) {
    if (n <= 16) {
        const uint32_t count = uint32_t{1} << n;
        std::vector<int> subset;
        for (uint32_t mask = 0; mask < count; ++mask) {
            subset.clear();
            for (int i = 0; i < n; ++i)
                if (mask & (uint32_t{1} << i)) subset.push_back(i);
            visit(subset);
        }
        return;
    }
    std::vector<int> subset;
    visit(subset);  // empty
    subset.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) subset[static_cast<size_t>(i)] = i;
    visit(subset);  // full
    for (int i = 0; i < n; ++i) visit({i});
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) visit({i, j});
    uint64_t state = 0x9E3779B97F4A7C15ull;
    for (int k = 0; k < 4096; ++k) {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        subset.clear();
        for (int i = 0; i < n; ++i)
            if ((state >> (i % 48)) & 1) subset.push_back(i);
        state ^= state >> 31;
        visit(subset);
    }
}

}  // namespace detail

struct LatticeReport {
    bool is_complete_lattice = false;
    std::optional<int> bottom;
    std::optional<int> top;
    // First subset found without a meet or join, for diagnostics.
    std::optional<std::vector<int>> failing_subset;
};

// Brute-force completeness check over subsets (capped; see forall_subsets).
inline LatticeReport check_lattice(const FinitePoset& p) {
    LatticeReport rep;
    rep.is_complete_lattice = true;
    detail::forall_subsets(p.size(), [&](const std::vector<int>& s) {
        if (!rep.is_complete_lattice) return;
        if (!p.meet_of(s) || !p.join_of(s)) {
            rep.is_complete_lattice = false;
            rep.failing_subset = s;
        }
    });
    if (rep.is_complete_lattice) {
        std::vector<int> all(static_cast<size_t>(p.size()));
        for (int i = 0; i < p.size(); ++i) all[static_cast<size_t>(i)] = i;
        rep.bottom = p.meet_of(all);
        rep.top = p.join_of(all);
    }
    return rep;
}

class MonotoneMap {
public:
    MonotoneMap(FinitePoset source, FinitePoset target, std::vector<int> table)
        : source_(std::move(source)), target_(std::move(target)), table_(std::move(table)) {
        if (table_.size() != static_cast<size_t>(source_.size()))
            throw Error("MonotoneMap: table size != source size");
        for (int v : table_)
            if (v < 0 || v >= target_.size())
                throw Error("MonotoneMap: table value out of target range");
        for (int a = 0; a < source_.size(); ++a)
            for (int b = 0; b < source_.size(); ++b)
                if (source_.leq(a, b) && !target_.leq(at(a), at(b)))
                    throw NotMonotone("MonotoneMap: order not preserved at pair (" +
                                      std::to_string(a) + ", " + std::to_string(b) + ")");
    }

    const FinitePoset& source() const { return source_; }
    const FinitePoset& target() const { return target_; }
    int at(int a) const { return table_[static_cast<size_t>(a)]; }
    const std::vector<int>& table() const { return table_; }

private:
    FinitePoset source_;
    FinitePoset target_;
    std::vector<int> table_;
};

// The adjunction square for a candidate pair f: A -> X, g: X -> A.
inline bool verify_galois(const MonotoneMap& f, const MonotoneMap& g) {
    if (!(f.source() == g.target()) || !(f.target() == g.source()))
        throw DimMismatch("verify_galois: posets do not match up");
    for (int a = 0; a < f.source().size(); ++a)
        for (int x = 0; x < g.source().size(); ++x)
            if (f.target().leq(f.at(a), x) != f.source().leq(a, g.at(x)))
                return false;
    return true;
}

namespace detail {

inline void require_complete(const FinitePoset& p, const char* role) {
    if (!check_lattice(p).is_complete_lattice)
        throw NotComplete(std::string("adjoint computation: ") + role +
                          " poset is not a complete lattice");
}

}  // namespace detail

// Right adjoint of f, or nullopt when f does not preserve joins.
inline std::optional<MonotoneMap> right_adjoint(const MonotoneMap& f) {
    detail::require_complete(f.source(), "source");
    detail::require_complete(f.target(), "target");
    std::vector<int> table(static_cast<size_t>(f.target().size()));
    for (int y = 0; y < f.target().size(); ++y) {
        std::vector<int> candidates;
        for (int a = 0; a < f.source().size(); ++a)
            if (f.target().leq(f.at(a), y)) candidates.push_back(a);
        auto j = f.source().join_of(candidates);
        if (!j) return std::nullopt;
        table[static_cast<size_t>(y)] = *j;
    }
    std::optional<MonotoneMap> g;
    try {
        g.emplace(f.target(), f.source(), std::move(table));
    } catch (const NotMonotone&) {
        return std::nullopt;
    }
    if (!verify_galois(f, *g)) return std::nullopt;
    return g;
}

// Left adjoint of g, or nullopt when g does not preserve meets.
inline std::optional<MonotoneMap> left_adjoint(const MonotoneMap& g) {
    detail::require_complete(g.source(), "source");
    detail::require_complete(g.target(), "target");
    std::vector<int> table(static_cast<size_t>(g.target().size()));
    for (int a = 0; a < g.target().size(); ++a) {
        std::vector<int> candidates;
        for (int y = 0; y < g.source().size(); ++y)
            if (g.target().leq(a, g.at(y))) candidates.push_back(y);
        auto m = g.source().meet_of(candidates);
        if (!m) return std::nullopt;
        table[static_cast<size_t>(a)] = *m;
    }
    std::optional<MonotoneMap> f;
    try {
        f.emplace(g.target(), g.source(), std::move(table));
    } catch (const NotMonotone&) {
        return std::nullopt;
    }
    if (!verify_galois(*f, g)) return std::nullopt;
    return f;
}

// Join preservation on sampled subsets: f(join S) == join f(S).
inline bool preserves_joins(const MonotoneMap& f) {
    detail::require_complete(f.source(), "source");
    detail::require_complete(f.target(), "target");
    bool ok = true;
    detail::forall_subsets(f.source().size(), [&](const std::vector<int>& s) {
        if (!ok) return;
        auto js = f.source().join_of(s);
        std::vector<int> image;
        image.reserve(s.size());
        for (int a : s) image.push_back(f.at(a));
        auto ji = f.target().join_of(image);
        ok = js && ji && f.at(*js) == *ji;
    });
    return ok;
}

inline bool preserves_meets(const MonotoneMap& f) {
    detail::require_complete(f.source(), "source");
    detail::require_complete(f.target(), "target");
    bool ok = true;
    detail::forall_subsets(f.source().size(), [&](const std::vector<int>& s) {
        if (!ok) return;
        auto ms = f.source().meet_of(s);
        std::vector<int> image;
        image.reserve(s.size());
        for (int a : s) image.push_back(f.at(a));
        auto mi = f.target().meet_of(image);
        ok = ms && mi && f.at(*ms) == *mi;
    });
    return ok;
}

}  // namespace specord
