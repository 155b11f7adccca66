#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sdim/bitset.hpp"
#include "sdim/distance.hpp"
#include "sdim/graph.hpp"
#include "sdim/resolution.hpp"

namespace sdim {

// The three explicit strong resolving sets for GP(n,2), one per residue family.
enum class LemmaFamily { FourKPlus2, FourK, FourKPlus1 };

inline const char* family_name(LemmaFamily f) {
    switch (f) {
        case LemmaFamily::FourKPlus2: return "4k+2";
        case LemmaFamily::FourK: return "4k";
        case LemmaFamily::FourKPlus1: return "4k+1";
    }
    return "?";
}

inline int family_n(LemmaFamily f, int k) {
    switch (f) {
        case LemmaFamily::FourKPlus2: return 4 * k + 2;
        case LemmaFamily::FourK: return 4 * k;
        case LemmaFamily::FourKPlus1: return 4 * k + 1;
    }
    return 0;
}

struct LemmaSet {
    LemmaFamily family;
    int k = 0;
    int n = 0; // of the target GP(n,2)
    VertexSet vertices;
    int claimed_size = 0;
    bool below_lemma_range = false; // k < 3: formula instantiated outside its stated range
};

// Index sets, with u_i -> i and v_i -> n+i, all indices mod n:
//   4k+2 family: { u_{2i} | i=0..2k } u { v_i | i=0..2k },            size 4k+2
//   4k   family: { u_i | i=0..2k-1 } u { u_{2k+2i+1} | i=0..k-1 }
//                u { v_{2i+1} | i=0..2k-1 },                          size 5k
//   4k+1 family: { u_{2i+1} | i=0..k-1 } u { u_{2k+i} | i=0..2k }
//                u { v_i | i=0..2k+3 },                               size 5k+5
inline LemmaSet lemma_set(LemmaFamily family, int k) {
    if (k < 1) throw std::invalid_argument("lemma_set requires k >= 1");
    const int n = family_n(family, k);
    LemmaSet ls{family, k, n, VertexSet(2 * n), 0, k < 3};
    auto u = [&](int i) { return ((i % n) + n) % n; };
    auto v = [&](int i) { return n + ((i % n) + n) % n; };
    switch (family) {
        case LemmaFamily::FourKPlus2:
            for (int i = 0; i <= 2 * k; ++i) {
                ls.vertices.set(u(2 * i));
                ls.vertices.set(v(i));
            }
            ls.claimed_size = 4 * k + 2;
            break;
        case LemmaFamily::FourK:
            for (int i = 0; i < 2 * k; ++i) ls.vertices.set(u(i));
            for (int i = 0; i < k; ++i) ls.vertices.set(u(2 * k + 2 * i + 1));
            for (int i = 0; i < 2 * k; ++i) ls.vertices.set(v(2 * i + 1));
            ls.claimed_size = 5 * k;
            break;
        case LemmaFamily::FourKPlus1:
            for (int i = 0; i < k; ++i) ls.vertices.set(u(2 * i + 1));
            for (int i = 0; i <= 2 * k; ++i) ls.vertices.set(u(2 * k + i));
            for (int i = 0; i <= 2 * k + 3; ++i) ls.vertices.set(v(i));
            ls.claimed_size = 5 * k + 5;
            break;
    }
    return ls;
}

// Known strong metric bases of GP(n,2) for small n, as published. The n=7
// entry claims sdim 9 but lists 10 vertices; it ships as-is with the
// discrepancy flagged, and the exact solver is authoritative for n=7.
struct CatalogEntry {
    int n = 0;
    int sdim = 0; // claimed value
    std::vector<std::string> basis_labels;
    bool size_discrepancy = false; // |basis_labels| != sdim
};

inline const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = [] {
        std::vector<CatalogEntry> c;
        auto add = [&](int n, int sdim, std::vector<std::string> labels) {
            bool disc = int(labels.size()) != sdim;
            c.push_back({n, sdim, std::move(labels), disc});
        };
        auto range = [](char t, int lo, int hi, int step = 1) {
            std::vector<std::string> out;
            for (int i = lo; i <= hi; i += step) out.push_back(t + std::to_string(i));
            return out;
        };
        auto cat = [](std::vector<std::string> a, const std::vector<std::string>& b) {
            a.insert(a.end(), b.begin(), b.end());
            return a;
        };
        add(5, 8, cat(range('u', 0, 3), range('v', 0, 3)));
        add(7, 9, cat(range('u', 0, 3), {"v0", "v1", "v2", "v3", "v4", "v6"}));
        add(8, 8, cat(range('u', 4, 7), {"v1", "v3", "v5", "v7"}));
        add(9, 13, cat({"u2", "u4", "u5", "u6", "u7", "u8"},
                       {"v0", "v2", "v3", "v4", "v5", "v6", "v7"}));
        add(11, 12, cat(range('u', 0, 5), {"v0", "v1", "v2", "v5", "v6", "v7"}));
        add(12, 13, cat(range('u', 0, 6), range('v', 0, 10, 2)));
        add(13, 17, cat(range('u', 0, 7),
                        {"v1", "v3", "v5", "v6", "v7", "v8", "v9", "v10", "v12"}));
        add(15, 20, cat(range('u', 0, 9), range('v', 0, 9)));
        add(16, 19, cat(range('u', 0, 10), range('v', 0, 14, 2)));
        add(17, 24, cat(range('u', 0, 11), range('v', 0, 11)));
        add(19, 24, cat(cat({"u0", "u4"}, range('u', 6, 17)),
                        {"v0", "v1", "v5", "v6", "v9", "v10", "v11", "v14", "v15", "v16"}));
        return c;
    }();
    return entries;
}

inline const CatalogEntry& catalog_entry(int n) {
    for (const auto& e : catalog())
        if (e.n == n) return e;
    throw std::invalid_argument("no catalog entry for n=" + std::to_string(n));
}

inline VertexSet catalog_basis(const CatalogEntry& e, const Graph& g) {
    VertexSet s(g.n_vertices());
    for (const auto& l : e.basis_labels) s.set(g.parse_label(l));
    return s;
}

// ---------------------------------------------------------------------------
// Case tables: the per-row witness claims behind the three constructions.
// Each row is data: id, human-readable pair/witness/condition, and a
// generator that enumerates every concrete instantiation for a given k.
// Checking is distance-based (strongly_resolves), not path-based, so printed
// path typos in the source tables cannot cause spurious failures.
// ---------------------------------------------------------------------------

enum class CaseTable { T1, T2, T3 };

inline const char* case_table_name(CaseTable t) {
    switch (t) {
        case CaseTable::T1: return "T1";
        case CaseTable::T2: return "T2";
        case CaseTable::T3: return "T3";
    }
    return "?";
}

inline LemmaFamily case_table_family(CaseTable t) {
    switch (t) {
        case CaseTable::T2: return LemmaFamily::FourK;
        case CaseTable::T3: return LemmaFamily::FourKPlus1;
        default: return LemmaFamily::FourKPlus2;
    }
}

struct CaseInstance {
    int a = 0, b = 0;       // the pair
    int w = 0;              // claimed witness
    bool want_in_s = true;  // row claims w lies in the lemma set
};

struct CaseRow {
    CaseTable table;
    std::string case_id;
    std::string pair_pattern;
    std::string witness_pattern;
    std::string condition;
    std::function<std::vector<CaseInstance>(int k)> instances;
};

namespace detail {

struct GpIndex {
    int n;
    int u(int i) const { return ((i % n) + n) % n; }
    int v(int i) const { return n + ((i % n) + n) % n; }
};

inline std::vector<CaseRow> make_case_rows() {
    std::vector<CaseRow> rows;
    auto add = [&](CaseTable t, const char* id, const char* pp, const char* wp,
                   const char* cond, std::function<std::vector<CaseInstance>(int)> gen) {
        rows.push_back({t, id, pp, wp, cond, std::move(gen)});
    };

    // --- T1: GP(4k+2,2), set { u_{2i}, v_i | i=0..2k } ---
    // Case 1: (u_i,u_j), i,j odd; canonical j-i in {2,...,2k} after wrapping.
    add(CaseTable::T1, "T1.1a", "(u_i,u_j), i,j odd", "u_{i-1}", "j-i = 2", [](int k) {
        GpIndex x{4 * k + 2};
        std::vector<CaseInstance> out;
        for (int i = 1; i < x.n; i += 2)
            out.push_back({x.u(i), x.u(i + 2), x.u(i - 1), true});
        return out;
    });
    add(CaseTable::T1, "T1.1b", "(u_i,u_j), i,j odd", "u_{i-1}", "4 <= j-i <= 2k", [](int k) {
        GpIndex x{4 * k + 2};
        std::vector<CaseInstance> out;
        for (int i = 1; i < x.n; i += 2)
            for (int d = 4; d <= 2 * k; d += 2)
                out.push_back({x.u(i), x.u(i + d), x.u(i - 1), true});
        return out;
    });
    // Case 2: (v_i,v_j), 2k+1 <= i < j <= 4k+1.
    add(CaseTable::T1, "T1.2a", "(v_i,v_j), i,j >= 2k+1", "u_j and u_{j+1}", "j-i even",
        [](int k) {
            GpIndex x{4 * k + 2};
            std::vector<CaseInstance> out;
            for (int i = 2 * k + 1; i < x.n; ++i)
                for (int j = i + 2; j < x.n; j += 2) {
                    out.push_back({x.v(i), x.v(j), x.u(j), j % 2 == 0});
                    out.push_back({x.v(i), x.v(j), x.u(j + 1), j % 2 == 1});
                }
            return out;
        });
    add(CaseTable::T1, "T1.2b", "(v_i,v_j), i,j >= 2k+1", "v_{2k}", "j-i odd, i even",
        [](int k) {
            GpIndex x{4 * k + 2};
            std::vector<CaseInstance> out;
            for (int i = 2 * k + 2; i < x.n; i += 2)
                for (int j = i + 1; j < x.n; j += 2)
                    out.push_back({x.v(i), x.v(j), x.v(2 * k), true});
            return out;
        });
    add(CaseTable::T1, "T1.2c", "(v_i,v_j), i,j >= 2k+1", "v_{2k-1}", "j-i odd, i odd",
        [](int k) {
            GpIndex x{4 * k + 2};
            std::vector<CaseInstance> out;
            for (int i = 2 * k + 1; i < x.n; i += 2)
                for (int j = i + 1; j < x.n; j += 2)
                    out.push_back({x.v(i), x.v(j), x.v(2 * k - 1), true});
            return out;
        });
    // Case 3: (u_i,v_j), i odd, j >= 2k+1; conditions on plain j-i.
    auto t1c3 = [](int k, auto&& keep, auto&& wit) {
        GpIndex x{4 * k + 2};
        std::vector<CaseInstance> out;
        for (int i = 1; i < x.n; i += 2)
            for (int j = 2 * k + 1; j < x.n; ++j)
                if (keep(i, j, k)) out.push_back({x.u(i), x.v(j), wit(x, i, j, k), true});
        return out;
    };
    auto addt1c3 = [&](const char* id, const char* wp, const char* cond, auto keep, auto wit) {
        add(CaseTable::T1, id, "(u_i,v_j), i odd, j >= 2k+1", wp, cond,
            [=](int k) { return t1c3(k, keep, wit); });
    };
    addt1c3("T1.3a", "u_{i+1}", "i >= j, j odd",
            [](int i, int j, int) { return j % 2 == 1 && i >= j; },
            [](GpIndex x, int i, int, int) { return x.u(i + 1); });
    addt1c3("T1.3b", "v_{2k}", "i > j, j even",
            [](int i, int j, int) { return j % 2 == 0 && i > j; },
            [](GpIndex x, int, int, int k) { return x.v(2 * k); });
    addt1c3("T1.3c", "u_{i-1}", "j odd, 0 < j-i <= 2k",
            [](int i, int j, int k) { return j % 2 == 1 && 0 < j - i && j - i <= 2 * k; },
            [](GpIndex x, int i, int, int) { return x.u(i - 1); });
    addt1c3("T1.3d", "u_{i+1}", "j odd, j-i >= 2k+2",
            [](int i, int j, int k) { return j % 2 == 1 && j - i >= 2 * k + 2; },
            [](GpIndex x, int i, int, int) { return x.u(i + 1); });
    addt1c3("T1.3e", "v_{2k-1}", "j-i = 1",
            [](int i, int j, int) { return j - i == 1; },
            [](GpIndex x, int, int, int k) { return x.v(2 * k - 1); });
    addt1c3("T1.3f", "u_{j+2} = u_{i+5}", "j-i = 3",
            [](int i, int j, int) { return j - i == 3; },
            [](GpIndex x, int, int j, int) { return x.u(j + 2); });
    addt1c3("T1.3g", "u_j", "j even, 5 <= j-i <= 2k+1",
            [](int i, int j, int k) { return j % 2 == 0 && 5 <= j - i && j - i <= 2 * k + 1; },
            [](GpIndex x, int, int j, int) { return x.u(j); });
    addt1c3("T1.3h", "u_j", "j even, 2k+3 <= j-i < 4k-1",
            [](int i, int j, int k) {
                return j % 2 == 0 && 2 * k + 3 <= j - i && j - i < 4 * k - 1;
            },
            [](GpIndex x, int, int j, int) { return x.u(j); });
    addt1c3("T1.3i", "v_1", "j even, j-i = 4k-1",
            [](int i, int j, int k) { return j % 2 == 0 && j - i == 4 * k - 1; },
            [](GpIndex x, int, int, int) { return x.v(1); });

    // --- T2: GP(4k,2), set {u_0..u_{2k-1}} u {odd u in upper half} u {odd v} ---
    // Case 1: (u_i,u_j), i,j even >= 2k, i < j.
    add(CaseTable::T2, "T2.1a", "(u_i,u_j), i,j >= 2k even", "u_{j+1} = u_{i+3}", "j-i = 2",
        [](int k) {
            GpIndex x{4 * k};
            std::vector<CaseInstance> out;
            for (int i = 2 * k; i + 2 < x.n; i += 2)
                out.push_back({x.u(i), x.u(i + 2), x.u(i + 3), true});
            return out;
        });
    add(CaseTable::T2, "T2.1b", "(u_i,u_j), i,j >= 2k even", "u_{j+1}", "j-i >= 4", [](int k) {
        GpIndex x{4 * k};
        std::vector<CaseInstance> out;
        for (int i = 2 * k; i < x.n; i += 2)
            for (int j = i + 4; j < x.n; j += 2)
                out.push_back({x.u(i), x.u(j), x.u(j + 1), true});
        return out;
    });
    // Case 2: (v_i,v_j), i,j even; canonical j-i in {2,...,2k} after wrapping.
    add(CaseTable::T2, "T2.2a", "(v_i,v_j), i,j even", "u_{j+1}", "j-i <= 2k-2", [](int k) {
        GpIndex x{4 * k};
        std::vector<CaseInstance> out;
        for (int i = 0; i < x.n; i += 2)
            for (int d = 2; d <= 2 * k - 2; d += 2)
                out.push_back({x.v(i), x.v(i + d), x.u(i + d + 1), true});
        return out;
    });
    add(CaseTable::T2, "T2.2b", "(v_i,v_j), i,j even", "u_i and u_{i+2k}", "j-i = 2k",
        [](int k) {
            GpIndex x{4 * k};
            std::vector<CaseInstance> out;
            for (int i = 0; i < x.n; i += 2) {
                out.push_back({x.v(i), x.v(i + 2 * k), x.u(i), x.u(i) < 2 * k});
                out.push_back({x.v(i), x.v(i + 2 * k), x.u(i + 2 * k), x.u(i + 2 * k) < 2 * k});
            }
            return out;
        });
    // Case 3: (u_i,v_j), i,j even, i >= 2k; j-i wrapped into [-2k, 2k-2].
    auto t2c3 = [](int k, auto&& keep, auto&& wit) {
        GpIndex x{4 * k};
        std::vector<CaseInstance> out;
        for (int i = 2 * k; i < x.n; i += 2)
            for (int j = 0; j < x.n; j += 2) {
                int d = ((j - i) % x.n + x.n) % x.n;
                if (d > 2 * k - 2) d -= x.n;
                if (keep(d, k)) out.push_back({x.u(i), x.v(j), wit(x, i, j, k), true});
            }
        return out;
    };
    auto addt2c3 = [&](const char* id, const char* wp, const char* cond, auto keep, auto wit) {
        add(CaseTable::T2, id, "(u_i,v_j), i,j even, i >= 2k", wp, cond,
            [=](int k) { return t2c3(k, keep, wit); });
    };
    addt2c3("T2.3a", "u_{i-1}", "0 <= j-i <= 2k-2",
            [](int d, int k) { return 0 <= d && d <= 2 * k - 2; },
            [](GpIndex x, int i, int, int) { return x.u(i - 1); });
    addt2c3("T2.3b", "u_{i-2k} = u_j", "j-i = -2k",
            [](int d, int k) { return d == -2 * k; },
            [](GpIndex x, int i, int, int k) { return x.u(i - 2 * k); });
    addt2c3("T2.3c", "u_{j-1}", "-2k < j-i < -2",
            [](int d, int k) { return -2 * k < d && d < -2; },
            [](GpIndex x, int, int j, int) { return x.u(j - 1); });
    addt2c3("T2.3d", "u_{i+1}", "j-i = -2",
            [](int d, int) { return d == -2; },
            [](GpIndex x, int i, int, int) { return x.u(i + 1); });

    // --- T3: GP(4k+1,2), set {odd u < 2k} u {u_{2k}..u_{4k}} u {v_0..v_{2k+3}} ---
    // Case 1: (u_{2i},u_{2j}), 0 <= i < j <= k-1.
    add(CaseTable::T3, "T3.1a", "(u_{2i},u_{2j}), 0 <= i,j <= k-1", "u_{2j+1}", "j-i >= 2",
        [](int k) {
            GpIndex x{4 * k + 1};
            std::vector<CaseInstance> out;
            for (int i = 0; i < k; ++i)
                for (int j = i + 2; j < k; ++j)
                    out.push_back({x.u(2 * i), x.u(2 * j), x.u(2 * j + 1), true});
            return out;
        });
    add(CaseTable::T3, "T3.1b", "(u_{2i},u_{2j}), 0 <= i,j <= k-1", "u_{2j+1}", "j-i = 1",
        [](int k) {
            GpIndex x{4 * k + 1};
            std::vector<CaseInstance> out;
            for (int i = 0; i + 1 < k; ++i)
                out.push_back({x.u(2 * i), x.u(2 * i + 2), x.u(2 * i + 3), true});
            return out;
        });
    // Case 2: (v_i,v_j), 2k+4 <= i < j <= 4k; witness v_1 for even j, v_0 for odd j.
    auto t3c2 = [](int k, int ipar, int jpar, int witidx) {
        GpIndex x{4 * k + 1};
        std::vector<CaseInstance> out;
        for (int i = 2 * k + 4; i < x.n; ++i)
            for (int j = i + 1; j < x.n; ++j)
                if (i % 2 == ipar && j % 2 == jpar)
                    out.push_back({x.v(i), x.v(j), x.v(witidx), true});
        return out;
    };
    add(CaseTable::T3, "T3.2a", "(v_i,v_j), 2k+4 <= i,j <= 4k", "v_1", "i,j even",
        [=](int k) { return t3c2(k, 0, 0, 1); });
    add(CaseTable::T3, "T3.2b", "(v_i,v_j), 2k+4 <= i,j <= 4k", "v_0", "i,j odd",
        [=](int k) { return t3c2(k, 1, 1, 0); });
    add(CaseTable::T3, "T3.2c", "(v_i,v_j), 2k+4 <= i,j <= 4k", "v_0", "i even, j odd",
        [=](int k) { return t3c2(k, 0, 1, 0); });
    add(CaseTable::T3, "T3.2d", "(v_i,v_j), 2k+4 <= i,j <= 4k", "v_1", "i odd, j even",
        [=](int k) { return t3c2(k, 1, 0, 1); });
    // Case 3: (u_{2i},v_j), 0 <= i <= k-1, 2k+4 <= j <= 4k; D = j-2i in [6, 4k].
    auto t3c3 = [](int k, auto&& keep, auto&& wit) {
        GpIndex x{4 * k + 1};
        std::vector<CaseInstance> out;
        for (int i = 0; i < k; ++i)
            for (int j = 2 * k + 4; j < x.n; ++j) {
                int D = j - 2 * i;
                if (keep(j, D, k)) out.push_back({x.u(2 * i), x.v(j), wit(x, i, j, k), true});
            }
        return out;
    };
    auto addt3c3 = [&](const char* id, const char* wp, const char* cond, auto keep, auto wit) {
        add(CaseTable::T3, id, "(u_{2i},v_j), 0 <= i <= k-1, 2k+4 <= j <= 4k", wp, cond,
            [=](int k) { return t3c3(k, keep, wit); });
    };
    addt3c3("T3.3a", "u_j", "j even, j-2i <= 2k",
            [](int j, int D, int k) { return j % 2 == 0 && D <= 2 * k; },
            [](GpIndex x, int, int j, int) { return x.u(j); });
    addt3c3("T3.3b", "u_j", "j even, 2k+2 <= j-2i < 4k-2",
            [](int j, int D, int k) { return j % 2 == 0 && 2 * k + 2 <= D && D < 4 * k - 2; },
            [](GpIndex x, int, int j, int) { return x.u(j); });
    addt3c3("T3.3c", "u_j", "j odd, j-2i <= 2k-1",
            [](int j, int D, int k) { return j % 2 == 1 && D <= 2 * k - 1; },
            [](GpIndex x, int, int j, int) { return x.u(j); });
    addt3c3("T3.3d", "u_j", "j odd, 2k+1 <= j-2i <= 4k-3",
            [](int j, int D, int k) { return j % 2 == 1 && 2 * k + 1 <= D && D <= 4 * k - 3; },
            [](GpIndex x, int, int j, int) { return x.u(j); });
    addt3c3("T3.3e", "v_{2i}", "j-2i = 4k-2",
            [](int, int D, int k) { return D == 4 * k - 2; },
            [](GpIndex x, int i, int, int) { return x.v(2 * i); });
    addt3c3("T3.3f", "u_1", "j-2i = 4k-1",
            [](int, int D, int k) { return D == 4 * k - 1; },
            [](GpIndex x, int, int, int) { return x.u(1); });
    addt3c3("T3.3g", "v_0", "j-2i = 4k",
            [](int, int D, int k) { return D == 4 * k; },
            [](GpIndex x, int, int, int) { return x.v(0); });

    return rows;
}

} // namespace detail

inline const std::vector<CaseRow>& case_rows() {
    static const std::vector<CaseRow> rows = detail::make_case_rows();
    return rows;
}

inline std::vector<CaseRow> case_rows(CaseTable t) {
    std::vector<CaseRow> out;
    for (const auto& r : case_rows())
        if (r.table == t) out.push_back(r);
    return out;
}

struct CaseFailure {
    int a = 0, b = 0, w = 0;
    bool resolved = false;
    bool in_set = false;
};

struct CaseRowResult {
    std::string case_id;
    int checked = 0;
    int failed = 0;
    std::optional<CaseFailure> first_failure;
};

struct CaseReport {
    CaseTable table = CaseTable::T1;
    int k = 0;
    int n = 0;
    std::vector<CaseRowResult> rows;

    bool all_ok() const {
        for (const auto& r : rows)
            if (r.failed) return false;
        return true;
    }
    int total_checked() const {
        int c = 0;
        for (const auto& r : rows) c += r.checked;
        return c;
    }
};

// Instantiate every row of one table at a concrete k and assert, via the
// distance matrix, that each claimed witness strongly resolves its pair and
// lies in the lemma set. Failures are data in the report, not errors.
inline CaseReport check_case_rows(CaseTable table, int k) {
    if (k < 3) throw std::invalid_argument("case tables require k >= 3");
    const LemmaFamily fam = case_table_family(table);
    const int n = family_n(fam, k);
    const Graph g = build_gp({n, 2});
    const DistanceMatrix dm = all_pairs_distances(g);
    const LemmaSet ls = lemma_set(fam, k);

    CaseReport rep;
    rep.table = table;
    rep.k = k;
    rep.n = n;
    for (const auto& row : case_rows(table)) {
        CaseRowResult rr;
        rr.case_id = row.case_id;
        for (const auto& inst : row.instances(k)) {
            ++rr.checked;
            const bool resolved = strongly_resolves(dm, inst.w, inst.a, inst.b);
            const bool in_set = !inst.want_in_s || ls.vertices.test(inst.w);
            if (!resolved || !in_set) {
                ++rr.failed;
                if (!rr.first_failure)
                    rr.first_failure = CaseFailure{inst.a, inst.b, inst.w, resolved, in_set};
            }
        }
        rep.rows.push_back(std::move(rr));
    }
    return rep;
}

} // namespace sdim
