#pragma once

#include "spinq/partition.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace spinq {

// ---------------------------------------------------------------------------
// Semistandard tableaux

/// All SSYT of the given shape and weight, as row-wise entry lists.
inline std::vector<std::vector<std::vector<int>>> enumerate_ssyt(const Partition& shape,
                                                                 const std::vector<int>& weight) {
    std::vector<std::vector<std::vector<int>>> out;
    int nl = (int)weight.size();
    std::vector<int> rem = weight;
    std::vector<std::vector<int>> rows(shape.length());
    for (int i = 0; i < shape.length(); ++i) rows[i].assign(shape.parts()[i], 0);
    auto cell_ok = [&](int i, int j, int v) {
        if (j > 0 && rows[i][j - 1] > v) return false;
        if (i > 0 && (int)rows[i - 1].size() > j && rows[i - 1][j] >= v) return false;
        return true;
    };
    auto rec = [&](auto&& self, int i, int j) -> void {
        if (i == shape.length()) { out.push_back(rows); return; }
        int ni = i, nj = j + 1;
        if (nj == shape.parts()[i]) { ni = i + 1; nj = 0; }
        for (int v = 1; v <= nl; ++v) {
            if (rem[v - 1] == 0 || !cell_ok(i, j, v)) continue;
            rows[i][j] = v;
            --rem[v - 1];
            self(self, ni, nj);
            ++rem[v - 1];
            rows[i][j] = 0;
        }
    };
    if (shape.size() != std::accumulate(weight.begin(), weight.end(), 0))
        throw std::invalid_argument("shape size and weight size differ");
    if (shape.empty()) return {{}};
    rec(rec, 0, 0);
    return out;
}

inline Int kostka_number(const Partition& lam, const std::vector<int>& mu) {
    return (Int)enumerate_ssyt(lam, mu).size();
}
inline Int kostka_number(const Partition& lam, const Partition& mu) {
    return kostka_number(lam, mu.parts());
}

/// Skew SSYT count of shape outer/inner with the given weight.
inline Int kostka_number_skew(const Partition& outer, const Partition& inner,
                              const std::vector<int>& weight) {
    if (!outer.contains(inner)) return 0;
    int nl = (int)weight.size();
    std::vector<int> rem = weight;
    std::vector<std::vector<int>> rows(outer.length());
    for (int i = 0; i < outer.length(); ++i) rows[i].assign(outer.parts()[i], 0);
    Int count = 0;
    auto cell_ok = [&](int i, int j, int v) {
        if (j > inner.part(i) && rows[i][j - 1] > v) return false;
        if (i > 0 && j >= inner.part(i - 1) && j < outer.part(i - 1) && rows[i - 1][j] >= v)
            return false;
        return true;
    };
    auto rec = [&](auto&& self, int i, int j) -> void {
        while (i < outer.length() && j >= outer.parts()[i]) { ++i; j = i < outer.length() ? inner.part(i) : 0; }
        if (i == outer.length()) { ++count; return; }
        for (int v = 1; v <= nl; ++v) {
            if (rem[v - 1] == 0 || !cell_ok(i, j, v)) continue;
            rows[i][j] = v;
            --rem[v - 1];
            self(self, i, j + 1);
            ++rem[v - 1];
            rows[i][j] = 0;
        }
    };
    int cells = outer.size() - inner.size();
    if (cells != std::accumulate(weight.begin(), weight.end(), 0)) return 0;
    if (cells == 0) return 1;
    rec(rec, 0, inner.part(0));
    return count;
}

// ---------------------------------------------------------------------------
// Charge

/// Charge of an SSYT whose weight is a partition: computed on the reading word
/// (rows left-to-right, bottom row first) by standard-subword extraction.
inline int charge_word(std::vector<int> w) {
    int total = 0;
    while (!w.empty()) {
        int maxl = *std::max_element(w.begin(), w.end());
        std::vector<bool> used(w.size(), false);
        int pos = -1;
        for (int q = (int)w.size() - 1; q >= 0; --q)
            if (w[q] == 1) { pos = q; break; }
        if (pos < 0) throw std::invalid_argument("word weight is not a partition");
        used[pos] = true;
        int idx = 0;
        total += 0;
        for (int r = 2; r <= maxl; ++r) {
            int found = -1;
            bool wrapped = false;
            for (int q = pos - 1; q >= 0; --q)
                if (!used[q] && w[q] == r) { found = q; break; }
            if (found < 0) {
                wrapped = true;
                for (int q = (int)w.size() - 1; q > pos; --q)
                    if (!used[q] && w[q] == r) { found = q; break; }
            }
            if (found < 0) throw std::invalid_argument("word weight is not a partition");
            if (wrapped) ++idx;
            used[found] = true;
            pos = found;
            total += idx;
        }
        std::vector<int> rest;
        for (int q = 0; q < (int)w.size(); ++q)
            if (!used[q]) rest.push_back(w[q]);
        w = std::move(rest);
    }
    return total;
}

inline std::vector<int> reading_word(const std::vector<std::vector<int>>& rows) {
    std::vector<int> w;
    for (auto it = rows.rbegin(); it != rows.rend(); ++it)
        w.insert(w.end(), it->begin(), it->end());
    return w;
}

inline int charge(const std::vector<std::vector<int>>& rows) {
    std::vector<int> wt;
    for (const auto& r : rows)
        for (int v : r) {
            if ((int)wt.size() < v) wt.resize(v, 0);
            ++wt[v - 1];
        }
    for (size_t i = 0; i + 1 < wt.size(); ++i)
        if (wt[i] < wt[i + 1]) throw std::invalid_argument("tableau weight is not a partition");
    return charge_word(reading_word(rows));
}

// ---------------------------------------------------------------------------
// Marked shifted tableaux

// Marked letters encode as 2k (k'), unmarked as 2k+1 (k); this matches the
// alphabet order 1' < 1 < 2' < 2 < ...
inline Int marked_shifted_count(const Partition& xi, const std::vector<int>& mu) {
    if (!xi.is_strict()) throw std::invalid_argument("shape must be strict");
    if (xi.size() != std::accumulate(mu.begin(), mu.end(), 0)) return 0;
    if (xi.empty()) return 1;
    auto cells = shifted_cells(xi);
    int nl = (int)mu.size();
    std::vector<int> rem = mu;
    std::map<std::pair<int, int>, int> entry;
    Int count = 0;
    auto ok = [&](int i, int j, int e) {
        bool marked = e % 2 == 0;
        auto left = entry.find({i, j - 1});
        if (left != entry.end()) {
            if (left->second > e) return false;
            if (left->second == e && marked) return false;  // marked strict in rows
        }
        auto up = entry.find({i - 1, j});
        if (up != entry.end()) {
            if (up->second > e) return false;
            if (up->second == e && !marked) return false;  // unmarked strict in columns
        }
        return true;
    };
    auto rec = [&](auto&& self, size_t c) -> void {
        if (c == cells.size()) { ++count; return; }
        auto [i, j] = cells[c];
        for (int k = 1; k <= nl; ++k) {
            if (rem[k - 1] == 0) continue;
            for (int e : {2 * k, 2 * k + 1}) {
                if (!ok(i, j, e)) continue;
                entry[{i, j}] = e;
                --rem[k - 1];
                self(self, c + 1);
                ++rem[k - 1];
                entry.erase({i, j});
            }
        }
    };
    rec(rec, 0);
    return count;
}
inline Int marked_shifted_count(const Partition& xi, const Partition& mu) {
    return marked_shifted_count(xi, mu.parts());
}

// ---------------------------------------------------------------------------
// Standard (skew) shifted tableaux

// Standard filling of a skew shifted diagram outer/inner; cell (row, col) with
// col counted from the shifted origin (row i starts at col i).
struct ShiftedTableau {
    Partition outer, inner;
    std::map<std::pair<int, int>, int> cells;  // (row, col) -> label

    int size() const { return (int)cells.size(); }
    std::pair<int, int> cell_of(int label) const {
        for (const auto& [rc, v] : cells)
            if (v == label) return rc;
        throw std::out_of_range("label not present");
    }
    int content_of(int label) const {
        auto [i, j] = cell_of(label);
        return j - i;
    }
};

inline std::vector<ShiftedTableau> enumerate_standard_shifted(const Partition& outer,
                                                              const Partition& inner) {
    if (!outer.is_strict() || !inner.is_strict())
        throw std::invalid_argument("shapes must be strict");
    if (!outer.contains(inner)) throw std::invalid_argument("inner not contained in outer");
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i < outer.length(); ++i)
        for (int j = i + inner.part(i); j < i + outer.parts()[i]; ++j)
            cells.emplace_back(i, j);
    int n = (int)cells.size();
    std::vector<ShiftedTableau> out;
    ShiftedTableau T{outer, inner, {}};
    auto rec = [&](auto&& self, int next) -> void {
        if (next > n) { out.push_back(T); return; }
        for (auto [i, j] : cells) {
            if (T.cells.count({i, j})) continue;
            // left and upper neighbours (inside the skew diagram) must be filled
            bool left_in = j - 1 >= i + inner.part(i) && j - 1 >= i;
            if (left_in && !T.cells.count({i, j - 1})) continue;
            bool up_in = i > 0 && j >= i - 1 + inner.part(i - 1) && j < i - 1 + outer.part(i - 1);
            if (up_in && !T.cells.count({i - 1, j})) continue;
            T.cells[{i, j}] = next;
            self(self, next + 1);
            T.cells.erase({i, j});
        }
    };
    rec(rec, 1);
    return out;
}

inline Int standard_shifted_count(const Partition& outer, const Partition& inner = {}) {
    return (Int)enumerate_standard_shifted(outer, inner).size();
}

// ---------------------------------------------------------------------------
// Weight <-> tableau bijection

/// A weight is valid iff entries lie in [0, n) and between any two equal
/// entries a: a = 0 requires a 1 strictly between, a >= 1 requires both a-1
/// and a+1 strictly between.
inline bool is_valid_weight(const std::vector<int>& w) {
    int n = (int)w.size();
    for (int v : w)
        if (v < 0 || v >= n) return false;
    for (int k = 0; k < n; ++k)
        for (int l = k + 1; l < n; ++l) {
            if (w[k] != w[l]) continue;
            int a = w[k];
            bool below = false, above = false;
            for (int m = k + 1; m < l; ++m) {
                if (w[m] == a + 1) above = true;
                if (w[m] == a - 1) below = true;
            }
            if (a == 0 ? !above : !(above && below)) return false;
        }
    return true;
}

inline std::vector<int> tableau_to_weight(const ShiftedTableau& T) {
    std::vector<int> w(T.size());
    for (const auto& [rc, v] : T.cells) w[v - 1] = rc.second - rc.first;
    return w;
}

namespace detail {

// Rows of a skew shifted diagram viewed as content intervals: row i holds
// contents a_i..b_i, b strictly decreasing down the rows. A cell of content u
// in row i sits directly above the content u-1 cell of row i+1.
struct ContentRows {
    std::vector<std::map<int, int>> rows;  // content -> label

    bool has_content(int u) const {
        for (const auto& r : rows)
            if (r.count(u)) return true;
        return false;
    }
    int last_row_with(int u) const {
        for (int i = (int)rows.size() - 1; i >= 0; --i)
            if (rows[i].count(u)) return i;
        return -1;
    }
    int max_content(int i) const { return rows[i].rbegin()->first; }
    int min_content(int i) const { return rows[i].begin()->first; }
};

}  // namespace detail

inline ShiftedTableau weight_to_tableau(const std::vector<int>& w) {
    if (!is_valid_weight(w)) throw std::invalid_argument("invalid weight sequence");
    detail::ContentRows t;
    for (int k = 1; k <= (int)w.size(); ++k) {
        int u = w[k - 1];
        bool below = t.has_content(u - 1), above = t.has_content(u + 1);
        if (!below && !above) {
            // new one-cell component; keep rows sorted by max content
            size_t pos = 0;
            while (pos < t.rows.size() && t.max_content(pos) > u) ++pos;
            t.rows.insert(t.rows.begin() + pos, std::map<int, int>{{u, k}});
        } else if (below && !above) {
            int r = t.last_row_with(u - 1);
            if (t.max_content(r) != u - 1) throw std::logic_error("weight construction failed");
            t.rows[r][u] = k;
        } else if (!below && above) {
            int r = t.last_row_with(u + 1);
            if (r + 1 < (int)t.rows.size() && t.max_content(r + 1) >= u)
                throw std::logic_error("weight construction failed");
            t.rows.insert(t.rows.begin() + r + 1, std::map<int, int>{{u, k}});
        } else {
            int rc = t.last_row_with(u - 1), rd = t.last_row_with(u + 1);
            if (rc != rd + 1 || t.max_content(rc) != u - 1)
                throw std::logic_error("weight construction failed");
            t.rows[rc][u] = k;
        }
    }
    // read off outer/inner shapes: row i spans contents a_i..b_i, so as a
    // shifted diagram outer_i = b_i + 1 and inner_i = a_i
    std::vector<int> outer, inner_raw;
    for (size_t i = 0; i < t.rows.size(); ++i) {
        outer.push_back(t.max_content(i) + 1);
        inner_raw.push_back(t.min_content(i));
    }
    std::vector<int> inner;
    for (int v : inner_raw)
        if (v > 0) inner.push_back(v);
    ShiftedTableau T;
    T.outer = Partition(outer);
    T.inner = Partition(inner);
    if (!T.outer.is_strict() || !T.inner.is_strict() ||
        (int)inner.size() != std::count_if(inner_raw.begin(), inner_raw.end(),
                                           [](int v) { return v > 0; }))
        throw std::logic_error("weight construction failed");
    for (size_t i = 0; i < inner_raw.size(); ++i) {
        if ((int)i < (int)inner.size() && inner_raw[i] != inner[i])
            throw std::logic_error("weight construction failed");
        if ((int)i >= (int)inner.size() && inner_raw[i] != 0)
            throw std::logic_error("weight construction failed");
    }
    for (size_t i = 0; i < t.rows.size(); ++i)
        for (const auto& [u, label] : t.rows[i]) T.cells[{(int)i, (int)i + u}] = label;
    return T;
}

}  // namespace spinq
