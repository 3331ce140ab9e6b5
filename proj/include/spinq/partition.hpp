#pragma once

#include "spinq/rational.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace spinq {

// Weakly decreasing list of positive parts. Also used for strict partitions;
// is_strict() distinguishes them.
class Partition {
  public:
    Partition() = default;
    Partition(std::initializer_list<int> p) : parts_(p) { validate(); }
    explicit Partition(std::vector<int> p) : parts_(std::move(p)) { validate(); }

    /// Sorts a composition into a partition, dropping zeros.
    static Partition sorted(std::vector<int> p) {
        std::erase(p, 0);
        std::sort(p.begin(), p.end(), std::greater<>());
        return Partition(std::move(p));
    }

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return (int)parts_.size(); }
    int size() const { int s = 0; for (int p : parts_) s += p; return s; }
    int part(int i) const { return i >= 0 && i < length() ? parts_[i] : 0; }
    bool empty() const { return parts_.empty(); }
    /// 1 if the length is odd, 0 if even.
    int delta() const { return length() % 2; }

    bool is_strict() const {
        for (int i = 0; i + 1 < length(); ++i)
            if (parts_[i] <= parts_[i + 1]) return false;
        return true;
    }
    bool is_odd_parts() const {
        for (int p : parts_) if (p % 2 == 0) return false;
        return true;
    }
    bool contains(const Partition& inner) const {
        for (int i = 0; i < inner.length(); ++i)
            if (part(i) < inner.part(i)) return false;
        return true;
    }

    Partition conjugate() const {
        std::vector<int> c;
        for (int j = 0; j < part(0); ++j) {
            int col = 0;
            for (int p : parts_) if (p > j) ++col;
            c.push_back(col);
        }
        return Partition(std::move(c));
    }

    /// Multiplicity of part i.
    int mult(int i) const { return (int)std::count(parts_.begin(), parts_.end(), i); }

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

    std::string str() const {
        std::ostringstream os;
        os << "(";
        for (int i = 0; i < length(); ++i) os << (i ? "," : "") << parts_[i];
        os << ")";
        return os.str();
    }

    /// Parses "(4,3,1)", "4,3,1", or "[4,3,1]".
    static Partition parse(const std::string& s) {
        std::vector<int> p;
        std::string cur;
        for (char ch : s) {
            if (ch >= '0' && ch <= '9') cur += ch;
            else if (!cur.empty()) { p.push_back(std::stoi(cur)); cur.clear(); }
        }
        if (!cur.empty()) p.push_back(std::stoi(cur));
        return Partition(std::move(p));
    }

  private:
    void validate() const {
        for (int i = 0; i < length(); ++i) {
            if (parts_[i] <= 0) throw std::invalid_argument("parts must be positive: " + str());
            if (i && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("parts must weakly decrease: " + str());
        }
    }
    std::vector<int> parts_;
};

enum class Family { All, Strict, Odd, StrictEvenLength, StrictOddLength };

inline Family family_parse(const std::string& s) {
    if (s == "all") return Family::All;
    if (s == "strict") return Family::Strict;
    if (s == "odd") return Family::Odd;
    if (s == "strict-even-length") return Family::StrictEvenLength;
    if (s == "strict-odd-length") return Family::StrictOddLength;
    throw std::invalid_argument("unknown partition family: " + s);
}

inline std::vector<Partition> enumerate_partitions(int n, Family fam = Family::All) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto keep = [&](const Partition& p) {
        switch (fam) {
            case Family::All: return true;
            case Family::Strict: return p.is_strict();
            case Family::Odd: return p.is_odd_parts();
            case Family::StrictEvenLength: return p.is_strict() && p.length() % 2 == 0;
            case Family::StrictOddLength: return p.is_strict() && p.length() % 2 == 1;
        }
        return false;
    };
    auto rec = [&](auto&& self, int rem, int maxp) -> void {
        if (rem == 0) {
            Partition p(cur);
            if (keep(p)) out.push_back(p);
            return;
        }
        for (int p = std::min(rem, maxp); p >= 1; --p) {
            cur.push_back(p);
            self(self, rem - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    std::sort(out.begin(), out.end());
    return out;
}

inline Int z_of(const Partition& lam) {
    std::map<int, int> m;
    for (int p : lam.parts()) ++m[p];
    Int z = 1;
    for (auto [i, mi] : m) {
        for (int k = 0; k < mi; ++k) z *= i;
        z *= factorial(mi);
    }
    return z;
}

inline int n_of(const Partition& lam) {
    int s = 0;
    for (int i = 0; i < lam.length(); ++i) s += i * lam.parts()[i];
    return s;
}

// Per-cell annotation of an (ordinary or shifted) diagram; rows may be ragged
// and rows of a shifted diagram start at column i.
struct CellGrid {
    std::map<std::pair<int, int>, int> entries;  // (row, col) -> value, 0-based

    std::vector<std::vector<int>> rows() const {
        std::vector<std::vector<int>> r;
        for (const auto& [rc, v] : entries) {
            if ((int)r.size() <= rc.first) r.resize(rc.first + 1);
            r[rc.first].push_back(v);
        }
        return r;
    }
};

inline CellGrid hooks(const Partition& lam) {
    CellGrid g;
    Partition conj = lam.conjugate();
    for (int i = 0; i < lam.length(); ++i)
        for (int j = 0; j < lam.parts()[i]; ++j)
            g.entries[{i, j}] = lam.parts()[i] + conj.parts()[j] - i - j - 1;
    return g;
}

inline CellGrid contents(const Partition& lam) {
    CellGrid g;
    for (int i = 0; i < lam.length(); ++i)
        for (int j = 0; j < lam.parts()[i]; ++j)
            g.entries[{i, j}] = j - i;
    return g;
}

/// Frobenius coordinates (arm lengths | leg lengths) along the diagonal.
inline std::pair<std::vector<int>, std::vector<int>> frobenius(const Partition& lam) {
    std::vector<int> alpha, beta;
    Partition conj = lam.conjugate();
    for (int i = 0; lam.part(i) > i; ++i) {
        alpha.push_back(lam.part(i) - i - 1);
        beta.push_back(conj.part(i) - i - 1);
    }
    return {alpha, beta};
}

inline Partition from_frobenius(const std::vector<int>& alpha, const std::vector<int>& beta) {
    if (alpha.size() != beta.size()) throw std::invalid_argument("frobenius arm/leg length mismatch");
    int d = (int)alpha.size();
    int depth = d;
    for (int i = 0; i < d; ++i) depth = std::max(depth, i + 1 + beta[i]);
    std::vector<int> rows;
    for (int i = 0; i < depth; ++i) {
        int r = 0;
        if (i < d) r = i + 1 + alpha[i];          // diagonal cell plus arm
        else for (int k = 0; k < d; ++k)
            if (k + beta[k] >= i) ++r;            // columns whose leg reaches row i
        if (r > 0) rows.push_back(r);
    }
    return Partition(std::move(rows));
}

/// Double of a strict partition: Frobenius coordinates (xi | xi - 1).
inline Partition double_partition(const Partition& xi) {
    if (!xi.is_strict()) throw std::invalid_argument("double of a non-strict partition");
    std::vector<int> a, b;
    for (int p : xi.parts()) { a.push_back(p); b.push_back(p - 1); }
    return from_frobenius(a, b);
}

/// Cells of the shifted diagram: row i (0-based) spans columns i..i+xi_i-1.
inline std::vector<std::pair<int, int>> shifted_cells(const Partition& xi) {
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i < xi.length(); ++i)
        for (int j = i; j < i + xi.parts()[i]; ++j)
            cells.emplace_back(i, j);
    return cells;
}

inline CellGrid shifted_contents(const Partition& xi) {
    CellGrid g;
    for (auto [i, j] : shifted_cells(xi)) g.entries[{i, j}] = j - i;
    return g;
}

/// Shifted hook of (i,j) = hook of cell (i, j+1) in the double partition.
inline CellGrid shifted_hooks(const Partition& xi) {
    CellGrid g;
    CellGrid dh = hooks(double_partition(xi));
    for (auto [i, j] : shifted_cells(xi)) g.entries[{i, j}] = dh.entries.at({i, j + 1});
    return g;
}

inline bool dominance_leq(const Partition& mu, const Partition& lam) {
    if (mu.size() != lam.size()) return false;
    int sm = 0, sl = 0;
    for (int i = 0; i < std::max(mu.length(), lam.length()); ++i) {
        sm += mu.part(i);
        sl += lam.part(i);
        if (sm > sl) return false;
    }
    return true;
}

// Signed permutation: a permutation of {1..n} together with a sign per point.
struct SignedPerm {
    std::vector<int> perm;   // perm[i] = image of i+1, values in 1..n
    std::vector<int> signs;  // +1 / -1 per point 1..n

    int n() const { return (int)perm.size(); }

    static SignedPerm identity(int n) {
        SignedPerm g;
        for (int i = 1; i <= n; ++i) { g.perm.push_back(i); g.signs.push_back(1); }
        return g;
    }
};

/// Cycle types (rho+, rho-) split by the product of signs along each cycle.
inline std::pair<Partition, Partition> class_type(const SignedPerm& g) {
    std::vector<int> pos, neg;
    std::vector<bool> seen(g.n(), false);
    for (int i = 0; i < g.n(); ++i) {
        if (seen[i]) continue;
        int len = 0, sgn = 1, j = i;
        while (!seen[j]) {
            seen[j] = true;
            sgn *= g.signs[j];
            j = g.perm[j] - 1;
            ++len;
        }
        (sgn > 0 ? pos : neg).push_back(len);
    }
    return {Partition::sorted(std::move(pos)), Partition::sorted(std::move(neg))};
}

/// An element with k sign changes has parity k mod 2; every negative cycle
/// carries an odd number of sign changes, so k = l(rho-) mod 2.
inline bool class_is_even(const Partition& rho_minus) { return rho_minus.length() % 2 == 0; }

/// Split criterion for the conjugacy class of type (rho+, rho-) in the double cover.
inline bool is_split(const Partition& rho_plus, const Partition& rho_minus) {
    if (class_is_even(rho_minus))
        return rho_plus.is_odd_parts() && rho_minus.empty();
    return rho_plus.empty() && rho_minus.is_strict() && rho_minus.length() % 2 == 1;
}

}  // namespace spinq
