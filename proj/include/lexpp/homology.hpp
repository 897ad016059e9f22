#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lexpp/field.hpp"
#include "lexpp/ideal.hpp"

namespace lexpp {

/// An abstract simplicial complex on a subset of the variable indices.
/// Faces are sorted vertex lists; the set must be downward closed.  The
/// void complex (no faces at all) is distinct from the complex whose
/// only face is the empty one.
class SimplicialComplexDesc {
public:
    SimplicialComplexDesc(std::vector<int> vertices, std::set<std::vector<int>> faces)
        : vertices_(std::move(vertices)), faces_(std::move(faces)) {
        std::sort(vertices_.begin(), vertices_.end());
        for (const auto& face : faces_) {
            if (!std::is_sorted(face.begin(), face.end()) ||
                std::adjacent_find(face.begin(), face.end()) != face.end())
                throw PreconditionError("face vertex lists must be sorted and duplicate-free");
            for (int v : face)
                if (!std::binary_search(vertices_.begin(), vertices_.end(), v))
                    throw PreconditionError("face uses a vertex outside the vertex set");
            for (std::size_t skip = 0; skip < face.size(); ++skip) {
                std::vector<int> sub;
                for (std::size_t i = 0; i < face.size(); ++i)
                    if (i != skip) sub.push_back(face[i]);
                if (!faces_.count(sub))
                    throw PreconditionError("face set is not downward closed");
            }
        }
    }

    /// Downward closure of the given facets (plus the empty face when
    /// any facet is present).
    static SimplicialComplexDesc from_facets(std::vector<int> vertices,
                                             const std::vector<std::vector<int>>& facets) {
        std::set<std::vector<int>> faces;
        for (const auto& facet : facets) {
            std::vector<int> f = facet;
            std::sort(f.begin(), f.end());
            const std::size_t k = f.size();
            for (std::uint64_t mask = 0; mask < (1ull << k); ++mask) {
                std::vector<int> sub;
                for (std::size_t i = 0; i < k; ++i)
                    if (mask & (1ull << i)) sub.push_back(f[i]);
                faces.insert(std::move(sub));
            }
        }
        return SimplicialComplexDesc(std::move(vertices), std::move(faces));
    }

    bool is_void() const { return faces_.empty(); }

    /// Dimension of the complex; -1 for {empty face}, -2 for void.
    int dimension() const {
        int dim = -2;
        for (const auto& f : faces_) dim = std::max(dim, static_cast<int>(f.size()) - 1);
        return dim;
    }

    const std::set<std::vector<int>>& faces() const { return faces_; }
    const std::vector<int>& vertices() const { return vertices_; }

    friend bool operator==(const SimplicialComplexDesc&, const SimplicialComplexDesc&) = default;

private:
    std::vector<int> vertices_;
    std::set<std::vector<int>> faces_;
};

namespace detail {

/// Rank of an integer matrix over the rationals, by fraction-free
/// (Bareiss) elimination.  Entries stay exact; intermediate values are
/// minors, well within __int128 at the sizes used here.
inline long long rank_rational(std::vector<std::vector<long long>> M) {
    const std::size_t rows = M.size();
    if (rows == 0) return 0;
    const std::size_t cols = M[0].size();
    long long prev = 1;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && M[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(M[rank], M[pivot]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                const __int128 v = static_cast<__int128>(M[rank][col]) * M[i][j] -
                                   static_cast<__int128>(M[i][col]) * M[rank][j];
                const __int128 q = v / prev;
                if (q > INT64_MAX || q < INT64_MIN)
                    throw Error("rank_rational: entry growth exceeded 64 bits");
                M[i][j] = static_cast<long long>(q);
            }
            M[i][col] = 0;
        }
        prev = M[rank][col];
        ++rank;
    }
    return static_cast<long long>(rank);
}

/// Rank over GF(p) by modular Gaussian elimination.
inline long long rank_mod_p(std::vector<std::vector<long long>> M, long long p) {
    const std::size_t rows = M.size();
    if (rows == 0) return 0;
    const std::size_t cols = M[0].size();
    for (auto& row : M)
        for (auto& v : row) v = ((v % p) + p) % p;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && M[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(M[rank], M[pivot]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            if (M[i][col] == 0) continue;
            // Row_i <- pivot_lead * Row_i - lead_i * Row_pivot (mod p).
            const long long lead = M[i][col];
            const long long plead = M[rank][col];
            for (std::size_t j = col; j < cols; ++j) {
                long long v = (plead % p) * (M[i][j] % p) % p - (lead % p) * (M[rank][j] % p) % p;
                M[i][j] = ((v % p) + p) % p;
            }
        }
        ++rank;
    }
    return static_cast<long long>(rank);
}

inline long long matrix_rank(const std::vector<std::vector<long long>>& M,
                             const FieldSpec& field) {
    return field.is_rational() ? rank_rational(M) : rank_mod_p(M, field.characteristic());
}

}  // namespace detail

/// Reduced homology dimensions of C over the given field, indexed so
/// that entry 0 is dim of the reduced homology in degree -1, entry k+1
/// in degree k.  Exact arithmetic throughout; the void complex yields
/// an empty vector.
inline std::vector<long long> homology_ranks(const SimplicialComplexDesc& C,
                                             const FieldSpec& field) {
    if (C.is_void()) return {};
    const int dim = C.dimension();
    // Faces grouped by dimension, with an index per face.
    std::vector<std::map<std::vector<int>, int>> levels(static_cast<std::size_t>(dim) + 2);
    for (const auto& f : C.faces()) {
        auto& level = levels[f.size()];
        const int idx = static_cast<int>(level.size());
        level.emplace(f, idx);
    }
    // boundary_rank[k] = rank of the boundary map from dimension k to k-1,
    // stored at offset k+1; the map out of degree -1 is zero.
    std::vector<long long> boundary_rank(static_cast<std::size_t>(dim) + 3, 0);
    for (int k = 0; k <= dim; ++k) {
        const auto& from = levels[static_cast<std::size_t>(k) + 1];
        const auto& to = levels[static_cast<std::size_t>(k)];
        if (from.empty() || to.empty()) continue;
        std::vector<std::vector<long long>> M(to.size(),
                                              std::vector<long long>(from.size(), 0));
        for (const auto& [face, col] : from) {
            for (std::size_t skip = 0; skip < face.size(); ++skip) {
                std::vector<int> sub;
                for (std::size_t i = 0; i < face.size(); ++i)
                    if (i != skip) sub.push_back(face[i]);
                const int row = to.at(sub);
                M[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] =
                    (skip % 2 == 0) ? 1 : -1;
            }
        }
        boundary_rank[static_cast<std::size_t>(k) + 1] = detail::matrix_rank(M, field);
    }
    std::vector<long long> h(static_cast<std::size_t>(dim) + 2, 0);
    for (int k = -1; k <= dim; ++k) {
        const long long chains =
            static_cast<long long>(levels[static_cast<std::size_t>(k) + 1].size());
        h[static_cast<std::size_t>(k) + 1] = chains -
                                             boundary_rank[static_cast<std::size_t>(k) + 1] -
                                             boundary_rank[static_cast<std::size_t>(k) + 2];
    }
    return h;
}

/// The upper Koszul complex of I at the multidegree of m: squarefree
/// subsets S of the support with x^m / x^S in I.  Downward closed by
/// construction; void exactly when m itself is outside I.
inline SimplicialComplexDesc upper_koszul(const MonomialIdeal& I, const Monomial& m) {
    std::vector<int> support;
    for (int v = 0; v < m.var_count(); ++v)
        if (m.exponent(v) > 0) support.push_back(v);
    std::set<std::vector<int>> faces;
    const std::size_t k = support.size();
    for (std::uint64_t mask = 0; mask < (1ull << k); ++mask) {
        std::vector<int> e = m.exponents();
        std::vector<int> sub;
        for (std::size_t i = 0; i < k; ++i) {
            if (mask & (1ull << i)) {
                sub.push_back(support[i]);
                --e[static_cast<std::size_t>(support[i])];
            }
        }
        if (I.contains(Monomial(std::move(e)))) faces.insert(std::move(sub));
    }
    return SimplicialComplexDesc(std::move(support), std::move(faces));
}

}  // namespace lexpp
