#include "raagtree/integer_homology.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <stdexcept>

namespace raagtree {

std::size_t SparseIntMatrix::nonzeros() const {
    std::size_t out = 0;
    for (const auto& c : columns) out += c.size();
    return out;
}

bool SparseIntMatrix::is_zero() const {
    return std::all_of(columns.begin(), columns.end(), [](const auto& c) { return c.empty(); });
}

SparseIntMatrix SparseIntMatrix::multiply(const SparseIntMatrix& rhs) const {
    if (cols != rhs.rows) throw std::invalid_argument("dimension mismatch in sparse product");
    SparseIntMatrix out(rows, rhs.cols);
    std::vector<std::int64_t> acc(rows, 0);
    std::vector<std::uint32_t> touched;
    for (std::size_t j = 0; j < rhs.cols; ++j) {
        touched.clear();
        for (const auto& [k, x] : rhs.columns[j])
            for (const auto& [i, y] : columns[k]) {
                std::int64_t prod;
                if (__builtin_mul_overflow(x, y, &prod) || __builtin_add_overflow(acc[i], prod, &acc[i]))
                    throw std::overflow_error("sparse product overflow");
                touched.push_back(i);
            }
        std::sort(touched.begin(), touched.end());
        touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
        for (auto i : touched) {
            if (acc[i] != 0) out.columns[j].emplace_back(i, acc[i]);
            acc[i] = 0;
        }
    }
    return out;
}

namespace {

struct Overflow {};

inline bool is_unit(std::int64_t x) { return x == 1 || x == -1; }
inline bool is_unit(const BigInt& x) { return x == 1 || x == -1; }

// target - factor * source, reporting overflow for 64-bit scalars.
inline std::int64_t fused(std::int64_t target, std::int64_t factor, std::int64_t source) {
    std::int64_t prod, out;
    if (__builtin_mul_overflow(factor, source, &prod) || __builtin_sub_overflow(target, prod, &out)) throw Overflow{};
    return out;
}
inline BigInt fused(const BigInt& target, const BigInt& factor, const BigInt& source) {
    return target - factor * source;
}

template <class Scalar>
class SparseEliminator {
public:
    struct Entry {
        std::uint32_t row;
        Scalar val;
    };

    explicit SparseEliminator(const SparseIntMatrix& m)
        : cols_(m.columns.size()), row_cols_(m.rows), alive_(m.columns.size(), 1) {
        for (std::size_t c = 0; c < m.columns.size(); ++c) {
            for (const auto& [r, v] : m.columns[c]) {
                cols_[c].push_back({r, Scalar(v)});
                row_cols_[r].push_back(static_cast<std::uint32_t>(c));
            }
        }
    }

    void run() {
        using Item = std::pair<std::size_t, std::uint32_t>;
        std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
        for (std::uint32_t c = 0; c < cols_.size(); ++c) queue.emplace(cols_[c].size(), c);
        while (!queue.empty()) {
            auto [size, c] = queue.top();
            queue.pop();
            if (!alive_[c] || cols_[c].size() != size) continue;
            if (size == 0) {
                alive_[c] = 0;
                continue;
            }
            const Entry* best = nullptr;
            for (const auto& e : cols_[c])
                if (is_unit(e.val) && (!best || row_cols_[e.row].size() < row_cols_[best->row].size())) best = &e;
            if (!best) continue;  // revisited if a later pivot changes this column
            pivot(best->row, c, queue);
        }
    }

    std::size_t unit_pivots() const { return pivots_; }

    // Remaining non-zero block, densified.
    std::vector<std::vector<BigInt>> residual() const {
        std::vector<std::uint32_t> live_cols;
        std::vector<std::uint32_t> live_rows;
        for (std::uint32_t c = 0; c < cols_.size(); ++c)
            if (alive_[c] && !cols_[c].empty()) {
                live_cols.push_back(c);
                for (const auto& e : cols_[c]) live_rows.push_back(e.row);
            }
        std::sort(live_rows.begin(), live_rows.end());
        live_rows.erase(std::unique(live_rows.begin(), live_rows.end()), live_rows.end());
        std::vector<std::vector<BigInt>> dense(live_rows.size(), std::vector<BigInt>(live_cols.size()));
        for (std::size_t j = 0; j < live_cols.size(); ++j)
            for (const auto& e : cols_[live_cols[j]]) {
                auto i = std::lower_bound(live_rows.begin(), live_rows.end(), e.row) - live_rows.begin();
                dense[i][j] = BigInt(e.val);
            }
        return dense;
    }

private:
    template <class Queue>
    void pivot(std::uint32_t r, std::uint32_t c, Queue& queue) {
        const std::vector<Entry> source = cols_[c];
        const Scalar unit = std::find_if(source.begin(), source.end(), [&](const Entry& e) { return e.row == r; })->val;

        auto others = std::move(row_cols_[r]);
        std::sort(others.begin(), others.end());
        others.erase(std::unique(others.begin(), others.end()), others.end());
        for (auto c2 : others) {
            if (c2 == c || !alive_[c2]) continue;
            auto& target = cols_[c2];
            auto hit = std::lower_bound(target.begin(), target.end(), r,
                                        [](const Entry& e, std::uint32_t row) { return e.row < row; });
            if (hit == target.end() || hit->row != r) continue;
            // unit is its own inverse, so this clears row r of column c2.
            const Scalar factor = hit->val * unit;
            eliminate(c2, factor, source);
            queue.emplace(cols_[c2].size(), c2);
        }
        alive_[c] = 0;
        cols_[c].clear();
        cols_[c].shrink_to_fit();
        row_cols_[r].clear();
        ++pivots_;
    }

    void eliminate(std::uint32_t c2, const Scalar& factor, const std::vector<Entry>& source) {
        const auto& target = cols_[c2];
        std::vector<Entry> merged;
        merged.reserve(target.size() + source.size());
        auto t = target.begin();
        auto s = source.begin();
        while (t != target.end() || s != source.end()) {
            if (s == source.end() || (t != target.end() && t->row < s->row)) {
                merged.push_back(*t++);
            } else if (t == target.end() || s->row < t->row) {
                Scalar v = fused(Scalar(0), factor, s->val);
                if (v != 0) {
                    merged.push_back({s->row, v});
                    row_cols_[s->row].push_back(c2);
                }
                ++s;
            } else {
                Scalar v = fused(t->val, factor, s->val);
                if (v != 0) merged.push_back({t->row, v});
                ++t;
                ++s;
            }
        }
        cols_[c2] = std::move(merged);
    }

    std::vector<std::vector<Entry>> cols_;
    std::vector<std::vector<std::uint32_t>> row_cols_;
    std::vector<char> alive_;
    std::size_t pivots_ = 0;
};

template <class Scalar>
ReductionResult reduce_with(const SparseIntMatrix& m, bool want_torsion) {
    SparseEliminator<Scalar> elim(m);
    elim.run();
    auto rest = elim.residual();
    ReductionResult out;
    out.unit_pivots = elim.unit_pivots();
    out.residual_rows = rest.size();
    out.residual_cols = rest.empty() ? 0 : rest.front().size();
    if (want_torsion) {
        auto factors = invariant_factors(std::move(rest));
        out.rank = out.unit_pivots + factors.size();
        for (auto& f : factors)
            if (f > 1) out.torsion.push_back(std::move(f));
    } else {
        out.rank = out.unit_pivots + dense_rank(std::move(rest));
    }
    return out;
}

}  // namespace

ReductionResult reduce(const SparseIntMatrix& m, bool want_torsion) {
    try {
        return reduce_with<std::int64_t>(m, want_torsion);
    } catch (const Overflow&) {
        auto out = reduce_with<BigInt>(m, want_torsion);
        out.used_bigint = true;
        return out;
    }
}

std::vector<BigInt> invariant_factors(std::vector<std::vector<BigInt>> a) {
    const std::size_t m = a.size();
    const std::size_t n = m ? a[0].size() : 0;
    std::vector<BigInt> diag;
    for (std::size_t t = 0; t < std::min(m, n); ++t) {
        // Smallest non-zero entry of the trailing block becomes the pivot.
        auto place_min = [&]() {
            std::size_t bi = m, bj = n;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j)
                    if (a[i][j] != 0 && (bi == m || abs(a[i][j]) < abs(a[bi][bj]))) {
                        bi = i;
                        bj = j;
                    }
            if (bi == m) return false;
            std::swap(a[t], a[bi]);
            for (auto& row : a) std::swap(row[t], row[bj]);
            return true;
        };
        if (!place_min()) break;
        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (a[i][t] == 0) continue;
                BigInt q = a[i][t] / a[t][t];
                for (std::size_t j = t; j < n; ++j) a[i][j] -= q * a[t][j];
                if (a[i][t] != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (a[t][j] == 0) continue;
                BigInt q = a[t][j] / a[t][t];
                for (std::size_t i = t; i < m; ++i) a[i][j] -= q * a[i][t];
                if (a[t][j] != 0) clean = false;
            }
            if (!clean) {
                place_min();
                continue;
            }
            // Divisibility: fold an offending row into the pivot row.
            bool divides = true;
            for (std::size_t i = t + 1; i < m && divides; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        for (std::size_t jj = t; jj < n; ++jj) a[t][jj] += a[i][jj];
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        diag.push_back(abs(a[t][t]));
    }
    return diag;
}

std::size_t dense_rank(std::vector<std::vector<BigInt>> a) {
    const std::size_t m = a.size();
    const std::size_t n = m ? a[0].size() : 0;
    std::size_t rank = 0;
    BigInt prev = 1;
    for (std::size_t col = 0; col < n && rank < m; ++col) {
        std::size_t piv = rank;
        while (piv < m && a[piv][col] == 0) ++piv;
        if (piv == m) continue;
        std::swap(a[piv], a[rank]);
        for (std::size_t i = rank + 1; i < m; ++i) {
            for (std::size_t j = col + 1; j < n; ++j) a[i][j] = (a[rank][col] * a[i][j] - a[i][col] * a[rank][j]) / prev;
            a[i][col] = 0;
        }
        prev = a[rank][col];
        ++rank;
    }
    return rank;
}

}  // namespace raagtree
