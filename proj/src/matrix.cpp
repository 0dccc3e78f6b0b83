#include "secproj/matrix.hpp"

#include <algorithm>
#include <limits>

#include "secproj/kernels.hpp"

namespace secproj {

namespace {

template <typename V>
void sort_and_merge(std::vector<std::pair<int, V>>& row) {
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    size_t w = 0;
    for (size_t i = 0; i < row.size(); ++i) {
        if (w > 0 && row[w - 1].first == row[i].first)
            row[w - 1].second += row[i].second;
        else
            row[w++] = row[i];
    }
    row.resize(w);
}

}  // namespace

long SparseMatrixQ::rank() const {
    auto rows = data_;
    for (auto& r : rows) {
        sort_and_merge(r);
        std::erase_if(r, [](const auto& e) { return e.second == 0; });
    }
    std::vector<int> col_count(cols_, 0);
    std::vector<char> active(rows.size(), 1);
    for (size_t i = 0; i < rows.size(); ++i)
        for (auto& e : rows[i]) ++col_count[e.first];

    long rank = 0;
    for (;;) {
        // Markowitz: minimise (row nnz - 1) * (col count - 1).
        long best = std::numeric_limits<long>::max();
        int pr = -1, pc = -1;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (!active[i] || rows[i].empty()) continue;
            long rn = static_cast<long>(rows[i].size()) - 1;
            for (auto& e : rows[i]) {
                long score = rn * (col_count[e.first] - 1);
                if (score < best) {
                    best = score;
                    pr = static_cast<int>(i);
                    pc = e.first;
                    if (best == 0) break;
                }
            }
            if (best == 0) break;
        }
        if (pr < 0) break;
        ++rank;
        active[pr] = 0;
        for (auto& e : rows[pr]) --col_count[e.first];
        mpq_class pivot;
        for (auto& e : rows[pr])
            if (e.first == pc) pivot = e.second;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (!active[i]) continue;
            auto it = std::lower_bound(rows[i].begin(), rows[i].end(), pc,
                                       [](const auto& e, int c) { return e.first < c; });
            if (it == rows[i].end() || it->first != pc) continue;
            mpq_class factor = -it->second / pivot;
            // row_i += factor * row_pr
            std::vector<std::pair<int, mpq_class>> merged;
            merged.reserve(rows[i].size() + rows[pr].size());
            auto a = rows[i].begin();
            auto b = rows[pr].begin();
            for (auto& e : rows[i]) --col_count[e.first];
            while (a != rows[i].end() && b != rows[pr].end()) {
                if (a->first < b->first) {
                    merged.push_back(*a++);
                } else if (a->first > b->first) {
                    merged.push_back({b->first, factor * b->second});
                    ++b;
                } else {
                    mpq_class v = a->second + factor * b->second;
                    if (v != 0) merged.push_back({a->first, std::move(v)});
                    ++a;
                    ++b;
                }
            }
            for (; a != rows[i].end(); ++a) merged.push_back(*a);
            for (; b != rows[pr].end(); ++b) merged.push_back({b->first, factor * b->second});
            rows[i] = std::move(merged);
            for (auto& e : rows[i]) ++col_count[e.first];
        }
        rows[pr].clear();
    }
    return rank;
}

long SparseMatrixFp::rank() const {
    const uint32_t p = p_;
    const auto& ops = kernels::active_ops(p);
    const size_t dense_threshold = std::max<size_t>(64, static_cast<size_t>(cols_) / 4);

    struct Row {
        std::vector<std::pair<int, uint32_t>> sparse;
        std::vector<uint32_t> dense;  // non-empty once promoted
        bool is_dense() const { return !dense.empty(); }
        size_t nnz = 0;
    };

    std::vector<Row> rows(data_.size());
    for (size_t i = 0; i < data_.size(); ++i) {
        rows[i].sparse = data_[i];
        sort_and_merge(rows[i].sparse);
        std::erase_if(rows[i].sparse, [&](const auto& e) { return e.second % p == 0; });
        for (auto& e : rows[i].sparse) e.second %= p;
        rows[i].nnz = rows[i].sparse.size();
    }

    auto promote = [&](Row& r) {
        if (r.is_dense()) return;
        r.dense.assign(cols_, 0);
        for (auto& e : r.sparse) r.dense[e.first] = e.second;
        r.sparse.clear();
        r.sparse.shrink_to_fit();
    };
    auto recount = [&](Row& r) {
        if (!r.is_dense()) {
            r.nnz = r.sparse.size();
            return;
        }
        size_t n = 0;
        for (uint32_t v : r.dense) n += v != 0;
        r.nnz = n;
    };
    auto get = [&](const Row& r, int c) -> uint32_t {
        if (r.is_dense()) return r.dense[c];
        auto it = std::lower_bound(r.sparse.begin(), r.sparse.end(), c,
                                   [](const auto& e, int col) { return e.first < col; });
        return it != r.sparse.end() && it->first == c ? it->second : 0;
    };

    std::vector<char> active(rows.size(), 1);
    long rank = 0;
    for (;;) {
        // Pivot: cheapest active row, break ties toward low column index.
        int pr = -1;
        size_t best_nnz = SIZE_MAX;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (!active[i] || rows[i].nnz == 0) continue;
            if (rows[i].nnz < best_nnz) {
                best_nnz = rows[i].nnz;
                pr = static_cast<int>(i);
            }
        }
        if (pr < 0) break;
        Row& prow = rows[pr];
        int pc = -1;
        if (prow.is_dense()) {
            for (int c = 0; c < cols_; ++c)
                if (prow.dense[c]) { pc = c; break; }
        } else {
            pc = prow.sparse.front().first;
        }
        ++rank;
        active[pr] = 0;
        uint32_t pinv = static_cast<uint32_t>(mod_inverse(get(prow, pc), p));

        for (size_t i = 0; i < rows.size(); ++i) {
            if (!active[i]) continue;
            uint32_t v = get(rows[i], pc);
            if (!v) continue;
            uint32_t factor = static_cast<uint32_t>((uint64_t(p - v) * pinv) % p);
            Row& target = rows[i];
            if (!target.is_dense() &&
                target.nnz + prow.nnz > dense_threshold)
                promote(target);
            if (target.is_dense()) {
                if (prow.is_dense()) {
                    ops.axpy(target.dense.data(), prow.dense.data(), factor, cols_, p);
                } else {
                    for (auto& e : prow.sparse)
                        target.dense[e.first] =
                            static_cast<uint32_t>((target.dense[e.first] + uint64_t(factor) * e.second) % p);
                }
                recount(target);
            } else {
                std::vector<std::pair<int, uint32_t>> merged;
                merged.reserve(target.sparse.size() + prow.nnz);
                auto add_from_pivot = [&](int c, uint32_t pv) {
                    uint32_t nv = static_cast<uint32_t>((uint64_t(factor) * pv) % p);
                    if (nv) merged.push_back({c, nv});
                };
                size_t a = 0;
                if (prow.is_dense()) {
                    // rare: pivot dense, target sparse
                    promote(target);
                    ops.axpy(target.dense.data(), prow.dense.data(), factor, cols_, p);
                    recount(target);
                    continue;
                }
                size_t b = 0;
                while (a < target.sparse.size() && b < prow.sparse.size()) {
                    if (target.sparse[a].first < prow.sparse[b].first) {
                        merged.push_back(target.sparse[a++]);
                    } else if (target.sparse[a].first > prow.sparse[b].first) {
                        add_from_pivot(prow.sparse[b].first, prow.sparse[b].second);
                        ++b;
                    } else {
                        uint32_t nv = static_cast<uint32_t>(
                            (target.sparse[a].second + uint64_t(factor) * prow.sparse[b].second) % p);
                        if (nv) merged.push_back({target.sparse[a].first, nv});
                        ++a;
                        ++b;
                    }
                }
                for (; a < target.sparse.size(); ++a) merged.push_back(target.sparse[a]);
                for (; b < prow.sparse.size(); ++b)
                    add_from_pivot(prow.sparse[b].first, prow.sparse[b].second);
                target.sparse = std::move(merged);
                target.nnz = target.sparse.size();
            }
        }
    }
    return rank;
}

}  // namespace secproj
