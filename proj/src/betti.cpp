#include "secproj/betti.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_map>

#include "secproj/matrix.hpp"

namespace secproj {

int BettiTable::max_i() const {
    int m = 0;
    for (const auto& [ij, b] : beta)
        if (b) m = std::max(m, ij.first);
    return m;
}

int BettiTable::max_row() const {
    int m = -1;
    for (const auto& [ij, b] : beta)
        if (b && ij.first >= 1) m = std::max(m, ij.second);
    return m;
}

bool BettiTable::row_zero(int j) const {
    for (const auto& [ij, b] : beta)
        if (b && ij.second == j) return false;
    return true;
}

std::string BettiTable::grid() const {
    int imax = max_i();
    int rows = std::max(max_row(), 0);
    std::ostringstream os;
    os << "      ";
    for (int i = 0; i <= imax; ++i) os << " " << i << "    ";
    os << "\n";
    for (int j = 0; j <= rows; ++j) {
        os << j << ":   ";
        for (int i = 0; i <= imax; ++i) {
            long b = get(i, j);
            std::string cell = b ? std::to_string(b) : ".";
            os << " " << cell;
            for (size_t k = cell.size(); k < 5; ++k) os << " ";
        }
        os << "\n";
    }
    return os.str();
}

namespace {

// Standard monomials of each degree (not divisible by any leading term) and
// exact normal forms of monomials, memoized.
class QuotientBasis {
public:
    QuotientBasis(const Ideal& I) : ring_(I.ring()), gb_(I.groebner_basis()) {
        for (const auto& g : gb_) lts_.push_back(g.leading_monomial());
    }

    const RingPtr& ring() const { return ring_; }

    const std::vector<Monomial>& basis(int degree) {
        while (static_cast<int>(bases_.size()) <= degree) {
            int d = static_cast<int>(bases_.size());
            std::vector<Monomial> out;
            Monomial cur;
            enumerate(cur, 0, d, out);
            // descending grevlex for determinism
            std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
                return MonomialOrder::grevlex().compare(a, b, ring_->nvars) > 0;
            });
            index_.emplace_back();
            for (size_t k = 0; k < out.size(); ++k) index_.back()[out[k]] = k;
            bases_.push_back(std::move(out));
        }
        return bases_[degree];
    }

    int index_of(const Monomial& m) {
        basis(m.degree);
        auto it = index_[m.degree].find(m);
        return it == index_[m.degree].end() ? -1 : static_cast<int>(it->second);
    }

    bool is_standard(const Monomial& m) const {
        for (const auto& lt : lts_)
            if (lt.divides(m)) return false;
        return true;
    }

    // NF(m) as a sparse vector over basis(deg m): pairs (basis index, coef).
    const std::vector<std::pair<int, Scalar>>& normal_form(const Monomial& m) {
        auto it = nf_.find(m);
        if (it != nf_.end()) return it->second;
        std::vector<std::pair<int, Scalar>> result;
        if (is_standard(m)) {
            result.push_back({index_of(m), Scalar::one(ring_->field)});
        } else {
            // m = q * LM(g); NF(m) = -sum_tail coef * NF(q * mono)
            const Polynomial* g = nullptr;
            for (size_t k = 0; k < lts_.size(); ++k)
                if (lts_[k].divides(m)) {
                    g = &gb_[k];
                    break;
                }
            Monomial q = m.quotient(g->leading_monomial());
            const Scalar lc_inv = g->leading_coefficient().inverse();
            std::unordered_map<int, Scalar> acc;
            for (size_t t = 1; t < g->terms().size(); ++t) {
                Scalar c = -(g->terms()[t].coef * lc_inv);
                const auto& sub = normal_form(g->terms()[t].mono * q);
                for (const auto& [idx, sc] : sub) {
                    auto [pos, inserted] = acc.try_emplace(idx, Scalar::zero(ring_->field));
                    pos->second += c * sc;
                }
            }
            for (auto& [idx, sc] : acc)
                if (!sc.is_zero()) result.push_back({idx, sc});
            std::sort(result.begin(), result.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
        }
        return nf_.emplace(m, std::move(result)).first->second;
    }

private:
    void enumerate(Monomial& cur, int var, int remaining, std::vector<Monomial>& out) {
        if (remaining == 0) {
            if (is_standard(cur)) out.push_back(cur);
            return;
        }
        if (var == ring_->nvars) return;
        // prune: standardness is inherited by divisors, so bail early
        if (!is_standard(cur)) return;
        for (int e = remaining; e >= 0; --e) {
            cur.e[var] = static_cast<uint16_t>(e);
            cur.degree += e;
            enumerate(cur, var + 1, remaining - e, out);
            cur.degree -= e;
            cur.e[var] = 0;
        }
    }

    RingPtr ring_;
    std::vector<Polynomial> gb_;
    std::vector<Monomial> lts_;
    // deques: references handed out stay valid while higher degrees are added
    std::deque<std::vector<Monomial>> bases_;
    std::deque<std::unordered_map<Monomial, size_t, MonomialHash>> index_;
    std::unordered_map<Monomial, std::vector<std::pair<int, Scalar>>, MonomialHash> nf_;
};

// Subsets of {0..n-1} of size k in lexicographic order, with index lookup.
struct Combinadics {
    int n, k;
    std::vector<std::vector<int>> sets;
    std::map<std::vector<int>, int> index;

    Combinadics(int n, int k) : n(n), k(k) {
        std::vector<int> cur;
        build(cur, 0);
        for (size_t i = 0; i < sets.size(); ++i) index[sets[i]] = static_cast<int>(i);
    }
    void build(std::vector<int>& cur, int start) {
        if (static_cast<int>(cur.size()) == k) {
            sets.push_back(cur);
            return;
        }
        for (int v = start; v < n; ++v) {
            cur.push_back(v);
            build(cur, v + 1);
            cur.pop_back();
        }
    }
};

struct CellKey {
    int i, d;
    bool operator<(const CellKey& o) const { return i != o.i ? i < o.i : d < o.d; }
};

// Rank of the Koszul differential d_{i,d} : L^i x (R/I)_{d-i} -> L^{i-1} x (R/I)_{d-i+1},
// with an F_p prescreen certificate and exact QQ confirmation on demand.
class KoszulRanks {
public:
    KoszulRanks(QuotientBasis& qb, uint32_t prescreen_prime)
        : qb_(qb), nvars_(qb.ring()->nvars), p_(prescreen_prime) {}

    long dim_chain(int i, int d) {
        if (i < 0 || i > nvars_ || d - i < 0) return 0;
        return static_cast<long>(binomial(nvars_, i).get_si()) *
               static_cast<long>(qb_.basis(d - i).size());
    }

    // rank over F_p (lower bound for the QQ rank)
    long rank_p(int i, int d) {
        auto it = rank_p_.find({i, d});
        if (it != rank_p_.end()) return it->second;
        long r = compute_rank(i, d, false);
        rank_p_[{i, d}] = r;
        return r;
    }

    long rank_q(int i, int d) {
        auto it = rank_q_.find({i, d});
        if (it != rank_q_.end()) return it->second;
        long r = compute_rank(i, d, true);
        rank_q_[{i, d}] = r;
        // a prescreen can never exceed the exact rank
        auto pit = rank_p_.find({i, d});
        if (pit != rank_p_.end() && pit->second > r)
            throw Error("internal: F_p rank exceeds QQ rank");
        return r;
    }

private:
    long compute_rank(int i, int d, bool exact) {
        if (i < 1 || i > nvars_ || d - i < 0) return 0;
        const auto& cols_basis = qb_.basis(d - i);
        const auto& rows_basis = qb_.basis(d - i + 1);
        if (cols_basis.empty() || rows_basis.empty()) return 0;
        Combinadics& ci = subsets(i);
        Combinadics& cim1 = subsets(i - 1);
        const long ncols = static_cast<long>(ci.sets.size()) * cols_basis.size();
        const long nrows = static_cast<long>(cim1.sets.size()) * rows_basis.size();
        const Field fp = Field::prime(p_);

        SparseMatrixQ mq(nrows, ncols);
        SparseMatrixFp mp(static_cast<int>(nrows), static_cast<int>(ncols), p_);
        long col = 0;
        for (const auto& S : ci.sets) {
            for (size_t mi = 0; mi < cols_basis.size(); ++mi, ++col) {
                int sign = 1;
                for (size_t t = 0; t < S.size(); ++t) {
                    // remove S[t]; sign alternates with position
                    std::vector<int> rest;
                    rest.reserve(S.size() - 1);
                    for (size_t u = 0; u < S.size(); ++u)
                        if (u != t) rest.push_back(S[u]);
                    int block = cim1.index.at(rest);
                    const auto& nf = qb_.normal_form(cols_basis[mi] * Monomial::variable(S[t]));
                    for (const auto& [ridx, c] : nf) {
                        long row = static_cast<long>(block) * rows_basis.size() + ridx;
                        if (exact) {
                            mpq_class v = c.rational();
                            if (sign < 0) v = -v;
                            mq.add(static_cast<int>(row), static_cast<int>(col), v);
                        } else {
                            Scalar cm = c.field().is_prime() ? c : c.reduce_mod(fp);
                            uint32_t v = static_cast<uint32_t>(cm.residue());
                            if (sign < 0 && v) v = p_ - v;
                            mp.add(static_cast<int>(row), static_cast<int>(col), v);
                        }
                    }
                    sign = -sign;
                }
            }
        }
        return exact ? mq.rank() : mp.rank();
    }

    Combinadics& subsets(int k) {
        auto it = combos_.find(k);
        if (it == combos_.end())
            it = combos_.emplace(k, Combinadics(nvars_, k)).first;
        return it->second;
    }

    QuotientBasis& qb_;
    int nvars_;
    uint32_t p_;
    std::map<CellKey, long> rank_p_, rank_q_;
    std::map<int, Combinadics> combos_;
};

// Prescreen primes: all below the SIMD kernel bound.
uint32_t choose_prescreen_prime(const Ideal& I) {
    static const uint32_t primes[] = {32003, 30011, 28411, 23003, 19997, 16007};
    for (uint32_t p : primes) {
        bool ok = true;
        for (const auto& g : I.groebner_basis()) {
            for (const auto& t : g.terms()) {
                if (t.coef.field().is_prime()) break;
                if (mpz_divisible_ui_p(t.coef.rational().get_den().get_mpz_t(), p)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) break;
        }
        if (ok) return p;
    }
    return 0;  // no usable prescreen prime; fall back to exact-only
}

}  // namespace

BettiTable graded_betti(const Ideal& I, int jmax) {
    const RingPtr& ring = I.ring();
    if (jmax == 0 || jmax < -1) throw InputError("graded_betti: window must be >= 1");

    if (I.saturated_flag().has_value() && !*I.saturated_flag())
        std::fprintf(stderr, "warning: graded_betti called on an unsaturated ideal\n");

    BettiTable table;
    table.nvars = ring->nvars;
    if (I.is_zero()) {
        table.beta[{0, 0}] = 1;
        table.jmax = jmax < 0 ? 1 : jmax;
        table.complete = true;
        return table;
    }

    HilbertData h = hilbert_series(I);
    QuotientBasis qb(I);
    const bool rational = ring->field.is_rational();
    uint32_t prescreen = 0;
    if (rational) prescreen = choose_prescreen_prime(I);
    if (!rational) prescreen = 0;

    // Prime-field inputs are handled exactly in their own field: reuse the
    // F_p machinery as the exact path.
    uint32_t exact_prime = ring->field.is_prime() ? ring->field.p : 0;
    KoszulRanks ranks(qb, rational ? (prescreen ? prescreen : 32003u) : exact_prime);

    auto cell = [&](int i, int j) -> long {
        int d = i + j;
        long chain = ranks.dim_chain(i, d);
        if (chain == 0) return 0;
        if (rational && prescreen) {
            long bp = chain - ranks.rank_p(i, d) - ranks.rank_p(i + 1, d);
            if (bp == 0) return 0;  // certified: 0 <= beta_QQ <= beta_p
            return chain - ranks.rank_q(i, d) - ranks.rank_q(i + 1, d);
        }
        if (rational) return chain - ranks.rank_q(i, d) - ranks.rank_q(i + 1, d);
        return chain - ranks.rank_p(i, d) - ranks.rank_p(i + 1, d);
    };

    const int auto_base = std::max(h.numerator_degree(), 1);
    int target = jmax >= 1 ? jmax : auto_base + 1;
    int j = 0;
    int max_nonzero_row = -1;
    for (; j <= target; ++j) {
        bool any = false;
        for (int i = 0; i <= ring->nvars; ++i) {
            long b = cell(i, j);
            if (b < 0) throw Error("internal: negative betti number");
            if (b) {
                table.beta[{i, j}] = b;
                any = true;
            }
        }
        if (any) max_nonzero_row = j;
        if (jmax < 0) target = std::max(auto_base, max_nonzero_row) + 1;
    }
    table.jmax = target;

    // Completeness: Euler identity on the window plus a trailing zero row.
    bool euler = euler_identity_holds(table, h);
    table.complete = euler && table.row_zero(table.jmax) &&
                     table.jmax >= std::max(h.numerator_degree(), table.max_row()) + 1;
    return table;
}

bool euler_identity_holds(const BettiTable& t, const HilbertData& h) {
    // For every internal degree d <= jmax: sum_i (-1)^i beta_{i, d-i} = N_d.
    for (int d = 0; d <= t.jmax; ++d) {
        mpz_class sum = 0;
        for (int i = 0; i <= t.nvars && i <= d; ++i) {
            long b = t.get(i, d - i);
            if (i % 2 == 0)
                sum += b;
            else
                sum -= b;
        }
        mpz_class expect = d <= h.numerator_degree() ? h.numerator[d] : mpz_class(0);
        if (sum != expect) return false;
    }
    return true;
}

ResolutionPredicates table_predicates(const BettiTable& t, int ambient_r, int dim_n,
                                      bool projectively_normal) {
    if (!t.complete) throw InputError("table_predicates requires a complete Betti table");
    ResolutionPredicates p;
    p.projectively_normal = projectively_normal;
    p.regularity = t.max_row() + 1;
    p.pd = t.max_i();
    p.depth = ambient_r + 1 - p.pd;
    p.acm = (p.pd == ambient_r - dim_n);
    p.max_generator_degree = 0;
    for (const auto& [ij, b] : t.beta)
        if (b && ij.first == 1) p.max_generator_degree = std::max(p.max_generator_degree, ij.second + 1);

    // N_{d,p}: beta_{i,j} = 0 for 1 <= i <= p and all rows j >= d.
    for (int d : {2, 3, 4}) {
        int pmax = 0;
        bool all = true;
        for (int i = 1; i <= t.nvars; ++i) {
            bool clean = true;
            for (const auto& [ij, b] : t.beta)
                if (b && ij.first == i && ij.second >= d) clean = false;
            if (clean && all)
                pmax = i;
            else
                all = false;
        }
        p.ndp_max[d] = all ? kNpAll : pmax;
    }
    // N_p Betti condition = N_{2,p}.
    p.np_max = p.ndp_max[2];
    return p;
}

}  // namespace secproj
