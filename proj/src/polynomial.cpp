#include "secproj/polynomial.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace secproj {

RingPtr PolynomialRing::make(std::vector<std::string> names, const Field& f) {
    if (names.empty() || names.size() > kMaxVars)
        throw InputError("ring must have between 1 and " + std::to_string(kMaxVars) + " variables");
    for (size_t i = 0; i < names.size(); ++i)
        for (size_t j = i + 1; j < names.size(); ++j)
            if (names[i] == names[j]) throw InputError("duplicate variable name " + names[i]);
    auto r = std::make_shared<PolynomialRing>();
    r->nvars = static_cast<int>(names.size());
    r->names = std::move(names);
    r->field = f;
    return r;
}

RingPtr PolynomialRing::standard(int nvars, const Field& f, const std::string& prefix) {
    std::vector<std::string> names;
    names.reserve(nvars);
    for (int i = 0; i < nvars; ++i) names.push_back(prefix + std::to_string(i));
    return make(std::move(names), f);
}

int PolynomialRing::var_index(const std::string& name) const {
    for (int i = 0; i < nvars; ++i)
        if (names[i] == name) return i;
    return -1;
}

RingPtr PolynomialRing::drop_last(int k) const {
    if (k < 0 || k >= nvars) throw InputError("drop_last: bad variable count");
    std::vector<std::string> sub(names.begin(), names.end() - k);
    return make(std::move(sub), field);
}

RingPtr PolynomialRing::append(const std::vector<std::string>& extra) const {
    std::vector<std::string> all = names;
    all.insert(all.end(), extra.begin(), extra.end());
    return make(std::move(all), field);
}

Polynomial Polynomial::constant(const RingPtr& ring, const Scalar& c, MonomialOrder order) {
    Polynomial p(ring, order);
    if (!c.is_zero()) p.terms_.push_back({Monomial::one(), c});
    return p;
}

Polynomial Polynomial::variable(const RingPtr& ring, int i, MonomialOrder order) {
    if (i < 0 || i >= ring->nvars) throw Error("variable index out of range");
    Polynomial p(ring, order);
    p.terms_.push_back({Monomial::variable(i), Scalar::one(ring->field)});
    return p;
}

Polynomial Polynomial::from_terms(const RingPtr& ring, std::vector<Term> terms, MonomialOrder order) {
    Polynomial p(ring, order);
    p.terms_ = std::move(terms);
    p.sort_terms();
    return p;
}

void Polynomial::sort_terms() {
    const int n = ring_->nvars;
    std::sort(terms_.begin(), terms_.end(), [&](const Term& a, const Term& b) {
        return order_.compare(a.mono, b.mono, n) > 0;
    });
    // Merge duplicates, drop zeros.
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().mono == t.mono)
            out.back().coef += t.coef;
        else
            out.push_back(std::move(t));
        if (!out.empty() && out.back().coef.is_zero()) out.pop_back();
    }
    terms_ = std::move(out);
}

uint32_t Polynomial::total_degree() const {
    uint32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree);
    return d;
}

bool Polynomial::is_homogeneous() const {
    for (const auto& t : terms_)
        if (t.mono.degree != terms_.front().mono.degree) return false;
    return true;
}

uint32_t Polynomial::degree_in_vars(int from, int to) const {
    uint32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree_in(from, to));
    return d;
}

Polynomial Polynomial::resorted(MonomialOrder order) const {
    if (order == order_) return *this;
    Polynomial p(ring_, order);
    p.terms_ = terms_;
    const int n = ring_->nvars;
    std::sort(p.terms_.begin(), p.terms_.end(), [&](const Term& a, const Term& b) {
        return order.compare(a.mono, b.mono, n) > 0;
    });
    return p;
}

Polynomial Polynomial::operator-() const {
    Polynomial p(*this);
    for (auto& t : p.terms_) t.coef = -t.coef;
    return p;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    if (*ring_ != *o.ring_) throw Error("ring mismatch in +");
    const Polynomial& rhs = o.order_ == order_ ? o : o.resorted(order_);
    Polynomial out(ring_, order_);
    out.terms_.reserve(terms_.size() + rhs.terms_.size());
    const int n = ring_->nvars;
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < rhs.terms_.size()) {
        int c = order_.compare(terms_[i].mono, rhs.terms_[j].mono, n);
        if (c > 0) {
            out.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            out.terms_.push_back(rhs.terms_[j++]);
        } else {
            Scalar s = terms_[i].coef + rhs.terms_[j].coef;
            if (!s.is_zero()) out.terms_.push_back({terms_[i].mono, std::move(s)});
            ++i;
            ++j;
        }
    }
    for (; i < terms_.size(); ++i) out.terms_.push_back(terms_[i]);
    for (; j < rhs.terms_.size(); ++j) out.terms_.push_back(rhs.terms_[j]);
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (*ring_ != *o.ring_) throw Error("ring mismatch in *");
    std::vector<Term> acc;
    acc.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_)
        for (const auto& b : o.terms_)
            acc.push_back({a.mono * b.mono, a.coef * b.coef});
    return from_terms(ring_, std::move(acc), order_);
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (*ring_ != *o.ring_) return false;
    const Polynomial& rhs = o.order_ == order_ ? o : o.resorted(order_);
    if (terms_.size() != rhs.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].mono != rhs.terms_[i].mono || terms_[i].coef != rhs.terms_[i].coef)
            return false;
    return true;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
    if (c.is_zero()) return zero(ring_, order_);
    Polynomial p(*this);
    for (auto& t : p.terms_) t.coef *= c;
    return p;
}

Polynomial Polynomial::times_monomial(const Monomial& m) const {
    Polynomial p(*this);
    for (auto& t : p.terms_) {
        t.mono = t.mono * m;
    }
    return p;  // multiplying by a monomial preserves every order
}

void Polynomial::add_scaled(const Scalar& c, const Monomial& m, const Polynomial& g) {
    if (c.is_zero() || g.is_zero()) return;
    const int n = ring_->nvars;
    std::vector<Term> out;
    out.reserve(terms_.size() + g.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < g.terms_.size()) {
        Monomial gm = g.terms_[j].mono * m;
        int cmp = order_.compare(terms_[i].mono, gm, n);
        if (cmp > 0) {
            out.push_back(std::move(terms_[i++]));
        } else if (cmp < 0) {
            out.push_back({gm, c * g.terms_[j].coef});
            ++j;
        } else {
            Scalar s = terms_[i].coef + c * g.terms_[j].coef;
            if (!s.is_zero()) out.push_back({terms_[i].mono, std::move(s)});
            ++i;
            ++j;
        }
    }
    while (i < terms_.size()) out.push_back(std::move(terms_[i++]));
    while (j < g.terms_.size()) {
        out.push_back({g.terms_[j].mono * m, c * g.terms_[j].coef});
        ++j;
    }
    terms_ = std::move(out);
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return scaled(leading_coefficient().inverse());
}

Polynomial Polynomial::normalized() const {
    if (is_zero()) return *this;
    if (ring_->field.is_prime()) return monic();
    mpz_class den_lcm = 1, num_gcd = 0;
    for (const auto& t : terms_) {
        const mpq_class& q = t.coef.rational();
        mpz_class d = q.get_den();
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    }
    for (const auto& t : terms_) {
        mpz_class n = t.coef.rational().get_num() * (den_lcm / t.coef.rational().get_den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    }
    mpq_class factor(den_lcm, num_gcd);
    factor.canonicalize();
    if (leading_coefficient().rational() < 0) factor = -factor;
    return scaled(Scalar::from_mpq(factor, ring_->field));
}

Scalar Polynomial::evaluate(const std::vector<Scalar>& point) const {
    if (static_cast<int>(point.size()) != ring_->nvars)
        throw InputError("evaluation point has wrong dimension");
    Scalar acc = Scalar::zero(ring_->field);
    for (const auto& t : terms_) {
        Scalar v = t.coef;
        for (int i = 0; i < ring_->nvars; ++i)
            for (int k = 0; k < t.mono.e[i]; ++k) v *= point[i];
        acc += v;
    }
    return acc;
}

Polynomial Polynomial::derivative(int var) const {
    Polynomial p(ring_, order_);
    std::vector<Term> acc;
    for (const auto& t : terms_) {
        int e = t.mono.e[var];
        if (e == 0) continue;
        Term d;
        d.mono = t.mono;
        d.mono.e[var] -= 1;
        d.mono.degree -= 1;
        d.coef = t.coef * Scalar::from_int(e, ring_->field);
        acc.push_back(std::move(d));
    }
    return from_terms(ring_, std::move(acc), order_);
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& image) const {
    if (static_cast<int>(image.size()) != ring_->nvars)
        throw Error("substitute: need one image per variable");
    const RingPtr target = image.empty() ? ring_ : image.front().ring();
    // Power cache per variable.
    std::vector<std::vector<Polynomial>> pow(ring_->nvars);
    auto power = [&](int v, int e) -> const Polynomial& {
        auto& tab = pow[v];
        if (tab.empty()) tab.push_back(constant(target, Scalar::one(target->field), order_));
        while (static_cast<int>(tab.size()) <= e) tab.push_back(tab.back() * image[v]);
        return tab[e];
    };
    Polynomial acc = zero(target, order_);
    for (const auto& t : terms_) {
        Polynomial prod = constant(target, t.coef, order_);
        for (int v = 0; v < ring_->nvars; ++v)
            if (t.mono.e[v]) prod = prod * power(v, t.mono.e[v]);
        acc = acc + prod;
    }
    return acc;
}

Polynomial Polynomial::map_to(const RingPtr& target, const std::vector<int>& var_map) const {
    std::vector<Term> acc;
    acc.reserve(terms_.size());
    for (const auto& t : terms_) {
        Term nt;
        nt.coef = t.coef;
        nt.mono.degree = t.mono.degree;
        for (int v = 0; v < ring_->nvars; ++v) {
            if (!t.mono.e[v]) continue;
            int tv = var_map[v];
            if (tv < 0) throw Error("map_to: variable has no image");
            nt.mono.e[tv] = t.mono.e[v];
        }
        acc.push_back(std::move(nt));
    }
    return from_terms(target, std::move(acc), order_);
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        std::string c = t.coef.str();
        bool neg = !c.empty() && c[0] == '-';
        if (neg) c = c.substr(1);
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? "-" : "+");
        }
        bool coef_is_one = (c == "1");
        bool printed = false;
        if (!coef_is_one || t.mono.is_one()) {
            os << c;
            printed = true;
        }
        for (int v = 0; v < ring_->nvars; ++v) {
            if (!t.mono.e[v]) continue;
            if (printed) os << "*";
            os << ring_->names[v];
            if (t.mono.e[v] > 1) os << "^" << int(t.mono.e[v]);
            printed = true;
        }
    }
    return os.str();
}

ScalarMatrix ScalarMatrix::identity(int n, const Field& f) {
    ScalarMatrix m;
    m.rows = m.cols = n;
    m.a.assign(size_t(n) * n, Scalar::zero(f));
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
}

namespace {

// Gauss-Jordan; returns false if singular.
bool invert_inplace(std::vector<std::vector<Scalar>>& m, int n, const Field& f) {
    std::vector<std::vector<Scalar>> inv(n, std::vector<Scalar>(n, Scalar::zero(f)));
    for (int i = 0; i < n; ++i) inv[i][i] = Scalar::one(f);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (!m[r][col].is_zero()) { pivot = r; break; }
        if (pivot < 0) return false;
        std::swap(m[pivot], m[col]);
        std::swap(inv[pivot], inv[col]);
        Scalar d = m[col][col].inverse();
        for (int j = 0; j < n; ++j) { m[col][j] *= d; inv[col][j] *= d; }
        for (int r = 0; r < n; ++r) {
            if (r == col || m[r][col].is_zero()) continue;
            Scalar factor = m[r][col];
            for (int j = 0; j < n; ++j) {
                m[r][j] -= factor * m[col][j];
                inv[r][j] -= factor * inv[col][j];
            }
        }
    }
    m = std::move(inv);
    return true;
}

std::vector<std::vector<Scalar>> to_rows(const ScalarMatrix& m) {
    std::vector<std::vector<Scalar>> rows(m.rows);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) rows[i].push_back(m.at(i, j));
    return rows;
}

}  // namespace

bool ScalarMatrix::is_invertible() const {
    if (rows != cols) return false;
    auto m = to_rows(*this);
    return invert_inplace(m, rows, a.front().field());
}

ScalarMatrix ScalarMatrix::inverse() const {
    if (rows != cols) throw Error("inverse of non-square matrix");
    auto m = to_rows(*this);
    if (!invert_inplace(m, rows, a.front().field())) throw InputError("singular matrix");
    ScalarMatrix out;
    out.rows = out.cols = rows;
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) out.a.push_back(m[i][j]);
    return out;
}

ScalarMatrix ScalarMatrix::times(const ScalarMatrix& o) const {
    if (cols != o.rows) throw Error("matrix dimension mismatch");
    ScalarMatrix out;
    out.rows = rows;
    out.cols = o.cols;
    const Field& f = a.front().field();
    out.a.assign(size_t(rows) * o.cols, Scalar::zero(f));
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            if (at(i, k).is_zero()) continue;
            for (int j = 0; j < o.cols; ++j) out.at(i, j) += at(i, k) * o.at(k, j);
        }
    return out;
}

}  // namespace secproj
