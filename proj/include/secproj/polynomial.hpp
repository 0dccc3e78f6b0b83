#ifndef SECPROJ_POLYNOMIAL_HPP
#define SECPROJ_POLYNOMIAL_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "secproj/monomial.hpp"
#include "secproj/scalar.hpp"

namespace secproj {

struct PolynomialRing;
using RingPtr = std::shared_ptr<const PolynomialRing>;

struct PolynomialRing {
    int nvars = 0;
    std::vector<std::string> names;
    Field field;

    static RingPtr make(std::vector<std::string> names, const Field& f);

    // x0..x(n-1) over f.
    static RingPtr standard(int nvars, const Field& f, const std::string& prefix = "x");

    bool operator==(const PolynomialRing& o) const {
        return nvars == o.nvars && field == o.field && names == o.names;
    }

    int var_index(const std::string& name) const;  // -1 if absent

    // Same variables, last k dropped.
    RingPtr drop_last(int k) const;
    // Same variables plus extra names appended.
    RingPtr append(const std::vector<std::string>& extra) const;
};

struct Term {
    Monomial mono;
    Scalar coef;
};

// Sparse polynomial: nonzero terms, no duplicate monomials, sorted
// descending under `order`.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(RingPtr ring, MonomialOrder order) : ring_(std::move(ring)), order_(order) {}

    static Polynomial zero(const RingPtr& ring,
                           MonomialOrder order = MonomialOrder::grevlex()) {
        return Polynomial(ring, order);
    }
    static Polynomial constant(const RingPtr& ring, const Scalar& c,
                               MonomialOrder order = MonomialOrder::grevlex());
    static Polynomial variable(const RingPtr& ring, int i,
                               MonomialOrder order = MonomialOrder::grevlex());
    // From unsorted term list; merges duplicates, drops zeros.
    static Polynomial from_terms(const RingPtr& ring, std::vector<Term> terms,
                                 MonomialOrder order = MonomialOrder::grevlex());

    const RingPtr& ring() const { return ring_; }
    const MonomialOrder& order() const { return order_; }
    const std::vector<Term>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    const Term& leading_term() const {
        if (terms_.empty()) throw Error("leading term of zero polynomial");
        return terms_.front();
    }
    const Monomial& leading_monomial() const { return leading_term().mono; }
    const Scalar& leading_coefficient() const { return leading_term().coef; }

    // Max total degree (0 for the zero polynomial).
    uint32_t total_degree() const;
    bool is_homogeneous() const;
    uint32_t degree_in_vars(int from, int to) const;  // max block degree

    Polynomial resorted(MonomialOrder order) const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial scaled(const Scalar& c) const;
    Polynomial times_monomial(const Monomial& m) const;

    // *this += c * m * g  (the division-step workhorse).
    void add_scaled(const Scalar& c, const Monomial& m, const Polynomial& g);

    // Leading coefficient 1.
    Polynomial monic() const;
    // Over QQ: integer coefficients with content 1 and positive leading
    // coefficient; identity over prime fields (made monic instead).
    Polynomial normalized() const;

    Scalar evaluate(const std::vector<Scalar>& point) const;
    Polynomial derivative(int var) const;

    // Substitute variable i by image[i] for every variable simultaneously.
    Polynomial substitute(const std::vector<Polynomial>& image) const;

    // Re-home into `target`: variable i of this ring becomes variable
    // var_map[i] of the target ring.  Coefficients must fit the target field.
    Polynomial map_to(const RingPtr& target, const std::vector<int>& var_map) const;

    std::string str() const;

private:
    void sort_terms();

    RingPtr ring_;
    MonomialOrder order_ = MonomialOrder::grevlex();
    std::vector<Term> terms_;
};

// Scalar matrices (row-major, dense) used for coordinate changes.
struct ScalarMatrix {
    int rows = 0, cols = 0;
    std::vector<Scalar> a;

    static ScalarMatrix identity(int n, const Field& f);
    Scalar& at(int i, int j) { return a[size_t(i) * cols + j]; }
    const Scalar& at(int i, int j) const { return a[size_t(i) * cols + j]; }

    bool is_invertible() const;          // square only
    ScalarMatrix inverse() const;        // throws if singular
    ScalarMatrix times(const ScalarMatrix& o) const;
};

}  // namespace secproj

#endif
