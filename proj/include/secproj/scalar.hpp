#ifndef SECPROJ_SCALAR_HPP
#define SECPROJ_SCALAR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace secproj {

// Base for all errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad user input (CLI exit code 2).
struct InputError : Error {
    using Error::Error;
};

// A computation exceeded its configured budget (CLI exit code 3).
struct BudgetError : Error {
    using Error::Error;
};

bool is_odd_prime(uint64_t n);

// Coefficient field: the rationals or a prime field GF(p) with p an odd
// prime (odd so that quadratic forms can be diagonalized).
struct Field {
    enum class Kind : uint8_t { Rational, Prime };

    Kind kind = Kind::Rational;
    uint32_t p = 0;

    bool operator==(const Field&) const = default;

    static Field rationals() { return Field{Kind::Rational, 0}; }

    static Field prime(uint32_t p) {
        if (!is_odd_prime(p))
            throw InputError("field modulus must be an odd prime, got " + std::to_string(p));
        return Field{Kind::Prime, p};
    }

    bool is_rational() const { return kind == Kind::Rational; }
    bool is_prime() const { return kind == Kind::Prime; }

    std::string str() const {
        return is_rational() ? "QQ" : "GF(" + std::to_string(p) + ")";
    }

    // Parses "QQ", "GF(p)" or a bare prime.
    static Field parse(const std::string& text);
};

uint64_t mod_pow(uint64_t base, uint64_t exp, uint64_t mod);
uint64_t mod_inverse(uint64_t a, uint64_t p);

// Exact field element.  Rationals are kept in lowest terms with positive
// denominator; prime-field values live in [0, p).
class Scalar {
public:
    Scalar() : field_(Field::rationals()) {}

    static Scalar zero(const Field& f) { return Scalar(f); }
    static Scalar one(const Field& f) { return from_int(1, f); }

    static Scalar from_int(long v, const Field& f) {
        Scalar s(f);
        if (f.is_rational()) {
            s.q_ = v;
        } else {
            long r = v % static_cast<long>(f.p);
            if (r < 0) r += f.p;
            s.v_ = static_cast<uint64_t>(r);
        }
        return s;
    }

    // num/den in the field; reduces mod p for prime fields.
    static Scalar from_fraction(const mpz_class& num, const mpz_class& den, const Field& f);

    static Scalar from_mpq(const mpq_class& q, const Field& f) {
        return from_fraction(q.get_num(), q.get_den(), f);
    }

    const Field& field() const { return field_; }

    bool is_zero() const { return field_.is_rational() ? q_ == 0 : v_ == 0; }
    bool is_one() const { return field_.is_rational() ? q_ == 1 : v_ == 1; }

    Scalar operator-() const {
        Scalar r(*this);
        if (field_.is_rational())
            r.q_ = -q_;
        else if (v_ != 0)
            r.v_ = field_.p - v_;
        return r;
    }

    Scalar operator+(const Scalar& o) const {
        check(o);
        Scalar r(field_);
        if (field_.is_rational()) {
            r.q_ = q_ + o.q_;
        } else {
            uint64_t s = v_ + o.v_;
            r.v_ = s >= field_.p ? s - field_.p : s;
        }
        return r;
    }

    Scalar operator-(const Scalar& o) const { return *this + (-o); }

    Scalar operator*(const Scalar& o) const {
        check(o);
        Scalar r(field_);
        if (field_.is_rational())
            r.q_ = q_ * o.q_;
        else
            r.v_ = (v_ * o.v_) % field_.p;
        return r;
    }

    Scalar inverse() const {
        if (is_zero()) throw Error("division by zero");
        Scalar r(field_);
        if (field_.is_rational())
            r.q_ = 1 / q_;
        else
            r.v_ = mod_inverse(v_, field_.p);
        return r;
    }

    Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const {
        return field_ == o.field_ && (field_.is_rational() ? q_ == o.q_ : v_ == o.v_);
    }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // Rational payload (rational fields only).
    const mpq_class& rational() const {
        if (!field_.is_rational()) throw Error("not a rational scalar");
        return q_;
    }

    // Prime-field payload in [0, p).
    uint64_t residue() const {
        if (!field_.is_prime()) throw Error("not a prime-field scalar");
        return v_;
    }

    // Image under reduction mod p.  Requires a p-integral value.
    Scalar reduce_mod(const Field& prime_field) const;

    std::string str() const {
        return field_.is_rational() ? q_.get_str() : std::to_string(v_);
    }

private:
    explicit Scalar(const Field& f) : field_(f) {}

    void check(const Scalar& o) const {
        if (field_ != o.field_) throw Error("scalar field mismatch");
    }

    Field field_;
    uint64_t v_ = 0;
    mpq_class q_;
};

}  // namespace secproj

#endif
