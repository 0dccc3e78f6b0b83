#include "secproj/scalar.hpp"

namespace secproj {

uint64_t mod_pow(uint64_t base, uint64_t exp, uint64_t mod) {
    uint64_t result = 1 % mod;
    base %= mod;
    while (exp) {
        if (exp & 1) result = (__uint128_t(result) * base) % mod;
        base = (__uint128_t(base) * base) % mod;
        exp >>= 1;
    }
    return result;
}

namespace {

bool miller_rabin(uint64_t n, uint64_t a) {
    if (n % a == 0) return n == a;
    uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) { d >>= 1; ++r; }
    uint64_t x = mod_pow(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < r; ++i) {
        x = (__uint128_t(x) * x) % n;
        if (x == n - 1) return true;
    }
    return false;
}

}  // namespace

bool is_odd_prime(uint64_t n) {
    if (n < 3 || (n & 1) == 0) return false;
    // Deterministic for n < 3.2e18 with these bases.
    for (uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == a) return true;
        if (!miller_rabin(n, a)) return false;
    }
    return true;
}

uint64_t mod_inverse(uint64_t a, uint64_t p) {
    return mod_pow(a % p, p - 2, p);
}

Field Field::parse(const std::string& text) {
    if (text == "QQ" || text == "qq" || text == "Q") return rationals();
    std::string body = text;
    if (text.size() > 3 && (text.rfind("GF(", 0) == 0 || text.rfind("gf(", 0) == 0) && text.back() == ')')
        body = text.substr(3, text.size() - 4);
    try {
        size_t pos = 0;
        unsigned long p = std::stoul(body, &pos);
        if (pos != body.size()) throw InputError("bad field spec: " + text);
        return prime(static_cast<uint32_t>(p));
    } catch (const std::invalid_argument&) {
        throw InputError("bad field spec: " + text);
    } catch (const std::out_of_range&) {
        throw InputError("bad field spec: " + text);
    }
}

Scalar Scalar::from_fraction(const mpz_class& num, const mpz_class& den, const Field& f) {
    if (den == 0) throw InputError("zero denominator");
    if (f.is_rational()) {
        Scalar s(f);
        s.q_ = mpq_class(num, den);
        s.q_.canonicalize();
        return s;
    }
    mpz_class p(static_cast<unsigned long>(f.p));
    mpz_class dm = den % p;
    if (dm == 0) throw InputError("coefficient denominator not invertible in " + f.str());
    mpz_class nm = num % p;
    if (nm < 0) nm += p;
    if (dm < 0) dm += p;
    Scalar s(f);
    uint64_t n64 = nm.get_ui();
    uint64_t d64 = dm.get_ui();
    s.v_ = (n64 * mod_inverse(d64, f.p)) % f.p;
    return s;
}

Scalar Scalar::reduce_mod(const Field& prime_field) const {
    if (!prime_field.is_prime()) throw Error("reduce_mod target must be a prime field");
    if (field_.is_prime()) {
        if (field_ != prime_field) throw Error("cannot move between prime fields");
        return *this;
    }
    return from_fraction(q_.get_num(), q_.get_den(), prime_field);
}

}  // namespace secproj
