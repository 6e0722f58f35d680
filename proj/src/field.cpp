#include "lrcq/field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <tuple>

#include "lrcq/error.hpp"

namespace lrcq {
namespace {

// Smallest monic irreducible polynomial of each degree m >= 2 for every prime
// power p^m <= 2^16, ordered by integer encoding and stored as that encoding
// (including the leading coefficient).  Generated once by an independent
// exhaustive search and frozen here so that element encodings never move.
struct ModulusEntry {
    uint32_t p, m;
    uint32_t enc;
};
constexpr ModulusEntry kModulusTable[] = {
    {2,2,7}, {2,3,11}, {2,4,19}, {2,5,37}, {2,6,67}, {2,7,131}, {2,8,283}, {2,9,515},
    {2,10,1033}, {2,11,2053}, {2,12,4105}, {2,13,8219}, {2,14,16417}, {2,15,32771},
    {2,16,65579}, {3,2,10}, {3,3,34}, {3,4,86}, {3,5,250}, {3,6,734}, {3,7,2198}, {3,8,6572},
    {3,9,19747}, {3,10,59068}, {5,2,27}, {5,3,131}, {5,4,627}, {5,5,3146}, {5,6,15632},
    {7,2,50}, {7,3,345}, {7,4,2409}, {7,5,16817}, {11,2,122}, {11,3,1346}, {11,4,14654},
    {13,2,171}, {13,3,2199}, {13,4,28563}, {17,2,292}, {17,3,4933}, {19,2,362}, {19,3,6861},
    {23,2,530}, {23,3,12193}, {29,2,843}, {29,3,24422}, {31,2,962}, {31,3,29794}, {37,2,1371},
    {37,3,50655}, {41,2,1684}, {43,2,1850}, {47,2,2210}, {53,2,2811}, {59,2,3482}, {61,2,3723},
    {67,2,4490}, {71,2,5042}, {73,2,5334}, {79,2,6242}, {83,2,6890}, {89,2,7924}, {97,2,9414},
    {101,2,10203}, {103,2,10610}, {107,2,11450}, {109,2,11883}, {113,2,12772}, {127,2,16130},
    {131,2,17162}, {137,2,18772}, {139,2,19322}, {149,2,22203}, {151,2,22802}, {157,2,24651},
    {163,2,26570}, {167,2,27890}, {173,2,29931}, {179,2,32042}, {181,2,32763}, {191,2,36482},
    {193,2,37254}, {197,2,38811}, {199,2,39602}, {211,2,44522}, {223,2,49730}, {227,2,51530},
    {229,2,52443}, {233,2,54292}, {239,2,57122}, {241,2,58088}, {251,2,63002},
};

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<uint64_t> prime_factors(uint64_t n) {
    std::vector<uint64_t> out;
    for (uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::vector<uint64_t> enc_to_poly(uint64_t enc, uint64_t p) {
    std::vector<uint64_t> c;
    while (enc) {
        c.push_back(enc % p);
        enc /= p;
    }
    return c;
}

void poly_trim(std::vector<uint64_t>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// a mod f in GF(p)[x]; f monic.
void poly_mod_inplace(std::vector<uint64_t>& a, const std::vector<uint64_t>& f, uint64_t p) {
    const size_t df = f.size() - 1;
    poly_trim(a);
    while (a.size() > df) {
        const uint64_t lead = a.back();
        const size_t shift = a.size() - 1 - df;
        if (lead != 0) {
            for (size_t i = 0; i < f.size(); ++i) {
                uint64_t& t = a[shift + i];
                t = (t + (p - (lead * f[i]) % p)) % p;
            }
        }
        a.pop_back();
        poly_trim(a);
    }
}

std::vector<uint64_t> poly_mulmod(const std::vector<uint64_t>& a, const std::vector<uint64_t>& b,
                                  const std::vector<uint64_t>& f, uint64_t p) {
    if (a.empty() || b.empty()) return {};
    std::vector<uint64_t> res(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            res[i + j] = (res[i + j] + a[i] * b[j]) % p;
    }
    poly_mod_inplace(res, f, p);
    return res;
}

std::vector<uint64_t> poly_powmod(std::vector<uint64_t> base, uint64_t e,
                                  const std::vector<uint64_t>& f, uint64_t p) {
    std::vector<uint64_t> r{1};
    poly_mod_inplace(base, f, p);
    while (e) {
        if (e & 1) r = poly_mulmod(r, base, f, p);
        base = poly_mulmod(base, base, f, p);
        e >>= 1;
    }
    return r;
}

std::vector<uint64_t> poly_gcd(std::vector<uint64_t> a, std::vector<uint64_t> b, uint64_t p) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        // Make b monic, then reduce a by it.
        uint64_t inv = 1, lead = b.back();
        // Fermat inverse mod p.
        uint64_t e = p - 2, base = lead;
        while (e) {
            if (e & 1) inv = (inv * base) % p;
            base = (base * base) % p;
            e >>= 1;
        }
        std::vector<uint64_t> bm(b.size());
        for (size_t i = 0; i < b.size(); ++i) bm[i] = (b[i] * inv) % p;
        poly_mod_inplace(a, bm, p);
        std::swap(a, b);
    }
    return a;
}

// Rabin irreducibility test: f (monic, degree m) is irreducible over GF(p)
// iff x^(p^m) == x (mod f) and gcd(x^(p^(m/l)) - x, f) = 1 for every prime
// l | m.  Exact for any size this project touches.
bool poly_irreducible(const std::vector<uint64_t>& f, uint64_t p) {
    const size_t mdeg = f.size() - 1;
    if (mdeg < 1 || f.back() != 1) return false;
    if (mdeg == 1) return true;  // monic degree-1 polynomials are irreducible
    auto pow_p = [&](uint32_t exp_count) {
        std::vector<uint64_t> t{0, 1};  // x
        for (uint32_t i = 0; i < exp_count; ++i) t = poly_powmod(t, p, f, p);
        return t;
    };
    std::vector<uint64_t> xq = pow_p(static_cast<uint32_t>(mdeg));
    std::vector<uint64_t> diff = xq;
    diff.resize(std::max<size_t>(diff.size(), 2), 0);
    diff[1] = (diff[1] + p - 1) % p;
    poly_trim(diff);
    if (!diff.empty()) return false;
    for (uint64_t ell : prime_factors(mdeg)) {
        std::vector<uint64_t> t = pow_p(static_cast<uint32_t>(mdeg / ell));
        t.resize(std::max<size_t>(t.size(), 2), 0);
        t[1] = (t[1] + p - 1) % p;
        poly_trim(t);
        std::vector<uint64_t> g = poly_gcd(f, t, p);
        if (g.size() != 1) return false;  // nonconstant gcd => reducible
    }
    return true;
}

using FieldKey = std::tuple<uint64_t, uint32_t, std::vector<uint64_t>>;
std::map<FieldKey, FieldPtr>& registry() {
    static std::map<FieldKey, FieldPtr> reg;
    return reg;
}
std::mutex& registry_mutex() {
    static std::mutex mu;
    return mu;
}

}  // namespace

Field::Field(uint64_t p, uint32_t m, std::vector<uint64_t> modulus)
    : p_(p), m_(m), modulus_(std::move(modulus)) {
    order_ = 1;
    for (uint32_t i = 0; i < m; ++i) order_ *= p;
}

namespace {

std::map<std::pair<uint64_t, uint32_t>, std::vector<uint64_t>>& modulus_overrides() {
    static std::map<std::pair<uint64_t, uint32_t>, std::vector<uint64_t>> overrides;
    return overrides;
}

}  // namespace

void Field::add_modulus_override(uint64_t p, uint32_t m, std::vector<uint64_t> modulus) {
    std::lock_guard<std::mutex> lock(registry_mutex());
    modulus_overrides()[{p, m}] = std::move(modulus);
}

void Field::clear_modulus_overrides() {
    std::lock_guard<std::mutex> lock(registry_mutex());
    modulus_overrides().clear();
}

FieldPtr Field::create(uint64_t p, uint32_t m) {
    if (!is_prime(p)) fail_user("NonPrimeP", "p = " + std::to_string(p) + " is not prime");
    if (m < 1) fail_user("UnsupportedOrder", "m must be >= 1");
    std::vector<uint64_t> override_mod;
    {
        std::lock_guard<std::mutex> lock(registry_mutex());
        auto it = modulus_overrides().find({p, m});
        if (it != modulus_overrides().end()) override_mod = it->second;
    }
    if (!override_mod.empty()) return create(p, m, override_mod);
    if (m == 1) {
        return create(p, m, {0, 1});  // modulus x: arithmetic is plain mod p
    }
    for (const auto& e : kModulusTable) {
        if (e.p == p && e.m == m) {
            std::vector<uint64_t> mod = enc_to_poly(e.enc, p);
            return create(p, m, mod);
        }
    }
    fail_user("UnsupportedOrder",
              "no built-in modulus for p^m = " + std::to_string(p) + "^" + std::to_string(m) +
                  "; pass an explicit irreducible modulus");
}

FieldPtr Field::create(uint64_t p, uint32_t m, const std::vector<uint64_t>& modulus) {
    if (!is_prime(p)) fail_user("NonPrimeP", "p = " + std::to_string(p) + " is not prime");
    if (m < 1) fail_user("UnsupportedOrder", "m must be >= 1");
    // Guard against overflowing the encoding space.
    long double ord = 1;
    for (uint32_t i = 0; i < m; ++i) ord *= static_cast<long double>(p);
    if (ord > 1e18L) fail_user("UnsupportedOrder", "p^m too large");
    if (modulus.size() != static_cast<size_t>(m) + 1 || modulus.back() != 1)
        fail_user("ReducibleModulus", "modulus must be monic of degree m");
    for (uint64_t c : modulus)
        if (c >= p) fail_user("ReducibleModulus", "modulus coefficient out of range");
    if (!poly_irreducible(modulus, p))
        fail_user("ReducibleModulus", "modulus is not irreducible over GF(p)");

    FieldKey key{p, m, modulus};
    std::lock_guard<std::mutex> lock(registry_mutex());
    auto it = registry().find(key);
    if (it != registry().end()) return it->second;
    FieldPtr f(new Field(p, m, modulus));
    registry().emplace(std::move(key), f);
    return f;
}

uint64_t Field::add(uint64_t a, uint64_t b) const {
    if (p_ == 2) return a ^ b;
    if (!add_table_.empty()) return add_table_[a * order_ + b];
    uint64_t r = 0, mul = 1;
    for (uint32_t i = 0; i < m_; ++i) {
        r += ((a % p_ + b % p_) % p_) * mul;
        a /= p_;
        b /= p_;
        mul *= p_;
    }
    return r;
}

uint64_t Field::neg(uint64_t a) const {
    if (p_ == 2) return a;
    uint64_t r = 0, mul = 1;
    for (uint32_t i = 0; i < m_; ++i) {
        r += ((p_ - a % p_) % p_) * mul;
        a /= p_;
        mul *= p_;
    }
    return r;
}

uint64_t Field::sub(uint64_t a, uint64_t b) const { return add(a, neg(b)); }

uint64_t Field::poly_mul(uint64_t a, uint64_t b) const {
    auto pa = enc_to_poly(a, p_), pb = enc_to_poly(b, p_);
    auto pr = poly_mulmod(pa, pb, modulus_, p_);
    uint64_t enc = 0, mul = 1;
    for (uint64_t c : pr) {
        enc += c * mul;
        mul *= p_;
    }
    return enc;
}

void Field::build_tables() const {
    if (tables_ready_) return;
    static std::mutex table_mu;
    std::lock_guard<std::mutex> lock(table_mu);
    if (tables_ready_) return;

    // Find the smallest-encoding generator by checking g^((order-1)/q) != 1
    // for every prime q | order-1.
    const uint64_t n = order_ - 1;
    const auto pf = prime_factors(n);
    uint64_t gen = 1;
    if (n > 1) {
        for (uint64_t cand = 2; cand < order_; ++cand) {
            bool ok = true;
            for (uint64_t q : pf) {
                if (pow_generic(cand, n / q) == 1) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                gen = cand;
                break;
            }
        }
    }
    generator_ = gen;

    if (order_ <= 65536) {
        exp_.assign(n, 0);
        log_.assign(order_, 0);
        uint64_t cur = 1;
        for (uint64_t i = 0; i < n; ++i) {
            exp_[i] = static_cast<uint32_t>(cur);
            log_[cur] = static_cast<uint32_t>(i);
            cur = poly_mul(cur, gen);
        }
        if (order_ <= 1024 && p_ != 2) {
            add_table_.assign(order_ * order_, 0);
            for (uint64_t a = 0; a < order_; ++a) {
                for (uint64_t b = a; b < order_; ++b) {
                    uint64_t r = 0, mul = 1, aa = a, bb = b;
                    for (uint32_t i = 0; i < m_; ++i) {
                        r += ((aa % p_ + bb % p_) % p_) * mul;
                        aa /= p_;
                        bb /= p_;
                        mul *= p_;
                    }
                    add_table_[a * order_ + b] = static_cast<uint32_t>(r);
                    add_table_[b * order_ + a] = static_cast<uint32_t>(r);
                }
            }
        }
    }
    tables_ready_ = true;
}

uint64_t Field::mul(uint64_t a, uint64_t b) const {
    if (a == 0 || b == 0) return 0;
    if (!tables_ready_) build_tables();
    if (!exp_.empty()) {
        uint64_t s = log_[a] + log_[b];
        const uint64_t n = order_ - 1;
        if (s >= n) s -= n;
        return exp_[s];
    }
    return poly_mul(a, b);
}

uint64_t Field::pow_generic(uint64_t a, uint64_t e) const {
    uint64_t r = 1;
    while (e) {
        if (e & 1) r = poly_mul(r, a);
        a = poly_mul(a, a);
        e >>= 1;
    }
    return r;
}

uint64_t Field::pow(uint64_t a, uint64_t e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    if (!tables_ready_) build_tables();
    if (!exp_.empty()) {
        const uint64_t n = order_ - 1;
        uint64_t le = (static_cast<unsigned __int128>(log_[a]) * (e % n)) % n;
        return exp_[le];
    }
    return pow_generic(a, e);
}

uint64_t Field::inv(uint64_t a) const {
    if (a == 0) fail_user("DivisionByZero", "inverse of zero");
    if (!tables_ready_) build_tables();
    if (!exp_.empty()) {
        const uint64_t n = order_ - 1;
        return exp_[(n - log_[a]) % n];
    }
    return pow_generic(a, order_ - 2);
}

uint64_t Field::div(uint64_t a, uint64_t b) const { return mul(a, inv(b)); }

uint64_t Field::frobenius(uint64_t x, uint64_t q) const {
    if (q * q != order_)
        fail_user("BadSubfieldOrder",
                  "q^2 = " + std::to_string(q * q) + " != field order " + std::to_string(order_));
    return pow(x, q);
}

uint64_t Field::element_order(uint64_t a) const {
    if (a == 0) fail_user("DivisionByZero", "order of zero element");
    const uint64_t n = order_ - 1;
    uint64_t o = n;
    for (uint64_t q : prime_factors(n)) {
        while (o % q == 0 && pow(a, o / q) == 1) o /= q;
    }
    return o;
}

uint64_t Field::primitive_element() const {
    if (!tables_ready_) build_tables();
    return generator_;
}

uint64_t Field::root_of_unity(uint64_t n, uint64_t index) const {
    if (n == 0 || (order_ - 1) % n != 0)
        fail_user("NonDivisorN", "n = " + std::to_string(n) + " does not divide order-1");
    if (index < 1) fail_user("IndexOutOfRange", "root index must be >= 1");
    uint64_t e = 0, seen = 0;
    while (seen < index) {
        ++e;
        if (std::gcd(e, n) == 1) ++seen;
    }
    return pow(primitive_element(), ((order_ - 1) / n) * e);
}

}  // namespace lrcq
