#include "esnorm/field.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <memory>
#include <numeric>
#include <sstream>

namespace esnorm {

namespace {

std::uint64_t pow_mod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
    std::uint64_t result = 1 % mod;
    base %= mod;
    while (exp) {
        if (exp & 1) result = result * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return result;
}

// a^-1 mod m for gcd(a, m) = 1; inv_mod(_, 1) = 0.
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m) {
    if (m == 1) return 0;
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(m), new_r = static_cast<std::int64_t>(a % m);
    while (new_r != 0) {
        std::int64_t quot = r / new_r;
        std::swap(t -= quot * new_t, new_t);
        std::swap(r -= quot * new_r, new_r);
    }
    if (t < 0) t += static_cast<std::int64_t>(m);
    return static_cast<std::uint64_t>(t);
}

// --- dense polynomials over F_p, low-degree-first coefficient vectors ---

using Poly = std::vector<std::uint64_t>;

void poly_trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& modulus, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    }
    const std::size_t deg = modulus.size() - 1;
    while (prod.size() > deg) {
        std::uint64_t lead = prod.back();
        if (lead != 0) {
            std::size_t shift = prod.size() - 1 - deg;
            for (std::size_t k = 0; k < modulus.size(); ++k) {
                std::uint64_t sub = lead * modulus[k] % p;
                prod[shift + k] = (prod[shift + k] + p - sub) % p;
            }
        }
        prod.pop_back();
        poly_trim(prod);
        if (prod.empty()) break;
    }
    return prod;
}

Poly poly_pow_mod(Poly base, std::uint64_t exp, const Poly& modulus, std::uint64_t p) {
    Poly result{1};
    while (exp) {
        if (exp & 1) result = poly_mul_mod(result, base, modulus, p);
        base = poly_mul_mod(base, base, modulus, p);
        exp >>= 1;
    }
    return result;
}

Poly poly_mod(Poly a, const Poly& b, std::uint64_t p) {
    poly_trim(a);
    std::uint64_t lead_inv = pow_mod_u64(b.back(), p - 2, p);
    while (a.size() >= b.size() && !a.empty()) {
        std::uint64_t c = a.back() * lead_inv % p;
        std::size_t shift = a.size() - b.size();
        for (std::size_t k = 0; k < b.size(); ++k) {
            std::uint64_t sub = c * b[k] % p;
            a[shift + k] = (a[shift + k] + p - sub) % p;
        }
        poly_trim(a);
    }
    return a;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Rabin's test: monic f of degree n is irreducible over F_p iff
// x^(p^n) = x (mod f) and gcd(x^(p^(n/s)) - x, f) = 1 for every prime s | n.
bool is_irreducible(const Poly& f, std::uint64_t p) {
    const std::size_t n = f.size() - 1;
    if (n == 0) return false;
    if (n == 1) return true;
    const Poly x{0, 1};

    std::vector<std::size_t> prime_divs;
    std::size_t rem = n;
    for (std::size_t s = 2; s * s <= rem; ++s) {
        if (rem % s == 0) {
            prime_divs.push_back(s);
            while (rem % s == 0) rem /= s;
        }
    }
    if (rem > 1) prime_divs.push_back(rem);

    auto x_frobenius = [&](std::size_t k) {
        std::uint64_t pk = 1;
        for (std::size_t i = 0; i < k; ++i) pk *= p;
        return poly_pow_mod(x, pk, f, p);
    };

    for (std::size_t s : prime_divs) {
        Poly h = x_frobenius(n / s);
        // h - x
        if (h.size() < 2) h.resize(2, 0);
        h[1] = (h[1] + p - 1) % p;
        poly_trim(h);
        Poly g = poly_gcd(f, h, p);
        if (g.size() != 1) return false;
    }
    Poly top = x_frobenius(n);
    return top == x;
}

// Lexicographically smallest monic irreducible of degree e, coefficients
// compared low-degree-first (c0 is most significant in the scan).
std::vector<std::uint32_t> canonical_modulus(std::uint64_t p, std::uint32_t e) {
    if (e == 1) return {0, 1};  // x itself
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < e; ++i) count *= p;
    std::uint64_t stride = count / p;  // candidates with c0 = 0 are divisible by x
    for (std::uint64_t k = stride; k < count; ++k) {
        Poly f(e + 1, 0);
        std::uint64_t rest = k;
        for (std::uint32_t idx = 0; idx < e; ++idx) {
            std::uint64_t weight = stride;
            for (std::uint32_t j = 0; j < idx; ++j) weight /= p;
            f[idx] = rest / weight;
            rest %= weight;
        }
        f[e] = 1;
        if (is_irreducible(f, p)) {
            std::vector<std::uint32_t> out(f.size());
            for (std::size_t i = 0; i < f.size(); ++i) out[i] = static_cast<std::uint32_t>(f[i]);
            return out;
        }
    }
    throw Error("no irreducible polynomial found (unreachable for prime p)");
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            unsigned mult = 0;
            while (n % d == 0) {
                n /= d;
                ++mult;
            }
            out.emplace_back(d, mult);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::uint64_t checked_pow(std::uint64_t b, std::uint32_t k) {
    constexpr std::uint64_t bound = std::uint64_t{1} << 62;
    std::uint64_t result = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
        if (b != 0 && result > bound / b) throw TooLarge("power exceeds the supported range");
        result *= b;
    }
    return result;
}

int legendre(std::int64_t a, std::uint64_t p) {
    if (p < 3 || !is_prime(p)) throw NotPrime("legendre: p must be an odd prime");
    std::int64_t sp = static_cast<std::int64_t>(p);
    std::uint64_t r = static_cast<std::uint64_t>((a % sp + sp) % sp);
    if (r == 0) return 0;
    return pow_mod_u64(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

// --- FieldElement ---

FieldElement::FieldElement(const Field& field, std::vector<std::uint32_t> coeffs)
    : field_(&field), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != field.e()) throw Error("coefficient list length must equal e");
    for (auto c : coeffs_)
        if (c >= field.p()) throw Error("coefficient out of range [0, p)");
}

bool FieldElement::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](std::uint32_t c) { return c == 0; });
}

bool FieldElement::is_one() const {
    if (coeffs_[0] != 1) return false;
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](std::uint32_t c) { return c == 0; });
}

std::uint64_t FieldElement::value() const {
    std::uint64_t v = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) v = v * field_->p() + coeffs_[i];
    return v;
}

namespace {
void check_same_field(const FieldElement& a, const FieldElement& b) {
    if (a.field() != b.field()) throw FieldMismatch("operands belong to different fields");
}
}  // namespace

FieldElement FieldElement::operator+(const FieldElement& o) const {
    check_same_field(*this, o);
    std::vector<std::uint32_t> out(coeffs_.size());
    const std::uint64_t p = field_->p();
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = static_cast<std::uint32_t>((static_cast<std::uint64_t>(coeffs_[i]) + o.coeffs_[i]) % p);
    return FieldElement(*field_, std::move(out));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    check_same_field(*this, o);
    std::vector<std::uint32_t> out(coeffs_.size());
    const std::uint64_t p = field_->p();
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = static_cast<std::uint32_t>((static_cast<std::uint64_t>(coeffs_[i]) + p - o.coeffs_[i]) % p);
    return FieldElement(*field_, std::move(out));
}

FieldElement FieldElement::operator-() const {
    std::vector<std::uint32_t> out(coeffs_.size());
    const std::uint64_t p = field_->p();
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = static_cast<std::uint32_t>((p - coeffs_[i]) % p);
    return FieldElement(*field_, std::move(out));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    check_same_field(*this, o);
    const std::uint64_t p = field_->p();
    const std::size_t e = coeffs_.size();
    if (e == 1) {
        std::uint64_t v = static_cast<std::uint64_t>(coeffs_[0]) * o.coeffs_[0] % p;
        return FieldElement(*field_, {static_cast<std::uint32_t>(v)});
    }
    std::vector<std::uint64_t> prod(2 * e - 1, 0);
    for (std::size_t i = 0; i < e; ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < e; ++j)
            prod[i + j] = (prod[i + j] + static_cast<std::uint64_t>(coeffs_[i]) * o.coeffs_[j]) % p;
    }
    const auto& mod = field_->modulus();  // monic, degree e
    for (std::size_t deg = 2 * e - 2; deg >= e; --deg) {
        std::uint64_t lead = prod[deg];
        if (lead == 0) continue;
        std::size_t shift = deg - e;
        for (std::size_t k = 0; k <= e; ++k) {
            std::uint64_t sub = lead * mod[k] % p;
            prod[shift + k] = (prod[shift + k] + p - sub) % p;
        }
    }
    std::vector<std::uint32_t> out(e);
    for (std::size_t i = 0; i < e; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
    return FieldElement(*field_, std::move(out));
}

FieldElement FieldElement::pow(std::uint64_t n) const {
    FieldElement result = field_->one();
    FieldElement base = *this;
    while (n) {
        if (n & 1) result = result * base;
        base = base * base;
        n >>= 1;
    }
    return result;
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    return pow(field_->q() - 2);
}

bool FieldElement::operator==(const FieldElement& o) const {
    return field_ == o.field_ && coeffs_ == o.coeffs_;
}

bool FieldElement::operator<(const FieldElement& o) const {
    check_same_field(*this, o);
    return value() < o.value();
}

std::string FieldElement::to_string() const {
    if (coeffs_.size() == 1) return std::to_string(coeffs_[0]);
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) out << ',';
        out << coeffs_[i];
    }
    out << ']';
    return out.str();
}

// --- Field ---

std::uint64_t Field::max_q() {
    static const std::uint64_t bound = [] {
        const std::uint64_t hard_cap = std::uint64_t{1} << 31;  // keeps q-1 products in uint64
        const char* env = std::getenv("ESNORM_MAX_Q");
        if (env != nullptr) {
            char* end = nullptr;
            std::uint64_t v = std::strtoull(env, &end, 10);
            if (end != env && v >= 2) return std::min(v, hard_cap);
        }
        return std::uint64_t{1} << 20;
    }();
    return bound;
}

Field::Field(std::uint64_t p, std::uint32_t e) : p_(p), e_(e) {
    q_ = 1;
    for (std::uint32_t i = 0; i < e; ++i) q_ *= p;
    modulus_ = canonical_modulus(p, e);
    unit_factorization_ = factorize(q_ - 1);
}

const Field& Field::make(std::uint64_t p, std::uint32_t e) {
    if (!is_prime(p)) throw NotPrime("p = " + std::to_string(p) + " is not prime");
    if (e < 1) throw Error("extension degree e must be at least 1");
    // overflow-safe p^e bound check
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
        if (q > max_q() / p) throw TooLarge("q = p^e exceeds the configured bound " + std::to_string(max_q()));
        q *= p;
    }
    if (q > max_q()) throw TooLarge("q = " + std::to_string(q) + " exceeds the configured bound");

    static std::mutex registry_mutex;
    static std::map<std::pair<std::uint64_t, std::uint32_t>, std::unique_ptr<Field>> registry;
    std::lock_guard<std::mutex> lock(registry_mutex);
    auto& slot = registry[{p, e}];
    if (!slot) slot.reset(new Field(p, e));
    return *slot;
}

FieldElement Field::zero() const { return FieldElement(*this, std::vector<std::uint32_t>(e_, 0)); }

FieldElement Field::one() const { return from_value(1 % q_); }

FieldElement Field::from_value(std::uint64_t v) const {
    if (v >= q_) throw Error("value out of range [0, q)");
    std::vector<std::uint32_t> coeffs(e_);
    for (std::uint32_t i = 0; i < e_; ++i) {
        coeffs[i] = static_cast<std::uint32_t>(v % p_);
        v /= p_;
    }
    return FieldElement(*this, std::move(coeffs));
}

FieldElement Field::from_int(std::int64_t n) const {
    std::int64_t sp = static_cast<std::int64_t>(p_);
    std::uint64_t r = static_cast<std::uint64_t>((n % sp + sp) % sp);
    std::vector<std::uint32_t> coeffs(e_, 0);
    coeffs[0] = static_cast<std::uint32_t>(r);
    return FieldElement(*this, std::move(coeffs));
}

FieldElement Field::element(std::vector<std::uint32_t> coeffs) const {
    return FieldElement(*this, std::move(coeffs));
}

const FieldElement& Field::generator() const {
    std::call_once(generator_once_, [this] {
        const std::uint64_t n = q_ - 1;
        for (std::uint64_t v = 1; v < q_; ++v) {
            FieldElement cand = from_value(v);
            bool full_order = true;
            for (const auto& [s, mult] : unit_factorization_) {
                (void)mult;
                if (cand.pow(n / s).is_one()) {
                    full_order = false;
                    break;
                }
            }
            if (full_order) {
                generator_.emplace(std::move(cand));
                return;
            }
        }
    });
    if (!generator_) throw Error("no generator found (unreachable: F_q* is cyclic)");
    return *generator_;
}

FieldElement Field::primitive_root_of_unity(std::uint64_t r) const {
    if (r == 0 || (q_ - 1) % r != 0) {
        throw OrderNotDivisible("r = " + std::to_string(r) + " does not divide q-1 = " + std::to_string(q_ - 1));
    }
    return generator().pow((q_ - 1) / r);
}

std::uint64_t Field::discrete_log(const FieldElement& x) const {
    if (x.field() != *this) throw FieldMismatch("element belongs to a different field");
    if (x.is_zero()) throw ZeroInput("discrete log of zero");
    const std::uint64_t n = q_ - 1;
    if (n == 1) return 0;

    std::call_once(bsgs_once_, [this, n] {
        baby_count_ = static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<double>(n))));
        const FieldElement& g = generator();
        FieldElement cur = one();
        baby_steps_.reserve(baby_count_);
        for (std::uint64_t j = 0; j < baby_count_; ++j) {
            baby_steps_.emplace(cur.value(), j);
            cur = cur * g;
        }
        giant_step_.emplace(g.pow(n - baby_count_ % n));  // g^(-baby_count_)
    });

    FieldElement y = x;
    for (std::uint64_t i = 0; i * baby_count_ <= n + baby_count_; ++i) {
        auto it = baby_steps_.find(y.value());
        if (it != baby_steps_.end()) return (i * baby_count_ + it->second) % n;
        y = y * *giant_step_;
    }
    throw Error("discrete log not found (corrupt unit-group data)");
}

bool is_dth_power(const FieldElement& x, std::uint64_t d) {
    if (d == 0) throw Error("d must be positive");
    if (x.is_zero()) throw ZeroInput("is_dth_power: x must be nonzero");
    const std::uint64_t n = x.field().q() - 1;
    const std::uint64_t g = std::gcd(d, n);
    return x.pow(n / g).is_one();
}

FieldElement dth_root(const FieldElement& x, std::uint64_t d) {
    if (!is_dth_power(x, d))
        throw NoRoot("element " + x.to_string() + " has no " + std::to_string(d) + "-th root");
    const Field& F = x.field();
    if (x.is_one()) return F.one();  // 1 is the canonical smallest root of unity

    const std::uint64_t n = F.q() - 1;
    const std::uint64_t t = F.discrete_log(x);
    const std::uint64_t g0 = std::gcd(d, n);
    // solve d*s = t (mod n); g0 | t since x passed the power test
    const std::uint64_t n1 = n / g0;
    const std::uint64_t d1 = (d / g0) % n1;
    const std::uint64_t s0 = (t / g0) % n1 * inv_mod(d1, n1) % n1;
    const FieldElement& g = F.generator();

    FieldElement best = g.pow(s0 % n);
    for (std::uint64_t k = 1; k < g0; ++k) {
        FieldElement cand = g.pow((s0 + k * n1) % n);
        if (cand < best) best = cand;
    }
    return best;
}

}  // namespace esnorm
