#pragma once

#include <cstdint>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "esnorm/errors.hpp"

namespace esnorm {

class Field;

/**
 * An element of F_{p^e} in canonical coefficient form: a length-e vector of
 * residues in [0, p), least-degree coefficient first, reduced modulo the
 * field's modulus polynomial. Two elements are equal iff their coefficient
 * lists are equal.
 *
 * Elements keep a pointer to their field; fields are interned by
 * Field::make and live for the rest of the process, so elements never
 * dangle. Mixing elements of different fields throws FieldMismatch.
 */
class FieldElement {
public:
    FieldElement(const Field& field, std::vector<std::uint32_t> coeffs);

    const Field& field() const { return *field_; }
    const std::vector<std::uint32_t>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;

    /// Base-p integer encoding sum c_i p^i. Doubles as the canonical
    /// ordering key: the "canonically smallest" element is the one with the
    /// smallest value().
    std::uint64_t value() const;

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator-() const;

    /// Multiplicative inverse; throws DivisionByZero on 0.
    FieldElement inverse() const;

    /// x^n by square-and-multiply; pow(0) = 1 for every x including 0.
    FieldElement pow(std::uint64_t n) const;

    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }
    /// Canonical order (by value()); requires the same field.
    bool operator<(const FieldElement& o) const;

    /// "5" in a prime field, "[2,1]" (c0,c1,...) in an extension.
    std::string to_string() const;

private:
    const Field* field_;
    std::vector<std::uint32_t> coeffs_;
};

/**
 * A concrete finite field F_{p^e} with the canonical modulus: the
 * lexicographically smallest monic irreducible polynomial of degree e over
 * F_p, coefficients compared low-degree-first. This makes every derived
 * value reproducible bit-for-bit across runs.
 *
 * Instances are interned: Field::make(p, e) returns a reference to a
 * process-lifetime object, and repeated calls return the same object.
 * All state is immutable after construction except the lazily computed
 * unit-group generator and discrete-log table, which are compute-once and
 * safe under concurrent first access.
 */
class Field {
public:
    /// Builds (or fetches) F_{p^e}. Throws NotPrime for composite p,
    /// TooLarge when p^e exceeds the desk-scale bound (default 2^20,
    /// override with the ESNORM_MAX_Q environment variable, read once).
    static const Field& make(std::uint64_t p, std::uint32_t e);

    /// The configured q bound.
    static std::uint64_t max_q();

    std::uint64_t p() const { return p_; }
    std::uint32_t e() const { return e_; }
    std::uint64_t q() const { return q_; }

    /// Monic modulus polynomial, length e+1, low-degree first.
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    /// Factorization of q-1 as (prime, multiplicity) pairs, ascending.
    const std::vector<std::pair<std::uint64_t, unsigned>>& unit_order_factorization() const {
        return unit_factorization_;
    }

    FieldElement zero() const;
    FieldElement one() const;

    /// Decodes a base-p value in [0, q).
    FieldElement from_value(std::uint64_t v) const;

    /// Embeds an integer as a constant: n mod p.
    FieldElement from_int(std::int64_t n) const;

    FieldElement element(std::vector<std::uint32_t> coeffs) const;

    /// The canonically smallest element of multiplicative order exactly q-1.
    /// Cached after the first call; concurrent first calls are safe.
    const FieldElement& generator() const;

    /// omega = generator()^((q-1)/r): a primitive r-th root of unity.
    /// Throws OrderNotDivisible when r does not divide q-1.
    FieldElement primitive_root_of_unity(std::uint64_t r) const;

    /// Discrete log base generator() by baby-step/giant-step.
    std::uint64_t discrete_log(const FieldElement& x) const;

    bool operator==(const Field& o) const { return p_ == o.p_ && e_ == o.e_; }
    bool operator!=(const Field& o) const { return !(*this == o); }

    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

private:
    Field(std::uint64_t p, std::uint32_t e);

    std::uint64_t p_;
    std::uint32_t e_;
    std::uint64_t q_;
    std::vector<std::uint32_t> modulus_;
    std::vector<std::pair<std::uint64_t, unsigned>> unit_factorization_;

    mutable std::once_flag generator_once_;
    mutable std::optional<FieldElement> generator_;

    // baby-step table value -> exponent, giant step g^-mb
    mutable std::once_flag bsgs_once_;
    mutable std::unordered_map<std::uint64_t, std::uint64_t> baby_steps_;
    mutable std::uint64_t baby_count_ = 0;
    mutable std::optional<FieldElement> giant_step_;
};

/// Trial-division primality test (desk scale).
bool is_prime(std::uint64_t n);

/// b^k in plain integers; throws TooLarge beyond 2^62.
std::uint64_t checked_pow(std::uint64_t b, std::uint32_t k);

/// Legendre symbol via Euler's criterion, mapped to {-1, 0, +1}.
/// p must be an odd prime; a may be negative.
int legendre(std::int64_t a, std::uint64_t p);

/// True iff nonzero x lies in the image of y -> y^d, by the exponent
/// criterion x^((q-1)/gcd(d, q-1)) = 1. Throws ZeroInput for x = 0.
bool is_dth_power(const FieldElement& x, std::uint64_t d);

/// The canonically smallest lambda with lambda^d = x, found by solving
/// d*s = log_g(x) (mod q-1) and minimizing g^s over the gcd(d, q-1)
/// solution coset. Throws NoRoot when x is not a d-th power, ZeroInput
/// for x = 0.
FieldElement dth_root(const FieldElement& x, std::uint64_t d);

}  // namespace esnorm
