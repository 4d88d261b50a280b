#include "esnorm/det_theory.hpp"

namespace esnorm {

CaseParams::CaseParams(const Field& field_, std::uint64_t r_, std::uint32_t m_)
    : field(&field_), r(r_), m(m_) {
    if (!is_prime(r)) throw NotPrime("r = " + std::to_string(r) + " is not prime");
    if ((field->q() - 1) % r != 0)
        throw OrderNotDivisible("r = " + std::to_string(r) + " does not divide q-1");
    if (m < 1) throw BadM("m must be at least 1");
    checked_pow(r, m);
}

std::uint64_t CaseParams::d() const { return checked_pow(r, m); }

const char* to_string(RootVerdict v) {
    switch (v) {
        case RootVerdict::DeterminantIsOne: return "DeterminantIsOne";
        case RootVerdict::RootExists: return "RootExists";
        case RootVerdict::NoRoot: return "NoRoot";
    }
    throw Error("unknown verdict");
}

FieldElement det_u_closed(std::uint64_t r, const FieldElement& omega) {
    // (r-1)r(r+1) is a product of three consecutive integers, so the
    // division by 6 is exact in the integers before any reduction; the
    // result only matters mod r because omega^r = 1.
    const unsigned __int128 triple = static_cast<unsigned __int128>(r - 1) * r * (r + 1);
    const std::uint64_t exponent = static_cast<std::uint64_t>(triple / 6 % r);
    return omega.pow(exponent);
}

FieldElement det_u_closed(const Field& field, std::uint64_t r) {
    return det_u_closed(r, field.primitive_root_of_unity(r));
}

FieldElement det_v_closed(std::uint64_t r, const FieldElement& omega) {
    const Field& field = omega.field();
    const FieldElement one = field.one();
    if (r == 2) return omega - one;
    if (r == 3) return field.from_int(3) * omega * (omega - one);
    FieldElement det = one;
    for (std::uint64_t k = 1; k < r; ++k) {
        det = det * (omega.pow(k) - one).pow(r - k);
    }
    return det;
}

FieldElement det_v_closed(const Field& field, std::uint64_t r) {
    return det_v_closed(r, field.primitive_root_of_unity(r));
}

FieldElement det_v_squared_identity(const Field& field, std::uint64_t r) {
    if (r <= 3) throw BadR("the squared-determinant identity requires r > 3");
    if ((field.q() - 1) % r != 0)
        throw OrderNotDivisible("r = " + std::to_string(r) + " does not divide q-1");
    const FieldElement r_power = field.from_int(static_cast<std::int64_t>(r)).pow(r);
    return legendre(-1, r) == 1 ? r_power : -r_power;
}

int det_w_closed(std::uint64_t r) { return r == 2 ? -1 : 1; }

FieldElement det_tower_closed(Family family, const CaseParams& c) {
    const Field& F = *c.field;
    switch (family) {
        case Family::U:
            return det_u_closed(F, c.r).pow(checked_pow(c.r, c.m - 1));
        case Family::V:
            return det_v_closed(F, c.r).pow(checked_pow(c.r, c.m - 1));
        case Family::W: {
            if (c.m < 2) throw BadM("family W requires m >= 2");
            const FieldElement base = det_w_closed(c.r) == 1 ? F.one() : -F.one();
            return base.pow(checked_pow(c.r, c.m - 2));
        }
    }
    throw Error("unknown family");
}

RootClassification classify_u(const CaseParams& c) {
    const Field& F = *c.field;
    if (c.r > 3 || c.m >= 2) {
        return {RootVerdict::DeterminantIsOne, "thm1-det-one", F.one()};
    }
    // r <= 3 and m = 1: the determinant is omega itself
    if ((F.q() - 1) % (c.r * c.r) == 0) {
        const FieldElement omega = F.primitive_root_of_unity(c.r);
        return {RootVerdict::RootExists, "thm1-r2-div-q-1", dth_root(omega, c.r)};
    }
    return {RootVerdict::NoRoot, "thm1-r2-ndiv-q-1", std::nullopt};
}

RootClassification classify_v(const CaseParams& c) {
    auto with_witness = [&](const char* rule) -> RootClassification {
        const FieldElement det = det_tower_closed(Family::V, c);
        return {RootVerdict::RootExists, rule, dth_root(det, c.d())};
    };
    if (c.r >= 3) return with_witness("prop3.5-odd-r");
    if (c.m >= 3) return with_witness("prop3.6-m-ge-3");
    // r = 2, m <= 2
    const std::uint64_t p8 = c.field->p() % 8;
    if (c.field->e() % 2 == 0) return with_witness("prop3.6-e-even");
    if (p8 == 1 || p8 == 3) return with_witness("prop3.6-p-1-3-mod-8");
    if (p8 == 7 && c.m == 2) return with_witness("prop3.6-p-7-mod-8-m-2");
    return {RootVerdict::NoRoot, "prop3.6-no-root", std::nullopt};
}

RootClassification classify_w(const CaseParams& c) {
    if (c.m < 2) throw BadM("family W requires m >= 2");
    const Field& F = *c.field;
    if (c.r > 2 || c.m >= 3) {
        return {RootVerdict::DeterminantIsOne, "thm3-det-one", F.one()};
    }
    // r = m = 2: the determinant is -1 and d = 4
    if ((F.q() - 1) % 8 == 0) {
        return {RootVerdict::RootExists, "thm3-8-div-q-1", dth_root(-F.one(), 4)};
    }
    return {RootVerdict::NoRoot, "thm3-8-ndiv-q-1", std::nullopt};
}

RootClassification classify(Family family, const CaseParams& c) {
    switch (family) {
        case Family::U: return classify_u(c);
        case Family::V: return classify_v(c);
        case Family::W: return classify_w(c);
    }
    throw Error("unknown family");
}

bool theorem2_literal_root_exists(const CaseParams& c) {
    if (c.r != 2) return true;
    if (c.field->e() % 2 == 0) return true;
    const std::uint64_t p8 = c.field->p() % 8;
    if (c.m == 2 && (p8 == 1 || p8 == 3 || p8 == 7)) return false;
    if (c.m == 1 && (p8 == 1 || p8 == 3)) return false;
    return true;
}

}  // namespace esnorm
