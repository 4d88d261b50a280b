#include "esnorm/generators.hpp"

namespace esnorm {

const char* to_string(Family f) {
    switch (f) {
        case Family::U: return "U";
        case Family::V: return "V";
        case Family::W: return "W";
    }
    throw Error("unknown family");
}

Family family_from_string(const std::string& s) {
    if (s == "U") return Family::U;
    if (s == "V") return Family::V;
    if (s == "W") return Family::W;
    throw Error("family must be one of U, V, W");
}

GeneratorId::GeneratorId(Family family_, const Field& field_, std::uint64_t r_, std::uint32_t m_,
                         std::uint32_t i_)
    : family(family_), field(&field_), r(r_), m(m_), i(i_) {
    if (!is_prime(r)) throw NotPrime("r = " + std::to_string(r) + " is not prime");
    if ((field->q() - 1) % r != 0)
        throw OrderNotDivisible("r = " + std::to_string(r) + " does not divide q-1");
    if (family == Family::W && m < 2) throw BadM("family W requires m >= 2");
    if (m < 1) throw BadM("m must be at least 1");
    const std::uint32_t i_max = family == Family::W ? m - 1 : m;
    if (i < 1 || i > i_max)
        throw BadIndex("i = " + std::to_string(i) + " out of range [1, " + std::to_string(i_max) + "]");
    checked_pow(r, m);
}

std::uint64_t GeneratorId::dim() const { return checked_pow(r, m); }

Matrix gen_u(const Field& field, std::uint64_t r, const FieldElement& omega) {
    Matrix u(field, r, r);
    for (std::uint64_t a = 0; a < r; ++a) {
        // 1-based index i = a+1, exponent i(i-1)/2
        u.set(a, a, omega.pow((a + 1) * a / 2));
    }
    return u;
}

Matrix gen_u(const Field& field, std::uint64_t r) {
    return gen_u(field, r, field.primitive_root_of_unity(r));
}

Matrix gen_v(const Field& field, std::uint64_t r, const FieldElement& omega) {
    Matrix v(field, r, r);
    for (std::uint64_t a = 0; a < r; ++a)
        for (std::uint64_t b = 0; b < r; ++b) v.set(a, b, omega.pow(a * b));
    return v;
}

Matrix gen_v(const Field& field, std::uint64_t r) {
    return gen_v(field, r, field.primitive_root_of_unity(r));
}

Permutation w_permutation(std::uint64_t r) {
    const std::uint64_t n = r * r;
    std::vector<std::size_t> images(n);
    for (std::uint64_t a = 0; a < n; ++a) {
        images[a] = static_cast<std::size_t>((a + (a + r - 1) % r * r) % n);
    }
    return Permutation(std::move(images));
}

Matrix gen_w(const Field& field, std::uint64_t r) {
    return permutation_matrix(field, w_permutation(r));
}

Matrix gen_tower(const GeneratorId& id) {
    const Field& F = *id.field;
    Matrix base = [&] {
        switch (id.family) {
            case Family::U: return gen_u(F, id.r);
            case Family::V: return gen_v(F, id.r);
            case Family::W: return gen_w(F, id.r);
        }
        throw Error("unknown family");
    }();
    // base block occupies r (U, V) or r^2 (W) of the r^m total dimension
    const std::uint32_t base_height = id.family == Family::W ? 2 : 1;
    const std::uint64_t left = checked_pow(id.r, id.m - base_height - (id.i - 1));
    const std::uint64_t right = checked_pow(id.r, id.i - 1);
    return kron(kron(Matrix::identity(F, static_cast<std::size_t>(left)), base),
                Matrix::identity(F, static_cast<std::size_t>(right)));
}

}  // namespace esnorm
