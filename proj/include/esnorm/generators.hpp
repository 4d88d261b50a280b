#pragma once

#include <cstdint>
#include <string>

#include "esnorm/matrix.hpp"

namespace esnorm {

enum class Family { U, V, W };

const char* to_string(Family f);
Family family_from_string(const std::string& s);

/**
 * Identifies one matrix from the towered families: I_{r^(m-i)} (x) U (x)
 * I_{r^(i-1)} and so on. Validated eagerly: r must be prime and divide
 * q-1, m >= 1 (m >= 2 for W), and i must lie in [1, m] for U/V or
 * [1, m-1] for W (the W tower's base block is r^2 x r^2, so i = m would
 * call for an identity factor of negative degree).
 */
struct GeneratorId {
    GeneratorId(Family family, const Field& field, std::uint64_t r, std::uint32_t m, std::uint32_t i);

    Family family;
    const Field* field;
    std::uint64_t r;
    std::uint32_t m;
    std::uint32_t i;

    /// d = r^m, the dimension of the tower matrix.
    std::uint64_t dim() const;
};

/// r x r diagonal matrix with 1-based diagonal entry i equal to
/// omega^(i(i-1)/2).
Matrix gen_u(const Field& field, std::uint64_t r);
Matrix gen_u(const Field& field, std::uint64_t r, const FieldElement& omega);

/// r x r matrix with 1-based entry (i, j) equal to omega^((i-1)(j-1)):
/// the character table of the cyclic group of order r.
Matrix gen_v(const Field& field, std::uint64_t r);
Matrix gen_v(const Field& field, std::uint64_t r, const FieldElement& omega);

/// The permutation a -> (a + ((a-1) mod r) * r) mod r^2 on {0, ..., r^2-1}.
/// For prime r it decomposes as r-1 cycles of length r plus the r fixed
/// points a = 1 (mod r).
Permutation w_permutation(std::uint64_t r);

/// r^2 x r^2 permutation matrix of w_permutation(r). Entries are 0/1, so
/// any field works; the field only fixes the entry type.
Matrix gen_w(const Field& field, std::uint64_t r);

/// The d x d tower matrix I (x) X (x) I named by id.
Matrix gen_tower(const GeneratorId& id);

}  // namespace esnorm
