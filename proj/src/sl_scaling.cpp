#include "esnorm/sl_scaling.hpp"

namespace esnorm {

Matrix scale_to_sl(const Matrix& m, std::uint64_t d) {
    if (m.nrows() != m.ncols() || m.nrows() != d)
        throw Error("matrix must be square of dimension d = " + std::to_string(d));
    const FieldElement det = m.det();
    if (det.is_zero()) throw Singular("matrix is singular");
    if (det.is_one()) return m;
    const FieldElement lambda = dth_root(det.inverse(), d);
    return m.scaled(lambda);
}

Matrix scale_tower_to_sl(const GeneratorId& id) {
    const CaseParams params(*id.field, id.r, id.m);
    const RootClassification cls = classify(id.family, params);
    if (cls.verdict == RootVerdict::NoRoot)
        throw NoRoot("determinant of the " + std::string(to_string(id.family)) +
                     " tower has no d-th root for these parameters (" + cls.rule + ")");
    const Matrix m = gen_tower(id);
    if (cls.verdict == RootVerdict::DeterminantIsOne) return m;
    // witness^d = det, so witness^-1 scales the determinant to 1
    return m.scaled(cls.witness->inverse());
}

}  // namespace esnorm
