#include "latt/isometry.hpp"

#include "latt/errors.hpp"
#include "latt/represent.hpp"

namespace latt {

Representation make_representation(MatZ t, const GramMatrix& host, const GramMatrix& target) {
    int n = host.rank(), m = target.rank();
    if (static_cast<int>(t.size()) != n)
        throw InvalidParameters("representation matrix has wrong height");
    for (const auto& row : t)
        if (static_cast<int>(row.size()) != m)
            throw InvalidParameters("representation matrix has wrong width");
    MatZ check = matz_congruence(host.rows(), t);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (check[i][j] != target.at(i, j))
                throw InvalidParameters("representation certificate does not verify");
    return Representation{std::move(t)};
}

bool isometry_test(const GramMatrix& a, const GramMatrix& b, const EnumBudget& budget) {
    if (a.rank() != b.rank()) return false;
    if (a == b) return true;
    if (determinant(a) != determinant(b)) return false;
    Int bound = 1;
    for (int i = 0; i < a.rank(); ++i) {
        bound = std::max(bound, a.at(i, i));
        bound = std::max(bound, b.at(i, i));
    }
    if (theta_coefficients(a, bound, budget) != theta_coefficients(b, bound, budget)) return false;
    RepOutcome out = find_representation(b, a, budget);
    if (out.status == RepStatus::Unknown) throw BudgetExceeded(out.nodes);
    // equal determinants force any full-rank representation to be unimodular,
    // so one direction certifies the isometry
    return out.status == RepStatus::Found;
}

} // namespace latt
