#include <cmath>
#include <unsupported/Eigen/MatrixFunctions>

#include "holant/errors.hpp"
#include "holant/models.hpp"
#include "holant/rng.hpp"

namespace holant {

namespace {

double max_abs(const CMatrix &m)
{
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

}  // namespace

CMatrix symmetric_decompose(const CMatrix &B)
{
    const Eigen::Index n = B.rows();
    if (B.cols() != n) {
        throw PreconditionError("symmetric_decompose: matrix must be square");
    }
    if (!B.allFinite()) {
        throw DecompositionFailed("symmetric_decompose: matrix has non-finite entries");
    }
    const double scale = std::max(1.0, max_abs(B));
    if (max_abs(B - B.transpose()) > 1e-12 * scale) {
        throw PreconditionError("symmetric_decompose: matrix is not symmetric");
    }

    // B = L L^T with L built column by column from Schur complements; U = L^T.
    CMatrix S = (B + B.transpose()) / 2.0;
    std::vector<char> active(n, 1);
    std::vector<CVector> columns;
    const double negligible = 1e-13 * scale;

    auto eliminate = [&](const CVector &l) {
        S -= l * l.transpose();
        columns.push_back(l);
    };

    for (;;) {
        double off_max = 0.0, diag_max = 0.0;
        Eigen::Index oa = -1, ob = -1, dp = -1;
        for (Eigen::Index i = 0; i < n; i++) {
            if (!active[i]) {
                continue;
            }
            if (std::abs(S(i, i)) > diag_max) {
                diag_max = std::abs(S(i, i));
                dp = i;
            }
            for (Eigen::Index j = i + 1; j < n; j++) {
                if (active[j] && std::abs(S(i, j)) > off_max) {
                    off_max = std::abs(S(i, j));
                    oa = i;
                    ob = j;
                }
            }
        }
        if (std::max(diag_max, off_max) <= negligible) {
            break;
        }
        if (diag_max >= 0.5 * off_max) {
            const cplx root = std::sqrt(S(dp, dp));
            CVector l = CVector::Zero(n);
            for (Eigen::Index i = 0; i < n; i++) {
                if (active[i]) {
                    l(i) = S(i, dp) / root;
                }
            }
            active[dp] = 0;
            eliminate(l);
            continue;
        }

        // 2x2 pivot on (oa, ob); both diagonals are small relative to S(oa, ob).
        Eigen::Matrix2cd P;
        P << S(oa, oa), S(oa, ob), S(oa, ob), S(ob, ob);
        const cplx det = P.determinant();
        if (std::abs(det) <= negligible * negligible) {
            throw DecompositionFailed("symmetric_decompose: singular 2x2 pivot at rows " +
                                      std::to_string(oa) + ", " + std::to_string(ob));
        }
        const Eigen::Matrix2cd Pinv = P.inverse();
        // W W^T = P^{-1}
        Eigen::Matrix2cd W = Eigen::Matrix2cd::Zero();
        const cplx x = Pinv(0, 0), y = Pinv(0, 1), z = Pinv(1, 1);
        const double tiny = 1e-12 * Pinv.cwiseAbs().maxCoeff();
        if (std::abs(x) >= std::abs(z) && std::abs(x) > tiny) {
            const cplx rx = std::sqrt(x);
            W(0, 0) = rx;
            W(1, 0) = y / rx;
            W(1, 1) = std::sqrt(z - y * y / x);
        } else if (std::abs(z) > tiny) {
            const cplx rz = std::sqrt(z);
            W(1, 0) = rz;
            W(0, 0) = y / rz;
            W(0, 1) = std::sqrt(x - y * y / z);
        } else {
            // [[0, y], [y, 0]] = W W^T with W = sqrt(y)/2 [[1+i, 1-i], [1-i, 1+i]].
            const cplx c = std::sqrt(y) / 2.0;
            const cplx ip(1.0, 1.0), im(1.0, -1.0);
            W << c * ip, c * im, c * im, c * ip;
        }
        Eigen::MatrixX2cd C = Eigen::MatrixX2cd::Zero(n, 2);
        for (Eigen::Index i = 0; i < n; i++) {
            if (active[i]) {
                C(i, 0) = S(i, oa);
                C(i, 1) = S(i, ob);
            }
        }
        Eigen::MatrixX2cd L2 = C * W;
        active[oa] = 0;
        active[ob] = 0;
        eliminate(L2.col(0));
        eliminate(L2.col(1));
    }

    const Eigen::Index rows = std::max<Eigen::Index>({2, n, static_cast<Eigen::Index>(columns.size())});
    CMatrix U = CMatrix::Zero(rows, n);
    for (std::size_t r = 0; r < columns.size(); r++) {
        U.row(static_cast<Eigen::Index>(r)) = columns[r].transpose();
    }
    const double residual = max_abs(U.transpose() * U - B);
    if (residual > 1e-10 * scale) {
        throw DecompositionFailed("symmetric_decompose: residual " + std::to_string(residual) +
                                  " after " + std::to_string(columns.size()) + " pivots");
    }
    return U;
}

CMatrix random_orthogonal(int k, std::uint64_t seed)
{
    if (k < 1) {
        throw PreconditionError("random_orthogonal: k must be positive");
    }
    Rng rng(seed);
    CMatrix A = CMatrix::Zero(k, k);
    for (int i = 0; i < k; i++) {
        for (int j = i + 1; j < k; j++) {
            const cplx z = rng.in_disk(1.0);
            A(i, j) = z;
            A(j, i) = -z;
        }
    }
    CMatrix g = A.exp();
    if (orthogonality_residual(g) > 1e-10) {
        throw ConvergenceError("random_orthogonal: matrix exponential lost orthogonality");
    }
    return g;
}

double orthogonality_residual(const CMatrix &g)
{
    return max_abs(g.transpose() * g - CMatrix::Identity(g.rows(), g.cols()));
}

}  // namespace holant
