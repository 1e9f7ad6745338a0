#include "sfc/kinematics.hpp"

#include <cmath>
#include <sstream>

#include "sfc/errors.hpp"

namespace sfc {

void validate(const DlsConfig& cfg) {
    if (!(cfg.epsilon > 0.0) || !std::isfinite(cfg.epsilon)) throw DomainError("dls: epsilon must be > 0");
    if (!(cfg.lambda > 0.0) || !std::isfinite(cfg.lambda)) throw DomainError("dls: lambda must be > 0");
}

DlsResult dls_solve(const Eigen::MatrixXd& jacobian, const DlsConfig& cfg) {
    validate(cfg);
    const auto rows = jacobian.rows();
    const auto cols = jacobian.cols();
    if (rows == 0 || cols == 0) throw DomainError("dls: empty Jacobian");
    if (rows > cols) throw DomainError("dls: more task rows than joints is not supported");
    if (!jacobian.allFinite()) throw DomainError("dls: Jacobian has non-finite entries");

    DlsResult result;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(jacobian);
    result.sigma_min = svd.singularValues()(rows - 1);

    Eigen::MatrixXd jjt = jacobian * jacobian.transpose();
    if (result.sigma_min > cfg.epsilon) {
        result.branch = DlsBranch::FullRank;
        Eigen::FullPivLU<Eigen::MatrixXd> lu(jjt);
        if (!lu.isInvertible()) {
            std::ostringstream msg;
            msg << "dls: J J^T is singular although sigma_min = " << result.sigma_min
                << " > epsilon = " << cfg.epsilon << " (rank " << lu.rank() << " of " << rows << ")";
            throw NumericError(msg.str());
        }
        result.inverse = jacobian.transpose() * lu.inverse();
    } else {
        result.branch = DlsBranch::Damped;
        jjt.diagonal().array() += cfg.lambda;
        result.inverse = jacobian.transpose() * jjt.ldlt().solve(Eigen::MatrixXd::Identity(rows, rows));
    }
    return result;
}

Eigen::MatrixXd dls_pseudoinverse(const Eigen::MatrixXd& jacobian, const DlsConfig& cfg) {
    return dls_solve(jacobian, cfg).inverse;
}

Eigen::VectorXd task_to_joint(const Eigen::MatrixXd& jacobian, const DlsConfig& cfg,
                              const Eigen::VectorXd& task_velocity) {
    if (task_velocity.size() != jacobian.rows()) {
        throw DomainError("task_to_joint: velocity has " + std::to_string(task_velocity.size()) +
                          " entries, Jacobian has " + std::to_string(jacobian.rows()) + " rows");
    }
    return dls_pseudoinverse(jacobian, cfg) * task_velocity;
}

Eigen::MatrixXd planar_jacobian(const Eigen::VectorXd& link_lengths,
                                const Eigen::VectorXd& joint_angles) {
    if (link_lengths.size() != joint_angles.size() || link_lengths.size() == 0) {
        throw DomainError("planar_jacobian: need one length per joint");
    }
    const auto n = link_lengths.size();
    Eigen::MatrixXd j = Eigen::MatrixXd::Zero(2, n);
    // Column i sums the contributions of links i..n-1 at their absolute angles.
    double angle = 0.0;
    Eigen::VectorXd absolute(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        angle += joint_angles(i);
        absolute(i) = angle;
    }
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index k = i; k < n; ++k) {
            j(0, i) -= link_lengths(k) * std::sin(absolute(k));
            j(1, i) += link_lengths(k) * std::cos(absolute(k));
        }
    }
    return j;
}

}  // namespace sfc
