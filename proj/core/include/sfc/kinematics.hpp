#pragma once

#include <Eigen/Dense>

namespace sfc {

/// Singularity handling for the differential inverse kinematics.
struct DlsConfig {
    double epsilon = 1e-3;  // sigma_min threshold for switching to damping
    double lambda = 1e-2;   // damping added to J J^T
};

void validate(const DlsConfig& cfg);

enum class DlsBranch { FullRank, Damped };

struct DlsResult {
    Eigen::MatrixXd inverse;  // n_r x m_r
    DlsBranch branch = DlsBranch::FullRank;
    double sigma_min = 0.0;
};

/// J^T (J J^T)^-1 when sigma_min(J) > epsilon, J^T (J J^T + lambda I)^-1
/// otherwise. The switch is a hard threshold, so the result jumps there.
/// Throws DomainError for non-finite J or more task rows than joints, and
/// NumericError if J J^T cannot be factored in the full-rank branch.
DlsResult dls_solve(const Eigen::MatrixXd& jacobian, const DlsConfig& cfg);

Eigen::MatrixXd dls_pseudoinverse(const Eigen::MatrixXd& jacobian, const DlsConfig& cfg);

/// Joint velocities for a task-space velocity command.
Eigen::VectorXd task_to_joint(const Eigen::MatrixXd& jacobian, const DlsConfig& cfg,
                              const Eigen::VectorXd& task_velocity);

/// Planar serial arm helpers (position Jacobian of the end point).
Eigen::MatrixXd planar_jacobian(const Eigen::VectorXd& link_lengths,
                                const Eigen::VectorXd& joint_angles);

}  // namespace sfc
