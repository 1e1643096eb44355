#pragma once

#include <Eigen/Dense>
#include <string>

namespace a2e {

struct KernelSpec {
  enum class Kind { linear, rbf };
  Kind kind = Kind::rbf;
  // gamma <= 0 means "use 1/D" at fit time.
  double gamma = 0.0;
};

// Fitted kernel eigenbasis with the centering terms needed for
// out-of-sample projection. alphas columns are scaled by 1/sqrt(eigenvalue),
// so a projection is just a centered kernel row times alphas.
struct KernelPcaModel {
  Eigen::MatrixXd training_frames;  // N x D
  KernelSpec kernel;
  Eigen::MatrixXd alphas;       // N x K
  Eigen::VectorXd eigenvalues;  // K, descending, clamped at 0
  Eigen::VectorXd row_means;    // N, means of the uncentered kernel rows
  double grand_mean = 0.0;
  double total_variance = 0.0;  // sum of all clamped kernel eigenvalues

  int n_components() const { return static_cast<int>(eigenvalues.size()); }
  int input_dim() const { return static_cast<int>(training_frames.cols()); }
};

double kernel_value(const KernelSpec& kernel, double gamma,
                    const Eigen::VectorXd& a, const Eigen::VectorXd& b);

// Fit on N x D frames: build the kernel matrix, double-center it, take the
// top n_components of a symmetric eigendecomposition. If fewer than
// n_components eigenvalues exceed 1e-12 the component count shrinks (a
// warning goes to stderr). Component signs are fixed so each column's
// largest-magnitude loading is positive.
KernelPcaModel kpca_fit(const Eigen::MatrixXd& frames, KernelSpec kernel,
                        int n_components);

// Project one D-vector (or N' x D rows) onto the fitted components.
Eigen::VectorXd kpca_transform(const KernelPcaModel& model,
                               const Eigen::VectorXd& frame);
Eigen::MatrixXd kpca_transform_all(const KernelPcaModel& model,
                                   const Eigen::MatrixXd& frames);

// eigenvalue_i / sum of all eigenvalues of the centered kernel.
Eigen::VectorXd explained_variance(const KernelPcaModel& model);

// "KPC1" persistence: magic, kernel tag + gamma, dims N/D/K, training frames,
// alphas, eigenvalues, row means, grand mean, total variance; all f64.
KernelPcaModel read_kpc1(const std::string& path);
void write_kpc1(const std::string& path, const KernelPcaModel& model);

}  // namespace a2e
