#include "curvlab/pencil.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "curvlab/rng.hpp"

namespace curvlab {

namespace {

template <typename Mat>
void require_hermitian(const Mat& m, const char* what) {
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * scale)
    throw std::invalid_argument(std::string(what) + " form is not Hermitian");
}

// Largest K with left >= K * right in the PSD order, i.e. the infimum of the
// Rayleigh quotient over all vectors with right-energy > 0. The kernel of
// the right form couples to its range through the left form, so the left
// form is first reduced by the Schur complement over the kernel block; the
// result is the minimum eigenvalue of the whitened reduced form. Returns
// -inf (with a violating witness) when no finite K exists.
template <typename Mat, typename Vec>
std::optional<std::pair<double, Vec>> pencil_impl(const Mat& left, const Mat& right,
                                                  double truncation,
                                                  KernelPolicy policy) {
  if (left.rows() != left.cols() || right.rows() != right.cols() ||
      left.rows() != right.rows())
    throw std::invalid_argument("pencil forms must be square and equally sized");
  require_hermitian(left, "left");
  require_hermitian(right, "right");

  Eigen::SelfAdjointEigenSolver<Mat> es(right);
  const Eigen::VectorXd evals = es.eigenvalues();
  const double emax = evals.size() ? evals.maxCoeff() : 0.0;
  if (evals.size() && evals.minCoeff() < -1e-12 * std::max(1.0, emax))
    throw std::invalid_argument("right form is not positive semidefinite");

  const double cut = truncation * emax;
  std::vector<int> kept, dropped;
  for (int i = 0; i < evals.size(); ++i) {
    if (evals(i) > cut && evals(i) > 0.0)
      kept.push_back(i);
    else
      dropped.push_back(i);
  }
  if (kept.empty() || emax <= 0.0) return std::nullopt;

  const int nr = static_cast<int>(kept.size());
  const int nk = static_cast<int>(dropped.size());
  Mat range(left.rows(), nr), w(left.rows(), nr);
  for (int c = 0; c < nr; ++c) {
    range.col(c) = es.eigenvectors().col(kept[c]);
    w.col(c) = es.eigenvectors().col(kept[c]) / std::sqrt(evals(kept[c]));
  }

  Mat reduced = w.adjoint() * left * w;
  Mat corrector;  // kernel component of the witness per whitened coordinate
  if (nk > 0 && policy == KernelPolicy::SchurComplement) {
    Mat kernel(left.rows(), nk);
    for (int c = 0; c < nk; ++c) kernel.col(c) = es.eigenvectors().col(dropped[c]);
    const Mat a_kk = kernel.adjoint() * left * kernel;
    const Mat a_kr = kernel.adjoint() * left * w;

    Eigen::SelfAdjointEigenSolver<Mat> ek(Mat(0.5 * (a_kk + a_kk.adjoint())));
    const double kmax = std::max(1e-300, std::abs(ek.eigenvalues().cwiseAbs().maxCoeff()));
    const double ktol = 1e-11 * std::max(1.0, kmax);
    if (ek.eigenvalues().minCoeff() < -ktol) {
      // The inequality fails on the kernel of the right form for every K.
      int arg = 0;
      ek.eigenvalues().minCoeff(&arg);
      Vec witness = kernel * ek.eigenvectors().col(arg);
      return std::make_pair(-std::numeric_limits<double>::infinity(), witness);
    }
    Mat a_kk_pinv = Mat::Zero(nk, nk);
    for (int i = 0; i < nk; ++i) {
      if (ek.eigenvalues()(i) > ktol)
        a_kk_pinv += (1.0 / ek.eigenvalues()(i)) *
                     (ek.eigenvectors().col(i) * ek.eigenvectors().col(i).adjoint());
    }
    // Solvability: the coupling must live in the range of a_kk, otherwise
    // the quotient is unbounded below along the corresponding direction.
    const Mat residual = a_kr - a_kk * a_kk_pinv * a_kr;
    if (residual.cwiseAbs().maxCoeff() >
        1e-8 * std::max(1.0, left.cwiseAbs().maxCoeff())) {
      int row = 0, col = 0;
      residual.cwiseAbs().maxCoeff(&row, &col);
      Vec witness = kernel.col(row);
      return std::make_pair(-std::numeric_limits<double>::infinity(), witness);
    }
    corrector = -kernel * (a_kk_pinv * a_kr);
    reduced -= a_kr.adjoint() * a_kk_pinv * a_kr;
  }

  reduced = typename Mat::PlainObject(0.5 * (reduced + reduced.adjoint()));
  Eigen::SelfAdjointEigenSolver<Mat> er(reduced);
  int argmin = 0;
  er.eigenvalues().minCoeff(&argmin);
  Vec witness = w * er.eigenvectors().col(argmin);
  if (nk > 0 && corrector.size() > 0) witness += corrector * er.eigenvectors().col(argmin);
  return std::make_pair(er.eigenvalues()(argmin), witness);
}

}  // namespace

std::optional<PencilSolution> pencil_min_eig(const Eigen::MatrixXd& left,
                                             const Eigen::MatrixXd& right,
                                             double truncation, KernelPolicy policy) {
  auto r = pencil_impl<Eigen::MatrixXd, Eigen::VectorXd>(left, right, truncation, policy);
  if (!r) return std::nullopt;
  return PencilSolution{r->first, r->second};
}

std::optional<PencilSolutionC> pencil_min_eig(const Eigen::MatrixXcd& left,
                                              const Eigen::MatrixXcd& right,
                                              double truncation, KernelPolicy policy) {
  auto r = pencil_impl<Eigen::MatrixXcd, Eigen::VectorXcd>(left, right, truncation, policy);
  if (!r) return std::nullopt;
  return PencilSolutionC{r->first, r->second};
}

SphereSearchResult sphere_search(const std::function<double(const Eigen::VectorXd&)>& objective,
                                 int dim, const SphereSearchConfig& cfg) {
  if (dim < 1) throw std::invalid_argument("sphere_search requires dim >= 1");
  if (cfg.samples < 1) throw std::invalid_argument("sphere_search requires samples >= 1");

  Rng rng(cfg.seed);
  SphereSearchResult result;
  result.value = std::numeric_limits<double>::infinity();
  for (int i = 0; i < cfg.samples; ++i) {
    Eigen::VectorXd v = rng.unit_vector(dim);
    const double f = objective(v);
    ++result.evaluations;
    if (f < result.value) {
      result.value = f;
      result.argmin = v;
    }
  }
  if (!std::isfinite(result.value)) return result;

  // Projected gradient descent from the best sample.
  Eigen::VectorXd v = result.argmin;
  double fv = result.value;
  double step = 0.5;
  const double h = 1e-6;
  for (int it = 0; it < cfg.steps && step > 1e-13; ++it) {
    Eigen::VectorXd grad(dim);
    for (int k = 0; k < dim; ++k) {
      Eigen::VectorXd vp = v, vm = v;
      vp(k) += h;
      vm(k) -= h;
      vp.normalize();
      vm.normalize();
      grad(k) = (objective(vp) - objective(vm)) / (2.0 * h);
      result.evaluations += 2;
    }
    grad -= grad.dot(v) * v;  // tangent component
    const double gn = grad.norm();
    if (gn < 1e-14) break;
    bool improved = false;
    while (step > 1e-13) {
      Eigen::VectorXd cand = (v - step * grad / gn).normalized();
      const double fc = objective(cand);
      ++result.evaluations;
      if (fc < result.value) {
        result.value = fc;
        result.argmin = cand;
      }
      if (fc < fv - 1e-15) {
        v = cand;
        fv = fc;
        step = std::min(step * 1.5, 1.0);
        improved = true;
        break;
      }
      step *= 0.5;
    }
    if (!improved) break;
  }
  return result;
}

}  // namespace curvlab
