#include "curvlab/qms.hpp"

#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

#include "curvlab/pencil.hpp"
#include "curvlab/rng.hpp"

namespace curvlab {

namespace {

using Cd = std::complex<double>;

Matx kron(const Matx& a, const Matx& b) {
  Matx out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Eigen::VectorXcd vec(const Matx& a) {
  return Eigen::Map<const Eigen::VectorXcd>(a.data(), a.size());
}

Matx unvec(const Eigen::VectorXcd& v, int n) {
  return Eigen::Map<const Matx>(v.data(), n, n);
}

// C vec(X) = vec(X^T).
Matx swap_matrix(int n) {
  Matx c = Matx::Zero(n * n, n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) c(i + j * n, j + i * n) = 1.0;
  return c;
}

double op_scale(const Matx& a) { return std::max(1.0, a.cwiseAbs().maxCoeff()); }

// Superoperator of the single-jump summand V^*[V,.] - [V^*,.]V.
Matx jump_superop(const Matx& v) {
  const int n = static_cast<int>(v.rows());
  const Matx id = Matx::Identity(n, n);
  const Matx vv = v.adjoint() * v;
  return kron(id, vv) - 2.0 * kron(v.transpose(), v.adjoint()) +
         kron(vv.transpose(), id);
}

Matx family_superop(const JumpFamily& family, int n) {
  Matx l = Matx::Zero(n * n, n * n);
  for (std::size_t j = 0; j < family.ops.size(); ++j)
    l += std::exp(-family.omegas[j] / 2.0) * jump_superop(family.ops[j]);
  return l;
}

// Detects the star pairing and validates the Alicki conditions of a single
// family, throwing with the condition name on failure.
void validate_family(JumpFamily& family, const Matx& sigma, const Matx& sigma_inv) {
  const int d = static_cast<int>(family.ops.size());
  if (static_cast<int>(family.omegas.size()) != d)
    throw std::invalid_argument("one omega per jump operator required");
  for (int j = 0; j < d; ++j) {
    if (family.ops[j].rows() != family.ops[j].cols())
      throw std::invalid_argument("jump operators must be square");
    if (family.ops[j].cwiseAbs().maxCoeff() <= 0.0)
      throw std::invalid_argument("jump operators must be nonzero");
  }
  for (int j = 0; j < d; ++j) {
    if (std::abs(tau(family.ops[j])) > 1e-12 * op_scale(family.ops[j]))
      throw std::invalid_argument("Alicki condition (b) violated: jump " +
                                  std::to_string(j) + " is not traceless");
  }
  for (int j = 0; j < d; ++j) {
    for (int k = j + 1; k < d; ++k) {
      const double overlap = std::abs(tau(Matx(family.ops[j].adjoint() * family.ops[k])));
      const double scale = std::sqrt(std::abs(tau(Matx(family.ops[j].adjoint() * family.ops[j]))) *
                                     std::abs(tau(Matx(family.ops[k].adjoint() * family.ops[k]))));
      if (overlap > 1e-10 * std::max(1e-30, scale))
        throw std::invalid_argument("Alicki condition (a) violated: jumps " +
                                    std::to_string(j) + " and " + std::to_string(k) +
                                    " are not orthogonal");
    }
  }
  family.star.assign(d, -1);
  for (int j = 0; j < d; ++j) {
    const Matx adj = family.ops[j].adjoint();
    for (int k = 0; k < d; ++k) {
      if ((adj - family.ops[k]).cwiseAbs().maxCoeff() <= 1e-10 * op_scale(adj)) {
        family.star[j] = k;
        break;
      }
    }
    if (family.star[j] < 0)
      throw std::invalid_argument("Alicki condition (c) violated: adjoint of jump " +
                                  std::to_string(j) + " is not in the family");
  }
  for (int j = 0; j < d; ++j) {
    if (family.star[family.star[j]] != j)
      throw std::invalid_argument("Alicki condition (c) violated: star pairing is not involutive");
    if (std::abs(family.omegas[family.star[j]] + family.omegas[j]) > 1e-10)
      throw std::invalid_argument(
          "Alicki condition (d) violated: omegas of a star pair do not negate");
  }
  for (int j = 0; j < d; ++j) {
    const Matx lhs = sigma * family.ops[j] * sigma_inv;
    const Matx rhs = std::exp(-family.omegas[j]) * family.ops[j];
    if ((lhs - rhs).cwiseAbs().maxCoeff() > 1e-10 * op_scale(rhs))
      throw std::invalid_argument("Alicki condition (d) violated: jump " +
                                  std::to_string(j) +
                                  " is not a modular eigenvector for its omega");
  }
}

// Unitary mixing of equal-omega jumps diagonalizing their Gram matrix; the
// quadratic jump sums, and hence the generator, are unchanged.
JumpFamily orthogonalize_family(const JumpFamily& family) {
  const int d = static_cast<int>(family.ops.size());
  std::vector<int> order(d);
  for (int j = 0; j < d; ++j) order[j] = j;

  JumpFamily out;
  std::vector<bool> done(d, false);
  for (int j = 0; j < d; ++j) {
    if (done[j]) continue;
    std::vector<int> group;
    for (int k = 0; k < d; ++k) {
      if (!done[k] && std::abs(family.omegas[k] - family.omegas[j]) < 1e-12) {
        group.push_back(k);
        done[k] = true;
      }
    }
    const int gsize = static_cast<int>(group.size());
    Matx gram(gsize, gsize);
    for (int a = 0; a < gsize; ++a)
      for (int b = 0; b < gsize; ++b)
        gram(a, b) = tau(Matx(family.ops[group[a]].adjoint() * family.ops[group[b]]));
    Eigen::SelfAdjointEigenSolver<Matx> es(gram);
    for (int i = 0; i < gsize; ++i) {
      if (es.eigenvalues()(i) <= 1e-14 * std::max(1.0, es.eigenvalues().maxCoeff()))
        continue;
      Matx w = Matx::Zero(family.ops[0].rows(), family.ops[0].cols());
      for (int a = 0; a < gsize; ++a) w += es.eigenvectors()(a, i) * family.ops[group[a]];
      out.ops.push_back(w);
      out.omegas.push_back(family.omegas[j]);
    }
  }
  return out;
}

}  // namespace

std::complex<double> tau(const Matx& a) { return a.trace() / static_cast<double>(a.rows()); }

void validate_density(const Matx& a, bool require_pd) {
  if (a.rows() != a.cols()) throw std::invalid_argument("density matrix must be square");
  if ((a - a.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * op_scale(a))
    throw std::invalid_argument("density matrix must be Hermitian");
  if (std::abs(tau(a) - 1.0) > 1e-12 * op_scale(a))
    throw std::invalid_argument("density matrix must have normalized trace 1");
  if (require_pd) {
    Eigen::SelfAdjointEigenSolver<Matx> es(a);
    if (es.eigenvalues().minCoeff() <= 0.0)
      throw std::invalid_argument("density matrix must be positive definite");
  }
}

ConditionalExpectation ConditionalExpectation::trace(int n) {
  if (n < 1) throw std::invalid_argument("dimension must be positive");
  ConditionalExpectation e;
  e.kind_ = Kind::Trace;
  e.n_ = n;
  return e;
}

ConditionalExpectation ConditionalExpectation::blocks(
    int n, const std::vector<std::vector<int>>& blocks) {
  std::vector<Matx> ps;
  std::set<int> seen;
  for (const auto& block : blocks) {
    Matx p = Matx::Zero(n, n);
    for (int i : block) {
      if (i < 0 || i >= n) throw std::invalid_argument("block index out of range");
      if (!seen.insert(i).second)
        throw std::invalid_argument("blocks must be disjoint");
      p(i, i) = 1.0;
    }
    ps.push_back(p);
  }
  if (static_cast<int>(seen.size()) != n)
    throw std::invalid_argument("blocks must cover all basis indices");
  return projections(ps);
}

ConditionalExpectation ConditionalExpectation::projections(const std::vector<Matx>& ps) {
  if (ps.empty()) throw std::invalid_argument("projection list is empty");
  const int n = static_cast<int>(ps[0].rows());
  Matx sum = Matx::Zero(n, n);
  for (const auto& p : ps) {
    if (p.rows() != n || p.cols() != n)
      throw std::invalid_argument("projections must share one dimension");
    if ((p - p.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * op_scale(p) ||
        (p * p - p).cwiseAbs().maxCoeff() > 1e-12 * op_scale(p))
      throw std::invalid_argument("entries must be orthogonal projections");
    sum += p;
  }
  for (std::size_t a = 0; a < ps.size(); ++a)
    for (std::size_t b = a + 1; b < ps.size(); ++b)
      if ((ps[a] * ps[b]).cwiseAbs().maxCoeff() > 1e-12)
        throw std::invalid_argument("projections must be pairwise orthogonal");
  if ((sum - Matx::Identity(n, n)).cwiseAbs().maxCoeff() > 1e-12)
    throw std::invalid_argument("projections must resolve the identity");
  ConditionalExpectation e;
  e.kind_ = Kind::Pinching;
  e.n_ = n;
  e.projections_ = ps;
  return e;
}

Matx ConditionalExpectation::apply(const Matx& a) const {
  if (kind_ == Kind::Trace) return tau(a) * Matx::Identity(n_, n_);
  Matx out = Matx::Zero(n_, n_);
  for (const auto& p : projections_) out += p * a * p;
  return out;
}

Matx ConditionalExpectation::superoperator() const {
  if (kind_ == Kind::Trace) {
    const Eigen::VectorXcd id = vec(Matx::Identity(n_, n_));
    return id * id.adjoint() / static_cast<double>(n_);
  }
  Matx e = Matx::Zero(n_ * n_, n_ * n_);
  for (const auto& p : projections_) e += kron(p.transpose(), p);
  return e;
}

QmsGenerator QmsGenerator::build(const std::vector<Matx>& jumps,
                                 const std::vector<double>& omegas, const Matx& sigma,
                                 bool orthogonalize) {
  if (jumps.empty()) throw std::invalid_argument("at least one jump operator required");
  const int n = static_cast<int>(jumps[0].rows());
  Matx sig = sigma.size() == 0 ? Matx::Identity(n, n) : sigma;
  validate_density(sig, true);

  QmsGenerator gen;
  gen.n_ = n;
  gen.sigma_ = sig;

  JumpFamily family;
  family.ops = jumps;
  family.omegas = omegas;
  if (orthogonalize) family = orthogonalize_family(family);
  validate_family(family, sig, Matx(sig.inverse()));
  gen.families_.push_back(std::move(family));
  gen.finalize();
  return gen;
}

QmsGenerator QmsGenerator::depolarizing(int n) {
  if (n < 2) throw std::invalid_argument("depolarizing semigroup requires n >= 2");
  std::vector<Matx> jumps;
  const double scale = 1.0 / (n * std::sqrt(2.0));
  for (int k = 0; k < n; ++k) {
    for (int l = k + 1; l < n; ++l) {
      Matx x = Matx::Zero(n, n), y = Matx::Zero(n, n);
      x(k, l) = x(l, k) = std::sqrt(n / 2.0);
      y(k, l) = Cd(0.0, -std::sqrt(n / 2.0));
      y(l, k) = Cd(0.0, std::sqrt(n / 2.0));
      jumps.push_back(scale * x);
      jumps.push_back(scale * y);
    }
  }
  for (int r = 1; r < n; ++r) {
    Matx h = Matx::Zero(n, n);
    const double c = std::sqrt(static_cast<double>(n) / (r * (r + 1.0)));
    for (int i = 0; i < r; ++i) h(i, i) = c;
    h(r, r) = -c * r;
    jumps.push_back(scale * h);
  }
  QmsGenerator gen = build(jumps, std::vector<double>(jumps.size(), 0.0),
                           Matx::Identity(n, n));

  const ConditionalExpectation e = ConditionalExpectation::trace(n);
  const Matx expected = Matx::Identity(n * n, n * n) - e.superoperator();
  if ((gen.superoperator() - expected).cwiseAbs().maxCoeff() > 1e-11)
    throw std::logic_error("depolarizing jump construction failed");
  return gen;
}

QmsGenerator QmsGenerator::dephasing(const ConditionalExpectation& expectation,
                                     const Matx& sigma) {
  const int n = expectation.dim();
  Matx sig = sigma.size() == 0 ? Matx::Identity(n, n) : sigma;
  validate_density(sig, true);

  // Compatibility tau(E(A) sigma) = tau(A sigma) on a basis, i.e. the
  // Hilbert-Schmidt dual of E fixes sigma. For a pinching this says sigma is
  // block-diagonal; for the trace expectation it forces sigma = 1.
  Matx dual_fix = Matx::Zero(n, n);
  if (expectation.kind() == ConditionalExpectation::Kind::Trace) {
    dual_fix = tau(sig) * Matx::Identity(n, n);
  } else {
    for (const auto& p : expectation.projection_list()) dual_fix += p * sig * p;
  }
  if ((dual_fix - sig).cwiseAbs().maxCoeff() > 1e-10 * op_scale(sig))
    throw std::invalid_argument(
        "conditional expectation is incompatible with sigma");

  if (expectation.kind() == ConditionalExpectation::Kind::Trace) {
    QmsGenerator gen = depolarizing(n);
    gen.sigma_ = sig;
    return gen;
  }

  // Jumps (p_k - tau(p_k))/sqrt(2) realize L = id - E; a unitary mixing from
  // the Gram eigendecomposition restores the orthogonality condition without
  // changing the generator. All jumps commute with sigma, so omega = 0.
  const auto& ps = expectation.projection_list();
  JumpFamily raw;
  for (const auto& p : ps) {
    raw.ops.push_back((p - tau(p) * Matx::Identity(n, n)) / std::sqrt(2.0));
    raw.omegas.push_back(0.0);
  }
  JumpFamily rotated = orthogonalize_family(raw);

  QmsGenerator gen;
  gen.n_ = n;
  gen.sigma_ = sig;
  if (!rotated.ops.empty()) {
    validate_family(rotated, sig, Matx(sig.inverse()));
    gen.families_.push_back(std::move(rotated));
  }
  gen.finalize();

  const Matx expected = Matx::Identity(n * n, n * n) - expectation.superoperator();
  if ((gen.superoperator() - expected).cwiseAbs().maxCoeff() > 1e-11)
    throw std::logic_error("dephasing jump construction failed");
  return gen;
}

QmsGenerator QmsGenerator::commuting_sum(const std::vector<JumpFamily>& families,
                                         const Matx& sigma) {
  if (families.empty()) throw std::invalid_argument("at least one family required");
  const int n = static_cast<int>(families[0].ops.at(0).rows());
  Matx sig = sigma.size() == 0 ? Matx::Identity(n, n) : sigma;
  validate_density(sig, true);
  const Matx sig_inv = sig.inverse();

  QmsGenerator gen;
  gen.n_ = n;
  gen.sigma_ = sig;
  for (const auto& family : families) {
    JumpFamily f = family;
    validate_family(f, sig, sig_inv);
    gen.families_.push_back(std::move(f));
  }

  for (std::size_t k = 0; k < families.size(); ++k) {
    for (std::size_t l = k + 1; l < families.size(); ++l) {
      for (std::size_t i = 0; i < families[k].ops.size(); ++i) {
        for (std::size_t j = 0; j < families[l].ops.size(); ++j) {
          const Matx comm = families[k].ops[i] * families[l].ops[j] -
                            families[l].ops[j] * families[k].ops[i];
          if (comm.cwiseAbs().maxCoeff() > 1e-11 * op_scale(families[k].ops[i]))
            throw std::invalid_argument(
                "jump operators do not commute across families: family " +
                std::to_string(k) + " jump " + std::to_string(i) + " vs family " +
                std::to_string(l) + " jump " + std::to_string(j));
        }
      }
    }
  }
  gen.finalize();

  for (int k = 0; k < gen.family_count(); ++k) {
    for (int l = k + 1; l < gen.family_count(); ++l) {
      const Matx lk = gen.family_superoperator(k);
      const Matx ll = gen.family_superoperator(l);
      if ((lk * ll - ll * lk).cwiseAbs().maxCoeff() > 1e-10 * op_scale(lk) * op_scale(ll))
        throw std::invalid_argument("family generators do not commute");
    }
  }
  return gen;
}

void QmsGenerator::finalize() {
  jump_index_.clear();
  for (int k = 0; k < family_count(); ++k)
    for (std::size_t j = 0; j < families_[k].ops.size(); ++j)
      jump_index_.emplace_back(k, static_cast<int>(j));

  superop_ = Matx::Zero(n_ * n_, n_ * n_);
  for (const auto& family : families_) superop_ += family_superop(family, n_);

  Eigen::SelfAdjointEigenSolver<Matx> sig_es(sigma_);
  sigma_eigs_ = sig_es.eigenvalues();
  sigma_vecs_ = sig_es.eigenvectors();

  // Symmetrize in the GNS metric (sigma^T (x) 1)/n and eigendecompose once.
  const Matx id = Matx::Identity(n_, n_);
  Matx sqrt_sig_t = Matx::Zero(n_, n_);
  Matx isqrt_sig_t = Matx::Zero(n_, n_);
  for (int i = 0; i < n_; ++i) {
    sqrt_sig_t += std::sqrt(sigma_eigs_(i)) * (sigma_vecs_.col(i) * sigma_vecs_.col(i).adjoint());
    isqrt_sig_t += (1.0 / std::sqrt(sigma_eigs_(i))) *
                   (sigma_vecs_.col(i) * sigma_vecs_.col(i).adjoint());
  }
  sqrt_sig_t = sqrt_sig_t.transpose().eval();
  isqrt_sig_t = isqrt_sig_t.transpose().eval();
  const Matx sym = kron(sqrt_sig_t, id) * superop_ * kron(isqrt_sig_t, id);
  Eigen::SelfAdjointEigenSolver<Matx> es(Matx(0.5 * (sym + sym.adjoint())));
  semigroup_eigs_ = es.eigenvalues();
  semigroup_modes_ = kron(isqrt_sig_t, id) * es.eigenvectors();
  semigroup_modes_inv_ = es.eigenvectors().adjoint() * kron(sqrt_sig_t, id);
}

bool QmsGenerator::tracially_symmetric() const {
  return (sigma_ - Matx::Identity(n_, n_)).cwiseAbs().maxCoeff() <= 1e-12;
}

const Matx& QmsGenerator::jump(int j) const {
  auto [k, i] = jump_index_.at(j);
  return families_[k].ops[i];
}

double QmsGenerator::omega(int j) const {
  auto [k, i] = jump_index_.at(j);
  return families_[k].omegas[i];
}

int QmsGenerator::star(int j) const {
  auto [k, i] = jump_index_.at(j);
  int offset = 0;
  for (int f = 0; f < k; ++f) offset += static_cast<int>(families_[f].ops.size());
  return offset + families_[k].star[i];
}

Matx QmsGenerator::dual_superoperator() const {
  const Matx c = swap_matrix(n_);
  return c * superop_.transpose() * c;
}

Matx QmsGenerator::family_superoperator(int k) const {
  return family_superop(families_.at(k), n_);
}

Matx QmsGenerator::apply(const Matx& a) const { return unvec(superop_ * vec(a), n_); }

Matx QmsGenerator::gamma(const Matx& a, const Matx& b) const {
  return 0.5 * (apply(a).adjoint() * b + a.adjoint() * apply(b) - apply(Matx(a.adjoint() * b)));
}

Matx QmsGenerator::gamma2(const Matx& a, const Matx& b) const {
  return 0.5 * (gamma(apply(a), b) + gamma(a, apply(b)) - apply(gamma(a, b)));
}

Matx QmsGenerator::semigroup(double t) const {
  if (t < 0.0) throw std::invalid_argument("semigroup requires t >= 0");
  return semigroup_modes_ *
         (-t * semigroup_eigs_.array()).exp().matrix().cast<Cd>().asDiagonal() *
         semigroup_modes_inv_;
}

Matx QmsGenerator::semigroup_apply(double t, const Matx& a) const {
  return unvec(semigroup(t) * vec(a), n_);
}

Matx QmsGenerator::dual_semigroup_apply(double t, const Matx& rho) const {
  const Matx c = swap_matrix(n_);
  const Matx dual = c * semigroup(t).transpose() * c;
  return unvec(dual * vec(rho), n_);
}

Matx QmsGenerator::sigma_power(std::complex<double> z) const {
  Matx out = Matx::Zero(n_, n_);
  for (int i = 0; i < n_; ++i)
    out += std::pow(Cd(sigma_eigs_(i), 0.0), z) *
           (sigma_vecs_.col(i) * sigma_vecs_.col(i).adjoint());
  return out;
}

Matx choi_matrix(const Matx& superop) {
  const int n2 = static_cast<int>(superop.rows());
  const int n = static_cast<int>(std::lround(std::sqrt(static_cast<double>(n2))));
  Matx choi = Matx::Zero(n2, n2);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Matx unit = Matx::Zero(n, n);
      unit(i, j) = 1.0;
      choi.block(i * n, j * n, n, n) = unvec(superop * vec(unit), n);
    }
  }
  return choi;
}

Fodc::Fodc(const QmsGenerator& gen) : gen_(gen) {}

std::vector<Matx> Fodc::partial(const Matx& a) const {
  std::vector<Matx> xi(gen_.jump_count());
  for (int j = 0; j < gen_.jump_count(); ++j) {
    const Matx& v = gen_.jump(j);
    xi[j] = std::exp(-gen_.omega(j) / 4.0) * (v * a - a * v);
  }
  return xi;
}

Matx Fodc::pairing(const std::vector<Matx>& xi, const std::vector<Matx>& eta) const {
  Matx out = Matx::Zero(gen_.dim(), gen_.dim());
  for (int j = 0; j < gen_.jump_count(); ++j) out += xi[j].adjoint() * eta[j];
  return out;
}

std::vector<Matx> Fodc::jmap(const std::vector<Matx>& xi) const {
  // The sign makes J(dA) = d(sigma^{1/2} A^* sigma^{-1/2}) hold; compare the
  // edge-space J on graphs, which carries the same sign.
  const Matx sh = gen_.sigma_power(0.5);
  const Matx shi = gen_.sigma_power(-0.5);
  std::vector<Matx> out(gen_.jump_count());
  for (int j = 0; j < gen_.jump_count(); ++j)
    out[j] = -sh * xi[gen_.star(j)].adjoint() * shi;
  return out;
}

std::vector<Matx> Fodc::modular(double t, const std::vector<Matx>& xi) const {
  const Matx st = gen_.sigma_power(Cd(0.0, t));
  const Matx sti = gen_.sigma_power(Cd(0.0, -t));
  std::vector<Matx> out(gen_.jump_count());
  for (int j = 0; j < gen_.jump_count(); ++j)
    out[j] = std::exp(Cd(0.0, gen_.omega(j) * t)) * st * xi[j] * sti;
  return out;
}

Eigen::VectorXcd Fodc::flatten(const std::vector<Matx>& xi) const {
  const int n2 = gen_.dim() * gen_.dim();
  Eigen::VectorXcd v(dim());
  for (int j = 0; j < gen_.jump_count(); ++j) v.segment(j * n2, n2) = vec(xi[j]);
  return v;
}

std::vector<Matx> Fodc::unflatten(const Eigen::VectorXcd& v) const {
  const int n2 = gen_.dim() * gen_.dim();
  std::vector<Matx> xi(gen_.jump_count());
  for (int j = 0; j < gen_.jump_count(); ++j)
    xi[j] = unvec(v.segment(j * n2, n2), gen_.dim());
  return xi;
}

Matx Fodc::partial_matrix() const {
  const int n = gen_.dim();
  Matx d(dim(), n * n);
  for (int a = 0; a < n * n; ++a) {
    Matx unit = Matx::Zero(n, n);
    unit(a % n, a / n) = 1.0;
    d.col(a) = flatten(partial(unit));
  }
  return d;
}

Matx Fodc::gns_metric() const {
  const int n = gen_.dim();
  const Matx block = kron(gen_.sigma().transpose(), Matx::Identity(n, n)) / n;
  Matx g = Matx::Zero(dim(), dim());
  for (int j = 0; j < gen_.jump_count(); ++j)
    g.block(j * n * n, j * n * n, n * n, n * n) = block;
  return g;
}

namespace {

// Eigendecomposition of rho plus the rotated components of xi.
struct RotatedField {
  Eigen::VectorXd eigs;
  std::vector<Matx> comps;
};

RotatedField rotate_to_rho_basis(const Matx& rho, const std::vector<Matx>& xi) {
  Eigen::SelfAdjointEigenSolver<Matx> es(rho);
  if (es.eigenvalues().minCoeff() <= 0.0)
    throw std::invalid_argument("rho must be positive definite");
  RotatedField r;
  r.eigs = es.eigenvalues();
  r.comps.resize(xi.size());
  for (std::size_t j = 0; j < xi.size(); ++j)
    r.comps[j] = es.eigenvectors().adjoint() * xi[j] * es.eigenvectors();
  return r;
}

}  // namespace

std::complex<double> lambda_inner(const Fodc& fodc, const MeanFunction& mean,
                                  const Matx& rho, const std::vector<Matx>& xi,
                                  const std::vector<Matx>& eta) {
  const RotatedField rx = rotate_to_rho_basis(rho, xi);
  const RotatedField re = rotate_to_rho_basis(rho, eta);
  const int n = fodc.matrix_dim();
  Cd sum = 0.0;
  for (int j = 0; j < fodc.jump_count(); ++j) {
    const double ew = std::exp(fodc.generator().omega(j) / 2.0);
    for (int p = 0; p < n; ++p) {
      for (int q = 0; q < n; ++q) {
        const double mult = mean.eval(ew * rx.eigs(p), rx.eigs(q) / ew);
        sum += mult * std::conj(rx.comps[j](p, q)) * re.comps[j](p, q);
      }
    }
  }
  return sum / static_cast<double>(n);
}

double lambda_norm(const Fodc& fodc, const MeanFunction& mean, const Matx& rho,
                   const std::vector<Matx>& xi) {
  return lambda_inner(fodc, mean, rho, xi, xi).real();
}

double pimsner_popa(const ConditionalExpectation& expectation,
                    const PimsnerPopaConfig& cfg) {
  const int n = expectation.dim();
  if (expectation.kind() == ConditionalExpectation::Kind::Trace)
    return 1.0 / n;

  auto ratio = [&](const Eigen::VectorXcd& v) {
    const Matx b = expectation.apply(Matx(v * v.adjoint()));
    Eigen::SelfAdjointEigenSolver<Matx> es(b);
    const double cut = 1e-12 * std::max(1e-300, es.eigenvalues().maxCoeff());
    Eigen::VectorXcd in_range = Eigen::VectorXcd::Zero(n);
    double quad = 0.0;
    for (int i = 0; i < n; ++i) {
      if (es.eigenvalues()(i) > cut) {
        const Cd c = es.eigenvectors().col(i).adjoint() * v;
        in_range += es.eigenvectors().col(i) * c;
        quad += std::norm(c) / es.eigenvalues()(i);
      }
    }
    if ((in_range - v).norm() > 1e-8) return 0.0;  // v leaves the range
    return quad > 0.0 ? 1.0 / quad : 0.0;
  };

  auto objective = [&](const Eigen::VectorXd& x) {
    Eigen::VectorXcd v(n);
    for (int i = 0; i < n; ++i) v(i) = Cd(x(i), x(n + i));
    const double norm = v.norm();
    if (norm < 1e-12) return 1.0;
    return ratio(v / norm);
  };

  SphereSearchConfig scfg;
  scfg.samples = cfg.samples;
  scfg.steps = cfg.steps;
  scfg.seed = cfg.seed;
  return sphere_search(objective, 2 * n, scfg).value;
}

}  // namespace curvlab
