#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "ccc/baselines.hpp"
#include "lloyd.hpp"

namespace ccc {

void GmmConfig::validate() const {
  if (k == 0 || max_iter == 0 || !(tol > 0.0) || !(cov_reg > 0.0)) {
    throw std::invalid_argument("gmm needs k, max_iter, tol and cov_reg all positive");
  }
}

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

Eigen::Map<const VectorXd> as_vector(const Point& p) {
  return Eigen::Map<const VectorXd>(p.data(), static_cast<Eigen::Index>(p.size()));
}

// Fills log(w_k) + log N(x_i | mu_k, Sigma_k) into `log_resp` and normalises
// each row; returns the total log-likelihood.
double expectation(const Dataset& data, const GaussianMixture& gm, MatrixXd& log_resp) {
  const auto n = static_cast<Eigen::Index>(data.size());
  const auto k = static_cast<Eigen::Index>(gm.weights.size());
  const double d = static_cast<double>(data.dim());
  log_resp.resize(n, k);

  for (Eigen::Index c = 0; c < k; ++c) {
    Eigen::LLT<MatrixXd> llt(gm.covariances[static_cast<std::size_t>(c)]);
    if (llt.info() != Eigen::Success) {
      throw std::runtime_error("covariance of component " + std::to_string(c) +
                               " is not positive definite");
    }
    const MatrixXd& l = llt.matrixL();
    const double log_det = 2.0 * l.diagonal().array().log().sum();
    const double base = std::log(gm.weights[static_cast<std::size_t>(c)]) -
                        0.5 * (d * std::log(2.0 * std::numbers::pi) + log_det);
    for (Eigen::Index i = 0; i < n; ++i) {
      const VectorXd diff = as_vector(data[static_cast<std::size_t>(i)]) - gm.means[static_cast<std::size_t>(c)];
      const VectorXd z = llt.matrixL().solve(diff);
      log_resp(i, c) = base - 0.5 * z.squaredNorm();
    }
  }

  double total = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const double m = log_resp.row(i).maxCoeff();
    const double lse = m + std::log((log_resp.row(i).array() - m).exp().sum());
    log_resp.row(i).array() -= lse;
    total += lse;
  }
  return total;
}

void maximization(const Dataset& data, const MatrixXd& log_resp, double cov_reg, GaussianMixture& gm) {
  const auto n = static_cast<Eigen::Index>(data.size());
  const auto dim = static_cast<Eigen::Index>(data.dim());
  const MatrixXd resp = log_resp.array().exp();
  for (std::size_t c = 0; c < gm.weights.size(); ++c) {
    const auto col = static_cast<Eigen::Index>(c);
    const double nk = resp.col(col).sum();
    if (!(nk > 0.0) || !std::isfinite(nk)) {
      throw std::runtime_error("gmm component " + std::to_string(c) + " lost all responsibility");
    }
    VectorXd mean = VectorXd::Zero(dim);
    for (Eigen::Index i = 0; i < n; ++i) mean += resp(i, col) * as_vector(data[static_cast<std::size_t>(i)]);
    mean /= nk;
    MatrixXd cov = MatrixXd::Zero(dim, dim);
    for (Eigen::Index i = 0; i < n; ++i) {
      const VectorXd diff = as_vector(data[static_cast<std::size_t>(i)]) - mean;
      cov.noalias() += resp(i, col) * diff * diff.transpose();
    }
    cov /= nk;
    cov.diagonal().array() += cov_reg;
    gm.weights[c] = nk / static_cast<double>(n);
    gm.means[c] = std::move(mean);
    gm.covariances[c] = std::move(cov);
  }
}

}  // namespace

GaussianMixture gmm_em(const Dataset& data, const GmmConfig& config) {
  config.validate();
  detail::check_fit_size(data, config.k);
  const auto dim = static_cast<Eigen::Index>(data.dim());
  const double n = static_cast<double>(data.size());

  Rng rng(config.seed);
  GaussianMixture gm;
  gm.weights.assign(config.k, 1.0 / static_cast<double>(config.k));
  for (const auto& c : detail::kmeanspp_init(data, config.k, rng)) gm.means.push_back(as_vector(c));

  const VectorXd mu = as_vector(mean_vector(data));
  MatrixXd cov = MatrixXd::Zero(dim, dim);
  for (const auto& p : data.points()) {
    const VectorXd diff = as_vector(p) - mu;
    cov.noalias() += diff * diff.transpose();
  }
  cov /= n;
  cov.diagonal().array() += config.cov_reg;
  gm.covariances.assign(config.k, cov);

  MatrixXd log_resp;
  double ll = expectation(data, gm, log_resp);
  gm.log_likelihood.push_back(ll);
  for (std::size_t it = 1; it <= config.max_iter; ++it) {
    maximization(data, log_resp, config.cov_reg, gm);
    const double next = expectation(data, gm, log_resp);
    gm.log_likelihood.push_back(next);
    gm.iterations_run = it;
    const bool done = std::abs(next - ll) / n < config.tol;
    ll = next;
    if (done) {
      gm.converged = true;
      break;
    }
  }

  gm.labels.resize(data.size());
  for (std::size_t i = 0; i < data.size(); ++i) {
    Eigen::Index arg = 0;
    log_resp.row(static_cast<Eigen::Index>(i)).maxCoeff(&arg);
    gm.labels[i] = static_cast<int>(arg);
  }
  return gm;
}

ClusterModel gmm_fit(const Dataset& data, const GmmConfig& config) {
  auto gm = gmm_em(data, config);
  ClusterModel model;
  model.algorithm = Algorithm::kGmm;
  model.k = config.k;
  model.seed = config.seed;
  model.iterations_run = gm.iterations_run;
  model.converged = gm.converged;
  model.trace = std::move(gm.log_likelihood);
  model.assignments = std::move(gm.labels);
  for (const auto& m : gm.means) model.centroids.emplace_back(m.data(), m.data() + m.size());
  return model;
}

}  // namespace ccc
