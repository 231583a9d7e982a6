#include "ncreal/psdfeas.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>
#include <utility>

namespace ncreal {

namespace {

Eigen::MatrixXd to_eigen(const QMatrix& a) {
  Eigen::MatrixXd m(a.rows, a.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < a.cols; ++j) m(i, j) = rational_to_double(a.at(i, j));
  return m;
}

double frob(const Eigen::MatrixXd& x, const Eigen::MatrixXd& y) {
  return (x.array() * y.array()).sum();
}

// Nearest symmetric matrix whose eigenvalues are all >= floor.
Eigen::MatrixXd clip_eigenvalues(const Eigen::MatrixXd& x, double floor) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(x);
  Eigen::VectorXd ev = es.eigenvalues().cwiseMax(floor);
  return es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().transpose();
}

// Gram-Schmidt under the Frobenius product, dropping dependent matrices.
std::vector<Eigen::MatrixXd> orthonormal_basis(const std::vector<Eigen::MatrixXd>& mats) {
  std::vector<Eigen::MatrixXd> q;
  for (Eigen::MatrixXd v : mats) {
    for (const Eigen::MatrixXd& b : q) v -= frob(v, b) * b;
    double n = v.norm();
    if (n > 1e-12) q.push_back(v / n);
  }
  return q;
}

Eigen::MatrixXd project_onto(const std::vector<Eigen::MatrixXd>& q, const Eigen::MatrixXd& x) {
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(x.rows(), x.cols());
  for (const Eigen::MatrixXd& b : q) p += frob(x, b) * b;
  return p;
}

// Denominator caps tried at each checkpoint, coarse to fine.
std::vector<BigInt> rounding_ladder(const FeasConfig& cfg) {
  std::vector<BigInt> caps;
  for (long base : {10L, 1000L})
    if (BigInt(base) < cfg.rounding_denominator_cap) caps.push_back(BigInt(base));
  caps.push_back(cfg.rounding_denominator_cap < 1 ? BigInt(1) : cfg.rounding_denominator_cap);
  return caps;
}

} // namespace

ExactLdl exact_ldl(const QMatrix& a) {
  if (a.rows != a.cols) throw SizeMismatchError("factorization needs a square matrix");
  const std::size_t n = a.rows;
  ExactLdl f;
  f.perm.resize(n);
  for (std::size_t i = 0; i < n; ++i) f.perm[i] = i;
  f.l = QMatrix::identity(n);
  QMatrix m = a;
  for (std::size_t k = 0; k < n; ++k) {
    // A negative diagonal entry anywhere in the remaining (Schur) block
    // certifies the matrix is not PSD; otherwise pivot on the first positive
    // diagonal entry.
    std::size_t pos = n;
    for (std::size_t i = k; i < n; ++i) {
      if (m.at(i, i) < 0) return f;
      if (pos == n && m.at(i, i) > 0) pos = i;
    }
    if (pos == n) {
      // All remaining diagonal entries vanish.  PSD then forces the whole
      // block to vanish, since 2|m_ij| <= m_ii + m_jj for PSD matrices.
      for (std::size_t i = k; i < n; ++i)
        for (std::size_t j = k; j < n; ++j)
          if (m.at(i, j) != 0) return f;
      for (std::size_t i = k; i < n; ++i) f.d.push_back(0);
      f.psd = true;
      return f;
    }
    if (pos != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(pos, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(m.at(i, k), m.at(i, pos));
      std::swap(f.perm[k], f.perm[pos]);
      for (std::size_t j = 0; j < k; ++j) std::swap(f.l.at(k, j), f.l.at(pos, j));
    }
    const Rational piv = m.at(k, k);
    f.d.push_back(piv);
    for (std::size_t i = k + 1; i < n; ++i) f.l.at(i, k) = m.at(i, k) / piv;
    for (std::size_t i = k + 1; i < n; ++i) {
      const Rational c = m.at(i, k);
      if (c == 0) continue;
      for (std::size_t j = k + 1; j < n; ++j) m.at(i, j) -= c * m.at(k, j) / piv;
    }
  }
  f.psd = true;
  f.pd = true;
  return f;
}

bool ldl_reconstructs(const QMatrix& a, const ExactLdl& f) {
  const std::size_t n = a.rows;
  if (a.cols != n || f.perm.size() != n || f.d.size() != n) return false;
  if (f.l.rows != n || f.l.cols != n) return false;
  std::vector<bool> seen(n, false);
  for (std::size_t p : f.perm) {
    if (p >= n || seen[p]) return false;
    seen[p] = true;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      Rational s = 0;
      for (std::size_t t = 0; t <= j; ++t) s += f.l.at(i, t) * f.d[t] * f.l.at(j, t);
      if (s != a.at(f.perm[i], f.perm[j])) return false;
    }
  return true;
}

PsdCertificate find_nonzero_psd(const std::vector<QMatrix>& mats, const FeasConfig& cfg) {
  if (mats.empty()) throw EmptyGeneratorsError("feasibility search needs at least one matrix");
  const std::size_t l = mats.front().rows;
  for (const QMatrix& m : mats) {
    if (m.rows != l || m.cols != l)
      throw SizeMismatchError("feasibility matrices must share one square size");
    if (!m.is_symmetric()) throw SizeMismatchError("feasibility matrices must be symmetric");
  }
  const std::size_t mcount = mats.size();

  // A basis matrix (or its negative) that is already PSD settles the search.
  for (std::size_t t = 0; t < mcount; ++t) {
    if (mats[t].is_zero()) continue;
    for (int sign : {1, -1}) {
      QMatrix b = sign == 1 ? mats[t] : Rational(-1) * mats[t];
      ExactLdl f = exact_ldl(b);
      if (!f.psd) continue;
      PsdCertificate cert;
      cert.kind = PsdCertificate::Kind::Feasible;
      cert.feasible.alpha.assign(mcount, Rational(0));
      cert.feasible.alpha[t] = sign;
      cert.feasible.b = std::move(b);
      cert.feasible.ldl = std::move(f);
      return cert;
    }
  }

  // Exact Gram data, shared by the dual shortcut and every exact checkpoint.
  QMatrix gram(mcount, mcount);
  for (std::size_t s = 0; s < mcount; ++s)
    for (std::size_t t = s; t < mcount; ++t) {
      Rational v = frobenius_inner(mats[s], mats[t]);
      gram.at(s, t) = v;
      gram.at(t, s) = v;
    }

  // Projects the candidate exactly onto the orthogonal complement of the
  // span; a positive definite result is an infeasibility witness, because a
  // PD matrix with zero inner product against every PSD member of the span
  // forces those members to be zero.
  auto infeasible_from = [&](const QMatrix& candidate) -> std::optional<PsdCertificate> {
    std::vector<Rational> rhs(mcount);
    for (std::size_t t = 0; t < mcount; ++t) rhs[t] = frobenius_inner(mats[t], candidate);
    std::vector<Rational> c;
    if (!solve_linear(gram, rhs, c)) return std::nullopt;
    QMatrix w = candidate;
    for (std::size_t t = 0; t < mcount; ++t)
      if (c[t] != 0) w = w - c[t] * mats[t];
    ExactLdl f = exact_ldl(w);
    if (!f.pd) return std::nullopt;
    PsdCertificate cert;
    cert.kind = PsdCertificate::Kind::Infeasible;
    cert.infeasible.w = std::move(w);
    cert.infeasible.orthogonality.resize(mcount);
    for (std::size_t t = 0; t < mcount; ++t)
      cert.infeasible.orthogonality[t] = frobenius_inner(cert.infeasible.w, mats[t]);
    cert.infeasible.ldl = std::move(f);
    return cert;
  };

  if (auto cert = infeasible_from(QMatrix::identity(l))) return *cert;

  // Numeric machinery for the alternating-projection phases.
  std::vector<Eigen::MatrixXd> md;
  md.reserve(mcount);
  for (const QMatrix& m : mats) md.push_back(to_eigen(m));
  std::vector<Eigen::MatrixXd> span_basis = orthonormal_basis(md);
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(l, l);

  Eigen::MatrixXd gd(mcount, mcount);
  for (std::size_t s = 0; s < mcount; ++s)
    for (std::size_t t = 0; t < mcount; ++t) gd(s, t) = rational_to_double(gram.at(s, t));
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> gram_qr(gd);

  const std::vector<BigInt> caps = rounding_ladder(cfg);

  std::mt19937 rng(cfg.random_seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const int restart_period = std::max(1, cfg.max_iterations / 5);

  // Rounds the coordinates of a numeric PSD candidate and verifies the
  // resulting exact combination.
  auto primal_checkpoint = [&](const Eigen::MatrixXd& p) -> std::optional<PsdCertificate> {
    Eigen::VectorXd r(mcount);
    for (std::size_t t = 0; t < mcount; ++t) r(t) = frob(md[t], p);
    Eigen::VectorXd cd = gram_qr.solve(r);
    for (const BigInt& cap : caps) {
      std::vector<Rational> alpha(mcount);
      QMatrix b(l, l);
      for (std::size_t t = 0; t < mcount; ++t) {
        alpha[t] = round_to_rational(cd(t), cap);
        if (alpha[t] != 0) b = b + alpha[t] * mats[t];
      }
      if (b.is_zero()) continue;
      ExactLdl f = exact_ldl(b);
      if (!f.psd) continue;
      PsdCertificate cert;
      cert.kind = PsdCertificate::Kind::Feasible;
      cert.feasible.alpha = std::move(alpha);
      cert.feasible.b = std::move(b);
      cert.feasible.ldl = std::move(f);
      return cert;
    }
    return std::nullopt;
  };

  // Primal phase: alternate between the PSD cone and the trace-one slice of
  // the span.  Skipped when the span is traceless, since a nonzero PSD
  // matrix has positive trace.
  Eigen::MatrixXd tmat = project_onto(span_basis, id);
  const double trt = tmat.trace();
  if (trt > 1e-12) {
    Eigen::MatrixXd b = tmat / trt;
    for (int iter = 1; iter <= cfg.max_iterations; ++iter) {
      Eigen::MatrixXd p = clip_eigenvalues(b, 0.0);
      Eigen::MatrixXd next = project_onto(span_basis, p);
      next += ((1.0 - next.trace()) / trt) * tmat;
      const double resid = (p - next).norm();
      const bool converged = resid < cfg.numeric_tolerance;
      if (converged || iter == 1 || iter % 50 == 0)
        if (auto cert = primal_checkpoint(p)) return *cert;
      if (converged || iter % restart_period == 0) {
        // Converged but unroundable, or slow progress: restart from a fresh
        // random point of the slice.
        Eigen::MatrixXd r = Eigen::MatrixXd::Zero(l, l);
        for (const Eigen::MatrixXd& qb : span_basis) r += gauss(rng) * qb;
        b = r + ((1.0 - r.trace()) / trt) * tmat;
      } else {
        b = next;
      }
    }
  }

  // Dual phase: look for a PD matrix in the orthogonal complement of the
  // span by alternating between {X >= I} and the complement, whose exact
  // basis comes from the kernel of the weighted upper-triangle constraints.
  QMatrix con(mcount, l * (l + 1) / 2);
  for (std::size_t t = 0; t < mcount; ++t) {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < l; ++i)
      for (std::size_t j = i; j < l; ++j, ++idx)
        con.at(t, idx) = i == j ? mats[t].at(i, i) : Rational(2) * mats[t].at(i, j);
  }
  std::vector<std::vector<Rational>> kern = kernel_basis(con);
  if (!kern.empty()) {
    std::vector<Eigen::MatrixXd> kd;
    kd.reserve(kern.size());
    for (const auto& kv : kern) kd.push_back(to_eigen(sym_unflatten(kv, l)));
    std::vector<Eigen::MatrixXd> comp_basis = orthonormal_basis(kd);
    Eigen::MatrixXd x = project_onto(comp_basis, id);
    for (int iter = 1; iter <= cfg.max_iterations; ++iter) {
      Eigen::MatrixXd y = clip_eigenvalues(x, 1.0);
      Eigen::MatrixXd next = project_onto(comp_basis, y);
      const double resid = (y - next).norm();
      const bool converged = resid < cfg.numeric_tolerance;
      if (converged || iter == 1 || iter % 50 == 0) {
        // Entrywise rounding; infeasible_from then restores exact
        // orthogonality before the PD test.
        for (const BigInt& cap : caps) {
          QMatrix xr(l, l);
          for (std::size_t i = 0; i < l; ++i)
            for (std::size_t j = i; j < l; ++j) {
              Rational v = round_to_rational(next(i, j), cap);
              xr.at(i, j) = v;
              xr.at(j, i) = v;
            }
          if (auto cert = infeasible_from(xr)) return *cert;
        }
      }
      if (converged || iter % restart_period == 0) {
        Eigen::MatrixXd r = Eigen::MatrixXd::Zero(l, l);
        for (const Eigen::MatrixXd& kb : comp_basis) r += gauss(rng) * kb;
        x = r;
      } else {
        x = next;
      }
    }
  }

  throw UndecidedError("feasibility search exhausted its budget of " +
                       std::to_string(cfg.max_iterations) +
                       " iterations per phase without an exact certificate");
}

std::optional<FeasibleCert> find_affine_psd(const QMatrix& base, const std::vector<QMatrix>& dirs,
                                            const FeasConfig& cfg) {
  const std::size_t l = base.rows;
  if (base.cols != l || !base.is_symmetric())
    throw SizeMismatchError("affine search needs a symmetric square base");
  for (const QMatrix& d : dirs)
    if (d.rows != l || d.cols != l || !d.is_symmetric())
      throw SizeMismatchError("affine search directions must match the base");

  auto attempt = [&](std::vector<Rational> t) -> std::optional<FeasibleCert> {
    QMatrix b = base;
    for (std::size_t i = 0; i < dirs.size(); ++i)
      if (t[i] != 0) b = b + t[i] * dirs[i];
    ExactLdl f = exact_ldl(b);
    if (!f.psd) return std::nullopt;
    return FeasibleCert{std::move(t), std::move(b), std::move(f)};
  };

  std::vector<Rational> origin(dirs.size(), Rational(0));
  if (auto c = attempt(origin)) return c;
  for (std::size_t i = 0; i < dirs.size(); ++i)
    for (int sgn : {1, -1}) {
      std::vector<Rational> t = origin;
      t[i] = sgn;
      if (auto c = attempt(std::move(t))) return c;
    }
  if (dirs.empty()) return std::nullopt;

  Eigen::MatrixXd base_d = to_eigen(base);
  std::vector<Eigen::MatrixXd> dd;
  dd.reserve(dirs.size());
  for (const QMatrix& d : dirs) dd.push_back(to_eigen(d));
  std::vector<Eigen::MatrixXd> dir_basis = orthonormal_basis(dd);
  auto proj_affine = [&](const Eigen::MatrixXd& xm) {
    return base_d + project_onto(dir_basis, xm - base_d);
  };

  Eigen::MatrixXd gd(dirs.size(), dirs.size());
  for (std::size_t s = 0; s < dirs.size(); ++s)
    for (std::size_t t = 0; t < dirs.size(); ++t) gd(s, t) = frob(dd[s], dd[t]);
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> gram_qr(gd);
  const std::vector<BigInt> caps = rounding_ladder(cfg);

  auto checkpoint = [&](const Eigen::MatrixXd& p) -> std::optional<FeasibleCert> {
    Eigen::VectorXd r(dirs.size());
    for (std::size_t t = 0; t < dirs.size(); ++t) r(t) = frob(dd[t], p - base_d);
    Eigen::VectorXd cd = gram_qr.solve(r);
    for (const BigInt& cap : caps) {
      std::vector<Rational> t(dirs.size());
      for (std::size_t i = 0; i < dirs.size(); ++i) t[i] = round_to_rational(cd(i), cap);
      if (auto c = attempt(std::move(t))) return c;
    }
    return std::nullopt;
  };

  std::mt19937 rng(cfg.random_seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const int restart_period = std::max(1, cfg.max_iterations / 5);
  Eigen::MatrixXd x = proj_affine(Eigen::MatrixXd::Identity(l, l));
  for (int iter = 1; iter <= cfg.max_iterations; ++iter) {
    Eigen::MatrixXd p = clip_eigenvalues(x, 0.0);
    Eigen::MatrixXd next = proj_affine(p);
    const double resid = (p - next).norm();
    const bool converged = resid < cfg.numeric_tolerance;
    if (converged || iter == 1 || iter % 50 == 0)
      if (auto c = checkpoint(p)) return c;
    if (converged || iter % restart_period == 0) {
      Eigen::MatrixXd r = Eigen::MatrixXd::Zero(l, l);
      for (const Eigen::MatrixXd& qb : dir_basis) r += gauss(rng) * qb;
      x = base_d + r;
    } else {
      x = next;
    }
  }
  return std::nullopt;
}

std::vector<NcPoly> extract_generators(const FeasibleCert& cert, const Complement& v) {
  const std::size_t n = cert.ldl.perm.size();
  if (v.words.size() != n || cert.ldl.l.rows != n || cert.ldl.d.size() != n)
    throw SizeMismatchError("certificate size does not match the monomial basis");
  std::vector<NcPoly> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (!(cert.ldl.d[i] > 0)) continue;
    NcPoly q;
    for (std::size_t k = i; k < n; ++k) {
      const Rational& c = cert.ldl.l.at(k, i);
      if (c != 0) q += NcPoly::monomial(v.words[cert.ldl.perm[k]], c);
    }
    out.push_back(q);
  }
  return out;
}

} // namespace ncreal
