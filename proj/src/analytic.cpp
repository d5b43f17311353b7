// Copyright 2026 The liouvq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "liouvq/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "liouvq/eigen_solver.hpp"

namespace liouvq {

namespace {

const Complex kImag(0.0, 1.0);

Complex int_pow(Complex base, std::size_t e) {
  Complex out(1.0, 0.0);
  while (e > 0) {
    if (e & 1u) out *= base;
    base *= base;
    e >>= 1u;
  }
  return out;
}

// Sparse-ish Laurent polynomial support on a dense coefficient window.
struct Laurent {
  int lo = 0;  // exponent of c[0]
  std::vector<Complex> c;

  static Laurent zero() { return Laurent{}; }

  static Laurent term(Complex coeff, int power) {
    Laurent p;
    p.lo = power;
    p.c = {coeff};
    return p;
  }

  // z^k - z^{-k}; proportional to sin(k theta) on the unit circle.
  static Laurent sin_basis(int k, Complex coeff) {
    if (k == 0) return zero();
    Laurent p;
    p.lo = -k;
    p.c.assign(std::size_t(2 * k + 1), Complex{});
    p.c.front() = -coeff;
    p.c.back() = coeff;
    return p;
  }

  bool empty() const { return c.empty(); }

  Complex eval(Complex z) const {
    Complex sum{};
    Complex zp = int_pow(z, std::size_t(std::abs(lo)));
    if (lo < 0) zp = Complex(1.0, 0.0) / zp;
    for (const Complex& coeff : c) {
      sum += coeff * zp;
      zp *= z;
    }
    return sum;
  }
};

Laurent operator+(const Laurent& a, const Laurent& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  const int lo = std::min(a.lo, b.lo);
  const int hi = std::max(a.lo + int(a.c.size()), b.lo + int(b.c.size()));
  Laurent out;
  out.lo = lo;
  out.c.assign(std::size_t(hi - lo), Complex{});
  for (std::size_t i = 0; i < a.c.size(); ++i) out.c[std::size_t(a.lo - lo) + i] += a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) out.c[std::size_t(b.lo - lo) + i] += b.c[i];
  return out;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
  if (a.empty() || b.empty()) return Laurent::zero();
  Laurent out;
  out.lo = a.lo + b.lo;
  out.c.assign(a.c.size() + b.c.size() - 1, Complex{});
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == Complex{}) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j) out.c[i + j] += a.c[i] * b.c[j];
  }
  return out;
}

Laurent operator-(const Laurent& a, const Laurent& b) {
  Laurent nb = b;
  for (Complex& v : nb.c) v = -v;
  return a + nb;
}

// Coefficients of sin((m+1)th), sin(mth), sin((m-1)th) and of the lambda
// terms in the secular bracket, shared by the direct evaluation and the
// z-polynomial root solve. bracket = F + lambda * G up to the common factor
// folded into the sin basis.
struct BracketParts {
  Laurent f;
  Laurent g;
};

// Sign convention of the odd-size bracket: the lambda-free sin((m+1)theta)
// coefficient is negative and lambda enters with a plus sign. Fixed by
// matching dense LU determinants of the explicitly built matrix to 1e-14
// over random d1, d2, Gamma draws; the variant with the opposite signs in
// the first term agrees only when Gamma_1 + Gamma_L = 0.
BracketParts bracket_parts(const SecularParams& p) {
  const Complex d1 = p.d1;
  const Complex d2 = p.d2;
  const double g1 = p.gamma_1;
  const double gl = p.gamma_l;
  const int m = int(p.m);

  BracketParts parts;
  if (p.parity == Parity::odd) {
    parts.f = Laurent::sin_basis(m + 1, -d1 * d2 * 0.5 * (g1 + gl)) +
              Laurent::sin_basis(m, Complex(-0.5) * (d1 * d1 * g1 + d2 * d2 * gl));
    parts.g = Laurent::sin_basis(m + 1, -d1 * d2) +
              Laurent::sin_basis(m, Complex(-0.25 * g1 * gl));
  } else {
    parts.f = Laurent::sin_basis(m, Complex(0.25 * g1 * gl) + d2 * d2) +
              Laurent::sin_basis(m + 1, d1 * d2) +
              Laurent::sin_basis(m - 1, Complex(0.25 * g1 * gl) * (d1 / d2));
    parts.g = Laurent::sin_basis(m, Complex(0.5 * (g1 + gl)));
  }
  return parts;
}

// lambda^2 as a Laurent polynomial in z.
Laurent lambda_squared_poly(const SecularParams& p) {
  return Laurent::term(p.d1 * p.d1 + p.d2 * p.d2, 0) +
         Laurent::term(p.d1 * p.d2, 1) + Laurent::term(p.d1 * p.d2, -1);
}

void check_even_d2(const SecularParams& p) {
  if (p.parity == Parity::even && std::abs(p.d2) < 1e-14)
    throw Error(ErrorCode::ZeroD2,
                "even-size secular form divides by d2; use the block route");
}

// Newton polish of an approximate eigenvalue on det(Q - lambda I), with the
// value and derivative evaluated by a joint three-term recurrence. The
// common rescale keeps the ratio intact while avoiding overflow. Reports
// whether the iteration actually converged: stall points between
// near-degenerate roots must not be mistaken for roots.
struct NewtonResult {
  Complex lambda{};
  bool converged = false;
};

// Evaluate det(Q - lambda I) and its lambda-derivative by a joint
// three-term recurrence with a common rescale (the Newton ratio survives).
void charpoly_value_derivative(const ComplexMatrix& q, Complex lambda,
                               Complex* value, Complex* derivative) {
  const std::size_t n = q.rows();
  Complex d_prev(1.0, 0.0);
  Complex d = q(0, 0) - lambda;
  Complex p_prev{};
  Complex p(-1.0, 0.0);
  for (std::size_t k = 1; k < n; ++k) {
    const Complex off = q(k - 1, k) * q(k, k - 1);
    const Complex diag = q(k, k) - lambda;
    const Complex d_next = diag * d - off * d_prev;
    const Complex p_next = -d + diag * p - off * p_prev;
    d_prev = d;
    d = d_next;
    p_prev = p;
    p = p_next;
    const double mag =
        std::max({std::abs(d), std::abs(d_prev), std::abs(p), std::abs(p_prev)});
    if (mag > 1e100) {
      d_prev /= mag;
      d /= mag;
      p_prev /= mag;
      p /= mag;
    }
  }
  *value = d;
  *derivative = p;
}

NewtonResult newton_refine(const ComplexMatrix& q, Complex lambda, int steps) {
  if (q.rows() == 0) return {lambda, true};
  double last_step = std::numeric_limits<double>::infinity();
  for (int it = 0; it < steps; ++it) {
    Complex value, derivative;
    charpoly_value_derivative(q, lambda, &value, &derivative);
    if (std::abs(derivative) == 0.0) break;
    const Complex delta = value / derivative;
    lambda -= delta;
    last_step = std::abs(delta);
    if (last_step <= 1e-15 * std::max(1.0, std::abs(lambda))) break;
  }
  return {lambda, last_step <= 1e-11 * std::max(1.0, std::abs(lambda))};
}

// Maehly-deflated Newton: iterates on p(lambda) / prod (lambda - r_j), which
// repels from the already-located roots and converges on a missing member
// of a tight cluster that plain Newton keeps folding into its neighbors.
NewtonResult newton_deflated(const ComplexMatrix& q, Complex lambda,
                             const std::vector<Complex>& known, int steps) {
  if (q.rows() == 0) return {lambda, true};
  double last_step = std::numeric_limits<double>::infinity();
  for (int it = 0; it < steps; ++it) {
    Complex value, derivative;
    charpoly_value_derivative(q, lambda, &value, &derivative);
    Complex repulsion{};
    bool too_close = false;
    for (const Complex& r : known) {
      const Complex gap = lambda - r;
      if (std::abs(gap) < 1e-14) {
        too_close = true;
        break;
      }
      repulsion += Complex(1.0, 0.0) / gap;
    }
    if (too_close) {
      lambda += Complex(1e-10, 1e-10);
      continue;
    }
    const Complex denom = derivative - value * repulsion;
    if (std::abs(denom) == 0.0) break;
    const Complex delta = value / denom;
    lambda -= delta;
    last_step = std::abs(delta);
    if (last_step <= 1e-15 * std::max(1.0, std::abs(lambda))) break;
  }
  return {lambda, last_step <= 1e-11 * std::max(1.0, std::abs(lambda))};
}

}  // namespace

SecularParams secular_params(const XYChainParams& params, Sign sign) {
  validate_params(params);
  SecularParams p;
  const std::size_t L = params.num_sites;
  p.parity = (L % 2 == 1) ? Parity::odd : Parity::even;
  p.m = (L % 2 == 1) ? (L - 1) / 2 : L / 2;
  const double j = params.coupling;
  const double g = params.anisotropy;
  const double s = sign == Sign::plus ? 1.0 : -1.0;
  p.d1 = -kImag * j * (1.0 - s * g) * 0.5;
  p.d2 = -kImag * j * (1.0 + s * g) * 0.5;
  p.gamma_1 = params.gamma_1();
  p.gamma_l = params.gamma_l();
  return p;
}

ComplexMatrix secular_matrix(const SecularParams& p) {
  const std::size_t L = p.matrix_size();
  ComplexMatrix q(L, L);
  q(0, 0) = Complex(-0.5 * p.gamma_1, 0.0);
  q(L - 1, L - 1) = Complex(-0.5 * p.gamma_l, 0.0);
  for (std::size_t k = 0; k + 1 < L; ++k) {
    const Complex e = (k % 2 == 0) ? p.d1 : p.d2;
    q(k, k + 1) = e;
    q(k + 1, k) = e;
  }
  return q;
}

Complex secular_determinant(Complex theta, Complex lambda,
                            const SecularParams& p) {
  const Complex sin_theta = std::sin(theta);
  if (std::abs(sin_theta) <= 1e-12)
    throw Error(ErrorCode::SingularTheta,
                "sin(theta) below 1e-12; evaluate the z-polynomial instead");
  check_even_d2(p);

  const double m = double(p.m);
  const Complex d1 = p.d1;
  const Complex d2 = p.d2;
  const double g1 = p.gamma_1;
  const double gl = p.gamma_l;

  Complex bracket;
  if (p.parity == Parity::odd) {
    bracket = -d1 * d2 * (0.5 * (g1 + gl) + lambda) * std::sin((m + 1) * theta) -
              (0.25 * g1 * gl * lambda + 0.5 * (d1 * d1 * g1 + d2 * d2 * gl)) *
                  std::sin(m * theta);
  } else {
    bracket = (0.25 * g1 * gl + d2 * d2 + 0.5 * (g1 + gl) * lambda) *
                  std::sin(m * theta) +
              d1 * d2 * std::sin((m + 1) * theta) +
              0.25 * g1 * gl * (d1 / d2) * std::sin((m - 1) * theta);
  }
  return int_pow(d1 * d2, p.m - 1) / sin_theta * bracket;
}

std::pair<Complex, Complex> lambda_from_theta(Complex theta, Complex d1,
                                              Complex d2) {
  const Complex l2 = d1 * d1 + d2 * d2 + 2.0 * d1 * d2 * std::cos(theta);
  Complex r = std::sqrt(l2);
  if (r.real() < 0.0 || (r.real() == 0.0 && r.imag() < 0.0)) r = -r;
  return {r, -r};
}

CharpolyEval tridiag_charpoly_eval(const ComplexMatrix& q, Complex lambda) {
  const std::size_t n = q.rows();
  CharpolyEval out;
  if (n == 0) {
    out.det = Complex(1.0, 0.0);
    out.relative = 1.0;
    return out;
  }

  // Three-term recurrence with running-magnitude normalization.
  Complex prev(1.0, 0.0);           // D_0
  Complex cur = q(0, 0) - lambda;   // D_1
  double log_scale = 0.0;
  double peak_log = std::max(0.0, std::log(std::max(std::abs(cur), 1e-300)));

  for (std::size_t k = 1; k < n; ++k) {
    const Complex offdiag = q(k - 1, k) * q(k, k - 1);
    const Complex next = (q(k, k) - lambda) * cur - offdiag * prev;
    prev = cur;
    cur = next;
    const double mag = std::max(std::abs(cur), std::abs(prev));
    if (mag > 1e100) {
      prev /= mag;
      cur /= mag;
      log_scale += std::log(mag);
    }
    if (std::abs(cur) > 0.0)
      peak_log = std::max(peak_log, log_scale + std::log(std::abs(cur)));
  }

  out.det = cur * std::exp(log_scale);
  const double final_log =
      std::abs(cur) > 0.0 ? log_scale + std::log(std::abs(cur)) : -1e300;
  out.relative = std::exp(final_log - peak_log);
  return out;
}

std::vector<Complex> companion_roots(const std::vector<Complex>& coeffs) {
  double max_mag = 0.0;
  for (const Complex& c : coeffs) max_mag = std::max(max_mag, std::abs(c));
  if (max_mag == 0.0)
    throw Error(ErrorCode::PolynomialIllConditioned,
                "all polynomial coefficients vanish");
  const double tol = 1e-14 * max_mag;

  std::size_t hi = coeffs.size();
  while (hi > 0 && std::abs(coeffs[hi - 1]) <= tol) --hi;
  if (hi <= 1)
    throw Error(ErrorCode::PolynomialIllConditioned,
                "polynomial degenerates to a constant after trimming");
  std::size_t lo = 0;
  while (lo < hi && std::abs(coeffs[lo]) <= tol) ++lo;

  std::vector<Complex> roots(lo, Complex{});  // exact zeros from z^lo factor

  const std::size_t d = hi - 1 - lo;
  if (d == 0) return roots;
  const Complex lead = coeffs[hi - 1];
  ComplexMatrix companion(d, d);
  for (std::size_t i = 0; i + 1 < d; ++i) companion(i + 1, i) = 1.0;
  for (std::size_t i = 0; i < d; ++i)
    companion(i, d - 1) = -coeffs[lo + i] / lead;

  std::vector<Complex> ev = eigenvalues(std::move(companion));
  roots.insert(roots.end(), ev.begin(), ev.end());
  return roots;
}

std::vector<SecularRoot> solve_secular(const SecularParams& p) {
  if (std::abs(p.d1 * p.d2) <= 1e-14)
    throw Error(ErrorCode::InvalidParams,
                "d1*d2 vanishes; the secular form degenerates (use the "
                "block-decomposition spectrum)");
  check_even_d2(p);

  const std::size_t L = p.matrix_size();
  const ComplexMatrix q = secular_matrix(p);
  const BracketParts parts = bracket_parts(p);
  const Laurent lambda2 = lambda_squared_poly(p);

  // F(z) + lambda G(z) = 0 and lambda^2 = Lambda(z) imply
  // F^2 - Lambda G^2 = 0, a Laurent polynomial in z.
  Laurent h = parts.f * parts.f - lambda2 * (parts.g * parts.g);
  if (h.empty())
    throw Error(ErrorCode::PolynomialIllConditioned,
                "secular polynomial vanishes identically");

  const std::vector<Complex> zs = companion_roots(h.c);

  struct Candidate {
    Complex lambda;
    int branch;
    double charpoly_rel;
  };
  std::vector<Candidate> accepted;
  // Companion roots carry a few lost digits; polish every candidate on the
  // explicit matrix until converged so true roots pass the gate cleanly and
  // duplicates agree to machine precision. Inside tight eigenvalue clusters
  // the characteristic polynomial drops below the noise floor and Newton
  // may hop onto a neighbor, so a raw seed that already passes the filter
  // is kept as well; duplicates collapse in the deduplication.
  auto try_candidate = [&](Complex seed, int branch) {
    const NewtonResult polished = newton_refine(q, seed, 60);
    const double rel = tridiag_charpoly_eval(q, polished.lambda).relative;
    if (polished.converged && rel < 1e-6)
      accepted.push_back({polished.lambda, branch, rel});
  };

  for (const Complex& z : zs) {
    if (std::abs(z) < 1e-12) continue;  // z = e^{i theta} never vanishes
    const Complex l2 = lambda2.eval(z);
    Complex principal = std::sqrt(l2);
    if (principal.real() < 0.0 ||
        (principal.real() == 0.0 && principal.imag() < 0.0))
      principal = -principal;
    try_candidate(principal, +1);
    if (std::abs(principal) >= 1e-14) try_candidate(-principal, -1);
  }

  // Boundary-localized modes and near-decoupled couplings sit at extreme
  // |z|, where high-degree polynomial roots lose precision. The block
  // spectra of the two decoupled limits (either alternating coupling
  // zeroed) land inside the Newton basins in exactly those regimes, so add
  // them as extra seeds; anything spurious fails the filter or collapses in
  // the deduplication.
  for (bool zero_first : {true, false}) {
    SecularParams limit = p;
    (zero_first ? limit.d1 : limit.d2) = Complex{};
    for (const Complex& seed : block_spectrum(limit)) {
      Complex principal = std::sqrt(seed * seed);
      const int branch =
          std::abs(seed - principal) <= std::abs(seed + principal) ? +1 : -1;
      try_candidate(seed, branch);
    }
  }

  std::sort(accepted.begin(), accepted.end(),
            [](const Candidate& a, const Candidate& b) {
              if (a.lambda.real() != b.lambda.real())
                return a.lambda.real() < b.lambda.real();
              if (a.lambda.imag() != b.lambda.imag())
                return a.lambda.imag() < b.lambda.imag();
              return a.charpoly_rel < b.charpoly_rel;
            });

  // Duplicates (z <-> 1/z, branch sweep, basin hops) can interleave after
  // sorting, so compare against every kept root.
  std::vector<Candidate> unique_roots;
  auto is_new = [&](Complex lambda) {
    for (const Candidate& kept : unique_roots)
      if (std::abs(lambda - kept.lambda) < 1e-8) return false;
    return true;
  };
  for (const Candidate& cand : accepted)
    if (is_new(cand.lambda)) unique_roots.push_back(cand);

  // Exponentially tight clusters can starve a root: several candidates fold
  // into the same neighbor. Deflated Newton from perturbed seeds around the
  // located roots repels from them and picks up the missing members.
  for (int pass = 0; pass < 3 && unique_roots.size() < L; ++pass) {
    std::vector<Complex> known;
    known.reserve(unique_roots.size());
    for (const Candidate& u : unique_roots) known.push_back(u.lambda);

    std::vector<Complex> seeds;
    for (const Complex& r : known) {
      const double h = 1e-6 * std::max(1.0, std::abs(r));
      seeds.push_back(r + Complex(h, 0.0));
      seeds.push_back(r - Complex(h, 0.0));
      seeds.push_back(r + Complex(0.0, h));
      seeds.push_back(r - Complex(0.0, h));
    }
    for (const Candidate& cand : accepted) seeds.push_back(cand.lambda);

    for (const Complex& seed : seeds) {
      if (unique_roots.size() >= L) break;
      const NewtonResult res = newton_deflated(q, seed, known, 80);
      if (!res.converged || !is_new(res.lambda)) continue;
      const double rel = tridiag_charpoly_eval(q, res.lambda).relative;
      if (rel >= 1e-6) continue;
      Complex principal = std::sqrt(res.lambda * res.lambda);
      if (principal.real() < 0.0 ||
          (principal.real() == 0.0 && principal.imag() < 0.0))
        principal = -principal;
      const int branch =
          std::abs(res.lambda - principal) <= std::abs(res.lambda + principal)
              ? +1
              : -1;
      unique_roots.push_back({res.lambda, branch, rel});
      known.push_back(res.lambda);
    }
  }

  std::sort(unique_roots.begin(), unique_roots.end(),
            [](const Candidate& a, const Candidate& b) {
              if (a.lambda.real() != b.lambda.real())
                return a.lambda.real() < b.lambda.real();
              return a.lambda.imag() < b.lambda.imag();
            });

  std::vector<SecularRoot> roots;
  for (const Candidate& cand : unique_roots) {
    SecularRoot root;
    root.lambda = cand.lambda;
    // Re-derive theta from the polished eigenvalue so theta and lambda stay
    // an exact pair under the cosine relation.
    const Complex cos_theta =
        (cand.lambda * cand.lambda - p.d1 * p.d1 - p.d2 * p.d2) /
        (2.0 * p.d1 * p.d2);
    root.theta = std::acos(cos_theta);
    root.branch = cand.branch;
    root.charpoly_residual = cand.charpoly_rel;
    // Residual of the secular bracket itself, scaled by its largest term.
    const Complex zr = std::exp(kImag * root.theta);
    const Complex fv = parts.f.eval(zr);
    const Complex gv = parts.g.eval(zr);
    const double denom =
        std::max({std::abs(fv), std::abs(cand.lambda * gv), 1e-300});
    root.det_residual = std::abs(fv + cand.lambda * gv) / denom;
    roots.push_back(root);
  }

  if (roots.size() != L) {
    std::ostringstream msg;
    msg << "expected " << L << " roots, found " << roots.size() << " (from "
        << zs.size() << " polynomial roots, " << accepted.size()
        << " accepted candidates)";
    throw Error(ErrorCode::RootCountMismatch, msg.str());
  }
  return roots;
}

std::vector<Complex> block_spectrum(const SecularParams& p) {
  const std::size_t L = p.matrix_size();
  const ComplexMatrix q = secular_matrix(p);
  const double scale = std::max(1.0, q.max_abs());

  std::vector<Complex> values;
  values.reserve(L);
  std::size_t k = 0;
  while (k < L) {
    const bool bonded = k + 1 < L && std::abs(q(k, k + 1)) > 1e-14 * scale;
    if (!bonded) {
      values.push_back(q(k, k));
      ++k;
      continue;
    }
    if (k + 2 < L && std::abs(q(k + 1, k + 2)) > 1e-14 * scale)
      throw Error(ErrorCode::InvalidParams,
                  "block decomposition needs every other bond to vanish");
    const Complex v1 = q(k, k);
    const Complex v2 = q(k + 1, k + 1);
    const Complex e = q(k, k + 1);
    const Complex mid = 0.5 * (v1 + v2);
    const Complex disc = std::sqrt(0.25 * (v1 - v2) * (v1 - v2) + e * e);
    values.push_back(mid + disc);
    values.push_back(mid - disc);
    k += 2;
  }
  return values;
}

std::vector<Complex> ising_allowed_set(double coupling, double gamma_1,
                                       double gamma_l) {
  std::vector<Complex> set;
  set.push_back(Complex(0.0, coupling));
  set.push_back(Complex(0.0, -coupling));
  for (double g : {gamma_1, gamma_l}) {
    set.push_back(Complex(-0.5 * g, 0.0));
    const Complex disc = std::sqrt(Complex(g * g - 16.0 * coupling * coupling, 0.0));
    set.push_back(Complex(-0.25 * g, 0.0) + 0.25 * disc);
    set.push_back(Complex(-0.25 * g, 0.0) - 0.25 * disc);
  }
  std::sort(set.begin(), set.end(), [](const Complex& a, const Complex& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  std::vector<Complex> unique;
  for (const Complex& v : set)
    if (unique.empty() || std::abs(v - unique.back()) > 1e-12)
      unique.push_back(v);
  return unique;
}

std::vector<Complex> ising_spectrum(const XYChainParams& params) {
  validate_params(params);
  if (std::abs(std::abs(params.anisotropy) - 1.0) > 1e-12)
    throw Error(ErrorCode::NotIsing,
                "closed-form spectrum requires |gamma| = 1");
  if (params.field != 0.0)
    throw Error(ErrorCode::AnsatzViolation,
                "closed-form spectrum requires zero transverse field");

  std::vector<Complex> values = block_spectrum(secular_params(params, Sign::plus));
  std::vector<Complex> minus = block_spectrum(secular_params(params, Sign::minus));
  values.insert(values.end(), minus.begin(), minus.end());
  std::sort(values.begin(), values.end(), [](const Complex& a, const Complex& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return values;
}

}  // namespace liouvq
