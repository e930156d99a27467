// Copyright 2026 The permlo Authors
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

#include "permlo/gap.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "permlo/error.hpp"
#include "permlo/parallel.hpp"

namespace permlo {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

template <class T>
T abs_of(const T& x) {
  return x < 0 ? T(-x) : x;
}

template <class T>
T from_big(const BigInt& z) {
  if constexpr (std::is_same_v<T, BigInt>) {
    return z;
  } else {
    return static_cast<T>(z.get_si());
  }
}

BigInt big(long x) { return BigInt(x); }

void check_volume(const Gap& q, const GapOptions& opt) {
  if (q.volume() > BigInt(static_cast<unsigned long>(opt.cap)))
    throw CapacityError("GAP volume " + to_string(q.volume()) + " exceeds the enumeration cap " +
                        std::to_string(opt.cap));
}

// Calls f(m_1 .. m_r) over the box in odometer order.
template <class F>
void for_each_point(const Gap& q, F f) {
  const std::size_t r = q.rank();
  std::vector<long> m(r);
  for (std::size_t s = 0; s < r; ++s) m[s] = q.dims[s].first;
  while (true) {
    f(m);
    std::size_t s = 0;
    while (s < r && m[s] == q.dims[s].second) {
      m[s] = q.dims[s].first;
      ++s;
    }
    if (s == r) return;
    ++m[s];
  }
}

// The GAP and tolerance on the integer scale D, answering "within alpha of Q".
template <class T>
class Membership {
 public:
  Membership(const Gap& q, const BigInt& scale, const Rational& alpha, const GapOptions& opt) {
    auto to_t = [&](const Rational& x) {
      Rational y = x * scale;
      if (y.get_den() != 1) throw ArgumentError("internal: scale does not clear denominators");
      return from_big<T>(y.get_num());
    };
    alpha_ = to_t(alpha);
    g0_ = to_t(q.g0);
    rank_ = q.rank();
    if (rank_ == 1) {
      g_ = to_t(q.generators[0]);
      lo_ = from_big<T>(big(q.dims[0].first));
      hi_ = from_big<T>(big(q.dims[0].second));
      if (g_ < 0) {
        g_ = -g_;
        T t = lo_;
        lo_ = -hi_;
        hi_ = -t;
      }
    } else if (rank_ > 1) {
      check_volume(q, opt);
      std::vector<T> gens;
      for (const auto& g : q.generators) gens.push_back(to_t(g));
      for_each_point(q, [&](const std::vector<long>& m) {
        T x = g0_;
        for (std::size_t s = 0; s < rank_; ++s) x += gens[s] * T(m[s]);
        points_.push_back(x);
      });
      std::sort(points_.begin(), points_.end());
      points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
    }
  }

  bool operator()(const T& x) const {
    if (rank_ == 0) return abs_of<T>(x - g0_) <= alpha_;
    if (rank_ == 1) {
      const T off = x - g0_;
      if (g_ == 0) return abs_of<T>(off) <= alpha_;
      T m0 = floor_div(off, g_);
      for (T m : {m0, T(m0 + 1)}) {
        m = std::clamp(m, lo_, hi_);
        if (abs_of<T>(off - m * g_) <= alpha_) return true;
      }
      return false;
    }
    auto it = std::lower_bound(points_.begin(), points_.end(), T(x - alpha_));
    return it != points_.end() && *it <= x + alpha_;
  }

 private:
  std::size_t rank_ = 0;
  T alpha_{}, g0_{}, g_{}, lo_{}, hi_{};
  std::vector<T> points_;
};

BigInt lcm_den(BigInt acc, const Rational& x) {
  mpz_lcm(acc.get_mpz_t(), acc.get_mpz_t(), x.get_den_mpz_t());
  return acc;
}

BigInt gap_scale(const Gap& q, const Rational& alpha, BigInt base) {
  base = lcm_den(base, q.g0);
  for (const auto& g : q.generators) base = lcm_den(base, g);
  return lcm_den(base, alpha);
}

// Largest magnitude of any GAP point, query or tolerance on the scale.
BigInt gap_extent(const Gap& q, const Rational& alpha, const BigInt& scale) {
  Rational e = abs(q.g0);
  for (std::size_t s = 0; s < q.rank(); ++s)
    e += abs(q.generators[s]) * std::max(std::labs(q.dims[s].first), std::labs(q.dims[s].second));
  e = (e + abs(alpha)) * scale;
  BigInt out;
  mpz_cdiv_q(out.get_mpz_t(), e.get_num_mpz_t(), e.get_den_mpz_t());
  return out;
}

const BigInt kInt64Safe = BigInt(1) << 60;

CoverageReport finish(std::uint64_t covered, std::uint64_t total, const Rational& alpha) {
  CoverageReport r;
  r.covered = covered;
  r.total = total;
  r.fraction = Rational(BigInt(static_cast<unsigned long>(covered)), BigInt(static_cast<unsigned long>(total)));
  r.fraction.canonicalize();
  r.alpha = alpha;
  return r;
}

void check_coverage_args(std::size_t n, const Rational& alpha, const CoverageOptions& opt) {
  detail::require(alpha >= 0, "tolerance alpha must be nonnegative");
  if (n > opt.max_n)
    throw CapacityError("n = " + std::to_string(n) + " exceeds the coverage limit " + std::to_string(opt.max_n));
}

template <class T>
std::uint64_t count_array(const std::vector<T>& a, std::size_t n, const Membership<T>& in, bool nondegenerate,
                          unsigned workers) {
  std::vector<std::uint64_t> partial(n, 0);
  parallel_blocks(n, workers, [&](std::size_t begin, std::size_t end, unsigned) {
    for (std::size_t i = begin; i < end; ++i) {
      std::uint64_t c = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (nondegenerate && i == j) continue;
        for (std::size_t k = 0; k < n; ++k) {
          if (nondegenerate) {
            for (std::size_t l = 0; l < n; ++l)
              if (k != l) c += in(T(a[i * n + k] - a[j * n + k] - a[i * n + l] + a[j * n + l]));
          } else {
            for (std::size_t l = 0; l < n; ++l) c += in(T(a[i * n + k] - a[j * n + k] - a[i * n + l] + a[j * n + l]));
          }
        }
      }
      partial[i] = c;
    }
  });
  std::uint64_t total = 0;
  for (auto c : partial) total += c;
  return total;
}

template <class T>
std::uint64_t count_products(const std::vector<std::pair<T, std::uint64_t>>& dw,
                             const std::vector<std::pair<T, std::uint64_t>>& dv, const Membership<T>& in,
                             unsigned workers) {
  std::vector<std::uint64_t> partial(dw.size(), 0);
  parallel_blocks(dw.size(), workers, [&](std::size_t begin, std::size_t end, unsigned) {
    for (std::size_t i = begin; i < end; ++i) {
      std::uint64_t c = 0;
      for (const auto& [y, cy] : dv)
        if (in(T(dw[i].first * y))) c += cy;
      partial[i] = c * dw[i].second;
    }
  });
  std::uint64_t total = 0;
  for (auto c : partial) total += c;
  return total;
}

std::map<Rational, std::uint64_t> difference_counts(std::span<const Rational> x, bool nondegenerate) {
  std::map<Rational, std::uint64_t> out;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (nondegenerate && i == j) continue;
      ++out[x[i] - x[j]];
    }
  return out;
}

}  // namespace

bool Gap::symmetric() const {
  if (g0 != 0) return false;
  return std::all_of(dims.begin(), dims.end(), [](const auto& d) { return d.first == -d.second; });
}

BigInt Gap::volume() const {
  BigInt v = 1;
  for (const auto& [lo, hi] : dims) v *= BigInt(hi) - BigInt(lo) + 1;
  return v;
}

Gap make_gap(Rational g0, std::vector<Rational> generators, std::vector<std::pair<long, long>> dims) {
  detail::require(generators.size() == dims.size(), "GAP needs one dimension bound pair per generator");
  for (const auto& [lo, hi] : dims) detail::require(lo <= hi, "GAP dimension bounds need lower <= upper");
  return Gap{std::move(g0), std::move(generators), std::move(dims)};
}

Gap symmetric_gap(std::vector<Rational> generators, std::span<const long> bounds) {
  detail::require(generators.size() == bounds.size(), "GAP needs one bound per generator");
  std::vector<std::pair<long, long>> dims;
  for (long b : bounds) {
    detail::require(b >= 0, "symmetric GAP bounds must be nonnegative");
    dims.emplace_back(-b, b);
  }
  return make_gap(0, std::move(generators), std::move(dims));
}

std::map<Rational, std::uint64_t> gap_enumerate(const Gap& q, const GapOptions& opt) {
  check_volume(q, opt);
  std::map<Rational, std::uint64_t> out;
  for_each_point(q, [&](const std::vector<long>& m) {
    Rational x = q.g0;
    for (std::size_t s = 0; s < q.rank(); ++s) x += q.generators[s] * m[s];
    ++out[x];
  });
  return out;
}

bool is_proper(const Gap& q, const GapOptions& opt) {
  return BigInt(static_cast<unsigned long>(gap_enumerate(q, opt).size())) == q.volume();
}

Gap gap_dilate(const Gap& q, long k) {
  detail::require(k >= 1, "dilation factor must be positive");
  Gap out = q;
  out.g0 *= k;
  for (auto& [lo, hi] : out.dims) {
    lo *= k;
    hi *= k;
  }
  return out;
}

bool gap_contains(const Gap& q, const Rational& x, const Rational& alpha, const GapOptions& opt) {
  detail::require(alpha >= 0, "tolerance alpha must be nonnegative");
  BigInt scale = lcm_den(gap_scale(q, alpha, 1), x);
  Membership<BigInt> in(q, scale, alpha, opt);
  Rational xs = x * scale;
  return in(xs.get_num());
}

CoverageReport quadruple_coverage(const SquareArray& a, const Gap& q, const Rational& alpha,
                                  const CoverageOptions& opt) {
  const std::size_t n = a.n();
  check_coverage_args(n, alpha, opt);
  const ScaledArray s = scale_array(a);
  const BigInt scale = gap_scale(q, alpha, s.denominator);
  const BigInt factor = scale / s.denominator;
  std::vector<BigInt> scaled(s.numerators.size());
  BigInt amax = 0;
  for (std::size_t k = 0; k < scaled.size(); ++k) {
    scaled[k] = s.numerators[k] * factor;
    amax = std::max(amax, abs(scaled[k]));
  }
  const std::uint64_t nn = static_cast<std::uint64_t>(n);
  const std::uint64_t total = opt.nondegenerate_only ? (nn * (nn - 1)) * (nn * (nn - 1)) : nn * nn * nn * nn;
  std::uint64_t covered = 0;
  if (4 * amax < kInt64Safe && gap_extent(q, alpha, scale) < kInt64Safe) {
    std::vector<std::int64_t> a64;
    for (const auto& x : scaled) a64.push_back(x.get_si());
    covered = count_array(a64, n, Membership<std::int64_t>(q, scale, alpha, opt.gap), opt.nondegenerate_only,
                          opt.workers);
  } else {
    covered = count_array(scaled, n, Membership<BigInt>(q, scale, alpha, opt.gap), opt.nondegenerate_only,
                          opt.workers);
  }
  return finish(covered, total, alpha);
}

CoverageReport quadruple_coverage(const WeightValuePair& p, const Gap& q, const Rational& alpha,
                                  const CoverageOptions& opt) {
  const std::size_t n = p.n();
  detail::require(n >= 1 && p.v.size() == n, "malformed weight/value pair");
  check_coverage_args(n, alpha, opt);
  const auto cw = difference_counts(p.w, opt.nondegenerate_only);
  const auto cv = difference_counts(p.v, opt.nondegenerate_only);
  std::vector<Rational> keys_w, keys_v;
  for (const auto& kv : cw) keys_w.push_back(kv.first);
  for (const auto& kv : cv) keys_v.push_back(kv.first);
  const ScaledIntegers sw = common_denominator(keys_w);
  const ScaledIntegers sv = common_denominator(keys_v);
  const BigInt scale = gap_scale(q, alpha, sw.denominator * sv.denominator);
  const BigInt factor = scale / (sw.denominator * sv.denominator);
  BigInt wmax = 0, vmax = 0;
  std::vector<std::pair<BigInt, std::uint64_t>> bw, bv;
  std::size_t k = 0;
  for (const auto& [x, c] : cw) {
    bw.emplace_back(sw.numerators[k++] * factor, c);
    wmax = std::max(wmax, abs(bw.back().first));
  }
  k = 0;
  for (const auto& [x, c] : cv) {
    bv.emplace_back(sv.numerators[k++], c);
    vmax = std::max(vmax, abs(bv.back().first));
  }
  const std::uint64_t nn = static_cast<std::uint64_t>(n);
  const std::uint64_t total = opt.nondegenerate_only ? (nn * (nn - 1)) * (nn * (nn - 1)) : nn * nn * nn * nn;
  std::uint64_t covered = 0;
  if (wmax * vmax < kInt64Safe && gap_extent(q, alpha, scale) < kInt64Safe) {
    std::vector<std::pair<std::int64_t, std::uint64_t>> w64, v64;
    for (const auto& [x, c] : bw) w64.emplace_back(x.get_si(), c);
    for (const auto& [x, c] : bv) v64.emplace_back(x.get_si(), c);
    covered = count_products(w64, v64, Membership<std::int64_t>(q, scale, alpha, opt.gap), opt.workers);
  } else {
    covered = count_products(bw, bv, Membership<BigInt>(q, scale, alpha, opt.gap), opt.workers);
  }
  return finish(covered, total, alpha);
}

double gap_pigeonhole_bound(const SquareArray& a, const Gap& q, double c_cheb, const CoverageOptions& opt) {
  detail::require(std::isfinite(c_cheb) && c_cheb > 0, "Chebyshev constant must be positive");
  if (!q.symmetric()) throw PreconditionError("pigeonhole bound needs a symmetric GAP");
  for (const auto& d : q.dims)
    if (d.second < 1) throw PreconditionError("pigeonhole bound needs every dimension bound N_i >= 1");
  CoverageOptions full = opt;
  full.nondegenerate_only = false;
  const CoverageReport cov = quadruple_coverage(a, q, 0, full);
  if (cov.covered != cov.total)
    throw PreconditionError("pigeonhole bound needs every quadruple difference in Q; coverage is " +
                            to_string(cov.fraction));
  const auto r = static_cast<double>(q.rank());
  const double numerator = 1.0 - 16.0 * r / (c_cheb * c_cheb);
  if (numerator <= 0) return 0.0;
  double denom = std::pow(3.0 * c_cheb, r) * std::pow(static_cast<double>(a.n()), r / 2.0);
  for (const auto& d : q.dims) denom *= static_cast<double>(d.second);
  return numerator / denom;
}

std::optional<Gap> fit_rank1_gap(std::span<const Rational> values, long max_size) {
  detail::require(!values.empty(), "fit_rank1_gap: no values");
  const ScaledIntegers s = common_denominator(values);
  BigInt g = 0, top = 0;
  for (const auto& x : s.numerators) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    top = std::max(top, abs(x));
  }
  if (g == 0) return make_gap(0, {}, {});
  const BigInt bound = top / g;
  if (bound > BigInt(max_size)) return std::nullopt;
  Rational step(g, s.denominator);
  step.canonicalize();
  const long b = bound.get_si();
  return symmetric_gap({step}, std::span<const long>(&b, 1));
}

}  // namespace permlo
