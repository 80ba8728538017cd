/*
 * Copyright 2026 The ffnt Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "ffnt/cyclosum.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>

namespace ffnt {

namespace {

constexpr double kTau = 6.283185307179586476925286766559;

// Exact division of integer polynomials (divisor monic). Throws if inexact.
std::vector<std::int64_t> exact_div(std::vector<std::int64_t> a,
                                    const std::vector<std::int64_t>& b) {
  std::vector<std::int64_t> q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  while (a.size() >= b.size() && !a.empty()) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    if (a.size() < b.size()) break;
    std::int64_t c = a.back();
    std::size_t d = a.size() - b.size();
    q[d] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[d + i] -= c * b[i];
  }
  for (std::int64_t r : a)
    if (r != 0) throw std::logic_error("inexact cyclotomic division");
  return q;
}

}  // namespace

std::vector<std::int64_t> cyclotomic_poly(std::uint64_t n) {
  static std::map<std::uint64_t, std::vector<std::int64_t>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lk(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  std::function<std::vector<std::int64_t>(std::uint64_t)> phi =
      [&](std::uint64_t m) -> std::vector<std::int64_t> {
    auto it2 = cache.find(m);
    if (it2 != cache.end()) return it2->second;
    // x^m - 1 divided by Phi_d for all proper divisors d of m.
    std::vector<std::int64_t> num(m + 1, 0);
    num[0] = -1;
    num[m] = 1;
    for (std::uint64_t d = 1; d < m; ++d)
      if (m % d == 0) num = exact_div(std::move(num), phi(d));
    cache[m] = num;
    return num;
  };
  return phi(n);
}

CycloSum& CycloSum::operator+=(const CycloSum& o) {
  if (o.n_ != n_) throw std::invalid_argument("CycloSum order mismatch");
  for (std::uint64_t i = 0; i < n_; ++i) counts_[i] += o.counts_[i];
  return *this;
}

CycloSum CycloSum::conjugate() const {
  CycloSum r(n_);
  for (std::uint64_t i = 0; i < n_; ++i) r.counts_[(n_ - i) % n_] = counts_[i];
  return r;
}

std::complex<double> CycloSum::value() const {
  std::complex<double> acc{0.0, 0.0};
  for (std::uint64_t i = 0; i < n_; ++i) {
    if (counts_[i] == 0) continue;
    double t = kTau * static_cast<double>(i) / static_cast<double>(n_);
    acc += static_cast<double>(counts_[i]) * std::complex<double>{std::cos(t), std::sin(t)};
  }
  return acc;
}

std::int64_t CycloSum::total_terms() const {
  std::int64_t s = 0;
  for (std::int64_t c : counts_) s += std::abs(c);
  return s;
}

bool CycloSum::is_zero_exact() const {
  auto phi = cyclotomic_poly(n_);
  std::vector<std::int64_t> a = counts_;
  // Remainder mod Phi_n (monic, integer): zero iff the sum vanishes.
  while (true) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    if (a.size() < phi.size()) break;
    std::int64_t c = a.back();
    std::size_t d = a.size() - phi.size();
    for (std::size_t i = 0; i < phi.size(); ++i) a[d + i] -= c * phi[i];
  }
  for (std::int64_t r : a)
    if (r != 0) return false;
  return true;
}

bool CycloSum::equals_exact(const CycloSum& o) const {
  if (o.n_ != n_) throw std::invalid_argument("CycloSum order mismatch");
  CycloSum diff(n_);
  for (std::uint64_t i = 0; i < n_; ++i) diff.counts_[i] = counts_[i] - o.counts_[i];
  return diff.is_zero_exact();
}

}  // namespace ffnt
