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

#include "ffnt/variety.hpp"

#include <algorithm>
#include <iterator>
#include <limits>
#include <stdexcept>

#include "ffnt/parallel.hpp"

namespace ffnt {

VarietySpec::VarietySpec(ResidueRing r, std::vector<unsigned> d, unsigned kk)
    : ring(std::move(r)), degrees(std::move(d)), k(kk) {
  if (k == 0 || degrees.size() != 2 * std::size_t(k))
    throw std::invalid_argument("degree list must have exactly 2k entries");
}

std::uint64_t VarietySpec::tuple_space_size() const {
  std::uint64_t total = 1;
  for (unsigned di : degrees) {
    std::uint64_t block = monic_count(ring.field(), di);
    if (total > std::numeric_limits<std::uint64_t>::max() / block)
      throw std::overflow_error("tuple space does not fit in 64 bits");
    total *= block;
  }
  return total;
}

unsigned VarietySpec::total_degree() const {
  unsigned s = 0;
  for (unsigned di : degrees) s += di;
  return s;
}

namespace {

// Everything needed to test membership of one tuple, precomputed once.
struct MembershipCtx {
  const VarietySpec& spec;
  bool deformed;
  // Deformed test data: roots of g in its splitting field, and the
  // deformation constants embedded there.
  Field ext;
  std::vector<Fe> embed;
  std::vector<Fe> roots;
  std::vector<Fe> c_ext;

  explicit MembershipCtx(const VarietySpec& s) : spec(s), deformed(false) {
    if (spec.deformation.empty()) return;
    const Poly& g = spec.ring.modulus();
    if (!is_squarefree(g))
      throw std::invalid_argument("deformed variety needs a squarefree modulus");
    if (spec.deformation.size() != std::size_t(g.degree()))
      throw std::invalid_argument("deformation vector must have one entry per root of g");
    deformed = true;
    SplittingRoots sr = roots_in_extension(g);
    ext = sr.ext;
    embed = std::move(sr.embed);
    roots = std::move(sr.roots);
    for (Fe c : spec.deformation) {
      Fe ce = embed[c];
      if (ce == 0) throw std::invalid_argument("deformation constants must be nonzero");
      c_ext.push_back(ce);
    }
  }

  bool member(const std::vector<Poly>& fs) const {
    const unsigned k = spec.k;
    if (!deformed) {
      const ResidueRing& r = spec.ring;
      ResidueIdx lhs = r.one_idx(), rhs = r.one_idx();
      for (unsigned i = 0; i < k; ++i) lhs = r.mul(lhs, r.index_of(fs[i]));
      for (unsigned i = k; i < 2 * k; ++i) rhs = r.mul(rhs, r.index_of(fs[i]));
      return lhs == rhs;
    }
    std::vector<Poly> lifted;
    lifted.reserve(fs.size());
    for (const Poly& f : fs) lifted.push_back(f.embed(ext, embed));
    for (std::size_t j = 0; j < roots.size(); ++j) {
      Fe lhs = ext.one(), rhs = c_ext[j];
      for (unsigned i = 0; i < k; ++i) lhs = ext.mul(lhs, lifted[i].eval(roots[j]));
      for (unsigned i = k; i < 2 * k; ++i) rhs = ext.mul(rhs, lifted[i].eval(roots[j]));
      if (lhs != rhs) return false;
    }
    return true;
  }
};

// Walks all tuples whose f_1 index lies in [lo, hi), rejecting each component
// as soon as it shares a factor with g.
CountResult count_slice(const VarietySpec& spec, const MembershipCtx& ctx, std::uint64_t lo,
                        std::uint64_t hi, bool collect) {
  const Field& kf = spec.ring.field();
  const Poly& g = spec.ring.modulus();
  const unsigned n = 2 * spec.k;
  std::vector<std::uint64_t> block(n);
  for (unsigned i = 0; i < n; ++i) block[i] = monic_count(kf, spec.degrees[i]);

  CountResult out;
  std::vector<Poly> fs(n);
  // Odometer over components 1..n-1 for each admissible f_1.
  std::vector<std::uint64_t> idx(n, 0);
  for (std::uint64_t i0 = lo; i0 < hi; ++i0) {
    fs[0] = monic_by_index(kf, spec.degrees[0], i0);
    if (!coprime(fs[0], g)) continue;
    unsigned pos = 1;
    std::fill(idx.begin(), idx.end(), 0);
    while (true) {
      if (pos == n) {
        if (ctx.member(fs)) {
          ++out.count;
          if (collect) out.points.push_back(fs);
        }
        --pos;
        ++idx[pos];
      }
      while (idx[pos] == block[pos]) {
        idx[pos] = 0;
        if (pos == 1) goto next_f1;
        --pos;
        ++idx[pos];
      }
      fs[pos] = monic_by_index(kf, spec.degrees[pos], idx[pos]);
      if (!coprime(fs[pos], g)) {
        ++idx[pos];
        continue;
      }
      ++pos;
    }
  next_f1:;
  }
  return out;
}

}  // namespace

CountResult count_points(const VarietySpec& spec, bool collect) {
  if (spec.tuple_space_size() > spec.enumeration_cap)
    throw std::runtime_error("tuple space exceeds the enumeration cap");
  MembershipCtx ctx(spec);
  const std::uint64_t f1_block = monic_count(spec.ring.field(), spec.degrees[0]);
  auto slices = parallel_map_ranges<CountResult>(
      f1_block, job_count(),
      [&](std::uint64_t lo, std::uint64_t hi) { return count_slice(spec, ctx, lo, hi, collect); });
  CountResult out;
  for (auto& s : slices) {
    out.count += s.count;
    if (collect)
      out.points.insert(out.points.end(), std::make_move_iterator(s.points.begin()),
                        std::make_move_iterator(s.points.end()));
  }
  return out;
}

OrthogonalityResult orthogonality_identity(const VarietySpec& spec) {
  if (!spec.deformation.empty())
    throw std::invalid_argument("the orthogonality identity applies to the undeformed variety");
  OrthogonalityResult out;
  const auto& st = spec.ring.structure();
  std::complex<double> lhs = 0.0;
  for (const Character& chi : characters(spec.ring)) {
    std::complex<double> term = 1.0;
    for (unsigned i = 0; i < 2 * spec.k; ++i) {
      std::complex<double> c = char_coefficient(chi, spec.degrees[i]).value();
      term *= (i < spec.k) ? c : std::conj(c);
    }
    lhs += term;
  }
  out.lhs = lhs;
  out.rhs = st.group_order * count_points(spec).count;
  out.pass = std::abs(lhs - std::complex<double>(double(out.rhs), 0.0)) < 0.5;
  return out;
}

bool is_singular_lcm(const VarietyPoint& point, const VarietySpec& spec) {
  Poly l = Poly::one(spec.ring.field());
  for (const Poly& f : point) l = lcm(l, f);
  return l.degree() <= int(spec.ring.m()) - 1;
}

unsigned matrix_rank(const Field& k, std::vector<std::vector<Fe>> rows) {
  if (rows.empty()) return 0;
  const std::size_t ncols = rows[0].size();
  unsigned rank = 0;
  for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    Fe inv = k.inv(rows[rank][col]);
    for (std::size_t j = col; j < ncols; ++j) rows[rank][j] = k.mul(rows[rank][j], inv);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      Fe s = rows[r][col];
      for (std::size_t j = col; j < ncols; ++j)
        rows[r][j] = k.sub(rows[r][j], k.mul(s, rows[rank][j]));
    }
    ++rank;
  }
  return rank;
}

bool is_singular_jacobian(const VarietyPoint& point, const VarietySpec& spec) {
  const Poly& g = spec.ring.modulus();
  if (!is_squarefree(g))
    throw std::invalid_argument("the Jacobian criterion needs a squarefree modulus");
  SplittingRoots sr = roots_in_extension(g);
  const Field& E = sr.ext;
  const unsigned m = spec.ring.m();
  const unsigned n = 2 * spec.k;

  // One congruence equation per root alpha_j; one column per free (non-
  // leading) coefficient of each f_i. On the variety both half-products
  // agree up to the deformation constant, so the partial derivative with
  // respect to coefficient l of f_i is +/- P_j alpha_j^l / f_i(alpha_j),
  // with P_j the common product value and the sign split at i = k.
  std::vector<std::vector<Fe>> rows(m, std::vector<Fe>(spec.total_degree(), 0));
  for (unsigned j = 0; j < m; ++j) {
    Fe alpha = sr.roots[j];
    std::vector<Fe> vals(n);
    Fe pj = E.one();
    for (unsigned i = 0; i < n; ++i) {
      vals[i] = point[i].embed(E, sr.embed).eval(alpha);
      if (vals[i] == 0)
        throw std::invalid_argument("point has a component sharing a root with the modulus");
      if (i < spec.k) pj = E.mul(pj, vals[i]);
    }
    std::size_t col = 0;
    for (unsigned i = 0; i < n; ++i) {
      Fe base = E.div(pj, vals[i]);
      if (i >= spec.k) base = E.neg(base);
      Fe apow = E.one();
      for (unsigned l = 0; l < spec.degrees[i]; ++l) {
        rows[j][col++] = E.mul(base, apow);
        apow = E.mul(apow, alpha);
      }
    }
  }
  unsigned expected = std::min<unsigned>(m, spec.total_degree());
  return matrix_rank(E, std::move(rows)) < expected;
}

SingularScan singular_scan(const VarietySpec& spec) {
  SingularScan out;
  CountResult pts = count_points(spec, /*collect=*/true);
  out.total_points = pts.count;
  // The divisibility criterion describes the undeformed equations only, so a
  // deformed scan certifies by the Jacobian rank alone.
  const bool deformed = !spec.deformation.empty();
  for (const VarietyPoint& pt : pts.points) {
    bool by_jac = is_singular_jacobian(pt, spec);
    if (deformed) {
      if (by_jac) out.singular.push_back(pt);
      continue;
    }
    bool by_lcm = is_singular_lcm(pt, spec);
    if (by_lcm != by_jac) out.criteria_agree = false;
    if (by_lcm) out.singular.push_back(pt);
  }
  return out;
}

}  // namespace ffnt
