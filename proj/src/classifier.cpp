#include "uconj/classifier.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "uconj/lie.hpp"
#include "uconj/snf.hpp"

namespace uconj {

std::string Family::rep_string() const {
  std::vector<int> all = c;
  all.insert(all.end(), d.begin(), d.end());
  std::sort(all.begin(), all.end());
  if (all.empty()) return "1";
  std::string s;
  for (int j : all) {
    if (!s.empty()) s += " ";
    s += "x_" + std::to_string(j) + "(";
    s += (in_d(j) ? "b_" : "a_") + std::to_string(j);
    s += ")";
  }
  return s;
}

int Family::free_t_count() const {
  int n = 0;
  for (int l = 1; l <= ring.nroots; ++l)
    if (t_free(l)) ++n;
  return n;
}

std::vector<SymExpr> step_conjugate(const Family& fam, const RootSystem& rs, int upto) {
  auto tab = commutator_table(rs);
  SymRing ring{fam.ring};
  Collector<SymRing> col(tab.get(), ring, upto);

  UElem<SymRing> x, y;
  x.coeffs.assign(rs.nroots(), ring.zero());
  y.coeffs.assign(rs.nroots(), ring.zero());
  for (int j = 1; j <= rs.nroots(); ++j) x.coeffs[j - 1] = fam.params[j - 1];
  for (int j : fam.c) y.coeffs[j - 1] = fam.rep_coeff(j);
  for (int j : fam.d) y.coeffs[j - 1] = SymExpr::a_sym(fam.ring, j);

  auto z = col.conjugate(x, y);

  // x must stabilize y M_step: coordinates <= step reproduce the template,
  // shifted by the recorded residual on d-coordinates
  for (int j = 1; j <= fam.step && j <= upto; ++j) {
    SymExpr expect = SymExpr::zero(fam.ring);
    if (fam.in_c(j)) expect = fam.rep_coeff(j);
    if (fam.in_d(j)) expect = SymExpr::a_sym(fam.ring, j) + fam.residuals.at(j);
    if (!z.coeffs[j - 1].equals(expect))
      throw std::logic_error("step_conjugate: centralizer violation at coordinate " +
                             std::to_string(j));
  }
  return z.coeffs;
}

Outcome detect_case(const SymExpr& g_next, const Family& fam) {
  Outcome out;
  if (g_next.is_zero()) {
    out.kind = StepRecord::Ramification;
    return out;
  }
  // every term of a conjugate coordinate vanishes at t = 0
  bool has_t = false;
  for (int l = 1; l <= fam.ring.nroots; ++l)
    if (g_next.uses_t(l)) has_t = true;
  if (!has_t) throw std::logic_error("detect_case: nonzero coordinate constant in t");

  // maximal t_l occurring only as a single term h(a) t_l, h a monomial in
  // symbols that cannot vanish (c-symbols only), with t_l absent from all
  // recorded residuals
  for (int l = fam.ring.nroots; l >= 1; --l) {
    auto occ = analyze_linear_occurrence(g_next, l);
    if (occ.kind != LinearOccurrence::SingleLinearTerm) continue;
    bool h_ok = true;
    for (int j = 1; j <= fam.ring.nroots; ++j)
      if (occ.h.uses_a(j) && !fam.in_c(j)) h_ok = false;  // d-symbols may be zero
    if (!h_ok) continue;
    bool clean = true;
    for (auto& [dj, res] : fam.residuals)
      if (res.uses_t(l)) clean = false;
    if (!clean) continue;
    out.kind = StepRecord::Inert;
    out.l = l;
    out.h = occ.h;
    return out;
  }
  out.kind = StepRecord::Unresolved;
  return out;
}

bool torus_normalizable(const RootSystem& rs, const std::vector<int>& current, int j) {
  IMat M;
  for (int idx : current) {
    M.emplace_back(rs.positive_roots[idx - 1].coeffs.begin(),
                   rs.positive_roots[idx - 1].coeffs.end());
  }
  M.emplace_back(rs.positive_roots[j - 1].coeffs.begin(), rs.positive_roots[j - 1].coeffs.end());
  auto s = smith_normal_form(M);
  return snf_all_unit_rows(s, int(M.size()));
}

std::vector<Family> apply_outcome(const Family& fam, const Outcome& out, const SymExpr& g_next,
                                  const RootSystem& rs, const ClassifyOptions& opts) {
  int next = fam.step + 1;
  std::vector<Family> result;
  auto record = [&](Family& f, StepRecord::Kind kind, bool ram_added) {
    if (!opts.keep_history) return;
    StepRecord r;
    r.kind = kind;
    r.step = next;
    r.g = g_next;
    r.ram_added = ram_added;
    if (kind == StepRecord::Inert) {
      r.inert_l = out.l;
      r.inert_h = out.h;
      r.inert_subst = (g_next - out.h * SymExpr::t_sym(fam.ring, out.l)) / (-out.h);
    }
    f.history.push_back(std::move(r));
  };

  switch (out.kind) {
    case StepRecord::Ramification: {
      Family with = fam;  // new nonzero coefficient a_{next}
      with.c.push_back(next);
      with.step = next;
      if (opts.normalize && torus_normalizable(rs, fam.normalized, next))
        with.normalized.push_back(next);
      record(with, StepRecord::Ramification, true);
      Family without = fam;
      without.step = next;
      record(without, StepRecord::Ramification, false);
      result.push_back(std::move(with));
      result.push_back(std::move(without));
      break;
    }
    case StepRecord::Inert: {
      Family f = fam;
      f.step = next;
      SymExpr subst = (g_next - out.h * SymExpr::t_sym(fam.ring, out.l)) / (-out.h);
      for (auto& p : f.params) p = p.substituted_t(out.l, subst);
      record(f, StepRecord::Inert, false);
      result.push_back(std::move(f));
      break;
    }
    case StepRecord::Unresolved: {
      Family f = fam;
      f.step = next;
      f.d.push_back(next);
      f.residuals.emplace(next, g_next);
      record(f, StepRecord::Unresolved, false);
      result.push_back(std::move(f));
      break;
    }
  }
  return result;
}

ClassifyResult classify(const RootSystem& rs, uint32_t p, ClassifyOptions opts) {
  if (!is_prime_u32(p)) throw std::invalid_argument("classify: p must be prime");
  ClassifyResult res;
  res.rs = rs;
  res.p = p;
  res.opts = opts;

  SymRingSpec ring{p, rs.nroots()};
  Family root;
  root.ring = ring;
  for (int l = 1; l <= rs.nroots(); ++l) root.params.push_back(SymExpr::t_sym(ring, l));

  std::deque<Family> queue{std::move(root)};
  while (!queue.empty()) {
    Family fam = std::move(queue.front());
    queue.pop_front();
    if (fam.step == rs.nroots()) {
      res.families.push_back(std::move(fam));
      continue;
    }
    auto z = step_conjugate(fam, rs, fam.step + 1);
    const SymExpr& g = z[fam.step];
    auto out = detect_case(g, fam);
    if (out.kind == StepRecord::Unresolved) res.had_unresolved = true;
    for (auto& succ : apply_outcome(fam, out, g, rs, opts)) queue.push_back(std::move(succ));
  }

  std::sort(res.families.begin(), res.families.end(), [](const Family& a, const Family& b) {
    size_t na = a.c.size() + a.d.size(), nb = b.c.size() + b.d.size();
    if (na != nb) return na < nb;
    if (a.c != b.c) return a.c < b.c;
    return a.d < b.d;
  });
  return res;
}

}  // namespace uconj
