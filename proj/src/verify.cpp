#include "pabraid/verify.hpp"

#include "pabraid/families.hpp"
#include "pabraid/horseshoe.hpp"
#include "pabraid/linalg.hpp"
#include "pabraid/parallel.hpp"
#include "pabraid/poly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <random>
#include <sstream>
#include <tuple>

namespace pabraid {

VerifyLimits VerifyLimits::for_depth(VerifyDepth depth) {
  VerifyLimits l;
  if (depth == VerifyDepth::quick) return l;
  l.mn_max = 10;
  l.g_max = 50;
  l.mono_m_max = 6;
  l.mono_n_max = 20;
  l.order_m_max = 6;
  l.mahler_m_max = 12;
  l.r_m_max = 13;
  l.sb_m_max = 6;
  l.sb_n_max = 30;
  l.conv_m_max = 4;
  l.conv_n_max = 40;
  l.code_m_max = 5;
  l.code_n_max = 12;
  return l;
}

std::size_t VerifyReport::passed() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.passed; }));
}

nlohmann::ordered_json to_json(const VerifyReport& report) {
  nlohmann::ordered_json j;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) {
    nlohmann::ordered_json e;
    e["id"] = c.id;
    e["range"] = c.range;
    e["passed"] = c.passed;
    e["worst_margin"] = c.worst_margin;
    if (!c.detail.empty()) e["detail"] = c.detail;
    arr.push_back(std::move(e));
  }
  j["checks"] = std::move(arr);
  j["summary"] = {{"passed", report.passed()}, {"total", report.total()}};
  return j;
}

namespace {

using Key = std::tuple<Family, int, int>;

std::string label(Family f, int m, int n) {
  return std::string(to_string(f)) + "(" + std::to_string(m) + "," + std::to_string(n) + ")";
}

std::string range(std::string_view what, int lo, int hi) {
  return std::string(what) + " in " + std::to_string(lo) + ".." + std::to_string(hi);
}

/// Dilatations computed once per parameter set.
class DilatationCache {
 public:
  DilatationCache(double tol, int m_max, int n_max) : tol_(tol) {
    std::vector<Key> keys;
    for (Family f : {Family::beta, Family::sigma}) {
      for (int m = 1; m <= m_max; ++m) {
        for (int n = 1; n <= n_max; ++n) keys.emplace_back(f, m, n);
      }
    }
    auto results = parallel_map(keys.size(), [&](std::size_t i) {
      const auto& [f, m, n] = keys[i];
      return dilatation(FamilyParams{f, m, n}, tol);
    });
    for (std::size_t i = 0; i < keys.size(); ++i) cache_.emplace(keys[i], std::move(results[i]));
  }

  const DilatationResult& get(Family f, int m, int n) {
    std::lock_guard lock(mu_);
    const Key k{f, m, n};
    auto it = cache_.find(k);
    if (it == cache_.end()) it = cache_.emplace(k, dilatation(FamilyParams{f, m, n}, tol_)).first;
    return it->second;
  }

 private:
  double tol_;
  std::mutex mu_;
  std::map<Key, DilatationResult> cache_;
};

struct Ordering {
  /// Sign of lambda(a) - lambda(b), decided on disjoint enclosures.
  int sign = 0;
  /// Difference of the witnesses.
  double gap = 0;
};

Ordering compare(const DilatationResult& a, const DilatationResult& b) {
  RootEnclosure ea = *a.root;
  RootEnclosure eb = *b.root;
  const double gap = (ea.witness - eb.witness).convert_to<double>();
  return {compare_roots(*a.defining_poly, ea, *b.defining_poly, eb), gap};
}

struct Tracker {
  CheckRecord rec;
  bool any = false;

  Tracker(std::string id, std::string range) {
    rec.id = std::move(id);
    rec.range = std::move(range);
    rec.passed = true;
    rec.worst_margin = std::numeric_limits<double>::infinity();
  }
  /// Records one case: `ok` and its slack.
  void add(bool ok, double margin, const std::string& what = {}) {
    any = true;
    rec.worst_margin = std::min(rec.worst_margin, margin);
    if (!ok && rec.passed) {
      rec.passed = false;
      rec.detail = "first failure: " + what;
    } else if (!ok) {
      rec.passed = false;
    }
  }
  CheckRecord finish() {
    if (!any) {
      rec.passed = false;
      rec.detail = "no cases exercised";
      rec.worst_margin = 0;
    }
    if (std::isinf(rec.worst_margin)) rec.worst_margin = 0;
    return rec;
  }
};

template <typename Body>
CheckRecord run_check(std::string id, std::string rng, Body body) {
  Tracker t(std::move(id), std::move(rng));
  try {
    body(t);
  } catch (const std::exception& e) {
    t.add(false, 0, std::string("exception: ") + e.what());
  }
  return t.finish();
}

IntPolynomial random_polynomial(std::mt19937_64& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<long> coef(-50, 50);
  std::vector<Integer> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& x : c) x = coef(rng);
  if (c.front() == 0) c.front() = 1;
  if (c.back() == 0) c.back() = -1;
  return IntPolynomial(std::move(c));
}

IntPolynomial random_monic(std::mt19937_64& rng, int max_degree) {
  std::vector<Integer> c = random_polynomial(rng, max_degree).coeffs();
  c.back() = 1;
  return IntPolynomial(std::move(c));
}

}  // namespace

VerifyReport run_verify(const VerifyLimits& L, double tol, const AberthOptions& aberth) {
  VerifyReport report;
  auto& out = report.checks;
  std::mt19937_64 rng(20080613);

  const int grid_m = std::max({L.mn_max, L.mono_m_max, L.order_m_max});
  const int grid_n = std::max({L.mn_max, L.mono_n_max});
  DilatationCache dil(tol, grid_m, grid_n);

  // --- poly -----------------------------------------------------------------
  out.push_back(run_check("poly.reciprocal_involution", "200 random polynomials, degree <= 12", [&](Tracker& t) {
    for (int i = 0; i < 200; ++i) {
      const IntPolynomial f = random_polynomial(rng, 12);
      t.add(reciprocal(reciprocal(f)) == f, 0, format_polynomial(f));
    }
  }));

  out.push_back(run_check("poly.salem_boyd_symmetry", range("m", 1, L.sb_m_max) + ", n in 0.." +
                                                          std::to_string(L.sb_n_max) + ", +/-, plus 50 random monic",
                          [&](Tracker& t) {
                            auto one = [&](const IntPolynomial& p, std::size_t n, SalemBoydSign s) {
                              const IntPolynomial q = salem_boyd({p, n, s});
                              t.add(!q.is_zero() && symmetry_class(q) != Symmetry::neither, 0,
                                    format_polynomial(q));
                            };
                            for (int m = 1; m <= L.sb_m_max; ++m) {
                              for (int n = 0; n <= L.sb_n_max; ++n) {
                                one(r_poly(m), static_cast<std::size_t>(n), SalemBoydSign::plus);
                                one(r_poly(m), static_cast<std::size_t>(n), SalemBoydSign::minus);
                              }
                            }
                            for (int i = 0; i < 50; ++i) {
                              const IntPolynomial p = random_monic(rng, 8);
                              for (std::size_t n : {1u, 2u, 7u}) {
                                const IntPolynomial q = salem_boyd({p, n, SalemBoydSign::plus});
                                if (!q.is_zero()) one(p, n, SalemBoydSign::plus);
                              }
                            }
                          }));

  out.push_back(run_check("poly.salem_boyd_shift_identity", "50 random monic P, n in 0..10, +/-", [&](Tracker& t) {
    const IntPolynomial one_minus_t{1, -1};
    for (int i = 0; i < 50; ++i) {
      const IntPolynomial p = random_monic(rng, 8);
      for (std::size_t n = 0; n <= 10; ++n) {
        for (SalemBoydSign s : {SalemBoydSign::plus, SalemBoydSign::minus}) {
          const IntPolynomial lhs = salem_boyd({p, n + 1, s}) - shift_by_power(salem_boyd({p, n, s}), 1);
          IntPolynomial rhs = one_minus_t * reciprocal(p);
          if (s == SalemBoydSign::minus) rhs = -rhs;
          t.add(lhs == rhs, 0, format_polynomial(p));
        }
      }
    }
  }));

  out.push_back(run_check("poly.salem_boyd_degree", range("m", 1, L.sb_m_max) + ", n in 1.." +
                                                        std::to_string(L.sb_n_max),
                          [&](Tracker& t) {
                            for (int m = 1; m <= L.sb_m_max; ++m) {
                              for (int n = 1; n <= L.sb_n_max; ++n) {
                                for (SalemBoydSign s : {SalemBoydSign::plus, SalemBoydSign::minus}) {
                                  const auto q = salem_boyd({r_poly(m), static_cast<std::size_t>(n), s});
                                  t.add(q.degree() == static_cast<std::size_t>(n + m + 1), 0, pretty(q));
                                }
                              }
                            }
                          }));

  // --- linalg ---------------------------------------------------------------
  out.push_back(run_check("linalg.r_matrix_charpoly", range("m", 1, L.r_m_max), [&](Tracker& t) {
    for (int m = 1; m <= L.r_m_max; ++m) t.add(char_poly(r_matrix(m)) == r_poly(m), 0, "m=" + std::to_string(m));
  }));

  out.push_back(run_check("linalg.charpoly_pointwise", "transition matrices m,n <= " + std::to_string(L.mn_max) +
                                                           ", 10 integer draws each",
                          [&](Tracker& t) {
                            std::uniform_int_distribution<long> draw(-40, 40);
                            for (Family f : {Family::beta, Family::sigma}) {
                              for (int m = 1; m <= L.mn_max; ++m) {
                                for (int n = 1; n <= L.mn_max; ++n) {
                                  const FamilyParams p{f, m, n};
                                  if (classify(p) != TNClass::pseudo_anosov) continue;
                                  const IntMatrix a = transition_matrix(p);
                                  const IntPolynomial cp = char_poly(a);
                                  for (int k = 0; k < 10; ++k) {
                                    const long x = draw(rng);
                                    IntMatrix b(a.dim());
                                    for (std::size_t i = 0; i < a.dim(); ++i) {
                                      for (std::size_t j = 0; j < a.dim(); ++j) b(i, j) = -a(i, j);
                                      b(i, i) += x;
                                    }
                                    t.add(evaluate(cp, Rational(x)) == Rational(determinant(std::move(b))), 0,
                                          label(f, m, n));
                                  }
                                }
                              }
                            }
                          }));

  out.push_back(run_check("linalg.block_triangular_charpoly", "r_matrix(a) (+) r_matrix(b), a,b <= 5, random coupling",
                          [&](Tracker& t) {
                            std::uniform_int_distribution<long> coup(-3, 3);
                            for (int a = 1; a <= 5; ++a) {
                              for (int b = 1; b <= 5; ++b) {
                                const IntMatrix ra = r_matrix(a);
                                const IntMatrix rb = r_matrix(b);
                                IntMatrix blk(ra.dim() + rb.dim());
                                for (std::size_t i = 0; i < ra.dim(); ++i) {
                                  for (std::size_t j = 0; j < ra.dim(); ++j) blk(i, j) = ra(i, j);
                                  for (std::size_t j = 0; j < rb.dim(); ++j) blk(i, ra.dim() + j) = coup(rng);
                                }
                                for (std::size_t i = 0; i < rb.dim(); ++i) {
                                  for (std::size_t j = 0; j < rb.dim(); ++j) blk(ra.dim() + i, ra.dim() + j) = rb(i, j);
                                }
                                t.add(char_poly(blk) == r_poly(a) * r_poly(b), 0,
                                      "a=" + std::to_string(a) + " b=" + std::to_string(b));
                              }
                            }
                          }));

  out.push_back(run_check("linalg.transition_irreducible", "pA params m,n <= " + std::to_string(L.mn_max),
                          [&](Tracker& t) {
                            for (Family f : {Family::beta, Family::sigma}) {
                              for (int m = 1; m <= L.mn_max; ++m) {
                                for (int n = 1; n <= L.mn_max; ++n) {
                                  const FamilyParams p{f, m, n};
                                  if (classify(p) != TNClass::pseudo_anosov) continue;
                                  t.add(is_irreducible(transition_matrix(p)), 0, label(f, m, n));
                                }
                              }
                            }
                          }));

  out.push_back(run_check("linalg.perron_vs_largest_root", range("m", 1, L.r_m_max), [&](Tracker& t) {
    for (int m = 1; m <= L.r_m_max; ++m) {
      const RootEnclosure pr = perron_root(r_matrix(m), tol);
      const RootEnclosure lr = largest_real_root(r_poly(m), Rational(1), tol);
      const double diff = abs(pr.witness - lr.witness).convert_to<double>();
      const bool overlap = !(pr.upper < lr.lower) && !(lr.upper < pr.lower);
      t.add(overlap && diff <= 2 * tol, 2 * tol - diff, "m=" + std::to_string(m));
    }
  }));

  // --- spectral -------------------------------------------------------------
  out.push_back(run_check("spectral.certified_enclosures", "all pA dilatations m,n <= " + std::to_string(L.mn_max),
                          [&](Tracker& t) {
                            for (Family f : {Family::beta, Family::sigma}) {
                              for (int m = 1; m <= L.mn_max; ++m) {
                                for (int n = 1; n <= L.mn_max; ++n) {
                                  const auto& r = dil.get(f, m, n);
                                  if (!r.root) continue;
                                  const auto& e = *r.root;
                                  const bool ok = e.certified && e.lower < e.upper && e.lower > 1 &&
                                                  sign_at(*r.defining_poly, e.lower) *
                                                          sign_at(*r.defining_poly, e.upper) <
                                                      0;
                                  t.add(ok, tol - e.width().convert_to<double>(), label(f, m, n));
                                }
                              }
                            }
                          }));

  out.push_back(run_check("spectral.mahler_r_m", range("m", 1, L.mahler_m_max) + ", |M - 2| <= 1e-8", [&](Tracker& t) {
    for (int m = 1; m <= L.mahler_m_max; ++m) {
      const MahlerMeasure mm = mahler_measure(r_poly(m), 1e-10, aberth);
      const double dev = abs(mm.value - 2).convert_to<double>();
      t.add(dev <= 1e-8, 1e-8 - dev, "m=" + std::to_string(m));
    }
  }));

  out.push_back(run_check("spectral.root_count_law", range("m", 1, L.sb_m_max) + ", n in 0.." +
                                                         std::to_string(L.sb_n_max) + ", N(Q_n) <= N(R_m)",
                          [&](Tracker& t) {
                            for (int m = 1; m <= L.sb_m_max; ++m) {
                              const std::size_t np = count_outside_unit(r_poly(m), 1e-9, aberth).outside;
                              struct Job {
                                std::size_t n;
                                SalemBoydSign s;
                              };
                              std::vector<Job> jobs;
                              for (int n = 0; n <= L.sb_n_max; ++n) {
                                jobs.push_back({static_cast<std::size_t>(n), SalemBoydSign::plus});
                                jobs.push_back({static_cast<std::size_t>(n), SalemBoydSign::minus});
                              }
                              const auto counts = parallel_map(jobs.size(), [&](std::size_t i) {
                                return count_outside_unit(salem_boyd({r_poly(m), jobs[i].n, jobs[i].s}), 1e-9, aberth)
                                    .outside;
                              });
                              for (std::size_t i = 0; i < jobs.size(); ++i) {
                                t.add(counts[i] <= np, static_cast<double>(np) - static_cast<double>(counts[i]),
                                      "m=" + std::to_string(m) + " n=" + std::to_string(jobs[i].n) + " " +
                                          std::string(to_string(jobs[i].s)));
                              }
                            }
                          }));

  out.push_back(run_check(
      "spectral.mahler_convergence",
      range("m", 1, L.conv_m_max) + ", n in 1.." + std::to_string(L.conv_n_max) +
          ", max |M(Q_n) - M(R_m)| over the last ten n below the max over n <= 10",
      [&](Tracker& t) {
        for (int m = 1; m <= L.conv_m_max; ++m) {
          for (SalemBoydSign s : {SalemBoydSign::plus, SalemBoydSign::minus}) {
            const auto dev = parallel_map(static_cast<std::size_t>(L.conv_n_max), [&](std::size_t i) {
              const auto q = salem_boyd({r_poly(m), i + 1, s});
              return abs(mahler_measure(q, 1e-10, aberth).value - 2).convert_to<double>();
            });
            const double head = *std::max_element(dev.begin(), dev.begin() + 10);
            const double tail = *std::max_element(dev.end() - 10, dev.end());
            t.add(tail < head, head - tail, "m=" + std::to_string(m) + " " + std::string(to_string(s)));
          }
        }
      }));

  out.push_back(run_check("spectral.r_m_decreasing", range("m", 1, L.r_m_max), [&](Tracker& t) {
    std::vector<RootEnclosure> mu;
    for (int m = 1; m <= L.r_m_max; ++m) mu.push_back(largest_real_root(r_poly(m), Rational(1), tol));
    for (int m = 1; m < L.r_m_max; ++m) {
      auto a = mu[static_cast<std::size_t>(m)];
      auto b = mu[static_cast<std::size_t>(m - 1)];
      const double gap = (b.witness - a.witness).convert_to<double>();
      t.add(compare_roots(r_poly(m + 1), a, r_poly(m), b) < 0 && a.lower > 1, gap, "m=" + std::to_string(m));
    }
  }));

  // --- families ---------------------------------------------------------------
  out.push_back(run_check("families.classification", "m,n <= " + std::to_string(L.mn_max), [&](Tracker& t) {
    for (int m = 1; m <= L.mn_max; ++m) {
      for (int n = 1; n <= L.mn_max; ++n) {
        t.add(classify({Family::beta, m, n}) == TNClass::pseudo_anosov, 0, label(Family::beta, m, n));
        const int gap = std::abs(m - n);
        const TNClass want = gap == 0 ? TNClass::periodic : gap == 1 ? TNClass::reducible : TNClass::pseudo_anosov;
        t.add(classify({Family::sigma, m, n}) == want, 0, label(Family::sigma, m, n));
      }
    }
  }));

  out.push_back(run_check("families.closed_form_matrix_agreement", "pA params m,n <= " + std::to_string(L.mn_max),
                          [&](Tracker& t) {
                            for (Family f : {Family::beta, Family::sigma}) {
                              for (int m = 1; m <= L.mn_max; ++m) {
                                for (int n = 1; n <= L.mn_max; ++n) {
                                  const FamilyParams p{f, m, n};
                                  if (classify(p) != TNClass::pseudo_anosov) continue;
                                  const IntPolynomial cf = closed_form_poly(p);
                                  const IntPolynomial cp = char_poly(transition_matrix(p));
                                  const auto r1 = largest_real_root(cf, Rational(1), tol);
                                  const auto r2 = largest_real_root(cp, Rational(1), tol);
                                  const double diff = abs(r1.witness - r2.witness).convert_to<double>();
                                  t.add(cf == cp && diff <= tol, tol - diff, label(f, m, n));
                                }
                              }
                            }
                          }));

  out.push_back(run_check("families.sigma_kernel_eigenvector", "sigma pA m,n <= " + std::to_string(L.mn_max),
                          [&](Tracker& t) {
                            for (int m = 1; m <= L.mn_max; ++m) {
                              for (int n = m + 2; n <= L.mn_max; ++n) {
                                const auto w = kernel_vector(m, n);
                                t.add(transition_matrix({Family::sigma, m, n}) * w == w, 0,
                                      label(Family::sigma, m, n));
                              }
                            }
                          }));

  out.push_back(run_check("families.dilatation_symmetry", "pA params m,n <= " + std::to_string(L.mn_max),
                          [&](Tracker& t) {
                            for (Family f : {Family::beta, Family::sigma}) {
                              for (int m = 1; m <= L.mn_max; ++m) {
                                for (int n = m + 1; n <= L.mn_max; ++n) {
                                  const auto& a = dil.get(f, m, n);
                                  if (!a.root) continue;
                                  const auto& b = dil.get(f, n, m);
                                  const double diff = abs(a.root->witness - b.root->witness).convert_to<double>();
                                  t.add(diff <= tol, tol - diff, label(f, m, n));
                                }
                              }
                            }
                          }));

  out.push_back(run_check("families.beta_decreasing", range("m", 1, L.mono_m_max) + ", n in 1.." +
                                                          std::to_string(L.mono_n_max),
                          [&](Tracker& t) {
                            for (int m = 1; m <= L.mono_m_max; ++m) {
                              for (int n = 1; n < L.mono_n_max; ++n) {
                                const Ordering c = compare(dil.get(Family::beta, m, n + 1), dil.get(Family::beta, m, n));
                                t.add(c.sign < 0, -c.gap, label(Family::beta, m, n));
                              }
                            }
                          }));

  out.push_back(run_check("families.sigma_increasing", range("m", 1, L.mono_m_max) + ", n in m+2.." +
                                                           std::to_string(L.mono_n_max),
                          [&](Tracker& t) {
                            for (int m = 1; m <= L.mono_m_max; ++m) {
                              for (int n = m + 2; n < L.mono_n_max; ++n) {
                                const Ordering c = compare(dil.get(Family::sigma, m, n + 1), dil.get(Family::sigma, m, n));
                                t.add(c.sign > 0, c.gap, label(Family::sigma, m, n));
                              }
                            }
                          }));

  out.push_back(run_check("families.beta_exceeds_sigma", "|m-n| >= 2, " + range("m", 1, L.mono_m_max) + ", n in 1.." +
                                                             std::to_string(L.mono_n_max),
                          [&](Tracker& t) {
                            for (int m = 1; m <= L.mono_m_max; ++m) {
                              for (int n = 1; n <= L.mono_n_max; ++n) {
                                if (std::abs(m - n) < 2) continue;
                                const Ordering c = compare(dil.get(Family::beta, m, n), dil.get(Family::sigma, m, n));
                                t.add(c.sign > 0, c.gap, label(Family::beta, m, n));
                              }
                            }
                          }));

  // Records lambda(x) < lambda(y) with the witness gap as slack.
  auto below = [&](Tracker& t, const DilatationResult& x, const DilatationResult& y, const std::string& what) {
    const Ordering c = compare(x, y);
    t.add(c.sign < 0, -c.gap, what);
  };

  out.push_back(run_check("families.balanced_minimizes", range("m", 2, L.order_m_max) + ", all valid k",
                          [&](Tracker& t) {
                            for (int m = 2; m <= L.order_m_max; ++m) {
                              const std::string ms = std::to_string(m);
                              for (int k = 1; k <= m - 1; ++k) {
                                const std::string ks = " k=" + std::to_string(k);
                                below(t, dil.get(Family::beta, m, m), dil.get(Family::beta, m - k, m + k),
                                      "beta m=" + ms + ks);
                                below(t, dil.get(Family::beta, m, m + 1), dil.get(Family::beta, m - k, m + k + 1),
                                      "beta odd m=" + ms + ks);
                              }
                              for (int k = 2; k <= m - 1; ++k) {
                                const std::string ks = " k=" + std::to_string(k);
                                below(t, dil.get(Family::sigma, m - 1, m + 1), dil.get(Family::sigma, m - k, m + k),
                                      "sigma m=" + ms + ks);
                                below(t, dil.get(Family::sigma, m - 1, m + 2),
                                      dil.get(Family::sigma, m - k, m + k + 1), "sigma odd m=" + ms + ks);
                              }
                            }
                          }));

  out.push_back(run_check("families.beta_mm_exceeds_sigma_minimizer", range("m", 2, L.order_m_max),
                          [&](Tracker& t) {
                            for (int m = 2; m <= L.order_m_max; ++m) {
                              below(t, dil.get(Family::sigma, m - 1, m + 1), dil.get(Family::beta, m, m),
                                    "m=" + std::to_string(m));
                              if (m >= 3) {
                                below(t, dil.get(Family::sigma, m - 1, m + 2), dil.get(Family::beta, m, m + 1),
                                      "odd m=" + std::to_string(m));
                              }
                            }
                          }));

  // T_{2,3} and S_{1,4} differ as polynomials; they share the factor that
  // carries the dilatation: (t^2 - 1) T_{2,3} = (t^2 + 1) S_{1,4}.
  out.push_back(run_check("families.identity_t23_s14", "(t^2-1) T_{2,3} == (t^2+1) S_{1,4}, equal dilatations",
                          [&](Tracker& t) {
                            const IntPolynomial tp = closed_form_poly({Family::beta, 2, 3});
                            const IntPolynomial sp = closed_form_poly({Family::sigma, 1, 4});
                            t.add(IntPolynomial{-1, 0, 1} * tp == IntPolynomial{1, 0, 1} * sp, 0,
                                  "cofactor identity");
                            const double diff = abs(dil.get(Family::beta, 2, 3).root->witness -
                                                    dil.get(Family::sigma, 1, 4).root->witness)
                                                    .convert_to<double>();
                            t.add(diff <= tol, tol - diff, "lambda(beta_{2,3}) vs lambda(sigma_{1,4})");
                          }));

  out.push_back(run_check("families.euler_poincare", "pA params m,n <= " + std::to_string(L.mn_max), [&](Tracker& t) {
    for (Family f : {Family::beta, Family::sigma}) {
      for (int m = 1; m <= L.mn_max; ++m) {
        for (int n = 1; n <= L.mn_max; ++n) {
          const FamilyParams p{f, m, n};
          if (classify(p) != TNClass::pseudo_anosov) continue;
          t.add(singularity_data(p).euler_poincare_sum() == 4, 0, label(f, m, n));
        }
      }
    }
  }));

  out.push_back(run_check("families.orientable_prong_parity", "pA params m,n <= " + std::to_string(L.mn_max),
                          [&](Tracker& t) {
                            for (Family f : {Family::beta, Family::sigma}) {
                              for (int m = 1; m <= L.mn_max; ++m) {
                                for (int n = 1; n <= L.mn_max; ++n) {
                                  const FamilyParams p{f, m, n};
                                  if (classify(p) != TNClass::pseudo_anosov) continue;
                                  const SingularityData s = singularity_data(p);
                                  bool expect = false;
                                  if (f == Family::beta) {
                                    // Lifted prongs at p and q are m+1 and n+1; both even.
                                    expect = s.p_prongs % 2 == 0 && *s.q_prongs % 2 == 0;
                                  } else {
                                    // Exactly one of p, p_infinity has odd prongs.
                                    expect = (s.p_prongs + s.p_infinity_prongs) % 2 == 1;
                                  }
                                  t.add(orientable_lift(p) == expect, 0, label(f, m, n));
                                }
                              }
                            }
                          }));

  std::vector<MinimizerReport> mins;
  out.push_back(run_check("families.minimizer_bounds", range("g", 2, L.g_max), [&](Tracker& t) {
    mins = parallel_map(static_cast<std::size_t>(L.g_max - 1),
                        [&](std::size_t i) { return minimizer(static_cast<int>(i) + 2, tol); });
    for (const auto& r : mins) {
      const double lam = r.result.root->witness.convert_to<double>();
      const double margin = std::min(lam - r.lower_bound, r.upper_bound - lam);
      t.add(r.lower_bound_holds && r.upper_bound_holds, margin, "g=" + std::to_string(r.g));
    }
  }));

  out.push_back(run_check("families.dilatation_equation", range("g", 2, L.g_max) + ", residuals < 1e-8",
                          [&](Tracker& t) {
                            for (const auto& r : mins) {
                              const double res = r.equation_residual.convert_to<double>();
                              const double res2 = r.closed_form_residual.convert_to<double>();
                              t.add(res < 1e-8 && res2 < 1e-8, 1e-8 - std::max(res, res2), "g=" + std::to_string(r.g));
                            }
                          }));

  // --- horseshoe ------------------------------------------------------------
  out.push_back(run_check("horseshoe.round_trip", range("m", 1, L.code_m_max) + ", n in m+2.." +
                                                      std::to_string(L.code_n_max),
                          [&](Tracker& t) {
                            for (int m = 1; m <= L.code_m_max; ++m) {
                              for (int n = m + 2; n <= L.code_n_max; ++n) {
                                const auto [a, b] = family_to_codes(m, n);
                                t.add(a.size() == static_cast<std::size_t>(m + n + 1) && b.size() == a.size(), 0,
                                      "length m=" + std::to_string(m) + " n=" + std::to_string(n));
                                t.add(code_to_family(a) == FamilyCode{m, n, CodeForm::A}, 0, a);
                                t.add(code_to_family(b) == FamilyCode{m, n, CodeForm::B}, 0, b);
                              }
                            }
                          }));

  out.push_back(run_check("horseshoe.rotation_invariance", "all rotations of round-trip codes", [&](Tracker& t) {
    for (int m = 1; m <= L.code_m_max; ++m) {
      for (int n = m + 2; n <= L.code_n_max; ++n) {
        for (const auto& code : {family_to_codes(m, n).first, family_to_codes(m, n).second}) {
          const auto ref = code_to_family(code);
          for (std::size_t k = 1; k < code.size(); ++k) {
            const std::string rot = code.substr(k) + code.substr(0, k);
            t.add(code_to_family(rot) == ref, 0, rot);
          }
        }
      }
    }
  }));

  out.push_back(run_check("horseshoe.ordering_anchor", "lambda(sigma_{2,5}) > 1.4134", [&](Tracker& t) {
    const auto& r = dil.get(Family::sigma, 2, 5);
    t.add(r.root->lower > to_rational(1.4134), (r.root->witness - Real("1.4134")).convert_to<double>(), "sigma(2,5)");
  }));

  // --- numeric anchors --------------------------------------------------------
  out.push_back(run_check("anchors.zhirov", "sigma(1,3) vs largest root of x^4-x^3-x^2-x+1", [&](Tracker& t) {
    const auto z = largest_real_root(IntPolynomial{1, -1, -1, -1, 1}, Rational(1), tol);
    const double diff = abs(dil.get(Family::sigma, 1, 3).root->witness - z.witness).convert_to<double>();
    t.add(diff <= tol, tol - diff, "sigma(1,3)");
  }));

  out.push_back(run_check("anchors.sigma_2_5", "lambda = 1.5823 +/- 5e-5", [&](Tracker& t) {
    const double d = std::abs(dil.get(Family::sigma, 2, 5).root->witness.convert_to<double>() - 1.5823);
    t.add(d <= 5e-5, 5e-5 - d, "sigma(2,5)");
  }));

  out.push_back(run_check("anchors.sigma_4_6_log", "log lambda = 0.240965 +/- 1e-6", [&](Tracker& t) {
    const double d = std::abs(log(dil.get(Family::sigma, 4, 6).root->witness).convert_to<double>() - 0.240965);
    t.add(d <= 1e-6, 1e-6 - d, "sigma(4,6)");
  }));

  out.push_back(run_check("anchors.r2", "lambda(R_2) = 1.69562 +/- 1e-5", [&](Tracker& t) {
    const double d = std::abs(perron_root(r_matrix(2), tol).witness.convert_to<double>() - 1.69562);
    t.add(d <= 1e-5, 1e-5 - d, "R_2");
  }));

  return report;
}

}  // namespace pabraid
