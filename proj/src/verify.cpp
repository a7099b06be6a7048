#include "wbcc/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <functional>
#include <stdexcept>
#include <thread>

#include "wbcc/continuants.hpp"
#include "wbcc/egf.hpp"

namespace wbcc {

bool VerifyReport::ok() const { return first_failure() == nullptr; }

const CheckRecord* VerifyReport::first_failure() const {
  auto it = std::find_if(checks.begin(), checks.end(),
                         [](const CheckRecord& c) { return c.status == CheckStatus::Fail; });
  return it == checks.end() ? nullptr : &*it;
}

const std::vector<std::string>& check_families() {
  static const std::vector<std::string> families{
      "four_way",      "rising_base_cases",     "factorial_specialization", "stirling_specialization",
      "cayley_sign_relation", "ode_residual", "reg_cyc_factorization",  "cyc_vanishing",
  };
  return families;
}

namespace {

using Job = std::function<std::vector<CheckRecord>()>;

std::string rn(unsigned r, std::size_t n) { return "r=" + std::to_string(r) + " n=" + std::to_string(n); }

CheckRecord pass(std::string name, std::string params) {
  return CheckRecord{std::move(name), std::move(params), CheckStatus::Pass, {}};
}

CheckRecord fail(std::string name, std::string params, std::string detail) {
  return CheckRecord{std::move(name), std::move(params), CheckStatus::Fail, std::move(detail)};
}

BandMatrix make_matrix(const VerifyOptions& opt, unsigned r, std::size_t n) {
  BandMatrix m = build_matrix(r, n, opt.rule);
  if (opt.fault && opt.fault->row >= 1 && opt.fault->col >= 1 && opt.fault->row <= n && opt.fault->col <= n) {
    const std::size_t i = opt.fault->row - 1;
    const std::size_t j = opt.fault->col - 1;
    m = m.with_entry(i, j, m(i, j) + BiPoly(1));
  }
  return m;
}

std::vector<CheckRecord> four_way(const VerifyOptions& opt, unsigned r) {
  std::vector<CheckRecord> out;
  const auto recurrence = v_recurrence_table(r, opt.n_max);
  const auto from_egf = egf_coefficients(r, opt.n_max);
  for (std::size_t n = 0; n <= opt.n_max; ++n) {
    const BiPoly& expected = recurrence[n];
    const BandMatrix m = make_matrix(opt, r, n);
    std::string detail;
    auto compare = [&](const char* method, const BiPoly& got) {
      if (detail.empty() && got != expected) {
        detail = std::string(method) + ": " + got.to_string() + " vs recurrence: " + expected.to_string();
      }
    };
    compare("bareiss", det_bareiss(m));
    compare("egf", from_egf[n]);
    if (n <= kBruteForceMaxSize) compare("bruteforce", w_bruteforce(r, n));
    if (n <= kLeibnizMaxSize) compare("leibniz", det_leibniz(m));
    out.push_back(detail.empty() ? pass("four_way", rn(r, n)) : fail("four_way", rn(r, n), detail));
  }
  return out;
}

std::vector<CheckRecord> rising_base_cases(const VerifyOptions& opt, unsigned r) {
  std::vector<CheckRecord> out;
  ContinuantTable table(r);
  for (std::size_t n = 0; n + 1 <= r && n <= opt.n_max; ++n) {
    const BiPoly rising = rising_factorial(n);
    const BiPoly& rec = table[n];
    const BiPoly det = det_bareiss(make_matrix(opt, r, n));
    if (rec != rising) {
      out.push_back(fail("rising_base_cases", rn(r, n),
                         "recurrence: " + rec.to_string() + " vs rising factorial: " + rising.to_string()));
    } else if (det != rising) {
      out.push_back(fail("rising_base_cases", rn(r, n),
                         "bareiss: " + det.to_string() + " vs rising factorial: " + rising.to_string()));
    } else {
      out.push_back(pass("rising_base_cases", rn(r, n)));
    }
  }
  return out;
}

std::vector<CheckRecord> specializations(const VerifyOptions& opt, unsigned r) {
  std::vector<CheckRecord> factorial_records;
  std::vector<CheckRecord> stirling_records;
  ContinuantTable table(r);
  const BiPoly x = BiPoly::x();
  for (std::size_t n = 0; n <= opt.n_max; ++n) {
    const BiPoly& v = table[n];
    const BigRational at_ones = v.evaluate(1, 1);
    const BigRational n_fact(factorial(n));
    factorial_records.push_back(
        at_ones == n_fact ? pass("factorial_specialization", rn(r, n))
                          : fail("factorial_specialization", rn(r, n),
                                 "V(1,1): " + at_ones.to_string() + " vs n!: " + n_fact.to_string()));
    const BiPoly diagonal = v.substitute(x, x);
    const BiPoly rising = rising_factorial(n);
    stirling_records.push_back(
        diagonal == rising ? pass("stirling_specialization", rn(r, n))
                           : fail("stirling_specialization", rn(r, n),
                                  "V(x,x): " + diagonal.to_string() + " vs rising factorial: " + rising.to_string()));
  }
  factorial_records.insert(factorial_records.end(), stirling_records.begin(), stirling_records.end());
  return factorial_records;
}

std::vector<CheckRecord> cayley_sign(const VerifyOptions& opt) {
  std::vector<CheckRecord> out;
  ContinuantTable table(2);
  const BiPoly x = BiPoly::x();
  const BiPoly neg_y = -BiPoly::y();
  for (std::size_t n = 0; n <= opt.n_max; ++n) {
    const BiPoly flipped = u_cayley(n).substitute(x, neg_y);
    const BiPoly& v = table[n];
    out.push_back(flipped == v ? pass("cayley_sign_relation", "n=" + std::to_string(n))
                               : fail("cayley_sign_relation", "n=" + std::to_string(n),
                                      "U(x,-y): " + flipped.to_string() + " vs V: " + v.to_string()));
  }
  return out;
}

std::vector<CheckRecord> ode(const VerifyOptions& opt, unsigned r) {
  const std::string params = "r=" + std::to_string(r) + " order=" + std::to_string(opt.order);
  const TruncSeries residual = ode_residual(r, opt.order);
  for (std::size_t k = 0; k <= residual.order(); ++k) {
    if (!residual[k].is_zero()) {
      return {fail("ode_residual", params,
                   "nonzero residual at t^" + std::to_string(k) + ": " + residual[k].to_string())};
    }
  }
  return {pass("ode_residual", params)};
}

std::vector<CheckRecord> reg_cyc(const VerifyOptions& opt, unsigned r) {
  std::vector<CheckRecord> out;
  const std::size_t order = std::min(opt.order, opt.n_max);
  const std::string params = "r=" + std::to_string(r) + " order=" + std::to_string(order);
  out.push_back(reg_cyc_factorization_check(r, order)
                    ? pass("reg_cyc_factorization", params)
                    : fail("reg_cyc_factorization", params, "exp(A) or exp(B) disagrees with permutation counts"));
  for (std::size_t n = 1; n <= opt.n_max; ++n) {
    if (n % r == 0) continue;
    const BigInt c = cyc_count(r, n);
    out.push_back(c == 0 ? pass("cyc_vanishing", rn(r, n))
                         : fail("cyc_vanishing", rn(r, n), "cyc_count: " + to_string(c) + " vs 0"));
  }
  return out;
}

std::vector<CheckRecord> run_guarded(const Job& job, const std::string& family, const std::string& params) {
  try {
    return job();
  } catch (const std::exception& e) {
    return {fail(family, params, std::string("exception: ") + e.what())};
  }
}

}  // namespace

VerifyReport run_verify(const VerifyOptions& options) {
  if (options.r_max < 2) throw std::invalid_argument("r_max must be >= 2");
  if (options.order == 0) throw std::invalid_argument("order must be >= 1");
  const auto start = std::chrono::steady_clock::now();

  struct Task {
    std::string family;
    std::string params;
    Job job;
  };
  std::vector<Task> tasks;
  for (unsigned r = 2; r <= options.r_max; ++r) {
    tasks.push_back({"four_way", "r=" + std::to_string(r), [&options, r] { return four_way(options, r); }});
  }
  for (unsigned r = 2; r <= options.r_max; ++r) {
    tasks.push_back({"rising_base_cases", "r=" + std::to_string(r), [&options, r] { return rising_base_cases(options, r); }});
  }
  for (unsigned r = 2; r <= options.r_max; ++r) {
    tasks.push_back({"factorial_specialization", "r=" + std::to_string(r),
                     [&options, r] { return specializations(options, r); }});
  }
  tasks.push_back({"cayley_sign_relation", "", [&options] { return cayley_sign(options); }});
  for (unsigned r = 2; r <= options.r_max; ++r) {
    tasks.push_back({"ode_residual", "r=" + std::to_string(r), [&options, r] { return ode(options, r); }});
  }
  for (unsigned r = 2; r <= options.r_max; ++r) {
    tasks.push_back({"reg_cyc_factorization", "r=" + std::to_string(r), [&options, r] { return reg_cyc(options, r); }});
  }

  std::vector<std::vector<CheckRecord>> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      results[i] = run_guarded(tasks[i].job, tasks[i].family, tasks[i].params);
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(tasks.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  // Regroup by family; order within a family follows task order.
  VerifyReport report;
  for (const auto& family : check_families()) {
    for (const auto& batch : results) {
      for (const auto& rec : batch) {
        if (rec.name == family) report.checks.push_back(rec);
      }
    }
  }
  report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace wbcc
