#include "zeck/oracle.hpp"

#include <algorithm>
#include <future>
#include <sstream>
#include <tuple>

#include "zeck/beatty.hpp"
#include "zeck/codec.hpp"
#include "zeck/fibword.hpp"
#include "zeck/wythoff.hpp"

namespace zeck {

std::vector<Integer> brute_occurrences(const DigitBlock& w, std::size_t k, const Integer& bound) {
  std::vector<Integer> out;
  for (Integer n = 0; n < bound; ++n) {
    if (block_at(n, w, k)) out.push_back(n);
  }
  return out;
}

std::vector<Integer> brute_first(const DigitBlock& w, std::size_t k, std::size_t count) {
  std::vector<Integer> out;
  out.reserve(count);
  for (Integer n = 0; out.size() < count; ++n) {
    if (block_at(n, w, k)) out.push_back(n);
  }
  return out;
}

Rational empirical_density(const DigitBlock& w, std::size_t k, const Integer& bound) {
  std::size_t hits = 0;
  for (Integer n = 0; n < bound; ++n) {
    if (block_at(n, w, k)) ++hits;
  }
  return Rational(Integer(hits), bound);
}

std::size_t VerificationReport::passed() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return c.passed; }));
}

std::size_t VerificationReport::failed() const { return checks.size() - passed(); }

const CheckResult* VerificationReport::first_failure() const {
  auto it = std::find_if(checks.begin(), checks.end(), [](const auto& c) { return !c.passed; });
  return it == checks.end() ? nullptr : &*it;
}

namespace {

using Checks = std::vector<CheckResult>;

std::string params(const DigitBlock& w, std::size_t k) {
  return "w=" + (w.empty() ? std::string("()") : w.str()) + " k=" + std::to_string(k);
}

CheckResult pass(std::string name, std::string parameters) { return {std::move(name), std::move(parameters), true, {}}; }

CheckResult fail(std::string name, std::string parameters, Counterexample ce) {
  return {std::move(name), std::move(parameters), false, std::move(ce)};
}

std::vector<DigitBlock> blocks_up_to(std::size_t depth, bool include_empty) {
  std::vector<DigitBlock> out;
  for (std::size_t m = include_empty ? 0 : 1; m <= depth; ++m) {
    auto level = all_blocks(m);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

Checks oracle_equivalence(const CertifyConfig& cfg) {
  Checks out;
  for (const auto& w : blocks_up_to(cfg.depth, false)) {
    for (std::size_t k = 0; k <= cfg.k_max; ++k) {
      const auto expected = brute_first(w, k, cfg.n_terms);
      const OccurrenceSet set = k == 0 ? OccurrenceSet({cfg.solver(w).gbs}) : solve_positional(w, k);
      std::vector<Integer> got;
      std::string error;
      try {
        got = union_enumerate(set, cfg.n_terms);
      } catch (const std::exception& e) {
        error = e.what();
      }
      if (!error.empty()) {
        out.push_back(fail("oracle-equivalence", params(w, k), {w.str(), k, 0, "disjoint branches", error}));
        continue;
      }
      auto mismatch = std::mismatch(expected.begin(), expected.end(), got.begin());
      if (mismatch.first == expected.end()) {
        out.push_back(pass("oracle-equivalence", params(w, k)));
      } else {
        const auto idx = static_cast<std::size_t>(mismatch.first - expected.begin());
        out.push_back(fail("oracle-equivalence", params(w, k),
                           {w.str(), k, Integer(idx + 1), mismatch.first->str(), mismatch.second->str()}));
      }
    }
  }
  return out;
}

Checks dual_representation(const CertifyConfig& cfg) {
  Checks out;
  for (const auto& w : blocks_up_to(cfg.depth, true)) {
    const BlockSolution s = cfg.solver(w);
    CheckResult r = pass("dual-representation", params(w, 0));
    for (Integer n = 1; n <= cfg.n_terms; ++n) {
      const Integer lhs = direct_eval(s.compound, n);
      const Integer rhs = gbs_eval(s.gbs, n);
      if (lhs != rhs) {
        r = fail("dual-representation", params(w, 0), {w.str(), 0, n, lhs.str(), rhs.str()});
        break;
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

Checks partition(const CertifyConfig& cfg) {
  Checks out;
  const auto size = static_cast<std::size_t>(cfg.bound);
  for (std::size_t m = 1; m <= cfg.depth; ++m) {
    std::vector<unsigned> hits(size, 0);
    for (const auto& w : all_blocks(m)) {
      const GBS g = cfg.solver(w).gbs;
      for (Integer n = 1;; ++n) {
        const Integer v = gbs_eval(g, n);
        if (v >= cfg.bound) break;
        if (v >= 0) ++hits[static_cast<std::size_t>(v)];
      }
    }
    const auto bad = std::find_if(hits.begin(), hits.end(), [](unsigned h) { return h != 1; });
    const std::string p = "m=" + std::to_string(m);
    if (bad == hits.end()) {
      out.push_back(pass("partition", p));
    } else {
      const auto value = static_cast<std::size_t>(bad - hits.begin());
      out.push_back(fail("partition", p, {encode(Integer(value)).digits(), 0, Integer(value), "1 class", std::to_string(*bad) + " classes"}));
    }
  }
  return out;
}

Checks tree_step(const CertifyConfig& cfg) {
  Checks out;
  for (const auto& w : blocks_up_to(cfg.depth == 0 ? 0 : cfg.depth - 1, true)) {
    if (!w.empty() && w.leading() == 1) continue;
    const GBS parent = cfg.solver(w).gbs;
    const auto check = [&](int digit, const GBS& expected) {
      const DigitBlock child = w.extend_left(digit);
      const GBS got = cfg.solver(child).gbs;
      if (got == expected) {
        out.push_back(pass("tree-step", params(child, 0)));
      } else {
        out.push_back(fail("tree-step", params(child, 0), {child.str(), 0, 0, to_string(expected), to_string(got)}));
      }
    };
    check(0, compose_A(parent));
    check(1, compose_B(parent));
  }
  return out;
}

Checks identities(const CertifyConfig& cfg) {
  Checks out;
  for (const auto& id : identity_catalog(0, static_cast<std::int64_t>(cfg.identity_m_max))) {
    const std::string p = "m=" + std::to_string(id.m);
    const auto bad = first_mismatch(id, cfg.identity_n);
    if (!bad) {
      out.push_back(pass("identity: " + id.name, p));
    } else {
      out.push_back(fail("identity: " + id.name, p,
                         {to_string(id.left), 0, *bad, evaluate(id.right, *bad).str(), evaluate(id.left, *bad).str()}));
    }
  }
  return out;
}

Checks csh_soundness(const CertifyConfig& cfg) {
  Checks out;
  std::vector<std::string> words{""};
  for (std::size_t len = 1; len <= cfg.csh_length; ++len) {
    std::vector<std::string> next;
    for (const auto& u : words) {
      next.push_back(u + 'A');
      next.push_back(u + 'B');
    }
    words = std::move(next);
    CheckResult r = pass("csh-soundness", "length=" + std::to_string(len));
    for (const auto& letters : words) {
      const WythoffWord u(letters);
      const GBS g = csh_reduce(u);
      for (Integer n = 1; n <= cfg.n_terms && r.passed; ++n) {
        const Integer direct = direct_eval(u, n);
        const Integer closed = gbs_eval(g, n);
        if (direct != closed) r = fail(r.name, r.parameters, {letters, 0, n, direct.str(), closed.str()});
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

Checks fibword_coding(const CertifyConfig&) {
  Checks out;
  for (std::size_t m = 2; m <= 5; ++m) {
    for (const auto& w : all_blocks(m)) {
      if (w.leading() != 0) continue;
      CheckResult r = pass("fibword-coding", "w=" + w.str());
      for (std::size_t n = 3; n <= 12 && r.passed; ++n) {
        const FibWord got = occurrence_coding(w, n);
        const FibWord expected = morphism_iterate(n - 2);
        if (got != expected) r = fail(r.name, r.parameters, {w.str(), 0, Integer(n), expected, got});
      }
      out.push_back(std::move(r));
    }
  }
  const FibWord word = morphism_iterate(20);
  for (char letter : {'a', 'b'}) {
    CheckResult r = pass("fibword-positions", std::string("letter=") + letter);
    const auto pos = positions_of(letter, word);
    for (std::size_t i = 0; i < pos.size(); ++i) {
      const Integer n(i + 1);
      const Integer expected = letter == 'a' ? wythoff_A(n) : wythoff_B(n);
      if (expected != pos[i]) {
        r = fail(r.name, r.parameters, {"", 0, n, expected.str(), std::to_string(pos[i])});
        break;
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

Checks densities(const CertifyConfig& cfg) {
  Checks out;
  const Rational tolerance(1, 1000);
  for (const auto& w : blocks_up_to(std::min<std::size_t>(cfg.depth, 4), false)) {
    for (std::size_t k = 0; k <= cfg.k_max; ++k) {
      const DensityValue d = density(w, k);
      const Rational empirical = empirical_density(w, k, cfg.bound);
      const bool within = golden_cmp(d.value, empirical - tolerance) == std::strong_ordering::greater &&
                          golden_cmp(d.value, empirical + tolerance) == std::strong_ordering::less;
      if (within) {
        out.push_back(pass("density-empirical", params(w, k)));
      } else {
        out.push_back(fail("density-empirical", params(w, k),
                           {w.str(), k, cfg.bound, d.value.to_decimal(6), empirical.str()}));
      }
    }
  }
  for (std::size_t m = 1; m <= cfg.depth; ++m) {
    for (std::size_t k = 0; k <= cfg.k_max + 1; ++k) {
      const GoldenNumber total = density_total(m, k);
      const std::string p = "m=" + std::to_string(m) + " k=" + std::to_string(k);
      if (total == GoldenNumber(1, 0)) {
        out.push_back(pass("density-total", p));
      } else {
        out.push_back(fail("density-total", p, {"", k, Integer(m), "1+0*phi", to_string(total)}));
      }
    }
  }
  return out;
}

}  // namespace

VerificationReport certify(const CertifyConfig& config) {
  using Family = Checks (*)(const CertifyConfig&);
  const std::vector<Family> families{oracle_equivalence, dual_representation, partition, tree_step,
                                     identities,         csh_soundness,       fibword_coding, densities};
  const std::vector<Family> root_only{dual_representation};
  const auto& selected = config.depth == 0 ? root_only : families;
  VerificationReport report;
  auto collect = [&report](Checks&& c) {
    std::move(c.begin(), c.end(), std::back_inserter(report.checks));
  };
  if (config.parallel) {
    std::vector<std::future<Checks>> jobs;
    for (Family f : selected) jobs.push_back(std::async(std::launch::async, f, std::cref(config)));
    for (auto& j : jobs) collect(j.get());
  } else {
    for (Family f : selected) collect(f(config));
  }
  std::stable_sort(report.checks.begin(), report.checks.end(), [](const CheckResult& a, const CheckResult& b) {
    return std::tie(a.name, a.parameters) < std::tie(b.name, b.parameters);
  });
  return report;
}

}  // namespace zeck
