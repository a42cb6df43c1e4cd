// Acceptance gate: nine end-to-end criteria, one pass/fail line each.
// Every comparison is exact rational equality; a criterion also fails when
// it exceeds its time budget.  Exit status 0 only if all nine pass.

#include <chrono>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"

using namespace pybx;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

void expect(Outcome& o, bool cond, const std::string& what) {
  if (!cond && o.ok) {
    o.ok = false;
    o.detail = what;
  }
}

const std::vector<Scalar> kWeights = {Scalar(1), Scalar(-1), Scalar(2)};

// 1. For every curated (algebra, r) pair the coboundary maps of r form a
// Poisson bialgebra exactly when the five invariance flags hold.
Outcome coboundary_equivalence() {
  Outcome o;
  std::size_t pairs = 0;
  for (const fx::CbdCase& c : fx::cbd_cases()) {
    ++pairs;
    const Classification cls = classify_r(c.alg, c.r);
    const CoboundaryMaps cm = coboundary_maps(c.alg, c.r);
    const bool audit =
        check_poisson_bialgebra(BialgebraSpec(c.alg, cm.delta, cm.Delta))
            .passed();
    expect(o, audit == cls.coboundary_ok(), c.name + ": audit disagrees");
    if (c.expect == 1) expect(o, audit, c.name + ": expected coboundary");
    if (c.expect == 0) expect(o, !audit, c.name + ": expected failure");
  }
  expect(o, pairs >= 20, "fewer than 20 curated pairs");
  return o;
}

// 2. Every Drinfeld double classifies Factorizable and the symmetric part
// of its canonical tensor is the exchange pairing between the two wings.
Outcome double_factorizability() {
  Outcome o;
  std::size_t count = 0;
  for (const fx::NamedBialgebra& nb : fx::bialgebra_corpus()) {
    ++count;
    const DrinfeldDouble dd = drinfeld_double(nb.b);
    expect(o, dd.cls.label == RLabel::Factorizable,
           nb.name + ": double not factorizable");
    const std::size_t n = nb.b.alg.dim;
    Matrix swap(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      swap.at(i, n + i) = Scalar(1);
      swap.at(n + i, i) = Scalar(1);
    }
    expect(o, RMatrixData(dd.r_canon).i_r == swap,
           nb.name + ": symmetric part is not the block swap");
  }
  expect(o, count >= 10, "fewer than 10 bialgebra fixtures");
  return o;
}

// 3. r -> (B, P) -> r and (B, P) -> r -> (B, P) are bitwise identities for
// weights 1, -1 and 2 on every factorizable fixture.
Outcome rb_round_trips() {
  Outcome o;
  for (const fx::FactCase& fc : fx::factorizable_cases())
    for (const Scalar& w : kWeights) {
      const RMatrixData rm(fc.r);
      const RotaBaxterData rb = factorizable_to_qrb(fc.alg, rm, w);
      const RMatrixData back = qrb_to_factorizable(fc.alg, rb);
      expect(o, back.r.coeffs == fc.r.coeffs,
             fc.name + ": r not recovered at weight " + w.str());

      const RotaBaxterData rb2 =
          factorizable_to_qrb(fc.alg, qrb_to_factorizable(fc.alg, rb), w);
      expect(o, rb2.p == rb.p,
             fc.name + ": operator not recovered at weight " + w.str());
      expect(o, rb2.form && rb.form && rb2.form->b == rb.form->b,
             fc.name + ": form not recovered at weight " + w.str());
    }
  return o;
}

// 4. Transposing r and passing to the tilde operator commute, and both
// compositions reproduce their inputs bitwise.
Outcome conversion_diagrams() {
  Outcome o;
  for (const fx::FactCase& fc : fx::factorizable_cases())
    for (const Scalar& w : kWeights) {
      const Report rep = diagram_check(fc.alg, RMatrixData(fc.r), w);
      expect(o, rep.passed(),
             fc.name + ": diagram fails at weight " + w.str());
    }
  return o;
}

// 5. The four Yang-Baxter formulations (r, transposed r, and the two dual
// homomorphism conditions) agree as booleans on randomized tensors.
Outcome yang_baxter_four_way() {
  Outcome o;
  fx::Rng rng(91);
  std::size_t total = 0, failing = 0;
  const FourWay solved = four_way_equivalence(fx::sl2(), fx::r_sl2());
  expect(o, solved.agree() && solved.pybe_r, "solved instance disagrees");
  ++total;
  for (const auto& [name, alg] : fx::algebra_corpus())
    for (int trial = 0; trial < 9; ++trial) {
      ++total;
      const FourWay fw = four_way_equivalence(alg, rng.two_tensor(alg.dim));
      expect(o, fw.agree(), name + ": four-way booleans diverge");
      if (!fw.pybe_r) ++failing;
    }
  expect(o, total >= 50, "fewer than 50 randomized tensors");
  expect(o, failing > 0, "no failing mutant was exercised");
  return o;
}

// 6. The truncated-jet differential fixture induces a Poisson bialgebra
// that passes the full audit, keeps the classification label, and clears
// the derivation-interchange precondition.
Outcome derivation_induction() {
  Outcome o;
  const DiffASIBialgebra b = fx::diff_bialg_plane_jet();
  const InducedPoisson ip = induce_poisson_bialgebra(b, RMatrixData(fx::r_zero(6)));
  expect(o, ip.diagrams.passed(), "induction diagram report failed");
  expect(o, fx::fact_true(ip.diagrams, "vip_holds"),
         "derivation-interchange precondition not confirmed");
  expect(o, fx::fact_true(ip.diagrams, "vip1_holds"),
         "interchange consequence on the coproduct not confirmed");
  expect(o, check_poisson_bialgebra(ip.pb).passed(),
         "induced structure fails the bialgebra audit");
  const std::string dl = fx::fact_of(ip.diagrams, "diff_label");
  const std::string pl = fx::fact_of(ip.diagrams, "poisson_label");
  expect(o, dl == "Triangular" && pl == dl,
         "label not inherited (" + dl + " vs " + pl + ")");
  expect(o, ip.pb.alg.bracket == fx::plane_jet_poisson().bracket,
         "induced bracket differs from the hand-written oracle");
  return o;
}

// 7. Differential doubles classify Factorizable and every vector splits as
// a = a_plus - a_minus through the inverse of the symmetric part.
Outcome differential_double_factorization() {
  Outcome o;
  fx::Rng rng(92);
  for (const auto& [name, b] : fx::diff_double_inputs()) {
    const DiffDouble dd = diff_drinfeld_double(b);
    const Classification cls =
        classify_diff_r(dd.dbl.diff_alg, dd.dbl.diff_coalg.psi, dd.r_canon);
    expect(o, cls.label == RLabel::Factorizable,
           name + ": double not factorizable");
    const RMatrixData& rm = dd.r_canon;
    const std::size_t n = rm.r.coeffs.rows();
    expect(o, rank(rm.i_r) == n, name + ": symmetric part not invertible");
    for (int trial = 0; trial < 100; ++trial) {
      const Vec x = rng.vector(n);
      const Vec y = solve(rm.i_r, x);
      const Vec split = vec_sub(rm.r_plus * y, rm.r_minus * y);
      expect(o, vec_is_zero(vec_sub(split, x)),
             name + ": factorization fails on a random vector");
    }
  }
  return o;
}

// 8. The four lemma biconditionals, each on 30+ randomized instances with
// curated instances where both sides hold and mutants where both fail.
Outcome lemma_biconditionals() {
  Outcome o;
  fx::Rng rng(93);

  // Invariant-tensor characterizations: direct, operator, and pairing form.
  {
    std::size_t count = 0;
    const Report good = adl_invariance_audit(
        fx::sl2(), TwoTensor(RMatrixData(fx::r_sl2()).s_plus));
    expect(o,
           fx::fact_true(good, "tensor_condition") &&
               fx::fact_true(good, "operator_condition") &&
               fx::fact_true(good, "pairing_condition"),
           "invariance: curated instance does not satisfy all three");
    const Report bad =
        adl_invariance_audit(fx::sl2(), TwoTensor(Matrix::identity(3)));
    expect(o,
           !fx::fact_true(bad, "tensor_condition") &&
               !fx::fact_true(bad, "operator_condition") &&
               !fx::fact_true(bad, "pairing_condition"),
           "invariance: mutant does not fail all three");
    count += 2;
    for (const auto& [name, alg] : fx::algebra_corpus())
      for (int trial = 0; trial < 6; ++trial) {
        ++count;
        const Report rep =
            adl_invariance_audit(alg, TwoTensor(rng.symmetric(alg.dim)));
        const std::string t = fx::fact_of(rep, "tensor_condition");
        expect(o,
               t == fx::fact_of(rep, "operator_condition") &&
                   t == fx::fact_of(rep, "pairing_condition"),
               "invariance: characterizations diverge over " + name);
      }
    expect(o, count >= 30, "invariance: fewer than 30 instances");
  }

  // Symmetric-part condition versus operator compatibility over a form.
  {
    std::size_t count = 0;
    for (const fx::QuadCase& qc : fx::quadratic_cases())
      for (const Scalar& w : kWeights) {
        const std::size_t n = qc.alg.dim;
        const Matrix rb_mat = form_tensors(qc.form).r_b.coeffs;
        const Matrix lam = rng.matrix(n, n);
        const Matrix curated =
            Scalar(-1, 2) * (w * rb_mat) + (lam - lam.transpose());
        const Report both = rbfna0_check(qc.form, TwoTensor(curated), w);
        expect(o,
               fx::fact_true(both, "sym_matches_form") &&
                   fx::fact_true(both, "compat_holds"),
               qc.name + ": curated instance fails a side");
        const Report neither = rbfna0_check(
            qc.form, TwoTensor(curated + Matrix::identity(n)), w);
        expect(o,
               !fx::fact_true(neither, "sym_matches_form") &&
                   !fx::fact_true(neither, "compat_holds"),
               qc.name + ": perturbed instance passes a side");
        const Report rand_rep =
            rbfna0_check(qc.form, rng.two_tensor(n), w);
        expect(o,
               fx::fact_of(rand_rep, "sym_matches_form") ==
                   fx::fact_of(rand_rep, "compat_holds"),
               qc.name + ": sides diverge on a random tensor");
        count += 3;
      }
    expect(o, count >= 30, "form condition: fewer than 30 instances");
  }

  // Derivation compatibility of r versus the operator intertwining form.
  {
    std::size_t count = 0;
    std::vector<std::pair<std::string, DiffASIBialgebra>> fixtures = {
        {"trunc3", fx::diff_bialg_trunc3()},
        {"plane_jet", fx::diff_bialg_plane_jet()},
        {"abelian2", fx::diff_bialg_abelian2()}};
    {
      Matrix unit_sq(3, 3);
      unit_sq.at(0, 0) = Scalar(3);
      const DiffASIBialgebra& t3 = fixtures[0].second;
      const Report both = psi_admissible_aybe(t3.diff_alg, t3.diff_coalg.psi,
                                              RMatrixData(TwoTensor(unit_sq)));
      expect(o,
             fx::fact_true(both, "pqadm2") &&
                 fx::fact_true(both, "plus_intertwines"),
             "derivation compat: curated instance fails a side");
      Matrix skew(3, 3);
      skew.at(1, 0) = Scalar(1);
      const Report neither = psi_admissible_aybe(
          t3.diff_alg, t3.diff_coalg.psi, RMatrixData(TwoTensor(skew)));
      expect(o,
             !fx::fact_true(neither, "pqadm2") &&
                 !fx::fact_true(neither, "plus_intertwines"),
             "derivation compat: mutant passes a side");
      count += 2;
    }
    for (const auto& [name, b] : fixtures)
      for (int trial = 0; trial < 10; ++trial) {
        ++count;
        const std::size_t n = b.diff_alg.alg.dim;
        const Report rep = psi_admissible_aybe(
            b.diff_alg, b.diff_coalg.psi, RMatrixData(rng.two_tensor(n)));
        expect(o,
               fx::fact_true(rep, "plus_matches_pqadm2") &&
                   fx::fact_true(rep, "minus_matches_pqadm1"),
               name + ": operator and tensor sides diverge");
      }
    expect(o, count >= 30, "derivation compat: fewer than 30 instances");
  }

  // Commuting with the derivations versus intertwining into the adjoints.
  {
    std::size_t count = 0;
    const DiffAlgebra t3 = fx::diff_trunc(3);
    const BilinearFormData pairing = fx::form_antidiag(3);
    const Matrix euler = t3.phi[0];
    for (const Matrix& p :
         {Matrix::identity(3), euler, euler * euler}) {
      const Report rep = dfof_check(t3, pairing, p);
      expect(o,
             fx::fact_true(rep, "p_commutes") &&
                 fx::fact_true(rep, "r_plus_intertwines"),
             "adjoint intertwining: curated operator fails a side");
      ++count;
    }
    {
      Matrix nil(3, 3);
      nil.at(2, 1) = Scalar(1);
      const Report rep = dfof_check(t3, pairing, nil);
      expect(o,
             !fx::fact_true(rep, "p_commutes") &&
                 !fx::fact_true(rep, "r_plus_intertwines"),
             "adjoint intertwining: mutant passes a side");
      ++count;
    }
    for (int trial = 0; trial < 26; ++trial) {
      ++count;
      const Report rep = dfof_check(t3, pairing, rng.matrix(3, 3));
      expect(o,
             fx::fact_of(rep, "p_commutes") ==
                 fx::fact_of(rep, "r_plus_intertwines"),
             "adjoint intertwining: sides diverge on a random operator");
    }
    const DiffAlgebra ab = fx::diff_bialg_abelian2().diff_alg;
    for (int trial = 0; trial < 4; ++trial) {
      ++count;
      const Report rep =
          dfof_check(ab, fx::form_identity(2), rng.matrix(2, 2));
      expect(o,
             fx::fact_of(rep, "p_commutes") ==
                 fx::fact_of(rep, "r_plus_intertwines"),
             "adjoint intertwining: sides diverge over the abelian fixture");
    }
    expect(o, count >= 30, "adjoint intertwining: fewer than 30 instances");
  }

  return o;
}

// 9. The text pipeline is deterministic: canonical emission is a fixed
// point of parsing, machine reports are byte-identical across runs, and
// exit codes encode the verdicts.
Outcome cli_determinism() {
  Outcome o;
  const std::string bin = fx::pybx_bin();
  expect(o, !bin.empty(), "PYBX_BIN is not set");
  if (bin.empty()) return o;

  for (const fx::CliCase& c : fx::cli_corpus()) {
    try {
      const WorkbenchSpec s = load_spec_text(c.text);
      const std::string once = serialize_spec(s);
      expect(o, serialize_spec(load_spec_text(once)) == once,
             c.name + ": serialization is not a fixed point");
    } catch (const Error&) {
      expect(o, !c.expect_pass, c.name + ": unexpected parse failure");
    }

    const std::string path = fx::write_spec_file("acc_" + c.name, c.text);
    std::string args = c.command;
    if (!c.extra.empty()) args += " " + c.extra;
    args += " --in " + path + " --format machine";
    const std::string out1 = "pybx_specs/acc_" + c.name + "_1.out";
    const std::string out2 = "pybx_specs/acc_" + c.name + "_2.out";
    const int rc1 = fx::run_pybx(args, out1);
    const int rc2 = fx::run_pybx(args, out2);
    expect(o, rc1 == (c.expect_pass ? 0 : 1),
           c.name + ": unexpected exit status " + std::to_string(rc1));
    expect(o, rc1 == rc2, c.name + ": exit status varies across runs");
    const std::string body = fx::slurp(out1);
    expect(o, !body.empty() && body == fx::slurp(out2),
           c.name + ": machine report differs across runs");
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    Outcome (*run)();
    double budget_ms;
  };
  const std::vector<Criterion> criteria = {
      {"coboundary maps match the invariance flags", coboundary_equivalence,
       10000},
      {"doubles are factorizable with the exchange pairing",
       double_factorizability, 10000},
      {"operator round trips are bitwise identities", rb_round_trips, 5000},
      {"transpose and tilde conversions commute", conversion_diagrams, 5000},
      {"yang-baxter formulations agree on random tensors",
       yang_baxter_four_way, 10000},
      {"derivation data induces a label-preserving bialgebra",
       derivation_induction, 10000},
      {"differential doubles factorize every vector",
       differential_double_factorization, 10000},
      {"lemma biconditionals hold with both-sided mutants",
       lemma_biconditionals, 10000},
      {"text pipeline is deterministic", cli_determinism, 5000},
  };

  bool all_ok = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const auto t1 = std::chrono::steady_clock::now();
    const double ms =
        std::chrono::duration<double, std::milli>(t1 - t0).count();
    if (ms >= criteria[i].budget_ms && o.ok) {
      o.ok = false;
      o.detail = "time budget exceeded";
    }
    all_ok = all_ok && o.ok;
    std::ostringstream line;
    line << (o.ok ? "[PASS]" : "[FAIL]") << " criterion " << (i + 1) << ": "
         << criteria[i].name << " (" << static_cast<long>(ms) << " ms)";
    if (!o.ok) line << " -- " << o.detail;
    std::cout << line.str() << "\n";
  }
  std::cout << (all_ok ? "acceptance: all criteria passed"
                       : "acceptance: FAILURES present")
            << "\n";
  return all_ok ? 0 : 1;
}
