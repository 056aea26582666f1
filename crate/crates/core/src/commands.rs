//! Command implementations behind the `superlie` binary. Each takes file
//! contents and returns a report with an exit status.

use std::time::Instant;

use crate::config::check_budget;
use crate::derivations::{derivation_algebra, non_algebraic_example, kac_semisimple_check, tensor_der, TensorDerAlgebra};
use crate::error::Error;
use crate::format::{parse_algebra, parse_coaction, parse_kac_input, parse_matrix};
use crate::hopf::{section8_fixture, CoactionReport, HopfAlgebra, NamedCheck};
use crate::jordan::{is_nilpotent, jordan_chevalley, one_dim_algebraicity, Algebraicity};
use crate::lie::{
    center, commutant, derived_series, even_center, even_radical, is_ideal, is_quasireductive, LieSuperAlgebra, Subspace,
};
use crate::linalg::{solve_in_span, Matrix};
use crate::points::{section10_commutator, section10_lie, Section10Point};
use crate::random;
use crate::report::Report;
use crate::scalar::format_scalar;
use crate::supermatrix::SuperMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exit {
    Pass,
    Failure,
    InputError,
}

impl Exit {
    pub fn code(self) -> i32 {
        match self {
            Exit::Pass => 0,
            Exit::Failure => 1,
            Exit::InputError => 2,
        }
    }

    fn from_verdict(ok: bool) -> Self {
        if ok {
            Exit::Pass
        } else {
            Exit::Failure
        }
    }
}

#[derive(Clone, Debug)]
pub struct Outcome {
    pub report: Report,
    pub exit: Exit,
}

#[derive(Clone, Copy, Debug)]
pub struct Options {
    /// Degree bound for Hopf-side scans.
    pub truncation: usize,
    pub seed: u64,
}

impl Default for Options {
    fn default() -> Self {
        Options { truncation: 4, seed: 1 }
    }
}

fn header(command: &str) -> Report {
    let mut r = Report::new();
    r.set("command", command);
    r
}

fn finish(mut report: Report, exit: Exit, start: Instant) -> Outcome {
    report.set("status", if exit == Exit::Pass { "pass" } else if exit == Exit::Failure { "fail" } else { "input error" });
    report.set("elapsed_ms", start.elapsed().as_millis() as u64);
    Outcome { report, exit }
}

/// Errors from malformed input exit with 2, everything else with 1.
fn error_outcome(mut report: Report, err: Error, start: Instant) -> Outcome {
    let exit = match err {
        Error::Parse { .. } | Error::Budget { .. } | Error::DimensionMismatch { .. } | Error::NonSquare { .. } => {
            Exit::InputError
        }
        _ => Exit::Failure,
    };
    report.set("error", err.to_string());
    finish(report, exit, start)
}

fn matrix_rows(m: &Matrix) -> Vec<String> {
    (0..m.rows()).map(|i| m.row(i).iter().map(format_scalar).collect::<Vec<_>>().join(" ")).collect()
}

fn span_list(l: &LieSuperAlgebra, s: &Subspace) -> Vec<String> {
    s.basis().iter().map(|v| l.format_vector(v)).collect()
}

fn load(report: &mut Report, text: &str) -> Result<LieSuperAlgebra, Error> {
    let l = parse_algebra(text)?;
    report.set("algebra", l.name()).set("dims", format!("{}|{}", l.even_dim(), l.odd_dim()));
    Ok(l)
}

pub fn cmd_validate(text: &str) -> Outcome {
    let start = Instant::now();
    let mut report = header("validate");
    let l = match load(&mut report, text) {
        Ok(l) => l,
        Err(e) => return error_outcome(report, e, start),
    };
    let v = l.validate();
    report.set("triples_checked", v.triples_checked as u64).set("valid", v.is_valid());
    if let Some(violation) = &v.violation {
        report.set("witness", violation.describe(&l));
    }
    finish(report, Exit::from_verdict(v.is_valid()), start)
}

pub fn cmd_analyze(text: &str) -> Outcome {
    let start = Instant::now();
    let mut report = header("analyze");
    let l = match load(&mut report, text) {
        Ok(l) => l,
        Err(e) => return error_outcome(report, e, start),
    };
    let v = l.validate();
    report.set("valid", v.is_valid());
    if let Some(violation) = &v.violation {
        report.set("witness", violation.describe(&l));
        return finish(report, Exit::Failure, start);
    }
    let z = center(&l);
    let c = commutant(&l);
    report
        .set("center_dim", z.dim() as u64)
        .set_list("center", span_list(&l, &z))
        .set("center_is_ideal", is_ideal(&l, &z))
        .set("commutant_dim", c.dim() as u64)
        .set_list("commutant", span_list(&l, &c))
        .set("commutant_is_ideal", is_ideal(&l, &c));
    let series = derived_series(&l);
    let mut dims = vec![l.dim() as u64];
    dims.extend(series.iter().map(|s| s.dim() as u64));
    report.set_list("derived_series_dims", dims);
    let rad = even_radical(&l);
    let zc = even_center(&l);
    report.set("radical_dim", rad.dim() as u64).set_list("radical", span_list(&l, &rad));
    report.set("even_center_dim", zc.dim() as u64);
    let q = is_quasireductive(&l);
    report.set("quasireductive", q.is_quasireductive());
    if let Some(reason) = q.failure() {
        report.set("quasireductive_failure", reason);
    }
    finish(report, Exit::Pass, start)
}

pub fn cmd_derivations(text: &str) -> Outcome {
    let start = Instant::now();
    let mut report = header("derivations");
    let l = match load(&mut report, text) {
        Ok(l) => l,
        Err(e) => return error_outcome(report, e, start),
    };
    if let Some(violation) = l.validate().violation {
        report.set("valid", false).set("witness", violation.describe(&l));
        return finish(report, Exit::Failure, start);
    }
    let der = match derivation_algebra(&l) {
        Ok(d) => d,
        Err(e) => return error_outcome(report, e, start),
    };
    let a = der.algebra();
    let (ie, io) = der.inner().sdim();
    let (oe, oo) = der.outer_dims();
    report
        .set("der_dims", format!("{}|{}", a.even_dim(), a.odd_dim()))
        .set("inner_dims", format!("{ie}|{io}"))
        .set("outer_dims", format!("{oe}|{oo}"))
        .set_list("basis", a.labels().iter().cloned())
        .set("closed_under_bracket", a.validate().is_valid());
    finish(report, Exit::Pass, start)
}

pub fn cmd_jordan(text: &str) -> Outcome {
    let start = Instant::now();
    let mut report = header("jordan");
    let m = match parse_matrix(text) {
        Ok(m) => m,
        Err(e) => return error_outcome(report, e, start),
    };
    if !m.is_square() {
        return error_outcome(report, Error::NonSquare { rows: m.rows(), cols: m.cols() }, start);
    }
    let split = match jordan_chevalley(&m) {
        Ok(s) => s,
        Err(e) => return error_outcome(report, e, start),
    };
    let (s, n) = (&split.semisimple, &split.nilpotent);
    let sum_ok = (s + n) == m;
    let commute = s.commutator(n).is_zero();
    let nilpotent = is_nilpotent(n);
    let annihilated = split.squarefree.eval_matrix(s).is_zero();
    report
        .set_list("semisimple", matrix_rows(s))
        .set_list("nilpotent", matrix_rows(n))
        .set("squarefree_polynomial", split.squarefree.to_string())
        .set("newton_iterations", split.iterations as u64)
        .set("sum_is_input", sum_ok)
        .set("parts_commute", commute)
        .set("nilpotent_part_is_nilpotent", nilpotent)
        .set("squarefree_annihilates_semisimple", annihilated);
    if !m.is_zero() {
        if let Ok(verdict) = one_dim_algebraicity(&m) {
            report.set("verdict", verdict.name());
        }
    }
    finish(report, Exit::from_verdict(sum_ok && commute && nilpotent && annihilated), start)
}

/// The subalgebra generated by `s`.
fn generated_subalgebra(l: &LieSuperAlgebra, s: &Subspace) -> Subspace {
    let mut h = s.clone();
    loop {
        let basis = h.basis();
        let mut grew = false;
        for (i, a) in basis.iter().enumerate() {
            for b in &basis[i..] {
                if let Ok(c) = l.bracket(a, b) {
                    grew |= h.insert(&c);
                }
            }
        }
        if !grew {
            return h;
        }
    }
}

pub fn cmd_kac(algebra_text: &str, subalgebra_text: &str) -> Outcome {
    let start = Instant::now();
    let mut report = header("kac");
    let l = match load(&mut report, algebra_text) {
        Ok(l) => l,
        Err(e) => return error_outcome(report, e, start),
    };
    let input = match parse_kac_input(subalgebra_text) {
        Ok(s) => s,
        Err(e) => return error_outcome(report, e, start),
    };
    if let Some(violation) = l.validate().violation {
        report.set("valid", false).set("witness", violation.describe(&l));
        return finish(report, Exit::Failure, start);
    }
    let t = match tensor_der(&[(l.clone(), input.n)]) {
        Ok(t) => t,
        Err(e) => return error_outcome(report, e, start),
    };
    let der = t.algebra();
    let mut gens = Subspace::zero(der.parities());
    if input.include_inner {
        for (_, v) in t.inner_basis() {
            gens.insert(&v);
        }
    }
    for d in &input.gradings {
        gens.insert(&t.grading_vector(0, d));
    }
    for (line, v) in &input.vectors {
        if v.len() != t.dim() {
            let err = Error::Parse { line: *line, message: format!("vector has {} coordinates, expected {}", v.len(), t.dim()) };
            return error_outcome(report, err, start);
        }
        if der.vector_parity(v).is_none() {
            let err = Error::Parse { line: *line, message: "vector is not homogeneous".into() };
            return error_outcome(report, err, start);
        }
        gens.insert(v);
    }
    let h = generated_subalgebra(der, &gens);
    convention(&mut report, &t);
    report
        .set("sym", input.n as u64)
        .set("der_dim", t.dim() as u64)
        .set("generators_dim", gens.dim() as u64)
        .set("subalgebra_dim", h.dim() as u64);
    for w in t.warnings() {
        report.set("warning", w.clone());
    }
    match kac_semisimple_check(&t, &h) {
        Ok(kac) => {
            let parts: Vec<String> = kac
                .summands
                .iter()
                .map(|s| format!("{}: rank {} of {}{}", s.name, s.rank, s.n, if s.is_onto() { ", onto" } else { "" }))
                .collect();
            report.set_list("projections", parts).set("semisimple", kac.is_semisimple());
            finish(report, Exit::Pass, start)
        }
        Err(e) => error_outcome(report, e, start),
    }
}

const COMPOSITION_SIGN: &str = "a∂ is the right action of ∂ on a, with no further sign";
const CHARACTER_CHECK: &str = "nilpotency and parity only; containment in K[G]K[G]_1 is not enforced";

fn convention(report: &mut Report, t: &TensorDerAlgebra) {
    report
        .set("composition_sign", COMPOSITION_SIGN)
        .set("bracket_matches_operators", t.formula_mismatch().is_none())
        .set("super_jacobi", t.algebra().validate().is_valid());
}

pub fn cmd_coaction(text: &str, options: Options) -> Outcome {
    let start = Instant::now();
    let mut report = header("coaction");
    let data = match parse_coaction(text) {
        Ok(d) => d,
        Err(e) => return error_outcome(report, e, start),
    };
    report.set("truncation", options.truncation as u64);
    match data.verify(options.truncation) {
        Ok(v) => {
            let ok = v.passed();
            report.section("checks", coaction_checks(&v));
            report.set("character_check", CHARACTER_CHECK);
            report.set("verified", ok);
            finish(report, Exit::from_verdict(ok), start)
        }
        Err(e) => error_outcome(report, e, start),
    }
}

fn check_line(c: &NamedCheck) -> String {
    match &c.witness {
        None => format!("pass ({} checked)", c.checked),
        Some(w) => format!("FAIL: {w}"),
    }
}

fn coaction_checks(v: &CoactionReport) -> Report {
    let mut r = Report::new();
    for c in &v.checks {
        r.set(c.name, check_line(c));
    }
    r
}

pub fn cmd_counterexample(name: &str, options: Options) -> Outcome {
    let start = Instant::now();
    let mut report = header(&format!("counterexample {name}"));
    let result = match name {
        "sec10" => sec10(&mut report, options),
        "sec8" => sec8(&mut report, options),
        "notalg" => notalg(&mut report),
        other => {
            let err = Error::Precondition(format!("unknown counterexample '{other}'; expected sec8, sec10 or notalg"));
            report.set("error", err.to_string());
            return finish(report, Exit::InputError, start);
        }
    };
    match result {
        Ok(ok) => {
            report.set("reproduced", ok);
            finish(report, Exit::from_verdict(ok), start)
        }
        Err(e) => error_outcome(report, e, start),
    }
}

/// Number of random point pairs for the commutator identity.
pub const SEC10_PAIRS: usize = 24;

fn sec10(report: &mut Report, options: Options) -> Result<bool, Error> {
    let lie = section10_lie()?;
    let basis: Vec<_> = [&lie.x, &lie.y, &lie.v].iter().map(|m| m.body().flatten()).collect();
    let express = |m: &SuperMatrix| -> String {
        match solve_in_span(&basis, &m.body().flatten()) {
            Some(c) if m.q() == 0 => lie.algebra.format_vector(&c),
            _ => format!("{m:?}"),
        }
    };
    let relations: Vec<String> = lie
        .brackets
        .iter()
        .map(|(label, m)| format!("{} = {}", label.replace(", ", ","), express(m)))
        .collect();
    report.set_list("relations", relations);
    report.set("relations_hold", lie.commuting && lie.vv_is_2x_plus_4y);
    let from_table = lie.algebra.bracket(&lie.algebra.basis_vector(2), &lie.algebra.basis_vector(2))?;
    report.set("structure_constants_agree", lie.algebra.format_vector(&from_table) == "2x + 4y");
    report.set_list(
        "dual_points",
        lie.dual_points.iter().map(|(n, ok)| format!("{n}: {}", if *ok { "in the kernel and in the supergroup" } else { "FAIL" })),
    );

    let mut rng = random::rng(options.seed);
    let mut agreed = 0usize;
    let mut qs = Vec::new();
    let mut failure = None;
    for k in 0..SEC10_PAIRS {
        let q = 2 + k % 5;
        check_budget(q)?;
        qs.push(q as u64);
        let p = Section10Point::random(&mut rng, q);
        let r = Section10Point::random(&mut rng, q);
        match section10_commutator(&p, &r) {
            Ok(c) if c.t.is_zero() => agreed += 1,
            Ok(_) => failure = failure.or(Some(format!("pair {k}: commutator has an odd part"))),
            Err(e) => failure = failure.or(Some(format!("pair {k}: {e}"))),
        }
    }
    let mut comm = Report::new();
    comm.set("seed", options.seed)
        .set("pairs", SEC10_PAIRS as u64)
        .set("grassmann_generators", format!("{}..{}", qs.iter().min().unwrap(), qs.iter().max().unwrap()))
        .set("agreeing", agreed as u64);
    if let Some(f) = &failure {
        comm.set("witness", f.clone());
    }
    report.section("commutator_identity", comm);

    report.set_list("even_representation", matrix_rows(&lie.even_rep));
    if let Algebraicity::NotAlgebraic { semisimple, nilpotent } = &lie.verdict {
        report.set_list("semisimple_part", matrix_rows(semisimple));
        report.set_list("nilpotent_part", matrix_rows(nilpotent));
    }
    report.set("verdict", lie.verdict.name());
    let series: Vec<String> = derived_series(&lie.algebra)
        .iter()
        .map(|s| if s.dim() == 0 { "0".to_string() } else { format!("span{{{}}}", span_list(&lie.algebra, s).join(", ")) })
        .collect();
    report.set_list("derived_series", series);
    Ok(lie.holds() && agreed == SEC10_PAIRS && lie.algebra.validate().is_valid())
}

fn sec8(report: &mut Report, options: Options) -> Result<bool, Error> {
    let s = section8_fixture(options.truncation)?;
    let d = &s.data;
    let n = d.dim();
    let rows: Vec<String> = (0..n).map(|i| (0..n).map(|j| d.matrix[i][j].format()).collect::<Vec<_>>().join(", ")).collect();
    report
        .set("source", d.source.name())
        .set("target", d.target.name())
        .set_list("f_matrix", rows)
        .set_list("characters", (0..n).map(|i| format!("f{}(t) = {}", i + 1, d.characters[0][i])))
        .set("delta_f1", s.delta_f1.clone())
        .set("rho_t", s.rho_t.clone())
        .set("truncation", options.truncation as u64);
    report.section("comodule", coaction_checks(&s.verification));
    report.set("character_check", CHARACTER_CHECK);

    let lemma = &s.lemma;
    let mut lr = Report::new();
    lr.set("residue", lemma.residue.clone())
        .set_list("coefficients", lemma.coefficients.iter().map(|(g, c)| format!("{g}: {c}")))
        .set("independence_rank", lemma.independence_rank as u64)
        .set("linear_rank", lemma.linear_rank as u64)
        .set("residue_modulo_W", lemma.full_space_residue.clone());
    let families: Vec<serde_json::Value> = lemma
        .families
        .iter()
        .map(|f| {
            let mut fr = Report::new();
            fr.set("family", f.description.clone())
                .set("excluded_by_rank", f.excluded_by_rank)
                .set_list("residues", f.representatives.iter().map(|(v, r)| format!("V = {v}: {r}")));
            serde_json::from_str(&fr.to_json()).expect("valid json")
        })
        .collect();
    lr.set_list("families", families).set("holds", lemma.holds());
    report.section("lemma_no_normal_unipotent_subgroup", lr);

    let cor = &s.corollary;
    let mut cr = Report::new();
    cr.set("difference", cor.difference.clone())
        .set_list("coefficients", cor.coefficients.iter().map(|(x, c)| format!("{x}: {c}")))
        .set("linear_rank", cor.linear_rank as u64)
        .set_list(
            "lines",
            cor.lines.iter().map(|l| format!("ideal of {}: {} outside", l.line, l.outside.join(", "))),
        )
        .set("holds", cor.holds());
    report.section("corollary_trivial_unipotent_radical", cr);
    Ok(s.holds())
}

fn notalg(report: &mut Report) -> Result<bool, Error> {
    let ex = non_algebraic_example()?;
    convention(report, &ex.der);
    report
        .set("der_dim", ex.der.dim() as u64)
        .set("h_dim", ex.h.dim() as u64)
        .set("h_closed", ex.h_closed)
        .set("h0_dim", ex.h0_dim as u64)
        .set_list("v_basis", ex.v_labels.iter().cloned())
        .set("v_is_h0_submodule", ex.v_is_submodule)
        .set_list("operator", matrix_rows(&ex.operator))
        .set_list("semisimple_part", matrix_rows(&ex.split.semisimple))
        .set_list("nilpotent_part", matrix_rows(&ex.split.nilpotent))
        .set("semisimple_part_in_h0_image", ex.semisimple_in_image)
        .set("nilpotent_part_in_h0_image", ex.nilpotent_in_image)
        .set("kac_semisimple", ex.kac.is_semisimple())
        .set("verdict", if ex.not_algebraic() { "NotAlgebraic" } else { "inconclusive" });
    Ok(ex.h.dim() == 15 && ex.h_closed && ex.v_is_submodule && ex.not_algebraic() && ex.kac.is_semisimple())
}

/// Runs every structural check on one bundled algebra.
pub fn structural_suite(l: &LieSuperAlgebra) -> Vec<(String, bool)> {
    let mut out = Vec::new();
    out.push(("validate".to_string(), l.validate().is_valid()));
    let z = center(l);
    let c = commutant(l);
    out.push(("center is an ideal".into(), is_ideal(l, &z)));
    out.push(("commutant is an ideal".into(), is_ideal(l, &c)));
    let series = derived_series(l);
    let mut prev = Subspace::full(l.parities());
    let mut monotone = true;
    for s in &series {
        monotone &= prev.contains_subspace(s) && is_ideal(l, s);
        prev = s.clone();
    }
    out.push(("derived series decreasing ideals".into(), monotone));
    let quotient_ok = [z.clone(), c.clone()].iter().all(|i| match crate::lie::quotient(l, i) {
        Ok(qt) => qt.dim() + i.dim() == l.dim() && qt.validate().is_valid(),
        Err(_) => false,
    });
    out.push(("quotient dimension law".into(), quotient_ok));
    out
}
