//! One line per acceptance criterion. Exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use superlie::commands::{cmd_counterexample, cmd_kac, structural_suite, Exit, Options};
use superlie::derivations::{derivation_space, tensor_der};
use superlie::fixtures;
use superlie::hopf::{verify_hopf, AbelianHopfAlgebra};
use superlie::jordan::{is_nilpotent, jordan_chevalley};
use superlie::lie::{is_quasireductive, make_sl2};
use superlie::linalg::{solve_in_span, Matrix};
use superlie::points::{adjoint_hopf, adjoint_matrix, convolution_bracket, Functional, GLPoint};
use superlie::poly::Poly;
use superlie::random;
use superlie::report::Report;
use superlie::scalar::int;
use superlie::supermatrix::SuperMatrix;
use superlie::Parity;

type Check = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn field<'a>(r: &'a Report, path: &str) -> &'a serde_json::Value {
    r.lookup(path).unwrap_or_else(|| panic!("report has no '{path}'"))
}

fn sec10() -> Check {
    let out = cmd_counterexample("sec10", Options::default());
    let r = &out.report;
    let text = r.to_text();
    for rel in ["[x,y] = 0", "[x,v] = 0", "[y,v] = 0", "[v,v] = 2x + 4y"] {
        ensure(text.contains(rel), || format!("missing relation {rel}"))?;
    }
    let agreeing = field(r, "commutator_identity.agreeing").as_u64().unwrap();
    let pairs = field(r, "commutator_identity.pairs").as_u64().unwrap();
    ensure(agreeing == pairs && pairs >= 20, || format!("{agreeing}/{pairs} commutator pairs agree"))?;
    ensure(field(r, "commutator_identity.grassmann_generators") == "2..6", || "q range".into())?;
    ensure(field(r, "verdict") == "NotAlgebraic", || format!("verdict {}", field(r, "verdict")))?;
    ensure(out.exit == Exit::Pass, || "exit code".into())?;
    Ok(format!("{pairs} point pairs, verdict NotAlgebraic"))
}

fn sec8() -> Check {
    let out = cmd_counterexample("sec8", Options::default());
    let r = &out.report;
    let checks = field(r, "comodule").as_object().unwrap();
    for name in ["compatibility", "comodule coassociativity", "counit", "morphism", "basis coassociativity"] {
        let v = checks.get(name).and_then(|v| v.as_str()).unwrap_or("missing");
        ensure(v.starts_with("pass"), || format!("{name}: {v}"))?;
    }
    ensure(field(r, "truncation") == 4, || "truncation".into())?;
    let families = field(r, "lemma_no_normal_unipotent_subgroup.families").as_array().unwrap();
    ensure(families.len() == 5, || format!("{} subspace families", families.len()))?;
    for f in families {
        for res in f["residues"].as_array().unwrap() {
            ensure(!res.as_str().unwrap().ends_with(": 0"), || format!("vanishing residue {res}"))?;
        }
    }
    ensure(field(r, "lemma_no_normal_unipotent_subgroup.holds") == true, || "lemma".into())?;
    ensure(field(r, "corollary_trivial_unipotent_radical.holds") == true, || "hopf ideal exclusion".into())?;
    ensure(out.exit == Exit::Pass, || "exit code".into())?;
    Ok(format!("comodule axioms at d=4, {} subspace families excluded", families.len()))
}

fn notalg() -> Check {
    let out = cmd_counterexample("notalg", Options::default());
    let r = &out.report;
    ensure(field(r, "h_dim") == 15, || format!("dim H = {}", field(r, "h_dim")))?;
    ensure(field(r, "h_closed") == true, || "H not closed".into())?;
    ensure(field(r, "v_basis").as_array().unwrap().len() == 6, || "dim V".into())?;
    let s = field(r, "semisimple_part_in_h0_image") == true;
    let n = field(r, "nilpotent_part_in_h0_image") == true;
    ensure(!(s && n), || "both Jordan parts lie in the image of H0".into())?;
    ensure(out.exit == Exit::Pass, || "exit code".into())?;
    Ok("dim H = 15, Jordan parts not both in the image of H0".into())
}

fn derivations() -> Check {
    let mut dims = Vec::new();
    for n in 0..=2 {
        let t = tensor_der(&[(make_sl2(), n)]).map_err(|e| e.to_string())?;
        let direct = derivation_space(t.u());
        let (e, o) = direct.dims();
        ensure(direct.subspace(t.u()) == t.operator_span(), || format!("spans differ for n={n}"))?;
        ensure(e + o == t.dim(), || format!("n={n}: {} vs {}", e + o, t.dim()))?;
        dims.push(t.dim());
    }
    ensure(dims[2] == 20, || format!("dim Der = {}", dims[2]))?;
    Ok(format!("dims {dims:?} agree with the Leibniz solver"))
}

fn kac() -> Check {
    let sl2 = fixtures::file("sl2").unwrap();
    let verdict = |name: &str| {
        let out = cmd_kac(sl2, fixtures::file(name).unwrap());
        out.report.get("semisimple").and_then(|v| v.as_bool()).ok_or_else(|| out.report.to_text())
    };
    let full = cmd_kac(sl2, "sym 2\ninclude inner\ngrading 1 ; 0\ngrading 0 ; 1\ngrading z1 ; 0\ngrading z2 ; 0\ngrading 0 ; z1\ngrading 0 ; z2\ngrading z1z2 ; 0\ngrading 0 ; z1z2\n");
    ensure(field(&full.report, "subalgebra_dim") == 20, || "generated algebra is not all of Der".into())?;
    ensure(field(&full.report, "semisimple") == true, || "Der(sl2 ⊗ Λ(2))".into())?;
    ensure(verdict("notalg.kac")?, || "example H".into())?;
    ensure(!verdict("inner2.kac")?, || "inner ideal alone".into())?;
    Ok("Der and H semisimple, inner ideal not".into())
}

/// Least-degree monic polynomial killing `m`, from the first linear dependency among powers.
fn minimal_polynomial(m: &Matrix) -> Poly {
    let n = m.rows();
    let mut powers = vec![Matrix::identity(n).flatten()];
    let mut p = Matrix::identity(n);
    loop {
        p = &p * m;
        if let Some(c) = solve_in_span(&powers, &p.flatten()) {
            let mut coeffs: Vec<_> = c.iter().map(|x| -x).collect();
            coeffs.push(int(1));
            return Poly::new(coeffs);
        }
        powers.push(p.flatten());
    }
}

/// A conjugate of a block matrix with repeated eigenvalues, so that nilpotent parts are common.
fn random_matrix(rng: &mut random::TestRng, k: usize) -> Matrix {
    let n = 1 + k % 6;
    if k.is_multiple_of(2) {
        return random::matrix(rng, n, n, 4);
    }
    let mut j = Matrix::zeros(n, n);
    for i in 0..n {
        j[(i, i)] = int((i / 2) as i64 + 1);
        if i + 1 < n && i % 2 == 0 {
            j[(i, i + 1)] = random::small_scalar(rng, 2);
        }
    }
    let p = random::invertible_matrix(rng, n, 3);
    &(&p * &j) * &p.inverse().unwrap()
}

fn jordan() -> Check {
    let mut rng = random::rng(2024);
    let mut nonzero_n = 0;
    for k in 0..100 {
        let m = random_matrix(&mut rng, k);
        let split = jordan_chevalley(&m).map_err(|e| e.to_string())?;
        let (s, n) = (&split.semisimple, &split.nilpotent);
        ensure((s + n) == m, || format!("matrix {k}: S + N != M"))?;
        ensure(s.commutator(n).is_zero(), || format!("matrix {k}: [S,N] != 0"))?;
        ensure(is_nilpotent(n), || format!("matrix {k}: N not nilpotent"))?;
        let mp = minimal_polynomial(s);
        ensure(mp.gcd(&mp.derivative()).degree() == Some(0), || format!("matrix {k}: minpoly(S) = {mp}"))?;
        let p = random::invertible_matrix(&mut rng, m.rows(), 3);
        let pi = p.inverse().unwrap();
        let conj = |x: &Matrix| &(&p * x) * &pi;
        let other = jordan_chevalley(&conj(&m)).map_err(|e| e.to_string())?;
        ensure(other.semisimple == conj(s) && other.nilpotent == conj(n), || format!("matrix {k}: not equivariant"))?;
        nonzero_n += usize::from(!n.is_zero());
    }
    Ok(format!("100 matrices, {nonzero_n} with nonzero nilpotent part"))
}

fn hopf() -> Check {
    let mut count = 0;
    for r in 0..=1 {
        for l in 0..=2 {
            for k in 0..=3 {
                let h = AbelianHopfAlgebra::new(r, l, k);
                let report = verify_hopf(&h, 4);
                ensure(report.passed(), || format!("({r},{l},{k}): {:?}", report.failure))?;
                count += 1;
            }
        }
    }
    let mutated = AbelianHopfAlgebra::new(1, 2, 3).mutated(17, 4).map_err(|e| e.to_string())?;
    let report = verify_hopf(&mutated, 4);
    let failure = report.failure.ok_or("mutation not detected")?;
    ensure(!failure.monomial.is_empty(), || "no witness".into())?;
    Ok(format!("{count} algebras pass; mutation caught by {} at {}", failure.axiom, failure.monomial))
}

fn adjoint() -> Check {
    let mut rng = random::rng(11);
    for k in 0..50 {
        let g = GLPoint::new(random::gl_point(&mut rng, 1, 1, 4)).map_err(|e| e.to_string())?;
        let pu = if k % 2 == 0 { Parity::Even } else { Parity::Odd };
        let pv = if k % 3 == 0 { Parity::Even } else { Parity::Odd };
        let x: SuperMatrix = random::supermatrix(&mut rng, 1, 1, 4, pu);
        let y = random::supermatrix(&mut rng, 1, 1, 4, pv);
        let (u, v) = (Functional::from_matrix(&x), Functional::from_matrix(&y));
        let (u, v) = match (u, v) {
            (Ok(u), Ok(v)) => (u, v),
            _ => (Functional::new(pu, x).unwrap(), Functional::new(pv, y).unwrap()),
        };
        let ad = |w: &Functional| adjoint_hopf(&g, w).map_err(|e| e.to_string());
        let (au, av) = (ad(&u)?, ad(&v)?);
        ensure(au.to_matrix() == adjoint_matrix(&g, &u.to_matrix()).unwrap(), || format!("pair {k}: Ad(g)u"))?;
        ensure(av.to_matrix() == adjoint_matrix(&g, &v.to_matrix()).unwrap(), || format!("pair {k}: Ad(g)v"))?;
        let lhs = convolution_bracket(&au, &av).unwrap();
        let rhs = ad(&convolution_bracket(&u, &v).unwrap())?;
        ensure(lhs == rhs, || format!("pair {k}: bracket not equivariant"))?;
    }
    Ok("50 pairs in GL(1|1)(Λ(4))".into())
}

fn structural() -> Check {
    let expected = [("gl11", true), ("gl22", true), ("sl2", true), ("sec10", true), ("nonabelian2", false)];
    for (name, quasi) in expected {
        let l = fixtures::algebra(name).map_err(|e| e.to_string())?;
        for (check, ok) in structural_suite(&l) {
            ensure(ok, || format!("{name}: {check}"))?;
        }
        let q = is_quasireductive(&l).is_quasireductive();
        ensure(q == quasi, || format!("{name}: quasireductive = {q}"))?;
    }
    Ok("5 algebras".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Check, Option<u64>); 9] = [
        ("sec10 counterexample", sec10, Some(5)),
        ("sec8 coaction", sec8, Some(10)),
        ("notalg example", notalg, Some(10)),
        ("derivation spaces", derivations, None),
        ("Kac criterion", kac, None),
        ("Jordan suite", jordan, Some(30)),
        ("Hopf axioms and mutation", hopf, None),
        ("adjoint action on points", adjoint, None),
        ("structural suite", structural, None),
    ];
    let mut failed = 0;
    for (name, run, limit) in criteria {
        let start = Instant::now();
        let result = run();
        let elapsed = start.elapsed();
        let result = match (result, limit) {
            (Ok(_), Some(s)) if elapsed > Duration::from_secs(s) => Err(format!("took {elapsed:.2?}, limit {s}s")),
            (r, _) => r,
        };
        match result {
            Ok(detail) => println!("PASS {name} ({elapsed:.2?}): {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL {name} ({elapsed:.2?}): {why}");
            }
        }
    }
    println!("{} of 9 criteria pass", 9 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
