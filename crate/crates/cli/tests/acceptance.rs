//! Acceptance suite: one PASS/FAIL line per criterion.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::path::{Path, PathBuf};
use std::process::{Command, Output};
use std::time::{Duration, Instant};

use ado_core::envelope::{build_module, check_a_intersection, low_ideal, DEFAULT_MAX_AMBIENT};
use ado_core::expansion::{elementary_expansion, expansion_step, initial_presentation};
use ado_core::format::{from_json_str, to_json_string};
use ado_core::jordan::{jc_decompose, jc_decompose_derivation};
use ado_core::lie::homomorphism_defect;
use ado_core::poly::squarefree_part;
use ado_core::{catalog, verify, LieAlgebra, Matrix, Polynomial, Rational, RepresentationFile};
use common::jc::{jc_violation, leibniz_holds, oracle_suite, random_suite};
use common::words::{a_intersection_oracle, oracle_low_ideal};

const PER_CASE_LIMIT: Duration = Duration::from_secs(60);
const SUITE_LIMIT: Duration = Duration::from_secs(600);

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn ado(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ado")).args(args).output().expect("ado runs")
}

fn golden(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(format!("{name}.json"))
}

fn load(path: &Path) -> RepresentationFile {
    from_json_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn compute_to(dir: &Path, name: &str, extra: &[&str]) -> (Output, PathBuf, Duration) {
    let out = dir.join(format!("{}.json", name.replace(':', "_")));
    let mut args = vec!["compute", "--catalog", name, "-o", out.to_str().unwrap()];
    args.extend_from_slice(extra);
    let start = Instant::now();
    let output = ado(&args);
    (output, out, start.elapsed())
}

fn end_to_end(dir: &Path) -> Outcome {
    let start = Instant::now();
    let mut slowest = (Duration::ZERO, "");
    for name in catalog::END_TO_END {
        let (output, path, took) = compute_to(dir, name, &[]);
        ensure!(output.status.code() == Some(0), "{name}: exit {:?}", output.status.code());
        ensure!(took < PER_CASE_LIMIT, "{name}: took {took:?}");
        let file = load(&path);
        let (algebra, dim_v, matrices) = file.parts().unwrap();
        let report = verify(&algebra, dim_v, &matrices);
        ensure!(report.max_residual_entries() == 0, "{name}: nonzero residual");
        ensure!(report.kernel_dim == 0, "{name}: kernel dim {}", report.kernel_dim);
        if took > slowest.0 {
            slowest = (took, name);
        }
    }
    let total = start.elapsed();
    ensure!(total < SUITE_LIMIT, "suite took {total:?}");
    Ok(format!("12 algebras verified, slowest {} {:.1?}, total {:.1?}", slowest.1, slowest.0, total))
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn dimension_formulas(dir: &Path) -> Outcome {
    for m in 1..=3 {
        for big_m in 2..=4 {
            let dim = build_module(&LieAlgebra::abelian(m), &[], big_m, DEFAULT_MAX_AMBIENT).unwrap().dim();
            ensure!(dim == binomial(m + big_m, big_m), "m={m} M={big_m}: {dim}");
        }
    }
    for (m, expected) in [(1, 5), (2, 15)] {
        let (output, path, _) = compute_to(dir, &format!("abelian:{m}"), &["--truncation", "4"]);
        ensure!(output.status.success(), "abelian:{m} --truncation 4 failed");
        ensure!(load(&path).dim_v == expected, "abelian:{m} at M=4 is not {expected}-dimensional");
    }
    Ok("binomial(m+M, M) for m in 1..=3, M in 2..=4".into())
}

fn solv2_golden(dir: &Path) -> Outcome {
    let (output, path, _) = compute_to(dir, "solv2", &[]);
    ensure!(output.status.success(), "compute failed");
    ensure!(std::fs::read(&path).unwrap() == std::fs::read(golden("solv2")).unwrap(), "differs from golden");
    let file = load(&path);
    let prov = file.provenance.as_ref().unwrap();
    ensure!(prov.expansion_steps == 1, "{} steps", prov.expansion_steps);
    let d = &prov.saturated;
    ensure!((d.q, d.p, d.n) == (3, 1, 2), "saturated dims {:?}", (d.q, d.p, d.n));
    ensure!(file.dim_v == 15, "dim {}", file.dim_v);
    let (_, _, mats) = file.parts().unwrap();
    ensure!(mats[1].is_nilpotent(), "ρ(e2) not nilpotent");
    // d_s acts by 1 on e2, so on U(n)/I it multiplies by the e2-degree 0..=4.
    let sf = squarefree_part(&mats[0].minimal_polynomial().unwrap());
    let grading = (0..=4).fold(Polynomial::one(), |acc, j| &acc * &Polynomial::from_ints(&[-j, 1]));
    ensure!(sf == grading, "squarefree part of the minimal polynomial of ρ(e1) is {sf}");
    Ok("1 step, dims (3,1,2), 15x15, ρ(e2) nilpotent, ρ(e1) semisimple part has spectrum 0..=4".into())
}

fn jordan_chevalley() -> Outcome {
    let mut count = 0;
    for name in catalog::END_TO_END {
        let g = catalog::lookup(name).unwrap();
        for i in 0..g.dim() {
            let d = g.ad_basis(i);
            let jc = jc_decompose(&d).unwrap();
            ensure!(jc_violation(&d, &jc).is_none(), "{name} ad e{i}: {:?}", jc_violation(&d, &jc));
            count += 1;
        }
    }
    for (case, d) in random_suite().iter().enumerate() {
        let jc = jc_decompose(d).unwrap();
        ensure!(jc_violation(d, &jc).is_none(), "random case {case}: {:?}", jc_violation(d, &jc));
    }
    let oracle = oracle_suite();
    for (case, (d, s)) in oracle.iter().enumerate() {
        let jc = jc_decompose(d).unwrap();
        ensure!(jc_violation(d, &jc).is_none(), "oracle case {case}: {:?}", jc_violation(d, &jc));
        ensure!(&jc.semisimple == s, "oracle case {case}: s differs from the eigenprojection oracle");
    }
    Ok(format!("{count} catalog derivations, 100 random matrices, {} oracle matrices", oracle.len()))
}

/// `(algebra acted on, ideal algebra, d)` for every step of every saturation.
fn pipeline_derivations() -> Vec<(String, LieAlgebra, Matrix)> {
    let mut out = Vec::new();
    for name in catalog::END_TO_END {
        let mut pres = initial_presentation(&catalog::lookup(name).unwrap()).unwrap();
        while pres.defect() > 0 {
            let next = expansion_step(&pres).unwrap();
            let step = next.trace.last().unwrap();
            let (ideal, _) = pres.algebra.subalgebra_on_basis(&step.ideal).unwrap();
            out.push((format!("{name} step {}", next.trace.len()), ideal, step.d.clone()));
            pres = next;
        }
    }
    out
}

fn killing_lemma() -> Outcome {
    let derivations = pipeline_derivations();
    for (what, ideal, d) in &derivations {
        let jc = jc_decompose_derivation(ideal, d).unwrap();
        ensure!(leibniz_holds(ideal, &jc.semisimple), "{what}: d_s fails Leibniz");
        ensure!(leibniz_holds(ideal, &jc.nilpotent), "{what}: d_n fails Leibniz");
        let ker = d.kernel();
        ensure!(jc.semisimple.kernel().contains_subspace(&ker).unwrap(), "{what}: ker d ⊄ ker d_s");
        ensure!(jc.nilpotent.kernel().contains_subspace(&ker).unwrap(), "{what}: ker d ⊄ ker d_n");
    }
    Ok(format!("{} pipeline derivations", derivations.len()))
}

fn expansion_identities() -> Outcome {
    let mut total = 0;
    let mut t3_steps = 0;
    for name in catalog::END_TO_END {
        let mut pres = initial_presentation(&catalog::lookup(name).unwrap()).unwrap();
        let mut steps = 0;
        while pres.defect() > 0 {
            let next = expansion_step(&pres).unwrap();
            let step = next.trace.last().unwrap();
            let e = elementary_expansion(&pres.algebra, &step.ideal, &step.x).unwrap();
            ensure!(next.defect() + 1 == pres.defect(), "{name}: defect did not drop by one");
            ensure!(homomorphism_defect(&pres.algebra, &e.expanded, &e.embedding).is_none(), "{name}: residual");
            let image = pres.algebra.derived_algebra().image(&e.embedding).unwrap();
            ensure!(e.expanded.derived_algebra() == image, "{name}: derived algebra not preserved");
            pres = next;
            steps += 1;
        }
        if name == "t3" {
            t3_steps = steps;
        }
        total += steps;
    }
    ensure!(t3_steps == 3, "t3 took {t3_steps} steps");
    Ok(format!("{total} steps checked, t3 saturates in 3"))
}

fn envelope_oracle() -> Outcome {
    let h = catalog::heisenberg();
    let mut findings = Vec::new();
    for m in [2, 3, 5] {
        let low = low_ideal(&h, m, DEFAULT_MAX_AMBIENT).unwrap();
        let (monos, oracle) = oracle_low_ideal(&h, m, 2 * m);
        ensure!(low.monomials == monos && low.ideal == oracle, "M={m}: low ideal differs from the oracle");
        let module = build_module(&h, &[], m, DEFAULT_MAX_AMBIENT).unwrap();
        let finding = check_a_intersection(&module);
        let (deg1, a) = a_intersection_oracle(&h, &monos, &oracle);
        ensure!(deg1 && finding.degree_one_holds, "M={m}: n ∩ I ≠ 0");
        ensure!(finding.holds == a, "M={m}: A ∩ I finding disagrees with the oracle");
        findings.push(format!("M={m}: dim I∩L {}, A∩I=0 {}", oracle.dim(), finding.holds));
    }
    Ok(findings.join("; "))
}

fn negative_controls(dir: &Path) -> Outcome {
    let h = catalog::heisenberg();
    let ad: Vec<Matrix> = (0..3).map(|i| h.ad_basis(i)).collect();
    let report = verify(&h, 3, &ad);
    ensure!(report.homomorphic() && report.kernel_dim == 1, "adjoint kernel dim {}", report.kernel_dim);
    let mut file = load(&golden("solv2"));
    file.algebra = ado_core::AlgebraFile::from_algebra(&h);
    file.dim_v = 3;
    file.matrices = ad.iter().map(|m| m.row_vecs()).collect();
    file.verification = None;
    file.provenance = None;
    let path = dir.join("heisenberg_adjoint.json");
    std::fs::write(&path, to_json_string(&file)).unwrap();
    let code = ado(&["verify", path.to_str().unwrap()]).status.code();
    ensure!(code == Some(3), "ado verify on the adjoint exited {code:?}");

    let mut tampers = 0;
    for name in ["sl2", "gl2"] {
        let base = load(&golden(name));
        ensure!(ado(&["verify", golden(name).to_str().unwrap()]).status.success(), "{name} golden does not verify");
        let path = dir.join(format!("{name}_tampered.json"));
        for k in 0..base.matrices.len() {
            for i in 0..base.dim_v {
                for j in 0..base.dim_v {
                    let mut t = base.clone();
                    t.matrices[k][i][j] += Rational::from_integer(1);
                    std::fs::write(&path, to_json_string(&t)).unwrap();
                    let code = ado(&["verify", path.to_str().unwrap()]).status.code();
                    ensure!(code == Some(3), "{name} entry ({k},{i},{j}) +1: verify exited {code:?}");
                    tampers += 1;
                }
            }
        }
    }
    Ok(format!("adjoint kernel 1 (exit 3); {tampers}/{tampers} single-entry tampers of sl2, gl2 rejected"))
}

fn main() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let criteria: Vec<Criterion> = vec![
        ("end-to-end representations", Box::new(|| end_to_end(d))),
        ("abelian dimension formulas", Box::new(|| dimension_formulas(d))),
        ("solv2 golden trace", Box::new(|| solv2_golden(d))),
        ("Jordan-Chevalley suite", Box::new(jordan_chevalley)),
        ("derivation splitting", Box::new(killing_lemma)),
        ("expansion identities", Box::new(expansion_identities)),
        ("enveloping-module oracle", Box::new(envelope_oracle)),
        ("negative controls", Box::new(|| negative_controls(d))),
    ];
    let mut failed = Vec::new();
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS {} {name}: {detail}", i + 1),
            Err(why) => {
                println!("FAIL {} {name}: {why}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
