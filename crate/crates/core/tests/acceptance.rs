//! One line per acceptance criterion; exits nonzero if any fails.

#![allow(clippy::needless_range_loop)]

mod common;
mod oracle;

use std::process::ExitCode;

use kenmotsu_core::report::{analyze_document, verify_document, EXIT_FAILURE, EXIT_PASS};
use kenmotsu_core::soliton::{parallel_tensor_reconstruct, soliton_residual, SolitonParameters};
use kenmotsu_core::{
    catalog, classify, parse_spec, solve_soliton_constants, verify_almost_contact, verify_kenmotsu, Error, Geometry,
    Scalar, Status, Variant,
};
use num_rational::BigRational as Q;
use oracle::Oracle;

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn s(n: i64) -> Scalar {
    Scalar::from(n)
}

fn q(n: i64, d: i64) -> Scalar {
    Scalar::ratio(n, d).unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn k3() -> (kenmotsu_core::FrameManifoldSpec, Geometry) {
    let spec = parse_spec(catalog::KENMOTSU3).unwrap();
    let geo = Geometry::compute(&spec).unwrap();
    (spec, geo)
}

fn vec3(xs: [i64; 3]) -> Vec<Scalar> {
    xs.iter().map(|&x| s(x)).collect()
}

fn connection_fixture() -> Outcome {
    let (_, geo) = k3();
    let expected = [
        ((0, 0), [0, 0, -1]),
        ((0, 1), [0, 0, 0]),
        ((0, 2), [1, 0, 0]),
        ((1, 0), [0, 0, 0]),
        ((1, 1), [0, 0, -1]),
        ((1, 2), [0, 1, 0]),
        ((2, 0), [0, 0, 0]),
        ((2, 1), [0, 0, 0]),
        ((2, 2), [0, 0, 0]),
    ];
    for ((i, j), v) in expected {
        let got = geo.connection.nabla_basis(i, j);
        ensure(got.components() == vec3(v).as_slice(), || format!("∇_e{} e{} = {:?}", i + 1, j + 1, got))?;
    }
    Ok(())
}

fn curvature_fixture() -> Outcome {
    let (_, geo) = k3();
    // R(e_i,e_j)e_k, 1-based
    let expected = [
        ((1, 2, 1), [0, 1, 0]),
        ((1, 2, 2), [-1, 0, 0]),
        ((1, 2, 3), [0, 0, 0]),
        ((1, 3, 1), [0, 0, 1]),
        ((1, 3, 3), [-1, 0, 0]),
        ((2, 3, 2), [0, 0, 1]),
        ((2, 3, 3), [0, -1, 0]),
        ((3, 1, 1), [0, 0, -1]),
        ((1, 3, 2), [0, 0, 0]),
    ];
    for ((i, j, k), v) in expected {
        let got = geo.curvature.riemann.vector(i - 1, j - 1, k - 1);
        ensure(got.components() == vec3(v).as_slice(), || format!("R(e{i},e{j})e{k} = {got:?}"))?;
    }
    Ok(())
}

fn ricci_fixture() -> Outcome {
    let (spec, geo) = k3();
    let o = Oracle::new(&spec);
    ensure(geo.curvature.ricci == spec.metric().scale(&s(-2)), || format!("S = {:?}", geo.curvature.ricci))?;
    let trace: Q = (0..3).map(|a| o.ricci[a][a].clone()).sum();
    ensure(geo.curvature.scalar == s(-6) && trace == Q::from_integer((-6).into()), || {
        format!("r = {}, trace oracle {}", geo.curvature.scalar, trace)
    })
}

fn kenmotsu_verification() -> Outcome {
    let k3 = verify_document(catalog::KENMOTSU3, false).map_err(|e| e.to_string())?;
    ensure(k3.verdict.exit_code == EXIT_PASS, || k3.verdict.summary.clone())?;
    for id in [
        "Eq 2.1", "Eq 2.2", "Eq 2.3", "Eq 2.4", "Eq 2.5", "Eq 2.6", "Eq 2.7", "Eq 2.8", "Eq 2.9", "Eq 2.10", "Eq 2.11",
        "Eq 2.12", "Eq 2.14",
    ] {
        let r = k3.identities.get(id).ok_or_else(|| format!("{id} missing"))?;
        ensure(r.status == Status::Pass && r.left == r.right, || format!("{id} not passing on kenmotsu3"))?;
    }
    let flat = verify_document(catalog::FLAT3, false).map_err(|e| e.to_string())?;
    ensure(flat.verdict.exit_code == EXIT_FAILURE, || "flat3 did not exit 1".into())?;
    ensure(flat.identities.get("Eq 2.6").is_some_and(|r| r.failed()), || "flat3: Eq 2.6 did not fail".into())
}

fn expected_lambda(p: &Scalar) -> Scalar {
    s(-2) - (p + q(2, 3)) * q(1, 2)
}

const P_VALUES: [(i64, i64); 6] = [(-2, 3), (0, 1), (1, 1), (-5, 7), (3, 2), (11, 1)];

fn soliton_solve() -> Outcome {
    let (spec, geo) = k3();
    let r = analyze_document(catalog::KENMOTSU3, Some(q(-2, 3)), Variant::ConformalEtaEinstein, false)
        .map_err(|e| e.to_string())?;
    let sol = r.soliton.solution().ok_or("no solution at p = −2/3")?;
    ensure(sol.parameters.lambda == s(-2) && sol.parameters.mu == s(1), || format!("{:?}", sol.parameters))?;
    ensure(sol.residual.is_zero() && sol.scalar_relation_check, || "residual or Eq 3.3".into())?;
    // substitution oracle: Eq 3.3 with n = 1
    ensure(geo.curvature.scalar == (q(-2, 3) + q(2, 3)) - s(4) + s(2) * s(-2) + s(2), || "Eq 3.3 arithmetic".into())?;
    for (num, den) in &P_VALUES[1..] {
        let p = q(*num, *den);
        let out = solve_soliton_constants(
            &spec,
            &geo.curvature,
            &geo.derivatives.lie_xi_g,
            Some(&p),
            Variant::ConformalEtaEinstein,
        )
        .map_err(|e| e.to_string())?;
        let sol = out.solution().ok_or_else(|| format!("no solution at p = {p}"))?;
        ensure(sol.parameters.mu.is_one() && sol.parameters.lambda == expected_lambda(&p), || {
            format!("p = {p}: {:?}", sol.parameters)
        })?;
        let params =
            SolitonParameters::new(sol.parameters.lambda.clone(), s(1), Some(p.clone()), Variant::ConformalEtaEinstein)
                .unwrap();
        let t = soliton_residual(&spec, &geo.curvature, &geo.derivatives.lie_xi_g, &params).unwrap();
        ensure(t.is_zero(), || format!("p = {p}: residual {t:?}"))?;
    }
    Ok(())
}

fn eq_4_2_instance() -> Outcome {
    for (num, den) in P_VALUES {
        let p = q(num, den);
        let r = analyze_document(catalog::KENMOTSU3, Some(p.clone()), Variant::ConformalEtaEinstein, false)
            .map_err(|e| e.to_string())?;
        let sol = r.soliton.solution().ok_or_else(|| format!("no solution at p = {p}"))?;
        let rhs = s(2) * &sol.parameters.lambda + s(2) * &sol.parameters.mu - s(4) + (&p + q(2, 3));
        ensure(r.geometry.scalar_curvature == rhs, || format!("p = {p}: r ≠ {rhs}"))?;
        let rec = r.instance_checks.iter().find(|c| c.id == "Eq 4.2").ok_or("Eq 4.2 record missing")?;
        ensure(rec.passed(), || format!("p = {p}: Eq 4.2 record failed"))?;
    }
    Ok(())
}

fn theorem_suite() -> Outcome {
    let (spec, geo) = k3();
    let p = q(-2, 3);
    let out = solve_soliton_constants(
        &spec,
        &geo.curvature,
        &geo.derivatives.lie_xi_g,
        Some(&p),
        Variant::ConformalEtaEinstein,
    )
    .map_err(|e| e.to_string())?;
    let sol = out.solution().ok_or("no solution")?;
    let c = classify(&spec, &geo, Some(sol), true).map_err(|e| e.to_string())?;
    ensure(c.ricci_symmetric && sol.parameters.mu.is_one(), || "Ricci symmetric with μ = 1".into())?;
    let eq38 = c.get("Eq 3.8").ok_or("Eq 3.8 missing")?;
    ensure(eq38.passed() && eq38.left == vec![s(-6)], || "Eq 3.8".into())?;
    ensure(c.cyclic_parallel == sol.parameters.mu.is_one(), || "cyclic ⟺ μ = 1 (solved)".into())?;

    // μ forced to zero: no λ makes the residual vanish, so cyclic_parallel
    // (true) is consistent with μ = 0 never being a soliton.
    let forced =
        solve_soliton_constants(&spec, &geo.curvature, &geo.derivatives.lie_xi_g, Some(&p), Variant::ConformalEinstein)
            .map_err(|e| e.to_string())?;
    ensure(forced.solution().is_none(), || "μ = 0 unexpectedly solvable".into())?;
    for lambda in [s(-2), s(0), q(-7, 3)] {
        let params =
            SolitonParameters::new(lambda.clone(), s(0), Some(p.clone()), Variant::ConformalEtaEinstein).unwrap();
        let t = soliton_residual(&spec, &geo.curvature, &geo.derivatives.lie_xi_g, &params).unwrap();
        ensure(!t.is_zero(), || format!("μ = 0, λ = {lambda} gives zero residual"))?;
    }

    let ph = parallel_tensor_reconstruct(&spec, &geo.connection, &geo.curvature, &s(1));
    ensure(ph.nabla_h_zero && ph.h_xi_xi == s(-2), || "parallel h".into())?;
    let eq338 = c.get("Eq 3.38").ok_or("Eq 3.38 missing")?;
    ensure(eq338.passed() && eq338.right == vec![s(-2)], || "Eq 3.38".into())?;
    ensure(c.d_eta_zero && geo.derivatives.d_eta.is_zero(), || "dη ≠ 0".into())
}

fn property_suite() -> Outcome {
    for seed in 0..100u64 {
        let dim = if seed % 5 == 4 { 5 } else { 3 };
        common::check_structure(&common::random_spec(seed, dim)).map_err(|e| format!("seed {seed}: {e}"))?;
    }
    Ok(())
}

fn oracle_equivalence() -> Outcome {
    for seed in 0..25u64 {
        let spec = common::random_spec(10_000 + seed, 3);
        let geo = Geometry::compute(&spec).map_err(|e| e.to_string())?;
        let o = Oracle::new(&spec);
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    ensure(geo.connection.get(i, j, k).as_rational() == &o.gamma[i][j][k], || {
                        format!("seed {seed}: Γ at {i},{j},{k}")
                    })?;
                    ensure(geo.derivatives.nabla_s[(i, j, k)].as_rational() == &o.nabla_s[i][j][k], || {
                        format!("seed {seed}: ∇S at {i},{j},{k}")
                    })?;
                    for l in 0..3 {
                        ensure(geo.curvature.riemann[(i, j, k, l)].as_rational() == &o.riemann[i][j][k][l], || {
                            format!("seed {seed}: R at {i},{j},{k},{l}")
                        })?;
                    }
                }
                ensure(geo.curvature.ricci[(i, j)].as_rational() == &o.ricci[i][j], || {
                    format!("seed {seed}: S at {i},{j}")
                })?;
            }
        }
        ensure(geo.curvature.scalar.as_rational() == &o.scalar, || format!("seed {seed}: r"))?;
    }
    Ok(())
}

fn negative_controls() -> Outcome {
    // edited metric: g(e3,e3) = 2 breaks g(ξ,ξ) = 1
    let doc = catalog::KENMOTSU3.replace("[0, 0, 1]\n  ]", "[0, 0, 2]\n  ]");
    ensure(doc != catalog::KENMOTSU3, || "metric edit did not apply".into())?;
    match parse_spec(&doc) {
        Err(Error::Invariant(msg)) if msg.contains("g(ξ,ξ) ≠ 1") => {}
        other => return Err(format!("edited metric: {other:?}")),
    }

    // φe1 = e2, φe2 = e1: brute force Eq 2.3 both sides
    let doc = catalog::KENMOTSU3.replace("[-1, 0, 0]", "[1, 0, 0]");
    let spec = parse_spec(&doc).map_err(|e| e.to_string())?;
    let phi = [[0i64, 1, 0], [1, 0, 0], [0, 0, 0]];
    let mut first = None;
    for i in 0..3 {
        for j in 0..3 {
            // identity metric: g(e_i, φe_j) = φ[i][j], g(φe_i, e_j) = φ[j][i]
            let (l, r) = (phi[i][j], -phi[j][i]);
            if l != r && first.is_none() {
                first = Some((vec![i + 1, j + 1], l, r));
            }
        }
    }
    let (slot, l, r) = first.unwrap();
    let report = verify_almost_contact(&spec);
    let rec = report.get("Eq 2.3").ok_or("Eq 2.3 missing")?;
    let w = rec.witness.as_ref().ok_or("Eq 2.3 did not fail")?;
    ensure(w.slot == slot && w.left == vec![s(l)] && w.right == vec![s(r)], || format!("Eq 2.3 witness {w:?}"))?;

    // c^1_{13} = 2: Eq 2.6 at e1 with ∇_{e1}ξ from the brute-force Koszul oracle
    let doc = catalog::KENMOTSU3.replacen("\"value\": 1", "\"value\": 2", 1);
    let spec = parse_spec(&doc).map_err(|e| e.to_string())?;
    ensure(spec.constants().get(0, 2, 0) == s(2), || "constant edit did not apply".into())?;
    let geo = Geometry::compute(&spec).map_err(|e| e.to_string())?;
    let o = Oracle::new(&spec);
    let left: Vec<Scalar> = o.gamma[0][2].iter().map(|x| Scalar::from(x.clone())).collect();
    let report = verify_kenmotsu(&spec, &geo.connection);
    let rec = report.get("Eq 2.6").ok_or("Eq 2.6 missing")?;
    let w = rec.witness.as_ref().ok_or("Eq 2.6 did not fail")?;
    ensure(w.slot == vec![1] && w.left == left && w.right == vec3([1, 0, 0]), || format!("Eq 2.6 witness {w:?}"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("connection fixture on kenmotsu3", connection_fixture),
        ("curvature fixture on kenmotsu3", curvature_fixture),
        ("Ricci fixture S = −2g, r = −6", ricci_fixture),
        ("Kenmotsu verification: kenmotsu3 passes, flat3 fails Eq 2.6", kenmotsu_verification),
        ("soliton solve: λ = −2 − (p + 2/3)/2, μ = 1", soliton_solve),
        ("Eq 4.2 instance for every solved p", eq_4_2_instance),
        ("theorem instance suite on kenmotsu3", theorem_suite),
        ("property suite on 100 random specs", property_suite),
        ("oracle equivalence on 25 random 3-dimensional specs", oracle_equivalence),
        ("negative controls on kenmotsu3 mutations", negative_controls),
    ];
    let mut failed = 0;
    for (n, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(()) => println!("PASS criterion {}: {name}", n + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {}: {name} — {why}", n + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
