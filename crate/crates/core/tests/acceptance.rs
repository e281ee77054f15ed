//! Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on
//! any failure.

mod common;

use std::time::Instant;

use common::*;
use hopfforge::echelon::Echelon;
use hopfforge::growth::{
    ball_growth, gk_estimate, span_dimension_sequence, standard_generating_set,
    verify_hopf_subalgebra, GkEstimate, DEFAULT_DIMENSION_CAP,
};
use hopfforge::hopfstruct::{
    antipode_monomial_identity, cobar_d1, cobar_d2, grading_check, hopf_axiom_report,
    is_skew_primitive, random_element, random_word, Grading,
};
use hopfforge::liealg::LieAlgebra;
use hopfforge::solver::{
    classify_skew_primitive, find_subalgebra_data, group_like_space, orbit_check,
    skew_primitive_space_in, verify_subalgebra_identity, y_degree, MultiIndex, Window, WindowData,
    DEFAULT_RELATION_CAP, DEFAULT_WINDOW_CAP,
};
use hopfforge::{HopfPresentation, NcPoly, Scalar, TensorPoly};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn try_preset(sel: &str) -> Result<HopfPresentation, String> {
    hopfforge::presets::build_str(sel).map_err(|e| format!("{sel}: {e}"))
}

fn c1() -> Check {
    for sel in [
        "F:t=0",
        "F:t=1",
        "F:t=2",
        "A:b=1,xi=2",
        "A:b=2,xi=-1",
        "C:m=2",
        "C:m=3",
        "E:n=1",
        "E:n=2",
        "Zn:n=2",
        "heis",
        "env:sl2",
        "env:heis",
    ] {
        let h = try_preset(sel)?;
        let r = hopf_axiom_report(&h, 3, 20, 0);
        ensure(r.is_empty(), || format!("{sel}: {}", r[0]))?;
    }
    Ok(())
}

fn c2() -> Check {
    for sel in ["F:t=1", "F:t=2"] {
        let h = try_preset(sel)?;
        let g = Grading::y_grading(&h).map_err(|e| e.to_string())?;
        let v = grading_check(&h, &g, 50, 0).map_err(|e| e.to_string())?;
        ensure(v.is_empty(), || {
            format!("{sel}: {} fails on {}", v[0].check, v[0].element)
        })?;
    }
    Ok(())
}

fn c3() -> Check {
    let h = try_preset("F:t=2")?;
    let got = group_like_space(&h, Window::new(2, 4)).map_err(|e| e.to_string())?;
    let want: Vec<_> = {
        let mut w: Vec<_> = (-4..=4).map(|i| h.word(&[("x", i)]).unwrap()).collect();
        w.sort();
        w
    };
    ensure(got == want, || {
        format!(
            "got {:?}",
            got.iter().map(|w| h.fmt_word(w)).collect::<Vec<_>>()
        )
    })
}

/// Bases from criterion 4, reused by criterion 5.
fn lemma_bases() -> Result<Vec<(i64, HopfPresentation, Vec<NcPoly>)>, String> {
    let mut out = Vec::new();
    for t in [1, 2] {
        let h = try_preset(&format!("F:t={t}"))?;
        let data = WindowData::new(&h, Window::new(2, 2), DEFAULT_WINDOW_CAP)
            .map_err(|e| e.to_string())?;
        let mut basis = Vec::new();
        for a in -3..=3 {
            for c in -3..=3 {
                let u = h.word(&[("x", a)]).unwrap();
                let v = h.word(&[("x", c)]).unwrap();
                let sp = skew_primitive_space_in(&data, &u, &v).map_err(|e| e.to_string())?;
                basis.extend(sp.basis);
            }
        }
        drop(data);
        out.push((t, h, basis));
    }
    Ok(out)
}

fn c4(bases: &[(i64, HopfPresentation, Vec<NcPoly>)], elapsed: f64) -> Check {
    for (t, h, basis) in bases {
        if let Some(f) = basis.iter().find(|f| y_degree(h, f) > 1) {
            return Err(format!("F({t}) has {} of y-degree > 1", h.fmt(f)));
        }
    }
    ensure(elapsed < 120.0, || format!("took {elapsed:.1}s"))
}

fn c5(bases: &[(i64, HopfPresentation, Vec<NcPoly>)]) -> Check {
    for (t, h, basis) in bases {
        for f in basis {
            let c = classify_skew_primitive(h, *t, f)
                .map_err(|e| format!("F({t}) {}: {e}", h.fmt(f)))?;
            let back = c.reconstruct(h, *t).map_err(|e| e.to_string())?;
            ensure(back == *f, || {
                format!("F({t}): {} reconstructs as {}", h.fmt(f), h.fmt(&back))
            })?;
        }
    }
    let h = try_preset("F:t=1")?;
    let x = h.word(&[("x", 1)]).unwrap();
    let data =
        WindowData::new(&h, Window::new(1, 3), DEFAULT_WINDOW_CAP).map_err(|e| e.to_string())?;
    let dim = skew_primitive_space_in(&data, &hopfforge::Word::one(), &x)
        .map_err(|e| e.to_string())?
        .dimension();
    let oracle = f_skew_primitive_dim(1, 0, 1, 1, 3);
    ensure(dim == 8 && oracle == 8, || {
        format!("solver {dim}, dense oracle {oracle}")
    })
}

fn c6() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let f = [try_preset("F:t=1")?, try_preset("F:t=2")?];
    for _ in 0..50 {
        let t = rng.gen_range(1..=2);
        let n = rng.gen_range(1..=3);
        let alpha = MultiIndex::new((0..=n).map(|_| rng.gen_range(-5..=5)).collect()).unwrap();
        let ok =
            antipode_monomial_identity(&f[t as usize - 1], &alpha, t).map_err(|e| e.to_string())?;
        ensure(ok, || format!("S identity fails for {alpha} with t = {t}"))?;
    }
    for _ in 0..100 {
        let t = [-2, -1, 1, 2][rng.gen_range(0..4)];
        let n = rng.gen_range(2..=4);
        let beta = MultiIndex::new((0..=n).map(|_| rng.gen_range(-6..=6)).collect()).unwrap();
        let r = orbit_check(&beta, t, rng.gen_range(1..=10)).map_err(|e| e.to_string())?;
        ensure(r.passed(), || {
            format!(
                "orbit of {beta} with t = {t}: {:?}, distinct {}",
                r.mismatches, r.distinct
            )
        })?;
    }
    Ok(())
}

fn c7() -> Check {
    for (sel, g, xi, beta) in [
        ("E:n=1", "x0", -1, 0),
        ("A:b=1,xi=2", "g", 2, 0),
        ("C:m=2", "g", 1, 1),
    ] {
        let h = try_preset(sel)?;
        let gw = h.word(&[(g, 1)]).unwrap();
        let y = h.element(&[("y", 1)]).unwrap();
        let d = find_subalgebra_data(&h, &gw, &y, DEFAULT_RELATION_CAP)
            .map_err(|e| format!("{sel}: {e}"))?;
        let want = (y.clone(), Scalar::from_int(xi), Scalar::from_int(beta));
        ensure((d.f.clone(), d.xi.clone(), d.beta.clone()) == want, || {
            format!("{sel}: {}", d.describe(&h))
        })?;
        ensure(
            verify_subalgebra_identity(&h, &gw, &d).map_err(|e| e.to_string())?,
            || format!("{sel}: identity fails"),
        )?;
    }
    Ok(())
}

fn c8() -> Check {
    let mut lines = Vec::new();
    let mut check = |label: &str, d: hopfforge::growth::DimSequence, want: GkEstimate| -> Check {
        let r = gk_estimate(&d).map_err(|e| e.to_string())?;
        lines.push(format!("    {label}: {:?}", d.dims));
        ensure(r.estimate == want, || format!("{label}: {}", r.describe()))
    };
    let span = |sel: &str, n: usize| -> Result<hopfforge::growth::DimSequence, String> {
        let h = try_preset(sel)?;
        span_dimension_sequence(&h, &standard_generating_set(&h), n, DEFAULT_DIMENSION_CAP)
            .map_err(|e| e.to_string())
    };
    let ball =
        |sel: &str, gens: &[&str], n: usize| -> Result<hopfforge::growth::DimSequence, String> {
            let h = try_preset(sel)?;
            let ws: Vec<_> = gens.iter().map(|g| h.word(&[(g, 1)]).unwrap()).collect();
            ball_growth(&h, &ws, n, DEFAULT_DIMENSION_CAP).map_err(|e| e.to_string())
        };
    let result = (|| {
        check("A(1,2)", span("A:b=1,xi=2", 16)?, GkEstimate::Degree(2))?;
        check("C(2)", span("C:m=2", 16)?, GkEstimate::Degree(2))?;
        check("Z^2", span("Zn:n=2", 16)?, GkEstimate::Degree(2))?;
        check("E(1)", span("E:n=1", 16)?, GkEstimate::Degree(2))?;
        check("E(2)", span("E:n=2", 16)?, GkEstimate::Degree(3))?;
        check(
            "Heisenberg ball",
            ball("heis", &["x", "y"], 12)?,
            GkEstimate::Degree(4),
        )?;
        check(
            "Z x Z/2 ball",
            ball("zxz2", &["x", "u"], 16)?,
            GkEstimate::Degree(1),
        )?;
        check("F(1)", span("F:t=1", 10)?, GkEstimate::Superpolynomial)
    })();
    for l in lines {
        println!("{l}");
    }
    result
}

fn c9() -> Check {
    let sl2 = LieAlgebra::sl2();
    let (u, v) = sl2.two_dim_subalgebra().map_err(|e| e.to_string())?;
    let env = try_preset("env:sl2")?;
    let as_poly = |vec: &[Scalar]| {
        let mut p = NcPoly::zero();
        for (i, c) in vec.iter().enumerate() {
            p.add_scaled(&NcPoly::word(env.alphabet().generator_word(i)), c)
                .unwrap();
        }
        p
    };
    let r =
        verify_hopf_subalgebra(&env, &[as_poly(&u), as_poly(&v)], 4).map_err(|e| e.to_string())?;
    ensure(r.passed(), || {
        format!("U(h) in U(sl2): {:?}", r.violations.first())
    })?;

    let heis = try_preset("heis")?;
    let gens: Vec<NcPoly> = [("x", 1), ("x", -1), ("z", 1), ("z", -1)]
        .iter()
        .map(|&(g, e)| heis.element(&[(g, e)]).unwrap())
        .collect();
    let r = verify_hopf_subalgebra(&heis, &gens, 6).map_err(|e| e.to_string())?;
    ensure(r.passed(), || {
        format!("Z^2 in Heisenberg: {:?}", r.violations.first())
    })?;
    let mut v = vec![NcPoly::one()];
    v.extend(gens);
    let d =
        span_dimension_sequence(&heis, &v, 16, DEFAULT_DIMENSION_CAP).map_err(|e| e.to_string())?;
    let est = gk_estimate(&d).map_err(|e| e.to_string())?;
    ensure(est.estimate == GkEstimate::Degree(2), || {
        format!("Z^2 span: {}", est.describe())
    })?;

    let e1 = try_preset("E:n=1")?;
    let gens: Vec<NcPoly> = [("x0", 1), ("x0", -1), ("y", 1)]
        .iter()
        .map(|&(g, e)| e1.element(&[(g, e)]).unwrap())
        .collect();
    let r = verify_hopf_subalgebra(&e1, &gens, 4).map_err(|e| e.to_string())?;
    ensure(r.passed(), || {
        format!("E(1) subalgebra: {:?}", r.violations.first())
    })
}

fn c10() -> Check {
    for (i, sel) in ["F:t=1", "C:m=2", "E:n=1"].iter().enumerate() {
        let h = try_preset(sel)?;
        let mut rng = ChaCha8Rng::seed_from_u64(100 + i as u64);
        for _ in 0..20 {
            let c = random_element(&h, &mut rng, 3).map_err(|e| e.to_string())?;
            let d = cobar_d2(&h, &cobar_d1(&h, &c).map_err(|e| e.to_string())?)
                .map_err(|e| e.to_string())?;
            ensure(d.is_zero(), || format!("{sel}: d2 d1 ({}) != 0", h.fmt(&c)))?;
        }
    }
    Ok(())
}

fn c11() -> Check {
    for (i, sel) in ["E:n=1", "E:n=2"].iter().enumerate() {
        let h = try_preset(sel)?;
        let mut rng = ChaCha8Rng::seed_from_u64(200 + i as u64);
        let mut words = Vec::new();
        while words.len() < 50 {
            let p = h
                .nf(&NcPoly::word(random_word(&h, &mut rng, 4)))
                .map_err(|e| e.to_string())?;
            words.extend(p.iter().map(|(w, _)| w.clone()));
        }
        for w in words.into_iter().take(50) {
            let p = NcPoly::word(w);
            let gl =
                h.coproduct(&p).map_err(|e| e.to_string())? == TensorPoly::outer(&p, &p).unwrap();
            let sp = is_skew_primitive(&h, &p)
                .map_err(|e| e.to_string())?
                .is_some();
            ensure(gl || sp, || format!("{sel}: {} is neither", h.fmt(&p)))?;
        }
    }
    Ok(())
}

fn c12() -> Check {
    let f0 = try_preset("F:t=0")?;
    let one = hopfforge::Word::one();
    let data =
        WindowData::new(&f0, Window::new(2, 1), DEFAULT_WINDOW_CAP).map_err(|e| e.to_string())?;
    let sp = skew_primitive_space_in(&data, &one, &one).map_err(|e| e.to_string())?;
    let y = f0.element(&[("y", 1)]).unwrap();
    let c = f0.element(&[("x", 1), ("y", 1), ("x", -1)]).unwrap();
    let bracket = f0
        .mul(&y, &c)
        .unwrap()
        .sub(&f0.mul(&c, &y).unwrap())
        .unwrap();
    let mut ech = Echelon::new();
    for b in &sp.basis {
        ech.insert(b.terms().clone()).unwrap();
    }
    ensure(ech.contains(bracket.terms()).unwrap(), || {
        format!("{} not in F(0) space", f0.fmt(&bracket))
    })?;

    let f1 = try_preset("F:t=1")?;
    let x2 = f1.word(&[("x", 2)]).unwrap();
    let data =
        WindowData::new(&f1, Window::new(2, 1), DEFAULT_WINDOW_CAP).map_err(|e| e.to_string())?;
    let sp = skew_primitive_space_in(&data, &one, &x2).map_err(|e| e.to_string())?;
    match sp.basis.iter().find(|b| y_degree(&f1, b) >= 2) {
        Some(b) => Err(format!("F(1) contains {}", f1.fmt(b))),
        None => Ok(()),
    }
}

fn main() {
    let mut failed = 0;
    let mut report = |n: usize, r: Check| match &r {
        Ok(()) => println!("criterion {n}: PASS"),
        Err(e) => {
            failed += 1;
            println!("criterion {n}: FAIL ({e})");
        }
    };
    report(1, c1());
    report(2, c2());
    report(3, c3());
    let start = Instant::now();
    let bases = lemma_bases();
    let elapsed = start.elapsed().as_secs_f64();
    match &bases {
        Ok(b) => {
            report(4, c4(b, elapsed));
            report(5, c5(b));
        }
        Err(e) => {
            report(4, Err(e.clone()));
            report(5, Err(e.clone()));
        }
    }
    report(6, c6());
    report(7, c7());
    report(8, c8());
    report(9, c9());
    report(10, c10());
    report(11, c11());
    report(12, c12());
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
