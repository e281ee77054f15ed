//! Exact span-dimension sequences, Gelfand-Kirillov degree estimates,
//! word-metric ball growth and Hopf-subalgebra closure checks.

use std::collections::BTreeSet;

use serde::Serialize;
use serde_json::{json, Value};

use crate::echelon::Echelon;
use crate::error::{Error, Result};
use crate::freealg::{NcPoly, Word};
use crate::hopfstruct::{GenKind, HopfPresentation};

pub const DEFAULT_DIMENSION_CAP: usize = 200_000;

/// `dims[n-1] = dim V^n` for `n = 1..=N`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DimSequence {
    pub dims: Vec<usize>,
    pub description: String,
}

impl DimSequence {
    /// `n,dim` rows with a header line.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,dim\n");
        for (i, d) in self.dims.iter().enumerate() {
            out.push_str(&format!("{},{}\n", i + 1, d));
        }
        out
    }

    /// `d` at `n`, 1-based.
    pub fn at(&self, n: usize) -> usize {
        self.dims[n - 1]
    }
}

/// Incrementally maintained echelon basis of `V^n`.
struct SpanBuilder<'a> {
    h: &'a HopfPresentation,
    v: Vec<NcPoly>,
    ech: Echelon<Word>,
    /// Rows added in the latest layer.
    fresh: Vec<NcPoly>,
    cap: usize,
    dims: Vec<usize>,
    description: String,
}

impl<'a> SpanBuilder<'a> {
    fn new(h: &'a HopfPresentation, v: &[NcPoly], cap: usize, description: String) -> Result<Self> {
        let v: Vec<NcPoly> = v.iter().map(|p| h.nf(p)).collect::<Result<_>>()?;
        let mut b = SpanBuilder {
            h,
            v: Vec::new(),
            ech: Echelon::new(),
            fresh: Vec::new(),
            cap,
            dims: Vec::new(),
            description,
        };
        for p in &v {
            b.add(p.clone())?;
        }
        if !b.ech.contains(NcPoly::one().terms())? {
            return Err(Error::Precondition(
                "1 is not in the span of the generating set".into(),
            ));
        }
        b.v = v;
        b.dims.push(b.ech.dim());
        Ok(b)
    }

    fn add(&mut self, p: NcPoly) -> Result<()> {
        let r = self.ech.reduce(p.into_terms())?;
        if r.is_empty() {
            return Ok(());
        }
        self.ech.insert(r.clone())?;
        self.fresh.push(NcPoly::from_terms(r)?);
        if self.ech.dim() > self.cap {
            return Err(Error::DimensionCap {
                cap: self.cap,
                partial: DimSequence {
                    dims: self.dims.clone(),
                    description: format!("{} (truncated)", self.description),
                },
            });
        }
        Ok(())
    }

    /// `V^{n+1} = V^n + (new rows of V^n) · V`.
    fn layer(&mut self) -> Result<()> {
        let prev = std::mem::take(&mut self.fresh);
        let v = self.v.clone();
        for r in &prev {
            for g in &v {
                let p = self.h.mul(r, g)?;
                self.add(p)?;
            }
        }
        self.dims.push(self.ech.dim());
        Ok(())
    }

    fn contains(&self, p: &NcPoly) -> Result<bool> {
        self.ech.contains(p.terms())
    }

    fn sequence(&self) -> DimSequence {
        DimSequence {
            dims: self.dims.clone(),
            description: self.description.clone(),
        }
    }
}

fn describe_set(h: &HopfPresentation, v: &[NcPoly]) -> String {
    let parts: Vec<String> = v.iter().map(|p| h.fmt(p)).collect();
    format!("V = {{{}}} in {}", parts.join(", "), h.name())
}

/// `dim span(V^n)` for `n = 1..=n_max`.
pub fn span_dimension_sequence(
    h: &HopfPresentation,
    v: &[NcPoly],
    n_max: usize,
    cap: usize,
) -> Result<DimSequence> {
    if n_max == 0 {
        return Err(Error::Precondition("N must be at least 1".into()));
    }
    let mut b = SpanBuilder::new(h, v, cap, describe_set(h, v))?;
    for _ in 1..n_max {
        b.layer()?;
    }
    Ok(b.sequence())
}

/// `{1} ∪ {g, g^-1 : g group-like} ∪ {y : y skew-primitive}`.
pub fn standard_generating_set(h: &HopfPresentation) -> Vec<NcPoly> {
    let a = h.alphabet();
    let mut v = vec![NcPoly::one()];
    for (g, gen) in a.generators().iter().enumerate() {
        v.push(NcPoly::word(a.word(&[(g, 1)]).expect("positive power")));
        if gen.invertible {
            v.push(NcPoly::word(a.word(&[(g, -1)]).expect("invertible")));
        }
    }
    v
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GkEstimate {
    Degree(u32),
    Superpolynomial,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GkReport {
    pub estimate: GkEstimate,
    /// `(m, d_m, d_{2m})` used for the doubling ratio.
    pub doubling: (usize, usize, usize),
    pub sequence: DimSequence,
}

impl GkReport {
    pub fn to_json(&self) -> Value {
        let mut v = match self.estimate {
            GkEstimate::Degree(k) => json!({"degree": k}),
            GkEstimate::Superpolynomial => json!({"superpolynomial": true}),
        };
        let (m, dm, d2m) = self.doubling;
        v["dims"] = json!(self.sequence.dims);
        v["doubling"] = json!({"m": m, "d_m": dm, "d_2m": d2m});
        v["description"] = json!(self.sequence.description);
        v
    }

    pub fn describe(&self) -> String {
        let (m, dm, d2m) = self.doubling;
        let est = match self.estimate {
            GkEstimate::Degree(k) => format!("degree {k}"),
            GkEstimate::Superpolynomial => "superpolynomial".to_string(),
        };
        format!("{est} (d_{m} = {dm}, d_{} = {d2m})", 2 * m)
    }
}

/// Rounds `log2(d_{2m}/d_m)` at the largest `m` with `2m <= N`, unless
/// every ratio `d_{n+1}/d_n` over the top quarter is at least 3/2.
pub fn gk_estimate(d: &DimSequence) -> Result<GkReport> {
    let n = d.dims.len();
    if n < 8 {
        return Err(Error::InsufficientData(n));
    }
    let quarter = (n / 4).max(1);
    let superpoly = (n - quarter..n).all(|k| 2 * d.at(k + 1) as u128 >= 3 * d.at(k) as u128);
    let m = n / 2;
    let (dm, d2m) = (d.at(m), d.at(2 * m));
    let estimate = if superpoly {
        GkEstimate::Superpolynomial
    } else {
        // round(log2 r) >= k  iff  2^(2k-1) * dm^2 <= d2m^2
        let (a, b) = ((dm as u128).pow(2), (d2m as u128).pow(2));
        let mut k = 0u32;
        while k < 60 && (a << (2 * k + 1)) <= b {
            k += 1;
        }
        GkEstimate::Degree(k)
    };
    Ok(GkReport {
        estimate,
        doubling: (m, dm, d2m),
        sequence: d.clone(),
    })
}

/// Ball sizes `|B(n)|`, `n = 1..=n_max`, for the symmetric generating set
/// `gens^±1` of a group algebra.
pub fn ball_growth(
    h: &HopfPresentation,
    gens: &[Word],
    n_max: usize,
    cap: usize,
) -> Result<DimSequence> {
    if h.kinds().iter().any(|k| *k != GenKind::GroupLike) {
        return Err(Error::Precondition(format!(
            "{} is not a group algebra",
            h.name()
        )));
    }
    let a = h.alphabet();
    let mut steps = Vec::new();
    for g in gens {
        steps.push(g.clone());
        steps.push(a.inverse_word(g).expect("group-like words are invertible"));
    }
    let to_word = |p: NcPoly| -> Result<Word> {
        match p.leading() {
            Some((w, c)) if p.len() == 1 && c.is_one() => Ok(w.clone()),
            _ => Err(Error::Precondition(
                "group product did not normalize to a word".into(),
            )),
        }
    };
    let names: Vec<String> = gens.iter().map(|g| h.fmt_word(g)).collect();
    let description = format!(
        "ball growth of {} with S = {{{}}}^±1",
        h.name(),
        names.join(", ")
    );
    let mut seen: BTreeSet<Word> = BTreeSet::new();
    seen.insert(Word::one());
    let mut frontier = vec![Word::one()];
    let mut dims = Vec::new();
    for _ in 0..n_max {
        let mut next = Vec::new();
        for w in &frontier {
            for s in &steps {
                let u = to_word(h.algebra().word_mul(w, s)?)?;
                if seen.insert(u.clone()) {
                    next.push(u);
                }
            }
        }
        if seen.len() > cap {
            return Err(Error::DimensionCap {
                cap,
                partial: DimSequence {
                    dims,
                    description: format!("{description} (truncated)"),
                },
            });
        }
        dims.push(seen.len());
        frontier = next;
    }
    Ok(DimSequence { dims, description })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubalgebraViolation {
    pub element: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubalgebraReport {
    pub cap: usize,
    pub sequence: DimSequence,
    pub violations: Vec<SubalgebraViolation>,
}

impl SubalgebraReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "cap": self.cap,
            "dims": self.sequence.dims,
            "passed": self.passed(),
            "violations": self.violations,
        })
    }
}

/// Spans `V^cap` for `V = {1} ∪ gens ∪ S(gens)` and checks that Δ maps
/// every basis element into `U ⊗ U` and S maps it into `U`.
pub fn verify_hopf_subalgebra(
    h: &HopfPresentation,
    gens: &[NcPoly],
    cap: usize,
) -> Result<SubalgebraReport> {
    if gens.is_empty() {
        return Err(Error::Precondition("no generators given".into()));
    }
    if cap == 0 {
        return Err(Error::Precondition("degree cap must be at least 1".into()));
    }
    let mut v = vec![NcPoly::one()];
    for g in gens {
        v.push(h.nf(g)?);
        v.push(h.antipode(g)?);
    }
    let mut b = SpanBuilder::new(h, &v, DEFAULT_DIMENSION_CAP, describe_set(h, &v))?;
    for _ in 1..cap {
        b.layer()?;
    }
    let mut violations = Vec::new();
    let basis: Vec<NcPoly> = b
        .ech
        .reduced_rows()?
        .into_iter()
        .map(NcPoly::from_terms)
        .collect::<Result<_>>()?;
    for p in &basis {
        let delta = h.coproduct(p)?;
        for (side, slices) in [
            ("left", delta.right_factors()),
            ("right", delta.left_factors()),
        ] {
            for (w, q) in slices {
                if !b.contains(&q)? {
                    violations.push(SubalgebraViolation {
                        element: h.fmt(p),
                        detail: format!(
                            "{side} tensor factor {} (paired with {}) is outside the span",
                            h.fmt(&q),
                            h.fmt_word(&w)
                        ),
                    });
                }
            }
        }
        let s = h.antipode(p)?;
        if !b.contains(&s)? {
            violations.push(SubalgebraViolation {
                element: h.fmt(p),
                detail: format!("antipode {} is outside the span", h.fmt(&s)),
            });
        }
    }
    Ok(SubalgebraReport {
        cap,
        sequence: b.sequence(),
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presets::{build, PresetId};
    use crate::scalars::Scalar;

    fn seq(h: &HopfPresentation, n: usize) -> DimSequence {
        span_dimension_sequence(h, &standard_generating_set(h), n, DEFAULT_DIMENSION_CAP).unwrap()
    }

    #[test]
    fn quadratic_sequences() {
        let a = build(&PresetId::A {
            b: 1,
            xi: Scalar::from_int(2),
        })
        .unwrap();
        let d = seq(&a, 8);
        assert_eq!(
            d.dims,
            (1..=8).map(|n| (n + 1) * (n + 1)).collect::<Vec<_>>()
        );
        let z2 = build(&PresetId::GroupZ { n: 2 }).unwrap();
        let d = seq(&z2, 8);
        assert_eq!(
            d.dims,
            (1..=8).map(|n| 2 * n * n + 2 * n + 1).collect::<Vec<_>>()
        );
    }

    #[test]
    fn ball_matches_span_for_group_algebra() {
        let z2 = build(&PresetId::GroupZ { n: 2 }).unwrap();
        let gens: Vec<Word> = ["x", "y"]
            .iter()
            .map(|g| z2.word(&[(g, 1)]).unwrap())
            .collect();
        assert_eq!(
            ball_growth(&z2, &gens, 8, DEFAULT_DIMENSION_CAP)
                .unwrap()
                .dims,
            seq(&z2, 8).dims
        );
    }

    #[test]
    fn estimates() {
        let mk = |dims: Vec<usize>| DimSequence {
            dims,
            description: String::new(),
        };
        let sq = mk((1..=16).map(|n| (n + 1) * (n + 1)).collect());
        assert_eq!(gk_estimate(&sq).unwrap().estimate, GkEstimate::Degree(2));
        let exp = mk((1..=10).map(|n| 1usize << n).collect());
        assert_eq!(
            gk_estimate(&exp).unwrap().estimate,
            GkEstimate::Superpolynomial
        );
        assert!(matches!(
            gk_estimate(&mk(vec![1; 7])),
            Err(Error::InsufficientData(7))
        ));
    }

    #[test]
    fn cap_returns_partial() {
        let f1 = build(&PresetId::F { t: 1 }).unwrap();
        match span_dimension_sequence(&f1, &standard_generating_set(&f1), 10, 50) {
            Err(Error::DimensionCap { cap: 50, partial }) => assert!(!partial.dims.is_empty()),
            other => panic!("expected cap error, got {other:?}"),
        }
    }

    #[test]
    fn e1_subalgebra_closure() {
        let e1 = build(&PresetId::E { n: 1 }).unwrap();
        let gens = vec![
            e1.element(&[("x0", 1)]).unwrap(),
            e1.element(&[("x0", -1)]).unwrap(),
            e1.element(&[("y", 1)]).unwrap(),
        ];
        assert!(verify_hopf_subalgebra(&e1, &gens, 4).unwrap().passed());
        let f1 = build(&PresetId::F { t: 1 }).unwrap();
        let r = verify_hopf_subalgebra(&f1, &[f1.element(&[("y", 1)]).unwrap()], 2).unwrap();
        assert!(!r.passed());
    }
}
