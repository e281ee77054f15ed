use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{random_word, HopfPresentation};
use crate::error::{Error, Result};
use crate::freealg::Word;

/// How an axis of a grading interacts with Δ.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AxisKind {
    /// Coalgebra grading: each term `a ⊗ b` of Δ(h) has
    /// `wt(a) + wt(b) = wt(h)`, and ε vanishes in positive weight.
    Coalgebra,
    /// Comodule grading: the right factor carries the weight,
    /// `wt(b) = wt(h)`. The exponent sum of a group-like generator is of
    /// this kind since `Δx = x ⊗ x`.
    Comodule,
}

/// Integer weights per generator on one or more axes; inverse letters
/// carry the negated weight.
/// An axis given by name: label, kind, and per-generator weights.
pub type NamedAxis<'a> = (&'a str, AxisKind, &'a [(&'a str, i64)]);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grading {
    pub axes: Vec<(String, AxisKind)>,
    /// `weights[g][k]` is the weight of generator `g` on axis `k`.
    pub weights: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradingViolation {
    /// `"precondition"` for inhomogeneous rules, else the axis name.
    pub check: String,
    pub element: String,
    pub detail: String,
}

impl Grading {
    /// Builds a grading from named axes and per-generator weights;
    /// unlisted generators get weight 0.
    pub fn by_names(h: &HopfPresentation, axes: &[NamedAxis<'_>]) -> Result<Self> {
        let ngen = h.alphabet().generators().len();
        let mut weights = vec![vec![0; axes.len()]; ngen];
        for (k, (_, _, ws)) in axes.iter().enumerate() {
            for &(g, w) in ws.iter() {
                weights[h.gen_index(g)?][k] = w;
            }
        }
        Ok(Grading {
            axes: axes.iter().map(|(n, k, _)| (n.to_string(), *k)).collect(),
            weights,
        })
    }

    /// The y-grading of F(t): weight 1 on `y`.
    pub fn y_grading(h: &HopfPresentation) -> Result<Self> {
        Self::by_names(h, &[("y", AxisKind::Coalgebra, &[("y", 1)])])
    }

    /// The (x, y)-bigrading of F(t).
    pub fn xy_bigrading(h: &HopfPresentation) -> Result<Self> {
        Self::by_names(
            h,
            &[
                ("x", AxisKind::Comodule, &[("x", 1)]),
                ("y", AxisKind::Coalgebra, &[("y", 1)]),
            ],
        )
    }

    pub fn weight(&self, h: &HopfPresentation, w: &Word) -> Vec<i64> {
        let a = h.alphabet();
        let mut out = vec![0; self.axes.len()];
        for &s in w.syms() {
            let g = a.sym_gen(s);
            let sign = if a.sym_is_inverse(s) { -1 } else { 1 };
            for (o, wt) in out.iter_mut().zip(&self.weights[g]) {
                *o += sign * wt;
            }
        }
        out
    }
}

/// Checks that every rule is homogeneous, then that Δ respects each axis
/// on `trials` seeded random normal words, and that ε vanishes on words
/// of positive weight on a coalgebra axis.
pub fn grading_check(
    h: &HopfPresentation,
    g: &Grading,
    trials: usize,
    seed: u64,
) -> Result<Vec<GradingViolation>> {
    if g.weights.len() != h.alphabet().generators().len()
        || g.weights.iter().any(|w| w.len() != g.axes.len())
    {
        return Err(Error::InvalidParameter(
            "grading shape does not match generators".into(),
        ));
    }
    let mut out = Vec::new();
    for rule in h.algebra().rules() {
        let wl = g.weight(h, &rule.lhs);
        for (w, _) in rule.rhs.iter() {
            let wr = g.weight(h, w);
            if wr != wl {
                out.push(GradingViolation {
                    check: "precondition".into(),
                    element: format!("{} -> {}", h.fmt_word(&rule.lhs), h.fmt(&rule.rhs)),
                    detail: format!(
                        "term {} has weight {:?}, lhs has {:?}",
                        h.fmt_word(w),
                        wr,
                        wl
                    ),
                });
            }
        }
    }
    if !out.is_empty() {
        return Ok(out);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut tested = 0;
    let mut attempts = 0;
    while tested < trials && attempts < trials * 20 {
        attempts += 1;
        let raw = random_word(h, &mut rng, 4);
        let nf = h.nf(&crate::NcPoly::word(raw))?;
        let Some((w, _)) = nf.leading() else { continue };
        let w = w.clone();
        tested += 1;
        let wh = g.weight(h, &w);
        let delta = h.coproduct(&crate::NcPoly::word(w.clone()))?;
        for ([a, b], _) in delta.iter() {
            let (wa, wb) = (g.weight(h, a), g.weight(h, b));
            for (k, (name, kind)) in g.axes.iter().enumerate() {
                let ok = match kind {
                    AxisKind::Coalgebra => wa[k] + wb[k] == wh[k],
                    AxisKind::Comodule => wb[k] == wh[k],
                };
                if !ok {
                    out.push(GradingViolation {
                        check: name.clone(),
                        element: h.fmt_word(&w),
                        detail: format!(
                            "term {} (x) {} has weights {} and {}, element has {}",
                            h.fmt_word(a),
                            h.fmt_word(b),
                            wa[k],
                            wb[k],
                            wh[k]
                        ),
                    });
                }
            }
        }
        for (k, (name, kind)) in g.axes.iter().enumerate() {
            if *kind == AxisKind::Coalgebra && wh[k] > 0 {
                let e = h.counit(&crate::NcPoly::word(w.clone()));
                if !e.is_zero() {
                    out.push(GradingViolation {
                        check: name.clone(),
                        element: h.fmt_word(&w),
                        detail: format!("counit is {e} in positive weight"),
                    });
                }
            }
        }
    }
    Ok(out)
}
