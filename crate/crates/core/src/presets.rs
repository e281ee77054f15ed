//! Ready-made presentations: F(t), A(b, ξ), C(m), E(n), free abelian
//! groups, the Heisenberg group, Z × Z/2 and enveloping algebras.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::freealg::{Algebra, Alphabet, Generator, NcPoly, RewriteRule, Word};
use crate::hopfstruct::{hopf_axiom_report, GenKind, HopfPresentation};
use crate::liealg::LieAlgebra;
use crate::scalars::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PresetId {
    /// `k<x^±1, y>`, `Δy = y ⊗ 1 + x^t ⊗ y`.
    F { t: i64 },
    /// `gy = ξ yg`, `Δy = y ⊗ 1 + g^b ⊗ y`.
    A { b: i64, xi: Scalar },
    /// `gy = yg + g^m - g`, `Δy = y ⊗ 1 + g^(m-1) ⊗ y`.
    C { m: i64 },
    /// Commuting `x0..xn`, `y x_i = -x_i y`, `y^2 = x0^2 - 1`.
    E { n: usize },
    /// Group algebra of Z^n.
    GroupZ { n: usize },
    /// Group algebra of the discrete Heisenberg group, `yx = xyz^-1`.
    Heisenberg,
    /// Group algebra of Z × Z/2.
    ZcrossZ2,
    /// Universal enveloping algebra with PBW rules.
    Env(LieAlgebra),
}

impl PresetId {
    /// Parses a selector such as `F:t=1`, `A:b=1,xi=2`, `C:m=2`, `E:n=1`,
    /// `Zn:n=2`, `heis`, `zxz2`, `env:sl2`, `env:heis` or `env:<file>`.
    pub fn parse(sel: &str) -> Result<Self> {
        let bad = |m: String| Error::InvalidParameter(format!("preset '{sel}': {m}"));
        let (head, rest) = sel.split_once(':').unwrap_or((sel, ""));
        if head == "env" {
            return Ok(PresetId::Env(match rest {
                "sl2" => LieAlgebra::sl2(),
                "heis" => LieAlgebra::heisenberg(),
                "" => return Err(bad("missing Lie algebra".into())),
                path => LieAlgebra::from_json(&std::fs::read_to_string(path)?)?,
            }));
        }
        let mut params = std::collections::BTreeMap::new();
        for kv in rest.split(',').filter(|s| !s.is_empty()) {
            let (k, v) = kv
                .split_once('=')
                .ok_or_else(|| bad(format!("expected key=value, got '{kv}'")))?;
            params.insert(k.trim(), v.trim());
        }
        let int = |k: &str| -> Result<i64> {
            params
                .get(k)
                .ok_or_else(|| bad(format!("missing parameter {k}")))?
                .parse()
                .map_err(|_| bad(format!("parameter {k} must be an integer")))
        };
        let nat = |k: &str| -> Result<usize> {
            usize::try_from(int(k)?).map_err(|_| bad(format!("parameter {k} must be nonnegative")))
        };
        let expect_keys = |keys: &[&str]| -> Result<()> {
            match params.keys().find(|k| !keys.contains(k)) {
                Some(k) => Err(bad(format!("unknown parameter {k}"))),
                None => Ok(()),
            }
        };
        let id = match head {
            "F" => {
                expect_keys(&["t"])?;
                PresetId::F { t: int("t")? }
            }
            "A" => {
                expect_keys(&["b", "xi"])?;
                let xi: Scalar = params
                    .get("xi")
                    .ok_or_else(|| bad("missing parameter xi".into()))?
                    .parse()?;
                PresetId::A { b: int("b")?, xi }
            }
            "C" => {
                expect_keys(&["m"])?;
                PresetId::C { m: int("m")? }
            }
            "E" => {
                expect_keys(&["n"])?;
                PresetId::E { n: nat("n")? }
            }
            "Zn" => {
                expect_keys(&["n"])?;
                PresetId::GroupZ { n: nat("n")? }
            }
            "heis" if rest.is_empty() => PresetId::Heisenberg,
            "zxz2" if rest.is_empty() => PresetId::ZcrossZ2,
            _ => return Err(bad("unknown preset".into())),
        };
        Ok(id)
    }
}

impl FromStr for PresetId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        PresetId::parse(s)
    }
}

impl fmt::Display for PresetId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PresetId::F { t } => write!(f, "F:t={t}"),
            PresetId::A { b, xi } => write!(f, "A:b={b},xi={xi}"),
            PresetId::C { m } => write!(f, "C:m={m}"),
            PresetId::E { n } => write!(f, "E:n={n}"),
            PresetId::GroupZ { n } => write!(f, "Zn:n={n}"),
            PresetId::Heisenberg => f.write_str("heis"),
            PresetId::ZcrossZ2 => f.write_str("zxz2"),
            PresetId::Env(l) => write!(f, "env:{}", l.names().join(",")),
        }
    }
}

/// Builds the presentation and checks its rules against Δ, ε and S.
pub fn build(id: &PresetId) -> Result<HopfPresentation> {
    let h = construct(id)?;
    let report = hopf_axiom_report(&h, 3, 0, 0);
    if let Some(v) = report.first() {
        return Err(Error::AxiomFailure(format!("{id}: {v}")));
    }
    Ok(h)
}

/// Parses a selector and builds the preset.
pub fn build_str(sel: &str) -> Result<HopfPresentation> {
    build(&PresetId::parse(sel)?)
}

struct Builder {
    alpha: Alphabet,
    rules: Vec<RewriteRule>,
}

impl Builder {
    fn new(alpha: Alphabet) -> Self {
        Builder {
            alpha,
            rules: Vec::new(),
        }
    }

    fn w(&self, letters: &[(usize, i64)]) -> Word {
        self.alpha.word(letters).expect("valid preset word")
    }

    fn rule(&mut self, lhs: &[(usize, i64)], rhs: &[(Scalar, &[(usize, i64)])]) {
        let lhs = self.w(lhs);
        let rhs = NcPoly::from_terms(rhs.iter().map(|(c, l)| (self.w(l), c.clone())))
            .expect("single field");
        self.rules.push(RewriteRule::new(lhs, rhs));
    }

    /// `x_j^σ x_i^τ -> x_i^τ x_j^σ` for all signs, with `i < j`.
    fn commute(&mut self, i: usize, j: usize) {
        for s in [1, -1] {
            for t in [1, -1] {
                self.rule(&[(j, s), (i, t)], &[(Scalar::one(), &[(i, t), (j, s)])]);
            }
        }
    }

    fn finish(
        self,
        name: &str,
        kinds: Vec<GenKind>,
        field: Option<i64>,
    ) -> Result<HopfPresentation> {
        let alg = Algebra::new(self.alpha, self.rules)?;
        HopfPresentation::new(name, alg, kinds, field)
    }
}

fn one() -> Scalar {
    Scalar::one()
}

fn int(n: i64) -> Scalar {
    Scalar::from_int(n)
}

fn group_names(n: usize) -> Vec<String> {
    if n <= 3 {
        ["x", "y", "z"][..n].iter().map(|s| s.to_string()).collect()
    } else {
        (1..=n).map(|i| format!("x{i}")).collect()
    }
}

/// Builds the presentation without the axiom check.
pub fn construct(id: &PresetId) -> Result<HopfPresentation> {
    let name = id.to_string();
    match id {
        PresetId::F { t } => {
            let alpha = Alphabet::new(vec![Generator::invertible("x"), Generator::plain("y")])?;
            let b = Builder::new(alpha);
            let pair = b.w(&[(0, *t)]);
            b.finish(
                &name,
                vec![GenKind::GroupLike, GenKind::SkewPrimitive { pair }],
                None,
            )
        }
        PresetId::A { b: pb, xi } => {
            if xi.is_zero() {
                return Err(Error::InvalidParameter("xi must be nonzero".into()));
            }
            let alpha = Alphabet::new(vec![Generator::plain("y"), Generator::invertible("g")])?;
            let mut b = Builder::new(alpha);
            let (y, g) = (0, 1);
            b.rule(&[(g, 1), (y, 1)], &[(xi.clone(), &[(y, 1), (g, 1)])]);
            b.rule(&[(g, -1), (y, 1)], &[(xi.inv()?, &[(y, 1), (g, -1)])]);
            let pair = b.w(&[(g, *pb)]);
            b.finish(
                &name,
                vec![GenKind::SkewPrimitive { pair }, GenKind::GroupLike],
                xi.field(),
            )
        }
        PresetId::C { m } => {
            let alpha = Alphabet::new(vec![
                Generator::plain("y"),
                Generator::invertible("g").with_weight(0),
            ])?;
            let mut b = Builder::new(alpha);
            let (y, g) = (0, 1);
            b.rule(
                &[(g, 1), (y, 1)],
                &[
                    (one(), &[(y, 1), (g, 1)]),
                    (one(), &[(g, *m)]),
                    (int(-1), &[(g, 1)]),
                ],
            );
            b.rule(
                &[(g, -1), (y, 1)],
                &[
                    (one(), &[(y, 1), (g, -1)]),
                    (int(-1), &[(g, m - 2)]),
                    (one(), &[(g, -1)]),
                ],
            );
            let pair = b.w(&[(g, m - 1)]);
            b.finish(
                &name,
                vec![GenKind::SkewPrimitive { pair }, GenKind::GroupLike],
                None,
            )
        }
        PresetId::E { n } => {
            let mut gens: Vec<Generator> = (0..=*n)
                .map(|i| Generator::invertible(&format!("x{i}")))
                .collect();
            gens.push(Generator::plain("y"));
            let mut b = Builder::new(Alphabet::new(gens)?);
            let y = n + 1;
            for j in 0..=*n {
                for i in 0..j {
                    b.commute(i, j);
                }
            }
            for i in 0..=*n {
                for s in [1, -1] {
                    b.rule(&[(y, 1), (i, s)], &[(int(-1), &[(i, s), (y, 1)])]);
                }
            }
            b.rule(&[(y, 2)], &[(one(), &[(0, 2)]), (int(-1), &[])]);
            let pair = b.w(&[(0, 1)]);
            let mut kinds = vec![GenKind::GroupLike; n + 1];
            kinds.push(GenKind::SkewPrimitive { pair });
            b.finish(&name, kinds, None)
        }
        PresetId::GroupZ { n } => {
            if *n == 0 {
                return Err(Error::InvalidParameter("Zn needs n >= 1".into()));
            }
            let gens = group_names(*n)
                .iter()
                .map(|s| Generator::invertible(s))
                .collect();
            let mut b = Builder::new(Alphabet::new(gens)?);
            for j in 0..*n {
                for i in 0..j {
                    b.commute(i, j);
                }
            }
            b.finish(&name, vec![GenKind::GroupLike; *n], None)
        }
        PresetId::Heisenberg => {
            let alpha = Alphabet::new(vec![
                Generator::invertible("x"),
                Generator::invertible("y"),
                Generator::invertible("z").with_weight(0),
            ])?;
            let mut b = Builder::new(alpha);
            let (x, y, z) = (0, 1, 2);
            for s in [1, -1] {
                for t in [1, -1] {
                    b.rule(
                        &[(y, s), (x, t)],
                        &[(one(), &[(x, t), (y, s), (z, -s * t)])],
                    );
                }
            }
            for s in [1, -1] {
                for t in [1, -1] {
                    b.rule(&[(z, s), (x, t)], &[(one(), &[(x, t), (z, s)])]);
                    b.rule(&[(z, s), (y, t)], &[(one(), &[(y, t), (z, s)])]);
                }
            }
            b.finish(&name, vec![GenKind::GroupLike; 3], None)
        }
        PresetId::ZcrossZ2 => {
            let gens = vec![Generator::invertible("x"), Generator::invertible("u")];
            let (x, u) = (0, 1);
            let alpha =
                Alphabet::with_precedence(gens, &[(u, false), (u, true), (x, true), (x, false)])?;
            let mut b = Builder::new(alpha);
            b.rule(&[(u, -1)], &[(one(), &[(u, 1)])]);
            b.rule(&[(u, 2)], &[(one(), &[])]);
            b.rule(&[(x, 1), (u, 1)], &[(one(), &[(u, 1), (x, 1)])]);
            b.rule(&[(x, -1), (u, 1)], &[(one(), &[(u, 1), (x, -1)])]);
            b.finish(&name, vec![GenKind::GroupLike; 2], None)
        }
        PresetId::Env(l) => {
            let violations = l.jacobi_check()?;
            if !violations.is_empty() {
                return Err(Error::InvalidParameter(format!(
                    "Lie algebra fails the Jacobi identity on {} basis triples",
                    violations.len()
                )));
            }
            let d = l.dim();
            let gens = l.names().iter().map(|s| Generator::plain(s)).collect();
            let mut b = Builder::new(Alphabet::new(gens)?);
            for j in 0..d {
                for i in 0..j {
                    let mut rhs: Vec<(Scalar, Vec<(usize, i64)>)> =
                        vec![(one(), vec![(i, 1), (j, 1)])];
                    for (k, c) in l.structure(j, i).iter().enumerate() {
                        if !c.is_zero() {
                            rhs.push((c.clone(), vec![(k, 1)]));
                        }
                    }
                    let rhs: Vec<(Scalar, &[(usize, i64)])> =
                        rhs.iter().map(|(c, w)| (c.clone(), w.as_slice())).collect();
                    b.rule(&[(j, 1), (i, 1)], &rhs);
                }
            }
            let kinds = vec![GenKind::SkewPrimitive { pair: Word::one() }; d];
            b.finish(&name, kinds, l.field())
        }
    }
}
