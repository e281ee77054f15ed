//! Linear-algebra engines: skew-primitive and group-like spaces over a
//! bounded window of words, the classification of skew-primitives of
//! F(t), the σ/τ index maps, and the conjugate-relation procedure that
//! produces subalgebra data `(f, ξ, β)`.

use std::fmt;

use serde_json::{json, Value};

use crate::echelon::{kernel, Echelon, Insertion, SparseVec};
use crate::error::{Error, Result};
use crate::freealg::{NcPoly, Word};
use crate::hopfstruct::{is_skew_primitive, GenKind, HopfPresentation, TensorPoly};
use crate::scalars::{deflate, find_roots, Rational, Scalar, UniPoly};

pub const DEFAULT_WINDOW_CAP: usize = 20_000;
pub const DEFAULT_RELATION_CAP: usize = 8;

/// `(i_1, .., i_{n+1})` indexing `x^{i_1} y x^{i_2} y .. y x^{i_{n+1}}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiIndex(Vec<i64>);

impl MultiIndex {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if entries.len() < 2 {
            return Err(Error::InvalidParameter(
                "multi-index needs at least 2 entries".into(),
            ));
        }
        Ok(MultiIndex(entries))
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    /// Number of `y` letters.
    pub fn n(&self) -> usize {
        self.0.len() - 1
    }

    /// Sum of the first n entries.
    pub fn t_sum(&self) -> i64 {
        self.0[..self.n()].iter().sum()
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `σ(i_1, .., i_{n+1}) = (-i_{n+1} - t, -i_n - t, .., -i_2 - t, -i_1)`.
pub fn sigma_map(a: &MultiIndex, t: i64) -> MultiIndex {
    let e = &a.0;
    let n = e.len();
    let mut out: Vec<i64> = e[1..].iter().rev().map(|&i| -i - t).collect();
    out.push(-e[0]);
    debug_assert_eq!(out.len(), n);
    MultiIndex(out)
}

/// `τ(i_1, ..) = (i_1 - b, ..)`.
pub fn tau_map(a: &MultiIndex, b: i64) -> MultiIndex {
    let mut out = a.0.clone();
    out[0] -= b;
    MultiIndex(out)
}

pub fn tau_inverse(a: &MultiIndex, b: i64) -> MultiIndex {
    tau_map(a, -b)
}

/// The word `x^{i_1} y .. y x^{i_{n+1}}` of F(t).
pub fn monomial(h: &HopfPresentation, a: &MultiIndex) -> Result<Word> {
    let x = h.gen_index("x")?;
    let y = h.gen_index("y")?;
    let mut letters = Vec::new();
    for (k, &i) in a.0.iter().enumerate() {
        if k > 0 {
            letters.push((y, 1));
        }
        letters.push((x, i));
    }
    h.alphabet().word(&letters)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Window {
    /// Bound on the total degree in non-invertible generators.
    pub max_y: u32,
    /// Bound on the absolute value of each invertible run exponent.
    pub e_bound: i64,
}

impl Window {
    pub fn new(max_y: u32, e_bound: i64) -> Self {
        Window { max_y, e_bound }
    }
}

/// All irreducible words in the window, ascending in the word order.
pub fn enumerate_window(h: &HopfPresentation, w: Window, cap: usize) -> Result<Vec<Word>> {
    let gens = h.alphabet().generators().to_vec();
    let alg = h.algebra();
    let mut out = Vec::new();
    let mut stack: Vec<(Word, Option<usize>, u32)> = vec![(Word::one(), None, 0)];
    while let Some((word, last, ydeg)) = stack.pop() {
        out.push(word.clone());
        if out.len() > cap {
            return Err(Error::WindowTooLarge { cap });
        }
        for (g, gen) in gens.iter().enumerate() {
            if Some(g) == last {
                continue;
            }
            let exps: Vec<(i64, u32)> = if gen.invertible {
                (-w.e_bound..=w.e_bound)
                    .filter(|&e| e != 0)
                    .map(|e| (e, 0))
                    .collect()
            } else {
                (1..=(w.max_y - ydeg) as i64)
                    .map(|e| (e, e as u32))
                    .collect()
            };
            for (e, dy) in exps {
                let ext = h.alphabet().mul(&word, &h.alphabet().word(&[(g, e)])?);
                if alg.is_irreducible(&ext) {
                    stack.push((ext, Some(g), ydeg + dy));
                }
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Window words with their coproducts, reusable across pairs.
pub struct WindowData<'a> {
    pub h: &'a HopfPresentation,
    pub window: Window,
    pub words: Vec<Word>,
    pub coproducts: Vec<TensorPoly<2>>,
}

impl<'a> WindowData<'a> {
    pub fn new(h: &'a HopfPresentation, window: Window, cap: usize) -> Result<Self> {
        let words = enumerate_window(h, window, cap)?;
        let coproducts = words
            .iter()
            .map(|w| h.coproduct(&NcPoly::word(w.clone())))
            .collect::<Result<_>>()?;
        Ok(WindowData {
            h,
            window,
            words,
            coproducts,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewPrimSpace {
    pub pair: (Word, Word),
    pub window: Window,
    /// Reduced echelon basis, leading words strictly increasing.
    pub basis: Vec<NcPoly>,
}

impl SkewPrimSpace {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn to_json(&self, h: &HopfPresentation) -> Value {
        json!({
            "pair": [h.fmt_word(&self.pair.0), h.fmt_word(&self.pair.1)],
            "window": {"max_y": self.window.max_y, "ebound": self.window.e_bound},
            "dimension": self.dimension(),
            "basis": self.basis.iter().map(|p| h.fmt(p)).collect::<Vec<_>>(),
        })
    }
}

fn group_like_normal_word(h: &HopfPresentation, w: &Word) -> Result<Word> {
    if !h.is_group_like_word(w) {
        return Err(Error::Precondition(format!(
            "{} is not group-like",
            h.fmt_word(w)
        )));
    }
    let p = h.algebra().normalize_word(w)?;
    match p.leading() {
        Some((nw, c)) if p.len() == 1 && c.is_one() => Ok(nw.clone()),
        _ => Err(Error::Precondition(format!(
            "{} does not normalize to a word",
            h.fmt_word(w)
        ))),
    }
}

/// Solves `Δf = f ⊗ u + v ⊗ f` over the window.
pub fn skew_primitive_space_in(data: &WindowData, u: &Word, v: &Word) -> Result<SkewPrimSpace> {
    let h = data.h;
    let u = group_like_normal_word(h, u)?;
    let v = group_like_normal_word(h, v)?;
    let columns: Vec<SparseVec<[Word; 2]>> = data
        .words
        .iter()
        .zip(&data.coproducts)
        .map(|(w, d)| {
            let mut col = d.clone();
            col.try_add_term([w.clone(), u.clone()], Scalar::from_int(-1))?;
            col.try_add_term([v.clone(), w.clone()], Scalar::from_int(-1))?;
            Ok(col.terms().clone())
        })
        .collect::<Result<_>>()?;
    let basis = kernel(&columns)?
        .into_iter()
        .map(|k| NcPoly::from_terms(k.into_iter().map(|(i, c)| (data.words[i].clone(), c))))
        .collect::<Result<Vec<_>>>()?;
    for f in &basis {
        let lhs = h.coproduct(f)?;
        let mut rhs = TensorPoly::outer(f, &NcPoly::word(u.clone()))?;
        rhs.add_scaled(
            &TensorPoly::outer(&NcPoly::word(v.clone()), f)?,
            &Scalar::one(),
        )?;
        if lhs != rhs {
            return Err(Error::Falsification(format!(
                "solver output {} fails Δ",
                h.fmt(f)
            )));
        }
    }
    Ok(SkewPrimSpace {
        pair: (u, v),
        window: data.window,
        basis,
    })
}

pub fn skew_primitive_space(
    h: &HopfPresentation,
    u: &Word,
    v: &Word,
    w: Window,
) -> Result<SkewPrimSpace> {
    let data = WindowData::new(h, w, DEFAULT_WINDOW_CAP)?;
    skew_primitive_space_in(&data, u, v)
}

/// Window words `w` with `Δw = w ⊗ w`.
pub fn group_like_space(h: &HopfPresentation, w: Window) -> Result<Vec<Word>> {
    let words = enumerate_window(h, w, DEFAULT_WINDOW_CAP)?;
    let mut out = Vec::new();
    for w in words {
        let p = NcPoly::word(w.clone());
        if h.coproduct(&p)? == TensorPoly::outer(&p, &p)? {
            out.push(w);
        }
    }
    Ok(out)
}

/// Largest number of non-invertible letters in a term.
pub fn y_degree(h: &HopfPresentation, p: &NcPoly) -> usize {
    let a = h.alphabet();
    p.iter()
        .map(|(w, _)| {
            w.syms()
                .iter()
                .filter(|&&s| !a.generators()[a.sym_gen(s)].invertible)
                .count()
        })
        .max()
        .unwrap_or(0)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Classification {
    /// `f = λ x^a (x^m - 1)`, `m > 0`.
    YDegree0 { lambda: Scalar, a: i64, m: i64 },
    /// `f = f0 + λ x^a (x^t - 1)` with `f0` of bidegree `(a, 1)`.
    YDegree1 { f0: NcPoly, a: i64, lambda: Scalar },
}

impl Classification {
    pub fn reconstruct(&self, h: &HopfPresentation, t: i64) -> Result<NcPoly> {
        let x = h.gen_index("x")?;
        let xp = |e: i64| h.alphabet().word(&[(x, e)]);
        let binom = |lambda: &Scalar, a: i64, m: i64| -> Result<NcPoly> {
            NcPoly::from_terms([(xp(a + m)?, lambda.clone()), (xp(a)?, -lambda)])
        };
        match self {
            Classification::YDegree0 { lambda, a, m } => binom(lambda, *a, *m),
            Classification::YDegree1 { f0, a, lambda } => f0.add(&binom(lambda, *a, t)?),
        }
    }

    pub fn describe(&self, h: &HopfPresentation) -> String {
        match self {
            Classification::YDegree0 { lambda, a, m } => {
                format!("y_degree = 0, lambda = {lambda}, a = {a}, m = {m}")
            }
            Classification::YDegree1 { f0, a, lambda } => {
                format!(
                    "y_degree = 1, f0 = {}, a = {a}, lambda = {lambda}",
                    h.fmt(f0)
                )
            }
        }
    }

    pub fn to_json(&self, h: &HopfPresentation) -> Value {
        match self {
            Classification::YDegree0 { lambda, a, m } => {
                json!({"y_degree": 0, "lambda": lambda.to_string(), "a": a, "m": m})
            }
            Classification::YDegree1 { f0, a, lambda } => {
                json!({"y_degree": 1, "f0": h.fmt(f0), "a": a, "lambda": lambda.to_string()})
            }
        }
    }
}

fn x_exponent(h: &HopfPresentation, w: &Word, x: usize) -> i64 {
    h.alphabet().exponent_sums(w)[x]
}

/// Splits a skew-primitive of F(t) into one of the two normal shapes.
pub fn classify_skew_primitive(h: &HopfPresentation, t: i64, f: &NcPoly) -> Result<Classification> {
    if t == 0 {
        return Err(Error::Precondition("classification needs t != 0".into()));
    }
    let x = h.gen_index("x")?;
    if !matches!(&h.kinds()[h.gen_index("y")?], GenKind::SkewPrimitive { pair } if *pair == h.alphabet().word(&[(x, t)])?)
    {
        return Err(Error::Precondition(format!("{} is not F({t})", h.name())));
    }
    let f = h.nf(f)?;
    if is_skew_primitive(h, &f)?.is_none() {
        return Err(Error::NotSkewPrimitive);
    }
    let fail = |m: &str| Error::ClassificationFailure(format!("{}: {m}", h.fmt(&f)));
    // Terms without y, as (exponent, coefficient) ascending.
    let split = |p: &NcPoly| -> (NcPoly, Vec<(i64, Scalar)>) {
        let mut ypart = NcPoly::zero();
        let mut xs = Vec::new();
        for (w, c) in p.iter() {
            if h.is_group_like_word(w) {
                xs.push((x_exponent(h, w, x), c.clone()));
            } else {
                ypart.add_term(w.clone(), c.clone());
            }
        }
        xs.sort_by_key(|(e, _)| *e);
        (ypart, xs)
    };
    match y_degree(h, &f) {
        0 => {
            let (_, xs) = split(&f);
            match xs.as_slice() {
                [(lo, c_lo), (hi, c_hi)] if *c_hi == -c_lo => Ok(Classification::YDegree0 {
                    lambda: c_hi.clone(),
                    a: *lo,
                    m: hi - lo,
                }),
                _ => Err(fail("y-free part is not a binomial λx^a(x^m-1)")),
            }
        }
        1 => {
            let (f0, xs) = split(&f);
            let degs: Vec<i64> = f0.iter().map(|(w, _)| x_exponent(h, w, x)).collect();
            let a = degs[0];
            if degs.iter().any(|&d| d != a) {
                return Err(fail("y-linear part is not x-homogeneous"));
            }
            let lambda = match xs.as_slice() {
                [] => Scalar::zero(),
                [(e1, c1), (e2, c2)] => {
                    let (lo, hi, c_lo, c_hi) = if t > 0 {
                        (e1, e2, c1, c2)
                    } else {
                        (e2, e1, c2, c1)
                    };
                    if *lo != a || *hi != a + t || *c_hi != -c_lo {
                        return Err(fail("y-free part is not λx^a(x^t-1)"));
                    }
                    c_hi.clone()
                }
                _ => return Err(fail("y-free part is not λx^a(x^t-1)")),
            };
            Ok(Classification::YDegree1 { f0, a, lambda })
        }
        d => Err(fail(&format!("y-degree {d} exceeds 1"))),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitMismatch {
    pub s: usize,
    pub iterated: MultiIndex,
    pub closed_form: MultiIndex,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitReport {
    pub beta: MultiIndex,
    pub t: i64,
    pub b: i64,
    /// Images after 2s steps, s = 0..=s_max.
    pub images: Vec<MultiIndex>,
    pub mismatches: Vec<OrbitMismatch>,
    pub distinct: bool,
}

impl OrbitReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty() && self.distinct
    }
}

/// Iterates `τ^{-1}σ` with `b = nt` and compares every even power with
/// `(ℓ_1 + s(n-1)t, ℓ_2, .., ℓ_n, ℓ_{n+1} - s(n-1)t)`.
pub fn orbit_check(beta: &MultiIndex, t: i64, s_max: usize) -> Result<OrbitReport> {
    let n = beta.n();
    if t == 0 || n < 2 {
        return Err(Error::Precondition(
            "orbit check needs t != 0 and n >= 2, else (n-1)t = 0 and the orbit is finite".into(),
        ));
    }
    if s_max == 0 {
        return Err(Error::Precondition("s_max must be at least 1".into()));
    }
    let b = n as i64 * t;
    let step = |a: &MultiIndex| tau_inverse(&sigma_map(a, t), b);
    let mut images = vec![beta.clone()];
    let mut mismatches = Vec::new();
    let mut cur = beta.clone();
    for s in 1..=s_max {
        cur = step(&step(&cur));
        let shift = s as i64 * (n as i64 - 1) * t;
        let mut closed = beta.0.clone();
        closed[0] += shift;
        closed[n] -= shift;
        let closed = MultiIndex(closed);
        if cur != closed {
            mismatches.push(OrbitMismatch {
                s,
                iterated: cur.clone(),
                closed_form: closed,
            });
        }
        images.push(cur.clone());
    }
    let mut sorted = images.clone();
    sorted.sort();
    sorted.dedup();
    let distinct = sorted.len() == images.len();
    Ok(OrbitReport {
        beta: beta.clone(),
        t,
        b,
        images,
        mismatches,
        distinct,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugateRelation {
    /// `a_0 .. a_n` with `Σ a_i g^i y g^-i + λ(g^b - 1) = 0`.
    pub coeffs: Vec<Scalar>,
    pub lambda: Scalar,
    pub b: i64,
}

impl ConjugateRelation {
    pub fn polynomial(&self) -> Result<UniPoly> {
        let rat: Vec<Rational> = self
            .coeffs
            .iter()
            .map(|c| {
                c.as_rational()
                    .cloned()
                    .ok_or_else(|| Error::Unsupported("relation coefficients outside Q".into()))
            })
            .collect::<Result<_>>()?;
        Ok(UniPoly::new(rat))
    }
}

/// The exponent `b` with `y` a `(1, g^b)`-primitive.
pub fn pair_exponent(h: &HopfPresentation, g: &Word, y: &NcPoly) -> Result<i64> {
    let not_pair = || Error::Precondition(format!("{} is not (1, g^b)-primitive", h.fmt(y)));
    let (u, v) = is_skew_primitive(h, y)?.ok_or_else(not_pair)?;
    if !u.is_one() {
        return Err(not_pair());
    }
    let a = h.alphabet();
    for k in 0..=64i64 {
        for b in [k, -k] {
            let gb = a
                .pow(g, b)
                .ok_or_else(|| Error::Precondition("g is not invertible".into()))?;
            let p = h.algebra().normalize_word(&gb)?;
            if p == NcPoly::word(v.clone()) {
                return Ok(b);
            }
        }
    }
    Err(not_pair())
}

fn conjugate(h: &HopfPresentation, g: &Word, i: i64, y: &NcPoly) -> Result<NcPoly> {
    let a = h.alphabet();
    let gi = NcPoly::word(a.pow(g, i).expect("invertible"));
    let gmi = NcPoly::word(a.pow(g, -i).expect("invertible"));
    h.nf(&gi.free_mul(y, a)?.free_mul(&gmi, a)?)
}

/// Scales to integer coefficients with gcd 1 and `a_0 > 0` when every
/// coefficient is rational.
fn normalize_relation(coeffs: &mut [Scalar], lambda: &mut Scalar) {
    use num_integer::Integer;
    use num_traits::{Signed, Zero};
    let all: Vec<Rational> = match coeffs
        .iter()
        .chain(std::iter::once(&*lambda))
        .map(|c| c.as_rational().cloned())
        .collect::<Option<Vec<_>>>()
    {
        Some(v) => v,
        None => return,
    };
    let l = crate::scalars::lcm_of_denominators(&all);
    let ints: Vec<num_bigint::BigInt> = all
        .iter()
        .map(|c| (c * Rational::from_integer(l.clone())).to_integer())
        .collect();
    let g = ints
        .iter()
        .fold(num_bigint::BigInt::zero(), |acc, c| acc.gcd(c));
    let sign = if ints[0].is_negative() { -1 } else { 1 };
    let scale = Rational::new(l * sign, g);
    for c in coeffs.iter_mut() {
        *c = c.try_mul(&Scalar::Rat(scale.clone())).expect("rational");
    }
    *lambda = lambda.try_mul(&Scalar::Rat(scale)).expect("rational");
}

/// First linear dependence among `g^i y g^-i` (i = 0..=cap) modulo
/// `k(g^b - 1)`.
pub fn find_conjugate_relation(
    h: &HopfPresentation,
    g: &Word,
    y: &NcPoly,
    cap: usize,
) -> Result<Option<ConjugateRelation>> {
    if !h.is_group_like_word(g) || g.is_one() {
        return Err(Error::Precondition(format!(
            "{} is not a nontrivial group-like word",
            h.fmt_word(g)
        )));
    }
    let y = h.nf(y)?;
    let b = pair_exponent(h, g, &y)?;
    let mut ech: Echelon<Word> = Echelon::new();
    if b != 0 {
        let gb = h
            .algebra()
            .normalize_word(&h.alphabet().pow(g, b).unwrap())?;
        let v = gb.sub(&NcPoly::one())?;
        ech.insert_tracked(v.into_terms(), 0)?;
    }
    for i in 0..=cap {
        let c = conjugate(h, g, i as i64, &y)?;
        if let Insertion::Dependent(combo) = ech.insert_tracked(c.into_terms(), i + 1)? {
            let get = |k: usize| combo.get(&k).cloned().unwrap_or_else(Scalar::zero);
            let mut coeffs: Vec<Scalar> = (0..=i).map(|j| get(j + 1)).collect();
            if coeffs[0].is_zero() {
                continue;
            }
            let mut lambda = get(0);
            normalize_relation(&mut coeffs, &mut lambda);
            return Ok(Some(ConjugateRelation { coeffs, lambda, b }));
        }
    }
    Ok(None)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubalgebraData {
    pub f: NcPoly,
    pub xi: Scalar,
    pub beta: Scalar,
    pub b: i64,
    pub relation: ConjugateRelation,
}

impl SubalgebraData {
    pub fn describe(&self, h: &HopfPresentation) -> String {
        format!(
            "f = {}, xi = {}, beta = {}",
            h.fmt(&self.f),
            self.xi,
            self.beta
        )
    }

    pub fn to_json(&self, h: &HopfPresentation) -> Value {
        json!({
            "f": h.fmt(&self.f),
            "xi": self.xi.to_string(),
            "beta": self.beta.to_string(),
            "b": self.b,
            "relation": {
                "coeffs": self.relation.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                "lambda": self.relation.lambda.to_string(),
            },
        })
    }
}

/// Checks `gf - ξfg = β g(g^b - 1)` exactly.
pub fn verify_subalgebra_identity(
    h: &HopfPresentation,
    g: &Word,
    d: &SubalgebraData,
) -> Result<bool> {
    let a = h.alphabet();
    let gp = NcPoly::word(g.clone());
    let gb = NcPoly::word(a.pow(g, d.b).unwrap());
    let lhs = h.mul(&gp, &d.f)?.sub(&h.mul(&d.f, &gp)?.scale(&d.xi)?)?;
    let rhs = h.mul(&gp, &gb.sub(&NcPoly::one())?)?.scale(&d.beta)?;
    Ok(lhs == rhs)
}

/// Builds `f = Σ b_i g^i y g^-i` from a root ξ of the monic relation
/// polynomial, with `gf = ξfg + βg(g^b - 1)`.
pub fn find_subalgebra_data(
    h: &HopfPresentation,
    g: &Word,
    y: &NcPoly,
    cap: usize,
) -> Result<SubalgebraData> {
    let rel = find_conjugate_relation(h, g, y, cap)?.ok_or(Error::NoRelation(cap))?;
    let poly = rel.polynomial()?.monic();
    let a = h.alphabet();
    let gp = NcPoly::word(g.clone());
    let gb_minus_1 = h
        .algebra()
        .normalize_word(&a.pow(g, rel.b).unwrap())?
        .sub(&NcPoly::one())?;
    let g_gb = h.mul(&gp, &gb_minus_1)?;
    let roots = if poly.degree() == Some(0) {
        Vec::new()
    } else {
        find_roots(&poly)?
    };
    for xi in roots {
        let q = deflate(&poly, &xi)?;
        let mut f = NcPoly::zero();
        for (i, bi) in q.iter().enumerate() {
            f.add_scaled(&conjugate(h, g, i as i64, y)?, bi)?;
        }
        if in_line(&f, &gb_minus_1)? {
            continue;
        }
        let lhs = h.mul(&gp, &f)?.sub(&h.mul(&f, &gp)?.scale(&xi)?)?;
        let beta = match g_gb.leading() {
            None => Scalar::zero(),
            Some((w, c)) => lhs.coeff(w).try_div(c)?,
        };
        let data = SubalgebraData {
            f,
            xi,
            beta,
            b: rel.b,
            relation: rel.clone(),
        };
        if !verify_subalgebra_identity(h, g, &data)? {
            return Err(Error::Falsification(format!(
                "gf - ξfg is not a multiple of g(g^b - 1) for {}",
                data.describe(h)
            )));
        }
        let mut expect = TensorPoly::outer(&data.f, &NcPoly::one())?;
        expect.add_scaled(
            &TensorPoly::outer(&NcPoly::word(a.pow(g, rel.b).unwrap()), &data.f)?,
            &Scalar::one(),
        )?;
        let expect_nf = normalize_tensor(h, &expect)?;
        if h.coproduct(&data.f)? != expect_nf || is_skew_primitive(h, &data.f)?.is_none() {
            return Err(Error::Falsification(format!(
                "{} is not (1, g^b)-primitive",
                h.fmt(&data.f)
            )));
        }
        return Ok(data);
    }
    Err(Error::DegenerateF)
}

fn normalize_tensor(h: &HopfPresentation, t: &TensorPoly<2>) -> Result<TensorPoly<2>> {
    let mut out = TensorPoly::zero();
    for ([a, b], c) in t.iter() {
        let pa = h.algebra().normalize_word(a)?;
        let pb = h.algebra().normalize_word(b)?;
        out.add_scaled(&TensorPoly::outer(&pa, &pb)?, c)?;
    }
    Ok(out)
}

/// True if `f` is a scalar multiple of `d` (including zero).
fn in_line(f: &NcPoly, d: &NcPoly) -> Result<bool> {
    let Some((w, c)) = d.leading() else {
        return Ok(f.is_zero());
    };
    let s = f.coeff(w).try_div(c)?;
    Ok(f.sub(&d.scale(&s)?)?.is_zero())
}
