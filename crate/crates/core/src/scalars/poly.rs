use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{fmt_rational, int, lcm_of_denominators, squarefree_decompose, Rational, Scalar};
use crate::error::{Error, Result};

/// Univariate polynomial over Q in the variable `s`, coefficients in
/// ascending degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Scalar) -> Result<Scalar> {
        let mut acc = Scalar::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.try_mul(x)?.try_add(&Scalar::Rat(c.clone()))?;
        }
        Ok(acc)
    }

    pub fn monic(&self) -> UniPoly {
        match self.leading() {
            None => UniPoly::zero(),
            Some(lc) => UniPoly::new(self.coeffs.iter().map(|c| c / lc).collect()),
        }
    }

    pub fn derivative(&self) -> UniPoly {
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * int(i as i64))
                .collect(),
        )
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }

    /// Euclidean division. Panics on division by the zero polynomial.
    pub fn div_rem(&self, divisor: &UniPoly) -> (UniPoly, UniPoly) {
        let dd = divisor.degree().expect("division by zero polynomial");
        let lc = divisor.leading().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (UniPoly::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] / lc;
            if !c.is_zero() {
                for (j, dc) in divisor.coeffs.iter().enumerate() {
                    rem[k + j] -= &c * dc;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (UniPoly::new(quot), UniPoly::new(rem))
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn squarefree_part(&self) -> UniPoly {
        let g = self.gcd(&self.derivative());
        if g.degree().unwrap_or(0) == 0 {
            self.monic()
        } else {
            self.div_rem(&g).0.monic()
        }
    }

    /// Integer coefficients with content 1 and positive leading coefficient.
    fn primitive_integer(&self) -> Vec<BigInt> {
        let l = lcm_of_denominators(&self.coeffs);
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(l.clone())).to_integer())
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let sign = if ints.last().is_some_and(|c| c.is_negative()) {
            -BigInt::one()
        } else {
            BigInt::one()
        };
        ints.into_iter().map(|c| c / &g * &sign).collect()
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            match (first, neg) {
                (true, true) => f.write_str("-")?,
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
                (true, false) => {}
            }
            first = false;
            let mag = c.abs();
            let mono = match i {
                0 => String::new(),
                1 => "s".to_string(),
                _ => format!("s^{i}"),
            };
            if mono.is_empty() {
                f.write_str(&fmt_rational(&mag))?;
            } else if mag.is_one() {
                f.write_str(&mono)?;
            } else {
                write!(f, "{}*{}", fmt_rational(&mag), mono)?;
            }
        }
        Ok(())
    }
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = BigInt::one();
    while &i * &i <= n {
        if (&n % &i).is_zero() {
            let j = &n / &i;
            if j != i {
                large.push(j);
            }
            small.push(i.clone());
        }
        i += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Deterministic root preference: smaller height first, positive before
/// negative.
pub fn root_order_key(r: &Scalar) -> (u8, BigInt, bool) {
    let quadratic = u8::from(r.field().is_some());
    let negative = match r {
        Scalar::Rat(q) => q.is_negative(),
        Scalar::Quad { b, .. } => b.is_negative(),
    };
    (quadratic, r.height(), negative)
}

/// Distinct roots of `p` in Q, plus the two roots of a leftover quadratic
/// factor in Q(sqrt(d)).
///
/// Rational roots come from the rational-root test on the squarefree
/// part. When the leftover has degree >= 3 and nothing was found at all,
/// the leftover is returned inside `ResidualDegreeTooHigh`.
pub fn find_roots(p: &UniPoly) -> Result<Vec<Scalar>> {
    match p.degree() {
        None | Some(0) => {
            return Err(Error::InvalidParameter(format!(
                "find_roots needs a polynomial of degree >= 1, got {p}"
            )))
        }
        _ => {}
    }
    let mut residual = p.squarefree_part();
    let mut roots: Vec<Scalar> = Vec::new();

    if residual.coeffs[0].is_zero() {
        roots.push(Scalar::zero());
        residual = residual.div_rem(&UniPoly::from_ints(&[0, 1])).0;
    }

    if residual.degree().unwrap_or(0) >= 1 {
        let ints = residual.primitive_integer();
        let lead = ints.last().unwrap().clone();
        let constant = ints[0].clone();
        let mut candidates: BTreeSet<Rational> = BTreeSet::new();
        for num in divisors(&constant) {
            for den in divisors(&lead) {
                let r = Rational::new(num.clone(), den.clone());
                candidates.insert(r.clone());
                candidates.insert(-r);
            }
        }
        let mut candidates: Vec<Rational> = candidates.into_iter().collect();
        candidates.sort_by_key(|r| root_order_key(&Scalar::Rat(r.clone())));
        for r in candidates {
            if residual.degree().unwrap_or(0) == 0 {
                break;
            }
            if residual.eval(&Scalar::Rat(r.clone()))?.is_zero() {
                let lin = UniPoly::new(vec![-r.clone(), Rational::one()]);
                residual = residual.div_rem(&lin).0;
                roots.push(Scalar::Rat(r));
            }
        }
    }

    match residual.degree().unwrap_or(0) {
        0 => {}
        1 => {
            let c = &residual.coeffs;
            roots.push(Scalar::Rat(-(&c[0] / &c[1])));
        }
        2 => {
            let c = &residual.coeffs;
            let (a, b, cc) = (&c[2], &c[1], &c[0]);
            let disc = b * b - int(4) * a * cc;
            // sqrt(P/Q) = sqrt(P*Q)/Q
            let pq = disc.numer() * disc.denom();
            let (square, d) = squarefree_decompose(&pq);
            let d = i64::try_from(d)
                .map_err(|_| Error::Unsupported("discriminant too large for Q(sqrt(d))".into()))?;
            let root_part = Rational::new(square, disc.denom().clone());
            let two_a = int(2) * a;
            let re = -(b / &two_a);
            let im = root_part / &two_a;
            roots.push(Scalar::quad(d, re.clone(), im.clone())?);
            roots.push(Scalar::quad(d, re, -im)?);
        }
        _ => {
            if roots.is_empty() {
                return Err(Error::ResidualDegreeTooHigh(residual));
            }
        }
    }
    roots.sort_by_key(root_order_key);
    Ok(roots)
}

/// Exact quotient `q` with `p = (s - r) * q`, coefficients ascending.
pub fn deflate(p: &UniPoly, r: &Scalar) -> Result<Vec<Scalar>> {
    let n = p.degree().ok_or_else(|| Error::NotARoot(r.to_string()))?;
    if n == 0 {
        return Err(Error::NotARoot(r.to_string()));
    }
    let a: Vec<Scalar> = p.coeffs.iter().cloned().map(Scalar::Rat).collect();
    let mut q = vec![Scalar::zero(); n];
    q[n - 1] = a[n].clone();
    for k in (1..n).rev() {
        q[k - 1] = a[k].try_add(&r.try_mul(&q[k])?)?;
    }
    let rem = a[0].try_add(&r.try_mul(&q[0])?)?;
    if !rem.is_zero() {
        return Err(Error::NotARoot(r.to_string()));
    }
    Ok(q)
}
