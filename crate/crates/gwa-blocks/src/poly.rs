//! Exact polynomial arithmetic: dense rationals in one variable, Laurent
//! variants, and integer polynomials for Hilbert series.

use std::fmt;

use num::{BigInt, BigRational, One, Signed, Zero};

pub type Rat = BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from(BigInt::from(n))
}

/// Dense polynomial over the rationals, coefficients in ascending powers.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QPoly {
    coeffs: Vec<Rat>,
}

impl QPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn zero() -> Self {
        QPoly { coeffs: vec![] }
    }

    pub fn constant(c: Rat) -> Self {
        Self::new(vec![c])
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    /// The variable `h` itself.
    pub fn var() -> Self {
        Self::new(vec![Rat::zero(), Rat::one()])
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn constant_value(&self) -> Option<Rat> {
        match self.coeffs.len() {
            0 => Some(Rat::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|i| self.coeff(i) + other.coeff(i)).collect();
        Self::new(coeffs)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self::new(coeffs)
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Substitutes `h -> a*h + b`.
    pub fn compose_affine(&self, a: &Rat, b: &Rat) -> Self {
        let mut acc = Self::zero();
        let lin = Self::new(vec![b.clone(), a.clone()]);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&lin).add(&Self::constant(c.clone()));
        }
        acc
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*h")?,
                _ => write!(f, "{c}*h^{i}")?,
            }
            first = false;
        }
        Ok(())
    }
}

/// Laurent polynomial over the rationals: coefficients for `K^low ..= K^hi`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LPoly {
    low: i64,
    coeffs: Vec<Rat>,
}

impl LPoly {
    pub fn new(mut low: i64, mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        let lead_zeros = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros > 0 {
            coeffs.drain(..lead_zeros);
            low += lead_zeros as i64;
        }
        if coeffs.is_empty() {
            low = 0;
        }
        LPoly { low, coeffs }
    }

    pub fn zero() -> Self {
        LPoly { low: 0, coeffs: vec![] }
    }

    pub fn constant(c: Rat) -> Self {
        Self::new(0, vec![c])
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn from_i64(low: i64, coeffs: &[i64]) -> Self {
        Self::new(low, coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.is_zero() || (self.low == 0 && self.coeffs.len() == 1)
    }

    pub fn constant_value(&self) -> Option<Rat> {
        if self.is_zero() {
            Some(Rat::zero())
        } else if self.is_constant() {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    pub fn low_degree(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.low)
        }
    }

    pub fn high_degree(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.low + self.coeffs.len() as i64 - 1)
        }
    }

    pub fn coeff(&self, exp: i64) -> Rat {
        if exp < self.low {
            return Rat::zero();
        }
        self.coeffs
            .get((exp - self.low) as usize)
            .cloned()
            .unwrap_or_else(Rat::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rat)> {
        self.coeffs
            .iter()
            .enumerate()
            .map(move |(i, c)| (self.low + i as i64, c))
            .filter(|(_, c)| !c.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let low = self.low.min(other.low);
        let hi = self.high_degree().unwrap().max(other.high_degree().unwrap());
        let coeffs = (low..=hi).map(|e| self.coeff(e) + other.coeff(e)).collect();
        Self::new(low, coeffs)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let low = self.low + other.low;
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self::new(low, coeffs)
    }

    /// Evaluates at `K = x`; requires `x != 0` whenever negative powers occur.
    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        let xinv = if self.low < 0 { Some(x.recip()) } else { None };
        for (e, c) in self.terms() {
            acc += c * &pow_rat(x, e, xinv.as_ref());
        }
        acc
    }

    /// Substitutes `K -> q*K` (the Laurent automorphism), repeated `pow` times.
    pub fn scale_var(&self, q: &Rat, pow: i64) -> Self {
        if self.is_zero() || pow == 0 {
            return self.clone();
        }
        let qp = if pow >= 0 {
            num::pow::pow(q.clone(), pow as usize)
        } else {
            num::pow::pow(q.recip(), (-pow) as usize)
        };
        let qinv = qp.recip();
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| {
                let e = self.low + i as i64;
                c * pow_rat(&qp, e, Some(&qinv))
            })
            .collect();
        Self::new(self.low, coeffs)
    }
}

fn pow_rat(x: &Rat, e: i64, xinv: Option<&Rat>) -> Rat {
    if e >= 0 {
        num::pow::pow(x.clone(), e as usize)
    } else {
        num::pow::pow(xinv.expect("negative power needs inverse").clone(), (-e) as usize)
    }
}

impl fmt::Display for LPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            match e {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*K")?,
                _ => write!(f, "{c}*K^{e}")?,
            }
            first = false;
        }
        Ok(())
    }
}

/// Integer-coefficient polynomial in the formal variable `t`, used for
/// Hilbert series entries. Coefficients ascend.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntPoly {
    coeffs: Vec<i64>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        IntPoly { coeffs: vec![1] }
    }

    pub fn monomial(exp: usize, c: i64) -> Self {
        let mut coeffs = vec![0; exp + 1];
        coeffs[exp] = c;
        Self::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> i64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..len).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..len).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![0i64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self::new(coeffs)
    }

    /// Substitutes `t -> -t`.
    pub fn negate_var(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { *c })
                .collect(),
        )
    }

    /// Exact division; panics if the division leaves a remainder.
    pub fn exact_div(&self, divisor: &Self) -> Self {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Self::zero();
        }
        let mut rem = self.coeffs.clone();
        let dl = divisor.coeffs.len();
        let lead = *divisor.coeffs.last().unwrap();
        assert!(rem.len() >= dl, "exact_div: degree underflow");
        let mut quot = vec![0i64; rem.len() - dl + 1];
        for qi in (0..quot.len()).rev() {
            let c = rem[qi + dl - 1];
            assert_eq!(c % lead, 0, "exact_div: non-exact leading step");
            let q = c / lead;
            quot[qi] = q;
            for (di, dc) in divisor.coeffs.iter().enumerate() {
                rem[qi + di] -= q * dc;
            }
        }
        assert!(rem.iter().all(|&c| c == 0), "exact_div: nonzero remainder");
        Self::new(quot)
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|&c| c >= 0)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            match (i, c) {
                (0, _) => write!(f, "{c}")?,
                (1, 1) => write!(f, "t")?,
                (1, _) => write!(f, "{c}t")?,
                (_, 1) => write!(f, "t^{i}")?,
                _ => write!(f, "{c}t^{i}")?,
            }
            first = false;
        }
        Ok(())
    }
}

/// Interpolates the unique rational polynomial of degree `< points.len()`
/// through the given `(x, y)` pairs.
pub fn lagrange_interpolate(points: &[(Rat, Rat)]) -> QPoly {
    let mut result = QPoly::zero();
    for (i, (xi, yi)) in points.iter().enumerate() {
        let mut basis = QPoly::one();
        let mut denom = Rat::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            basis = basis.mul(&QPoly::new(vec![-xj.clone(), Rat::one()]));
            denom *= xi - xj;
        }
        let scale = yi / denom;
        basis = basis.mul(&QPoly::constant(scale));
        result = result.add(&basis);
    }
    result
}

/// All positive integer roots of a nonzero rational polynomial, ascending.
///
/// Returns `None` when the factorization-free search cannot be carried out
/// exactly (constant term too large to factor by trial division).
pub fn positive_integer_roots(p: &QPoly) -> Option<Vec<i64>> {
    assert!(!p.is_zero(), "positive_integer_roots: zero polynomial");
    // Clear denominators, then strip the power of n dividing the polynomial.
    let mut denom_lcm = BigInt::one();
    for c in p.coeffs() {
        denom_lcm = num::integer::lcm(denom_lcm, c.denom().clone());
    }
    let ints: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| c.numer() * (&denom_lcm / c.denom()))
        .collect();
    let shift = ints.iter().take_while(|c| c.is_zero()).count();
    let t: u64 = num::ToPrimitive::to_u64(&ints[shift].abs())?;
    let mut candidates = vec![];
    let mut d = 1u64;
    while d.saturating_mul(d) <= t {
        if t.is_multiple_of(d) {
            candidates.push(d);
            candidates.push(t / d);
        }
        d += 1;
    }
    candidates.sort_unstable();
    candidates.dedup();
    let mut roots = vec![];
    for c in candidates {
        if c > i64::MAX as u64 {
            continue;
        }
        let x = rat_int(c as i64);
        if p.eval(&x).is_zero() {
            roots.push(c as i64);
        }
    }
    Some(roots)
}
