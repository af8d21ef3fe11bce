//! Concrete Cartan data: the `z'_n` / `z~_n` element sequences, weight
//! orbits, block discovery, and Verma composition series.
//!
//! Two presentation families are supported, both over exact rationals:
//! polynomial-shift data `H = Q[h]`, `theta(h) = r*h + gamma`, and
//! Laurent-scaling data `H = Q[K, K^-1]`, `theta(K) = q*K`.

use num::{One, Signed, Zero};
use thiserror::Error;

use crate::poly::{lagrange_interpolate, positive_integer_roots, LPoly, QPoly, Rat};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CartanError {
    #[error("|n| = {n} exceeds the configured bound {bound}; increase the bound")]
    BoundExceeded { n: i64, bound: usize },
    #[error("Laurent weights must be nonzero")]
    LaurentWeightZero,
    #[error("weight is not theta-free: the orbit {{lambda o theta^n}} has repetitions")]
    NotFreeWeight,
    #[error("z1 is not a unit on the block: it vanishes at weight {0}")]
    NotUnitOnBlock(Rat),
    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),
}

/// A weight of `H`, encoded by the single evaluation value `lambda(h)`
/// (polynomial-shift) or `lambda(K)` (Laurent; must be nonzero).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Weight(pub Rat);

/// An element of the Cartan algebra `H`, in either presentation family.
#[derive(Clone, PartialEq, Debug)]
pub enum HElem {
    Poly(QPoly),
    Laurent(LPoly),
}

impl HElem {
    pub fn is_zero(&self) -> bool {
        match self {
            HElem::Poly(p) => p.is_zero(),
            HElem::Laurent(p) => p.is_zero(),
        }
    }
}

/// Cartan presentation `(H, theta, z0, z1)`.
#[derive(Clone, PartialEq, Debug)]
pub enum Presentation {
    PolyShift { r: Rat, gamma: Rat, z0: QPoly, z1: QPoly },
    Laurent { q: Rat, z0: LPoly, z1: LPoly },
}

impl Presentation {
    pub fn poly_shift(r: Rat, gamma: Rat, z0: QPoly, z1: QPoly) -> Result<Self, CartanError> {
        if r.is_zero() {
            return Err(CartanError::InvalidPresentation("r must be nonzero".into()));
        }
        if z1.is_zero() {
            return Err(CartanError::InvalidPresentation("z1 must be nonzero".into()));
        }
        Ok(Presentation::PolyShift { r, gamma, z0, z1 })
    }

    pub fn laurent(q: Rat, z0: LPoly, z1: LPoly) -> Result<Self, CartanError> {
        if q.is_zero() {
            return Err(CartanError::InvalidPresentation("q must be nonzero".into()));
        }
        if z1.is_zero() {
            return Err(CartanError::InvalidPresentation("z1 must be nonzero".into()));
        }
        Ok(Presentation::Laurent { q, z0, z1 })
    }

    /// The sl2-style preset: `theta(h) = h - 2`, `z0 = h`, `z1 = 1`.
    pub fn preset_sl2() -> Self {
        Presentation::PolyShift {
            r: Rat::one(),
            gamma: -crate::poly::rat_int(2),
            z0: QPoly::var(),
            z1: QPoly::one(),
        }
    }

    /// The quantum preset: `theta(K) = 2K`, `z0 = K - 1`, `z1 = 1`.
    pub fn preset_quantum() -> Self {
        Presentation::Laurent {
            q: crate::poly::rat_int(2),
            z0: LPoly::from_i64(0, &[-1, 1]),
            z1: LPoly::one(),
        }
    }

    pub fn z0(&self) -> HElem {
        match self {
            Presentation::PolyShift { z0, .. } => HElem::Poly(z0.clone()),
            Presentation::Laurent { z0, .. } => HElem::Laurent(z0.clone()),
        }
    }

    pub fn z1(&self) -> HElem {
        match self {
            Presentation::PolyShift { z1, .. } => HElem::Poly(z1.clone()),
            Presentation::Laurent { z1, .. } => HElem::Laurent(z1.clone()),
        }
    }

    pub fn one(&self) -> HElem {
        match self {
            Presentation::PolyShift { .. } => HElem::Poly(QPoly::one()),
            Presentation::Laurent { .. } => HElem::Laurent(LPoly::one()),
        }
    }

    pub fn zero_elem(&self) -> HElem {
        match self {
            Presentation::PolyShift { .. } => HElem::Poly(QPoly::zero()),
            Presentation::Laurent { .. } => HElem::Laurent(LPoly::zero()),
        }
    }

    /// Applies `theta^pow` to an element of `H`.
    pub fn theta(&self, x: &HElem, pow: i64) -> HElem {
        match (self, x) {
            (Presentation::PolyShift { r, gamma, .. }, HElem::Poly(p)) => {
                if pow == 0 {
                    return x.clone();
                }
                // theta^pow(h) = r^pow * h + gamma * (r^(pow-1) + ... + 1),
                // with negative powers through the exact inverse.
                let (a, b) = affine_power(r, gamma, pow);
                HElem::Poly(p.compose_affine(&a, &b))
            }
            (Presentation::Laurent { q, .. }, HElem::Laurent(p)) => {
                HElem::Laurent(p.scale_var(q, pow))
            }
            _ => panic!("presentation/element family mismatch"),
        }
    }

    pub fn mul(&self, x: &HElem, y: &HElem) -> HElem {
        match (x, y) {
            (HElem::Poly(a), HElem::Poly(b)) => HElem::Poly(a.mul(b)),
            (HElem::Laurent(a), HElem::Laurent(b)) => HElem::Laurent(a.mul(b)),
            _ => panic!("element family mismatch"),
        }
    }

    pub fn add(&self, x: &HElem, y: &HElem) -> HElem {
        match (x, y) {
            (HElem::Poly(a), HElem::Poly(b)) => HElem::Poly(a.add(b)),
            (HElem::Laurent(a), HElem::Laurent(b)) => HElem::Laurent(a.add(b)),
            _ => panic!("element family mismatch"),
        }
    }

    /// Evaluates an element at a weight.
    pub fn eval(&self, x: &HElem, lam: &Weight) -> Result<Rat, CartanError> {
        match x {
            HElem::Poly(p) => Ok(p.eval(&lam.0)),
            HElem::Laurent(p) => {
                if lam.0.is_zero() {
                    return Err(CartanError::LaurentWeightZero);
                }
                Ok(p.eval(&lam.0))
            }
        }
    }

    /// The evaluation value of `lambda o theta^n` for `lambda` given by `c`.
    pub fn orbit_value(&self, c: &Rat, n: i64) -> Rat {
        match self {
            Presentation::PolyShift { r, gamma, .. } => {
                let (a, b) = affine_power(r, gamma, n);
                a * c + b
            }
            Presentation::Laurent { q, .. } => {
                let qp = rat_pow(q, n);
                qp * c
            }
        }
    }
}

/// `(a, b)` with `theta^pow(h) = a*h + b`.
fn affine_power(r: &Rat, gamma: &Rat, pow: i64) -> (Rat, Rat) {
    let mut a = Rat::one();
    let mut b = Rat::zero();
    if pow >= 0 {
        for _ in 0..pow {
            // theta(a*h + b) = a*(r*h + gamma) + b
            b = &a * gamma + b;
            a *= r;
        }
    } else {
        // theta^{-1}(h) = (h - gamma) / r
        let rinv = r.recip();
        for _ in 0..(-pow) {
            b = (&b - gamma) * &rinv;
            a *= &rinv;
        }
    }
    (a, b)
}

fn rat_pow(q: &Rat, n: i64) -> Rat {
    if n >= 0 {
        num::pow::pow(q.clone(), n as usize)
    } else {
        num::pow::pow(q.recip(), (-n) as usize)
    }
}

/// Cached symbolic `z'_n` and `z~_n` for `|n| <= bound`.
///
/// The sequences satisfy `z'_0 = 1`, `z~_0 = 0`,
/// `z'_{n+1} = z'_n * theta^n(z1)`,
/// `z~_{n+1} = z~_n * theta^(n-1)(z1) + theta^n(z0)`,
/// and `z~_{-n} = theta^{-n}(z~_n)`.
pub struct ZtildeTable {
    pres: Presentation,
    bound: usize,
    zprime: Vec<HElem>,
    ztilde_pos: Vec<HElem>,
    ztilde_neg: Vec<HElem>,
}

impl ZtildeTable {
    pub fn new(pres: &Presentation, bound: usize) -> Self {
        let mut zprime = vec![pres.one()];
        let mut ztilde_pos = vec![pres.zero_elem()];
        for n in 0..bound {
            let tz1_prev = pres.theta(&pres.z1(), n as i64 - 1);
            let tz1 = pres.theta(&pres.z1(), n as i64);
            let tz0 = pres.theta(&pres.z0(), n as i64);
            zprime.push(pres.mul(&zprime[n], &tz1));
            ztilde_pos.push(pres.add(&pres.mul(&ztilde_pos[n], &tz1_prev), &tz0));
        }
        let ztilde_neg = (0..=bound)
            .map(|n| pres.theta(&ztilde_pos[n], -(n as i64)))
            .collect();
        ZtildeTable { pres: pres.clone(), bound, zprime, ztilde_pos, ztilde_neg }
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn zprime(&self, n: usize) -> Result<&HElem, CartanError> {
        self.zprime
            .get(n)
            .ok_or(CartanError::BoundExceeded { n: n as i64, bound: self.bound })
    }

    pub fn ztilde(&self, n: i64) -> Result<&HElem, CartanError> {
        let idx = n.unsigned_abs() as usize;
        if idx > self.bound {
            return Err(CartanError::BoundExceeded { n, bound: self.bound });
        }
        Ok(if n >= 0 { &self.ztilde_pos[idx] } else { &self.ztilde_neg[idx] })
    }

    pub fn ztilde_eval(&self, lam: &Weight, n: i64) -> Result<Rat, CartanError> {
        self.pres.eval(self.ztilde(n)?, lam)
    }

    pub fn zprime_eval(&self, lam: &Weight, n: usize) -> Result<Rat, CartanError> {
        self.pres.eval(self.zprime(n)?, lam)
    }
}

/// `lambda(z~_n)`, computed by evaluating the cached polynomial at the weight.
pub fn ztilde_eval(pres: &Presentation, lam: &Weight, n: i64) -> Result<Rat, CartanError> {
    let table = ZtildeTable::new(pres, n.unsigned_abs() as usize);
    table.ztilde_eval(lam, n)
}

/// All `n` in `1..=bound` with `lambda(z~_n) = 0`, ascending.
pub fn singular_degrees(
    pres: &Presentation,
    lam: &Weight,
    bound: usize,
) -> Result<Vec<usize>, CartanError> {
    let table = ZtildeTable::new(pres, bound);
    let mut out = vec![];
    for n in 1..=bound {
        if table.ztilde_eval(lam, n as i64)?.is_zero() {
            out.push(n);
        }
    }
    Ok(out)
}

/// Whether `lambda o theta^n != lambda` for all `0 < |n| <= bound`.
///
/// Over the rationals the orbit structure is fully decidable, so the answer
/// is exact for every `n` (the generic families short-circuit).
pub fn is_free(pres: &Presentation, lam: &Weight, _bound: usize) -> bool {
    match pres {
        Presentation::PolyShift { r, gamma, .. } => {
            if r.is_one() {
                return !gamma.is_zero();
            }
            if *r == -Rat::one() {
                // theta^2 fixes every weight.
                return false;
            }
            // Rational r != +-1 is never a root of unity; the orbit repeats
            // only at the affine fixed point gamma / (1 - r).
            let fix = gamma / (Rat::one() - r);
            lam.0 != fix
        }
        Presentation::Laurent { q, .. } => {
            if lam.0.is_zero() {
                return false;
            }
            !q.is_one() && *q != -Rat::one()
        }
    }
}

/// One weight of a discovered block: `lambda o theta^exponent`.
#[derive(Clone, PartialEq, Debug)]
pub struct BlockWeight {
    pub exponent: i64,
    pub value: Rat,
}

/// A discovered block `[lambda]`, ascending in the block partial order.
#[derive(Clone, PartialEq, Debug)]
pub struct Block {
    pub entries: Vec<BlockWeight>,
    /// True when the scan certified that no block weight lies beyond the bound.
    pub complete: bool,
}

impl Block {
    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn values(&self) -> Vec<Rat> {
        self.entries.iter().map(|e| e.value.clone()).collect()
    }
}

/// Collects `lambda o theta^n` over all `|n| <= bound` with
/// `lambda(z~_n) = 0`, ordered ascending in the block partial order
/// (larger exponents come first).
pub fn discover_block(
    pres: &Presentation,
    lam: &Weight,
    bound: usize,
) -> Result<Block, CartanError> {
    if !is_free(pres, lam, bound) {
        return Err(CartanError::NotFreeWeight);
    }
    let table = ZtildeTable::new(pres, bound);
    let mut exponents = vec![];
    for n in -(bound as i64)..=(bound as i64) {
        if table.ztilde_eval(lam, n)?.is_zero() {
            exponents.push(n);
        }
    }
    // Ascending block order: lambda o theta^n < lambda o theta^m iff n > m.
    exponents.sort_unstable_by(|a, b| b.cmp(a));
    let entries: Vec<BlockWeight> = exponents
        .iter()
        .map(|&n| BlockWeight { exponent: n, value: pres.orbit_value(&lam.0, n) })
        .collect();
    // z1 must be a unit on the block.
    for e in &entries {
        let v = pres.eval(&pres.z1(), &Weight(e.value.clone()))?;
        if v.is_zero() {
            return Err(CartanError::NotUnitOnBlock(e.value.clone()));
        }
    }
    let complete = certify_complete(pres, lam, bound);
    Ok(Block { entries, complete })
}

/// Chain description of the unique composition series of the Verma module.
#[derive(Clone, PartialEq, Debug)]
pub struct VermaSeries {
    /// Singular degrees `n_1 < n_2 < ...` within the bound; the chain is
    /// `M(lambda) > M(lambda o theta^{n_1}) > ...`.
    pub degrees: Vec<usize>,
    /// Composition length within the bound (`degrees.len() + 1`).
    pub length: usize,
}

pub fn verma_series(
    pres: &Presentation,
    lam: &Weight,
    bound: usize,
) -> Result<VermaSeries, CartanError> {
    let degrees = singular_degrees(pres, lam, bound)?;
    let length = degrees.len() + 1;
    Ok(VermaSeries { degrees, length })
}

// --- completeness certification ----------------------------------------

/// Tries to certify that no `n` with `|n| > bound` satisfies
/// `lambda(z~_n) = 0`. Sound but deliberately narrow: a `false` answer
/// means "not certified", not "incomplete".
fn certify_complete(pres: &Presentation, lam: &Weight, bound: usize) -> bool {
    match pres {
        Presentation::PolyShift { r, z0, z1, gamma } => {
            if !r.is_one() || z1.constant_value() != Some(Rat::one()) {
                return false;
            }
            if z0.is_zero() {
                return false;
            }
            // With r = 1 and z1 = 1, lambda(z~_n) is a polynomial in n of
            // degree deg(z0) + 1; find its integer roots exactly.
            let c = &lam.0;
            poly_direction_complete(z0, c, gamma, bound, false)
                && poly_direction_complete(z0, c, gamma, bound, true)
        }
        Presentation::Laurent { q, z0, z1 } => {
            if z1.constant_value() != Some(Rat::one()) || z0.is_zero() {
                return false;
            }
            if !q.is_positive() || q.is_one() {
                return false;
            }
            let grow_first = q > &Rat::one();
            let (pos_dir, neg_dir) = if grow_first {
                (Direction::Grow, Direction::Shrink)
            } else {
                (Direction::Shrink, Direction::Grow)
            };
            laurent_direction_complete(q, z0, &lam.0, bound, 1, pos_dir)
                && laurent_direction_complete(q, z0, &lam.0, bound, -1, neg_dir)
        }
    }
}

/// Polynomial-shift side: `S(n) = sum z0(c + i*gamma)` is a polynomial in n;
/// all of its positive integer roots are found exactly.
fn poly_direction_complete(z0: &QPoly, c: &Rat, gamma: &Rat, bound: usize, negative: bool) -> bool {
    let deg = z0.degree().unwrap_or(0) + 2;
    // S+(n) = sum_{i=0}^{n-1} z0(c + i*gamma); S-(n) = sum_{j=1}^{n} z0(c - j*gamma).
    let mut points = vec![];
    let mut acc = Rat::zero();
    for n in 0..=deg as i64 {
        points.push((Rat::from_integer(n.into()), acc.clone()));
        let arg = if negative {
            c - gamma * Rat::from_integer((n + 1).into())
        } else {
            c + gamma * Rat::from_integer(n.into())
        };
        acc += z0.eval(&arg);
    }
    let s = lagrange_interpolate(&points);
    if s.is_zero() {
        return false;
    }
    match positive_integer_roots(&s) {
        Some(roots) => roots.into_iter().all(|r| r <= bound as i64),
        None => false,
    }
}

#[derive(Clone, Copy, PartialEq)]
enum Direction {
    Grow,
    Shrink,
}

/// Laurent side: beyond an exactly computed index, the increments
/// `z0(q^k c)` keep a constant sign, so the partial sums are strictly
/// monotone; scan until the running value agrees in sign with the
/// increments, after which no further zero can occur.
fn laurent_direction_complete(
    q: &Rat,
    z0: &LPoly,
    c: &Rat,
    bound: usize,
    step: i64,
    dir: Direction,
) -> bool {
    let e_lo = z0.low_degree().unwrap();
    let e_hi = z0.high_degree().unwrap();
    match dir {
        Direction::Grow if e_hi < 0 => return false,
        Direction::Shrink if e_lo > 0 => return false,
        _ => {}
    }
    // Sign of z0(t) is pinned once |t| clears the root bounds of the
    // associated ordinary polynomial g with z0(K) = K^e_lo * g(K).
    let g: Vec<Rat> = (e_lo..=e_hi).map(|e| z0.coeff(e)).collect();
    let g_lead = g.last().unwrap().clone();
    let g_const = g.first().unwrap().clone();
    debug_assert!(!g_const.is_zero() && !g_lead.is_zero());
    let max_ratio = |d: &Rat| -> Rat {
        g.iter()
            .map(|gi| (gi / d).abs())
            .fold(Rat::zero(), |a, b| if b > a { b } else { a })
    };
    let cauchy_hi = Rat::one() + max_ratio(&g_lead);
    let cauchy_lo = (Rat::one() + max_ratio(&g_const)).recip();
    let beyond = |t: &Rat| -> bool {
        match dir {
            Direction::Grow => t.abs() > cauchy_hi,
            Direction::Shrink => t.abs() < cauchy_lo,
        }
    };
    // Running value of lambda(z~_{step*n}) and the increment argument.
    // Positive side: v_{n+1} = v_n + z0(q^n c).
    // Negative side: v_{n+1} = v_n + z0(q^{-(n+1)} c).
    let cap = 4 * bound + 1024;
    let mut v = Rat::zero();
    for n in 0..=cap as i64 {
        let k = if step > 0 { n } else { -(n + 1) };
        let t = rat_pow(q, k) * c;
        let inc = z0.eval(&t);
        if n as usize > bound && v.is_zero() {
            // A block weight beyond the scan bound: not complete.
            return false;
        }
        // Once the argument clears the root bound the increment sign is
        // pinned; as soon as the running value agrees with it, no later
        // partial sum can vanish.
        if beyond(&t)
            && !v.is_zero()
            && !inc.is_zero()
            && v.is_positive() == inc.is_positive()
        {
            return true;
        }
        v += inc;
    }
    false
}

// --- configuration parsing ----------------------------------------------

/// Presentation description parsed from line-oriented `key = value` text.
#[derive(Clone, Debug, PartialEq)]
pub struct CartanConfig {
    pub presentation: Presentation,
    pub weight: Weight,
    pub bound: usize,
}

pub const DEFAULT_BOUND: usize = 64;

impl CartanConfig {
    /// Parses keys: `kind` (polyshift|laurent), `r`, `gamma` or `q`,
    /// `z0`, `z1` (comma-separated rational coefficients, ascending powers,
    /// with an optional `low:` prefix for Laurent data), `weight`, `bound`.
    /// Blank lines and `#` comments are ignored.
    pub fn parse(text: &str) -> Result<Self, CartanError> {
        let mut kv = std::collections::BTreeMap::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let Some((k, v)) = line.split_once('=') else {
                return Err(CartanError::InvalidPresentation(format!(
                    "line {}: expected key=value",
                    lineno + 1
                )));
            };
            kv.insert(k.trim().to_string(), v.trim().to_string());
        }
        let get = |k: &str| -> Result<&String, CartanError> {
            kv.get(k)
                .ok_or_else(|| CartanError::InvalidPresentation(format!("missing key {k}")))
        };
        let kind = get("kind")?.to_lowercase();
        let weight = Weight(parse_rat(get("weight")?)?);
        let bound = match kv.get("bound") {
            Some(b) => b
                .parse::<usize>()
                .map_err(|_| CartanError::InvalidPresentation("bad bound".into()))?,
            None => DEFAULT_BOUND,
        };
        let presentation = match kind.as_str() {
            "polyshift" => {
                let r = parse_rat(get("r")?)?;
                let gamma = parse_rat(get("gamma")?)?;
                let z0 = QPoly::new(parse_rat_list(get("z0")?)?.1);
                let z1 = QPoly::new(parse_rat_list(get("z1")?)?.1);
                Presentation::poly_shift(r, gamma, z0, z1)?
            }
            "laurent" => {
                let q = parse_rat(get("q")?)?;
                let (lo0, c0) = parse_rat_list(get("z0")?)?;
                let (lo1, c1) = parse_rat_list(get("z1")?)?;
                Presentation::laurent(q, LPoly::new(lo0, c0), LPoly::new(lo1, c1))?
            }
            other => {
                return Err(CartanError::InvalidPresentation(format!("unknown kind {other}")))
            }
        };
        Ok(CartanConfig { presentation, weight, bound })
    }
}

pub fn parse_rat(s: &str) -> Result<Rat, CartanError> {
    s.trim()
        .parse::<Rat>()
        .map_err(|e| CartanError::InvalidPresentation(format!("bad rational '{s}': {e}")))
}

/// `[low:]c0,c1,...` -> (low, coefficients).
fn parse_rat_list(s: &str) -> Result<(i64, Vec<Rat>), CartanError> {
    let (low, rest) = match s.split_once(':') {
        Some((lo, rest)) => (
            lo.trim().parse::<i64>().map_err(|_| {
                CartanError::InvalidPresentation(format!("bad low exponent in '{s}'"))
            })?,
            rest,
        ),
        None => (0, s),
    };
    let coeffs = rest
        .split(',')
        .map(parse_rat)
        .collect::<Result<Vec<_>, _>>()?;
    Ok((low, coeffs))
}
