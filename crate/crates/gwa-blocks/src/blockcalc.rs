//! Closed-formula calculators for a block with `n` simple objects: composition
//! multiplicities, Hom/Ext dimensions, Hilbert matrices and the Koszul
//! criterion, BGG reciprocity, and the strong Kazhdan-Lusztig parity check.
//!
//! Index conventions: simples `L_1 < ... < L_n` ascend with the block order,
//! `M_i` is the Verma with top `L_i`, `P_i` its projective cover, and
//! `P_{n+1} = 0 = L_0`. `VermaQuot(r, s)` is `M_r / M_s` (`s = 0` means
//! `M_r`), `ProjQuot(j, k)` is `P_j / P_k` (`k = n+1` means `P_j`), and the
//! tilting `T_k = P_1 / P_{k+1}`.

use std::fmt;

use thiserror::Error;

use crate::poly::IntPoly;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum BlockError {
    #[error("index out of range for block size {n}: {what}")]
    IndexOutOfRange { n: usize, what: String },
}

/// Symbolic name for a standard block object.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub enum ObjectRef {
    /// `L_i`.
    Simple(usize),
    /// `M_r / M_s`, `0 <= s < r <= n`; `s = 0` means `M_r`.
    VermaQuot { r: usize, s: usize },
    /// `P_j / P_k`, `1 <= j < k <= n+1`; `k = n+1` means `P_j`.
    ProjQuot { j: usize, k: usize },
    /// `T_k = P_1 / P_{k+1}`, `1 <= k <= n`.
    Tilting(usize),
    /// `F(inner)` under the restricted duality functor.
    Dual(Box<ObjectRef>),
}

impl ObjectRef {
    pub fn dual(inner: ObjectRef) -> Self {
        ObjectRef::Dual(Box::new(inner))
    }

    /// Validates index ranges and rewrites to a canonical form:
    /// `Tilting(k) -> ProjQuot(1, k+1)`, `Dual(Dual(X)) -> X`,
    /// `Dual(Simple(i)) -> Simple(i)`.
    pub fn normalize(&self, n: usize) -> Result<ObjectRef, BlockError> {
        let err = |what: String| Err(BlockError::IndexOutOfRange { n, what });
        match self {
            ObjectRef::Simple(i) => {
                if *i < 1 || *i > n {
                    return err(format!("L_{i}"));
                }
                Ok(self.clone())
            }
            ObjectRef::VermaQuot { r, s } => {
                if !(*s < *r && *r <= n) {
                    return err(format!("M_{r}/M_{s}"));
                }
                Ok(self.clone())
            }
            ObjectRef::ProjQuot { j, k } => {
                if !(1 <= *j && j < k && *k <= n + 1) {
                    return err(format!("P_{j}/P_{k}"));
                }
                Ok(self.clone())
            }
            ObjectRef::Tilting(k) => {
                if *k < 1 || *k > n {
                    return err(format!("T_{k}"));
                }
                Ok(ObjectRef::ProjQuot { j: 1, k: k + 1 })
            }
            ObjectRef::Dual(inner) => {
                let inner = inner.normalize(n)?;
                Ok(match inner {
                    ObjectRef::Simple(i) => ObjectRef::Simple(i),
                    ObjectRef::Dual(x) => *x,
                    other => ObjectRef::dual(other),
                })
            }
        }
    }

    /// Parses `L3`, `M2`, `M3/M1`, `P1/P3`, `P2`, `T2`, `F(...)`.
    pub fn parse(s: &str, n: usize) -> Result<ObjectRef, BlockError> {
        let s = s.trim();
        let bad = || BlockError::IndexOutOfRange { n, what: format!("unparsable object '{s}'") };
        if let Some(rest) = s.strip_prefix("F(").and_then(|r| r.strip_suffix(')')) {
            return Ok(ObjectRef::dual(ObjectRef::parse(rest, n)?));
        }
        let idx = |t: &str| t.parse::<usize>().map_err(|_| bad());
        if let Some((a, b)) = s.split_once('/') {
            let a = a.trim();
            let b = b.trim();
            match (a.chars().next(), b.chars().next()) {
                (Some('M'), Some('M')) => {
                    let r = idx(&a[1..])?;
                    let sq = idx(&b[1..])?;
                    return ObjectRef::VermaQuot { r, s: sq }.normalize(n).map(|_| ObjectRef::VermaQuot { r, s: sq });
                }
                (Some('P'), Some('P')) => {
                    let j = idx(&a[1..])?;
                    let k = idx(&b[1..])?;
                    return ObjectRef::ProjQuot { j, k }.normalize(n).map(|_| ObjectRef::ProjQuot { j, k });
                }
                _ => return Err(bad()),
            }
        }
        match s.chars().next() {
            Some('L') => Ok(ObjectRef::Simple(idx(&s[1..])?)),
            Some('M') => Ok(ObjectRef::VermaQuot { r: idx(&s[1..])?, s: 0 }),
            Some('P') => Ok(ObjectRef::ProjQuot { j: idx(&s[1..])?, k: n + 1 }),
            Some('T') => Ok(ObjectRef::Tilting(idx(&s[1..])?)),
            _ => Err(bad()),
        }
        .and_then(|o| o.normalize(n).map(|_| o))
    }
}

impl fmt::Display for ObjectRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ObjectRef::Simple(i) => write!(f, "L{i}"),
            ObjectRef::VermaQuot { r, s: 0 } => write!(f, "M{r}"),
            ObjectRef::VermaQuot { r, s } => write!(f, "M{r}/M{s}"),
            ObjectRef::ProjQuot { j, k } => write!(f, "P{j}/P{k}"),
            ObjectRef::Tilting(k) => write!(f, "T{k}"),
            ObjectRef::Dual(x) => write!(f, "F({x})"),
        }
    }
}

/// Result of a closed-formula Ext query: either a dimension, or a
/// distinguished marker for pairs outside the formula-covered table.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ExtDim {
    Dim(usize),
    Unsupported,
}

impl ExtDim {
    pub fn dim(self) -> Option<usize> {
        match self {
            ExtDim::Dim(d) => Some(d),
            ExtDim::Unsupported => None,
        }
    }
}

fn ind(b: bool) -> usize {
    b as usize
}

/// Composition multiplicity `[X : L_i]`.
pub fn mult(n: usize, x: &ObjectRef, i: usize) -> Result<usize, BlockError> {
    if i < 1 || i > n {
        return Err(BlockError::IndexOutOfRange { n, what: format!("L_{i}") });
    }
    Ok(mult_inner(&x.normalize(n)?, i))
}

fn mult_inner(x: &ObjectRef, i: usize) -> usize {
    match x {
        ObjectRef::Simple(j) => ind(*j == i),
        ObjectRef::VermaQuot { r, s } => ind(*s < i && i <= *r),
        ObjectRef::ProjQuot { j, k } => k.max(&i) - j.max(&i),
        // Duality fixes simples, hence preserves all JH multiplicities.
        ObjectRef::Dual(inner) => mult_inner(inner, i),
        ObjectRef::Tilting(_) => unreachable!("normalized"),
    }
}

/// `dim Ext^l(L_i, L_j)`.
pub fn ext_simple(n: usize, i: usize, j: usize, l: usize) -> Result<usize, BlockError> {
    if i < 1 || i > n || j < 1 || j > n {
        return Err(BlockError::IndexOutOfRange { n, what: format!("(L_{i}, L_{j})") });
    }
    Ok(ind(i == j && l == 0)
        + ind(i.abs_diff(j) == 1 && l == 1)
        + ind(i == j && i != 1 && l == 2))
}

/// `dim Hom(M_r/M_s, M_k/M_j) = 1(s <= j < r <= k)`.
pub fn hom_hw(n: usize, r: usize, s: usize, k: usize, j: usize) -> Result<usize, BlockError> {
    if !(s < r && r <= n && j < k && k <= n) {
        return Err(BlockError::IndexOutOfRange {
            n,
            what: format!("Hom(M_{r}/M_{s}, M_{k}/M_{j})"),
        });
    }
    Ok(ind(s <= j && j < r && r <= k))
}

/// Verma-flag multiplicities `[X : M_i]` for objects with a Verma flag.
fn verma_flag_mult(x: &ObjectRef, i: usize) -> Option<usize> {
    match x {
        ObjectRef::Simple(1) => Some(ind(i == 1)),
        ObjectRef::VermaQuot { r, s: 0 } => Some(ind(i == *r)),
        ObjectRef::ProjQuot { j, k } => Some(ind(*j <= i && i < *k)),
        _ => None,
    }
}

/// `dim Ext^l(X, Y)` via the closed-formula table, or `Unsupported` for
/// pairs outside it. Pairs reachable by the duality transport
/// `dim Ext^l(X, Y) = dim Ext^l(F(Y), F(X))` are folded in.
pub fn ext_dim(n: usize, x: &ObjectRef, y: &ObjectRef, l: usize) -> Result<ExtDim, BlockError> {
    let nx = x.normalize(n)?;
    let ny = y.normalize(n)?;
    if let Some(d) = ext_dim_direct(n, &nx, &ny, l) {
        return Ok(ExtDim::Dim(d));
    }
    // Duality transport.
    let dx = ObjectRef::dual(ny).normalize(n)?;
    let dy = ObjectRef::dual(nx).normalize(n)?;
    if let Some(d) = ext_dim_direct(n, &dx, &dy, l) {
        return Ok(ExtDim::Dim(d));
    }
    Ok(ExtDim::Unsupported)
}

fn ext_dim_direct(n: usize, x: &ObjectRef, y: &ObjectRef, l: usize) -> Option<usize> {
    use ObjectRef::*;
    // Simple pairs carry the full answer for every degree.
    if let (Simple(i), Simple(j)) = (x, y) {
        return Some(ext_simple(n, *i, *j, l).expect("validated"));
    }
    // L_i = M_i / M_{i-1} and M_r = P_r / P_{r+1}; rewrite where it extends
    // the formula coverage.
    let as_verma = |o: &ObjectRef| -> Option<(usize, usize)> {
        match o {
            Simple(i) => Some((*i, i - 1)),
            VermaQuot { r, s } => Some((*r, *s)),
            _ => None,
        }
    };
    let as_proj = |o: &ObjectRef| -> Option<(usize, usize)> {
        match o {
            ProjQuot { j, k } => Some((*j, *k)),
            Simple(1) => Some((1, 2)),
            VermaQuot { r, s: 0 } => Some((*r, r + 1)),
            _ => None,
        }
    };
    // Ext^l(P_j/P_k, anything in the block) vanishes for l >= 2.
    if as_proj(x).is_some() && l >= 2 {
        return Some(0);
    }
    // (P_r/P_s, P_j/P_k): both degrees.
    if let (Some((r, s)), Some((j, k))) = (as_proj(x), as_proj(y)) {
        let (r, s, j, k) = (r as i64, s as i64, j as i64, k as i64);
        return Some(match l {
            0 if r < k => ((s - r).min(k - r).min(k - j)) as usize,
            1 if r <= j && s <= k => {
                let v = (j - s).min(0) + (s - r).min(k - j);
                debug_assert!(v >= 0);
                v as usize
            }
            _ => 0,
        });
    }
    // (M_r, P_j/P_k) pairs were consumed above through M_r = P_r/P_{r+1};
    // the projective-pair formula restricts to exactly
    // delta_{l,0} 1(r < k) + delta_{l,1} 1(r < j) on them.
    // (P_j/P_k, M_r/M_s) incl. simple targets.
    if let (Some((j, k)), Some((r, s))) = (as_proj(x), as_verma(y)) {
        return Some(ind(l == 0) * ind(s < j && j <= r) + ind(l == 1) * ind(s < k && k <= r));
    }
    // (M_r/M_s with s > 0, P_j/P_k): Hom is delta_{s,0} * 1(r < k) = 0 here;
    // higher degrees are outside the formula table.
    if let (Some((_, s)), Some(_)) = (as_verma(x), as_proj(y)) {
        debug_assert!(s > 0, "s = 0 sources are handled by the projective arms");
        if l == 0 {
            return Some(0);
        }
        return None;
    }
    // (M_r/M_s with s > 0, M_t/M_u): Hom only.
    if let (Some((r, s)), Some((t, u))) = (as_verma(x), as_verma(y)) {
        if l == 0 {
            return Some(ind(s <= u && u < r && r <= t));
        }
        return None;
    }
    // Verma-flagged against dual-Verma-flagged: Ext concentrates in degree 0.
    if let Dual(inner) = y {
        if let (Some(_), Some(_)) = (flagged(x), flagged(inner)) {
            if l > 0 {
                return Some(0);
            }
            let total: usize = (1..=n)
                .map(|i| verma_flag_mult(x, i).unwrap() * verma_flag_mult(inner, i).unwrap())
                .sum();
            return Some(total);
        }
    }
    None
}

fn flagged(x: &ObjectRef) -> Option<()> {
    verma_flag_mult(x, 1).map(|_| ())
}

/// Square matrix of integer polynomials in `t`.
#[derive(Clone, PartialEq, Debug)]
pub struct HilbertMatrix {
    pub n: usize,
    entries: Vec<IntPoly>,
}

impl HilbertMatrix {
    fn zero(n: usize) -> Self {
        HilbertMatrix { n, entries: vec![IntPoly::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            *m.at_mut(i, i) = IntPoly::one();
        }
        m
    }

    pub fn at(&self, i: usize, j: usize) -> &IntPoly {
        &self.entries[i * self.n + j]
    }

    fn at_mut(&mut self, i: usize, j: usize) -> &mut IntPoly {
        &mut self.entries[i * self.n + j]
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let mut out = Self::zero(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                let mut acc = IntPoly::zero();
                for k in 0..self.n {
                    acc = acc.add(&self.at(i, k).mul(other.at(k, j)));
                }
                *out.at_mut(i, j) = acc;
            }
        }
        out
    }

    pub fn negate_var(&self) -> Self {
        HilbertMatrix {
            n: self.n,
            entries: self.entries.iter().map(|p| p.negate_var()).collect(),
        }
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| self.at(i, j) == self.at(j, i)))
    }

    /// Determinant by fraction-free (Bareiss) elimination over `Z[t]`.
    pub fn det(&self) -> IntPoly {
        let n = self.n;
        if n == 0 {
            return IntPoly::one();
        }
        let mut m: Vec<Vec<IntPoly>> = (0..n)
            .map(|i| (0..n).map(|j| self.at(i, j).clone()).collect())
            .collect();
        let mut prev = IntPoly::one();
        let mut sign = 1i64;
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                let Some(p) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                    return IntPoly::zero();
                };
                m.swap(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let t = m[i][j].mul(&m[k][k]).sub(&m[i][k].mul(&m[k][j]));
                    m[i][j] = t.exact_div(&prev);
                }
                m[i][k] = IntPoly::zero();
            }
            prev = m[k][k].clone();
        }
        let d = m[n - 1][n - 1].clone();
        if sign < 0 {
            d.mul(&IntPoly::new(vec![-1]))
        } else {
            d
        }
    }

    /// Row-major list of coefficient vectors, for serialization.
    pub fn rows_as_coeffs(&self) -> Vec<Vec<Vec<i64>>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.at(i, j).coeffs().to_vec()).collect())
            .collect()
    }
}

/// Hilbert matrix of the Ext algebra: tridiagonal with diagonal
/// `(1, 1+t^2, ..., 1+t^2)` and off-diagonal `t`.
pub fn hilbert_e(n: usize) -> HilbertMatrix {
    assert!(n >= 1);
    let mut m = HilbertMatrix::zero(n);
    for i in 0..n {
        *m.at_mut(i, i) = if i == 0 {
            IntPoly::one()
        } else {
            IntPoly::new(vec![1, 0, 1])
        };
        if i + 1 < n {
            *m.at_mut(i, i + 1) = IntPoly::monomial(1, 1);
            *m.at_mut(i + 1, i) = IntPoly::monomial(1, 1);
        }
    }
    m
}

/// Hilbert matrix of the block algebra:
/// entry `(i, j)` is `sum_{u = max(i,j)}^{n} t^(2u - i - j)`.
pub fn hilbert_a(n: usize) -> HilbertMatrix {
    assert!(n >= 1);
    let mut m = HilbertMatrix::zero(n);
    for i in 1..=n {
        for j in 1..=n {
            let mut p = IntPoly::zero();
            for u in i.max(j)..=n {
                p = p.add(&IntPoly::monomial(2 * u - i - j, 1));
            }
            *m.at_mut(i - 1, j - 1) = p;
        }
    }
    m
}

/// Numerical Koszulity criterion: `H(A, t) * H(E(A), -t)` must be the
/// identity matrix of constant polynomials.
pub fn koszul_check(n: usize) -> bool {
    hilbert_a(n).mul(&hilbert_e(n).negate_var()) == HilbertMatrix::identity(n)
}

/// BGG reciprocity `[P_i : M_j] = [M_j : L_i]` over the whole block.
pub fn bgg_reciprocity_check(n: usize) -> bool {
    (1..=n).all(|i| {
        (1..=n).all(|j| {
            let flag = verma_flag_mult(&ObjectRef::ProjQuot { j: i, k: n + 1 }, j).unwrap();
            let jh = mult(n, &ObjectRef::VermaQuot { r: j, s: 0 }, i).unwrap();
            flag == jh
        })
    })
}

/// Strong Kazhdan-Lusztig parity condition relative to the natural length
/// function `l(lambda_j) = j`, with `Rad^i M_j = M_{j-i}` and
/// `Soc^i F(M_k) = F(M_{k-i})`.
pub fn skl_check(n: usize) -> bool {
    for l in 0..=3usize {
        for i in 0..=n {
            for j in 1..=n {
                for k in 1..=n {
                    let rad_side = if j > i {
                        ext_dim(
                            n,
                            &ObjectRef::VermaQuot { r: j - i, s: 0 },
                            &ObjectRef::dual(ObjectRef::VermaQuot { r: k, s: 0 }),
                            l,
                        )
                        .unwrap()
                        .dim()
                        .unwrap()
                    } else {
                        0
                    };
                    let soc_side = if k > i {
                        ext_dim(
                            n,
                            &ObjectRef::VermaQuot { r: j, s: 0 },
                            &ObjectRef::dual(ObjectRef::VermaQuot { r: k - i, s: 0 }),
                            l,
                        )
                        .unwrap()
                        .dim()
                        .unwrap()
                    } else {
                        0
                    };
                    if rad_side > 0 || soc_side > 0 {
                        let parity = (l as i64) - (j as i64 - k as i64 + i as i64);
                        if parity.rem_euclid(2) != 0 {
                            return false;
                        }
                    }
                }
            }
        }
    }
    true
}

/// One entry of the tilting classification.
#[derive(Clone, PartialEq, Debug)]
pub struct TiltingInfo {
    pub k: usize,
    /// `T_k`, normalized to its projective-quotient form `P_1 / P_{k+1}`.
    pub tilting: ObjectRef,
    pub self_dual: bool,
    /// The injective hull of `L_k`: `F(P_k)`.
    pub injective_hull: ObjectRef,
}

/// All indecomposable tiltings `T_1, ..., T_n` and the injective hulls.
pub fn tilting_and_injectives(n: usize) -> Vec<TiltingInfo> {
    (1..=n)
        .map(|k| TiltingInfo {
            k,
            tilting: ObjectRef::Tilting(k).normalize(n).unwrap(),
            self_dual: true,
            injective_hull: ObjectRef::dual(ObjectRef::ProjQuot { j: k, k: n + 1 }),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use ObjectRef::*;

    fn pq(j: usize, k: usize) -> ObjectRef {
        ProjQuot { j, k }
    }

    fn vq(r: usize, s: usize) -> ObjectRef {
        VermaQuot { r, s }
    }

    #[test]
    fn mult_examples() {
        assert_eq!(mult(3, &pq(1, 4), 2).unwrap(), 2);
        assert_eq!(mult(3, &vq(3, 0), 3).unwrap(), 1);
        assert_eq!(mult(5, &vq(4, 2), 2).unwrap(), 0);
        assert_eq!(mult(3, &Tilting(2), 1).unwrap(), 2);
        assert_eq!(mult(3, &ObjectRef::dual(pq(1, 4)), 2).unwrap(), 2);
    }

    #[test]
    fn mult_rejects_bad_index() {
        assert!(mult(3, &pq(1, 4), 4).is_err());
        assert!(mult(3, &pq(1, 5), 1).is_err());
    }

    #[test]
    fn ext_simple_examples() {
        assert_eq!(ext_simple(3, 2, 3, 1).unwrap(), 1);
        assert_eq!(ext_simple(3, 1, 1, 2).unwrap(), 0);
        assert_eq!(ext_simple(3, 2, 2, 2).unwrap(), 1);
        assert_eq!(ext_simple(3, 2, 2, 0).unwrap(), 1);
        for l in 3..6 {
            for i in 1..=3 {
                for j in 1..=3 {
                    assert_eq!(ext_simple(3, i, j, l).unwrap(), 0);
                }
            }
        }
    }

    #[test]
    fn ext_dim_examples() {
        // Eq-level examples frozen from the closed formulas.
        assert_eq!(ext_dim(4, &vq(2, 0), &pq(3, 5), 1).unwrap(), ExtDim::Dim(1));
        assert_eq!(ext_dim(4, &pq(1, 3), &pq(2, 4), 0).unwrap(), ExtDim::Dim(2));
        assert_eq!(ext_dim(4, &pq(1, 3), &pq(2, 4), 1).unwrap(), ExtDim::Dim(1));
        // Tdon with matching and non-matching Verma flags.
        assert_eq!(
            ext_dim(2, &vq(2, 0), &ObjectRef::dual(vq(1, 0)), 0).unwrap(),
            ExtDim::Dim(0)
        );
        assert_eq!(
            ext_dim(2, &vq(1, 0), &ObjectRef::dual(vq(1, 0)), 0).unwrap(),
            ExtDim::Dim(1)
        );
    }

    #[test]
    fn ext_dim_unsupported_is_distinguished() {
        // Ext^1 out of a proper Verma quotient is outside the table.
        assert_eq!(ext_dim(4, &vq(3, 1), &pq(1, 3), 1).unwrap(), ExtDim::Unsupported);
        // ... but Hom is covered and zero.
        assert_eq!(ext_dim(4, &vq(3, 1), &pq(1, 3), 0).unwrap(), ExtDim::Dim(0));
    }

    #[test]
    fn hom_hw_examples() {
        assert_eq!(hom_hw(4, 3, 1, 4, 2).unwrap(), 1);
        assert_eq!(hom_hw(4, 2, 0, 4, 3).unwrap(), 0);
        for r in 1..=4 {
            for k in r..=4 {
                assert_eq!(hom_hw(4, r, 0, k, 0).unwrap(), 1, "Verma embedding M{r} -> M{k}");
            }
        }
    }

    #[test]
    fn verma_to_proj_ext_via_formula() {
        // dim Hom(M_i, P_j) = 1 for all i, j.
        let n = 5;
        for i in 1..=n {
            for j in 1..=n {
                assert_eq!(
                    ext_dim(n, &vq(i, 0), &pq(j, n + 1), 0).unwrap(),
                    ExtDim::Dim(1)
                );
            }
        }
    }

    #[test]
    fn euler_relation_exhaustive() {
        // Ext^1(M_i, X) = [X : L_{i+1}] - [X : L_i] + Hom(M_i, X)
        for n in 1..=8usize {
            for j in 1..=n {
                for k in j + 1..=n + 1 {
                    let x = pq(j, k);
                    for i in 1..=n {
                        let m_up = if i < n { mult(n, &x, i + 1).unwrap() as i64 } else { 0 };
                        let m_lo = mult(n, &x, i).unwrap() as i64;
                        let hom = ext_dim(n, &vq(i, 0), &x, 0).unwrap().dim().unwrap() as i64;
                        let ext1 = ext_dim(n, &vq(i, 0), &x, 1).unwrap().dim().unwrap() as i64;
                        assert_eq!(ext1, m_up - m_lo + hom, "n={n} X=P{j}/P{k} i={i}");
                    }
                }
            }
        }
    }

    #[test]
    fn duality_transport_consistency() {
        let n = 4;
        let mut objects = vec![];
        for i in 1..=n {
            objects.push(Simple(i));
        }
        for r in 1..=n {
            for s in 0..r {
                objects.push(vq(r, s));
            }
        }
        for j in 1..=n {
            for k in j + 1..=n + 1 {
                objects.push(pq(j, k));
            }
        }
        for x in &objects {
            for y in &objects {
                for l in 0..=2 {
                    let a = ext_dim(n, x, y, l).unwrap();
                    let b = ext_dim(
                        n,
                        &ObjectRef::dual(y.clone()),
                        &ObjectRef::dual(x.clone()),
                        l,
                    )
                    .unwrap();
                    // One side may be out of formula coverage.
                    if let (ExtDim::Dim(da), ExtDim::Dim(db)) = (a, b) {
                        assert_eq!(da, db, "transport failed for {x},{y},l={l}");
                    }
                }
            }
        }
    }

    #[test]
    fn proj_source_vanishing_above_one() {
        let n = 5;
        for j in 1..=n {
            for k in j + 1..=n + 1 {
                for l in 2..=4 {
                    assert_eq!(
                        ext_dim(n, &pq(j, k), &vq(3, 1), l).unwrap(),
                        ExtDim::Dim(0)
                    );
                }
            }
        }
    }

    #[test]
    fn hilbert_e_examples() {
        let m = hilbert_e(1);
        assert!(m.at(0, 0).is_one());
        let m = hilbert_e(2);
        assert_eq!(m.at(0, 0), &IntPoly::one());
        assert_eq!(m.at(0, 1), &IntPoly::monomial(1, 1));
        assert_eq!(m.at(1, 1), &IntPoly::new(vec![1, 0, 1]));
        assert!(hilbert_e(3).det().is_one());
        for n in 1..=10 {
            let m = hilbert_e(n);
            assert!(m.is_symmetric());
            assert!(m.det().is_one(), "det H(E) != 1 at n={n}");
            for i in 0..n {
                for j in 0..n {
                    assert!(m.at(i, j).has_nonnegative_coeffs());
                }
            }
        }
    }

    #[test]
    fn hilbert_a_examples() {
        let m = hilbert_a(2);
        assert_eq!(m.at(0, 0), &IntPoly::new(vec![1, 0, 1]));
        assert_eq!(m.at(0, 1), &IntPoly::monomial(1, 1));
        for n in 1..=6 {
            assert!(hilbert_a(n).at(n - 1, n - 1).is_one());
        }
    }

    #[test]
    fn hilbert_matches_ext_simple() {
        // H(E)_{ij} coefficients are the Ext^l(L_i, L_j) dimensions.
        for n in 1..=6usize {
            let m = hilbert_e(n);
            for i in 1..=n {
                for j in 1..=n {
                    for l in 0..=3usize {
                        assert_eq!(
                            m.at(i - 1, j - 1).coeff(l),
                            ext_simple(n, i, j, l).unwrap() as i64
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn koszul_holds_up_to_ten() {
        for n in 1..=10 {
            assert!(koszul_check(n), "Koszul criterion failed at n={n}");
        }
    }

    #[test]
    fn reciprocity_and_skl() {
        for n in 1..=10 {
            assert!(bgg_reciprocity_check(n));
            assert!(skl_check(n));
        }
    }

    #[test]
    fn tilting_list() {
        let t = tilting_and_injectives(3);
        assert_eq!(t.len(), 3);
        assert_eq!(t[0].tilting, pq(1, 2)); // T_1 = L_1
        assert_eq!(t[2].tilting, pq(1, 4)); // T_n = P_1
        assert!(t.iter().all(|x| x.self_dual));
        assert_eq!(t[0].injective_hull, ObjectRef::dual(pq(1, 4))); // F(P_1)
    }

    #[test]
    fn tilting_t1_is_simple() {
        // T_1 = P_1/P_2 = M_1 = L_1: multiplicities match.
        for i in 1..=3 {
            assert_eq!(
                mult(3, &Tilting(1), i).unwrap(),
                mult(3, &Simple(1), i).unwrap()
            );
        }
    }

    #[test]
    fn object_parsing() {
        assert_eq!(ObjectRef::parse("L2", 3).unwrap(), Simple(2));
        assert_eq!(ObjectRef::parse("M3/M1", 3).unwrap(), vq(3, 1));
        assert_eq!(ObjectRef::parse("P1/P3", 3).unwrap(), pq(1, 3));
        assert_eq!(ObjectRef::parse("P2", 3).unwrap(), pq(2, 4));
        assert_eq!(ObjectRef::parse("T2", 3).unwrap(), Tilting(2));
        assert_eq!(
            ObjectRef::parse("F(M2)", 3).unwrap(),
            ObjectRef::dual(vq(2, 0))
        );
        assert!(ObjectRef::parse("L9", 3).is_err());
        assert!(ObjectRef::parse("X1", 3).is_err());
    }
}
