//! Lazy infinite matrices over exact rationals, indexed from -1 in both
//! directions.
//!
//! A matrix is an entry function plus *flags*: triangularity claims and
//! optional support bounds (an upper bound on the last nonzero column of a
//! row, resp. the last nonzero row of a column). Products and row-vector
//! actions consult the flags to decide whether the defining sums are finite;
//! when no bound is available they fail with [`Error::DivergentSum`] instead
//! of truncating silently.

use crate::error::{Error, Result};
use crate::seqmat::sequence::{AugSequence, Scalar, Tail};
use num::{One, Zero};
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

/// Support bound: for a row index `i`, an index `s(i)` with
/// `entry(i, j) = 0` whenever `j > s(i)` (and dually for columns).
/// `-2` marks an identically zero row/column. Bounds may be loose.
pub type SupportFn = Arc<dyn Fn(i64) -> i64 + Send + Sync>;

#[derive(Clone, Default)]
pub struct Flags {
    /// `entry(i, j) = 0` for `j > i`.
    pub lower_triangular: bool,
    /// `entry(i, j) = 0` for `j < i`.
    pub upper_triangular: bool,
    pub row_support: Option<SupportFn>,
    pub col_support: Option<SupportFn>,
}

struct MatInner {
    name: String,
    entry_fn: Box<dyn Fn(i64, i64) -> Result<Scalar> + Send + Sync>,
    cache: Mutex<HashMap<(i64, i64), Scalar>>,
    flags: Flags,
}

/// An augmented matrix `(B_{n,m})_{n,m >= -1}`.
#[derive(Clone)]
pub struct AugMatrix {
    inner: Arc<MatInner>,
}

impl AugMatrix {
    pub fn new<F>(name: &str, flags: Flags, entry_fn: F) -> AugMatrix
    where
        F: Fn(i64, i64) -> Result<Scalar> + Send + Sync + 'static,
    {
        let m = AugMatrix {
            inner: Arc::new(MatInner {
                name: name.to_string(),
                entry_fn: Box::new(entry_fn),
                cache: Mutex::new(HashMap::new()),
                flags,
            }),
        };
        #[cfg(debug_assertions)]
        m.spot_check_flags();
        m
    }

    /// Probabilistic honesty check on the declared flags: a handful of
    /// entries outside the claimed support region must be zero. Errors from
    /// the entry function are ignored here; they surface at use sites.
    #[cfg(debug_assertions)]
    fn spot_check_flags(&self) {
        let probes: [i64; 4] = [-1, 0, 3, 7];
        for &i in &probes {
            if self.inner.flags.lower_triangular {
                if let Ok(x) = self.try_entry(i, i + 1 + (i & 3)) {
                    debug_assert!(
                        x.is_zero(),
                        "{}: nonzero above diagonal at row {i}",
                        self.inner.name
                    );
                }
            }
            if self.inner.flags.upper_triangular && i > -1 {
                if let Ok(x) = self.try_entry(i, i - 1) {
                    debug_assert!(
                        x.is_zero(),
                        "{}: nonzero below diagonal at row {i}",
                        self.inner.name
                    );
                }
            }
            if let Some(rs) = &self.inner.flags.row_support {
                let bound = rs(i);
                if let Ok(x) = self.try_entry(i, bound + 1 + (i & 1)) {
                    debug_assert!(
                        x.is_zero(),
                        "{}: nonzero past declared row support at row {i}",
                        self.inner.name
                    );
                }
            }
            if let Some(cs) = &self.inner.flags.col_support {
                let bound = cs(i);
                if let Ok(x) = self.try_entry(bound + 1 + (i & 1), i) {
                    debug_assert!(
                        x.is_zero(),
                        "{}: nonzero past declared column support in column {i}",
                        self.inner.name
                    );
                }
            }
        }
    }

    pub fn name(&self) -> &str {
        &self.inner.name
    }

    pub fn flags(&self) -> &Flags {
        &self.inner.flags
    }

    pub fn try_entry(&self, n: i64, m: i64) -> Result<Scalar> {
        if n < -1 || m < -1 {
            return Ok(Scalar::zero());
        }
        if let Some(x) = self.inner.cache.lock().unwrap().get(&(n, m)) {
            return Ok(x.clone());
        }
        let x = (self.inner.entry_fn)(n, m)?;
        Ok(self
            .inner
            .cache
            .lock()
            .unwrap()
            .entry((n, m))
            .or_insert(x)
            .clone())
    }

    pub fn entry(&self, n: i64, m: i64) -> Scalar {
        self.try_entry(n, m)
            .unwrap_or_else(|e| panic!("{}[{n},{m}]: {e}", self.inner.name))
    }

    /// Identity matrix (both triangular, supports `i ↦ i`).
    pub fn identity() -> AugMatrix {
        AugMatrix::new(
            "id",
            Flags {
                lower_triangular: true,
                upper_triangular: true,
                row_support: Some(Arc::new(|i| i)),
                col_support: Some(Arc::new(|j| j)),
            },
            |n, m| Ok(if n == m { Scalar::one() } else { Scalar::zero() }),
        )
    }

    /// A finite window materialized as dense data with explicit supports.
    pub fn from_window(
        name: &str,
        row_lo: i64,
        col_lo: i64,
        data: Vec<Vec<Scalar>>,
    ) -> AugMatrix {
        let rows = data.len() as i64;
        let cols = data.first().map_or(0, |r| r.len()) as i64;
        let data = Arc::new(data);
        let d2 = data.clone();
        AugMatrix::new(
            name,
            Flags {
                lower_triangular: false,
                upper_triangular: false,
                row_support: Some(Arc::new(move |_| col_lo + cols - 1)),
                col_support: Some(Arc::new(move |_| row_lo + rows - 1)),
            },
            move |n, m| {
                if n < row_lo || n >= row_lo + rows || m < col_lo || m >= col_lo + cols {
                    Ok(Scalar::zero())
                } else {
                    Ok(d2[(n - row_lo) as usize][(m - col_lo) as usize].clone())
                }
            },
        )
    }

    /// The product `self · other`, with flag propagation. The sum over the
    /// inner index needs a bound from `self`'s row support or `other`'s
    /// column support; with neither, every entry is a divergent sum.
    pub fn matmul(&self, other: &AugMatrix) -> AugMatrix {
        let a = self.clone();
        let b = other.clone();
        let name = format!("{}·{}", a.name(), b.name());
        let af = a.flags().clone();
        let bf = b.flags().clone();

        let lower = (af.lower_triangular && bf.lower_triangular)
            || (af.lower_triangular && bf.upper_triangular && bf.lower_triangular)
            || (bf.lower_triangular && af.upper_triangular && af.lower_triangular);
        let upper = af.upper_triangular && bf.upper_triangular;

        // row support of the product: scan nonzero columns k of row n in A,
        // take max of B's row supports. Needs both A.row_support and
        // B.row_support.
        let row_support: Option<SupportFn> = match (&af.row_support, &bf.row_support) {
            (Some(ars), Some(brs)) => {
                let a2 = a.clone();
                let ars = ars.clone();
                let brs = brs.clone();
                Some(Arc::new(move |n| {
                    let _ = &a2;
                    let top = ars(n);
                    let mut best = -2i64;
                    for k in -1..=top {
                        best = best.max(brs(k));
                    }
                    best
                }))
            }
            _ => None,
        };
        let col_support: Option<SupportFn> = match (&af.col_support, &bf.col_support) {
            (Some(acs), Some(bcs)) => {
                let acs = acs.clone();
                let bcs = bcs.clone();
                Some(Arc::new(move |m| {
                    let top = bcs(m);
                    let mut best = -2i64;
                    for k in -1..=top {
                        best = best.max(acs(k));
                    }
                    best
                }))
            }
            _ => None,
        };

        let a2 = a.clone();
        let b2 = b.clone();
        AugMatrix::new(
            &name,
            Flags {
                lower_triangular: lower,
                upper_triangular: upper,
                row_support,
                col_support,
            },
            move |n, m| {
                let mut lo = -1i64;
                let mut hi = i64::MAX;
                if a2.flags().lower_triangular {
                    hi = hi.min(n);
                }
                if a2.flags().upper_triangular {
                    lo = lo.max(n);
                }
                if b2.flags().lower_triangular {
                    lo = lo.max(m);
                }
                if b2.flags().upper_triangular {
                    hi = hi.min(m);
                }
                if let Some(rs) = &a2.flags().row_support {
                    hi = hi.min(rs(n));
                }
                if let Some(cs) = &b2.flags().col_support {
                    hi = hi.min(cs(m));
                }
                if hi == i64::MAX {
                    return Err(Error::DivergentSum(format!(
                        "({})·({}) at ({n},{m}): no bound on the inner index",
                        a2.name(),
                        b2.name()
                    )));
                }
                let mut acc = Scalar::zero();
                for k in lo..=hi {
                    let x = a2.try_entry(n, k)?;
                    if x.is_zero() {
                        continue;
                    }
                    acc += x * b2.try_entry(k, m)?;
                }
                Ok(acc)
            },
        )
    }

    /// Row vector times matrix, `(a · B)_m = Σ_k a_k B_{k,m}`.
    ///
    /// With `a` finite and `B` row-bounded the result is materialized
    /// finite; otherwise it stays lazy when `B` has a column bound (each
    /// entry is then a finite sum); with neither bound the sums diverge.
    pub fn dot(&self, a: &AugSequence) -> Result<AugSequence> {
        let b = self.clone();
        if a.has_finite_support() {
            let a = a.to_finite()?;
            let d = a.dim()?.unwrap_or(-2);
            if d < -1 {
                return Ok(AugSequence::zero());
            }
            if let Some(rs) = &b.flags().row_support {
                let mut top = -2i64;
                for k in -1..=d {
                    if !a.entry(k).is_zero() {
                        top = top.max(rs(k));
                    }
                }
                let entries = (-1..=top)
                    .map(|m| {
                        let mut acc = Scalar::zero();
                        for k in -1..=d {
                            let x = a.entry(k);
                            if x.is_zero() {
                                continue;
                            }
                            acc += x * b.try_entry(k, m)?;
                        }
                        Ok(acc)
                    })
                    .collect::<Result<Vec<_>>>()?;
                return Ok(AugSequence::from_entries(entries));
            }
            if b.flags().col_support.is_some() || b.flags().lower_triangular {
                // each entry is a finite sum over k <= d, but the support of
                // the result is unbounded a priori
                let b2 = b.clone();
                return Ok(AugSequence::lazy(
                    move |m| {
                        let mut acc = Scalar::zero();
                        for k in -1..=d {
                            let x = a.entry(k);
                            if x.is_zero() {
                                continue;
                            }
                            acc += x * b2.entry(k, m);
                        }
                        acc
                    },
                    Tail::Unknown,
                ));
            }
            // no declared bounds at all: entries are still finite sums
            // (a is finite), but we cannot bound the support
            let b2 = b.clone();
            return Ok(AugSequence::lazy(
                move |m| {
                    let mut acc = Scalar::zero();
                    for k in -1..=d {
                        let x = a.entry(k);
                        if x.is_zero() {
                            continue;
                        }
                        acc += x * b2.entry(k, m);
                    }
                    acc
                },
                Tail::Unknown,
            ));
        }
        // infinite a: need a column bound on B to make each entry finite
        if let Some(cs) = b.flags().col_support.clone() {
            let a = a.clone();
            let b2 = b.clone();
            return Ok(AugSequence::lazy(
                move |m| {
                    let mut acc = Scalar::zero();
                    for k in -1..=cs(m) {
                        let x = a.entry(k);
                        if x.is_zero() {
                            continue;
                        }
                        acc += x * b2.entry(k, m);
                    }
                    acc
                },
                Tail::Unknown,
            ));
        }
        Err(Error::DivergentSum(format!(
            "row vector with unbounded support times {} without column bound",
            b.name()
        )))
    }

    /// `A^k` by repeated multiplication; `A^0` is the identity. Negative
    /// exponents invert first (so `A` must be triangular with nonzero
    /// diagonal for `k < 0`).
    pub fn iterate_operator(&self, k: i64) -> Result<AugMatrix> {
        let base = if k < 0 {
            self.invert_triangular()?
        } else {
            self.clone()
        };
        let mut acc = AugMatrix::identity();
        for _ in 0..k.unsigned_abs() {
            acc = acc.matmul(&base);
        }
        Ok(acc)
    }

    /// Inverse of a triangular matrix with nonzero diagonal, computed lazily
    /// by forward/back substitution with a shared memo table.
    pub fn invert_triangular(&self) -> Result<AugMatrix> {
        let lower = self.flags().lower_triangular;
        let upper = self.flags().upper_triangular;
        if !lower && !upper {
            return Err(Error::NotTriangular);
        }
        let a = self.clone();
        let name = format!("{}⁻¹", a.name());
        let diagonal = lower && upper;
        let flags = Flags {
            lower_triangular: lower,
            upper_triangular: upper,
            row_support: if lower || diagonal {
                Some(Arc::new(|i| i))
            } else {
                None
            },
            col_support: if upper || diagonal {
                Some(Arc::new(|j| j))
            } else {
                None
            },
        };
        let memo: Arc<Mutex<HashMap<(i64, i64), Scalar>>> = Arc::new(Mutex::new(HashMap::new()));
        // X solves A·X = I (lower) or X·A = I (upper); for diagonal A both
        // coincide. Entries are computed recursively via the substitution
        // formulas; recursion depth is bounded by |i - j|.
        fn inv_entry(
            a: &AugMatrix,
            lower: bool,
            memo: &Arc<Mutex<HashMap<(i64, i64), Scalar>>>,
            i: i64,
            j: i64,
        ) -> Result<Scalar> {
            if (lower && j > i) || (!lower && j < i) {
                return Ok(Scalar::zero());
            }
            if let Some(x) = memo.lock().unwrap().get(&(i, j)) {
                return Ok(x.clone());
            }
            let diag_idx = if lower { i } else { j };
            let d = a.try_entry(diag_idx, diag_idx)?;
            if d.is_zero() {
                return Err(Error::SingularDiagonal(diag_idx));
            }
            let delta = if i == j { Scalar::one() } else { Scalar::zero() };
            let mut acc = Scalar::zero();
            if lower {
                // X_{i,j} = (δ_{ij} - Σ_{k=j}^{i-1} A_{i,k} X_{k,j}) / A_{i,i}
                for k in j..i {
                    let aik = a.try_entry(i, k)?;
                    if aik.is_zero() {
                        continue;
                    }
                    acc += aik * inv_entry(a, lower, memo, k, j)?;
                }
            } else {
                // X_{i,j} = (δ_{ij} - Σ_{k=i}^{j-1} X_{i,k} A_{k,j}) / A_{j,j}
                for k in i..j {
                    let akj = a.try_entry(k, j)?;
                    if akj.is_zero() {
                        continue;
                    }
                    acc += inv_entry(a, lower, memo, i, k)? * akj;
                }
            }
            let x = (delta - acc) / d;
            memo.lock().unwrap().insert((i, j), x.clone());
            Ok(x)
        }
        Ok(AugMatrix::new(&name, flags, move |i, j| {
            inv_entry(&a, lower, &memo, i, j)
        }))
    }

    /// Materializes a rectangular window as row-major data.
    pub fn window(
        &self,
        rows: std::ops::RangeInclusive<i64>,
        cols: std::ops::RangeInclusive<i64>,
    ) -> Result<Vec<Vec<Scalar>>> {
        let mut out = Vec::new();
        for n in rows {
            let mut row = Vec::new();
            for m in cols.clone() {
                row.push(self.try_entry(n, m)?);
            }
            out.push(row);
        }
        Ok(out)
    }
}

impl fmt::Debug for AugMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AugMatrix({})", self.inner.name)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seqmat::named;
    use crate::seqmat::sequence::scalar_int;

    #[test]
    fn identity_acts_trivially() {
        let id = AugMatrix::identity();
        let a = AugSequence::from_ints(&[1, 6, 6]);
        assert!(id.dot(&a).unwrap().try_eq(&a).unwrap());
        assert_eq!(id.matmul(&id).entry(4, 4), scalar_int(1));
        assert_eq!(id.matmul(&id).entry(4, 2), scalar_int(0));
    }

    #[test]
    fn window_materialization() {
        let bin = named::bin();
        let w = bin.window(-1..=1, -1..=1).unwrap();
        let expect: Vec<Vec<Scalar>> = vec![
            vec![scalar_int(1), scalar_int(0), scalar_int(0)],
            vec![scalar_int(1), scalar_int(1), scalar_int(0)],
            vec![scalar_int(1), scalar_int(2), scalar_int(1)],
        ];
        assert_eq!(w, expect);
    }

    #[test]
    fn divergent_product_is_an_error() {
        // two matrices with no flags at all: every product entry diverges
        let a = AugMatrix::new("ones", Flags::default(), |_, _| Ok(Scalar::one()));
        let b = AugMatrix::new("ones2", Flags::default(), |_, _| Ok(Scalar::one()));
        let p = a.matmul(&b);
        assert!(matches!(p.try_entry(0, 0), Err(Error::DivergentSum(_))));
    }

    #[test]
    fn invert_requires_triangularity() {
        let a = AugMatrix::new("ones", Flags::default(), |_, _| Ok(Scalar::one()));
        assert_eq!(a.invert_triangular().unwrap_err(), Error::NotTriangular);
    }

    #[test]
    fn singular_diagonal_detected() {
        let a = AugMatrix::new(
            "nilpotent-ish",
            Flags {
                lower_triangular: true,
                ..Flags::default()
            },
            |n, m| {
                Ok(if n == m && n == 2 {
                    Scalar::zero()
                } else if m <= n {
                    Scalar::one()
                } else {
                    Scalar::zero()
                })
            },
        );
        let inv = a.invert_triangular().unwrap();
        assert!(matches!(
            inv.try_entry(3, 0),
            Err(Error::SingularDiagonal(2))
        ));
        // entries not touching row/col 2 are fine
        assert_eq!(inv.try_entry(0, 0).unwrap(), Scalar::one());
    }

    #[test]
    fn lower_inverse_round_trip() {
        let bin = named::bin();
        let inv = bin.invert_triangular().unwrap();
        let prod = bin.matmul(&inv);
        for n in -1..=10 {
            for m in -1..=10 {
                let want = if n == m { Scalar::one() } else { Scalar::zero() };
                assert_eq!(prod.entry(n, m), want, "({n},{m})");
            }
        }
    }

    #[test]
    fn upper_inverse_round_trip() {
        let bc = named::breve_cil();
        let inv = bc.invert_triangular().unwrap();
        let prod = inv.matmul(&bc);
        for n in -1..=10 {
            for m in -1..=10 {
                let want = if n == m { Scalar::one() } else { Scalar::zero() };
                assert_eq!(prod.entry(n, m), want, "({n},{m})");
            }
        }
    }
}
