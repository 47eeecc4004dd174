//! Augmented integer/rational sequences indexed from -1.
//!
//! A sequence is either materialized with finite support or lazy, backed by
//! a generator together with a declared tail classification. Operations that
//! need finite support reject `Unknown` tails instead of silently comparing
//! windows.

use crate::error::{Error, Result};
use num::{BigInt, BigRational, One, Zero};
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use crate::combinat::binomial;

/// Exact scalar: arbitrary-precision rational, kept normalized by `num`.
pub type Scalar = BigRational;

pub fn scalar_int(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

pub fn scalar_big(n: BigInt) -> Scalar {
    BigRational::from_integer(n)
}

/// Tail behavior declared for a lazy sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Tail {
    /// All entries beyond the given index are zero.
    EventuallyZero(i64),
    /// No finiteness promise; operations needing finite support reject this.
    Unknown,
}

struct LazySeq {
    gen: Box<dyn Fn(i64) -> Scalar + Send + Sync>,
    tail: Tail,
    cache: Mutex<HashMap<i64, Scalar>>,
}

#[derive(Clone)]
enum Repr {
    /// Entries from index -1 upward; trailing zeros trimmed.
    Finite(Arc<Vec<Scalar>>),
    Lazy(Arc<LazySeq>),
}

/// An augmented sequence `(a_{-1}, a_0, a_1, …)`.
#[derive(Clone)]
pub struct AugSequence {
    repr: Repr,
}

impl AugSequence {
    pub fn from_entries(mut entries: Vec<Scalar>) -> Self {
        while entries.last().is_some_and(|x| x.is_zero()) {
            entries.pop();
        }
        AugSequence {
            repr: Repr::Finite(Arc::new(entries)),
        }
    }

    pub fn from_ints(v: &[i64]) -> Self {
        Self::from_entries(v.iter().map(|&n| scalar_int(n)).collect())
    }

    pub fn from_bigints(v: Vec<BigInt>) -> Self {
        Self::from_entries(v.into_iter().map(scalar_big).collect())
    }

    pub fn zero() -> Self {
        Self::from_entries(vec![])
    }

    /// The basis sequence with a single 1 at index `k`.
    pub fn one_at(k: i64) -> Self {
        assert!(k >= -1);
        let mut v = vec![Scalar::zero(); (k + 2) as usize];
        v[(k + 1) as usize] = Scalar::one();
        Self::from_entries(v)
    }

    /// The join unit: 1 at index -1.
    pub fn unit() -> Self {
        Self::one_at(-1)
    }

    /// The point sequence `c = (1, 1, 0, …)`.
    pub fn point() -> Self {
        Self::from_ints(&[1, 1])
    }

    /// Binomial row `(binom(n+1,0), …, binom(n+1,n+1), 0, …)`.
    pub fn gamma_seq(n: i64) -> Self {
        let v: Vec<BigInt> = (-1..=n).map(|p| binomial(n + 1, p + 1)).collect();
        Self::from_bigints(if n < -1 { vec![] } else { v })
    }

    /// Boundary row: the binomial row with the top entry removed.
    pub fn boundary_seq(n: i64) -> Self {
        let mut v: Vec<BigInt> = (-1..=n).map(|p| binomial(n + 1, p + 1)).collect();
        if !v.is_empty() {
            let last = v.len() - 1;
            v[last] = BigInt::zero();
        }
        Self::from_bigints(v)
    }

    pub fn lazy<F>(gen: F, tail: Tail) -> Self
    where
        F: Fn(i64) -> Scalar + Send + Sync + 'static,
    {
        AugSequence {
            repr: Repr::Lazy(Arc::new(LazySeq {
                gen: Box::new(gen),
                tail,
                cache: Mutex::new(HashMap::new()),
            })),
        }
    }

    pub fn entry(&self, i: i64) -> Scalar {
        if i < -1 {
            return Scalar::zero();
        }
        match &self.repr {
            Repr::Finite(v) => v
                .get((i + 1) as usize)
                .cloned()
                .unwrap_or_else(Scalar::zero),
            Repr::Lazy(l) => {
                if let Tail::EventuallyZero(k) = l.tail {
                    if i > k {
                        return Scalar::zero();
                    }
                }
                if let Some(x) = l.cache.lock().unwrap().get(&i) {
                    return x.clone();
                }
                let x = (l.gen)(i);
                l.cache
                    .lock()
                    .unwrap()
                    .entry(i)
                    .or_insert(x)
                    .clone()
            }
        }
    }

    /// Whether the support is known finite (materialized or declared).
    pub fn has_finite_support(&self) -> bool {
        match &self.repr {
            Repr::Finite(_) => true,
            Repr::Lazy(l) => matches!(l.tail, Tail::EventuallyZero(_)),
        }
    }

    /// Materializes a finite-support sequence; errors on unknown tails.
    pub fn to_finite(&self) -> Result<AugSequence> {
        match &self.repr {
            Repr::Finite(_) => Ok(self.clone()),
            Repr::Lazy(l) => match l.tail {
                Tail::EventuallyZero(k) => {
                    Ok(Self::from_entries((-1..=k).map(|i| self.entry(i)).collect()))
                }
                Tail::Unknown => Err(Error::InfiniteInput),
            },
        }
    }

    /// `dim(a) = min{k | a_i = 0 for all i > k}`; `None` encodes -infinity
    /// (the zero sequence). Errors on unknown tails.
    pub fn dim(&self) -> Result<Option<i64>> {
        let fin = self.to_finite()?;
        let Repr::Finite(v) = &fin.repr else {
            unreachable!()
        };
        if v.is_empty() {
            Ok(None)
        } else {
            Ok(Some(v.len() as i64 - 2))
        }
    }

    /// Equality on finite supports; comparing unknown tails is an error.
    pub fn try_eq(&self, other: &AugSequence) -> Result<bool> {
        let a = self.to_finite()?;
        let b = other.to_finite()?;
        let (Repr::Finite(va), Repr::Finite(vb)) = (&a.repr, &b.repr) else {
            unreachable!()
        };
        Ok(va == vb)
    }

    pub fn is_zero_seq(&self) -> Result<bool> {
        Ok(self.dim()?.is_none())
    }

    /// All entries as integers, if they are; used by renderers.
    pub fn entries_upto(&self, k: i64) -> Vec<Scalar> {
        (-1..=k).map(|i| self.entry(i)).collect()
    }

    pub fn add(&self, other: &AugSequence) -> Result<AugSequence> {
        let a = self.to_finite()?;
        let b = other.to_finite()?;
        let da = a.dim()?.unwrap_or(-2);
        let db = b.dim()?.unwrap_or(-2);
        let top = da.max(db);
        Ok(AugSequence::from_entries(
            (-1..=top).map(|i| a.entry(i) + b.entry(i)).collect(),
        ))
    }

    pub fn scale(&self, c: &Scalar) -> Result<AugSequence> {
        let a = self.to_finite()?;
        let d = a.dim()?.unwrap_or(-2);
        Ok(AugSequence::from_entries(
            (-1..=d).map(|i| a.entry(i) * c).collect(),
        ))
    }
}

impl fmt::Debug for AugSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_finite() {
            Ok(fin) => {
                let d = fin.dim().unwrap().unwrap_or(-2);
                let parts: Vec<String> = (-1..=d.max(-1))
                    .map(|i| format_scalar(&fin.entry(i)))
                    .collect();
                write!(f, "({}, 0, …)", parts.join(", "))
            }
            Err(_) => write!(f, "(lazy sequence, unknown tail)"),
        }
    }
}

/// Renders an exact scalar: plain decimal for integers, `p/q` otherwise.
pub fn format_scalar(x: &Scalar) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn parse_scalar(s: &str) -> Result<Scalar> {
    let parse_int = |t: &str| -> Result<BigInt> {
        t.parse::<BigInt>()
            .map_err(|e| Error::Json(format!("bad integer {t:?}: {e}")))
    };
    match s.split_once('/') {
        Some((n, d)) => {
            let d = parse_int(d)?;
            if d.is_zero() {
                return Err(Error::Json("zero denominator".into()));
            }
            Ok(BigRational::new(parse_int(n)?, d))
        }
        None => Ok(BigRational::from_integer(parse_int(s)?)),
    }
}

/// Join product `(a ⊞ b)_m = Σ_{p+q=m-1} a_p b_q`.
///
/// At least one operand must have finite support; if the other is lazy the
/// result is lazy with the same tail classification.
pub fn seq_join(a: &AugSequence, b: &AugSequence) -> Result<AugSequence> {
    let (fin, other, swapped) = if a.has_finite_support() {
        (a.to_finite()?, b.clone(), false)
    } else if b.has_finite_support() {
        (b.to_finite()?, a.clone(), true)
    } else {
        return Err(Error::BothInfinite);
    };
    let _ = swapped; // join is symmetric
    let df = fin.dim()?.unwrap_or(-2);
    if other.has_finite_support() {
        let other = other.to_finite()?;
        let do_ = other.dim()?.unwrap_or(-2);
        if df < -1 || do_ < -1 {
            return Ok(AugSequence::zero());
        }
        let top = df + do_ + 1;
        let entries = (-1..=top)
            .map(|m| {
                let mut acc = Scalar::zero();
                for p in -1..=df.min(m) {
                    acc += fin.entry(p) * other.entry(m - 1 - p);
                }
                acc
            })
            .collect();
        Ok(AugSequence::from_entries(entries))
    } else {
        let fin2 = fin.clone();
        Ok(AugSequence::lazy(
            move |m| {
                let mut acc = Scalar::zero();
                for p in -1..=df.min(m) {
                    acc += fin2.entry(p) * other.entry(m - 1 - p);
                }
                acc
            },
            Tail::Unknown,
        ))
    }
}

/// Cone `con(c) = c + D_{-1}(c)`: entry -1 is kept, entry `i >= 0` becomes
/// `c_i + c_{i-1}`. Equals `c ⊞ (1,1,0,…)`.
pub fn seq_cone(c: &AugSequence) -> AugSequence {
    match c.to_finite() {
        Ok(fin) => {
            let d = fin.dim().unwrap().unwrap_or(-2);
            AugSequence::from_entries(
                (-1..=d + 1)
                    .map(|i| {
                        if i == -1 {
                            fin.entry(-1)
                        } else {
                            fin.entry(i) + fin.entry(i - 1)
                        }
                    })
                    .collect(),
            )
        }
        Err(_) => {
            let c = c.clone();
            AugSequence::lazy(
                move |i| {
                    if i == -1 {
                        c.entry(-1)
                    } else {
                        c.entry(i) + c.entry(i - 1)
                    }
                },
                Tail::Unknown,
            )
        }
    }
}

/// Index shift `(D_k(b))_i = b_{i+k}`, zero-padded below index -1.
pub fn shift(b: &AugSequence, k: i64) -> AugSequence {
    match b.to_finite() {
        Ok(fin) => {
            let d = fin.dim().unwrap().unwrap_or(-2);
            AugSequence::from_entries(
                (-1..=d - k)
                    .map(|i| {
                        if i + k < -1 {
                            Scalar::zero()
                        } else {
                            fin.entry(i + k)
                        }
                    })
                    .collect(),
            )
        }
        Err(_) => {
            let b = b.clone();
            AugSequence::lazy(
                move |i| {
                    if i + k < -1 {
                        Scalar::zero()
                    } else {
                        b.entry(i + k)
                    }
                },
                Tail::Unknown,
            )
        }
    }
}

/// The shifting matrix `R(b)` of a finite-support sequence: row `i` is `b`
/// shifted right by `i+1`, so that `a · R(b) = a ⊞ b` for every row vector
/// `a`. Upper triangular with finite rows and columns.
pub fn shifting_matrix(b: &AugSequence) -> Result<crate::seqmat::matrix::AugMatrix> {
    use crate::seqmat::matrix::{AugMatrix, Flags};
    use std::sync::Arc;
    let b = b.to_finite()?;
    let d = b.dim()?.unwrap_or(-2);
    Ok(AugMatrix::new(
        "R",
        Flags {
            upper_triangular: true,
            row_support: Some(Arc::new(move |i| i + 1 + d.max(-1))),
            col_support: Some(Arc::new(|m| m)),
            ..Flags::default()
        },
        move |i, m| Ok(b.entry(m - i - 1)),
    ))
}

// ---------------------------------------------------------------------------
// JSON wire format

#[derive(serde::Serialize, serde::Deserialize)]
struct SeqDto {
    kind: String,
    start: i64,
    entries: Vec<String>,
    tail: String,
}

impl AugSequence {
    /// `{"kind":"seq","start":-1,"entries":["1","6","6"],"tail":"zero"}`
    pub fn to_json(&self) -> Result<String> {
        let fin = self.to_finite()?;
        let d = fin.dim()?.unwrap_or(-2);
        let entries = (-1..=d).map(|i| format_scalar(&fin.entry(i))).collect();
        let dto = SeqDto {
            kind: "seq".into(),
            start: -1,
            entries,
            tail: "zero".into(),
        };
        serde_json::to_string(&dto).map_err(|e| Error::Json(e.to_string()))
    }

    pub fn from_json(s: &str) -> Result<AugSequence> {
        let dto: SeqDto = serde_json::from_str(s).map_err(|e| Error::Json(e.to_string()))?;
        if dto.kind != "seq" {
            return Err(Error::Json(format!("expected kind \"seq\", got {:?}", dto.kind)));
        }
        if dto.start != -1 {
            return Err(Error::Json("sequence must start at index -1".into()));
        }
        if dto.tail != "zero" {
            return Err(Error::Json(format!("unsupported tail {:?}", dto.tail)));
        }
        let entries = dto
            .entries
            .iter()
            .map(|s| parse_scalar(s))
            .collect::<Result<Vec<_>>>()?;
        Ok(AugSequence::from_entries(entries))
    }
}
