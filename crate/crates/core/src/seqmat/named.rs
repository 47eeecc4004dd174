//! The named matrices of the calculus: binomial triangles, the three
//! cylinder families, and the chain-count matrices driving subdivision.
//!
//! All are lazy [`AugMatrix`] values with honest flags. Naming convention:
//! a `breve_` prefix marks the "ends" part of a construction (the two lids
//! of a cylinder, the anchored chains), `_partial` the open part
//! (construction minus its ends).

use crate::error::Result;
use crate::seqmat::matrix::{AugMatrix, Flags};
use crate::seqmat::sequence::{scalar_big, AugSequence, Scalar};
use crate::combinat::{binomial, breve_cad_plus_entry, cad_entry, cad_plus_entry};
use num::BigInt;
use std::sync::Arc;

fn sb(x: BigInt) -> Scalar {
    scalar_big(x)
}

/// Binomial triangle `bin_{n,m} = binom(n+1, m+1)`.
pub fn bin() -> AugMatrix {
    AugMatrix::new(
        "bin",
        Flags {
            lower_triangular: true,
            row_support: Some(Arc::new(|i| i)),
            ..Flags::default()
        },
        |n, m| Ok(sb(binomial(n + 1, m + 1))),
    )
}

/// Signed inverse triangle `bin⁻¹_{n,m} = (-1)^{n-m} binom(n+1, m+1)`.
pub fn bin_inv() -> AugMatrix {
    AugMatrix::new(
        "bin-inv",
        Flags {
            lower_triangular: true,
            row_support: Some(Arc::new(|i| i)),
            ..Flags::default()
        },
        |n, m| {
            let b = binomial(n + 1, m + 1);
            Ok(sb(if (n - m) % 2 == 0 { b } else { -b }))
        },
    )
}

/// Cylinder ends: `(n+2)` on the diagonal, `(n+1)` just above.
pub fn breve_cil() -> AugMatrix {
    AugMatrix::new(
        "breve-cil",
        Flags {
            upper_triangular: true,
            row_support: Some(Arc::new(|n| n + 1)),
            col_support: Some(Arc::new(|m| m)),
            ..Flags::default()
        },
        |n, m| {
            Ok(sb(if m == n {
                BigInt::from(n + 2)
            } else if m == n + 1 {
                BigInt::from(n + 1)
            } else {
                BigInt::from(0)
            }))
        },
    )
}

/// Full cylinder matrix `cil_{n,m} = binom(n+1,m+1)(m+2) + binom(n+1,m)·m`.
pub fn cil() -> AugMatrix {
    AugMatrix::new(
        "cil",
        Flags {
            row_support: Some(Arc::new(|n| n + 1)),
            ..Flags::default()
        },
        |n, m| {
            Ok(sb(
                binomial(n + 1, m + 1) * BigInt::from(m + 2) + binomial(n + 1, m) * BigInt::from(m),
            ))
        },
    )
}

/// Open cylinder: full minus ends.
pub fn cil_partial() -> AugMatrix {
    let full = cil();
    let ends = breve_cil();
    AugMatrix::new(
        "cil-partial",
        Flags {
            row_support: Some(Arc::new(|n| n)),
            ..Flags::default()
        },
        move |n, m| Ok(full.try_entry(n, m)? - ends.try_entry(n, m)?),
    )
}

/// Prism-cylinder ends: diagonal `(n+2)`.
pub fn breve_cil0() -> AugMatrix {
    AugMatrix::new(
        "breve-cil0",
        Flags {
            lower_triangular: true,
            upper_triangular: true,
            row_support: Some(Arc::new(|i| i)),
            col_support: Some(Arc::new(|j| j)),
        },
        |n, m| {
            Ok(sb(if m == n {
                BigInt::from(n + 2)
            } else {
                BigInt::from(0)
            }))
        },
    )
}

/// Full prism-cylinder matrix `cil0_{n,m} = binom(n+1,m+1)(m+2)`.
pub fn cil0() -> AugMatrix {
    AugMatrix::new(
        "cil0",
        Flags {
            lower_triangular: true,
            row_support: Some(Arc::new(|n| n)),
            ..Flags::default()
        },
        |n, m| Ok(sb(binomial(n + 1, m + 1) * BigInt::from(m + 2))),
    )
}

/// Open prism-cylinder: full minus ends.
pub fn cil0_partial() -> AugMatrix {
    let full = cil0();
    let ends = breve_cil0();
    AugMatrix::new(
        "cil0-partial",
        Flags {
            lower_triangular: true,
            row_support: Some(Arc::new(|n| (n - 1).max(-2))),
            ..Flags::default()
        },
        move |n, m| Ok(full.try_entry(n, m)? - ends.try_entry(n, m)?),
    )
}

/// Pair-cylinder ends `Σ_i binom(n+1,i+1) binom(i+1, m-n)`.
pub fn breve_cil2() -> AugMatrix {
    AugMatrix::new(
        "breve-cil2",
        Flags {
            upper_triangular: true,
            row_support: Some(Arc::new(|n| 2 * n + 1)),
            col_support: Some(Arc::new(|m| m)),
            ..Flags::default()
        },
        |n, m| {
            let mut acc = BigInt::from(0);
            for i in -1..=n {
                acc += binomial(n + 1, i + 1) * binomial(i + 1, m - n);
            }
            Ok(sb(acc))
        },
    )
}

/// Full pair-cylinder matrix `cil2_{n,m} = binom(2n+2, m+1)`.
pub fn cil2() -> AugMatrix {
    AugMatrix::new(
        "cil2",
        Flags {
            row_support: Some(Arc::new(|n| 2 * n + 1)),
            ..Flags::default()
        },
        |n, m| Ok(sb(binomial(2 * n + 2, m + 1))),
    )
}

/// Open pair-cylinder: full minus ends.
pub fn cil2_partial() -> AugMatrix {
    let full = cil2();
    let ends = breve_cil2();
    AugMatrix::new(
        "cil2-partial",
        Flags {
            row_support: Some(Arc::new(|n| 2 * n + 1)),
            ..Flags::default()
        },
        move |n, m| Ok(full.try_entry(n, m)? - ends.try_entry(n, m)?),
    )
}

/// Anchored chain counts `(p+1)! S(n+1, p+1)`. Lower triangular with finite
/// rows, but its columns are *not* finitely supported: acting with it on a
/// sequence of unbounded support is a divergent sum.
pub fn breve_cad_plus() -> AugMatrix {
    AugMatrix::new(
        "breve-cad+",
        Flags {
            lower_triangular: true,
            row_support: Some(Arc::new(|n| n)),
            ..Flags::default()
        },
        |n, p| Ok(sb(breve_cad_plus_entry(n, p))),
    )
}

/// All strict chains of nonempty subsets of an `(n+1)`-element set.
pub fn cad_plus() -> AugMatrix {
    AugMatrix::new(
        "cad+",
        Flags {
            lower_triangular: true,
            row_support: Some(Arc::new(|n| n)),
            ..Flags::default()
        },
        |n, p| Ok(sb(cad_plus_entry(n, p))),
    )
}

/// Relaxed chains (cone of the strict rows).
pub fn cad() -> AugMatrix {
    AugMatrix::new(
        "cad",
        Flags {
            row_support: Some(Arc::new(|n| n + 1)),
            ..Flags::default()
        },
        |n, p| Ok(sb(cad_entry(n, p))),
    )
}

/// Looks up a named matrix by its CLI/table name.
pub fn by_name(name: &str) -> Option<AugMatrix> {
    Some(match name {
        "bin" => bin(),
        "bin-inv" => bin_inv(),
        "breve-cil" => breve_cil(),
        "cil" => cil(),
        "cil-partial" => cil_partial(),
        "breve-cil0" => breve_cil0(),
        "cil0" => cil0(),
        "cil0-partial" => cil0_partial(),
        "breve-cil2" => breve_cil2(),
        "cil2" => cil2(),
        "cil2-partial" => cil2_partial(),
        "breve-cad+" => breve_cad_plus(),
        "cad+" => cad_plus(),
        "cad" => cad(),
        _ => return None,
    })
}

pub const TABLE_NAMES: [&str; 14] = [
    "bin",
    "bin-inv",
    "breve-cil",
    "cil",
    "cil-partial",
    "breve-cil0",
    "cil0",
    "cil0-partial",
    "breve-cil2",
    "cil2",
    "cil2-partial",
    "breve-cad+",
    "cad+",
    "cad",
];

/// The triangle action `a ▷̃ B = (a · bin⁻¹) · B`: convert a cardinal
/// sequence to its simplex-count coordinates, then apply the construction
/// matrix. For the cylinder and chain matrices this is the algebraic shadow
/// of the corresponding geometric construction.
pub fn triangle_action(a: &AugSequence, b: &AugMatrix) -> Result<AugSequence> {
    let coords = bin_inv().dot(a)?;
    b.dot(&coords)
}

/// Subdivision on sequences: `sd(a) = a · breve-cad+`, which agrees with
/// the triangle action `a ▷̃ cad+` because `bin · breve-cad+ = cad+`.
/// Requires finite support: the columns of `breve-cad+` are unbounded, so
/// the defining sums diverge on sequences of unbounded support.
pub fn seq_sd(a: &AugSequence) -> Result<AugSequence> {
    if !a.has_finite_support() {
        return Err(crate::error::Error::InfiniteInput);
    }
    breve_cad_plus().dot(a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seqmat::sequence::scalar_int;

    #[test]
    fn named_lookup_is_total_on_table_names() {
        for name in TABLE_NAMES {
            let m = by_name(name).unwrap();
            assert_eq!(m.name(), name);
        }
        assert!(by_name("nonsense").is_none());
    }

    #[test]
    fn spot_values() {
        assert_eq!(bin().entry(4, 2), scalar_int(10));
        assert_eq!(bin_inv().entry(4, 2), scalar_int(10));
        assert_eq!(bin_inv().entry(4, 3), scalar_int(-5));
        assert_eq!(cil().entry(1, 1), scalar_int(5));
        assert_eq!(cil().entry(6, 3), scalar_int(280));
        assert_eq!(cil0().entry(2, 1), scalar_int(9));
        assert_eq!(breve_cil2().entry(2, 2), scalar_int(8));
        assert_eq!(cil2().entry(2, 3), scalar_int(15));
        assert_eq!(cad().entry(1, 1), scalar_int(5));
    }

    #[test]
    fn cil2_row_identity() {
        // the summed form of the ends plus the open part reproduces the
        // closed binomial form
        let ends = breve_cil2();
        let open = cil2_partial();
        let full = cil2();
        for n in -1..=12 {
            for m in -1..=30 {
                assert_eq!(
                    ends.entry(n, m) + open.entry(n, m),
                    full.entry(n, m),
                    "({n},{m})"
                );
            }
        }
    }

    #[test]
    fn breve_cil0_inverse_is_reciprocal_diagonal() {
        let inv = breve_cil0().invert_triangular().unwrap();
        for n in -1..=20 {
            assert_eq!(
                inv.entry(n, n),
                Scalar::new(BigInt::from(1), BigInt::from(n + 2))
            );
            assert_eq!(inv.entry(n, n + 1), scalar_int(0));
        }
    }

    #[test]
    fn triangle_action_examples() {
        // acting on the cardinal row of a unit simplex picks out the
        // matching matrix row, because gamma-seq(n) · bin⁻¹ = e_n
        let g1 = AugSequence::gamma_seq(1);
        let r = triangle_action(&g1, &cad_plus()).unwrap();
        assert!(r.try_eq(&AugSequence::from_ints(&[1, 3, 2])).unwrap());

        let g2 = AugSequence::gamma_seq(2);
        let r = triangle_action(&g2, &cad_plus()).unwrap();
        assert!(r.try_eq(&AugSequence::from_ints(&[1, 7, 12, 6])).unwrap());

        let r = triangle_action(&g1, &cil()).unwrap();
        assert!(r.try_eq(&AugSequence::from_ints(&[1, 4, 5, 2])).unwrap());

        // boundary of the 2-simplex: (1,3,3) ↦ coordinates (1,-3,3), then
        // the cylinder rows combine to (1,6,12,6)
        let s1 = AugSequence::boundary_seq(2);
        let coords = bin_inv().dot(&s1).unwrap();
        assert!(coords.try_eq(&AugSequence::from_ints(&[1, -3, 3])).unwrap());
        let r = triangle_action(&s1, &cil()).unwrap();
        assert!(r.try_eq(&AugSequence::from_ints(&[1, 6, 12, 6])).unwrap());
    }

    #[test]
    fn seq_sd_hexagon() {
        let h = AugSequence::from_ints(&[1, 6, 6]);
        let r = seq_sd(&h).unwrap();
        assert!(r.try_eq(&AugSequence::from_ints(&[1, 12, 12])).unwrap());
        // the two routes agree
        let via_action = triangle_action(&h, &cad_plus()).unwrap();
        assert!(via_action.try_eq(&r).unwrap());
    }

    #[test]
    fn gamma_row_under_bin_inv_is_basis() {
        // gamma-seq(n) · bin⁻¹ = e_n: the unit simplex has exactly one
        // nondegenerate top cell
        for n in -1..=8 {
            let coords = bin_inv().dot(&AugSequence::gamma_seq(n)).unwrap();
            assert!(coords.try_eq(&AugSequence::one_at(n)).unwrap(), "n={n}");
        }
    }

    #[test]
    fn cad_is_cone_of_cad_plus_rows() {
        use crate::seqmat::sequence::seq_cone;
        let cp = cad_plus();
        let c = cad();
        for n in -1..=7 {
            let row = AugSequence::from_entries((-1..=n).map(|p| cp.entry(n, p)).collect());
            let coned = seq_cone(&row);
            let crow = AugSequence::from_entries((-1..=n + 1).map(|p| c.entry(n, p)).collect());
            assert!(coned.try_eq(&crow).unwrap(), "n={n}");
        }
    }

    #[test]
    fn shifting_matrix_computes_join() {
        use crate::seqmat::sequence::{seq_join, shifting_matrix};
        let a = AugSequence::from_ints(&[1, 5, 2]);
        let b = AugSequence::from_ints(&[1, 3, 0, 4]);
        let r = shifting_matrix(&b).unwrap();
        let via_matrix = r.dot(&a).unwrap();
        let direct = seq_join(&a, &b).unwrap();
        assert!(via_matrix.try_eq(&direct).unwrap());
    }
}
