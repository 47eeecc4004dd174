//! Verification suites: published-table reproduction (with explicit
//! waivers for known typos in the source tables), the commutation theorem
//! between geometric actions and matrix actions, oracle cross-checks,
//! cylinder nesting, cone-of-subdivision, and OEIS closed forms.
//!
//! Each suite returns a deterministic [`Report`]; the CLI renders it and
//! the test suite asserts on it, so both always agree.

use crate::actions::{
    cone_sd_check, cosimp_cil, cosimp_cil0, cosimp_cil2, cosimp_sd, cosimp_yoneda,
    direct_cil_subcomplex, direct_sd_subcomplex, extend, CoSSObject, CosKind,
};
use crate::error::Result;
use crate::seqmat::sequence::scalar_big;
use crate::seqmat::{named, seq_cone, seq_join, AugMatrix, AugSequence};
use crate::sscore::subset::{random_subcomplex, SubsetComplex};
use num::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::HashSet;
use std::fmt::Write as _;

/// One named check with its outcome.
#[derive(Clone, Debug)]
pub struct Check {
    pub id: String,
    pub passed: bool,
    pub detail: String,
}

/// The outcome of a suite: checks (sorted by id) plus any waivers that
/// were applied. Waivers are always printed, never silent.
#[derive(Clone, Debug, Default)]
pub struct Report {
    pub suite: String,
    pub checks: Vec<Check>,
    pub waivers: Vec<String>,
}

impl Report {
    fn new(suite: &str) -> Report {
        Report {
            suite: suite.to_string(),
            ..Report::default()
        }
    }

    fn check(&mut self, id: &str, passed: bool, detail: String) {
        self.checks.push(Check {
            id: id.to_string(),
            passed,
            detail,
        });
    }

    fn finish(mut self) -> Report {
        self.checks.sort_by(|a, b| a.id.cmp(&b.id));
        self
    }

    fn absorb(&mut self, other: Report) {
        for mut c in other.checks {
            c.id = format!("{}/{}", other.suite, c.id);
            self.checks.push(c);
        }
        self.waivers.extend(other.waivers);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "suite {}", self.suite);
        for c in &self.checks {
            let tag = if c.passed { "PASS" } else { "FAIL" };
            let _ = writeln!(out, "{tag} {}: {}", c.id, c.detail);
        }
        for w in &self.waivers {
            let _ = writeln!(out, "WAIVER: {w}");
        }
        let npass = self.checks.iter().filter(|c| c.passed).count();
        let _ = writeln!(
            out,
            "{}: {npass}/{} checks passed, {} waiver(s)",
            if self.passed() { "ok" } else { "FAILED" },
            self.checks.len(),
            self.waivers.len()
        );
        out
    }
}

// ---------------------------------------------------------------------------
// Published tables, frozen cell-for-cell, with documented-typo waivers.

/// A frozen table: a named matrix window together with the published data
/// and the cells where the publication is known to contradict its own
/// closed formula (we then assert the formula value and record a waiver).
struct FrozenTable {
    id: &'static str,
    matrix: fn() -> AugMatrix,
    row_lo: i64,
    col_lo: i64,
    data: &'static [&'static [i64]],
    /// `(row, col, published_value)` cells waived as typos.
    waived: &'static [(i64, i64, i64)],
    waiver_note: &'static str,
}

const BREVE_CIL_ROWS: &[&[i64]] = &[
    &[1, 0, 0, 0, 0, 0, 0, 0],
    &[0, 2, 1, 0, 0, 0, 0, 0],
    &[0, 0, 3, 2, 0, 0, 0, 0],
    &[0, 0, 0, 4, 3, 0, 0, 0],
    &[0, 0, 0, 0, 5, 4, 0, 0],
    &[0, 0, 0, 0, 0, 6, 5, 0],
    &[0, 0, 0, 0, 0, 0, 7, 6],
    &[0, 0, 0, 0, 0, 0, 0, 8],
];

const CIL_PARTIAL_ROWS: &[&[i64]] = &[
    &[0, 0, 0, 0, 0, 0, 0, 0],
    &[1, 0, 0, 0, 0, 0, 0, 0],
    &[1, 4, 2, 0, 0, 0, 0, 0],
    &[1, 6, 12, 6, 0, 0, 0, 0],
    &[1, 8, 22, 28, 12, 0, 0, 0],
    &[1, 10, 35, 60, 55, 20, 0, 0],
    &[1, 12, 51, 110, 135, 96, 30, 0],
    &[1, 14, 70, 182, 280, 266, 154, 42],
];

const CIL_ROWS: &[&[i64]] = &[
    &[1, 0, 0, 0, 0, 0, 0, 0, 0],
    &[1, 2, 1, 0, 0, 0, 0, 0, 0],
    &[1, 4, 5, 2, 0, 0, 0, 0, 0],
    &[1, 6, 12, 10, 3, 0, 0, 0, 0],
    &[1, 8, 22, 28, 17, 4, 0, 0, 0],
    &[1, 10, 35, 60, 55, 26, 5, 0, 0],
    &[1, 12, 51, 110, 135, 96, 37, 6, 0],
    // the (6, 3) cell is published as 200; the row formula gives 280
    &[1, 14, 70, 182, 280, 266, 154, 50, 7],
];

const BREVE_CIL0_ROWS: &[&[i64]] = &[
    &[1, 0, 0, 0, 0, 0, 0, 0],
    &[0, 2, 0, 0, 0, 0, 0, 0],
    &[0, 0, 3, 0, 0, 0, 0, 0],
    &[0, 0, 0, 4, 0, 0, 0, 0],
    &[0, 0, 0, 0, 5, 0, 0, 0],
    &[0, 0, 0, 0, 0, 6, 0, 0],
    &[0, 0, 0, 0, 0, 0, 7, 0],
    &[0, 0, 0, 0, 0, 0, 0, 8],
];

const CIL0_PARTIAL_ROWS: &[&[i64]] = &[
    &[0, 0, 0, 0, 0, 0, 0, 0],
    &[1, 0, 0, 0, 0, 0, 0, 0],
    &[1, 4, 0, 0, 0, 0, 0, 0],
    &[1, 6, 9, 0, 0, 0, 0, 0],
    &[1, 8, 18, 16, 0, 0, 0, 0],
    &[1, 10, 30, 40, 25, 0, 0, 0],
    &[1, 12, 45, 80, 75, 36, 0, 0],
    &[1, 14, 63, 140, 175, 126, 49, 0],
];

const CIL0_ROWS: &[&[i64]] = &[
    &[1, 0, 0, 0, 0, 0, 0, 0],
    &[1, 2, 0, 0, 0, 0, 0, 0],
    &[1, 4, 3, 0, 0, 0, 0, 0],
    &[1, 6, 9, 4, 0, 0, 0, 0],
    &[1, 8, 18, 16, 5, 0, 0, 0],
    &[1, 10, 30, 40, 25, 6, 0, 0],
    &[1, 12, 45, 80, 75, 36, 7, 0],
    &[1, 14, 63, 140, 175, 126, 49, 8],
];

const BREVE_CIL2_ROWS: &[&[i64]] = &[
    &[1, 0, 0, 0, 0, 0, 0, 0],
    &[0, 2, 1, 0, 0, 0, 0, 0],
    &[0, 0, 4, 4, 1, 0, 0, 0],
    &[0, 0, 0, 8, 12, 6, 1, 0],
    &[0, 0, 0, 0, 16, 32, 24, 8],
    &[0, 0, 0, 0, 0, 32, 80, 80],
    &[0, 0, 0, 0, 0, 0, 64, 192],
    &[0, 0, 0, 0, 0, 0, 0, 128],
];

const CIL2_PARTIAL_ROWS: &[&[i64]] = &[
    &[0, 0, 0, 0, 0, 0, 0, 0],
    &[1, 0, 0, 0, 0, 0, 0, 0],
    &[1, 4, 2, 0, 0, 0, 0, 0],
    &[1, 6, 15, 12, 3, 0, 0, 0],
    &[1, 8, 28, 56, 54, 24, 4, 0],
    &[1, 10, 45, 120, 210, 220, 130, 40],
    &[1, 12, 66, 220, 495, 792, 860, 600],
    &[1, 14, 91, 364, 1001, 2002, 3003, 3304],
    &[1, 16, 120, 560, 1820, 4368, 8008, 11440],
];

const CIL2_ROWS: &[&[i64]] = &[
    &[1, 0, 0, 0, 0, 0, 0, 0],
    &[1, 2, 1, 0, 0, 0, 0, 0],
    &[1, 4, 6, 4, 1, 0, 0, 0],
    &[1, 6, 15, 20, 15, 6, 1, 0],
    &[1, 8, 28, 56, 70, 56, 28, 8],
    // trailing cells of rows 4 and 5 are published as 120, 45 and 495,
    // 220; the binomial formula gives 210, 120 and 924, 792
    &[1, 10, 45, 120, 210, 252, 210, 120],
    &[1, 12, 66, 220, 495, 792, 924, 792],
    &[1, 14, 91, 364, 1001, 2002, 3003, 3432],
];

const CAD_PLUS_ROWS: &[&[i64]] = &[
    &[1, 0, 0, 0, 0, 0, 0, 0, 0],
    &[1, 1, 0, 0, 0, 0, 0, 0, 0],
    &[1, 3, 2, 0, 0, 0, 0, 0, 0],
    &[1, 7, 12, 6, 0, 0, 0, 0, 0],
    &[1, 15, 50, 60, 24, 0, 0, 0, 0],
    &[1, 31, 180, 390, 360, 120, 0, 0, 0],
    &[1, 63, 602, 2100, 3360, 2520, 720, 0, 0],
    &[1, 127, 1932, 10206, 25200, 31920, 20160, 5040, 0],
];

const BREVE_CAD_PLUS_ROWS: &[&[i64]] = &[
    &[1, 0, 0, 0, 0, 0, 0, 0, 0],
    &[0, 1, 0, 0, 0, 0, 0, 0, 0],
    &[0, 1, 2, 0, 0, 0, 0, 0, 0],
    &[0, 1, 6, 6, 0, 0, 0, 0, 0],
    &[0, 1, 14, 36, 24, 0, 0, 0, 0],
    &[0, 1, 30, 150, 240, 120, 0, 0, 0],
    &[0, 1, 62, 540, 1560, 1800, 720, 0, 0],
    &[0, 1, 126, 1806, 8400, 16800, 15120, 5040, 0],
];

const CAD_ROWS: &[&[i64]] = &[
    &[1, 1, 0, 0, 0, 0, 0, 0, 0],
    &[1, 2, 1, 0, 0, 0, 0, 0, 0],
    &[1, 4, 5, 2, 0, 0, 0, 0, 0],
    &[1, 8, 19, 18, 6, 0, 0, 0, 0],
    &[1, 16, 65, 110, 84, 24, 0, 0, 0],
    &[1, 32, 211, 570, 750, 480, 120, 0, 0],
];

// The four operator displays shown alongside the definition of the matrix
// action (rows -1..3, columns -1..5).
const INTRO_BREVE_CIL: &[&[i64]] = &[
    &[1, 0, 0, 0, 0, 0, 0],
    &[0, 2, 1, 0, 0, 0, 0],
    &[0, 0, 3, 2, 0, 0, 0],
    &[0, 0, 0, 4, 3, 0, 0],
    &[0, 0, 0, 0, 5, 4, 0],
];

const INTRO_BREVE_CIL0: &[&[i64]] = &[
    &[1, 0, 0, 0, 0, 0, 0],
    &[0, 2, 0, 0, 0, 0, 0],
    &[0, 0, 3, 0, 0, 0, 0],
    &[0, 0, 0, 4, 0, 0, 0],
    &[0, 0, 0, 0, 5, 0, 0],
];

const INTRO_BREVE_CIL2: &[&[i64]] = &[
    &[1, 0, 0, 0, 0, 0, 0],
    &[0, 2, 1, 0, 0, 0, 0],
    &[0, 0, 4, 4, 1, 0, 0],
    &[0, 0, 0, 8, 12, 6, 1],
    &[0, 0, 0, 0, 16, 32, 24],
];

const INTRO_BREVE_SD: &[&[i64]] = &[
    &[1, 0, 0, 0, 0, 0, 0],
    &[0, 1, 0, 0, 0, 0, 0],
    &[0, 1, 2, 0, 0, 0, 0],
    &[0, 1, 6, 6, 0, 0, 0],
    &[0, 1, 14, 36, 24, 0, 0],
];

const FROZEN_TABLES: &[FrozenTable] = &[
    FrozenTable {
        id: "breve-cil-table",
        matrix: named::breve_cil,
        row_lo: -1,
        col_lo: -1,
        data: BREVE_CIL_ROWS,
        waived: &[],
        waiver_note: "",
    },
    FrozenTable {
        id: "cil-boundary-table",
        matrix: named::cil_partial,
        row_lo: -1,
        col_lo: -1,
        data: CIL_PARTIAL_ROWS,
        waived: &[],
        waiver_note: "",
    },
    FrozenTable {
        id: "cil-table",
        matrix: named::cil,
        row_lo: -1,
        col_lo: -1,
        data: CIL_ROWS,
        waived: &[(6, 3, 200)],
        waiver_note: "cil row 6: the (6,3) cell is published as 200; \
                      the closed formula (and the reconstruction identity) give 280",
    },
    FrozenTable {
        id: "breve-cil0-table",
        matrix: named::breve_cil0,
        row_lo: -1,
        col_lo: -1,
        data: BREVE_CIL0_ROWS,
        waived: &[],
        waiver_note: "",
    },
    FrozenTable {
        id: "cil0-boundary-table",
        matrix: named::cil0_partial,
        row_lo: -1,
        col_lo: -1,
        data: CIL0_PARTIAL_ROWS,
        waived: &[],
        waiver_note: "",
    },
    FrozenTable {
        id: "cil0-table",
        matrix: named::cil0,
        row_lo: -1,
        col_lo: -1,
        data: CIL0_ROWS,
        waived: &[],
        waiver_note: "",
    },
    FrozenTable {
        id: "breve-cil2-table",
        matrix: named::breve_cil2,
        row_lo: -1,
        col_lo: -1,
        data: BREVE_CIL2_ROWS,
        waived: &[],
        waiver_note: "",
    },
    FrozenTable {
        id: "cil2-boundary-table",
        matrix: named::cil2_partial,
        row_lo: -1,
        col_lo: -1,
        data: CIL2_PARTIAL_ROWS,
        waived: &[],
        waiver_note: "",
    },
    FrozenTable {
        id: "cil2-table",
        matrix: named::cil2,
        row_lo: -1,
        col_lo: -1,
        data: CIL2_ROWS,
        waived: &[(4, 5, 120), (4, 6, 45), (5, 5, 495), (5, 6, 220)],
        waiver_note: "cil2 rows 4-5: the trailing cells are published as \
                      120, 45 and 495, 220; the binomial formula binom(2n+2, m+1) \
                      gives 210, 120 and 924, 792",
    },
    FrozenTable {
        id: "cad-plus-table",
        matrix: named::cad_plus,
        row_lo: -1,
        col_lo: -1,
        data: CAD_PLUS_ROWS,
        waived: &[],
        waiver_note: "",
    },
    FrozenTable {
        id: "breve-cad-plus-table",
        matrix: named::breve_cad_plus,
        row_lo: -1,
        col_lo: -1,
        data: BREVE_CAD_PLUS_ROWS,
        waived: &[],
        waiver_note: "",
    },
    FrozenTable {
        id: "cad-table",
        matrix: named::cad,
        row_lo: -1,
        col_lo: -1,
        data: CAD_ROWS,
        waived: &[],
        waiver_note: "",
    },
    FrozenTable {
        id: "intro-breve-cil-display",
        matrix: named::breve_cil,
        row_lo: -1,
        col_lo: -1,
        data: INTRO_BREVE_CIL,
        waived: &[],
        waiver_note: "",
    },
    FrozenTable {
        id: "intro-breve-cil0-display",
        matrix: named::breve_cil0,
        row_lo: -1,
        col_lo: -1,
        data: INTRO_BREVE_CIL0,
        waived: &[],
        waiver_note: "",
    },
    FrozenTable {
        id: "intro-breve-cil2-display",
        matrix: named::breve_cil2,
        row_lo: -1,
        col_lo: -1,
        data: INTRO_BREVE_CIL2,
        waived: &[],
        waiver_note: "",
    },
    FrozenTable {
        id: "intro-breve-sd-display",
        matrix: named::breve_cad_plus,
        row_lo: -1,
        col_lo: -1,
        data: INTRO_BREVE_SD,
        waived: &[],
        waiver_note: "",
    },
];

fn int(v: i64) -> crate::seqmat::Scalar {
    crate::seqmat::sequence::scalar_int(v)
}

/// Cell-for-cell reproduction of the published tables, with explicit
/// waivers for the documented typos.
pub fn verify_tables() -> Report {
    let mut rep = Report::new("tables");
    for t in FROZEN_TABLES {
        let mat = (t.matrix)();
        let mut bad = Vec::new();
        let mut cells = 0usize;
        for (r, row) in t.data.iter().enumerate() {
            for (c, &expected) in row.iter().enumerate() {
                // for waived cells the frozen data already carries the
                // formula value; the published value lives in `waived`
                let n = t.row_lo + r as i64;
                let m = t.col_lo + c as i64;
                cells += 1;
                if mat.entry(n, m) != int(expected) {
                    bad.push(format!("({n},{m}): got {}, want {expected}", mat.entry(n, m)));
                }
            }
        }
        let detail = if bad.is_empty() {
            format!("{cells} cells match")
        } else {
            format!("mismatches: {}", bad.join("; "))
        };
        rep.check(t.id, bad.is_empty(), detail);
        if !t.waived.is_empty() {
            let cells: Vec<String> = t
                .waived
                .iter()
                .map(|(n, m, pub_v)| {
                    format!("({n},{m}) published {pub_v}, asserted {}", mat.entry(*n, *m))
                })
                .collect();
            rep.waivers
                .push(format!("{} [{}]", t.waiver_note, cells.join(", ")));
        }
    }
    rep.finish()
}

// ---------------------------------------------------------------------------
// Commutation of the sequential cardinal functor with the actions.

fn kinds() -> [(CoSSObject, &'static str); 5] {
    [
        (cosimp_yoneda(), "yoneda"),
        (cosimp_cil(), "cil"),
        (cosimp_cil0(), "cil0"),
        (cosimp_cil2(), "cil2"),
        (cosimp_sd(), "sd"),
    ]
}

/// The commutation theorem `|X ▷̃ Z| = |X| ▷̃ |Z|` on a random corpus of
/// subcomplexes, plus the join/cone laws, monoidality at cardinal level,
/// the reconstruction identity, and the duplication counterexample.
pub fn verify_commutation(n_max: i64, samples: usize, seed: u64) -> Result<Report> {
    let mut rep = Report::new("commutation");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let zs = kinds();
    let zmats: Vec<AugMatrix> = zs.iter().map(|(z, _)| z.cardinal_matrix()).collect();

    let mut fails: Vec<Vec<String>> = vec![Vec::new(); zs.len()];
    let mut join_fails = Vec::new();
    let mut cone_fails = Vec::new();
    for _ in 0..samples {
        let n = rng.gen_range(0..=n_max);
        let x = random_subcomplex(&mut rng, n);
        let xs = x.to_augsset();
        let a = xs.cardinal();
        for (i, (z, zname)) in zs.iter().enumerate() {
            let e = extend(&xs, z)?;
            e.validate()?;
            let geo = e.cardinal();
            let alg = named::triangle_action(&a, &zmats[i])?;
            if !geo.try_eq(&alg)? {
                fails[i].push(format!("{zname} on |X| = {a:?}"));
            }
            if *zname == "yoneda" && !geo.try_eq(&a)? {
                fails[i].push(format!("yoneda identity on |X| = {a:?}"));
            }
        }
        // join and cone laws over the same corpus
        let y = random_subcomplex(&mut rng, n);
        let ys = y.to_augsset();
        let j = xs.join(&ys);
        j.validate()?;
        if !j.cardinal().try_eq(&seq_join(&a, &ys.cardinal())?)? {
            join_fails.push(format!("|X|={a:?}, |Y|={:?}", ys.cardinal()));
        }
        let c = xs.cone_left();
        c.validate()?;
        if !c.cardinal().try_eq(&seq_cone(&a))? {
            cone_fails.push(format!("|X|={a:?}"));
        }
    }
    for (i, (_, zname)) in zs.iter().enumerate() {
        rep.check(
            &format!("cardinal-commutes-{zname}"),
            fails[i].is_empty(),
            if fails[i].is_empty() {
                format!("{samples} random subcomplexes, n <= {n_max}")
            } else {
                fails[i].join("; ")
            },
        );
    }
    rep.check(
        "join-law",
        join_fails.is_empty(),
        if join_fails.is_empty() {
            format!("{samples} random pairs")
        } else {
            join_fails.join("; ")
        },
    );
    rep.check(
        "cone-law",
        cone_fails.is_empty(),
        if cone_fails.is_empty() {
            format!("{samples} random subcomplexes")
        } else {
            cone_fails.join("; ")
        },
    );

    // monoidality at cardinal level, (X ⊞ Y) ▷̃ Z vs (X ▷̃ Z) ⊞ (Y ▷̃ Z),
    // for the monoidal co-semi-simplicial objects (Yoneda and Cil₂; the
    // other cylinders and Sd are not monoidal functors and the identity
    // genuinely fails for them — see the companion counterexample check).
    // Pairs are drawn inside Γ₊[3] and kept when the join stays
    // low-dimensional enough to materialize quickly.
    let monoidal = [(cosimp_yoneda(), "yoneda"), (cosimp_cil2(), "cil2")];
    let mut mono_fails = Vec::new();
    let mut mono_count = 0usize;
    while mono_count < 20 {
        let x = random_subcomplex(&mut rng, 3).to_augsset();
        let y = random_subcomplex(&mut rng, 3).to_augsset();
        let jdim = match (x.dim(), y.dim()) {
            (Some(a), Some(b)) => a + b + 1,
            _ => -2,
        };
        if jdim > 5 {
            continue;
        }
        mono_count += 1;
        let j = x.join(&y);
        for (z, zname) in &monoidal {
            let lhs = extend(&j, z)?.cardinal();
            let rhs = seq_join(&extend(&x, z)?.cardinal(), &extend(&y, z)?.cardinal())?;
            if !lhs.try_eq(&rhs)? {
                mono_fails.push(format!("{zname}: |X|={:?}, |Y|={:?}", x.cardinal(), y.cardinal()));
            }
        }
    }
    rep.check(
        "monoidality",
        mono_fails.is_empty(),
        if mono_fails.is_empty() {
            format!("{mono_count} random pairs, yoneda and cil2")
        } else {
            mono_fails.join("; ")
        },
    );

    // the standard cylinder is not monoidal: already on two points the
    // identity fails, |Cil(pt ⊞ pt)| = (1,4,5,2) vs |Cil pt| ⊞ |Cil pt| =
    // (1,4,6,4,1)
    let pt = SubsetComplex::gamma_complex(0).to_augsset();
    let cil = cosimp_cil();
    let lhs = extend(&pt.join(&pt), &cil)?.cardinal();
    let rhs = seq_join(&extend(&pt, &cil)?.cardinal(), &extend(&pt, &cil)?.cardinal())?;
    rep.check(
        "monoidality-cil-counterexample",
        !lhs.try_eq(&rhs)?,
        format!("{lhs:?} differs from {rhs:?}"),
    );

    // reconstruction: |Z.at(n)| = Σ_i binom(n+1, i+1) · interior_count(Z, i)
    let mut recon_fails = Vec::new();
    for (z, zname) in &zs {
        for n in -1..=4 {
            let mut acc = AugSequence::zero();
            for i in -1..=n {
                let weight = scalar_big(crate::combinat::binomial(n + 1, i + 1));
                acc = acc.add(&z.interior_count(i)?.scale(&weight)?)?;
            }
            if !acc.try_eq(&z.at(n).cardinal())? {
                recon_fails.push(format!("{zname} at n={n}"));
            }
        }
    }
    rep.check(
        "reconstruction",
        recon_fails.is_empty(),
        if recon_fails.is_empty() {
            "binomial sums of interior counts rebuild |Z.at(n)|, n <= 4".into()
        } else {
            recon_fails.join("; ")
        },
    );

    // duplication counterexample: join(X, X) is not the 2-cylinder
    let b = SubsetComplex::boundary_complex(2).to_augsset();
    let dup = b.join(&b).cardinal();
    let c2 = extend(&b, &cosimp_cil2())?.cardinal();
    let want_dup = AugSequence::from_ints(&[1, 6, 15, 18, 9]);
    let want_c2 = AugSequence::from_ints(&[1, 6, 15, 12, 3]);
    rep.check(
        "dup-counterexample",
        dup.try_eq(&want_dup)? && c2.try_eq(&want_c2)? && !dup.try_eq(&c2)?,
        format!("|Dup ∂Γ₊[2]| = {dup:?} differs from |Cil₂ ∂Γ₊[2]| = {c2:?}"),
    );
    Ok(rep.finish())
}

// ---------------------------------------------------------------------------
// Oracle cross-checks.

/// Direct constructions vs the colimit, interior counts vs the breve
/// matrices, and the unit-simplex extension identity.
pub fn verify_oracles(samples: usize, seed: u64) -> Result<Report> {
    let mut rep = Report::new("oracles");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pair_kinds = [
        (cosimp_cil(), CosKind::Cil, "cil"),
        (cosimp_cil0(), CosKind::Cil0, "cil0"),
        (cosimp_cil2(), CosKind::Cil2, "cil2"),
    ];
    let sd = cosimp_sd();
    let mut fails: Vec<Vec<String>> = vec![Vec::new(); 4];
    for _ in 0..samples {
        let n = rng.gen_range(0..=4i64);
        let x = random_subcomplex(&mut rng, n);
        let xs = x.to_augsset();
        for (i, (z, kind, name)) in pair_kinds.iter().enumerate() {
            let direct = direct_cil_subcomplex(&x, *kind);
            direct.validate()?;
            if !direct.cardinal().try_eq(&extend(&xs, z)?.cardinal())? {
                fails[i].push(format!("{name} on |X| = {:?}", xs.cardinal()));
            }
        }
        let direct = direct_sd_subcomplex(&x);
        direct.validate()?;
        if !direct.cardinal().try_eq(&extend(&xs, &sd)?.cardinal())? {
            fails[3].push(format!("sd on |X| = {:?}", xs.cardinal()));
        }
    }
    for (i, name) in ["cil", "cil0", "cil2", "sd"].iter().enumerate() {
        rep.check(
            &format!("direct-vs-extend-{name}"),
            fails[i].is_empty(),
            if fails[i].is_empty() {
                format!("{samples} random subcomplexes, ambient <= 4")
            } else {
                fails[i].join("; ")
            },
        );
    }

    // interior counts against the breve matrices
    let breves = [
        (cosimp_cil(), named::breve_cil(), "cil"),
        (cosimp_cil0(), named::breve_cil0(), "cil0"),
        (cosimp_cil2(), named::breve_cil2(), "cil2"),
        (cosimp_sd(), named::breve_cad_plus(), "sd"),
    ];
    let mut ic_fails = Vec::new();
    for (z, mat, name) in &breves {
        for n in -1..=4 {
            let row = AugSequence::from_entries(
                (-1..=z.kind().max_level(n)).map(|m| mat.entry(n, m)).collect(),
            );
            if !z.interior_count(n)?.try_eq(&row)? {
                ic_fails.push(format!("{name} row {n}"));
            }
        }
    }
    let y = cosimp_yoneda();
    for n in -1..=4 {
        if !y.interior_count(n)?.try_eq(&AugSequence::one_at(n))? {
            ic_fails.push(format!("yoneda row {n}"));
        }
    }
    rep.check(
        "interior-counts",
        ic_fails.is_empty(),
        if ic_fails.is_empty() {
            "interior counts reproduce the breve rows, n <= 4".into()
        } else {
            ic_fails.join("; ")
        },
    );

    // extending a unit simplex recovers Z.at(n)
    let mut unit_fails = Vec::new();
    for (z, name) in kinds() {
        for n in -1..=4 {
            let g = SubsetComplex::gamma_complex(n).to_augsset();
            if !extend(&g, &z)?.cardinal().try_eq(&z.at(n).cardinal())? {
                unit_fails.push(format!("{name} at n={n}"));
            }
        }
    }
    rep.check(
        "unit-extension",
        unit_fails.is_empty(),
        if unit_fails.is_empty() {
            "extend(Γ₊[n], Z) has the cardinal of Z.at(n), n <= 4".into()
        } else {
            unit_fails.join("; ")
        },
    );
    Ok(rep.finish())
}

// ---------------------------------------------------------------------------
// Nesting of the cylinder objects.

/// Levelwise inclusion `Cil₀Γ₊[n]_m ⊆ CilΓ₊[n]_m ⊆ Cil₂Γ₊[n]_m`.
pub fn verify_nesting(n_max: i64) -> Report {
    let mut rep = Report::new("nesting");
    let c0 = cosimp_cil0();
    let c1 = cosimp_cil();
    let c2 = cosimp_cil2();
    let mut fails = Vec::new();
    let mut checked = 0usize;
    for n in -1..=n_max {
        for m in -1..=c2.kind().max_level(n) {
            let s0: HashSet<_> = c0.level_simplices(n, m).into_iter().collect();
            let s1: HashSet<_> = c1.level_simplices(n, m).into_iter().collect();
            let s2: HashSet<_> = c2.level_simplices(n, m).into_iter().collect();
            checked += 1;
            if !s0.is_subset(&s1) {
                fails.push(format!("Cil₀ ⊄ Cil at (n={n}, m={m})"));
            }
            if !s1.is_subset(&s2) {
                fails.push(format!("Cil ⊄ Cil₂ at (n={n}, m={m})"));
            }
        }
    }
    rep.check(
        "cil0-in-cil-in-cil2",
        fails.is_empty(),
        if fails.is_empty() {
            format!("{checked} levels over n <= {n_max}")
        } else {
            fails.join("; ")
        },
    );
    rep.finish()
}

// ---------------------------------------------------------------------------
// Cone of the subdivided boundary.

/// `|Con_l Sd ∂Γ₊[n]| = |Sd Γ₊[n]|`, and both agree with the chain-count
/// row.
pub fn verify_cone_sd(n_max: i64) -> Result<Report> {
    let mut rep = Report::new("cone-sd");
    let cad_plus = named::cad_plus();
    for n in 0..=n_max {
        let outcome = cone_sd_check(n);
        match outcome {
            Ok(card) => {
                let row = AugSequence::from_entries(
                    (-1..=n).map(|m| cad_plus.entry(n, m)).collect(),
                );
                let matches_row = card.try_eq(&row)?;
                rep.check(
                    &format!("cone-sd-n{n}"),
                    matches_row,
                    format!("common cardinal {card:?}"),
                );
            }
            Err(e) => rep.check(&format!("cone-sd-n{n}"), false, e.to_string()),
        }
    }
    Ok(rep.finish())
}

// ---------------------------------------------------------------------------
// OEIS closed forms for the cylinder matrix columns.

pub const OEIS_CHECKS: [&str; 7] = [
    "pentagonal",
    "A006331",
    "A212415",
    "matchstick",
    "A210440",
    "hexagonal",
    "A002492",
];

fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

/// One OEIS column check: compares matrix entries against the closed form
/// for `n` from 1 to `count`.
pub fn verify_oeis(check: &str, count: i64) -> Option<Report> {
    let mut rep = Report::new("oeis");
    // (matrix, row for index n, column, closed form, formula text)
    type Form = (AugMatrix, fn(i64) -> i64, i64, fn(i64) -> BigInt, &'static str);
    let spec: Form = match check {
        "pentagonal" => (
            named::cil(),
            |n| n - 1,
            1,
            |n| big(n) * big(3 * n - 1) / big(2),
            "|CilΓ₊[n-1]|₁ = n(3n-1)/2 (pentagonal numbers)",
        ),
        "A006331" => (
            named::cil(),
            |n| n,
            2,
            |n| big(n) * big(n + 1) * big(2 * n + 1) / big(3),
            "|CilΓ₊[n]|₂ = n(n+1)(2n+1)/3",
        ),
        "A212415" => (
            named::cil(),
            |n| n,
            3,
            |n| big(n - 1) * big(n) * big(n + 1) * big(5 * n + 2) / big(24),
            "|CilΓ₊[n]|₃ = (n-1)n(n+1)(5n+2)/24",
        ),
        "matchstick" => (
            named::cil0(),
            |n| n,
            1,
            |n| big(3) * big(n) * big(n + 1) / big(2),
            "|Cil₀Γ₊[n]|₁ = 3n(n+1)/2 (matchstick numbers)",
        ),
        "A210440" => (
            named::cil0(),
            |n| n + 1,
            2,
            |n| big(2) * big(n) * big(n + 1) * big(n + 2) / big(3),
            "|Cil₀Γ₊[n+1]|₂ = 2n(n+1)(n+2)/3",
        ),
        "hexagonal" => (
            named::cil2(),
            |n| n - 1,
            1,
            |n| big(n) * big(2 * n - 1),
            "|Cil₂Γ₊[n-1]|₁ = n(2n-1) (hexagonal numbers)",
        ),
        "A002492" => (
            named::cil2(),
            |n| n,
            2,
            |n| big(2) * big(n) * big(n + 1) * big(2 * n + 1) / big(3),
            "|Cil₂Γ₊[n]|₂ = 2n(n+1)(2n+1)/3",
        ),
        _ => return None,
    };
    let (mat, row, col, form, text) = spec;
    let mut bad = Vec::new();
    for n in 1..=count {
        let got = mat.entry(row(n), col);
        let want = scalar_big(form(n));
        if got != want {
            bad.push(format!("n={n}: column gives {got}, formula gives {want}"));
        }
    }
    rep.check(
        check,
        bad.is_empty(),
        if bad.is_empty() {
            format!("{text}, n = 1..{count}")
        } else {
            bad.join("; ")
        },
    );
    Some(rep.finish())
}

/// All seven OEIS column checks in one report.
pub fn verify_oeis_all(count: i64) -> Report {
    let mut rep = Report::new("oeis");
    for check in OEIS_CHECKS {
        let one = verify_oeis(check, count).expect("known check name");
        rep.checks.extend(one.checks);
        rep.waivers.extend(one.waivers);
    }
    rep.finish()
}

/// Runs every suite with the standard sizes; `n` bounds the ambient
/// dimension of the random corpus.
pub fn verify_all(n: i64, seed: u64) -> Result<Report> {
    let mut rep = Report::new("all");
    rep.absorb(verify_tables());
    rep.absorb(verify_commutation(n.min(5), 200, seed)?);
    rep.absorb(verify_oracles(100, seed ^ 0x9e3779b97f4a7c15)?);
    rep.absorb(verify_nesting(n.min(6)));
    rep.absorb(verify_cone_sd(n.min(5))?);
    rep.absorb(verify_oeis_all(50));
    Ok(rep.finish())
}
