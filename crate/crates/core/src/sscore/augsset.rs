//! Augmented semi-simplicial sets: levels indexed from -1, face maps only.

use crate::error::{Error, Result};
use crate::seqmat::sequence::AugSequence;

/// One level of an augmented semi-simplicial set.
///
/// `faces[i][s]` is the index of the `i`-th face of the `s`-th simplex in
/// the next-lower level. Level -1 has no face maps; level `n >= 0` carries
/// `n + 1` of them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Level {
    pub size: usize,
    pub faces: Vec<Vec<usize>>,
}

/// An augmented semi-simplicial set, stored level by level.
///
/// `levels[k]` holds level `n = k - 1`; trailing empty levels are trimmed,
/// so the totally empty object has no levels at all.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AugSSet {
    levels: Vec<Level>,
}

impl AugSSet {
    pub fn from_levels(mut levels: Vec<Level>) -> Self {
        while levels.last().is_some_and(|l| l.size == 0) {
            levels.pop();
        }
        AugSSet { levels }
    }

    /// The initial object: empty at every level.
    pub fn empty() -> Self {
        AugSSet { levels: vec![] }
    }

    /// The unit of the join: one simplex at level -1, nothing else.
    pub fn unit() -> Self {
        AugSSet {
            levels: vec![Level {
                size: 1,
                faces: vec![],
            }],
        }
    }

    /// The augmented point `Γ₊[0]`.
    pub fn point() -> Self {
        AugSSet {
            levels: vec![
                Level {
                    size: 1,
                    faces: vec![],
                },
                Level {
                    size: 1,
                    faces: vec![vec![0]],
                },
            ],
        }
    }

    pub fn size(&self, n: i64) -> usize {
        if n < -1 {
            return 0;
        }
        self.levels
            .get((n + 1) as usize)
            .map_or(0, |l| l.size)
    }

    pub fn level(&self, n: i64) -> Option<&Level> {
        if n < -1 {
            return None;
        }
        self.levels.get((n + 1) as usize)
    }

    /// Image of simplex `s` at level `n` under the `i`-th face map.
    pub fn face(&self, n: i64, i: usize, s: usize) -> usize {
        self.levels[(n + 1) as usize].faces[i][s]
    }

    /// Top nonempty level; `None` is the dimension of the empty object.
    pub fn dim(&self) -> Option<i64> {
        if self.levels.is_empty() {
            None
        } else {
            Some(self.levels.len() as i64 - 2)
        }
    }

    /// Level-wise cardinalities as an augmented sequence.
    pub fn cardinal(&self) -> AugSequence {
        AugSequence::from_ints(
            &self
                .levels
                .iter()
                .map(|l| l.size as i64)
                .collect::<Vec<_>>(),
        )
    }

    /// Checks structural well-formedness: face-map arity and index ranges,
    /// the nonempty-prefix property, and the semi-simplicial identity
    /// `d_i d_j = d_{j-1} d_i` for `i < j`.
    pub fn validate(&self) -> Result<()> {
        for (k, lvl) in self.levels.iter().enumerate() {
            let n = k as i64 - 1;
            let expected_faces = if n < 0 { 0 } else { (n + 1) as usize };
            if lvl.faces.len() != expected_faces {
                return Err(Error::Validation(format!(
                    "level {n}: expected {expected_faces} face maps, found {}",
                    lvl.faces.len()
                )));
            }
            if n >= 0 {
                let below = self.size(n - 1);
                if lvl.size > 0 && below == 0 {
                    return Err(Error::Validation(format!(
                        "level {n} nonempty but level {} empty",
                        n - 1
                    )));
                }
                for (i, fi) in lvl.faces.iter().enumerate() {
                    if fi.len() != lvl.size {
                        return Err(Error::Validation(format!(
                            "level {n}, face {i}: defined on {} of {} simplices",
                            fi.len(),
                            lvl.size
                        )));
                    }
                    for (s, &t) in fi.iter().enumerate() {
                        if t >= below {
                            return Err(Error::Validation(format!(
                                "level {n}, face {i} of simplex {s}: target {t} out of range \
                                 (level {} has {below} simplices)",
                                n - 1
                            )));
                        }
                    }
                }
            }
            if n >= 1 {
                for s in 0..lvl.size {
                    for j in 1..=(n as usize) {
                        for i in 0..j {
                            let a = self.face(n - 1, i, self.face(n, j, s));
                            let b = self.face(n - 1, j - 1, self.face(n, i, s));
                            if a != b {
                                return Err(Error::Validation(format!(
                                    "identity d_{i} d_{j} = d_{} d_{i} fails at level {n}, \
                                     simplex {s}",
                                    j - 1
                                )));
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// The join `X ⊞ Y`: level `m` is the disjoint union of `X_p × Y_q`
    /// over `p + q = m - 1` with `p, q >= -1`, blocks ordered by `p` and
    /// pairs ordered lexicographically. Face `d_i` acts on the `X` factor
    /// for `i <= p` and on the `Y` factor otherwise.
    pub fn join(&self, other: &AugSSet) -> AugSSet {
        let dx = self.dim();
        let dy = other.dim();
        let (Some(dx), Some(dy)) = (dx, dy) else {
            return AugSSet::empty();
        };
        let top = dx + dy + 1;

        // index of pair (p, x, y) within join level m = p + q + 1
        let index_of = |m: i64, p: i64, x: usize, y: usize| -> usize {
            let mut off = 0usize;
            for pp in -1..p {
                off += self.size(pp) * other.size(m - 1 - pp);
            }
            off + x * other.size(m - 1 - p) + y
        };

        let mut levels = Vec::new();
        for m in -1..=top {
            let mut size = 0usize;
            for p in -1..=m {
                size += self.size(p) * other.size(m - 1 - p);
            }
            let nfaces = if m < 0 { 0 } else { (m + 1) as usize };
            let mut faces = vec![vec![0usize; size]; nfaces];
            if m >= 0 {
                let mut s = 0usize;
                for p in -1..=m {
                    let q = m - 1 - p;
                    for x in 0..self.size(p) {
                        for y in 0..other.size(q) {
                            for (i, face) in faces.iter_mut().enumerate() {
                                let t = if (i as i64) <= p {
                                    index_of(m - 1, p - 1, self.face(p, i, x), y)
                                } else {
                                    let j = i - (p + 1) as usize;
                                    index_of(m - 1, p, x, other.face(q, j, y))
                                };
                                face[s] = t;
                            }
                            s += 1;
                        }
                    }
                }
            }
            levels.push(Level { size, faces });
        }
        AugSSet::from_levels(levels)
    }

    /// Cone with the apex joined on the left: `Γ₊[0] ⊞ X`.
    pub fn cone_left(&self) -> AugSSet {
        AugSSet::point().join(self)
    }

    /// Cone with the apex joined on the right: `X ⊞ Γ₊[0]`.
    pub fn cone_right(&self) -> AugSSet {
        self.join(&AugSSet::point())
    }
}

// ---------------------------------------------------------------------------
// JSON wire format

#[derive(serde::Serialize, serde::Deserialize)]
struct LevelDto {
    n: i64,
    size: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    faces: Option<Vec<Vec<usize>>>,
}

#[derive(serde::Serialize, serde::Deserialize)]
struct SSetDto {
    kind: String,
    dim: Option<i64>,
    levels: Vec<LevelDto>,
}

impl AugSSet {
    pub fn to_json(&self) -> Result<String> {
        let dto = SSetDto {
            kind: "augsset".into(),
            dim: self.dim(),
            levels: self
                .levels
                .iter()
                .enumerate()
                .map(|(k, l)| LevelDto {
                    n: k as i64 - 1,
                    size: l.size,
                    faces: if k == 0 { None } else { Some(l.faces.clone()) },
                })
                .collect(),
        };
        serde_json::to_string(&dto).map_err(|e| Error::Json(e.to_string()))
    }

    pub fn from_json(s: &str) -> Result<AugSSet> {
        let dto: SSetDto = serde_json::from_str(s).map_err(|e| Error::Json(e.to_string()))?;
        if dto.kind != "augsset" {
            return Err(Error::Json(format!(
                "expected kind \"augsset\", got {:?}",
                dto.kind
            )));
        }
        let mut levels = Vec::new();
        for (k, l) in dto.levels.iter().enumerate() {
            let n = k as i64 - 1;
            if l.n != n {
                return Err(Error::Json(format!(
                    "levels out of order: expected n={n}, found n={}",
                    l.n
                )));
            }
            let faces = match &l.faces {
                Some(f) => f.clone(),
                None if n < 0 => vec![],
                None if l.size == 0 => vec![vec![]; (n + 1) as usize],
                None => {
                    return Err(Error::Json(format!("level {n}: missing face maps")));
                }
            };
            levels.push(Level {
                size: l.size,
                faces,
            });
        }
        let x = AugSSet::from_levels(levels);
        x.validate()?;
        if x.dim() != dto.dim {
            return Err(Error::Json(format!(
                "declared dim {:?} does not match levels (computed {:?})",
                dto.dim,
                x.dim()
            )));
        }
        Ok(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gamma(n: i64) -> AugSSet {
        crate::sscore::subset::SubsetComplex::gamma_complex(n).to_augsset()
    }

    #[test]
    fn basics_validate() {
        AugSSet::empty().validate().unwrap();
        AugSSet::unit().validate().unwrap();
        AugSSet::point().validate().unwrap();
        assert_eq!(AugSSet::empty().dim(), None);
        assert_eq!(AugSSet::unit().dim(), Some(-1));
        assert_eq!(AugSSet::point().dim(), Some(0));
    }

    #[test]
    fn validation_catches_broken_identity() {
        // an edge whose endpoints augment to different (-1)-simplices:
        // d_0 d_0 = d_0 d_1 fails
        let bad = AugSSet {
            levels: vec![
                Level {
                    size: 2,
                    faces: vec![],
                },
                Level {
                    size: 2,
                    faces: vec![vec![0, 1]],
                },
                Level {
                    size: 1,
                    faces: vec![vec![1], vec![0]],
                },
            ],
        };
        assert!(matches!(bad.validate(), Err(Error::Validation(_))));
    }

    #[test]
    fn validation_catches_out_of_range_face() {
        let bad = AugSSet {
            levels: vec![
                Level {
                    size: 1,
                    faces: vec![],
                },
                Level {
                    size: 1,
                    faces: vec![vec![5]],
                },
            ],
        };
        assert!(matches!(bad.validate(), Err(Error::Validation(_))));
    }

    #[test]
    fn join_units() {
        let g2 = gamma(2);
        assert_eq!(AugSSet::unit().join(&g2), g2);
        assert_eq!(g2.join(&AugSSet::unit()), g2);
        assert_eq!(g2.join(&AugSSet::empty()), AugSSet::empty());
    }

    #[test]
    fn join_of_simplices_is_simplex() {
        for n in -1..=2 {
            for m in -1..=2 {
                let j = gamma(n).join(&gamma(m));
                j.validate().unwrap();
                assert!(
                    j.cardinal()
                        .try_eq(&gamma(n + m + 1).cardinal())
                        .unwrap(),
                    "n={n} m={m}"
                );
            }
        }
    }

    #[test]
    fn cone_cardinals() {
        let g1 = gamma(1);
        let c = g1.cone_right();
        c.validate().unwrap();
        assert!(c
            .cardinal()
            .try_eq(&AugSequence::gamma_seq(2).clone())
            .unwrap());
        let c2 = g1.cone_left();
        c2.validate().unwrap();
        assert!(c2.cardinal().try_eq(&c.cardinal()).unwrap());
    }

    #[test]
    fn json_round_trip_is_byte_identical() {
        let g = gamma(2);
        let s = g.to_json().unwrap();
        let g2 = AugSSet::from_json(&s).unwrap();
        let s2 = g2.to_json().unwrap();
        assert_eq!(s, s2);
        assert_eq!(g, g2);
        // empty object serializes with null dim
        let e = AugSSet::empty().to_json().unwrap();
        assert_eq!(e, r#"{"kind":"augsset","dim":null,"levels":[]}"#);
        assert_eq!(AugSSet::from_json(&e).unwrap(), AugSSet::empty());
    }
}
