//! Downward-closed families of subsets of a finite vertex set: the
//! subcomplexes of a unit simplex, used as concrete inputs throughout.

use crate::error::{Error, Result};
use crate::sscore::augsset::{AugSSet, Level};
use rand::Rng;
use std::collections::{BTreeSet, HashMap};

/// A subcomplex of the unit simplex on vertices `{0, …, ambient}`, stored
/// as a downward-closed family of sorted vertex subsets. The empty subset
/// sits at level -1; a nonempty family always contains it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetComplex {
    pub ambient: i64,
    /// `levels[k]` lists the subsets of size `k` (level `n = k - 1`),
    /// each sorted, the list itself in lexicographic order.
    levels: Vec<Vec<Vec<i64>>>,
}

impl SubsetComplex {
    /// Downward closure of the given generating subsets.
    pub fn from_generators(ambient: i64, generators: &[Vec<i64>]) -> Result<SubsetComplex> {
        if ambient < -1 {
            return Err(Error::Validation(format!(
                "ambient dimension {ambient} below -1"
            )));
        }
        let mut family: BTreeSet<Vec<i64>> = BTreeSet::new();
        for g in generators {
            let mut g = g.clone();
            g.sort_unstable();
            g.dedup();
            for &v in &g {
                if v < 0 || v > ambient {
                    return Err(Error::VertexOutOfRange {
                        vertex: v,
                        ambient,
                    });
                }
            }
            // all subsets of g, empty set included
            let k = g.len();
            for mask in 0u64..(1u64 << k) {
                let sub: Vec<i64> = (0..k).filter(|i| mask >> i & 1 == 1).map(|i| g[i]).collect();
                family.insert(sub);
            }
        }
        let mut levels: Vec<Vec<Vec<i64>>> = Vec::new();
        for s in family {
            let k = s.len();
            while levels.len() <= k {
                levels.push(Vec::new());
            }
            levels[k].push(s);
        }
        for lvl in &mut levels {
            lvl.sort();
        }
        Ok(SubsetComplex { ambient, levels })
    }

    /// The unit simplex `Γ₊[n]`: every subset of `{0, …, n}`.
    pub fn gamma_complex(n: i64) -> SubsetComplex {
        let full: Vec<i64> = (0..=n).collect();
        SubsetComplex::from_generators(n, &[full]).expect("gamma generators are in range")
    }

    /// The boundary `∂Γ₊[n]`: every proper subset. `∂Γ₊[-1]` is the
    /// totally empty complex.
    pub fn boundary_complex(n: i64) -> SubsetComplex {
        let facets: Vec<Vec<i64>> = (0..=n)
            .map(|omit| (0..=n).filter(|&v| v != omit).collect())
            .collect();
        SubsetComplex::from_generators(n.max(-1), &facets).expect("facets are in range")
    }

    /// The hexagon: a 6-cycle of edges inside `Γ₊[5]`.
    pub fn hexagon() -> SubsetComplex {
        let edges: Vec<Vec<i64>> = (0..6).map(|v| vec![v, (v + 1) % 6]).collect();
        SubsetComplex::from_generators(5, &edges).expect("hexagon edges are in range")
    }

    pub fn size(&self, n: i64) -> usize {
        if n < -1 {
            return 0;
        }
        self.levels.get((n + 1) as usize).map_or(0, |l| l.len())
    }

    pub fn dim(&self) -> Option<i64> {
        if self.levels.is_empty() {
            None
        } else {
            Some(self.levels.len() as i64 - 2)
        }
    }

    pub fn simplices(&self, n: i64) -> &[Vec<i64>] {
        if n < -1 {
            return &[];
        }
        self.levels
            .get((n + 1) as usize)
            .map_or(&[], |l| l.as_slice())
    }

    /// Membership test for a sorted subset.
    pub fn contains(&self, subset: &[i64]) -> bool {
        let k = subset.len();
        self.levels
            .get(k)
            .is_some_and(|l| l.binary_search_by(|s| s.as_slice().cmp(subset)).is_ok())
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }

    /// Forgets the vertex labels, producing the abstract augmented
    /// semi-simplicial set with `d_i` deleting the `i`-th vertex.
    pub fn to_augsset(&self) -> AugSSet {
        let mut index: Vec<HashMap<&[i64], usize>> = Vec::new();
        for lvl in &self.levels {
            let mut m = HashMap::new();
            for (i, s) in lvl.iter().enumerate() {
                m.insert(s.as_slice(), i);
            }
            index.push(m);
        }
        let mut out = Vec::new();
        for (k, lvl) in self.levels.iter().enumerate() {
            let n = k as i64 - 1;
            let nfaces = if n < 0 { 0 } else { (n + 1) as usize };
            let mut faces = vec![vec![0usize; lvl.len()]; nfaces];
            for (s, subset) in lvl.iter().enumerate() {
                for (i, face) in faces.iter_mut().enumerate() {
                    let mut sub = subset.clone();
                    sub.remove(i);
                    face[s] = index[k - 1][sub.as_slice()];
                }
            }
            out.push(Level {
                size: lvl.len(),
                faces,
            });
        }
        AugSSet::from_levels(out)
    }

    pub fn cardinal(&self) -> crate::seqmat::AugSequence {
        self.to_augsset().cardinal()
    }
}

/// A random downward-closed subcomplex of `Γ₊[ambient]`, drawn by taking
/// the closure of a few random generator subsets. May be empty.
pub fn random_subcomplex<R: Rng>(rng: &mut R, ambient: i64) -> SubsetComplex {
    let ngen = rng.gen_range(0..=4usize);
    let mut gens = Vec::new();
    for _ in 0..ngen {
        let g: Vec<i64> = (0..=ambient).filter(|_| rng.gen_bool(0.5)).collect();
        gens.push(g);
    }
    SubsetComplex::from_generators(ambient, &gens).expect("random generators are in range")
}

// ---------------------------------------------------------------------------
// JSON wire format for generator files

#[derive(serde::Serialize, serde::Deserialize)]
struct SubcomplexDto {
    kind: String,
    ambient: i64,
    generators: Vec<Vec<i64>>,
}

impl SubsetComplex {
    /// Parses `{"kind":"subcomplex","ambient":5,"generators":[[0,1],…]}`.
    pub fn from_generator_json(s: &str) -> Result<SubsetComplex> {
        let dto: SubcomplexDto =
            serde_json::from_str(s).map_err(|e| Error::Json(e.to_string()))?;
        if dto.kind != "subcomplex" {
            return Err(Error::Json(format!(
                "expected kind \"subcomplex\", got {:?}",
                dto.kind
            )));
        }
        SubsetComplex::from_generators(dto.ambient, &dto.generators)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seqmat::AugSequence;

    #[test]
    fn gamma_cardinals_are_binomial_rows() {
        for n in -1..=6 {
            let g = SubsetComplex::gamma_complex(n);
            assert!(g
                .cardinal()
                .try_eq(&AugSequence::gamma_seq(n))
                .unwrap());
            g.to_augsset().validate().unwrap();
        }
    }

    #[test]
    fn boundary_cardinals() {
        assert!(SubsetComplex::boundary_complex(-1).is_empty());
        for n in 0..=5 {
            let b = SubsetComplex::boundary_complex(n);
            assert!(b
                .cardinal()
                .try_eq(&AugSequence::boundary_seq(n))
                .unwrap());
            b.to_augsset().validate().unwrap();
        }
    }

    #[test]
    fn hexagon_shape() {
        let h = SubsetComplex::hexagon();
        assert!(h.cardinal().try_eq(&AugSequence::from_ints(&[1, 6, 6])).unwrap());
        assert!(h.contains(&[0, 5]));
        assert!(!h.contains(&[0, 2]));
        h.to_augsset().validate().unwrap();
    }

    #[test]
    fn closure_and_membership() {
        let c = SubsetComplex::from_generators(4, &[vec![0, 1, 2], vec![2, 4]]).unwrap();
        assert!(c.contains(&[]));
        assert!(c.contains(&[0, 2]));
        assert!(c.contains(&[2, 4]));
        assert!(!c.contains(&[1, 4]));
        assert_eq!(c.size(-1), 1);
        assert_eq!(c.size(0), 4);
        assert_eq!(c.size(1), 4);
        assert_eq!(c.size(2), 1);
    }

    #[test]
    fn out_of_range_vertex_rejected() {
        let e = SubsetComplex::from_generators(2, &[vec![0, 3]]).unwrap_err();
        assert_eq!(
            e,
            crate::Error::VertexOutOfRange {
                vertex: 3,
                ambient: 2
            }
        );
    }

    #[test]
    fn generator_json_parses() {
        let c = SubsetComplex::from_generator_json(
            r#"{"kind":"subcomplex","ambient":5,"generators":[[0,1],[1,2]]}"#,
        )
        .unwrap();
        assert_eq!(c.size(1), 2);
    }
}
