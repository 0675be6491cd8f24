//! Finite sets of characters of Z_p, viewed as diagonal representations,
//! and the partitions their reduction chains induce.
//!
//! Indices are 0-based throughout.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::Serialize;

use crate::algebra::generated_subalgebra;
use crate::arith::{MatFp, MatRat, PRational, Prime};
use crate::error::{Error, Result};
use crate::lattice::{algebra_closure, reduced_image, saturation_step};

/// Sorted blocks of sorted indices; blocks ordered by their least element.
pub type Partition = Vec<Vec<usize>>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterSet {
    p: Prime,
    chars: Vec<PRational>,
}

impl CharacterSet {
    /// Every character must lie in `1 + pZ_(p)`.
    pub fn new(p: Prime, chars: Vec<PRational>) -> Result<Self> {
        if chars.is_empty() {
            return Err(Error::InvalidInput("empty character set".into()));
        }
        for (index, a) in chars.iter().enumerate() {
            if !(a - &PRational::one()).val_p(p).at_least(1) {
                return Err(Error::NotInDisc {
                    index,
                    value: a.to_string(),
                });
            }
        }
        Ok(CharacterSet { p, chars })
    }

    pub fn p(&self) -> Prime {
        self.p
    }

    pub fn chars(&self) -> &[PRational] {
        &self.chars
    }

    pub fn len(&self) -> usize {
        self.chars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chars.is_empty()
    }

    fn generator(&self) -> MatRat {
        MatRat::diag(self.chars.iter().cloned())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PartitionLevels {
    pub levels: Vec<Partition>,
    /// First level whose lattice is a fixpoint of the saturation step.
    pub stabilized_at: usize,
}

fn group<K: Ord>(m: usize, key: impl Fn(usize) -> K) -> Partition {
    let mut blocks: BTreeMap<K, Vec<usize>> = BTreeMap::new();
    for j in 0..m {
        blocks.entry(key(j)).or_default().push(j);
    }
    let mut out: Partition = blocks.into_values().collect();
    out.sort();
    out
}

/// `j ~ j'` iff every element of the span has equal `(j, j)` and `(j', j')` entries.
fn diagonal_partition(span: &[MatFp], m: usize) -> Partition {
    group(m, |j| span.iter().map(|b| b.get(j, j)).collect::<Vec<_>>())
}

/// The level-`i` partitions for `i = 0..=max_level`, read from the algebra
/// generated by the reduction `alpha_i` of the `i`-th lattice.
pub fn cluster(cs: &CharacterSet, max_level: usize) -> Result<PartitionLevels> {
    let p = cs.p;
    let m = cs.len();
    let mut lattice = algebra_closure(p, m, &[cs.generator()])?;
    let mut stabilized_at = None;
    let mut levels = Vec::with_capacity(max_level + 1);
    for i in 0..=max_level {
        let alpha = reduced_image(&lattice);
        let alg = generated_subalgebra(p, &alpha, m)?;
        let span = alg.matrix_model().expect("generated algebras carry their matrices");
        levels.push(diagonal_partition(span, m));
        if stabilized_at.is_none() {
            let next = saturation_step(&lattice);
            if next == lattice {
                stabilized_at = Some(i);
            } else {
                lattice = next;
            }
        }
    }
    // keep stepping past max_level only to report where the chain settles
    let stabilized_at = match stabilized_at {
        Some(s) => s,
        None => {
            let mut s = max_level + 1;
            loop {
                let next = saturation_step(&lattice);
                if next == lattice {
                    break s;
                }
                lattice = next;
                s += 1;
            }
        }
    };
    Ok(PartitionLevels {
        levels,
        stabilized_at,
    })
}

/// Congruence classes modulo `p^{level+1}`.
pub fn predicted(cs: &CharacterSet, level: usize) -> Partition {
    let modulus = BigInt::from(cs.p.get()).pow(level as u32 + 1);
    group(cs.len(), |j| cs.chars[j].residue_mod(&modulus))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LevelComparison {
    pub level: usize,
    pub cluster: Partition,
    pub predicted: Partition,
    pub agree: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClusterComparison {
    pub levels: Vec<LevelComparison>,
    pub stabilized_at: usize,
    pub all_agree: bool,
}

/// [`cluster`] against [`predicted`] at every level up to `max_level`.
pub fn compare(cs: &CharacterSet, max_level: usize) -> Result<ClusterComparison> {
    let computed = cluster(cs, max_level)?;
    let levels: Vec<LevelComparison> = computed
        .levels
        .into_iter()
        .enumerate()
        .map(|(level, cluster)| {
            let predicted = predicted(cs, level);
            let agree = cluster == predicted;
            LevelComparison {
                level,
                cluster,
                predicted,
                agree,
            }
        })
        .collect();
    let all_agree = levels.iter().all(|l| l.agree);
    Ok(ClusterComparison {
        levels,
        stabilized_at: computed.stabilized_at,
        all_agree,
    })
}

/// Every block of `fine` lies inside a block of `coarse`.
pub fn refines(fine: &Partition, coarse: &Partition) -> bool {
    fine.iter().all(|b| {
        coarse
            .iter()
            .any(|c| b.iter().all(|j| c.contains(j)))
    })
}
