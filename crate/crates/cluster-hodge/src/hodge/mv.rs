use std::collections::BTreeMap;

use super::builders::{table_2d, table_one_mutable, table_torus};
use super::kunneth::kunneth;
use super::table::{MixedHodgeTable, TableVariant};
use super::HodgeError;
use crate::quiver::{isolated_presentation, LouiseTree, Seed};

/// Ranks of the restriction map H^k(U) + H^k(V) -> H^k(U cap V) in each
/// degree and weight, the extra input Mayer-Vietoris needs beyond the three
/// tables. Unlisted positions have rank zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RestrictionRankData {
    ranks: BTreeMap<(usize, usize), i64>,
}

impl RestrictionRankData {
    pub fn new() -> Self {
        Self {
            ranks: BTreeMap::new(),
        }
    }

    /// Rank data of a fully surjective restriction: the rank equals the
    /// dimension of H^k(U cap V) everywhere. This is the correct data for
    /// a split at the edge of a seed with two joined mutable vertices.
    pub fn surjective(overlap: &MixedHodgeTable) -> Self {
        let mut ranks = BTreeMap::new();
        for (k, p, h) in overlap.entries() {
            ranks.insert((k, p), h);
        }
        Self { ranks }
    }

    /// Rank data for the top split of an acyclic triangle of mutable
    /// vertices with all pair weights positive: surjective in every degree
    /// and weight except (2, (2,2)), where the image is one-dimensional.
    pub fn three_mutable(overlap: &MixedHodgeTable) -> Self {
        let mut data = Self::surjective(overlap);
        data.set(2, 2, 1);
        data
    }

    pub fn set(&mut self, k: usize, p: usize, rank: i64) {
        if rank == 0 {
            self.ranks.remove(&(k, p));
        } else {
            self.ranks.insert((k, p), rank);
        }
    }

    pub fn rank(&self, k: usize, p: usize) -> i64 {
        *self.ranks.get(&(k, p)).unwrap_or(&0)
    }

    fn rank_signed(&self, k: i64, p: i64) -> i64 {
        if k < 0 || p < 0 {
            return 0;
        }
        self.rank(k as usize, p as usize)
    }
}

impl Default for RestrictionRankData {
    fn default() -> Self {
        Self::new()
    }
}

/// Glues the tables of an open cover X = U cup V along the exact sequence
/// relating them to U cap V:
///
/// h^{k,(p,p)}(X) = ker + coker
///   with ker   = h(U) + h(V) - rank at (k, p)
///   and  coker = h(U cap V) - rank at (k-1, p).
///
/// Fails when a rank exceeds its bounds (the rank can be at most the
/// dimension of either side) or when the glued numbers land outside the
/// admissible table range.
pub fn mayer_vietoris(
    u: &MixedHodgeTable,
    v: &MixedHodgeTable,
    overlap: &MixedHodgeTable,
    ranks: &RestrictionRankData,
) -> Result<MixedHodgeTable, HodgeError> {
    for other in [v, overlap] {
        if other.dim() != u.dim() {
            return Err(HodgeError::DimensionMismatch {
                left: u.dim(),
                right: other.dim(),
            });
        }
    }
    let d = u.dim();
    let mut out = MixedHodgeTable::empty(
        d,
        u.smooth() && v.smooth() && overlap.smooth(),
        TableVariant::Cohomology,
    );
    for k in 0..=(2 * d) {
        for p in 0..=d.min(k) {
            let sides = u.entry(k, p) + v.entry(k, p);
            let through = overlap.entry(k, p);
            let rank = ranks.rank(k, p);
            let bound = sides.min(through);
            if rank < 0 || rank > bound {
                return Err(HodgeError::RankInconsistent { k, p, rank, bound });
            }
            let kernel = sides - rank;
            let cokernel = overlap.entry_signed(k as i64 - 1, p as i64)
                - ranks.rank_signed(k as i64 - 1, p as i64);
            let h = kernel + cokernel;
            if h != 0 {
                out.set(k, p, h)?;
            }
        }
    }
    Ok(out)
}

/// Computes the table of every leaf an isolated seed can take within
/// dimension three: a torus, a surface chart, a one-mutable threefold, or
/// a product of one of these with torus factors coming from exchange
/// equations x x' = 2 that involve no frozen variable.
fn leaf_table(seed: &Seed) -> Result<MixedHodgeTable, HodgeError> {
    let pres = isolated_presentation(seed)?;
    let active: Vec<&crate::quiver::ExchangeEquation> = pres
        .equations
        .iter()
        .filter(|eq| eq.plus.iter().chain(&eq.minus).any(|&e| e > 0))
        .collect();
    let torus_factors = pres.mutable.len() - active.len();
    match active.as_slice() {
        [] => Ok(table_torus(torus_factors + pres.frozen.len())),
        [eq] => {
            let weight = |i: usize| -> Result<i64, HodgeError> {
                let w = eq.plus[i].max(eq.minus[i]);
                i64::try_from(w).map_err(|_| HodgeError::TableUnavailable {
                    case: "leaf".to_string(),
                    reason: format!("frozen weight {w} does not fit in 64 bits"),
                })
            };
            let base = match pres.frozen.len() {
                1 => table_2d(weight(0)?)?,
                2 => table_one_mutable(weight(0)?, weight(1)?)?,
                f => {
                    return Err(HodgeError::TableUnavailable {
                        case: "leaf".to_string(),
                        reason: format!("{f} frozen variables exceed dimension three"),
                    })
                }
            };
            kunneth(&base, &table_torus(torus_factors))
        }
        _ => Err(HodgeError::TableUnavailable {
            case: "leaf".to_string(),
            reason: "two exchange equations share the frozen torus; no closed form applies"
                .to_string(),
        }),
    }
}

/// Chooses the restriction rank data for a split node: the acyclic triangle
/// with all pair weights positive has the non-surjective degree-2 behaviour,
/// every other supported split restricts surjectively.
fn rank_data_for(seed: &Seed, overlap: &MixedHodgeTable) -> RestrictionRankData {
    if seed.n() == 3 && seed.m() == 0 {
        let all_positive = [(0, 1), (0, 2), (1, 2)].iter().all(|&(i, j)| {
            seed.matrix()
                .entry_i64(i, j)
                .map(|w| w != 0)
                .unwrap_or(true)
        });
        if all_positive {
            return RestrictionRankData::three_mutable(overlap);
        }
    }
    RestrictionRankData::surjective(overlap)
}

/// Assembles the table of a Louise decomposition bottom-up: closed forms at
/// the leaves, Mayer-Vietoris with the appropriate rank data at each split.
pub fn assemble_table(tree: &LouiseTree) -> Result<MixedHodgeTable, HodgeError> {
    match tree {
        LouiseTree::Leaf(seed) => leaf_table(seed),
        LouiseTree::Split { seed, u, v, uv, .. } => {
            let tu = assemble_table(u)?;
            let tv = assemble_table(v)?;
            let tuv = assemble_table(uv)?;
            let ranks = rank_data_for(seed, &tuv);
            mayer_vietoris(&tu, &tv, &tuv, &ranks)
        }
    }
}
