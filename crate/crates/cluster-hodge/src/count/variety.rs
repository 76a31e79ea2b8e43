use super::isolated::count_isolated;
use super::{CountError, PrimeField};
use crate::hodge::{classify, Classification};
use crate::quiver::{isolated_presentation, louise_decompose, LouiseTree, Seed};

/// Counts the F_p points of the variety under a Louise decomposition by
/// inclusion-exclusion: an open cover U, V with overlap W satisfies
/// #X = #U + #V - #W, and the leaves are isolated presentations.
pub fn count_tree(tree: &LouiseTree, field: &PrimeField) -> Result<u64, CountError> {
    match tree {
        LouiseTree::Leaf(seed) => {
            let pres = isolated_presentation(seed)?;
            count_isolated(&pres, field)
        }
        LouiseTree::Split { u, v, uv, .. } => {
            let cu = count_tree(u, field)?;
            let cv = count_tree(v, field)?;
            let cw = count_tree(uv, field)?;
            cu.checked_add(cv)
                .and_then(|s| s.checked_sub(cw))
                .ok_or(CountError::CountOverflow)
        }
    }
}

/// Counts the F_p points of the cluster variety of a seed.
///
/// The seed is classified first: cyclic rank-3 seeds are replaced by their
/// acyclic mutation representative (point counts are mutation invariants),
/// the singular case gets a direct fibration count, and the remaining
/// supported cases go through the Louise decomposition. Unsupported shapes
/// and non-finite-type seeds are refused.
pub fn count_variety(seed: &Seed, field: &PrimeField) -> Result<u64, CountError> {
    let classified = classify(seed)?;
    match &classified.case {
        Classification::SingularSharedFrozen => Ok(count_singular(field)),
        Classification::NotFiniteType { .. } | Classification::Unsupported { .. } => {
            Err(CountError::Unsupported(format!(
                "no counting scheme for this seed: {}",
                classified.case
            )))
        }
        _ => {
            let tree = louise_decompose(&classified.seed)?;
            count_tree(&tree, field)
        }
    }
}

/// Direct count for the singular threefold x x' = y y' = z + 1 with z
/// invertible, by summing fibres over z: the q - 2 units with z + 1 != 0
/// contribute (q-1)^2 pairs of conics and z = -1 contributes the square of
/// the degenerate conic count 2q - 1.
pub fn count_singular(field: &PrimeField) -> u64 {
    let q = field.order();
    (q - 2) * (q - 1) * (q - 1) + (2 * q - 1) * (2 * q - 1)
}
