use super::{QuiverError, QuiverGraph, Seed};

/// A decomposition tree witnessing that a seed is Louise.
///
/// A leaf is a seed whose mutable part has no edges (an isolated seed).
/// A split records a separating edge (i, j) of the mutable part together
/// with the decompositions of the three subvarieties obtained by freezing
/// i, freezing j, and freezing both; the first two cover the variety and
/// the third is their intersection.
#[derive(Debug, Clone)]
pub enum LouiseTree {
    Leaf(Seed),
    Split {
        seed: Seed,
        edge: (usize, usize),
        u: Box<LouiseTree>,
        v: Box<LouiseTree>,
        uv: Box<LouiseTree>,
    },
}

impl LouiseTree {
    /// The seed at this node.
    pub fn seed(&self) -> &Seed {
        match self {
            LouiseTree::Leaf(s) => s,
            LouiseTree::Split { seed, .. } => seed,
        }
    }

    /// Number of leaves in the tree.
    pub fn leaf_count(&self) -> usize {
        match self {
            LouiseTree::Leaf(_) => 1,
            LouiseTree::Split { u, v, uv, .. } => {
                u.leaf_count() + v.leaf_count() + uv.leaf_count()
            }
        }
    }
}

/// Decomposes a seed along separating edges until every leaf is isolated.
///
/// At each node with mutable edges the lexicographically smallest separating
/// edge is chosen; a node with mutable edges but no separating edge makes
/// the whole decomposition fail with [`QuiverError::NotLouise`].
pub fn louise_decompose(seed: &Seed) -> Result<LouiseTree, QuiverError> {
    louise_decompose_with(seed, &|_| 0)
}

/// Like [`louise_decompose`] but with a caller-supplied choice of
/// separating edge: `pick` receives the sorted candidate list (always
/// nonempty) and returns an index into it. Any choice yields the same
/// point counts and assembled tables; exposing the choice lets tests
/// confirm that.
pub fn louise_decompose_with(
    seed: &Seed,
    pick: &dyn Fn(&[(usize, usize)]) -> usize,
) -> Result<LouiseTree, QuiverError> {
    let graph = QuiverGraph::from_matrix(seed.matrix());
    if graph.mutable_edges().is_empty() {
        return Ok(LouiseTree::Leaf(seed.clone()));
    }
    let candidates = graph.separating_edges();
    if candidates.is_empty() {
        return Err(QuiverError::NotLouise);
    }
    let choice = pick(&candidates);
    let edge = candidates[choice.min(candidates.len() - 1)];
    let (i, j) = edge;
    let u = louise_decompose_with(&seed.freeze(&[i])?, pick)?;
    let v = louise_decompose_with(&seed.freeze(&[j])?, pick)?;
    let uv = louise_decompose_with(&seed.freeze(&[i, j])?, pick)?;
    Ok(LouiseTree::Split {
        seed: seed.clone(),
        edge,
        u: Box::new(u),
        v: Box::new(v),
        uv: Box::new(uv),
    })
}
