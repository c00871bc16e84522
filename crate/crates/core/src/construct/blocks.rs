use std::collections::{HashMap, VecDeque};

use super::glue::{glue_at_vertex, Side};
use super::{checked, ConstructError};
use crate::cover::{DiPath, PathCover};
use crate::graph::{blocks, BlockDecomposition, Graph, VertexId};
use crate::solver::{complete_graph_cover, Budget};

fn clique_side(k: usize) -> Result<Side, ConstructError> {
    match k {
        3 => Ok(Side::Triangle),
        5 => Ok(Side::K5),
        _ => {
            let cover = complete_graph_cover(k, Budget::default())
                .map_err(|e| ConstructError::Completion(e.to_string()))?;
            Ok(Side::covered(Graph::complete(k), cover))
        }
    }
}

/// Cover of a graph whose blocks are all cliques, obtained by gluing clique
/// covers (or the `K3`/`K5` surgeries) along the block-cut tree.
pub fn block_graph_cover(g: &Graph) -> Result<PathCover, ConstructError> {
    let mut paths = Vec::new();
    for comp in g.components() {
        let sub = g.induced(&comp);
        let local = component_cover(&sub)?;
        paths.extend(local.relabel(&comp).into_paths());
    }
    checked(g, PathCover::new(paths))
}

fn component_cover(g: &Graph) -> Result<PathCover, ConstructError> {
    let d = blocks(g);
    for (b, e) in d.blocks.iter().zip(&d.block_edges) {
        if e.len() != b.len() * (b.len() - 1) / 2 {
            return Err(ConstructError::Domain(format!(
                "block {b:?} is not a clique"
            )));
        }
    }
    if d.blocks.len() == 1 {
        let k = d.blocks[0].len();
        return match k {
            1 => Ok(PathCover::new(vec![DiPath::single(0)])),
            3 | 5 => Err(ConstructError::NoCover(format!("K{k}"))),
            _ => match clique_side(k)? {
                Side::Covered { cover, .. } => Ok(cover),
                _ => unreachable!(),
            },
        };
    }
    let sides = d
        .blocks
        .iter()
        .map(|b| clique_side(b.len()))
        .collect::<Result<Vec<_>, _>>()?;
    fold_blocks(&d, sides)
}

/// Glues one side per block along the block-cut tree of a connected graph
/// with at least two blocks. Side `i` is labelled by the sorted vertices of
/// block `i`; the result is in the labels of the whole graph.
pub(crate) fn fold_blocks(
    d: &BlockDecomposition,
    sides: Vec<Side>,
) -> Result<PathCover, ConstructError> {
    assert_eq!(d.blocks.len(), sides.len());
    let mut sides: Vec<Option<Side>> = sides.into_iter().map(Some).collect();
    let root = sides
        .iter()
        .position(|s| matches!(s, Some(Side::Covered { .. })))
        .unwrap_or(0);
    let mut side = sides[root].take().expect("root side");
    let mut glob: Vec<VertexId> = d.blocks[root].clone();
    let mut local_of: HashMap<VertexId, usize> =
        glob.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut done = vec![false; d.blocks.len()];
    done[root] = true;
    let mut queue = VecDeque::from([root]);
    while let Some(b) = queue.pop_front() {
        for &(bi, cut) in &d.tree {
            if bi != b {
                continue;
            }
            for next in d.blocks_containing(cut).collect::<Vec<_>>() {
                if done[next] {
                    continue;
                }
                done[next] = true;
                queue.push_back(next);
                let verts = &d.blocks[next];
                let v2 = verts.binary_search(&cut).unwrap();
                let other = sides[next].take().expect("each block glued once");
                let r = glue_at_vertex(&side, local_of[&cut], &other, v2)?;
                glob.resize(r.graph.order(), usize::MAX);
                for (i, &at) in r.side2_map.iter().enumerate() {
                    if i != v2 {
                        glob[at] = verts[i];
                        local_of.insert(verts[i], at);
                    }
                }
                side = Side::covered(r.graph, r.cover);
            }
        }
    }
    match side {
        Side::Covered { cover, .. } => Ok(cover.relabel(&glob)),
        _ => Err(ConstructError::Domain(
            "a single block cannot be glued".into(),
        )),
    }
}
