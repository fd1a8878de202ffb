//! Isomorphism of four-colour and equipped graphs, decided on their simple
//! graph reductions.

pub mod backend;
pub mod oracle;
pub mod reduce;
pub mod reduce_equipped;
pub mod simple;

pub use backend::{IsoBackend, IsoCertificate, RefinementBackend};
pub use oracle::{
    direct_equipped_map, direct_four_colour_map, direct_iso_equipped, direct_iso_four_colour, for_each_iso,
    is_four_colour_isomorphism, OracleBudget,
};
pub use reduce::{restore_four_colour, size_bound, to_simple_four_colour};
pub use reduce_equipped::{restore_equipped, to_simple_equipped, to_simple_equipped_with_layout, EquippedLayout};
pub use simple::{Multigraph, SimpleGraph};

use crate::error::Result;
use crate::model::{EquippedGraph, FourColourGraph};

pub fn simple_iso(sg1: &SimpleGraph, sg2: &SimpleGraph) -> Option<IsoCertificate> {
    RefinementBackend.find(sg1, sg2)
}

pub fn four_colour_iso(g1: &FourColourGraph, g2: &FourColourGraph) -> Result<bool> {
    Ok(four_colour_iso_certificate(g1, g2)?.is_some())
}

/// The certificate maps Γ*_M(g1) onto Γ*_M(g2); its first
/// `g1.vertex_count()` entries are a vertex map of the graphs themselves.
pub fn four_colour_iso_certificate(g1: &FourColourGraph, g2: &FourColourGraph) -> Result<Option<IsoCertificate>> {
    four_colour_iso_with(&RefinementBackend, g1, g2)
}

pub fn four_colour_iso_with(
    backend: &dyn IsoBackend,
    g1: &FourColourGraph,
    g2: &FourColourGraph,
) -> Result<Option<IsoCertificate>> {
    let (s1, s2) = (to_simple_four_colour(g1)?, to_simple_four_colour(g2)?);
    Ok(backend.find(&s1, &s2))
}

pub fn equipped_iso(u1: &EquippedGraph, u2: &EquippedGraph) -> Result<bool> {
    Ok(equipped_iso_certificate(u1, u2)?.is_some())
}

pub fn equipped_iso_certificate(u1: &EquippedGraph, u2: &EquippedGraph) -> Result<Option<IsoCertificate>> {
    equipped_iso_with(&RefinementBackend, u1, u2)
}

pub fn equipped_iso_with(
    backend: &dyn IsoBackend,
    u1: &EquippedGraph,
    u2: &EquippedGraph,
) -> Result<Option<IsoCertificate>> {
    let (s1, s2) = (to_simple_equipped(u1)?, to_simple_equipped(u2)?);
    Ok(backend.find(&s1, &s2))
}

/// Vertex map `g1 -> g2` read off a certificate of the reductions.
pub fn four_colour_vertex_map(cert: &IsoCertificate, g1: &FourColourGraph) -> Vec<usize> {
    cert.mapping[..g1.vertex_count()].to_vec()
}

/// Vertex map `u1 -> u2` read off a certificate of the reductions. An
/// M-vertex goes to the M-vertex whose four-colour block receives its
/// vertices.
pub fn equipped_vertex_map(cert: &IsoCertificate, l1: &EquippedLayout, l2: &EquippedLayout) -> Vec<usize> {
    let mut owner = vec![usize::MAX; l2.originals];
    for (v, x) in l2.vertex.iter().enumerate() {
        if let Some(x) = *x {
            owner[x] = v;
        }
    }
    for (v, off) in l2.m_offset.iter().enumerate() {
        if let Some(off) = *off {
            let end = l2
                .m_offset
                .iter()
                .flatten()
                .filter(|&&o| o > off)
                .min()
                .copied()
                .unwrap_or(l2.originals);
            owner[off..end].fill(v);
        }
    }
    (0..l1.vertex.len())
        .map(|v| {
            let x = l1.vertex[v].or(l1.m_offset[v]).expect("every vertex is placed");
            owner[cert.mapping[x]]
        })
        .collect()
}
