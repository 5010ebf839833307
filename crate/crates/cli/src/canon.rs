//! Canonical labelling by partition refinement and exhaustive
//! individualisation. Meant for the small graphs of the census.

use comblab_core::Graph;

/// Largest vertex count whose upper triangle fits in the `u64` code.
pub const CANON_CAP: usize = 11;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Canon {
    /// Upper-triangle adjacency bits under the canonical order, most
    /// significant first.
    pub code: u64,
    /// `order[i]` is the vertex given canonical label `i`.
    pub order: Vec<usize>,
}

fn code_of(g: &Graph, order: &[usize]) -> u64 {
    let mut code = 0u64;
    for i in 0..order.len() {
        for j in i + 1..order.len() {
            code = code << 1 | g.adjacent(order[i], order[j]) as u64;
        }
    }
    code
}

/// Splits cells by neighbour counts into every cell until stable. Cells are
/// ordered by `(old position, signature)`, so the result does not depend on
/// vertex names.
fn refine(g: &Graph, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    loop {
        let mut owner = vec![0usize; g.n()];
        for (i, c) in cells.iter().enumerate() {
            for &v in c {
                owner[v] = i;
            }
        }
        let mut next = Vec::with_capacity(cells.len());
        for c in &cells {
            if c.len() == 1 {
                next.push(c.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<usize>, usize)> = c
                .iter()
                .map(|&v| {
                    let mut sig = vec![0usize; cells.len()];
                    for u in g.neighbors(v).iter() {
                        sig[owner[u]] += 1;
                    }
                    (sig, v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|x| x.1).collect());
                    start = i;
                }
            }
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

fn search(g: &Graph, cells: Vec<Vec<usize>>, best: &mut Option<Canon>) {
    let cells = refine(g, cells);
    let Some(pos) = cells.iter().position(|c| c.len() > 1) else {
        let order: Vec<usize> = cells.into_iter().map(|c| c[0]).collect();
        let code = code_of(g, &order);
        if best.as_ref().is_none_or(|b| code > b.code) {
            *best = Some(Canon { code, order });
        }
        return;
    };
    for &v in &cells[pos] {
        let mut split = cells[..pos].to_vec();
        split.push(vec![v]);
        split.push(cells[pos].iter().copied().filter(|&u| u != v).collect());
        split.extend_from_slice(&cells[pos + 1..]);
        search(g, split, best);
    }
}

/// Canonical form respecting a vertex colouring: two coloured graphs get
/// the same code iff some colour-preserving isomorphism maps one to the other.
pub fn canonical_coloured(g: &Graph, colours: &[u32]) -> Canon {
    assert!(g.n() <= CANON_CAP, "canonical labelling supports at most {CANON_CAP} vertices");
    assert_eq!(colours.len(), g.n());
    let mut distinct: Vec<u32> = colours.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    let cells: Vec<Vec<usize>> = distinct
        .iter()
        .map(|&c| (0..g.n()).filter(|&v| colours[v] == c).collect())
        .collect();
    let mut best = None;
    search(g, cells, &mut best);
    best.unwrap_or(Canon {
        code: 0,
        order: Vec::new(),
    })
}

pub fn canonical_form(g: &Graph) -> Canon {
    canonical_coloured(g, &vec![0; g.n()])
}

/// The graph relabelled into canonical order.
pub fn canonical_graph(g: &Graph) -> Graph {
    let canon = canonical_form(g);
    let mut perm = vec![0; g.n()];
    for (label, &v) in canon.order.iter().enumerate() {
        perm[v] = label;
    }
    g.relabel(&perm)
}

pub fn isomorphic(g: &Graph, h: &Graph) -> bool {
    g.n() == h.n() && g.edge_count() == h.edge_count() && canonical_form(g).code == canonical_form(h).code
}
