use crate::error::{Error, Result};
use crate::graph_core::Graph;
use std::collections::BTreeMap;

pub const DEFAULT_ISO_LIMIT: usize = 2000;

/// Finds a bijection `φ` with `u ~ v ⇔ φ(u) ~ φ(v)`, or proves none exists.
///
/// Colour refinement run jointly on both graphs (so colours are comparable),
/// followed by individualisation and backtracking. Any map returned has been
/// checked edge by edge.
pub fn graph_isomorphic(g: &Graph, h: &Graph, limit: usize) -> Result<Option<Vec<usize>>> {
    let n = g.n();
    if n.max(h.n()) > limit {
        return Err(Error::BudgetExceeded { requested: n.max(h.n()) as u128, budget: limit });
    }
    if n != h.n() || g.num_edges() != h.num_edges() {
        return Ok(None);
    }
    let cg: Vec<u64> = (0..n).map(|v| g.degree(v) as u64).collect();
    let ch: Vec<u64> = (0..n).map(|v| h.degree(v) as u64).collect();
    Ok(search(g, h, cg, ch, n as u64 + 1))
}

fn refine(g: &Graph, h: &Graph, mut cg: Vec<u64>, mut ch: Vec<u64>) -> Option<(Vec<u64>, Vec<u64>)> {
    loop {
        let classes = |c: &[u64]| c.iter().collect::<std::collections::BTreeSet<_>>().len();
        let before = classes(&cg);
        let sig = |gr: &Graph, c: &[u64], v: usize| {
            let mut nb: Vec<u64> = gr.neighbors(v).iter().map(|&u| c[u]).collect();
            nb.sort_unstable();
            (c[v], nb)
        };
        let sg: Vec<_> = (0..g.n()).map(|v| sig(g, &cg, v)).collect();
        let sh: Vec<_> = (0..h.n()).map(|v| sig(h, &ch, v)).collect();
        let mut ids: BTreeMap<&(u64, Vec<u64>), u64> = BTreeMap::new();
        for s in sg.iter().chain(&sh) {
            ids.entry(s).or_insert(0);
        }
        for (i, id) in ids.values_mut().enumerate() {
            *id = i as u64;
        }
        cg = sg.iter().map(|s| ids[s]).collect();
        ch = sh.iter().map(|s| ids[s]).collect();
        let mut hg = cg.clone();
        let mut hh = ch.clone();
        hg.sort_unstable();
        hh.sort_unstable();
        if hg != hh {
            return None;
        }
        if classes(&cg) == before {
            return Some((cg, ch));
        }
    }
}

fn search(g: &Graph, h: &Graph, cg: Vec<u64>, ch: Vec<u64>, fresh: u64) -> Option<Vec<usize>> {
    let (cg, ch) = refine(g, h, cg, ch)?;
    let mut counts: BTreeMap<u64, usize> = BTreeMap::new();
    for &c in &cg {
        *counts.entry(c).or_default() += 1;
    }
    let Some((&target, _)) = counts.iter().filter(|(_, &k)| k > 1).min_by_key(|(_, &k)| k) else {
        let mut by_colour = vec![0; h.n()];
        let pos: BTreeMap<u64, usize> = ch.iter().enumerate().map(|(v, &c)| (c, v)).collect();
        for (v, c) in cg.iter().enumerate() {
            by_colour[v] = pos[c];
        }
        let ok = g.edges().all(|(u, v)| h.adjacent(by_colour[u], by_colour[v]));
        return ok.then_some(by_colour);
    };
    let v = cg.iter().position(|&c| c == target).expect("colour present");
    // Colours after refinement are small ranks; `fresh` stays above them.
    let fresh = fresh.max(g.n() as u64 + h.n() as u64 + 1);
    for w in (0..h.n()).filter(|&w| ch[w] == target) {
        let mut cg2 = cg.clone();
        let mut ch2 = ch.clone();
        cg2[v] = fresh;
        ch2[w] = fresh;
        if let Some(map) = search(g, h, cg2, ch2, fresh + 1) {
            return Some(map);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{hamming, shrikhande, DEFAULT_BUDGET};

    #[test]
    fn relabelled_graph_is_isomorphic() {
        let g = hamming(2, 3, DEFAULT_BUDGET).unwrap();
        let perm = vec![4, 2, 7, 0, 8, 1, 6, 3, 5];
        let h = g.relabel(&perm);
        let map = graph_isomorphic(&g, &h, DEFAULT_ISO_LIMIT).unwrap().unwrap();
        for (u, v) in g.edges() {
            assert!(h.adjacent(map[u], map[v]));
        }
    }

    #[test]
    fn shrikhande_is_not_rook_graph() {
        let s = shrikhande();
        let r = hamming(2, 4, DEFAULT_BUDGET).unwrap();
        assert_eq!(graph_isomorphic(&s, &r, DEFAULT_ISO_LIMIT).unwrap(), None);
    }

    #[test]
    fn cycles_of_different_length() {
        assert_eq!(graph_isomorphic(&Graph::cycle(5), &Graph::cycle(6), 100).unwrap(), None);
        assert!(graph_isomorphic(&Graph::cycle(6), &Graph::cycle(6), 100).unwrap().is_some());
        assert!(graph_isomorphic(&Graph::cycle(6), &Graph::cycle(6), 3).is_err());
    }
}
