//! Exact-cover backtracking shared by full and restricted matching enumeration.

/// All subsets of `edges` covering every node in `0..num_nodes` exactly once.
///
/// `edges[e]` lists the nodes of edge `e`; `choices[x]` lists the edges at node
/// `x` in the order they should be tried. Nodes are processed in increasing
/// order, so the output order is canonical. Each cover is returned as a sorted
/// list of edge indices.
pub fn exact_covers(
    num_nodes: usize,
    edges: &[Vec<usize>],
    choices: &[Vec<usize>],
) -> Vec<Vec<usize>> {
    let mut covered = vec![false; num_nodes];
    let mut chosen = Vec::new();
    let mut out = Vec::new();
    search(0, edges, choices, &mut covered, &mut chosen, &mut out);
    out
}

fn search(
    from: usize,
    edges: &[Vec<usize>],
    choices: &[Vec<usize>],
    covered: &mut [bool],
    chosen: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    let Some(x) = (from..covered.len()).find(|&x| !covered[x]) else {
        let mut cover = chosen.clone();
        cover.sort_unstable();
        out.push(cover);
        return;
    };
    for &e in &choices[x] {
        if edges[e].iter().any(|&y| covered[y]) {
            continue;
        }
        for &y in &edges[e] {
            covered[y] = true;
        }
        chosen.push(e);
        search(x + 1, edges, choices, covered, chosen, out);
        chosen.pop();
        for &y in &edges[e] {
            covered[y] = false;
        }
    }
}
