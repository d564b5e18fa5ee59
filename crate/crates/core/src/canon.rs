//! Canonical labeling of connected graphs on at most 16 vertices.
//!
//! Trees are rooted at their centroid and encoded with AHU parenthesis
//! strings. Unicyclic graphs encode the rooted tree hanging off every cycle
//! vertex and take the least cyclic sequence over all rotations and both
//! orientations. Anything else goes through a small
//! individualization-refinement search with automorphism pruning.
//!
//! Whatever route is taken, the code is the edge set of the canonically
//! relabeled graph, so equal codes always mean isomorphic graphs.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

/// Byte string identifying an isomorphism class: the vertex count followed by
/// the sorted canonically relabeled edges, one byte `(u << 4) | v` per edge.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }

    pub fn from_hex(text: &str) -> Option<Self> {
        if !text.len().is_multiple_of(2) || !text.is_ascii() {
            return None;
        }
        (0..text.len())
            .step_by(2)
            .map(|i| u8::from_str_radix(&text[i..i + 2], 16).ok())
            .collect::<Option<Vec<u8>>>()
            .map(CanonicalCode)
    }

    fn from_labeling(g: &Graph, labeling: &[usize]) -> Self {
        let mut edges: Vec<u8> = g
            .edges()
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (labeling[u].min(labeling[v]), labeling[u].max(labeling[v]));
                ((a as u8) << 4) | b as u8
            })
            .collect();
        edges.sort_unstable();
        let mut bytes = Vec::with_capacity(edges.len() + 1);
        bytes.push(g.n() as u8);
        bytes.extend(edges);
        CanonicalCode(bytes)
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

impl Serialize for CanonicalCode {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_hex())
    }
}

impl<'de> Deserialize<'de> for CanonicalCode {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        CanonicalCode::from_hex(&text)
            .ok_or_else(|| serde::de::Error::custom(format!("bad canonical code {text:?}")))
    }
}

/// A canonical code together with the relabeling that produced it:
/// vertex `v` becomes `labeling[v]`.
#[derive(Clone, Debug)]
pub struct CanonicalForm {
    pub code: CanonicalCode,
    pub labeling: Vec<usize>,
}

impl CanonicalForm {
    fn new(g: &Graph, labeling: Vec<usize>) -> Self {
        CanonicalForm {
            code: CanonicalCode::from_labeling(g, &labeling),
            labeling,
        }
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    check_size(g)?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.is_tree() {
        Ok(tree_form(g))
    } else if g.is_unicyclic() {
        Ok(unicyclic_form(g))
    } else {
        Ok(search_form(g))
    }
}

pub fn canonical_code(g: &Graph) -> Result<CanonicalCode> {
    canonical_form(g).map(|f| f.code)
}

/// `g` relabeled into its canonical form.
pub fn canonical_graph(g: &Graph) -> Result<Graph> {
    canonical_form(g).map(|f| g.relabel(&f.labeling))
}

/// Canonical form through the general search only, skipping the tree and
/// unicyclic shortcuts. Accepts disconnected graphs.
pub fn generic_canonical_form(g: &Graph) -> Result<CanonicalForm> {
    check_size(g)?;
    Ok(search_form(g))
}

fn check_size(g: &Graph) -> Result<()> {
    if g.n() > MAX_VERTICES {
        return Err(Error::TooLarge {
            n: g.n(),
            max: MAX_VERTICES,
        });
    }
    Ok(())
}

/// AHU encodings of rooted subtrees. Vertices flagged in `blocked` are never
/// entered, which lets the same code serve the hanging trees of a cycle.
struct RootedCodes {
    code: Vec<Vec<u8>>,
    kids: Vec<Vec<usize>>,
}

impl RootedCodes {
    fn new(n: usize) -> Self {
        RootedCodes {
            code: vec![Vec::new(); n],
            kids: vec![Vec::new(); n],
        }
    }

    fn encode(&mut self, g: &Graph, v: usize, parent: Option<usize>, blocked: &[bool]) {
        let mut kids: Vec<usize> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| Some(w) != parent && !blocked[w])
            .collect();
        for &w in &kids {
            self.encode(g, w, Some(v), blocked);
        }
        kids.sort_by(|&a, &b| self.code[a].cmp(&self.code[b]));
        let mut code = vec![0u8];
        for &w in &kids {
            code.extend_from_slice(&self.code[w]);
        }
        code.push(1);
        self.code[v] = code;
        self.kids[v] = kids;
    }

    /// Assigns consecutive labels in preorder below `v`, children in code order.
    fn label_preorder(&self, v: usize, next: &mut usize, labeling: &mut [usize]) {
        labeling[v] = *next;
        *next += 1;
        for &w in &self.kids[v] {
            self.label_preorder(w, next, labeling);
        }
    }
}

fn centroids(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut parent = vec![usize::MAX; n];
    let mut order = vec![0];
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut i = 0;
    while i < order.len() {
        let v = order[i];
        i += 1;
        for &w in g.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                parent[w] = v;
                order.push(w);
            }
        }
    }
    let mut size = vec![1usize; n];
    for &v in order.iter().skip(1).rev() {
        size[parent[v]] += size[v];
    }
    (0..n)
        .filter(|&v| {
            let largest_below = g
                .neighbors(v)
                .iter()
                .filter(|&&w| w != parent[v])
                .map(|&w| size[w])
                .max()
                .unwrap_or(0);
            largest_below.max(n - size[v]) * 2 <= n
        })
        .collect()
}

fn tree_form(g: &Graph) -> CanonicalForm {
    let blocked = vec![false; g.n()];
    let best = centroids(g)
        .into_iter()
        .map(|root| {
            let mut codes = RootedCodes::new(g.n());
            codes.encode(g, root, None, &blocked);
            (root, codes)
        })
        .min_by(|a, b| a.1.code[a.0].cmp(&b.1.code[b.0]))
        .expect("every tree has a centroid");
    let (root, codes) = best;
    let mut labeling = vec![0; g.n()];
    codes.label_preorder(root, &mut 0, &mut labeling);
    CanonicalForm::new(g, labeling)
}

fn unicyclic_form(g: &Graph) -> CanonicalForm {
    let cycle = g.unique_cycle().expect("caller checked unicyclicity");
    let on_cycle = g.cycle_mask();
    let mut codes = RootedCodes::new(g.n());
    for &c in &cycle {
        codes.encode(g, c, None, &on_cycle);
    }

    let k = cycle.len();
    let arrangement = |start: usize, forward: bool| -> Vec<usize> {
        (0..k)
            .map(|i| {
                let idx = if forward { start + i } else { start + k - i };
                cycle[idx % k]
            })
            .collect()
    };
    let best = (0..k)
        .flat_map(|start| [arrangement(start, true), arrangement(start, false)])
        .min_by(|a, b| {
            let ka = a.iter().map(|&v| &codes.code[v]);
            let kb = b.iter().map(|&v| &codes.code[v]);
            ka.cmp(kb)
        })
        .expect("cycle is nonempty");

    let mut labeling = vec![0; g.n()];
    for (label, &c) in best.iter().enumerate() {
        labeling[c] = label;
    }
    let mut next = k;
    for &c in &best {
        for &w in &codes.kids[c] {
            codes.label_preorder(w, &mut next, &mut labeling);
        }
    }
    CanonicalForm::new(g, labeling)
}

/// Refines an ordered coloring to the coarsest equitable refinement. Colors
/// are cell ranks; a vertex's new color is the rank of (old color, sorted
/// neighbor colors), so cell order is preserved and the result does not
/// depend on vertex labels.
fn refine(g: &Graph, colors: &mut [u32]) {
    let mut cells = count_distinct(colors);
    loop {
        let signatures: Vec<(u32, Vec<u32>)> = (0..g.n())
            .map(|v| {
                let mut around: Vec<u32> = g.neighbors(v).iter().map(|&w| colors[w]).collect();
                around.sort_unstable();
                (colors[v], around)
            })
            .collect();
        let mut distinct: Vec<&(u32, Vec<u32>)> = signatures.iter().collect();
        distinct.sort();
        distinct.dedup();
        for (v, sig) in signatures.iter().enumerate() {
            colors[v] = distinct.binary_search(&sig).expect("signature present") as u32;
        }
        if distinct.len() == cells {
            return;
        }
        cells = distinct.len();
    }
}

fn count_distinct(colors: &[u32]) -> usize {
    let mut sorted = colors.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    sorted.len()
}

struct Search<'a> {
    g: &'a Graph,
    first: Option<CanonicalForm>,
    best: Option<CanonicalForm>,
    automorphisms: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn visit(&mut self, mut colors: Vec<u32>, prefix: &mut Vec<usize>) {
        refine(self.g, &mut colors);
        let n = self.g.n();
        let mut cell_sizes = vec![0usize; n];
        for &c in &colors {
            cell_sizes[c as usize] += 1;
        }
        let Some(target) = (0..n).find(|&c| cell_sizes[c] > 1) else {
            self.leaf(colors.iter().map(|&c| c as usize).collect());
            return;
        };
        let cell: Vec<usize> = (0..n).filter(|&v| colors[v] as usize == target).collect();
        let mut tried: Vec<usize> = Vec::new();
        for &v in &cell {
            if !tried.is_empty() && self.in_tried_orbit(v, &tried, prefix) {
                continue;
            }
            tried.push(v);
            let individualized = colors
                .iter()
                .enumerate()
                .map(|(w, &c)| 2 * c + u32::from(c as usize == target && w != v))
                .collect();
            prefix.push(v);
            self.visit(individualized, prefix);
            prefix.pop();
        }
    }

    /// Whether `v` shares an orbit with an already explored sibling under
    /// the known automorphisms that fix `prefix` pointwise.
    fn in_tried_orbit(&self, v: usize, tried: &[usize], prefix: &[usize]) -> bool {
        let n = self.g.n();
        let mut root: Vec<usize> = (0..n).collect();
        fn find(root: &mut [usize], mut x: usize) -> usize {
            while root[x] != x {
                root[x] = root[root[x]];
                x = root[x];
            }
            x
        }
        for gamma in &self.automorphisms {
            if prefix.iter().any(|&p| gamma[p] != p) {
                continue;
            }
            for (x, &gx) in gamma.iter().enumerate() {
                let (a, b) = (find(&mut root, x), find(&mut root, gx));
                root[a] = b;
            }
        }
        let rv = find(&mut root, v);
        tried.iter().any(|&t| find(&mut root, t) == rv)
    }

    fn leaf(&mut self, labeling: Vec<usize>) {
        let form = CanonicalForm::new(self.g, labeling);
        for known in [&self.first, &self.best].into_iter().flatten() {
            if known.code == form.code {
                let mut inverse = vec![0; form.labeling.len()];
                for (v, &label) in known.labeling.iter().enumerate() {
                    inverse[label] = v;
                }
                let gamma: Vec<usize> = form.labeling.iter().map(|&label| inverse[label]).collect();
                if gamma.iter().enumerate().any(|(v, &w)| v != w) {
                    self.automorphisms.push(gamma);
                }
                return;
            }
        }
        if self.first.is_none() {
            self.first = Some(form.clone());
        }
        if self.best.as_ref().is_none_or(|b| form.code < b.code) {
            self.best = Some(form);
        }
    }
}

fn search_form(g: &Graph) -> CanonicalForm {
    let mut search = Search {
        g,
        first: None,
        best: None,
        automorphisms: Vec::new(),
    };
    search.visit(vec![0; g.n()], &mut Vec::new());
    search.best.expect("the search reaches at least one leaf")
}
